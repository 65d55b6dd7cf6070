#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include <conlab/conlab.hpp>

#include "support.hpp"

using namespace conlab;
using testsupport::random_connected_graph;
using testsupport::rel_err;

namespace {
const double kPi = std::acos(-1.0);
}

TEST_CASE("classification on closed-form families") {
  const auto [conv_p4, alpha_p4] =
      classify_convergent(path_graph(4).coupling_matrix());
  CHECK(conv_p4);
  CHECK(rel_err(alpha_p4, 2.0 - std::sqrt(2.0)) <= 1e-12);

  const auto [conv_k7, alpha_k7] =
      classify_convergent(complete_graph(7).coupling_matrix());
  CHECK(conv_k7);
  CHECK(rel_err(alpha_k7, 7.0) <= 1e-12);

  OrientedNetwork split(4, {{0, 1, 1.0}, {2, 3, 1.0}}, false);
  const auto [conv_split, alpha_split] =
      classify_convergent(split.coupling_matrix());
  CHECK_FALSE(conv_split);
  CHECK(std::abs(alpha_split) <= 1e-12);
}

TEST_CASE("the demo coupling is convergent but not normal") {
  const Eigen::MatrixXd d = noncooperative_demo_matrix();
  const auto [convergent, alpha] = classify_convergent(d);
  CHECK(convergent);
  CHECK(alpha == doctest::Approx(0.026007181).epsilon(1e-6));
  const Eigen::MatrixXd comm =
      d * d.transpose() - d.transpose() * d;
  CHECK(comm.norm() > 1e-3 * d.norm() * d.norm());
}

TEST_CASE("alpha and rho closed forms") {
  for (int n : {3, 10, 41}) {
    const auto [alpha_p, rho_p] = alpha_rho(path_graph(n).coupling_matrix());
    CHECK(rel_err(alpha_p, 4.0 * std::pow(std::sin(kPi / (2.0 * n)), 2)) <=
          1e-10);
    CHECK(rel_err(rho_p, (n * n - 1.0) / 6.0) <= 1e-10);

    const auto [alpha_k, rho_k] =
        alpha_rho(complete_graph(n).coupling_matrix());
    CHECK(rel_err(alpha_k, double(n)) <= 1e-12);
    CHECK(rel_err(rho_k, 1.0 - 1.0 / n) <= 1e-12);
  }
  // Plain cycle: alpha = 2 - 2 cos(2 pi / n).
  const double alpha_c =
      alpha_rho(cycle_power_graph(12, 2).coupling_matrix()).first;
  CHECK(rel_err(alpha_c, 2.0 - 2.0 * std::cos(2.0 * kPi / 12.0)) <= 1e-12);
}

TEST_CASE("alpha_rho rejects a repeated zero eigenvalue") {
  OrientedNetwork split(4, {{0, 1, 1.0}, {2, 3, 1.0}}, false);
  CHECK_THROWS_AS(alpha_rho(split.coupling_matrix()), MultipleZeroEVs);
}

TEST_CASE("undirected classification agrees with the spectral test") {
  RandomStream rs(8);
  int negatives = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 3 + static_cast<int>(rs.uniform_below(8));
    OrientedNetwork base =
        random_connected_graph(rs, n, static_cast<int>(rs.uniform_below(5)));
    // Mixed-sign conductances probe the indefinite cases.
    std::vector<Edge> edges = base.edges();
    for (Edge& e : edges) {
      e.conductance = rs.uniform01() < 0.25 ? -rs.uniform01() : rs.uniform01();
    }
    const OrientedNetwork net(n, edges, false);
    const bool by_cycles = classify_undirected(spanning_tree_decomposition(net));
    const bool by_spectrum = classify_convergent(net.coupling_matrix()).first;
    REQUIRE(by_cycles == by_spectrum);
    negatives += !by_spectrum;
  }
  CHECK(negatives > 10);
}

TEST_CASE("kappa of a tree counts its edges") {
  for (int n : {2, 5, 12}) {
    CHECK(kappa(spanning_tree_decomposition(path_graph(n))) ==
          doctest::Approx(n - 1.0).epsilon(1e-12));
    CHECK(kappa(spanning_tree_decomposition(star_graph(n))) ==
          doctest::Approx(n - 1.0).epsilon(1e-12));
  }
}

TEST_CASE("kappa is invariant under edge reorientation") {
  RandomStream rs(16);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 4 + static_cast<int>(rs.uniform_below(8));
    const OrientedNetwork net =
        random_connected_graph(rs, n, 1 + static_cast<int>(rs.uniform_below(5)));
    const double reference = kappa(spanning_tree_decomposition(net));
    // kappa reads only the underlying undirected structure, so flipping
    // stored orientations must not move it.
    std::vector<Edge> flipped = net.edges();
    for (std::size_t e = 0; e < flipped.size(); ++e) {
      if (rs.uniform01() < 0.5) std::swap(flipped[e].tail, flipped[e].head);
    }
    const OrientedNetwork net2(n, flipped, false);
    CHECK(std::abs(kappa(spanning_tree_decomposition(net2)) - reference) <=
          1e-10);
  }
}

TEST_CASE("kappa matches the disjoint-cycle closed form") {
  // Chain of vertex-disjoint cycles of chosen lengths.
  auto cactus = [](const std::vector<int>& lengths) {
    std::vector<Edge> edges;
    int base = 0;
    for (int len : lengths) {
      for (int i = 0; i < len - 1; ++i) {
        edges.push_back({base + i, base + i + 1, 1.0});
      }
      edges.push_back({base, base + len - 1, 1.0});
      base += len - 1;
    }
    return OrientedNetwork(base + 1, edges, false);
  };
  for (const auto& lengths :
       std::vector<std::vector<int>>{{3}, {4}, {3, 3}, {3, 4, 5}, {6, 3, 6}}) {
    const OrientedNetwork net = cactus(lengths);
    const TreeCycleDecomposition dec = spanning_tree_decomposition(net);
    REQUIRE(dec.c == static_cast<int>(lengths.size()));
    double expected = dec.n - 1.0;
    for (int len : lengths) expected -= (len - 1.0) / len;
    CHECK(std::abs(kappa(dec) - expected) <= 1e-10);
  }
}

TEST_CASE("bounds bracket the exact measures") {
  RandomStream rs(64);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 3 + static_cast<int>(rs.uniform_below(10));
    const OrientedNetwork net =
        random_connected_graph(rs, n, static_cast<int>(rs.uniform_below(7)));
    const TreeCycleDecomposition dec = spanning_tree_decomposition(net);
    const StabilityBounds bounds = stability_bounds(net, dec);
    const auto [alpha, rho] = alpha_rho(net.coupling_matrix());
    const double k = kappa(dec);
    REQUIRE(alpha >= bounds.alpha_lower - 1e-10);
    REQUIRE(rho <= bounds.rho_upper + 1e-10);
    REQUIRE(k >= bounds.kappa_lower - 1e-10);
    REQUIRE(k <= bounds.kappa_upper + 1e-10);
  }
}

TEST_CASE("expander entries appear only for regular unit-conductance graphs") {
  const SpectralReport cp = analyze_network(cycle_power_graph(20, 4));
  REQUIRE(cp.bounds.has_value());
  REQUIRE(cp.bounds->alon_boppana.has_value());
  CHECK(*cp.bounds->alon_boppana ==
        doctest::Approx(4.0 - 2.0 * std::sqrt(3.0)).epsilon(1e-12));
  REQUIRE(cp.bounds->diameter_bound.has_value());
  CHECK(*cp.bounds->diameter_bound > 0.0);

  const SpectralReport pr = analyze_network(path_graph(9));
  REQUIRE(pr.bounds.has_value());
  CHECK_FALSE(pr.bounds->alon_boppana.has_value());
}

TEST_CASE("dissipativity margin equals alpha for symmetric couplings") {
  const Eigen::MatrixXd d = path_graph(8).coupling_matrix();
  const Eigen::MatrixXd d_hat = reduce(d, default_reduction(8)).D_hat;
  const double margin = dissipativity_margin(d_hat);
  CHECK(rel_err(margin, alpha_rho(d).first) <= 1e-10);
}

TEST_CASE("time average of switching margins interpolates the segments") {
  const Eigen::MatrixXd d1 = complete_graph(3).coupling_matrix();
  const Eigen::MatrixXd d2 = -0.5 * d1;
  CouplingSchedule sch = CouplingSchedule::switching(d1, d2, 1.0);
  // Segment extremes are -3 and +1.5, so the running average tends to -0.75.
  const double avg = asymptotic_dissipativity_estimate(sch, 200.0, 1e-2);
  CHECK(avg == doctest::Approx(-0.75).epsilon(0.02));
}

TEST_CASE("full report on a weighted directed network omits graph measures") {
  const SpectralReport rep = analyze_network(noncooperative_demo_network());
  CHECK(rep.convergent);
  CHECK_FALSE(rep.rho.has_value());
  CHECK_FALSE(rep.kappa.has_value());
  CHECK_FALSE(rep.bounds.has_value());
  CHECK(rep.eigenvalues.size() == 5);
  CHECK(rep.margin < 0.0);
}
