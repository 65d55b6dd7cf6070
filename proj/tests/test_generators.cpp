#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <utility>
#include <vector>

#include <conlab/conlab.hpp>

#include "support.hpp"

using namespace conlab;
using testsupport::rel_err;

namespace {
const double kPi = std::acos(-1.0);
}

TEST_CASE("deterministic family shapes") {
  CHECK(path_graph(7).edge_count() == 6);
  CHECK(complete_graph(7).edge_count() == 21);
  CHECK(star_graph(7).edge_count() == 6);
  CHECK(cycle_power_graph(10, 4).edge_count() == 20);
  const OrientedNetwork star = star_graph(5);
  for (const Edge& e : star.edges()) {
    CHECK(e.tail == 0);
  }
  CHECK_FALSE(path_graph(3).directed());
  CHECK(path_graph(3).unit_conductances());
}

TEST_CASE("family constructors validate their parameters") {
  CHECK_THROWS_AS(path_graph(1), InvalidArgument);
  CHECK_THROWS_AS(complete_graph(0), InvalidArgument);
  CHECK_THROWS_AS(star_graph(1), InvalidArgument);
  CHECK_THROWS_AS(cycle_power_graph(2, 2), InvalidArgument);
  CHECK_THROWS_AS(cycle_power_graph(8, 3), InvalidArgument);
  CHECK_THROWS_AS(cycle_power_graph(8, 8), InvalidArgument);
  CHECK_THROWS_AS(random_bipartite_permutation(1, 2, 0), InvalidArgument);
  CHECK_THROWS_AS(random_bipartite_permutation(4, 0, 0), InvalidArgument);
}

TEST_CASE("cycle power spectrum matches the circulant closed form") {
  for (int n : {9, 16, 30}) {
    for (int d : {2, 4, 6}) {
      if (d >= n) continue;
      const Eigen::MatrixXd l = -cycle_power_graph(n, d).coupling_matrix();
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
          l, Eigen::EigenvaluesOnly);
      // Circulant eigenvalues sum 2(1 - cos(2 pi j k / n)) over neighbors.
      std::vector<double> expected;
      for (int j = 0; j < n; ++j) {
        double lam = 0.0;
        for (int k = 1; k <= d / 2; ++k) {
          lam += 2.0 - 2.0 * std::cos(2.0 * kPi * j * k / n);
        }
        expected.push_back(lam);
      }
      std::sort(expected.begin(), expected.end());
      for (int j = 0; j < n; ++j) {
        REQUIRE(std::abs(es.eigenvalues()(j) - expected[j]) <= 1e-9 * (1 + d));
      }
    }
  }
}

TEST_CASE("cycle power alpha is rotation invariant") {
  const double a = alpha_rho(cycle_power_graph(24, 4).coupling_matrix()).first;
  // Relabeling the ring by a rotation leaves the spectrum unchanged.
  std::vector<Edge> rotated;
  const OrientedNetwork ring = cycle_power_graph(24, 4);
  for (const Edge& e : ring.edges()) {
    rotated.push_back({(e.tail + 7) % 24, (e.head + 7) % 24, 1.0});
  }
  const OrientedNetwork net(24, rotated, false);
  CHECK(rel_err(alpha_rho(net.coupling_matrix()).first, a) <= 1e-9);
}

TEST_CASE("bipartite permutation graphs are bipartite with bounded degree") {
  for (std::uint64_t seed : {1ull, 2ull, 9ull}) {
    for (int d : {1, 3, 4}) {
      const int m = 40;
      const OrientedNetwork net = random_bipartite_permutation(m, d, seed);
      CHECK(net.vertex_count() == 2 * m);
      std::vector<int> degree(static_cast<std::size_t>(2 * m), 0);
      for (const Edge& e : net.edges()) {
        REQUIRE(e.tail < m);
        REQUIRE(e.head >= m);
        ++degree[static_cast<std::size_t>(e.tail)];
        ++degree[static_cast<std::size_t>(e.head)];
      }
      for (int v = 0; v < 2 * m; ++v) {
        REQUIRE(degree[static_cast<std::size_t>(v)] >= 1);
        REQUIRE(degree[static_cast<std::size_t>(v)] <= d);
      }
    }
  }
}

TEST_CASE("a single permutation round is a perfect matching") {
  const OrientedNetwork net = random_bipartite_permutation(12, 1, 5);
  CHECK(net.edge_count() == 12);
  std::set<int> tails, heads;
  for (const Edge& e : net.edges()) {
    tails.insert(e.tail);
    heads.insert(e.head);
  }
  CHECK(tails.size() == 12);
  CHECK(heads.size() == 12);
}

TEST_CASE("bipartite generator is reproducible by seed") {
  const OrientedNetwork a = random_bipartite_permutation(30, 4, 77);
  const OrientedNetwork b = random_bipartite_permutation(30, 4, 77);
  const OrientedNetwork c = random_bipartite_permutation(30, 4, 78);
  REQUIRE(a.edge_count() == b.edge_count());
  for (int e = 0; e < a.edge_count(); ++e) {
    const Edge& ea = a.edges()[static_cast<std::size_t>(e)];
    const Edge& eb = b.edges()[static_cast<std::size_t>(e)];
    REQUIRE(ea.tail == eb.tail);
    REQUIRE(ea.head == eb.head);
  }
  bool differs = c.edge_count() != a.edge_count();
  if (!differs) {
    for (int e = 0; e < a.edge_count(); ++e) {
      const Edge& ea = a.edges()[static_cast<std::size_t>(e)];
      const Edge& ec = c.edges()[static_cast<std::size_t>(e)];
      if (ea.tail != ec.tail || ea.head != ec.head) {
        differs = true;
        break;
      }
    }
  }
  CHECK(differs);
}

TEST_CASE("demo coupling entries round trip through the network view") {
  const Eigen::MatrixXd d = noncooperative_demo_matrix();
  CHECK(d.rows() == 5);
  CHECK(d(0, 1) == 2.2043);
  CHECK(d(4, 4) == -0.3441);
  CHECK((d * Eigen::VectorXd::Ones(5)).norm() <= 1e-12);
  const OrientedNetwork net = noncooperative_demo_network();
  CHECK(net.directed());
  CHECK((net.coupling_matrix() - d).norm() <= 1e-12);
}
