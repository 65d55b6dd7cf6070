#include "verify.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <conlab/conlab.hpp>

namespace {

using namespace conlab;

struct CheckResult {
  bool pass = false;
  std::string detail;
};

struct Check {
  std::string name;
  bool slow = false;
  std::function<CheckResult()> run;
};

CheckResult pass(std::string detail) { return {true, std::move(detail)}; }
CheckResult fail(std::string detail) { return {false, std::move(detail)}; }

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(4);
  s << v;
  return s.str();
}

// Random tree plus a few chords: connected by construction.
OrientedNetwork random_connected_graph(RandomStream& rs, int n, int chords) {
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  for (int v = 1; v < n; ++v) {
    const int u = static_cast<int>(rs.uniform_below(v));
    edges.push_back({u, v, 1.0});
    seen.insert({std::min(u, v), std::max(u, v)});
  }
  int placed = 0;
  for (int tries = 0; placed < chords && tries < 50 * (chords + 1); ++tries) {
    const int a = static_cast<int>(rs.uniform_below(n));
    const int b = static_cast<int>(rs.uniform_below(n));
    if (a == b) continue;
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) continue;
    edges.push_back({a, b, 1.0});
    ++placed;
  }
  return OrientedNetwork(n, edges, false);
}

// Dense matrix with rows summing to zero: the generic reduction input.
Eigen::MatrixXd random_coupling(RandomStream& rs, int n) {
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rs.normal();
  const Eigen::VectorXd row_sums = g.rowwise().sum();
  g.diagonal() -= row_sums;
  return g;
}

// Chain of vertex-sharing cycles: every cycle space basis element is one of
// the built cycles and no two share an edge.
OrientedNetwork cactus_graph(RandomStream& rs, int n_cycles,
                             std::vector<int>* lengths_out) {
  std::vector<Edge> edges;
  int attach = 0;
  int next = 1;
  std::vector<int> lengths;
  for (int c = 0; c < n_cycles; ++c) {
    const int len = 3 + static_cast<int>(rs.uniform_below(4));
    lengths.push_back(len);
    int prev = attach;
    for (int s = 0; s < len - 1; ++s) {
      edges.push_back({prev, next, 1.0});
      prev = next;
      ++next;
    }
    edges.push_back({prev, attach, 1.0});
    attach = prev;
  }
  if (lengths_out) *lengths_out = lengths;
  return OrientedNetwork(next, edges, false);
}

CheckResult check_reduction_orthonormal() {
  for (int n : {2, 5, 23}) {
    const ReductionMap& map = default_reduction(n);
    const int r = n - 1;
    const double e1 =
        (map.S * map.S.transpose() - Eigen::MatrixXd::Identity(r, r)).norm();
    Eigen::MatrixXd p = Eigen::MatrixXd::Identity(n, n) -
                        Eigen::MatrixXd::Constant(n, n, 1.0 / n);
    const double e2 = (map.S.transpose() * map.S - p).norm();
    if (e1 > 1e-12 || e2 > 1e-12) {
      return fail("n=" + std::to_string(n) + " gram error " + fmt(e1) + "/" +
                  fmt(e2));
    }
  }
  return pass("rows orthonormal, S^T S is the deviation projector");
}

CheckResult check_pseudo_similarity() {
  RandomStream rs(101);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rs.uniform_below(11));
    const Eigen::MatrixXd d = random_coupling(rs, n);
    const ReductionMap& map = default_reduction(n);
    const ReducedMatrix red = reduce(d, map);
    const double res = (map.S * d - red.D_hat * map.S).norm() / d.norm();
    worst = std::max(worst, res);
  }
  return worst <= 1e-10 ? pass("worst residual " + fmt(worst))
                        : fail("worst residual " + fmt(worst));
}

CheckResult check_spectrum_pairing() {
  RandomStream rs(102);
  double worst_pair = 0.0, worst_zero = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rs.uniform_below(11));
    const Eigen::MatrixXd d = random_coupling(rs, n);
    const SpectrumSplit split = spectrum_split(d);
    worst_pair = std::max(
        worst_pair, split.max_pair_distance / std::max(1.0, d.norm()));
    worst_zero = std::max(
        worst_zero, split.removed_zero_magnitude / std::max(1.0, d.norm()));
    if (!split.zero_simple) return fail("zero reported non-simple");
  }
  if (worst_pair > 1e-8) return fail("pairing distance " + fmt(worst_pair));
  return pass("pair dist " + fmt(worst_pair) + ", removed zero " +
              fmt(worst_zero));
}

CheckResult check_flow_commutation() {
  RandomStream rs(103);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rs.uniform_below(9));
    Eigen::MatrixXd d = random_coupling(rs, n);
    d /= d.norm();
    for (double t : {0.5, 1.0, 2.0}) {
      worst = std::max(worst, exp_commutation_residual(d, t));
    }
  }
  return worst <= 1e-8 ? pass("worst residual " + fmt(worst))
                       : fail("worst residual " + fmt(worst));
}

CheckResult check_normality_preservation() {
  RandomStream rs(104);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + static_cast<int>(rs.uniform_below(8));
    // Circulant couplings are normal and have zero row sums.
    Eigen::VectorXd c(n);
    double sum = 0.0;
    for (int i = 1; i < n; ++i) {
      c(i) = rs.normal();
      sum += c(i);
    }
    c(0) = -sum;
    Eigen::MatrixXd d(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d(i, j) = c((j - i + n) % n);
    const Eigen::MatrixXd d_hat = reduce(d, default_reduction(n)).D_hat;
    const double comm =
        (d_hat * d_hat.transpose() - d_hat.transpose() * d_hat).norm();
    worst = std::max(worst, comm / (d_hat.norm() * d_hat.norm()));
  }
  return worst <= 1e-9 ? pass("worst relative commutator " + fmt(worst))
                       : fail("worst relative commutator " + fmt(worst));
}

CheckResult check_cycle_partition() {
  RandomStream rs(105);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rs.uniform_below(18));
    const int chords = static_cast<int>(rs.uniform_below(6));
    const OrientedNetwork net = random_connected_graph(rs, n, chords);
    const TreeCycleDecomposition dec = spanning_tree_decomposition(net);
    Eigen::MatrixXi stacked(dec.m, n);
    stacked.topRows(n - 1) = dec.H_tilde;
    if (dec.c > 0) {
      stacked.bottomRows(dec.c) = -(dec.Q.cast<int>() * dec.H_tilde);
      Eigen::MatrixXi z(dec.c, dec.m);
      z.leftCols(n - 1) = dec.Q.cast<int>();
      z.rightCols(dec.c) = Eigen::MatrixXi::Identity(dec.c, dec.c);
      if ((z * dec.H).cwiseAbs().maxCoeff() != 0) {
        return fail("Z H != 0 at trial " + std::to_string(trial));
      }
    }
    if (stacked != dec.H) {
      return fail("partition identity broke at trial " + std::to_string(trial));
    }
  }
  return pass("identity exact on 100 random connected graphs");
}

CheckResult check_cycle_laplacian() {
  RandomStream rs(106);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + static_cast<int>(rs.uniform_below(12));
    const OrientedNetwork net =
        random_connected_graph(rs, n, 2 + static_cast<int>(rs.uniform_below(4)));
    const TreeCycleDecomposition dec = spanning_tree_decomposition(net);
    if (dec.c == 0) continue;
    const Eigen::MatrixXd lc = cycle_laplacian(dec);
    for (int i = 0; i < dec.c; ++i) {
      const double len =
          static_cast<double>(dec.fundamental_cycles[i].size());
      if (std::abs(lc(i, i) - (len - 1.0)) > 1e-12) {
        return fail("diagonal mismatch: " + fmt(lc(i, i)) + " vs " +
                    fmt(len - 1.0));
      }
      for (int j = 0; j < dec.c; ++j) {
        if (i == j) continue;
        std::set<int> in_i;
        for (const auto& entry : dec.fundamental_cycles[i]) {
          in_i.insert(entry.first);
        }
        std::size_t shared = 0;
        for (const auto& entry : dec.fundamental_cycles[j]) {
          shared += in_i.count(entry.first);
        }
        if (std::abs(std::abs(lc(i, j)) - static_cast<double>(shared)) >
            1e-12) {
          return fail("off-diagonal magnitude mismatch");
        }
      }
    }
  }
  return pass("diagonal is cycle length minus one, off-diagonal is overlap");
}

CheckResult check_kappa_orientation() {
  RandomStream rs(107);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 4 + static_cast<int>(rs.uniform_below(10));
    const OrientedNetwork net =
        random_connected_graph(rs, n, 1 + static_cast<int>(rs.uniform_below(4)));
    std::vector<Edge> flipped = net.edges();
    for (Edge& e : flipped) {
      if (rs.uniform_below(2) == 1) std::swap(e.tail, e.head);
    }
    const OrientedNetwork net2(n, flipped, false);
    const double k1 = kappa(spanning_tree_decomposition(net));
    const double k2 = kappa(spanning_tree_decomposition(net2));
    if (std::abs(k1 - k2) > 1e-10) {
      return fail("kappa moved by " + fmt(std::abs(k1 - k2)));
    }
  }
  return pass("kappa invariant under edge reorientation");
}

CheckResult check_kappa_disjoint() {
  RandomStream rs(108);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<int> lengths;
    const OrientedNetwork net =
        cactus_graph(rs, 1 + static_cast<int>(rs.uniform_below(4)), &lengths);
    double expected = net.vertex_count() - 1;
    for (int len : lengths) expected -= (len - 1.0) / len;
    const double k = kappa(spanning_tree_decomposition(net));
    if (std::abs(k - expected) > 1e-10) {
      return fail("cactus kappa " + fmt(k) + " vs " + fmt(expected));
    }
  }
  return pass("matches the edge-disjoint closed form");
}

CheckResult check_bounds_bracket() {
  RandomStream rs(109);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rs.uniform_below(10));
    const OrientedNetwork net =
        random_connected_graph(rs, n, static_cast<int>(rs.uniform_below(5)));
    const SpectralReport rep = analyze_network(net);
    if (!rep.bounds || !rep.kappa) return fail("bounds missing");
    if (rep.bounds->alpha_lower > rep.alpha + 1e-10) {
      return fail("alpha bound above alpha");
    }
    if (rep.rho && *rep.rho > rep.bounds->rho_upper + 1e-10) {
      return fail("rho above its bound");
    }
    if (*rep.kappa < rep.bounds->kappa_lower - 1e-10 ||
        *rep.kappa > rep.bounds->kappa_upper + 1e-10) {
      return fail("kappa outside its bracket");
    }
  }
  return pass("alpha, rho, kappa inside their bounds on 60 graphs");
}

CheckResult check_undirected_classification() {
  RandomStream rs(110);
  int negative_cases = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rs.uniform_below(8));
    OrientedNetwork base =
        random_connected_graph(rs, n, 1 + static_cast<int>(rs.uniform_below(3)));
    std::vector<Edge> edges = base.edges();
    for (Edge& e : edges) {
      e.conductance = 0.2 + rs.uniform01();
      if (rs.uniform_below(5) == 0) e.conductance = -0.5 * rs.uniform01();
    }
    const OrientedNetwork net(n, edges, false);
    const bool by_eigen = classify_convergent(net.coupling_matrix()).first;
    const bool by_cycles = classify_undirected(spanning_tree_decomposition(net));
    if (by_eigen != by_cycles) {
      return fail("disagreement at trial " + std::to_string(trial));
    }
    if (!by_eigen) ++negative_cases;
  }
  return pass("criteria agree (" + std::to_string(negative_cases) +
              " non-convergent cases hit)");
}

CheckResult check_alpha_closed_forms() {
  for (int n : {4, 10, 41}) {
    const double a_path = analyze_network(path_graph(n)).alpha;
    const double want_path =
        4.0 * std::pow(std::sin(M_PI / (2.0 * n)), 2);
    if (std::abs(a_path - want_path) > 1e-12 * std::max(1.0, want_path)) {
      return fail("path alpha off at n=" + std::to_string(n));
    }
    const double a_complete = analyze_network(complete_graph(n)).alpha;
    if (std::abs(a_complete - n) > 1e-11 * n) {
      return fail("complete alpha off at n=" + std::to_string(n));
    }
    const double a_cycle = analyze_network(cycle_power_graph(n, 2)).alpha;
    const double want_cycle = 2.0 - 2.0 * std::cos(2.0 * M_PI / n);
    if (std::abs(a_cycle - want_cycle) > 1e-12 * std::max(1.0, want_cycle)) {
      return fail("cycle alpha off at n=" + std::to_string(n));
    }
  }
  return pass("path, complete and cycle spectra match closed forms");
}

CheckResult check_rho_path() {
  for (int n : {5, 20, 100}) {
    const auto rep = analyze_network(path_graph(n));
    if (!rep.rho) return fail("rho missing for a path");
    const double want = (static_cast<double>(n) * n - 1.0) / 6.0;
    if (std::abs(*rep.rho - want) > 1e-10 * want) {
      return fail("rho(" + std::to_string(n) + ") = " + fmt(*rep.rho) +
                  " vs " + fmt(want));
    }
  }
  return pass("rho of paths matches (n^2-1)/6");
}

CheckResult check_rng_moments() {
  RandomStream rs(111);
  const int n_draws = 2000000;
  double s1 = 0, s2 = 0, s3 = 0, s4 = 0;
  for (int i = 0; i < n_draws; ++i) {
    const double v = rs.normal();
    s1 += v;
    s2 += v * v;
    s3 += v * v * v;
    s4 += v * v * v * v;
  }
  const double inv = 1.0 / n_draws;
  const double mean = s1 * inv;
  const double var = s2 * inv - mean * mean;
  const double kurt = s4 * inv;
  const double se_mean = 1.0 / std::sqrt(double(n_draws));
  const double se_var = std::sqrt(2.0 / n_draws);
  const double se_kurt = std::sqrt(96.0 / n_draws);
  if (std::abs(mean) > 5 * se_mean) return fail("mean " + fmt(mean));
  if (std::abs(var - 1.0) > 5 * se_var) return fail("variance " + fmt(var));
  if (std::abs(kurt - 3.0) > 5 * se_kurt) return fail("kurtosis " + fmt(kurt));
  return pass("mean " + fmt(mean) + ", var " + fmt(var) + ", kurt " +
              fmt(kurt));
}

CheckResult check_rng_uniform() {
  RandomStream rs(112);
  const std::uint64_t bound = 7;
  const int n_draws = 700000;
  std::vector<int> hist(bound, 0);
  for (int i = 0; i < n_draws; ++i) ++hist[rs.uniform_below(bound)];
  const double expect = double(n_draws) / bound;
  const double sd = std::sqrt(expect * (1.0 - 1.0 / bound));
  for (std::uint64_t b = 0; b < bound; ++b) {
    if (std::abs(hist[b] - expect) > 5 * sd) {
      return fail("bin " + std::to_string(b) + " off by " +
                  fmt((hist[b] - expect) / sd) + " sd");
    }
  }
  return pass("7-bin histogram flat within 5 sd");
}

CheckResult check_seed_reproducibility(int threads) {
  const OrientedNetwork net = complete_graph(5);
  auto sch = CouplingSchedule::constant(net.coupling_matrix()).with_sigma(0.3);
  Eigen::VectorXd x0 = Eigen::VectorXd::Zero(5);
  SdeOptions opt;
  opt.threads = threads;
  const auto a = integrate_sde(sch, x0, 0.5, 1e-3, 320, 99, opt);
  const auto b = integrate_sde(sch, x0, 0.5, 1e-3, 320, 99, opt);
  const auto c = integrate_sde(sch, x0, 0.5, 1e-3, 320, 100, opt);
  for (int f = 0; f < a.times.size(); ++f) {
    if (a.mean_sq(f) != b.mean_sq(f)) return fail("same seed diverged");
  }
  double delta = 0;
  for (int f = 0; f < a.times.size(); ++f) {
    delta = std::max(delta, std::abs(a.mean_sq(f) - c.mean_sq(f)));
  }
  if (delta == 0.0) return fail("different seeds produced identical output");
  return pass("same seed bitwise equal, different seed differs");
}

CheckResult check_thread_invariance() {
  const OrientedNetwork net = complete_graph(5);
  auto sch = CouplingSchedule::constant(net.coupling_matrix()).with_sigma(0.3);
  Eigen::VectorXd x0 = Eigen::VectorXd::Zero(5);
  SdeOptions one, four;
  one.threads = 1;
  four.threads = 4;
  const auto a = integrate_sde(sch, x0, 0.5, 1e-3, 640, 7, one);
  const auto b = integrate_sde(sch, x0, 0.5, 1e-3, 640, 7, four);
  for (int f = 0; f < a.times.size(); ++f) {
    if (a.mean_sq(f) != b.mean_sq(f) || a.se_sq(f) != b.se_sq(f)) {
      return fail("thread count changed the aggregate");
    }
    if ((a.mean_y[f] - b.mean_y[f]).cwiseAbs().maxCoeff() != 0.0) {
      return fail("thread count changed the mean");
    }
  }
  return pass("1-thread and 4-thread runs bitwise equal");
}

CheckResult check_zero_noise_limit() {
  const OrientedNetwork net = path_graph(5);
  const Eigen::MatrixXd d = net.coupling_matrix();
  auto sch = CouplingSchedule::constant(d);
  Eigen::VectorXd x0 = Eigen::VectorXd::LinSpaced(5, -1.0, 1.0);
  const double dt = 1e-5;
  const auto det = integrate_deterministic(sch, x0, 0.5, dt, 11);
  const auto mc = integrate_sde(sch, x0, 0.5, dt, 1, 0, {11, 1, true});
  double worst = 0.0;
  for (int f = 0; f < det.times.size(); ++f) {
    const double a = det.off_consensus_norm(f);
    const double b = std::sqrt(mc.mean_sq(f));
    worst = std::max(worst, std::abs(a - b));
  }
  return worst <= 5e-4 ? pass("Euler matches the exponential flow to " +
                              fmt(worst))
                       : fail("gap " + fmt(worst));
}

CheckResult check_moment_fixed_point() {
  const OrientedNetwork net = complete_graph(3);
  auto sch = CouplingSchedule::constant(net.coupling_matrix()).with_sigma(1.0);
  const auto mt =
      integrate_moment_odes(sch, Eigen::VectorXd::Zero(2), 12.0, 1e-3, 25);
  const double tail = mt.second_moment(mt.second_moment.size() - 1);
  const Eigen::MatrixXd v = mt.cov.back();
  const double err =
      (v - Eigen::MatrixXd::Identity(2, 2) / 6.0).cwiseAbs().maxCoeff();
  if (std::abs(tail - 1.0 / 3.0) > 1e-6 || err > 1e-6) {
    return fail("fixed point off by " + fmt(err));
  }
  return pass("covariance settles on the stationary value");
}

CheckResult check_stationary_formulas() {
  const Eigen::MatrixXd d = path_graph(3).coupling_matrix();
  const auto [cov, scalar] = stationary_prediction(d, 1.0);
  if (std::abs(scalar - 2.0 / 3.0) > 1e-12) {
    return fail("scalar " + fmt(scalar) + " vs 2/3");
  }
  const Eigen::MatrixXd d5 = complete_graph(5).coupling_matrix();
  const auto [cov5, scalar5] = stationary_prediction(d5, 0.4);
  if (std::abs(scalar5 - 0.4 * 0.4 / 2.0 * (4.0 / 5.0)) > 1e-12) {
    return fail("complete-graph scalar off");
  }
  return pass("path and complete stationary dispersions match");
}

CheckResult check_pure_diffusion(int threads) {
  const int n = 4;
  auto sch =
      CouplingSchedule::constant(Eigen::MatrixXd::Zero(n, n)).with_sigma(1.0);
  SdeOptions opt;
  opt.threads = threads;
  const auto ens =
      integrate_sde(sch, Eigen::VectorXd::Zero(n), 1.0, 1e-3, 4000, 21, opt);
  const int last = static_cast<int>(ens.times.size()) - 1;
  const double want = (n - 1.0) * ens.times(last);
  const double got = ens.mean_sq(last);
  const double gap = std::abs(got - want) / ens.se_sq(last);
  return gap <= 5.0 ? pass("E|Px|^2 = (n-1) t within " + fmt(gap) + " se")
                    : fail("off by " + fmt(gap) + " se");
}

CheckResult check_mean_conservation() {
  const Eigen::MatrixXd d = path_graph(6).coupling_matrix();
  auto sch = CouplingSchedule::constant(d);
  Eigen::VectorXd x0(6);
  x0 << 3, -1, 4, 1, -5, 9;
  const auto traj = integrate_deterministic(sch, x0, 5.0, 1e-3, 9);
  const double m0 = x0.mean();
  for (int f = 0; f < traj.times.size(); ++f) {
    const double drift_err = std::abs(traj.states.col(f).mean() - m0);
    if (drift_err > 1e-9 * (1.0 + traj.times(f))) {
      return fail("mean drifted by " + fmt(drift_err));
    }
  }
  return pass("consensus value conserved along the flow");
}

CheckResult check_switching_decay() {
  const Eigen::MatrixXd d1 = path_graph(5).coupling_matrix();
  const Eigen::MatrixXd d2 = star_graph(5).coupling_matrix();
  auto sch = CouplingSchedule::switching(d1, d2, 1.0);
  Eigen::VectorXd x0 = Eigen::VectorXd::LinSpaced(5, -1.0, 1.0);
  const auto traj = integrate_deterministic(sch, x0, 30.0, 2e-4, 301);
  const double rate = fit_decay_rate(traj.times, traj.off_consensus_norm);
  const ReductionMap& map = default_reduction(5);
  const double m1 = dissipativity_margin(reduce(d1, map).D_hat);
  const double m2 = dissipativity_margin(reduce(d2, map).D_hat);
  const double floor_rate = std::min(m1, m2) - 0.02;
  return rate >= floor_rate
             ? pass("decay rate " + fmt(rate) + " >= " + fmt(floor_rate))
             : fail("rate " + fmt(rate) + " below " + fmt(floor_rate));
}

CheckResult check_error_taxonomy() {
  int hits = 0;
  try {
    cycle_laplacian(spanning_tree_decomposition(path_graph(2)));
  } catch (const EmptyCycleSpace&) {
    ++hits;
  }
  try {
    OrientedNetwork(4, {{0, 1, 1.0}, {2, 3, 1.0}}, false).diameter();
  } catch (const DisconnectedGraph&) {
    ++hits;
  }
  try {
    Eigen::MatrixXd d = Eigen::MatrixXd::Random(4, 4);
    d(0, 0) += 10.0;
    reduce(d, default_reduction(4));
  } catch (const NotZeroRowSum&) {
    ++hits;
  }
  try {
    Eigen::MatrixXd bad(2, 3);
    bad << 1, -1, 0, 2, -2, 0;
    normalize(bad);
  } catch (const RankDeficientIntertwiner&) {
    ++hits;
  }
  try {
    stationary_prediction(noncooperative_demo_matrix(), 1.0);
  } catch (const NotNormal&) {
    ++hits;
  }
  try {
    Eigen::MatrixXd d = -path_graph(3).coupling_matrix();
    stationary_prediction(d, 1.0);
  } catch (const NotConvergent&) {
    ++hits;
  }
  try {
    auto sch = CouplingSchedule::constant(
                   Eigen::MatrixXd::Zero(3, 3))
                   .with_sigma(1.0);
    TrajectoryEnsemble ens;
    ens.times.resize(1);
    ens.times(0) = 0.0;
    ens.mean_sq.resize(1);
    ens.mean_sq(0) = 0.0;
    ens.se_sq.resize(1);
    ens.se_sq(0) = 0.0;
    uniform_bound_check(sch, ens);
  } catch (const PreconditionNotDissipative&) {
    ++hits;
  }
  return hits == 7 ? pass("all failure modes raise their dedicated types")
                   : fail(std::to_string(hits) + "/7 expected errors raised");
}

CheckResult check_graph_roundtrip() {
  RandomStream rs(113);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + static_cast<int>(rs.uniform_below(10));
    OrientedNetwork net =
        random_connected_graph(rs, n, static_cast<int>(rs.uniform_below(4)));
    const OrientedNetwork back = parse_graph_json(graph_json_text(net));
    if (back.vertex_count() != net.vertex_count() ||
        back.edge_count() != net.edge_count() ||
        back.directed() != net.directed()) {
      return fail("shape changed in the round trip");
    }
    if ((back.coupling_matrix() - net.coupling_matrix()).norm() != 0.0) {
      return fail("coupling matrix changed in the round trip");
    }
  }
  return pass("graph JSON round trip is exact");
}

}  // namespace

int run_verify(bool quick, int threads) {
  std::vector<Check> checks = {
      {"reduction-orthonormal", false, check_reduction_orthonormal},
      {"pseudo-similarity", false, check_pseudo_similarity},
      {"spectrum-pairing", false, check_spectrum_pairing},
      {"flow-commutation", false, check_flow_commutation},
      {"normality-preservation", false, check_normality_preservation},
      {"cycle-partition", false, check_cycle_partition},
      {"cycle-laplacian", false, check_cycle_laplacian},
      {"kappa-orientation", false, check_kappa_orientation},
      {"kappa-disjoint", false, check_kappa_disjoint},
      {"bounds-bracket", false, check_bounds_bracket},
      {"undirected-classification", false, check_undirected_classification},
      {"alpha-closed-forms", false, check_alpha_closed_forms},
      {"rho-path", false, check_rho_path},
      {"rng-moments", false, check_rng_moments},
      {"rng-uniform", false, check_rng_uniform},
      {"seed-reproducibility", false,
       [threads] { return check_seed_reproducibility(threads); }},
      {"thread-invariance", true, check_thread_invariance},
      {"zero-noise-limit", true, check_zero_noise_limit},
      {"moment-fixed-point", false, check_moment_fixed_point},
      {"stationary-formulas", false, check_stationary_formulas},
      {"pure-diffusion", true, [threads] { return check_pure_diffusion(threads); }},
      {"mean-conservation", false, check_mean_conservation},
      {"switching-decay", true, check_switching_decay},
      {"error-taxonomy", false, check_error_taxonomy},
      {"graph-json-roundtrip", false, check_graph_roundtrip},
  };

  int failures = 0;
  int ran = 0;
  for (const Check& check : checks) {
    if (quick && check.slow) continue;
    CheckResult result;
    try {
      result = check.run();
    } catch (const std::exception& e) {
      result = fail(std::string("threw: ") + e.what());
    }
    ++ran;
    if (!result.pass) ++failures;
    std::printf("[%s] %-26s %s\n", result.pass ? "PASS" : "FAIL",
                check.name.c_str(), result.detail.c_str());
  }
  std::printf("%d/%d checks passed\n", ran - failures, ran);
  return failures;
}
