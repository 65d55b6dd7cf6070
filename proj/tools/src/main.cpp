#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <conlab/conlab.hpp>

#include "verify.hpp"

namespace {

using namespace conlab;

int resolve_threads(int cli_threads, bool cli_given) {
  if (cli_given) return std::clamp(cli_threads, 1, 512);
  if (const char* env = std::getenv("CONSENSUS_LAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 512) {
      return static_cast<int>(v);
    }
    std::fprintf(stderr, "warning: ignoring CONSENSUS_LAB_THREADS=%s\n", env);
  }
  return 1;
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

int cmd_generate(const std::string& family, int n, int d, int m,
                 std::uint64_t seed, const std::string& out) {
  OrientedNetwork net = [&] {
    if (family == "path") return path_graph(n);
    if (family == "complete") return complete_graph(n);
    if (family == "star") return star_graph(n);
    if (family == "cycle-power") return cycle_power_graph(n, d);
    if (family == "bipartite-perm")
      return random_bipartite_permutation(m, d, seed);
    if (family == "demo") return noncooperative_demo_network();
    throw InvalidArgument("unknown family: " + family);
  }();
  write_graph_json(out, net);
  const TreeCycleDecomposition dec = spanning_tree_decomposition(net);
  std::printf("family=%s n=%d edges=%d cycle_dim=%d directed=%s -> %s\n",
              family.c_str(), net.vertex_count(), net.edge_count(), dec.c,
              yes_no(net.directed()).c_str(), out.c_str());
  return 0;
}

int cmd_analyze(const std::string& graph_path, const std::string& out) {
  const OrientedNetwork net = read_graph_json(graph_path);
  const SpectralReport rep = analyze_network(net);
  write_report_json(out, rep);
  std::printf("n=%d edges=%d directed=%s\n", rep.n, net.edge_count(),
              yes_no(net.directed()).c_str());
  std::printf("alpha=%.10g convergent=%s margin=%.10g\n", rep.alpha,
              yes_no(rep.convergent).c_str(), rep.margin);
  if (rep.rho) std::printf("rho=%.10g\n", *rep.rho);
  if (rep.kappa) std::printf("kappa=%.10g\n", *rep.kappa);
  if (rep.bounds) {
    std::printf("alpha_lower=%.10g rho_upper=%.10g kappa in [%.10g, %.10g]\n",
                rep.bounds->alpha_lower, rep.bounds->rho_upper,
                rep.bounds->kappa_lower, rep.bounds->kappa_upper);
    if (rep.bounds->alon_boppana) {
      std::printf("expander_limit=%.10g", *rep.bounds->alon_boppana);
      if (rep.bounds->diameter_bound) {
        std::printf(" diameter_bound=%.10g", *rep.bounds->diameter_bound);
      }
      std::printf("\n");
    }
  }
  std::printf("report -> %s\n", out.c_str());
  return 0;
}

int cmd_simulate(const std::string& scenario_path, std::uint64_t cli_seed,
                 bool seed_given, int threads, const std::string& out) {
  const Scenario sc = read_scenario_json(scenario_path);
  const OrientedNetwork net = read_graph_json(sc.graph_file);
  const int n = net.vertex_count();
  const Eigen::MatrixXd d = net.coupling_matrix();

  CouplingSchedule schedule = [&] {
    if (sc.schedule == "switching") {
      const OrientedNetwork net_b = read_graph_json(sc.graph_file_b);
      if (net_b.vertex_count() != n) {
        throw InvalidArgument("simulate: both graphs must share n");
      }
      return CouplingSchedule::switching(d, net_b.coupling_matrix(),
                                         sc.switch_period);
    }
    return CouplingSchedule::constant(d);
  }();
  schedule.with_gain(sc.gain).with_sigma(sc.sigma);

  double T = sc.T;
  if (T <= 0.0) {
    if (sc.schedule == "switching") {
      throw InvalidArgument("simulate: switching scenarios need explicit T");
    }
    const auto [convergent, alpha] =
        classify_convergent(Eigen::MatrixXd(sc.gain * d));
    if (!convergent) {
      throw InvalidArgument(
          "simulate: coupling is not convergent, give T explicitly");
    }
    T = 10.0 / alpha;
  }
  const double dt = sc.dt > 0.0 ? sc.dt : schedule.default_time_step();

  Eigen::VectorXd x0;
  if (!sc.x0.empty()) {
    if (static_cast<int>(sc.x0.size()) != n) {
      throw InvalidArgument("simulate: x0 length must equal n");
    }
    x0 = Eigen::Map<const Eigen::VectorXd>(sc.x0.data(), n);
  } else {
    x0 = Eigen::VectorXd::LinSpaced(n, -1.0, 1.0);
  }
  const std::uint64_t seed = seed_given ? cli_seed : sc.seed;

  std::printf("graph: %s (n=%d, edges=%d)\n", sc.graph_file.c_str(), n,
              net.edge_count());
  std::printf("schedule=%s gain=%g sigma=%g T=%g dt=%g seed=%llu threads=%d\n",
              sc.schedule.c_str(), sc.gain, sc.sigma, T, dt,
              static_cast<unsigned long long>(seed), threads);

  if (sc.sigma > 0.0 && sc.n_paths > 1) {
    SdeOptions opt;
    opt.record_points = sc.record_points;
    opt.threads = threads;
    const TrajectoryEnsemble ens =
        integrate_sde(schedule, x0, T, dt, sc.n_paths, seed, opt);
    const ReductionMap& map = default_reduction(n);
    const MomentTrajectory mt = integrate_moment_odes(
        schedule, map.S * x0, T, dt, sc.record_points);
    Eigen::VectorXd prediction;
    if (mt.times.size() == ens.times.size()) {
      prediction = mt.second_moment;
    }
    write_aggregate_csv(out, ens, prediction);
    const int last = static_cast<int>(ens.times.size()) - 1;
    std::printf("paths=%d frames=%d\n", sc.n_paths,
                static_cast<int>(ens.times.size()));
    std::printf("final dispersion %.8g", ens.mean_sq(last));
    if (prediction.size() != 0) {
      const double se = std::max(ens.se_sq(last), 1e-300);
      std::printf(", prediction %.8g (%.2f se apart)", prediction(last),
                  std::abs(ens.mean_sq(last) - prediction(last)) / se);
    }
    std::printf("\n");
    try {
      const bool ok = uniform_bound_check(schedule, ens);
      std::printf("uniform bound: %s\n", ok ? "satisfied" : "VIOLATED");
    } catch (const PreconditionNotDissipative&) {
      std::printf("uniform bound: skipped (schedule not dissipative)\n");
    }
    std::printf("aggregate -> %s\n", out.c_str());
  } else if (sc.sigma > 0.0) {
    SdeOptions opt;
    opt.record_points = sc.record_points;
    opt.threads = 1;
    const TrajectoryEnsemble ens =
        integrate_sde(schedule, x0, T, dt, 1, seed, opt);
    Trajectory traj;
    traj.times = ens.times;
    traj.dt = dt;
    traj.off_consensus_norm = ens.mean_sq.cwiseSqrt();
    traj.states.resize(0, ens.times.size());
    write_trajectory_csv(out, traj);
    std::printf("single path, %d frames -> %s\n",
                static_cast<int>(ens.times.size()), out.c_str());
  } else {
    const Trajectory traj =
        integrate_deterministic(schedule, x0, T, dt, sc.record_points);
    write_trajectory_csv(out, traj);
    const double rate = fit_decay_rate(traj.times, traj.off_consensus_norm);
    std::printf("deterministic, %d frames, fitted decay rate %.8g -> %s\n",
                static_cast<int>(traj.times.size()), rate, out.c_str());
  }
  return 0;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t k = v.size() / 2;
  return v.size() % 2 == 1 ? v[k] : 0.5 * (v[k - 1] + v[k]);
}

int cmd_reproduce_table(int samples, const std::string& out) {
  const int degree = 4;
  const double limit = degree - 2.0 * std::sqrt(degree - 1.0);
  std::vector<std::vector<std::string>> rows;
  auto row_text = [](const std::string& family, int size, int degree,
                     int samples, double med, double lo, double hi) {
    char buf[64];
    std::vector<std::string> row{family, std::to_string(size),
                                 std::to_string(degree),
                                 std::to_string(samples)};
    std::snprintf(buf, sizeof buf, "%.6f", med);
    row.push_back(buf);
    std::snprintf(buf, sizeof buf, "%.6f", lo);
    row.push_back(buf);
    std::snprintf(buf, sizeof buf, "%.6f", hi);
    row.push_back(buf);
    return row;
  };

  std::printf("%-16s %6s %3s %8s %10s %10s %10s\n", "family", "size", "d",
              "samples", "median", "min", "max");
  for (int size : {100, 200, 400}) {
    const double alpha =
        alpha_rho(cycle_power_graph(size, degree).coupling_matrix()).first;
    rows.push_back(
        row_text("cycle-power", size, degree, 1, alpha, alpha, alpha));
    std::printf("%-16s %6d %3d %8d %10.6f %10.6f %10.6f\n", "cycle-power",
                size, degree, 1, alpha, alpha, alpha);
  }
  for (int size : {100, 200, 400}) {
    std::vector<double> alphas;
    alphas.reserve(samples);
    for (int s = 1; s <= samples; ++s) {
      const OrientedNetwork net =
          random_bipartite_permutation(size, degree, s);
      alphas.push_back(alpha_rho(net.coupling_matrix()).first);
    }
    const double med = median(alphas);
    const double lo = *std::min_element(alphas.begin(), alphas.end());
    const double hi = *std::max_element(alphas.begin(), alphas.end());
    rows.push_back(row_text("bipartite-perm", size, degree, samples, med, lo,
                            hi));
    std::printf("%-16s %6d %3d %8d %10.6f %10.6f %10.6f\n", "bipartite-perm",
                size, degree, samples, med, lo, hi);
  }
  std::printf("spectral limit for degree %d: %.6f\n", degree, limit);

  char limit_text[64];
  std::snprintf(limit_text, sizeof limit_text, "%.6f", limit);
  for (auto& row : rows) row.push_back(limit_text);
  write_table_csv(out,
                  {"family", "size", "degree", "samples", "alpha_median",
                   "alpha_min", "alpha_max", "spectral_limit"},
                  rows);
  std::printf("table -> %s\n", out.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"analysis and simulation of consensus couplings on networks"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  int threads = 1;
  std::string out;
  auto* seed_opt = app.add_option("--seed", seed, "random seed");
  auto* threads_opt =
      app.add_option("--threads", threads,
                     "worker threads (or CONSENSUS_LAB_THREADS)");
  auto* out_opt = app.add_option("--out", out, "output file path");

  auto* gen = app.add_subcommand("generate", "write a graph JSON file");
  std::string family;
  int gen_n = 10, gen_d = 4, gen_m = 100;
  gen->add_option("--family", family, "graph family")
      ->required()
      ->check(CLI::IsMember({"path", "complete", "star", "cycle-power",
                             "bipartite-perm", "demo"}));
  gen->add_option("--n", gen_n, "vertex count");
  gen->add_option("--d", gen_d, "degree parameter");
  gen->add_option("--m", gen_m, "part size for bipartite-perm");

  auto* ana = app.add_subcommand("analyze", "spectral report for a graph");
  std::string graph_path;
  ana->add_option("graph", graph_path, "graph JSON file")
      ->required()
      ->check(CLI::ExistingFile);

  auto* sim = app.add_subcommand("simulate", "run a scenario");
  std::string scenario_path;
  sim->add_option("scenario", scenario_path, "scenario JSON file")
      ->required()
      ->check(CLI::ExistingFile);

  auto* tab = app.add_subcommand("reproduce-table",
                                 "slowest-mode table for the two families");
  int samples = 24;
  tab->add_option("--samples", samples, "seeds per random row")
      ->check(CLI::Range(1, 1000));

  auto* ver = app.add_subcommand("verify", "run the invariant battery");
  bool quick = false;
  ver->add_flag("--quick", quick, "skip the slow checks");

  CLI11_PARSE(app, argc, argv);

  const int n_threads = resolve_threads(threads, threads_opt->count() > 0);
  try {
    if (gen->parsed()) {
      return cmd_generate(family, gen_n, gen_d, gen_m, seed,
                          out_opt->count() ? out : "graph.json");
    }
    if (ana->parsed()) {
      return cmd_analyze(graph_path, out_opt->count() ? out : "report.json");
    }
    if (sim->parsed()) {
      const Scenario sc = read_scenario_json(scenario_path);
      const bool aggregate = sc.sigma > 0.0 && sc.n_paths > 1;
      return cmd_simulate(scenario_path, seed, seed_opt->count() > 0,
                          n_threads,
                          out_opt->count()
                              ? out
                              : (aggregate ? "aggregate.csv"
                                           : "trajectory.csv"));
    }
    if (tab->parsed()) {
      return cmd_reproduce_table(samples,
                                 out_opt->count() ? out : "table.csv");
    }
    if (ver->parsed()) {
      return run_verify(quick, n_threads) == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
