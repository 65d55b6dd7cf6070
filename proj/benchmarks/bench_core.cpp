#include <benchmark/benchmark.h>

#include <Eigen/Dense>
#include <conlab/conlab.hpp>

namespace {

using namespace conlab;

void BM_NormalDraw(benchmark::State& state) {
  RandomStream rs(42);
  double acc = 0.0;
  for (auto _ : state) acc += rs.normal();
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_NormalDraw);

void BM_SdePathStep(benchmark::State& state) {
  const Eigen::MatrixXd D = path_graph(10).coupling_matrix();
  CouplingSchedule schedule = CouplingSchedule::constant(D);
  schedule.with_sigma(0.2);
  const Eigen::VectorXd x0 = Eigen::VectorXd::LinSpaced(10, -1.0, 1.0);
  const int n_paths = 256;
  const double dt = 1e-3;
  const double T = 0.25;
  SdeOptions opt;
  opt.record_points = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        integrate_sde(schedule, x0, T, dt, n_paths, 7, opt));
  }
  state.SetItemsProcessed(state.iterations() * n_paths *
                          static_cast<long>(T / dt));
}
BENCHMARK(BM_SdePathStep);

void BM_Reduce(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RandomStream rs(9);
  Eigen::MatrixXd D(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) D(i, j) = rs.normal();
  }
  D.diagonal() -= D.rowwise().sum();
  const ReductionMap& map = default_reduction(n);
  for (auto _ : state) benchmark::DoNotOptimize(reduce(D, map));
}
BENCHMARK(BM_Reduce)->Arg(20)->Arg(100);

void BM_AlphaRho(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Eigen::MatrixXd D = path_graph(n).coupling_matrix();
  for (auto _ : state) benchmark::DoNotOptimize(alpha_rho(D));
}
BENCHMARK(BM_AlphaRho)->Arg(100)->Arg(400);

void BM_TreeDecomposition(benchmark::State& state) {
  const OrientedNetwork net = cycle_power_graph(500, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spanning_tree_decomposition(net));
  }
}
BENCHMARK(BM_TreeDecomposition);

}  // namespace

BENCHMARK_MAIN();
