#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include <conlab/conlab.hpp>

#include "support.hpp"

using namespace conlab;
using testsupport::random_coupling;

TEST_CASE("difference intertwiner kills exactly the ones vector") {
  for (int n : {2, 3, 7}) {
    const Eigen::MatrixXd s = difference_intertwiner(n);
    REQUIRE(s.rows() == n - 1);
    REQUIRE(s.cols() == n);
    CHECK((s * Eigen::VectorXd::Ones(n)).norm() == 0.0);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(s);
    CHECK(lu.rank() == n - 1);
  }
}

TEST_CASE("normalize produces orthonormal rows and the deviation projector") {
  for (int n : {2, 4, 23}) {
    const ReductionMap map = normalize(difference_intertwiner(n));
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n - 1, n - 1);
    const Eigen::MatrixXd proj =
        Eigen::MatrixXd::Identity(n, n) -
        Eigen::MatrixXd::Constant(n, n, 1.0 / n);
    CHECK((map.S * map.S.transpose() - eye).norm() <= 1e-12);
    CHECK((map.S.transpose() * map.S - proj).norm() <= 1e-12);
    CHECK((map.S_plus - map.S.transpose()).norm() <= 1e-12);
  }
}

TEST_CASE("normalize accepts any full-rank intertwiner with the same kernel") {
  RandomStream rs(4);
  const int n = 6;
  Eigen::MatrixXd s(n - 1, n);
  for (int trial = 0; trial < 10; ++trial) {
    for (int i = 0; i < n - 1; ++i) {
      double row_sum = 0.0;
      for (int j = 0; j < n - 1; ++j) {
        s(i, j) = rs.normal();
        row_sum += s(i, j);
      }
      s(i, n - 1) = -row_sum;
    }
    const ReductionMap map = normalize(s);
    CHECK((map.S * Eigen::VectorXd::Ones(n)).norm() <= 1e-12);
    CHECK((map.S * map.S.transpose() -
           Eigen::MatrixXd::Identity(n - 1, n - 1))
              .norm() <= 1e-10);
  }
}

TEST_CASE("normalize rejects rank-deficient and wrong-kernel input") {
  Eigen::MatrixXd flat(2, 3);
  flat << 1.0, -1.0, 0.0, 2.0, -2.0, 0.0;
  CHECK_THROWS_AS(normalize(flat), RankDeficientIntertwiner);

  Eigen::MatrixXd off(1, 2);
  off << 1.0, 0.5;
  CHECK_THROWS_AS(normalize(off), InvalidArgument);
}

TEST_CASE("reduction intertwines the coupling") {
  RandomStream rs(12);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rs.uniform_below(10));
    const Eigen::MatrixXd d = random_coupling(rs, n);
    const ReductionMap& map = default_reduction(n);
    const ReducedMatrix red = reduce(d, map);
    const double residual = (map.S * d - red.D_hat * map.S).norm();
    CHECK(residual <= 1e-10 * std::max(1.0, d.norm()));
  }
}

TEST_CASE("reduce rejects couplings with nonzero row sums") {
  Eigen::MatrixXd bad = Eigen::MatrixXd::Identity(4, 4);
  CHECK_THROWS_AS(reduce(bad, default_reduction(4)), NotZeroRowSum);
}

TEST_CASE("reduced spectrum is the full spectrum minus one zero") {
  RandomStream rs(29);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rs.uniform_below(10));
    const Eigen::MatrixXd d = random_coupling(rs, n);
    const SpectrumSplit split = spectrum_split(d);
    REQUIRE(split.full.size() == n);
    REQUIRE(split.reduced.size() == n - 1);
    CHECK(split.zero_simple);
    CHECK(split.removed_zero_magnitude <= 1e-8 * std::max(1.0, d.norm()));
    CHECK(split.max_pair_distance <= 1e-8 * std::max(1.0, d.norm()));
  }
}

TEST_CASE("two different intertwiners produce the same reduced spectrum") {
  RandomStream rs(31);
  const int n = 7;
  Eigen::MatrixXd alt(n - 1, n);
  for (int i = 0; i < n - 1; ++i) {
    double row_sum = 0.0;
    for (int j = 0; j < n - 1; ++j) {
      alt(i, j) = rs.normal();
      row_sum += alt(i, j);
    }
    alt(i, n - 1) = -row_sum;
  }
  const ReductionMap alt_map = normalize(alt);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::MatrixXd d = random_coupling(rs, n);
    Eigen::VectorXcd a =
        Eigen::EigenSolver<Eigen::MatrixXd>(
            reduce(d, default_reduction(n)).D_hat, false)
            .eigenvalues();
    Eigen::VectorXcd b =
        Eigen::EigenSolver<Eigen::MatrixXd>(reduce(d, alt_map).D_hat, false)
            .eigenvalues();
    // Greedy nearest matching between the two multisets.
    std::vector<bool> used(static_cast<std::size_t>(n - 1), false);
    double worst = 0.0;
    for (int i = 0; i < n - 1; ++i) {
      double best = 1e300;
      int arg = -1;
      for (int j = 0; j < n - 1; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        const double dist = std::abs(a(i) - b(j));
        if (dist < best) {
          best = dist;
          arg = j;
        }
      }
      used[static_cast<std::size_t>(arg)] = true;
      worst = std::max(worst, best);
    }
    CHECK(worst <= 1e-8 * std::max(1.0, d.norm()));
  }
}

TEST_CASE("reduction commutes with the flow") {
  RandomStream rs(40);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + static_cast<int>(rs.uniform_below(8));
    Eigen::MatrixXd d = random_coupling(rs, n);
    d /= std::max(1.0, d.norm());
    for (double t : {0.5, 1.0, 2.0}) {
      CHECK(exp_commutation_residual(d, t) <= 1e-8);
    }
  }
}

TEST_CASE("default reduction is cached per dimension") {
  const ReductionMap& a = default_reduction(9);
  const ReductionMap& b = default_reduction(9);
  CHECK(&a == &b);
  CHECK(a.n == 9);
}
