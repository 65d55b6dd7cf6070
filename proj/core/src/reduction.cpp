#include "conlab/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

namespace conlab {

Eigen::MatrixXd difference_intertwiner(int n) {
  if (n < 2) throw InvalidArgument("difference_intertwiner: n must be >= 2");
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n - 1, n);
  for (int i = 0; i < n - 1; ++i) {
    s(i, i) = -1.0;
    s(i, i + 1) = 1.0;
  }
  return s;
}

ReductionMap normalize(const Eigen::MatrixXd& S_tilde) {
  const int rows = static_cast<int>(S_tilde.rows());
  const int n = static_cast<int>(S_tilde.cols());
  if (rows != n - 1 || n < 2) {
    throw InvalidArgument("normalize: intertwiner must be (n-1) x n, n >= 2");
  }
  const double scale = S_tilde.norm();
  const double kernel_error =
      (S_tilde * Eigen::VectorXd::Ones(n)).norm();
  if (kernel_error > 1e-10 * std::max(1.0, scale) * std::sqrt(double(n))) {
    throw InvalidArgument(
        "normalize: the ones vector must lie in the kernel of the intertwiner");
  }

  const Eigen::MatrixXd gram = S_tilde * S_tilde.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  const Eigen::VectorXd lambda = es.eigenvalues();
  const double lambda_max = lambda(n - 2);
  const double lambda_min = lambda(0);
  if (lambda_min < 1e-12 ||
      std::sqrt(lambda_min) < 1e-10 * std::sqrt(lambda_max)) {
    throw RankDeficientIntertwiner(
        "normalize: intertwiner is numerically rank deficient");
  }

  Eigen::VectorXd inv_sqrt(n - 1);
  for (int i = 0; i < n - 1; ++i) inv_sqrt(i) = 1.0 / std::sqrt(lambda(i));
  const Eigen::MatrixXd gram_inv_sqrt = es.eigenvectors() *
                                        inv_sqrt.asDiagonal() *
                                        es.eigenvectors().transpose();

  ReductionMap map;
  map.n = n;
  map.S_tilde = S_tilde;
  map.S = gram_inv_sqrt * S_tilde;
  // One Newton-Schulz step; squares the rounding error the inverse square
  // root leaves behind when the input rows are nearly dependent.
  map.S = 1.5 * map.S - 0.5 * (map.S * map.S.transpose()) * map.S;
  const Eigen::MatrixXd ssT = map.S * map.S.transpose();
  map.S_plus = ssT.llt().solve(map.S).transpose();
  return map;
}

const ReductionMap& default_reduction(int n) {
  static std::mutex mutex;
  static std::map<int, ReductionMap> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, normalize(difference_intertwiner(n))).first;
  }
  return it->second;
}

ReducedMatrix reduce(const Eigen::MatrixXd& D, const ReductionMap& map) {
  const int n = static_cast<int>(D.rows());
  if (D.cols() != n || n != map.n) {
    throw InvalidArgument("reduce: dimension mismatch");
  }
  const double row_sum_error = (D * Eigen::VectorXd::Ones(n)).norm();
  if (row_sum_error > 1e-10 * D.norm() * std::sqrt(double(n))) {
    throw NotZeroRowSum("reduce: coupling matrix must annihilate ones");
  }
  ReducedMatrix out;
  out.source_dim = n;
  out.D_hat = map.S * D * map.S_plus;
  return out;
}

namespace {

Eigen::VectorXcd dense_spectrum(const Eigen::MatrixXd& M) {
  if (M.rows() == 0) return Eigen::VectorXcd(0);
  Eigen::EigenSolver<Eigen::MatrixXd> es(M, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    throw Error("dense eigensolver failed to converge");
  }
  return es.eigenvalues();
}

}  // namespace

SpectrumSplit spectrum_split(const Eigen::MatrixXd& D) {
  const int n = static_cast<int>(D.rows());
  const ReductionMap& map = default_reduction(n);
  const ReducedMatrix red = reduce(D, map);

  SpectrumSplit split;
  split.full = dense_spectrum(D);
  split.reduced = dense_spectrum(red.D_hat);

  // Remove the eigenvalue of D closest to zero, then greedily pair the
  // reduced spectrum with what remains.
  std::vector<std::complex<double>> pool(split.full.data(),
                                         split.full.data() + n);
  std::size_t zero_at = 0;
  for (std::size_t i = 1; i < pool.size(); ++i) {
    if (std::abs(pool[i]) < std::abs(pool[zero_at])) zero_at = i;
  }
  split.removed_zero_magnitude = std::abs(pool[zero_at]);
  pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(zero_at));

  std::vector<char> used(pool.size(), 0);
  double worst = 0.0;
  for (int i = 0; i < split.reduced.size(); ++i) {
    const std::complex<double> target = split.reduced(i);
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_j = 0;
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (used[j]) continue;
      const double dist = std::abs(pool[j] - target);
      if (dist < best) {
        best = dist;
        best_j = j;
      }
    }
    used[best_j] = 1;
    worst = std::max(worst, best);
  }
  split.max_pair_distance = worst;

  const double zero_tol = 1e-10 * std::max(1.0, D.norm());
  split.zero_simple = true;
  for (int i = 0; i < split.reduced.size(); ++i) {
    if (std::abs(split.reduced(i)) <= zero_tol) split.zero_simple = false;
  }
  return split;
}

double exp_commutation_residual(const Eigen::MatrixXd& D, double t) {
  const int n = static_cast<int>(D.rows());
  const ReductionMap& map = default_reduction(n);
  const ReducedMatrix red = reduce(D, map);
  const Eigen::MatrixXd lhs = (t * red.D_hat).exp();
  const Eigen::MatrixXd rhs = map.S * (t * D).exp() * map.S_plus;
  return (lhs - rhs).norm();
}

}  // namespace conlab
