#pragma once

#include <Eigen/Dense>

#include "conlab/errors.hpp"

namespace conlab {

/**
 * Rectangular intertwiner that projects out the consensus direction.
 *
 * S_tilde is any (n-1) x n matrix whose kernel is the span of the all-ones
 * vector; S is its row-orthonormalized form, so S S^T = I and S^T S is the
 * orthogonal projector onto the orthogonal complement of the ones vector.
 */
struct ReductionMap {
  Eigen::MatrixXd S_tilde;  // (n-1) x n
  Eigen::MatrixXd S;        // (n-1) x n, orthonormal rows
  Eigen::MatrixXd S_plus;   // n x (n-1), Moore-Penrose inverse of S
  int n = 0;
};

struct ReducedMatrix {
  Eigen::MatrixXd D_hat;  // (n-1) x (n-1)
  int source_dim = 0;
};

// First-difference intertwiner: rows (-1, 1) shifted along the diagonal.
Eigen::MatrixXd difference_intertwiner(int n);

// Row-orthonormalizes S_tilde via the symmetric square root of
// S_tilde S_tilde^T.  Throws RankDeficientIntertwiner when the smallest
// singular value falls below 1e-10 of the largest, and InvalidArgument when
// the ones vector is not in the kernel.
ReductionMap normalize(const Eigen::MatrixXd& S_tilde);

// normalize(difference_intertwiner(n)), the default choice everywhere.
const ReductionMap& default_reduction(int n);

// D_hat = S D S_plus, the reduced coupling with the consensus zero mode
// removed: S D = D_hat S, and spec(D_hat) = spec(D) minus one zero.
// Throws NotZeroRowSum when ||D e|| > 1e-10 ||D|| sqrt(n).
ReducedMatrix reduce(const Eigen::MatrixXd& D, const ReductionMap& map);

struct SpectrumSplit {
  Eigen::VectorXcd full;     // eigenvalues of D
  Eigen::VectorXcd reduced;  // eigenvalues of D_hat
  double removed_zero_magnitude = 0.0;  // |closest-to-zero eigenvalue of D|
  bool zero_simple = true;   // no zero eigenvalue left in the reduced spectrum
  double max_pair_distance = 0.0;  // greedy matching of reduced vs remaining full
};

SpectrumSplit spectrum_split(const Eigen::MatrixXd& D);

// Frobenius norm of exp(t D_hat) - S exp(t D) S_plus.
double exp_commutation_residual(const Eigen::MatrixXd& D, double t);

}  // namespace conlab
