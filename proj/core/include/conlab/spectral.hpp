#pragma once

#include <Eigen/Dense>
#include <optional>
#include <utility>

#include "conlab/graph.hpp"

namespace conlab {

class CouplingSchedule;

/**
 * A-priori brackets on the stability measures of a connected simple
 * undirected network, all derived from its spanning-tree decomposition.
 * The expander entries are present only for regular unit-conductance graphs.
 */
struct StabilityBounds {
  double alpha_lower = 0.0;  // tree connectivity times lambda_min(I + Q^T Q)
  double rho_upper = 0.0;
  double kappa_lower = 0.0;
  double kappa_upper = 0.0;
  std::optional<double> alon_boppana;    // g(d) = d - 2 sqrt(d-1)
  std::optional<double> diameter_bound;  // 2 d (2 log2 n / diam)^2
};

struct SpectralReport {
  int n = 0;
  Eigen::VectorXcd eigenvalues;  // spectrum of D, descending real part
  double alpha = 0.0;            // decay rate of the off-consensus dynamics
  bool convergent = false;
  double margin = 0.0;           // -lambda_max of the symmetric part of D_hat
  std::optional<double> rho;     // undirected / normal couplings only
  std::optional<double> kappa;   // simple undirected networks only
  std::optional<StabilityBounds> bounds;
};

// Convergence test: every reduced eigenvalue strictly in the left half
// plane (relative threshold 1e-10).  Returns (convergent, alpha) with
// alpha = -max Re of the reduced spectrum.
std::pair<bool, double> classify_convergent(const Eigen::MatrixXd& D);

// Convergence of a weighted undirected network via positive definiteness of
// C1 + Q^T C2 Q over the spanning-tree decomposition.
bool classify_undirected(const TreeCycleDecomposition& dec);

// Algebraic connectivity and total effective resistance of the symmetric
// part: alpha = lambda_2(-D^s), rho = sum_{i>=2} 1 / lambda_i(-D^s).
// Throws MultipleZeroEVs when the zero eigenvalue is not simple.
std::pair<double, double> alpha_rho(const Eigen::MatrixXd& D);

// kappa = tr (I + Q^T Q)^{-1}, the tree-relative dispersion functional of a
// simple network (conductances play no role here).
double kappa(const TreeCycleDecomposition& dec);

StabilityBounds stability_bounds(const OrientedNetwork& net,
                                 const TreeCycleDecomposition& dec);

// -lambda_max((D_hat + D_hat^T)/2); positive values certify uniform
// dissipativity at that rate.
double dissipativity_margin(const Eigen::MatrixXd& D_hat);

// Trapezoid estimate of the running time average of
// lambda_max(sym(g D_hat(u))) over [0, T]; negative values certify
// dissipativity on time average.
double asymptotic_dissipativity_estimate(const CouplingSchedule& schedule,
                                         double T, double dt);

// Full per-network report used by the command line front end.
SpectralReport analyze_network(const OrientedNetwork& net);

}  // namespace conlab
