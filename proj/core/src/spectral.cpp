#include "conlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "conlab/dynamics.hpp"
#include "conlab/reduction.hpp"

namespace conlab {

namespace {

bool nearly_symmetric(const Eigen::MatrixXd& D) {
  return (D - D.transpose()).norm() <= 1e-12 * std::max(1.0, D.norm());
}

Eigen::VectorXcd sorted_spectrum(const Eigen::MatrixXd& D) {
  const int n = static_cast<int>(D.rows());
  Eigen::VectorXcd ev(n);
  if (nearly_symmetric(D)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(D,
                                                      Eigen::EigenvaluesOnly);
    for (int i = 0; i < n; ++i) ev(i) = es.eigenvalues()(i);
  } else {
    Eigen::EigenSolver<Eigen::MatrixXd> es(D, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success) {
      throw Error("dense eigensolver failed to converge");
    }
    ev = es.eigenvalues();
  }
  std::vector<std::complex<double>> v(ev.data(), ev.data() + n);
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() < b.imag();
  });
  for (int i = 0; i < n; ++i) ev(i) = v[static_cast<std::size_t>(i)];
  return ev;
}

}  // namespace

std::pair<bool, double> classify_convergent(const Eigen::MatrixXd& D) {
  const int n = static_cast<int>(D.rows());
  const ReductionMap& map = default_reduction(n);
  const ReducedMatrix red = reduce(D, map);

  double max_re;
  double max_abs;
  if (nearly_symmetric(D)) {
    // The reduced matrix of a symmetric coupling is symmetric; taking the
    // spectrum from -D directly keeps the full symmetric-solver accuracy.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(-D,
                                                      Eigen::EigenvaluesOnly);
    const Eigen::VectorXd lam = es.eigenvalues();  // ascending
    max_re = -lam(1);  // slowest nonzero mode of D
    max_abs = std::max(std::abs(lam(0)), std::abs(lam(n - 1)));
  } else {
    Eigen::EigenSolver<Eigen::MatrixXd> es(red.D_hat,
                                           /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success) {
      throw Error("dense eigensolver failed to converge");
    }
    max_re = es.eigenvalues().real().maxCoeff();
    max_abs = es.eigenvalues().cwiseAbs().maxCoeff();
  }
  const double threshold = -1e-10 * std::max(1.0, max_abs);
  return {max_re < threshold, -max_re};
}

bool classify_undirected(const TreeCycleDecomposition& dec) {
  const Eigen::MatrixXd q = dec.Q.cast<double>();
  Eigen::MatrixXd m = dec.C1.asDiagonal();
  if (dec.c > 0) {
    m += q.transpose() * dec.C2.asDiagonal() * q;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  const double lambda_min = es.eigenvalues()(0);
  const double lambda_abs_max =
      std::max(std::abs(es.eigenvalues()(0)),
               std::abs(es.eigenvalues()(dec.n - 2)));
  return lambda_min > 1e-10 * std::max(1.0, lambda_abs_max);
}

std::pair<double, double> alpha_rho(const Eigen::MatrixXd& D) {
  const int n = static_cast<int>(D.rows());
  const Eigen::MatrixXd sym = -0.5 * (D + D.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym,
                                                    Eigen::EigenvaluesOnly);
  const Eigen::VectorXd lam = es.eigenvalues();  // ascending
  const double tol = 1e-10 * std::max(1.0, std::max(std::abs(lam(0)),
                                                    std::abs(lam(n - 1))));
  int zero_count = 0;
  for (int i = 0; i < n; ++i) {
    if (std::abs(lam(i)) <= tol) ++zero_count;
  }
  if (zero_count != 1) {
    throw MultipleZeroEVs("alpha_rho: zero eigenvalue is not simple");
  }
  const double alpha = lam(1);
  double rho = 0.0;
  for (int i = 1; i < n; ++i) rho += 1.0 / lam(i);
  return {alpha, rho};
}

double kappa(const TreeCycleDecomposition& dec) {
  const int r = dec.n - 1;
  if (dec.c == 0) return static_cast<double>(r);
  const Eigen::MatrixXd qtq =
      (dec.Q.transpose() * dec.Q).cast<double>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(qtq,
                                                    Eigen::EigenvaluesOnly);
  double trace = 0.0;
  for (int i = 0; i < r; ++i) trace += 1.0 / (1.0 + es.eigenvalues()(i));
  return trace;
}

StabilityBounds stability_bounds(const OrientedNetwork& net,
                                 const TreeCycleDecomposition& dec) {
  const int r = dec.n - 1;
  StabilityBounds bounds;

  const Eigen::MatrixXd tree_gram =
      (dec.H_tilde * dec.H_tilde.transpose()).cast<double>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tree_es(
      tree_gram, Eigen::EigenvaluesOnly);
  const double tree_alpha = tree_es.eigenvalues()(0);
  double tree_rho = 0.0;
  for (int i = 0; i < r; ++i) tree_rho += 1.0 / tree_es.eigenvalues()(i);

  double lambda_min_m = 1.0;
  double trace_inv_m = static_cast<double>(r);
  if (dec.c > 0) {
    const Eigen::MatrixXd qtq = (dec.Q.transpose() * dec.Q).cast<double>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(qtq,
                                                      Eigen::EigenvaluesOnly);
    lambda_min_m = 1.0 + es.eigenvalues()(0);
    trace_inv_m = 0.0;
    for (int i = 0; i < r; ++i) {
      trace_inv_m += 1.0 / (1.0 + es.eigenvalues()(i));
    }
  }

  bounds.alpha_lower = tree_alpha * lambda_min_m;
  // rho = Tr{(H~ H~^T)^{-1} (I + Q^T Q)^{-1}}; bound the trace of the
  // product through each factor in turn.
  bounds.rho_upper =
      std::min(tree_rho / lambda_min_m, trace_inv_m / tree_alpha);

  const CycleStats stats = cycle_stats(dec);
  bounds.kappa_lower = static_cast<double>(r) / (1.0 + stats.mu);
  if (dec.c > 0 && dec.c < r && stats.delta > 0.0) {
    bounds.kappa_lower =
        std::max(bounds.kappa_lower,
                 static_cast<double>(r) -
                     dec.c * (1.0 - 1.0 / stats.delta));
  }
  bounds.kappa_upper = static_cast<double>(r);

  const int d = net.regular_degree();
  if (d >= 1 && net.unit_conductances() && !net.directed()) {
    bounds.alon_boppana = d - 2.0 * std::sqrt(static_cast<double>(d - 1));
    const int diam = net.diameter();
    if (diam >= 1 && net.vertex_count() >= 2) {
      const double ratio = 2.0 * std::log2(double(net.vertex_count())) / diam;
      bounds.diameter_bound = 2.0 * d * ratio * ratio;
    }
  }
  return bounds;
}

double dissipativity_margin(const Eigen::MatrixXd& D_hat) {
  const Eigen::MatrixXd sym = 0.5 * (D_hat + D_hat.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym,
                                                    Eigen::EigenvaluesOnly);
  return -es.eigenvalues()(static_cast<int>(sym.rows()) - 1);
}

double asymptotic_dissipativity_estimate(const CouplingSchedule& schedule,
                                         double T, double dt) {
  if (!(T > 0.0) || !(dt > 0.0) || dt > T) {
    throw InvalidArgument(
        "asymptotic_dissipativity_estimate: need 0 < dt <= T");
  }
  const int n = schedule.dim();
  const ReductionMap& map = default_reduction(n);
  const auto steps = static_cast<long long>(std::ceil(T / dt - 1e-12));
  const double h = T / static_cast<double>(steps);

  auto integrand = [&](double t) {
    const Eigen::MatrixXd d_hat =
        reduce(schedule.coupling_at(t), map).D_hat * schedule.gain();
    return -dissipativity_margin(d_hat);
  };

  double acc = 0.5 * (integrand(0.0) + integrand(T));
  for (long long k = 1; k < steps; ++k) {
    acc += integrand(static_cast<double>(k) * h);
  }
  return acc * h / T;
}

SpectralReport analyze_network(const OrientedNetwork& net) {
  SpectralReport report;
  report.n = net.vertex_count();
  const Eigen::MatrixXd d = net.coupling_matrix();
  report.eigenvalues = sorted_spectrum(d);
  const auto [convergent, alpha] = classify_convergent(d);
  report.convergent = convergent;
  report.alpha = alpha;
  report.margin = dissipativity_margin(reduce(d, default_reduction(report.n)).D_hat);

  const bool symmetric = nearly_symmetric(d);
  if (symmetric && convergent && net.is_connected()) {
    report.rho = alpha_rho(d).second;
  }
  if (!net.directed() && net.is_connected()) {
    const TreeCycleDecomposition dec = spanning_tree_decomposition(net);
    if (net.unit_conductances()) {
      report.kappa = kappa(dec);
      report.bounds = stability_bounds(net, dec);
    }
  }
  return report;
}

}  // namespace conlab
