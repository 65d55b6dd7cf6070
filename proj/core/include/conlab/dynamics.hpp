#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

#include "conlab/errors.hpp"
#include "conlab/reduction.hpp"

namespace conlab {

/**
 * Time-dependent coupling D(t) with gain, noise amplitude and noise loading.
 *
 * The integrated system is  dx = g D(t) x dt + sigma U(t) dw.  Every sampled
 * D(t) must annihilate the ones vector; constant and switching schedules are
 * validated on construction, general schedules at each sample.
 */
class CouplingSchedule {
 public:
  enum class Kind { kConstant, kSwitching, kGeneral };

  static CouplingSchedule constant(const Eigen::MatrixXd& D);
  // Periodic switching with equal dwell: D_first on [2k p, (2k+1) p),
  // D_second on [(2k+1) p, (2k+2) p).
  static CouplingSchedule switching(const Eigen::MatrixXd& D_first,
                                    const Eigen::MatrixXd& D_second,
                                    double dwell);
  static CouplingSchedule from_function(
      int n, std::function<Eigen::MatrixXd(double)> D_of_t);

  CouplingSchedule& with_gain(double gain);
  CouplingSchedule& with_sigma(double sigma);
  CouplingSchedule& with_noise_loading(const Eigen::MatrixXd& U);
  CouplingSchedule& with_noise_loading(
      std::function<Eigen::MatrixXd(double)> U_of_t);

  int dim() const { return n_; }
  Kind kind() const { return kind_; }
  double gain() const { return gain_; }
  double sigma() const { return sigma_; }
  double dwell() const { return dwell_; }
  bool identity_noise() const;
  bool time_varying_noise() const { return static_cast<bool>(U_fn_); }

  Eigen::MatrixXd coupling_at(double t) const;       // D(t), gain not applied
  Eigen::MatrixXd noise_loading_at(double t) const;  // U(t)

  // Largest coupling spectral radius over the schedule segments (sampled at
  // t = 0 for general schedules), gain included.
  double spectral_radius_bound() const;

  // Default integrator step 1e-3 / max(1, spectral_radius_bound()):
  // stiffness scales with the spectral radius of the effective coupling.
  double default_time_step() const;

  const Eigen::MatrixXd& segment(int which) const;  // 0 or 1 (non-general)

 private:
  CouplingSchedule() = default;
  static void check_zero_row_sums(const Eigen::MatrixXd& D);

  Kind kind_ = Kind::kConstant;
  int n_ = 0;
  double gain_ = 1.0;
  double sigma_ = 0.0;
  double dwell_ = 0.0;
  Eigen::MatrixXd D_first_, D_second_;
  std::function<Eigen::MatrixXd(double)> D_fn_;
  Eigen::MatrixXd U_const_;  // empty means identity
  std::function<Eigen::MatrixXd(double)> U_fn_;
};

struct Trajectory {
  Eigen::VectorXd times;
  Eigen::MatrixXd states;               // n x n_frames
  Eigen::VectorXd off_consensus_norm;   // |P x(t)| per frame
  double dt = 0.0;
};

/**
 * Ensemble statistics of the stochastic integrator on a fixed time grid.
 *
 * Aggregates are accumulated in a fixed path order, so results are
 * bit-identical for a given seed regardless of thread count.  Raw per-path
 * states are kept only when requested and small enough to be useful.
 */
struct TrajectoryEnsemble {
  Eigen::VectorXd times;
  double dt = 0.0;
  std::uint64_t seed = 0;
  int n = 0;
  int n_paths = 0;
  Eigen::VectorXd mean_sq;  // E |P x(t)|^2 per frame
  Eigen::VectorXd se_sq;    // Monte Carlo standard error of mean_sq
  std::vector<Eigen::VectorXd> mean_y;  // E[S x(t)]
  std::vector<Eigen::MatrixXd> cov_y;   // sample covariance of S x(t)
  std::vector<Eigen::MatrixXd> frames;  // n x n_paths per frame, optional
  bool stored_paths = false;
};

struct MomentTrajectory {
  Eigen::VectorXd times;
  std::vector<Eigen::VectorXd> mean;  // E[y](t), length n-1
  std::vector<Eigen::MatrixXd> cov;   // V(t), (n-1) x (n-1)
  Eigen::VectorXd second_moment;      // E |P x|^2 = |m|^2 + tr V
  double dt = 0.0;
};

struct SdeOptions {
  int record_points = 161;
  int threads = 1;
  bool store_paths = false;
};

// Deterministic flow of dx = g D(t) x dt.  Constant schedules advance by a
// precomputed matrix exponential; time-varying schedules use the classical
// fourth-order one-step method.  Throws StepInstability past 1e12.
Trajectory integrate_deterministic(const CouplingSchedule& schedule,
                                   const Eigen::VectorXd& x0, double T,
                                   double dt, int record_points = 0);

// Euler-Maruyama ensemble driven by per-(path, step) random streams.
TrajectoryEnsemble integrate_sde(const CouplingSchedule& schedule,
                                 const Eigen::VectorXd& x0, double T,
                                 double dt, int n_paths, std::uint64_t seed,
                                 const SdeOptions& options = {});

// First and second moments of the reduced state y = S x: the exact oracle
// for Monte Carlo validation.  y0 is the reduced initial condition.
MomentTrajectory integrate_moment_odes(const CouplingSchedule& schedule,
                                       const Eigen::VectorXd& y0, double T,
                                       double dt, int record_points = 0);

// Stationary dispersion of a normal, convergent coupling under identity
// noise loading: covariance (sigma^2/2) (-D_hat^s)^{-1} together with the
// scalar limit (sigma^2/2) sum 1/mu_i over the nonzero eigenvalues of -D.
// Throws NotNormal / NotConvergent when the preconditions fail.
std::pair<Eigen::MatrixXd, double> stationary_prediction(
    const Eigen::MatrixXd& D, double sigma);

// Checks E |P x(t)|^2 <= e^{-2 a t} |P x0|^2 + sigma^2 n sup||UU^T|| / (2 a)
// + 5 standard errors at every frame, with a the worst gain-scaled
// dissipativity margin over the horizon.  Throws PreconditionNotDissipative
// when that margin is not positive.
bool uniform_bound_check(const CouplingSchedule& schedule,
                         const TrajectoryEnsemble& ensemble);

// Least-squares exponential rate of a positive decaying signal over the
// window [lo_frac, hi_frac] of the recorded horizon; returns the positive
// decay rate (minus the fitted slope of log values).
double fit_decay_rate(const Eigen::VectorXd& times,
                      const Eigen::VectorXd& values, double lo_frac = 0.5,
                      double hi_frac = 0.95);

// 1e-3 / max(1, spectral radius of D).
double default_time_step(const Eigen::MatrixXd& D);

// |P x| = |x - mean(x) ones|, the off-consensus norm.
double off_consensus_norm(const Eigen::VectorXd& x);

}  // namespace conlab
