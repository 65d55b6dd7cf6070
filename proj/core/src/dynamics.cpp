#include "conlab/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "conlab/spectral.hpp"

namespace conlab {

namespace {

double spectral_radius(const Eigen::MatrixXd& M) {
  if (M.rows() == 0) return 0.0;
  if ((M - M.transpose()).norm() <= 1e-12 * std::max(1.0, M.norm())) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M,
                                                      Eigen::EigenvaluesOnly);
    return std::max(std::abs(es.eigenvalues()(0)),
                    std::abs(es.eigenvalues()(static_cast<int>(M.rows()) - 1)));
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(M, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    throw Error("dense eigensolver failed to converge");
  }
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

long long step_count(double T, double dt) {
  if (!(T > 0.0) || !(dt > 0.0)) {
    throw InvalidArgument("integrator: need T > 0 and dt > 0");
  }
  return std::max(1LL, static_cast<long long>(std::ceil(T / dt - 1e-12)));
}

// Frame step indices: every `stride` steps plus the final step.
std::vector<long long> frame_steps(long long steps, int record_points) {
  if (record_points < 2) record_points = 2;
  const long long stride =
      std::max(1LL, steps / static_cast<long long>(record_points - 1));
  std::vector<long long> frames;
  for (long long k = 0; k <= steps; k += stride) frames.push_back(k);
  if (frames.back() != steps) frames.push_back(steps);
  return frames;
}

constexpr double kBlowUp = 1e12;

}  // namespace

void CouplingSchedule::check_zero_row_sums(const Eigen::MatrixXd& D) {
  if (D.rows() != D.cols() || D.rows() < 2) {
    throw InvalidArgument("schedule: coupling matrix must be square, n >= 2");
  }
  const int n = static_cast<int>(D.rows());
  const double err = (D * Eigen::VectorXd::Ones(n)).norm();
  if (err > 1e-10 * std::max(1.0, D.norm()) * std::sqrt(double(n))) {
    throw NotZeroRowSum("schedule: coupling matrix must annihilate ones");
  }
}

CouplingSchedule CouplingSchedule::constant(const Eigen::MatrixXd& D) {
  check_zero_row_sums(D);
  CouplingSchedule s;
  s.kind_ = Kind::kConstant;
  s.n_ = static_cast<int>(D.rows());
  s.D_first_ = D;
  return s;
}

CouplingSchedule CouplingSchedule::switching(const Eigen::MatrixXd& D_first,
                                             const Eigen::MatrixXd& D_second,
                                             double dwell) {
  check_zero_row_sums(D_first);
  check_zero_row_sums(D_second);
  if (D_first.rows() != D_second.rows()) {
    throw InvalidArgument("schedule: switching matrices must share dimension");
  }
  if (!(dwell > 0.0)) {
    throw InvalidArgument("schedule: dwell time must be positive");
  }
  CouplingSchedule s;
  s.kind_ = Kind::kSwitching;
  s.n_ = static_cast<int>(D_first.rows());
  s.D_first_ = D_first;
  s.D_second_ = D_second;
  s.dwell_ = dwell;
  return s;
}

CouplingSchedule CouplingSchedule::from_function(
    int n, std::function<Eigen::MatrixXd(double)> D_of_t) {
  if (n < 2) throw InvalidArgument("schedule: n must be >= 2");
  if (!D_of_t) throw InvalidArgument("schedule: missing coupling function");
  CouplingSchedule s;
  s.kind_ = Kind::kGeneral;
  s.n_ = n;
  s.D_fn_ = std::move(D_of_t);
  check_zero_row_sums(s.D_fn_(0.0));
  return s;
}

CouplingSchedule& CouplingSchedule::with_gain(double gain) {
  if (!(gain >= 0.0)) throw InvalidArgument("schedule: gain must be >= 0");
  gain_ = gain;
  return *this;
}

CouplingSchedule& CouplingSchedule::with_sigma(double sigma) {
  if (!(sigma >= 0.0)) throw InvalidArgument("schedule: sigma must be >= 0");
  sigma_ = sigma;
  return *this;
}

CouplingSchedule& CouplingSchedule::with_noise_loading(
    const Eigen::MatrixXd& U) {
  if (U.rows() != n_ || U.cols() != n_) {
    throw InvalidArgument("schedule: noise loading must be n x n");
  }
  U_const_ = U;
  U_fn_ = nullptr;
  return *this;
}

CouplingSchedule& CouplingSchedule::with_noise_loading(
    std::function<Eigen::MatrixXd(double)> U_of_t) {
  if (!U_of_t) throw InvalidArgument("schedule: missing noise function");
  U_fn_ = std::move(U_of_t);
  U_const_.resize(0, 0);
  return *this;
}

bool CouplingSchedule::identity_noise() const {
  if (U_fn_) return false;
  if (U_const_.size() == 0) return true;
  return U_const_.isIdentity(0.0);
}

Eigen::MatrixXd CouplingSchedule::coupling_at(double t) const {
  switch (kind_) {
    case Kind::kConstant:
      return D_first_;
    case Kind::kSwitching: {
      const long long slot =
          static_cast<long long>(std::floor(t / dwell_ + 1e-12));
      return (slot % 2 == 0) ? D_first_ : D_second_;
    }
    case Kind::kGeneral: {
      Eigen::MatrixXd d = D_fn_(t);
      check_zero_row_sums(d);
      return d;
    }
  }
  throw Error("unreachable");
}

Eigen::MatrixXd CouplingSchedule::noise_loading_at(double t) const {
  if (U_fn_) return U_fn_(t);
  if (U_const_.size() != 0) return U_const_;
  return Eigen::MatrixXd::Identity(n_, n_);
}

const Eigen::MatrixXd& CouplingSchedule::segment(int which) const {
  if (kind_ == Kind::kGeneral) {
    throw InvalidArgument("schedule: general schedules have no fixed segments");
  }
  return (which == 0) ? D_first_ : D_second_;
}

double CouplingSchedule::spectral_radius_bound() const {
  double radius = 0.0;
  switch (kind_) {
    case Kind::kConstant:
      radius = spectral_radius(D_first_);
      break;
    case Kind::kSwitching:
      radius = std::max(spectral_radius(D_first_), spectral_radius(D_second_));
      break;
    case Kind::kGeneral:
      radius = spectral_radius(D_fn_(0.0));
      break;
  }
  return gain_ * radius;
}

double CouplingSchedule::default_time_step() const {
  return 1e-3 / std::max(1.0, spectral_radius_bound());
}

double default_time_step(const Eigen::MatrixXd& D) {
  return 1e-3 / std::max(1.0, spectral_radius(D));
}

double off_consensus_norm(const Eigen::VectorXd& x) {
  const double mean = x.mean();
  return (x.array() - mean).matrix().norm();
}

Trajectory integrate_deterministic(const CouplingSchedule& schedule,
                                   const Eigen::VectorXd& x0, double T,
                                   double dt, int record_points) {
  const int n = schedule.dim();
  if (x0.size() != n) {
    throw InvalidArgument("integrate_deterministic: x0 has wrong dimension");
  }
  const long long steps = step_count(T, dt);
  if (record_points <= 0) {
    record_points = static_cast<int>(std::min<long long>(steps + 1, 2001));
  }
  const std::vector<long long> frames = frame_steps(steps, record_points);

  Trajectory traj;
  traj.dt = dt;
  traj.times.resize(static_cast<int>(frames.size()));
  traj.states.resize(n, static_cast<int>(frames.size()));
  traj.off_consensus_norm.resize(static_cast<int>(frames.size()));

  Eigen::VectorXd x = x0;
  std::size_t next_frame = 0;
  auto record = [&](long long k) {
    if (next_frame < frames.size() && frames[next_frame] == k) {
      if (!x.allFinite() || x.cwiseAbs().maxCoeff() > kBlowUp) {
        throw StepInstability("integrate_deterministic: state blew up at t=" +
                              std::to_string(k * dt));
      }
      const int f = static_cast<int>(next_frame);
      traj.times(f) = static_cast<double>(k) * dt;
      traj.states.col(f) = x;
      traj.off_consensus_norm(f) = off_consensus_norm(x);
      ++next_frame;
    }
  };

  if (schedule.kind() == CouplingSchedule::Kind::kConstant) {
    const Eigen::MatrixXd propagator =
        (dt * schedule.gain() * schedule.segment(0)).exp();
    record(0);
    for (long long k = 0; k < steps; ++k) {
      x = propagator * x;
      record(k + 1);
    }
  } else {
    Eigen::VectorXd k1(n), k2(n), k3(n), k4(n);
    record(0);
    for (long long k = 0; k < steps; ++k) {
      const double t = static_cast<double>(k) * dt;
      const double g = schedule.gain();
      const Eigen::MatrixXd d1 = schedule.coupling_at(t);
      const Eigen::MatrixXd d2 = schedule.coupling_at(t + 0.5 * dt);
      const Eigen::MatrixXd d3 = schedule.coupling_at(t + dt);
      k1.noalias() = g * (d1 * x);
      k2.noalias() = g * (d2 * (x + 0.5 * dt * k1));
      k3.noalias() = g * (d2 * (x + 0.5 * dt * k2));
      k4.noalias() = g * (d3 * (x + dt * k3));
      x += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      record(k + 1);
    }
  }
  return traj;
}

MomentTrajectory integrate_moment_odes(const CouplingSchedule& schedule,
                                       const Eigen::VectorXd& y0, double T,
                                       double dt, int record_points) {
  const int n = schedule.dim();
  const int r = n - 1;
  if (y0.size() != r) {
    throw InvalidArgument("integrate_moment_odes: y0 must have length n-1");
  }
  const long long steps = step_count(T, dt);
  if (record_points <= 0) {
    record_points = static_cast<int>(std::min<long long>(steps + 1, 1001));
  }
  const std::vector<long long> frames = frame_steps(steps, record_points);
  const ReductionMap& map = default_reduction(n);
  const double g = schedule.gain();
  const double s2 = schedule.sigma() * schedule.sigma();

  const bool constant_coupling =
      schedule.kind() == CouplingSchedule::Kind::kConstant;
  const Eigen::MatrixXd d_hat_const =
      constant_coupling
          ? Eigen::MatrixXd(g * reduce(schedule.segment(0), map).D_hat)
          : Eigen::MatrixXd();
  Eigen::MatrixXd d_hat_second;
  if (schedule.kind() == CouplingSchedule::Kind::kSwitching) {
    d_hat_second = g * reduce(schedule.segment(1), map).D_hat;
  }
  Eigen::MatrixXd d_hat_first;
  if (schedule.kind() == CouplingSchedule::Kind::kSwitching) {
    d_hat_first = g * reduce(schedule.segment(0), map).D_hat;
  }

  auto reduced_at = [&](double t) -> Eigen::MatrixXd {
    switch (schedule.kind()) {
      case CouplingSchedule::Kind::kConstant:
        return d_hat_const;
      case CouplingSchedule::Kind::kSwitching: {
        const long long slot =
            static_cast<long long>(std::floor(t / schedule.dwell() + 1e-12));
        return (slot % 2 == 0) ? d_hat_first : d_hat_second;
      }
      case CouplingSchedule::Kind::kGeneral:
        return g * reduce(schedule.coupling_at(t), map).D_hat;
    }
    throw Error("unreachable");
  };

  const bool constant_noise = !schedule.time_varying_noise();
  auto forcing_at = [&](double t) -> Eigen::MatrixXd {
    const Eigen::MatrixXd u = schedule.noise_loading_at(t);
    return s2 * (map.S * u) * (map.S * u).transpose();
  };
  Eigen::MatrixXd forcing_const;
  if (constant_noise) forcing_const = forcing_at(0.0);

  MomentTrajectory mt;
  mt.dt = dt;
  mt.times.resize(static_cast<int>(frames.size()));
  mt.second_moment.resize(static_cast<int>(frames.size()));
  mt.mean.reserve(frames.size());
  mt.cov.reserve(frames.size());

  Eigen::VectorXd m = y0;
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(r, r);
  std::size_t next_frame = 0;
  auto record = [&](long long k) {
    if (next_frame < frames.size() && frames[next_frame] == k) {
      if (!m.allFinite() || !v.allFinite() ||
          v.cwiseAbs().maxCoeff() > kBlowUp) {
        throw StepInstability("integrate_moment_odes: moments blew up at t=" +
                              std::to_string(k * dt));
      }
      const int f = static_cast<int>(next_frame);
      mt.times(f) = static_cast<double>(k) * dt;
      mt.mean.push_back(m);
      mt.cov.push_back(v);
      mt.second_moment(f) = m.squaredNorm() + v.trace();
      ++next_frame;
    }
  };

  Eigen::MatrixXd a1, a2, a3;
  Eigen::MatrixXd f1, f2, f3;
  Eigen::VectorXd km1(r), km2(r), km3(r), km4(r);
  Eigen::MatrixXd kv1(r, r), kv2(r, r), kv3(r, r), kv4(r, r);

  record(0);
  for (long long k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) * dt;
    a1 = reduced_at(t);
    a2 = reduced_at(t + 0.5 * dt);
    a3 = reduced_at(t + dt);
    if (constant_noise) {
      f1 = forcing_const;
      f2 = forcing_const;
      f3 = forcing_const;
    } else {
      f1 = forcing_at(t);
      f2 = forcing_at(t + 0.5 * dt);
      f3 = forcing_at(t + dt);
    }

    km1.noalias() = a1 * m;
    kv1.noalias() = a1 * v;
    kv1 += kv1.transpose().eval();
    kv1 += f1;

    Eigen::VectorXd m_mid = m + 0.5 * dt * km1;
    Eigen::MatrixXd v_mid = v + 0.5 * dt * kv1;
    km2.noalias() = a2 * m_mid;
    kv2.noalias() = a2 * v_mid;
    kv2 += kv2.transpose().eval();
    kv2 += f2;

    m_mid = m + 0.5 * dt * km2;
    v_mid = v + 0.5 * dt * kv2;
    km3.noalias() = a2 * m_mid;
    kv3.noalias() = a2 * v_mid;
    kv3 += kv3.transpose().eval();
    kv3 += f2;

    m_mid = m + dt * km3;
    v_mid = v + dt * kv3;
    km4.noalias() = a3 * m_mid;
    kv4.noalias() = a3 * v_mid;
    kv4 += kv4.transpose().eval();
    kv4 += f3;

    m += (dt / 6.0) * (km1 + 2.0 * km2 + 2.0 * km3 + km4);
    v += (dt / 6.0) * (kv1 + 2.0 * kv2 + 2.0 * kv3 + kv4);
    v = 0.5 * (v + v.transpose()).eval();
    record(k + 1);
  }
  return mt;
}

std::pair<Eigen::MatrixXd, double> stationary_prediction(
    const Eigen::MatrixXd& D, double sigma) {
  const int n = static_cast<int>(D.rows());
  const double scale = std::max(1e-300, D.norm());
  const double commutator =
      (D * D.transpose() - D.transpose() * D).norm();
  if (commutator > 1e-8 * scale * scale) {
    throw NotNormal("stationary_prediction: coupling matrix is not normal");
  }
  const ReductionMap& map = default_reduction(n);
  const Eigen::MatrixXd d_hat = reduce(D, map).D_hat;
  const Eigen::MatrixXd sym = -0.5 * (d_hat + d_hat.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  if (es.eigenvalues()(0) <= 1e-10 * std::max(1.0, sym.norm())) {
    throw NotConvergent("stationary_prediction: coupling is not dissipative");
  }
  Eigen::VectorXd inv = es.eigenvalues().cwiseInverse();
  const Eigen::MatrixXd cov = 0.5 * sigma * sigma * es.eigenvectors() *
                              inv.asDiagonal() *
                              es.eigenvectors().transpose();

  // Scalar limit from the nonzero spectrum of the symmetric part of -D;
  // for normal couplings these are the real parts of the nonzero spectrum.
  const Eigen::MatrixXd full_sym = -0.5 * (D + D.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> fes(full_sym,
                                                     Eigen::EigenvaluesOnly);
  double second_moment = 0.0;
  for (int i = 1; i < n; ++i) {
    second_moment += 0.5 * sigma * sigma / fes.eigenvalues()(i);
  }
  return {cov, second_moment};
}

bool uniform_bound_check(const CouplingSchedule& schedule,
                         const TrajectoryEnsemble& ensemble) {
  const int n = schedule.dim();
  const ReductionMap& map = default_reduction(n);
  const double g = schedule.gain();

  double worst_margin = std::numeric_limits<double>::infinity();
  double sup_noise = 0.0;
  auto margin_at = [&](double t) {
    return dissipativity_margin(
        Eigen::MatrixXd(g * reduce(schedule.coupling_at(t), map).D_hat));
  };
  auto noise_at = [&](double t) {
    const Eigen::MatrixXd uut =
        schedule.noise_loading_at(t) * schedule.noise_loading_at(t).transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(uut,
                                                      Eigen::EigenvaluesOnly);
    return es.eigenvalues()(n - 1);
  };

  switch (schedule.kind()) {
    case CouplingSchedule::Kind::kConstant:
      worst_margin = margin_at(0.0);
      break;
    case CouplingSchedule::Kind::kSwitching:
      worst_margin = std::min(margin_at(0.0), margin_at(schedule.dwell()));
      break;
    case CouplingSchedule::Kind::kGeneral:
      for (int f = 0; f < ensemble.times.size(); ++f) {
        worst_margin = std::min(worst_margin, margin_at(ensemble.times(f)));
      }
      break;
  }
  if (!(worst_margin > 1e-12)) {
    throw PreconditionNotDissipative(
        "uniform_bound_check: schedule is not uniformly dissipative");
  }

  if (schedule.identity_noise()) {
    sup_noise = 1.0;
  } else {
    for (int f = 0; f < ensemble.times.size(); ++f) {
      sup_noise = std::max(sup_noise, noise_at(ensemble.times(f)));
    }
  }

  const double sigma2 = schedule.sigma() * schedule.sigma();
  const double plateau = sigma2 * n * sup_noise / (2.0 * worst_margin);
  const double initial_sq =
      ensemble.mean_sq.size() > 0 ? ensemble.mean_sq(0) : 0.0;
  for (int f = 0; f < ensemble.times.size(); ++f) {
    const double decay = std::exp(-2.0 * worst_margin * ensemble.times(f));
    const double bound = decay * initial_sq + plateau * (1.0 - decay) +
                         5.0 * ensemble.se_sq(f);
    if (ensemble.mean_sq(f) > bound) return false;
  }
  return true;
}

double fit_decay_rate(const Eigen::VectorXd& times,
                      const Eigen::VectorXd& values, double lo_frac,
                      double hi_frac) {
  if (times.size() != values.size() || times.size() < 2) {
    throw InvalidArgument("fit_decay_rate: need matching times and values");
  }
  if (!(lo_frac >= 0.0) || !(hi_frac <= 1.0) || !(lo_frac < hi_frac)) {
    throw InvalidArgument("fit_decay_rate: need 0 <= lo < hi <= 1");
  }
  const double t_end = times(times.size() - 1);
  const double t_lo = lo_frac * t_end;
  const double t_hi = hi_frac * t_end;
  double sum_t = 0.0, sum_y = 0.0, sum_tt = 0.0, sum_ty = 0.0;
  int count = 0;
  for (int i = 0; i < times.size(); ++i) {
    const double t = times(i);
    const double v = values(i);
    if (t < t_lo || t > t_hi) continue;
    if (!(v > 1e-280) || !std::isfinite(v)) continue;
    const double y = std::log(v);
    sum_t += t;
    sum_y += y;
    sum_tt += t * t;
    sum_ty += t * y;
    ++count;
  }
  if (count < 2) {
    throw InvalidArgument("fit_decay_rate: too few usable samples in window");
  }
  const double denom = count * sum_tt - sum_t * sum_t;
  if (std::abs(denom) < 1e-30) {
    throw InvalidArgument("fit_decay_rate: degenerate time window");
  }
  const double slope = (count * sum_ty - sum_t * sum_y) / denom;
  return -slope;
}

}  // namespace conlab
