#include "conlab/dynamics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "conlab/reduction.hpp"
#include "conlab/rng.hpp"

namespace conlab {
namespace {

// Paths per block: three n x kBlockPaths working buffers stay L1-resident
// for the graph sizes the Monte Carlo runs target.
constexpr int kBlockPaths = 64;
constexpr double kBlowUp = 1e12;

long long step_count(double T, double dt) {
  if (!(T > 0.0) || !(dt > 0.0)) {
    throw InvalidArgument("integrate_sde: need T > 0 and dt > 0");
  }
  return std::max(1LL, static_cast<long long>(std::ceil(T / dt - 1e-12)));
}

std::vector<long long> frame_steps(long long steps, int record_points) {
  if (record_points < 2) record_points = 2;
  const long long stride =
      std::max(1LL, steps / static_cast<long long>(record_points - 1));
  std::vector<long long> frames;
  for (long long k = 0; k <= steps; k += stride) frames.push_back(k);
  if (frames.back() != steps) frames.push_back(steps);
  return frames;
}

// One-step matrix B = I + g dt D in compressed row form; exact zeros of B
// are skipped, which makes sparse couplings cheap without a tolerance.
struct StepMatrix {
  std::vector<int> row_ptr;
  std::vector<int> col;
  std::vector<double> w;
};

StepMatrix compress(const Eigen::MatrixXd& B) {
  const int n = static_cast<int>(B.rows());
  StepMatrix sm;
  sm.row_ptr.assign(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l < n; ++l) {
      if (B(i, l) != 0.0) {
        sm.col.push_back(l);
        sm.w.push_back(B(i, l));
      }
    }
    sm.row_ptr[i + 1] = static_cast<int>(sm.col.size());
  }
  return sm;
}

enum class DriftKind { kOne, kTwo, kDense };
enum class NoiseKind { kNone, kIdentity, kMatrix, kFunction };

}  // namespace

TrajectoryEnsemble integrate_sde(const CouplingSchedule& schedule,
                                 const Eigen::VectorXd& x0, double T,
                                 double dt, int n_paths, std::uint64_t seed,
                                 const SdeOptions& options) {
  const int n = schedule.dim();
  const int r = n - 1;
  if (x0.size() != n) {
    throw InvalidArgument("integrate_sde: x0 has wrong dimension");
  }
  if (n_paths < 1) {
    throw InvalidArgument("integrate_sde: need at least one path");
  }
  const long long steps = step_count(T, dt);
  const std::vector<long long> frames =
      frame_steps(steps, std::max(2, options.record_points));
  const int n_frames = static_cast<int>(frames.size());
  const int n_blocks = (n_paths + kBlockPaths - 1) / kBlockPaths;
  const int n_threads =
      std::clamp(options.threads, 1, std::max(1, n_blocks));

  const double g = schedule.gain();
  const double sigma = schedule.sigma();
  const double noise_scale = sigma * std::sqrt(dt);

  DriftKind drift;
  StepMatrix b_first, b_second;
  switch (schedule.kind()) {
    case CouplingSchedule::Kind::kConstant:
      drift = DriftKind::kOne;
      b_first = compress(Eigen::MatrixXd::Identity(n, n) +
                         g * dt * schedule.segment(0));
      break;
    case CouplingSchedule::Kind::kSwitching:
      drift = DriftKind::kTwo;
      b_first = compress(Eigen::MatrixXd::Identity(n, n) +
                         g * dt * schedule.segment(0));
      b_second = compress(Eigen::MatrixXd::Identity(n, n) +
                          g * dt * schedule.segment(1));
      break;
    case CouplingSchedule::Kind::kGeneral:
    default:
      drift = DriftKind::kDense;
      break;
  }
  const double dwell = schedule.dwell();

  NoiseKind noise;
  std::vector<double> noise_matrix;  // row-major sigma sqrt(dt) U
  if (sigma == 0.0) {
    noise = NoiseKind::kNone;
  } else if (schedule.identity_noise()) {
    noise = NoiseKind::kIdentity;
  } else if (!schedule.time_varying_noise()) {
    noise = NoiseKind::kMatrix;
    const Eigen::MatrixXd u = schedule.noise_loading_at(0.0);
    noise_matrix.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l)
        noise_matrix[static_cast<std::size_t>(i) * n + l] =
            noise_scale * u(i, l);
  } else {
    noise = NoiseKind::kFunction;
  }

  const ReductionMap& map = default_reduction(n);
  std::vector<double> s_flat(static_cast<std::size_t>(r) * n);
  for (int i = 0; i < r; ++i)
    for (int l = 0; l < n; ++l)
      s_flat[static_cast<std::size_t>(i) * n + l] = map.S(i, l);

  TrajectoryEnsemble out;
  out.dt = dt;
  out.seed = seed;
  out.n = n;
  out.n_paths = n_paths;
  out.stored_paths = options.store_paths;
  out.times.resize(n_frames);
  for (int f = 0; f < n_frames; ++f) out.times(f) = frames[f] * dt;
  if (options.store_paths) {
    out.frames.assign(n_frames, Eigen::MatrixXd::Zero(n, n_paths));
  }

  // Per-block, per-frame partial sums, merged in block order afterwards so
  // the result is independent of how blocks land on threads.
  const std::size_t per_frame = 2 + static_cast<std::size_t>(r) +
                                static_cast<std::size_t>(r) * r;
  const std::size_t per_block = per_frame * n_frames;
  std::vector<double> partials(per_block * n_blocks, 0.0);

  std::atomic<int> next_block{0};
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  const std::uint64_t seed_key = RandomStream::stage_seed(seed);

  auto worker = [&]() {
    std::vector<double> X(static_cast<std::size_t>(n) * kBlockPaths);
    std::vector<double> Xn(static_cast<std::size_t>(n) * kBlockPaths);
    std::vector<double> Xi(static_cast<std::size_t>(n) * kBlockPaths, 0.0);
    std::vector<double> tmp(n), yv(r);
    std::vector<std::uint64_t> path_keys(kBlockPaths);
    std::vector<double> dense_b;
    std::vector<double> dense_n;
    if (drift == DriftKind::kDense)
      dense_b.resize(static_cast<std::size_t>(n) * n);
    if (noise == NoiseKind::kFunction)
      dense_n.resize(static_cast<std::size_t>(n) * n);

    try {
      for (;;) {
        const int b = next_block.fetch_add(1);
        if (b >= n_blocks || failed.load()) break;
        const int p0 = b * kBlockPaths;
        const int pc = std::min(kBlockPaths, n_paths - p0);

        for (int i = 0; i < n; ++i) {
          std::fill(X.begin() + static_cast<std::size_t>(i) * kBlockPaths,
                    X.begin() + static_cast<std::size_t>(i + 1) * kBlockPaths,
                    x0(i));
        }
        for (int j = 0; j < kBlockPaths; ++j) {
          path_keys[j] = RandomStream::stage_stream(
              seed_key, static_cast<std::uint64_t>(p0 + j));
        }
        double* acc = partials.data() + per_block * b;
        std::size_t next_frame = 0;

        auto record = [&](long long k) {
          if (next_frame >= frames.size() || frames[next_frame] != k) return;
          double* slot = acc + per_frame * next_frame;
          for (int j = 0; j < pc; ++j) {
            double amax = 0.0;
            for (int l = 0; l < n; ++l) {
              const double v = X[static_cast<std::size_t>(l) * kBlockPaths + j];
              tmp[l] = v;
              amax = std::max(amax, std::abs(v));
            }
            if (!(amax <= kBlowUp)) {
              throw StepInstability("integrate_sde: path " +
                                    std::to_string(p0 + j) + " blew up at t=" +
                                    std::to_string(k * dt));
            }
            double q = 0.0;
            for (int i = 0; i < r; ++i) {
              const double* srow = s_flat.data() + static_cast<std::size_t>(i) * n;
              double acc_y = 0.0;
              for (int l = 0; l < n; ++l) acc_y += srow[l] * tmp[l];
              yv[i] = acc_y;
              q += acc_y * acc_y;
            }
            slot[0] += q;
            slot[1] += q * q;
            for (int i = 0; i < r; ++i) slot[2 + i] += yv[i];
            double* yy = slot + 2 + r;
            for (int i = 0; i < r; ++i) {
              for (int l = 0; l < r; ++l) {
                yy[static_cast<std::size_t>(i) * r + l] += yv[i] * yv[l];
              }
            }
            if (options.store_paths) {
              std::copy(tmp.begin(), tmp.end(),
                        out.frames[next_frame].data() +
                            static_cast<std::size_t>(p0 + j) * n);
            }
          }
          ++next_frame;
        };

        record(0);
        for (long long k = 0; k < steps && !failed.load(); ++k) {
          const double t = static_cast<double>(k) * dt;

          // Identity loading writes the scaled increments straight into the
          // next-state buffer; the drift pass then accumulates on top.
          if (noise == NoiseKind::kIdentity) {
            for (int j = 0; j < kBlockPaths; ++j) {
              RandomStream rs = RandomStream::from_stream_key(
                  path_keys[j], static_cast<std::uint64_t>(k));
              rs.fill_normal(tmp.data(), n);
              for (int i = 0; i < n; ++i) {
                Xn[static_cast<std::size_t>(i) * kBlockPaths + j] =
                    noise_scale * tmp[i];
              }
            }
          } else if (noise != NoiseKind::kNone) {
            for (int j = 0; j < pc; ++j) {
              RandomStream rs = RandomStream::from_stream_key(
                  path_keys[j], static_cast<std::uint64_t>(k));
              rs.fill_normal(tmp.data(), n);
              for (int i = 0; i < n; ++i) {
                Xi[static_cast<std::size_t>(i) * kBlockPaths + j] = tmp[i];
              }
            }
          }

          const StepMatrix* bm = nullptr;
          if (drift == DriftKind::kOne) {
            bm = &b_first;
          } else if (drift == DriftKind::kTwo) {
            const long long slot_idx =
                static_cast<long long>(std::floor(t / dwell + 1e-12));
            bm = (slot_idx % 2 == 0) ? &b_first : &b_second;
          } else {
            const Eigen::MatrixXd d = schedule.coupling_at(t);
            for (int i = 0; i < n; ++i) {
              for (int l = 0; l < n; ++l) {
                dense_b[static_cast<std::size_t>(i) * n + l] =
                    (i == l ? 1.0 : 0.0) + g * dt * d(i, l);
              }
            }
          }

          for (int i = 0; i < n; ++i) {
            double* dst = Xn.data() + static_cast<std::size_t>(i) * kBlockPaths;
            if (noise != NoiseKind::kIdentity) {
              std::fill(dst, dst + kBlockPaths, 0.0);
            }
            if (bm != nullptr) {
              for (int idx = bm->row_ptr[i]; idx < bm->row_ptr[i + 1]; ++idx) {
                const double wv = bm->w[idx];
                const double* src =
                    X.data() +
                    static_cast<std::size_t>(bm->col[idx]) * kBlockPaths;
                for (int j = 0; j < kBlockPaths; ++j) dst[j] += wv * src[j];
              }
            } else {
              const double* brow =
                  dense_b.data() + static_cast<std::size_t>(i) * n;
              for (int l = 0; l < n; ++l) {
                const double wv = brow[l];
                if (wv == 0.0) continue;
                const double* src =
                    X.data() + static_cast<std::size_t>(l) * kBlockPaths;
                for (int j = 0; j < kBlockPaths; ++j) dst[j] += wv * src[j];
              }
            }
          }

          if (noise == NoiseKind::kMatrix || noise == NoiseKind::kFunction) {
            const double* nm = noise_matrix.data();
            if (noise == NoiseKind::kFunction) {
              const Eigen::MatrixXd u = schedule.noise_loading_at(t);
              for (int i = 0; i < n; ++i)
                for (int l = 0; l < n; ++l)
                  dense_n[static_cast<std::size_t>(i) * n + l] =
                      noise_scale * u(i, l);
              nm = dense_n.data();
            }
            for (int i = 0; i < n; ++i) {
              double* dst =
                  Xn.data() + static_cast<std::size_t>(i) * kBlockPaths;
              const double* nrow = nm + static_cast<std::size_t>(i) * n;
              for (int l = 0; l < n; ++l) {
                const double c = nrow[l];
                if (c == 0.0) continue;
                const double* src =
                    Xi.data() + static_cast<std::size_t>(l) * kBlockPaths;
                for (int j = 0; j < kBlockPaths; ++j) dst[j] += c * src[j];
              }
            }
          }

          X.swap(Xn);
          record(k + 1);
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
      failed.store(true);
    }
  };

  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  out.mean_sq.resize(n_frames);
  out.se_sq.resize(n_frames);
  out.mean_y.assign(n_frames, Eigen::VectorXd::Zero(r));
  out.cov_y.assign(n_frames, Eigen::MatrixXd::Zero(r, r));
  const double P = static_cast<double>(n_paths);
  for (int f = 0; f < n_frames; ++f) {
    double sum_q = 0.0, sum_q2 = 0.0;
    Eigen::VectorXd sum_y = Eigen::VectorXd::Zero(r);
    Eigen::MatrixXd sum_yy = Eigen::MatrixXd::Zero(r, r);
    for (int b = 0; b < n_blocks; ++b) {
      const double* slot = partials.data() + per_block * b + per_frame * f;
      sum_q += slot[0];
      sum_q2 += slot[1];
      for (int i = 0; i < r; ++i) sum_y(i) += slot[2 + i];
      const double* yy = slot + 2 + r;
      for (int i = 0; i < r; ++i)
        for (int l = 0; l < r; ++l)
          sum_yy(i, l) += yy[static_cast<std::size_t>(i) * r + l];
    }
    const double m = sum_q / P;
    out.mean_sq(f) = m;
    if (n_paths > 1) {
      const double var = std::max(0.0, (sum_q2 - P * m * m) / (P - 1.0));
      out.se_sq(f) = std::sqrt(var / P);
      out.mean_y[f] = sum_y / P;
      out.cov_y[f] =
          (sum_yy - P * (sum_y / P) * (sum_y / P).transpose()) / (P - 1.0);
    } else {
      out.se_sq(f) = 0.0;
      out.mean_y[f] = sum_y;
      out.cov_y[f].setZero();
    }
  }
  return out;
}

}  // namespace conlab
