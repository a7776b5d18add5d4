#include "dirac_edge/propagator.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <mutex>

namespace dirac_edge {

namespace {

// FFTW's planner is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

std::vector<double> fourier_wavenumbers(int n, double dx) {
  std::vector<double> k(n);
  const double base = 2.0 * M_PI / (n * dx);
  for (int i = 0; i < n; ++i) {
    k[i] = base * (i < n / 2 ? i : i - n);
  }
  return k;
}

}  // namespace

struct SplitStepPlan::Impl {
  fftw_complex* buf1 = nullptr;
  fftw_complex* buf2 = nullptr;
  fftw_plan fwd1{}, bwd1{}, fwd2{}, bwd2{};
  std::vector<double> k1, k2;
  // derivative flow tables for the plan dt: cos|k|dt and sin(|k|dt)*k/|k|
  std::vector<double> c, s1, s2;
  // mass rotation tables for the half step
  std::vector<double> cmh, smh;

  ~Impl() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (fwd1) fftw_destroy_plan(fwd1);
    if (bwd1) fftw_destroy_plan(bwd1);
    if (fwd2) fftw_destroy_plan(fwd2);
    if (bwd2) fftw_destroy_plan(bwd2);
    if (buf1) fftw_free(buf1);
    if (buf2) fftw_free(buf2);
  }
};

SplitStepPlan::SplitStepPlan(const GridSpec& grid, std::vector<double> mass,
                             double dt)
    : grid_(grid), mass_(std::move(mass)), dt_(dt), impl_(new Impl) {
  if (mass_.size() != grid_.size()) {
    throw std::invalid_argument("mass array does not match grid");
  }
  const std::size_t n = grid_.size();
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    impl_->buf1 = fftw_alloc_complex(n);
    impl_->buf2 = fftw_alloc_complex(n);
    // storage is x1-fastest, so the FFT shape is (n2, n1)
    impl_->fwd1 = fftw_plan_dft_2d(grid_.n2, grid_.n1, impl_->buf1, impl_->buf1,
                                   FFTW_FORWARD, FFTW_ESTIMATE);
    impl_->bwd1 = fftw_plan_dft_2d(grid_.n2, grid_.n1, impl_->buf1, impl_->buf1,
                                   FFTW_BACKWARD, FFTW_ESTIMATE);
    impl_->fwd2 = fftw_plan_dft_2d(grid_.n2, grid_.n1, impl_->buf2, impl_->buf2,
                                   FFTW_FORWARD, FFTW_ESTIMATE);
    impl_->bwd2 = fftw_plan_dft_2d(grid_.n2, grid_.n1, impl_->buf2, impl_->buf2,
                                   FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  impl_->k1 = fourier_wavenumbers(grid_.n1, grid_.dx1());
  impl_->k2 = fourier_wavenumbers(grid_.n2, grid_.dx2());

  impl_->c.resize(n);
  impl_->s1.resize(n);
  impl_->s2.resize(n);
  for (int i2 = 0; i2 < grid_.n2; ++i2) {
    for (int i1 = 0; i1 < grid_.n1; ++i1) {
      const double ka = impl_->k1[i1], kb = impl_->k2[i2];
      const double w = std::hypot(ka, kb);
      const std::size_t idx = grid_.index(i1, i2);
      impl_->c[idx] = std::cos(w * dt_);
      const double s = w > 0 ? std::sin(w * dt_) / w : 0.0;
      impl_->s1[idx] = s * ka;
      impl_->s2[idx] = s * kb;
    }
  }
  impl_->cmh.resize(n);
  impl_->smh.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    impl_->cmh[i] = std::cos(mass_[i] * dt_ / 2);
    impl_->smh[i] = std::sin(mass_[i] * dt_ / 2);
  }
}

SplitStepPlan::~SplitStepPlan() = default;

void SplitStepPlan::derivative_step_inplace(SpinorField& f, double tau) const {
  const std::size_t n = grid_.size();
  std::memcpy(impl_->buf1, f.beta1.data(), n * sizeof(fftw_complex));
  std::memcpy(impl_->buf2, f.beta2.data(), n * sizeof(fftw_complex));
  fftw_execute(impl_->fwd1);
  fftw_execute(impl_->fwd2);

  auto* b1 = reinterpret_cast<Complex*>(impl_->buf1);
  auto* b2 = reinterpret_cast<Complex*>(impl_->buf2);
  const double scale = 1.0 / static_cast<double>(n);
  const bool cached = (tau == dt_);
  for (int i2 = 0; i2 < grid_.n2; ++i2) {
    for (int i1 = 0; i1 < grid_.n1; ++i1) {
      const std::size_t idx = grid_.index(i1, i2);
      double c, sa, sb;
      if (cached) {
        c = impl_->c[idx];
        sa = impl_->s1[idx];
        sb = impl_->s2[idx];
      } else {
        const double ka = impl_->k1[i1], kb = impl_->k2[i2];
        const double w = std::hypot(ka, kb);
        c = std::cos(w * tau);
        const double s = w > 0 ? std::sin(w * tau) / w : 0.0;
        sa = s * ka;
        sb = s * kb;
      }
      // exp(i tau A_k) = cos I + i sin A_k/|k|, A_k = [[-k2,-ik1],[ik1,k2]]
      const Complex u1 = b1[idx], u2 = b2[idx];
      b1[idx] = scale * (Complex{c, -sb} * u1 + sa * u2);
      b2[idx] = scale * (-sa * u1 + Complex{c, sb} * u2);
    }
  }
  fftw_execute(impl_->bwd1);
  fftw_execute(impl_->bwd2);
  std::memcpy(static_cast<void*>(f.beta1.data()), impl_->buf1,
              n * sizeof(fftw_complex));
  std::memcpy(static_cast<void*>(f.beta2.data()), impl_->buf2,
              n * sizeof(fftw_complex));
}

void SplitStepPlan::mass_step_inplace(SpinorField& f, double tau) const {
  const std::size_t n = grid_.size();
  const bool cached = (tau == dt_ / 2);
  for (std::size_t i = 0; i < n; ++i) {
    double c, s;
    if (cached) {
      c = impl_->cmh[i];
      s = impl_->smh[i];
    } else {
      c = std::cos(mass_[i] * tau);
      s = std::sin(mass_[i] * tau);
    }
    // exp(i tau m sigma_x)
    const Complex u1 = f.beta1[i], u2 = f.beta2[i];
    f.beta1[i] = c * u1 + Complex{0.0, s} * u2;
    f.beta2[i] = Complex{0.0, s} * u1 + c * u2;
  }
}

void SplitStepPlan::strang_step_inplace(SpinorField& f) const {
  mass_step_inplace(f, dt_ / 2);
  derivative_step_inplace(f, dt_);
  mass_step_inplace(f, dt_ / 2);
}

SpinorField SplitStepPlan::derivative_step(const SpinorField& f,
                                           double tau) const {
  SpinorField out = f;
  derivative_step_inplace(out, tau);
  return out;
}

SpinorField SplitStepPlan::mass_step(const SpinorField& f, double tau) const {
  SpinorField out = f;
  mass_step_inplace(out, tau);
  return out;
}

SpinorField SplitStepPlan::strang_step(const SpinorField& f) const {
  SpinorField out = f;
  strang_step_inplace(out);
  return out;
}

namespace {

// largest squared amplitude on the outermost two-cell frame vs the whole grid
std::pair<double, double> frame_and_global_max(const SpinorField& f) {
  const GridSpec& g = f.grid;
  double frame = 0.0, global = 0.0;
  for (int i2 = 0; i2 < g.n2; ++i2) {
    const bool edge2 = i2 < 2 || i2 >= g.n2 - 2;
    for (int i1 = 0; i1 < g.n1; ++i1) {
      const std::size_t idx = g.index(i1, i2);
      const double a = std::norm(f.beta1[idx]) + std::norm(f.beta2[idx]);
      global = std::max(global, a);
      if (edge2 || i1 < 2 || i1 >= g.n1 - 2) frame = std::max(frame, a);
    }
  }
  return {frame, global};
}

}  // namespace

EvolveStats evolve(const GridSpec& grid, const std::vector<double>& mass,
                   SpinorField& f, const EvolveOptions& opt,
                   const std::function<void(double, const SpinorField&)>& observer) {
  if (!(f.grid == grid)) throw std::invalid_argument("evolve: grid mismatch");
  if (opt.T < 0 || opt.dt <= 0 || opt.sample_interval <= 0) {
    throw std::invalid_argument("evolve: T >= 0, dt > 0, sample_interval > 0 required");
  }
  const long n_samples = std::lround(opt.T / opt.sample_interval);
  if (std::abs(n_samples * opt.sample_interval - opt.T) >
      1e-9 * std::max(1.0, opt.T)) {
    throw std::invalid_argument("evolve: T must be a multiple of sample_interval");
  }
  // lower dt so that steps land exactly on sample times
  const long n_sub = static_cast<long>(
      std::ceil(opt.sample_interval / opt.dt - 1e-12));
  EvolveStats stats;
  stats.dt_used = opt.sample_interval / n_sub;

  SplitStepPlan plan(grid, mass, stats.dt_used);

  const double e0 = energy(f);
  auto check_sample = [&](double t) {
    if (!all_finite(f)) {
      throw NumericalError("non-finite field at t=" + std::to_string(t));
    }
    const auto [frame, global] = frame_and_global_max(f);
    if (frame > opt.leak_threshold * opt.leak_threshold * global) {
      stats.leak_flagged = true;
    }
    if (e0 > 0) {
      const double drift = std::abs(energy(f) - e0) / e0;
      stats.max_energy_drift = std::max(stats.max_energy_drift, drift);
    }
    if (observer) observer(t, f);
  };

  check_sample(0.0);
  for (long k = 1; k <= n_samples; ++k) {
    for (long j = 0; j < n_sub; ++j) {
      plan.strang_step_inplace(f);
      ++stats.steps;
    }
    check_sample(k * opt.sample_interval);
  }
  return stats;
}

}  // namespace dirac_edge
