#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <vector>

#include "dirac_edge/grid.hpp"

namespace dirac_edge {

struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Strang split-step plan: exact Fourier-space flow of the derivative part
// composed with the exact pointwise mass rotation. Both factors are unitary,
// so the discrete energy is conserved to roundoff for any dt. Only the field
// needs to be periodic; the (generally non-periodic) mass enters through the
// pointwise step alone.
class SplitStepPlan {
 public:
  SplitStepPlan(const GridSpec& grid, std::vector<double> mass, double dt);
  ~SplitStepPlan();
  SplitStepPlan(const SplitStepPlan&) = delete;
  SplitStepPlan& operator=(const SplitStepPlan&) = delete;

  const GridSpec& grid() const { return grid_; }
  double dt() const { return dt_; }

  // mass half-step, derivative full-step, mass half-step; in place
  void strang_step_inplace(SpinorField& f) const;

  // value-returning single factors; tau need not match the plan dt
  SpinorField derivative_step(const SpinorField& f, double tau) const;
  SpinorField mass_step(const SpinorField& f, double tau) const;
  SpinorField strang_step(const SpinorField& f) const;

 private:
  struct Impl;
  void derivative_step_inplace(SpinorField& f, double tau) const;
  void mass_step_inplace(SpinorField& f, double tau) const;

  GridSpec grid_;
  std::vector<double> mass_;
  double dt_;
  std::unique_ptr<Impl> impl_;
};

struct EvolveOptions {
  double T = 0.0;
  double dt = 0.0;               // requested; lowered to divide sample_interval
  double sample_interval = 0.0;  // observer wall-time spacing
  double leak_threshold = 1e-6;  // relative frame amplitude that flags a run
};

struct EvolveStats {
  double dt_used = 0.0;
  long steps = 0;
  bool leak_flagged = false;
  double max_energy_drift = 0.0;  // relative, over all samples
};

// Propagates f in place over [0, T], invoking the observer at every sample
// time (including t=0). Aborts with NumericalError on NaN; boundary leakage
// beyond the threshold only flags the run.
EvolveStats evolve(
    const GridSpec& grid, const std::vector<double>& mass, SpinorField& f,
    const EvolveOptions& opt,
    const std::function<void(double, const SpinorField&)>& observer = {});

}  // namespace dirac_edge
