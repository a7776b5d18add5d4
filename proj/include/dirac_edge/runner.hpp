#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dirac_edge/analysis.hpp"
#include "dirac_edge/config.hpp"
#include "dirac_edge/propagator.hpp"
#include "dirac_edge/spectrum1d.hpp"

namespace dirac_edge {

// builds the closed-form comparison solution described by a config
AnsatzSolution make_ansatz_from(const RunConfig& cfg);

struct RunResult {
  ErrorSeries series;
  bool leak_flagged = false;
  double max_energy_drift = 0.0;
  double init_scale = 0.0;  // factor that normalized the t=0 energy to 1
  SpinorField final_field;
};

// single propagation: ansatz initial data rescaled to unit energy, error /
// energy / centroid sampled on the way, optional CSV and snapshots on disk
RunResult run_single(const RunConfig& cfg, bool write_outputs = false);

void write_series_csv(const std::string& path, const ErrorSeries& series);

struct SweepResult {
  std::vector<std::array<double, 2>> points;  // (parameter, error at T)
  std::vector<double> skipped;                // leak-flagged parameters
  PowerLawFit fit;
};

// shared fit plumbing, also used with stubbed runners in tests; excludes
// parameters whose run reports a leak and requires >= 3 survivors
SweepResult sweep_fit(
    const std::vector<double>& params,
    const std::function<std::pair<double, bool>(double)>& error_of_param);

// circle-radius sweep: per-R box [-(R+20), R+20]^2, error at T
SweepResult sweep_radius(const RunConfig& tmpl, const std::vector<double>& radii,
                         int workers, bool write_outputs = false);

// epsilon sweep: x2 box = smallest whole number of edge periods covering the
// template's x2 length, error at T
SweepResult sweep_epsilon(const RunConfig& tmpl,
                          const std::vector<double>& epsilons, int workers,
                          bool write_outputs = false);

RunConfig radius_variant(const RunConfig& tmpl, double R);
RunConfig epsilon_variant(const RunConfig& tmpl, double epsilon);

struct AnsatzCheckReport {
  std::vector<std::array<double, 2>> rows;  // (parameter, residual L2 norm)
  PowerLawFit fit;
};

// residual L2 norms straight from the closed forms, no time stepping
AnsatzCheckReport ansatz_check(const RunConfig& tmpl,
                               const std::vector<double>& params);

void write_fit_json(const std::string& path, const PowerLawFit& fit);
void write_spectrum_csv(const std::string& path,
                        const std::vector<DispersionRow>& table);

}  // namespace dirac_edge
