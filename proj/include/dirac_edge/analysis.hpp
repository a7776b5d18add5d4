#pragma once

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dirac_edge/ansatz.hpp"
#include "dirac_edge/grid.hpp"
#include "dirac_edge/mass.hpp"

namespace dirac_edge {

struct FitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ErrorSample {
  double t = 0.0;
  double l2_error = 0.0;
  double energy = 0.0;
  double centroid = 0.0;
};

struct ErrorSeries {
  std::vector<ErrorSample> samples;
};

struct PowerLawFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual_rms = 0.0;
  std::vector<std::array<double, 2>> points;  // (ln parameter, ln error)
};

// ordinary least squares on (ln p, ln e); needs >= 3 strictly positive points
PowerLawFit power_law_fit(const std::vector<std::array<double, 2>>& param_error);

// density-weighted packet position along the edge: circular mean of theta for
// the circle, weighted mean of x2 for line/curve
double edge_centroid(const SpinorField& f, const EdgeGeometry& geometry);

// per-sample diagnostics against a scaled ansatz field
ErrorSample make_sample(double t, const SpinorField& numeric,
                        const SpinorField& ansatz, const EdgeGeometry& geometry);

ErrorSeries error_vs_ansatz(
    const std::vector<std::pair<double, SpinorField>>& trajectory,
    const AnsatzSolution& solution, double scale, const EdgeGeometry& geometry);

// sign of the centroid drift in the geometry's positive orientation
// (+1 expected for every built-in geometry)
int chirality_sign(const std::vector<std::pair<double, double>>& t_centroid,
                   const EdgeGeometry& geometry, double noise_threshold = 1e-9);

}  // namespace dirac_edge
