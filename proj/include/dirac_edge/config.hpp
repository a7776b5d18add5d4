#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "dirac_edge/ansatz.hpp"
#include "dirac_edge/grid.hpp"
#include "dirac_edge/mass.hpp"

namespace dirac_edge {

// carries every violation found, not just the first
struct ValidationError : std::runtime_error {
  std::vector<std::string> violations;
  explicit ValidationError(std::vector<std::string> v);
};

// Flat INI-style experiment description. Every key maps 1:1 to a physical or
// numerical parameter; unknown keys are rejected.
struct RunConfig {
  // [profile]
  std::string profile_type = "tanh";
  double m_inf = 1.0;
  // [geometry]
  std::string geometry_type = "straight";
  double theta = 0.0;
  double R = 0.0;
  double epsilon = 0.0;
  std::string h_name = "sin";
  double h_amplitude = 1.0;
  double h_frequency = 1.0;
  // [grid]
  double x1_min = 0.0, x1_max = 0.0, x2_min = 0.0, x2_max = 0.0;
  int n1 = 0, n2 = 0;
  // [envelope]
  std::string envelope_type;  // defaults per geometry when empty
  double env_center = std::numeric_limits<double>::quiet_NaN();  // unset
  double env_width = 1.0;
  double env_kappa = 40.0;
  // [time]
  double T = 0.0;
  double dt = 0.0;  // 0 means "auto" = 0.4 * min(dx1, dx2)
  double sample_interval = 0.5;
  double leak_threshold = 1e-6;
  // [output]
  std::string out_dir = ".";
  std::string tag = "run";
  // set by the CLI, not the file
  std::vector<double> snapshot_times;
};

RunConfig parse_config(const std::string& path);

// throws ValidationError listing every violated rule
void validate(const RunConfig& cfg);

double resolved_dt(const RunConfig& cfg);

// packet start: the bump peak (circle: pi, opposite the spinor branch cut;
// line/curve: 0, the flattest point of the built-in sine edge)
double resolved_envelope_center(const RunConfig& cfg);

TransitionProfile make_profile(const RunConfig& cfg);
EdgeGeometry make_geometry(const RunConfig& cfg);
GridSpec make_grid_from(const RunConfig& cfg);
Envelope make_envelope(const RunConfig& cfg);

}  // namespace dirac_edge
