#include "dirac_edge/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace dirac_edge {

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) {
    if (!s.empty()) s += "; ";
    s += x;
  }
  return s;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& v, const std::string& key,
                    std::vector<std::string>& errs) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    errs.push_back("key '" + key + "': cannot parse number '" + v + "'");
    return 0.0;
  }
}

int parse_int(const std::string& v, const std::string& key,
              std::vector<std::string>& errs) {
  try {
    std::size_t pos = 0;
    const int x = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    errs.push_back("key '" + key + "': cannot parse integer '" + v + "'");
    return 0;
  }
}

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

ValidationError::ValidationError(std::vector<std::string> v)
    : std::runtime_error("config validation failed: " + join(v)),
      violations(std::move(v)) {}

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError({"cannot open config file '" + path + "'"});

  RunConfig cfg;
  std::vector<std::string> errs;
  std::string section, line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        errs.push_back("line " + std::to_string(lineno) + ": malformed section");
        continue;
      }
      section = trim(line.substr(1, line.size() - 2));
      static const std::vector<std::string> known = {
          "profile", "geometry", "grid", "envelope", "time", "output"};
      if (std::find(known.begin(), known.end(), section) == known.end()) {
        errs.push_back("unknown section [" + section + "]");
        section.clear();
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      errs.push_back("line " + std::to_string(lineno) + ": expected key = value");
      continue;
    }
    const std::string key = section + "." + trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));

    if (key == "profile.type") cfg.profile_type = val;
    else if (key == "profile.m_inf") cfg.m_inf = parse_double(val, key, errs);
    else if (key == "geometry.type") cfg.geometry_type = val;
    else if (key == "geometry.theta") cfg.theta = parse_double(val, key, errs);
    else if (key == "geometry.R") cfg.R = parse_double(val, key, errs);
    else if (key == "geometry.epsilon") cfg.epsilon = parse_double(val, key, errs);
    else if (key == "geometry.h") cfg.h_name = val;
    else if (key == "geometry.h_amplitude") cfg.h_amplitude = parse_double(val, key, errs);
    else if (key == "geometry.h_frequency") cfg.h_frequency = parse_double(val, key, errs);
    else if (key == "grid.x1_min") cfg.x1_min = parse_double(val, key, errs);
    else if (key == "grid.x1_max") cfg.x1_max = parse_double(val, key, errs);
    else if (key == "grid.x2_min") cfg.x2_min = parse_double(val, key, errs);
    else if (key == "grid.x2_max") cfg.x2_max = parse_double(val, key, errs);
    else if (key == "grid.n1") cfg.n1 = parse_int(val, key, errs);
    else if (key == "grid.n2") cfg.n2 = parse_int(val, key, errs);
    else if (key == "envelope.type") cfg.envelope_type = val;
    else if (key == "envelope.center") cfg.env_center = parse_double(val, key, errs);
    else if (key == "envelope.width") cfg.env_width = parse_double(val, key, errs);
    else if (key == "envelope.kappa") cfg.env_kappa = parse_double(val, key, errs);
    else if (key == "time.T") cfg.T = parse_double(val, key, errs);
    else if (key == "time.dt") cfg.dt = (val == "auto") ? 0.0 : parse_double(val, key, errs);
    else if (key == "time.sample_interval") cfg.sample_interval = parse_double(val, key, errs);
    else if (key == "time.leak_threshold") cfg.leak_threshold = parse_double(val, key, errs);
    else if (key == "output.dir") cfg.out_dir = val;
    else if (key == "output.tag") cfg.tag = val;
    else errs.push_back("unknown key '" + key + "'");
  }
  if (!errs.empty()) throw ValidationError(std::move(errs));
  validate(cfg);
  return cfg;
}

void validate(const RunConfig& cfg) {
  std::vector<std::string> errs;

  if (cfg.profile_type != "tanh" && cfg.profile_type != "sign") {
    errs.push_back("profile.type must be 'tanh' or 'sign'");
  }
  if (!(cfg.m_inf > 0)) errs.push_back("profile.m_inf must be positive");

  if (!power_of_two(cfg.n1) || !power_of_two(cfg.n2)) {
    errs.push_back("grid.n1 and grid.n2 must be powers of two");
  }
  if (!(cfg.x1_max > cfg.x1_min) || !(cfg.x2_max > cfg.x2_min)) {
    errs.push_back("grid bounds must satisfy max > min per axis");
  }

  if (!(cfg.T >= 0)) errs.push_back("time.T must be nonnegative");
  if (!(cfg.sample_interval > 0)) {
    errs.push_back("time.sample_interval must be positive");
  } else if (cfg.T > 0) {
    const double q = cfg.T / cfg.sample_interval;
    if (std::abs(q - std::round(q)) > 1e-9) {
      errs.push_back("time.T must be an integer multiple of sample_interval");
    }
  }
  if (cfg.dt < 0) errs.push_back("time.dt must be positive or 'auto'");
  if (!(cfg.leak_threshold > 0)) {
    errs.push_back("time.leak_threshold must be positive");
  }

  const double r0 = cfg.profile_type == "sign" ? 0.1 : std::atanh(0.5);
  if (cfg.geometry_type == "straight") {
    if (!cfg.envelope_type.empty() && cfg.envelope_type != "gaussian") {
      errs.push_back("straight geometry requires a gaussian envelope");
    }
  } else if (cfg.geometry_type == "circle") {
    if (!(cfg.R > 3.0 * r0)) {
      errs.push_back("circle radius violates the ansatz hypothesis R > 3*r0 (r0=" +
                     std::to_string(r0) + ")");
    }
    if (!cfg.envelope_type.empty() && cfg.envelope_type != "periodic_bump") {
      errs.push_back("circle geometry requires a periodic_bump envelope");
    }
    // the half-angle spinor is discontinuous across theta=0: the envelope
    // must vanish below 1e-12 there at every sample time
    const double kappa = cfg.env_kappa;
    const double center = resolved_envelope_center(cfg);
    if (cfg.R > 0 && cfg.sample_interval > 0) {
      for (double t = 0.0; t <= cfg.T + 1e-12; t += cfg.sample_interval) {
        const double pos = center + t / cfg.R;
        if (kappa * (1.0 - std::cos(pos)) < std::log(1e12)) {
          errs.push_back(
              "circle envelope support reaches the theta=0 spinor branch cut "
              "at t=" + std::to_string(t));
          break;
        }
      }
    }
  } else if (cfg.geometry_type == "perturbed") {
    if (!(cfg.epsilon > 0) || !(cfg.epsilon < 1)) {
      errs.push_back("geometry.epsilon must lie in the open interval (0,1)");
    }
    if (cfg.h_name != "sin") {
      errs.push_back("geometry.h: only the built-in 'sin' is available");
    }
    if (!cfg.envelope_type.empty() && cfg.envelope_type != "gaussian") {
      errs.push_back("perturbed geometry requires a gaussian envelope");
    }
    if (cfg.epsilon > 0 && cfg.h_frequency > 0 && cfg.x2_max > cfg.x2_min) {
      // periodic grid needs the box to hold whole periods of h(eps x2)
      const double period = 2.0 * M_PI / (cfg.h_frequency * cfg.epsilon);
      const double q = (cfg.x2_max - cfg.x2_min) / period;
      if (std::abs(q - std::round(q)) > 1e-6 || std::round(q) < 1) {
        errs.push_back(
            "x2 box length must be a whole multiple of the edge period "
            "2*pi/(h_frequency*epsilon) = " + std::to_string(period));
      }
    }
  } else {
    errs.push_back("geometry.type must be 'straight', 'circle' or 'perturbed'");
  }

  for (const double t : cfg.snapshot_times) {
    if (t < 0 || t > cfg.T + 1e-12) {
      errs.push_back("snapshot time " + std::to_string(t) + " outside [0, T]");
      continue;
    }
    const double q = t / cfg.sample_interval;
    if (std::abs(q - std::round(q)) > 1e-9) {
      errs.push_back("snapshot time " + std::to_string(t) +
                     " is not a multiple of sample_interval");
    }
  }

  if (!errs.empty()) throw ValidationError(std::move(errs));
}

double resolved_dt(const RunConfig& cfg) {
  if (cfg.dt > 0) return cfg.dt;
  const double dx1 = (cfg.x1_max - cfg.x1_min) / cfg.n1;
  const double dx2 = (cfg.x2_max - cfg.x2_min) / cfg.n2;
  return 0.4 * std::min(dx1, dx2);
}

TransitionProfile make_profile(const RunConfig& cfg) {
  if (cfg.profile_type == "sign") {
    return TransitionProfile::sign_profile(cfg.m_inf);
  }
  return TransitionProfile::tanh_profile(cfg.m_inf);
}

EdgeGeometry make_geometry(const RunConfig& cfg) {
  if (cfg.geometry_type == "circle") return CircleEdge{cfg.R};
  if (cfg.geometry_type == "perturbed") {
    return PerturbedEdge::sine(cfg.epsilon, cfg.h_amplitude, cfg.h_frequency);
  }
  return StraightEdge{cfg.theta};
}

GridSpec make_grid_from(const RunConfig& cfg) {
  return make_grid(cfg.x1_min, cfg.x1_max, cfg.x2_min, cfg.x2_max, cfg.n1,
                   cfg.n2);
}

double resolved_envelope_center(const RunConfig& cfg) {
  if (!std::isnan(cfg.env_center)) return cfg.env_center;
  return cfg.geometry_type == "circle" ? M_PI : 0.0;
}

Envelope make_envelope(const RunConfig& cfg) {
  if (cfg.geometry_type == "circle") {
    return PeriodicBumpEnvelope{resolved_envelope_center(cfg), cfg.env_kappa};
  }
  return GaussianEnvelope{resolved_envelope_center(cfg), cfg.env_width};
}

}  // namespace dirac_edge
