#include "dirac_edge/runner.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>

#include <json.hpp>

#include "dirac_edge/snapshot.hpp"

namespace dirac_edge {

namespace {

std::string param_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  std::string s(buf);
  for (char& c : s) {
    if (c == '.') c = 'p';
  }
  return s;
}

}  // namespace

AnsatzSolution make_ansatz_from(const RunConfig& cfg) {
  const ChiProfile chi = ChiProfile::make(make_profile(cfg));
  const Envelope env = make_envelope(cfg);
  if (cfg.geometry_type == "circle") {
    return make_circle_ansatz(CirclePhi(cfg.R, chi), env);
  }
  if (cfg.geometry_type == "perturbed") {
    return make_curved_ansatz(
        chi, PerturbedEdge::sine(cfg.epsilon, cfg.h_amplitude, cfg.h_frequency),
        env);
  }
  return make_straight_ansatz(chi, cfg.theta, env);
}

RunResult run_single(const RunConfig& cfg, bool write_outputs) {
  validate(cfg);
  const GridSpec grid = make_grid_from(cfg);
  const EdgeGeometry geometry = make_geometry(cfg);
  const AnsatzSolution ansatz = make_ansatz_from(cfg);
  const std::vector<double> mass =
      sample_mass({make_profile(cfg), geometry}, grid);

  SpinorField f = ansatz.sample(grid, 0.0);
  const double norm0 = l2_norm(f);
  if (!(norm0 > 0)) {
    throw std::invalid_argument("initial ansatz field has zero norm");
  }
  const double scale = 1.0 / norm0;
  for (auto& v : f.beta1) v *= scale;
  for (auto& v : f.beta2) v *= scale;

  RunResult result;
  result.init_scale = scale;

  EvolveOptions opt;
  opt.T = cfg.T;
  opt.dt = resolved_dt(cfg);
  opt.sample_interval = cfg.sample_interval;
  opt.leak_threshold = cfg.leak_threshold;

  auto observer = [&](double t, const SpinorField& state) {
    const SpinorField ref = ansatz.sample(grid, t, scale);
    result.series.samples.push_back(make_sample(t, state, ref, geometry));
    if (write_outputs) {
      for (const double ts : cfg.snapshot_times) {
        if (std::abs(ts - t) < 1e-9 * std::max(1.0, std::abs(ts))) {
          write_snapshot(cfg.out_dir, cfg.tag, state, t, cfg.geometry_type);
        }
      }
    }
  };

  const EvolveStats stats = evolve(grid, mass, f, opt, observer);
  result.leak_flagged = stats.leak_flagged;
  result.max_energy_drift = stats.max_energy_drift;
  result.final_field = std::move(f);

  if (write_outputs) {
    namespace fs = std::filesystem;
    fs::create_directories(cfg.out_dir);
    write_series_csv((fs::path(cfg.out_dir) / (cfg.tag + "_series.csv")).string(),
                     result.series);
  }
  return result;
}

void write_series_csv(const std::string& path, const ErrorSeries& series) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "t,l2_error,energy,centroid\n";
  char buf[160];
  for (const auto& s : series.samples) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", s.t,
                  s.l2_error, s.energy, s.centroid);
    out << buf;
  }
}

SweepResult sweep_fit(
    const std::vector<double>& params,
    const std::function<std::pair<double, bool>(double)>& error_of_param) {
  SweepResult result;
  for (const double p : params) {
    const auto [err, leaked] = error_of_param(p);
    if (leaked) {
      result.skipped.push_back(p);
    } else {
      result.points.push_back({p, err});
    }
  }
  if (result.points.size() < 3) {
    throw FitError("fewer than 3 surviving runs in sweep (" +
                   std::to_string(result.points.size()) + " usable)");
  }
  result.fit = power_law_fit(result.points);
  return result;
}

RunConfig radius_variant(const RunConfig& tmpl, double R) {
  RunConfig cfg = tmpl;
  cfg.R = R;
  // default box rule for circle runs
  cfg.x1_min = cfg.x2_min = -(R + 20.0);
  cfg.x1_max = cfg.x2_max = R + 20.0;
  cfg.tag = tmpl.tag + "_R" + param_label(R);
  return cfg;
}

RunConfig epsilon_variant(const RunConfig& tmpl, double epsilon) {
  RunConfig cfg = tmpl;
  cfg.epsilon = epsilon;
  const double period = 2.0 * M_PI / (cfg.h_frequency * epsilon);
  const double want = tmpl.x2_max - tmpl.x2_min;
  const double periods = std::max(1.0, std::ceil(want / period - 1e-9));
  const double half = 0.5 * periods * period;
  const double mid = 0.5 * (tmpl.x2_min + tmpl.x2_max);
  cfg.x2_min = mid - half;
  cfg.x2_max = mid + half;
  cfg.tag = tmpl.tag + "_eps" + param_label(epsilon);
  return cfg;
}

namespace {

SweepResult sweep_runs(const RunConfig& tmpl, const std::vector<double>& params,
                       int workers, bool write_outputs,
                       RunConfig (*variant)(const RunConfig&, double)) {
  // pre-validate every variant so a bad parameter fails before any compute
  std::vector<RunConfig> cfgs;
  cfgs.reserve(params.size());
  for (const double p : params) {
    RunConfig c = variant(tmpl, p);
    validate(c);
    cfgs.push_back(std::move(c));
  }

  std::vector<std::pair<double, bool>> results(params.size());
  std::vector<std::string> failures(params.size());
  std::atomic<std::size_t> next{0};
  const int nw = std::max(1, std::min<int>(workers, params.size()));
  auto work = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cfgs.size()) return;
      try {
        const RunResult r = run_single(cfgs[i], write_outputs);
        results[i] = {r.series.samples.back().l2_error, r.leak_flagged};
      } catch (const std::exception& e) {
        failures[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < nw; ++i) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  for (const auto& msg : failures) {
    if (!msg.empty()) throw std::runtime_error("sweep run failed: " + msg);
  }

  // reduce in parameter order, not completion order
  std::size_t i = 0;
  return sweep_fit(params, [&](double) { return results[i++]; });
}

}  // namespace

SweepResult sweep_radius(const RunConfig& tmpl, const std::vector<double>& radii,
                         int workers, bool write_outputs) {
  return sweep_runs(tmpl, radii, workers, write_outputs, radius_variant);
}

SweepResult sweep_epsilon(const RunConfig& tmpl,
                          const std::vector<double>& epsilons, int workers,
                          bool write_outputs) {
  return sweep_runs(tmpl, epsilons, workers, write_outputs, epsilon_variant);
}

AnsatzCheckReport ansatz_check(const RunConfig& tmpl,
                               const std::vector<double>& params) {
  const bool circle = tmpl.geometry_type == "circle";
  if (!circle && tmpl.geometry_type != "perturbed") {
    throw std::invalid_argument(
        "ansatz-check needs a circle or perturbed geometry");
  }
  AnsatzCheckReport report;
  for (const double p : params) {
    RunConfig cfg = circle ? radius_variant(tmpl, p) : epsilon_variant(tmpl, p);
    validate(cfg);
    const GridSpec grid = make_grid_from(cfg);
    const ChiProfile chi = ChiProfile::make(make_profile(cfg));
    const Envelope env = make_envelope(cfg);

    std::function<Spinor(double, double)> residual;
    if (circle) {
      CirclePhi phi(cfg.R, chi);
      residual = [phi, env](double x1, double x2) {
        return circle_residual(phi, env, 0.0, x1, x2);
      };
    } else {
      const PerturbedEdge edge =
          PerturbedEdge::sine(cfg.epsilon, cfg.h_amplitude, cfg.h_frequency);
      residual = [chi, edge, env](double x1, double x2) {
        return curved_residual(chi, edge, env, 0.0, x1, x2);
      };
    }

    const AnsatzSolution sol = make_ansatz_from(cfg);
    const double norm0 = l2_norm(sol.sample(grid, 0.0));
    double sum = 0.0;
    for (int i2 = 0; i2 < grid.n2; ++i2) {
      const double x2 = grid.x2(i2);
      for (int i1 = 0; i1 < grid.n1; ++i1) {
        const Spinor r = residual(grid.x1(i1), x2);
        sum += std::norm(r.c1) + std::norm(r.c2);
      }
    }
    const double rnorm = std::sqrt(sum * grid.cell_area()) / norm0;
    report.rows.push_back({p, rnorm});
  }
  report.fit = power_law_fit(report.rows);
  return report;
}

void write_fit_json(const std::string& path, const PowerLawFit& fit) {
  nlohmann::json j{{"slope", fit.slope},
                   {"intercept", fit.intercept},
                   {"residual_rms", fit.residual_rms},
                   {"points", fit.points}};
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << j.dump(2) << "\n";
}

void write_spectrum_csv(const std::string& path,
                        const std::vector<DispersionRow>& table) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "lambda,omega_gap,edge\n";
  char buf[120];
  for (const auto& row : table) {
    if (row.omega_gap) {
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", row.lambda,
                    *row.omega_gap, row.edge);
    } else {
      std::snprintf(buf, sizeof(buf), "%.17g,,%.17g\n", row.lambda, row.edge);
    }
    out << buf;
  }
}

}  // namespace dirac_edge
