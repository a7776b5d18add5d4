// Command-line driver: single runs, parameter sweeps, ansatz residual
// checks and 1D spectrum scans, all driven by a flat config file.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dirac_edge/runner.hpp"
#include "dirac_edge/snapshot.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitFit = 4;

using namespace dirac_edge;

void print_fit(const PowerLawFit& fit) {
  std::printf("fit: slope=%.6f intercept=%.6f residual_rms=%.3e\n", fit.slope,
              fit.intercept, fit.residual_rms);
}

int cmd_run(const std::string& config_path, const std::string& out_dir,
            const std::vector<double>& snapshots) {
  RunConfig cfg = parse_config(config_path);
  if (!out_dir.empty()) cfg.out_dir = out_dir;
  cfg.snapshot_times = snapshots;
  validate(cfg);
  const RunResult r = run_single(cfg, /*write_outputs=*/true);
  std::printf("run '%s': %zu samples, final error %.6e, energy drift %.3e%s\n",
              cfg.tag.c_str(), r.series.samples.size(),
              r.series.samples.back().l2_error, r.max_energy_drift,
              r.leak_flagged ? " [LEAK FLAGGED]" : "");
  return r.leak_flagged ? kExitNumerical : 0;
}

int cmd_sweep(const std::string& config_path, const std::string& out_dir,
              const std::vector<double>& params, int workers, bool radius) {
  RunConfig cfg = parse_config(config_path);
  if (!out_dir.empty()) cfg.out_dir = out_dir;
  const SweepResult sweep =
      radius ? sweep_radius(cfg, params, workers, /*write_outputs=*/true)
             : sweep_epsilon(cfg, params, workers, /*write_outputs=*/true);
  for (const auto& [p, e] : sweep.points) {
    std::printf("%-10s %g -> error %.6e\n", radius ? "R" : "epsilon", p, e);
  }
  for (const double p : sweep.skipped) {
    std::printf("%-10s %g -> skipped (boundary leak)\n", radius ? "R" : "epsilon", p);
  }
  print_fit(sweep.fit);
  namespace fs = std::filesystem;
  fs::create_directories(cfg.out_dir);
  write_fit_json((fs::path(cfg.out_dir) / (cfg.tag + "_fit.json")).string(),
                 sweep.fit);
  return 0;
}

int cmd_ansatz_check(const std::string& config_path, const std::string& out_dir,
                     const std::vector<double>& params) {
  RunConfig cfg = parse_config(config_path);
  if (!out_dir.empty()) cfg.out_dir = out_dir;
  const AnsatzCheckReport report = ansatz_check(cfg, params);
  for (const auto& [p, rn] : report.rows) {
    std::printf("parameter %g -> residual L2 norm %.6e\n", p, rn);
  }
  print_fit(report.fit);
  namespace fs = std::filesystem;
  fs::create_directories(cfg.out_dir);
  write_fit_json(
      (fs::path(cfg.out_dir) / (cfg.tag + "_residual_fit.json")).string(),
      report.fit);
  return 0;
}

int cmd_spectrum(double lambda_min, double lambda_max, int count, int n,
                 double u_max, double m_inf, const std::string& out_path,
                 double dump_lambda, const std::string& out_dir) {
  const TransitionProfile profile = TransitionProfile::tanh_profile(m_inf);
  const Grid1D grid{-u_max, u_max, n};
  std::vector<double> lambdas;
  for (int i = 0; i < count; ++i) {
    lambdas.push_back(count == 1 ? lambda_min
                                 : lambda_min + (lambda_max - lambda_min) * i /
                                       (count - 1));
  }
  const auto table = dispersion_scan(profile, grid, lambdas);
  write_spectrum_csv(out_path, table);
  int gaps = 0;
  for (const auto& row : table) gaps += row.omega_gap.has_value();
  std::printf("spectrum: %zu lambdas, %d in-gap eigenvalues -> %s\n",
              table.size(), gaps, out_path.c_str());

  if (!std::isnan(dump_lambda)) {
    const Dirac1DProblem p{dump_lambda, profile, grid};
    const auto pairs = eigenpairs(p, 1);
    // 1D restriction of the snapshot format: n x 1 grid along u
    SpinorField f(make_grid(grid.u_min, grid.u_max, 0.0, 1.0, grid.n, 1));
    for (int i = 0; i < grid.n; ++i) {
      f.beta1[i] = pairs[0].v1[i];
      f.beta2[i] = pairs[0].v2[i];
    }
    const std::string path = write_snapshot(
        out_dir.empty() ? "." : out_dir, "eigenvector", f, 0.0, "spectrum1d");
    std::printf("eigenvector at lambda=%g (omega=%.8f) -> %s\n", dump_lambda,
                pairs[0].omega, path.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"massive Dirac edge-state propagation and diagnostics"};
  app.require_subcommand(1);

  std::string config_path, out_dir, spectrum_out = "spectrum.csv";
  std::vector<double> snapshots, radii, epsilons, params;
  int workers = 2;
  double lambda_min = -0.8, lambda_max = 0.8;
  int count = 17, n1d = 1024;
  double u_max = 30.0, m_inf = 1.0;
  double dump_lambda = std::numeric_limits<double>::quiet_NaN();

  auto* run = app.add_subcommand("run", "propagate a single configuration");
  run->add_option("--config", config_path, "config file")->required();
  run->add_option("--out-dir", out_dir, "output directory override");
  run->add_option("--snapshots", snapshots, "snapshot times")->delimiter(',');

  auto* swr = app.add_subcommand("sweep-radius", "circle-radius convergence sweep");
  swr->add_option("--config", config_path, "config template")->required();
  swr->add_option("--radii", radii, "radius list")->required()->delimiter(',');
  swr->add_option("--workers", workers, "parallel runs");
  swr->add_option("--out-dir", out_dir, "output directory override");

  auto* swe = app.add_subcommand("sweep-epsilon", "curved-edge convergence sweep");
  swe->add_option("--config", config_path, "config template")->required();
  swe->add_option("--epsilons", epsilons, "epsilon list")->required()->delimiter(',');
  swe->add_option("--workers", workers, "parallel runs");
  swe->add_option("--out-dir", out_dir, "output directory override");

  auto* ac = app.add_subcommand("ansatz-check",
                                "residual norms of the closed-form ansatz");
  ac->add_option("--config", config_path, "config template")->required();
  ac->add_option("--params", params, "R or epsilon list, per geometry")
      ->required()
      ->delimiter(',');
  ac->add_option("--out-dir", out_dir, "output directory override");

  auto* sp = app.add_subcommand("spectrum", "1D dispersion scan");
  sp->add_option("--lambda-min", lambda_min, "first wavenumber");
  sp->add_option("--lambda-max", lambda_max, "last wavenumber");
  sp->add_option("--count", count, "number of wavenumbers");
  sp->add_option("--n", n1d, "1D grid points");
  sp->add_option("--u-max", u_max, "half-width of the u interval");
  sp->add_option("--m-inf", m_inf, "asymptotic mass");
  sp->add_option("--out", spectrum_out, "CSV path");
  sp->add_option("--dump-eigenvector", dump_lambda,
                 "write the gap eigenvector at this lambda");
  sp->add_option("--out-dir", out_dir, "directory for the eigenvector dump");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(config_path, out_dir, snapshots);
    if (swr->parsed()) return cmd_sweep(config_path, out_dir, radii, workers, true);
    if (swe->parsed()) return cmd_sweep(config_path, out_dir, epsilons, workers, false);
    if (ac->parsed()) return cmd_ansatz_check(config_path, out_dir, params);
    if (sp->parsed()) {
      return cmd_spectrum(lambda_min, lambda_max, count, n1d, u_max, m_inf,
                          spectrum_out, dump_lambda, out_dir);
    }
  } catch (const dirac_edge::ValidationError& e) {
    std::fprintf(stderr, "validation error:\n");
    for (const auto& v : e.violations) std::fprintf(stderr, "  - %s\n", v.c_str());
    return kExitValidation;
  } catch (const dirac_edge::NumericalError& e) {
    std::fprintf(stderr, "numerical error: %s\n", e.what());
    return kExitNumerical;
  } catch (const dirac_edge::FitError& e) {
    std::fprintf(stderr, "fit error: %s\n", e.what());
    return kExitFit;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
