#include "dirac_edge/analysis.hpp"

#include <cmath>

namespace dirac_edge {

PowerLawFit power_law_fit(const std::vector<std::array<double, 2>>& param_error) {
  if (param_error.size() < 3) {
    throw FitError("power_law_fit needs at least 3 points");
  }
  PowerLawFit fit;
  fit.points.reserve(param_error.size());
  for (const auto& [p, e] : param_error) {
    if (!(p > 0) || !(e > 0)) {
      throw FitError("power_law_fit requires positive parameters and errors");
    }
    fit.points.push_back({std::log(p), std::log(e)});
  }
  const double n = static_cast<double>(fit.points.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : fit.points) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0) throw FitError("power_law_fit: degenerate abscissae");
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  double ss = 0;
  for (const auto& [x, y] : fit.points) {
    const double r = y - (fit.slope * x + fit.intercept);
    ss += r * r;
  }
  fit.residual_rms = std::sqrt(ss / n);
  return fit;
}

double edge_centroid(const SpinorField& f, const EdgeGeometry& geometry) {
  const GridSpec& g = f.grid;
  const bool circular = std::holds_alternative<CircleEdge>(geometry);
  double wsum = 0, xsum = 0, csum = 0, ssum = 0;
  for (int i2 = 0; i2 < g.n2; ++i2) {
    const double x2 = g.x2(i2);
    for (int i1 = 0; i1 < g.n1; ++i1) {
      const std::size_t idx = g.index(i1, i2);
      const double w = std::norm(f.beta1[idx]) + std::norm(f.beta2[idx]);
      wsum += w;
      if (circular) {
        const double th = std::atan2(x2, g.x1(i1));
        csum += w * std::cos(th);
        ssum += w * std::sin(th);
      } else {
        xsum += w * x2;
      }
    }
  }
  if (wsum * g.cell_area() < 1e-12) {
    throw std::invalid_argument("edge_centroid: total weight below 1e-12");
  }
  if (circular) {
    // circular mean avoids branch-cut artifacts at theta = 0
    double a = std::atan2(ssum, csum);
    if (a < 0) a += 2.0 * M_PI;
    return a;
  }
  return xsum / wsum;
}

ErrorSample make_sample(double t, const SpinorField& numeric,
                        const SpinorField& ansatz,
                        const EdgeGeometry& geometry) {
  return {t, l2_distance(numeric, ansatz), energy(numeric),
          edge_centroid(numeric, geometry)};
}

ErrorSeries error_vs_ansatz(
    const std::vector<std::pair<double, SpinorField>>& trajectory,
    const AnsatzSolution& solution, double scale,
    const EdgeGeometry& geometry) {
  ErrorSeries series;
  series.samples.reserve(trajectory.size());
  for (const auto& [t, field] : trajectory) {
    const SpinorField ref = solution.sample(field.grid, t, scale);
    series.samples.push_back(make_sample(t, field, ref, geometry));
  }
  return series;
}

int chirality_sign(const std::vector<std::pair<double, double>>& t_centroid,
                   const EdgeGeometry& geometry, double noise_threshold) {
  if (t_centroid.size() < 2) {
    throw std::invalid_argument("chirality_sign needs at least 2 samples");
  }
  double drift = t_centroid.back().second - t_centroid.front().second;
  if (std::holds_alternative<CircleEdge>(geometry)) {
    // shortest signed angular difference
    drift = std::remainder(drift, 2.0 * M_PI);
  }
  if (std::abs(drift) < noise_threshold) {
    throw std::runtime_error("chirality_sign: centroid drift below noise");
  }
  return drift > 0 ? 1 : -1;
}

}  // namespace dirac_edge
