#include "dirac_edge/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dirac_edge {

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

GridSpec make_grid(double x1_min, double x1_max, double x2_min, double x2_max,
                   int n1, int n2) {
  if (!power_of_two(n1) || !power_of_two(n2)) {
    throw std::invalid_argument("grid sizes must be powers of two, got " +
                                std::to_string(n1) + "x" + std::to_string(n2));
  }
  if (!(x1_max > x1_min) || !(x2_max > x2_min)) {
    throw std::invalid_argument("degenerate grid bounds");
  }
  return GridSpec{x1_min, x1_max, x2_min, x2_max, n1, n2};
}

double energy(const SpinorField& f) {
  double s = 0.0;
  const std::size_t n = f.grid.size();
  for (std::size_t i = 0; i < n; ++i) {
    s += std::norm(f.beta1[i]) + std::norm(f.beta2[i]);
  }
  return s * f.grid.cell_area();
}

double l2_norm(const SpinorField& f) { return std::sqrt(energy(f)); }

double l2_distance(const SpinorField& a, const SpinorField& b) {
  if (!(a.grid == b.grid)) {
    throw std::invalid_argument("l2_distance: grid mismatch");
  }
  double s = 0.0;
  const std::size_t n = a.grid.size();
  for (std::size_t i = 0; i < n; ++i) {
    s += std::norm(a.beta1[i] - b.beta1[i]) + std::norm(a.beta2[i] - b.beta2[i]);
  }
  return std::sqrt(s * a.grid.cell_area());
}

SpinorField alpha_to_beta(const AlphaField& a) {
  SpinorField f(a.grid);
  const Complex i{0.0, 1.0};
  for (std::size_t k = 0; k < a.grid.size(); ++k) {
    f.beta1[k] = a.alpha1[k] + i * a.alpha2[k];
    f.beta2[k] = a.alpha1[k] - i * a.alpha2[k];
  }
  return f;
}

AlphaField beta_to_alpha(const SpinorField& f) {
  AlphaField a(f.grid);
  const Complex mi{0.0, -1.0};
  for (std::size_t k = 0; k < f.grid.size(); ++k) {
    a.alpha1[k] = 0.5 * (f.beta1[k] + f.beta2[k]);
    a.alpha2[k] = mi * 0.5 * (f.beta1[k] - f.beta2[k]);
  }
  return a;
}

bool all_finite(const SpinorField& f) {
  for (std::size_t k = 0; k < f.grid.size(); ++k) {
    if (!std::isfinite(f.beta1[k].real()) || !std::isfinite(f.beta1[k].imag()) ||
        !std::isfinite(f.beta2[k].real()) || !std::isfinite(f.beta2[k].imag())) {
      return false;
    }
  }
  return true;
}

}  // namespace dirac_edge
