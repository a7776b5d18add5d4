#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace dirac_edge {

using Complex = std::complex<double>;

// Uniform periodic 2D grid. Points are left-closed: x_i = min + i*dx,
// the right endpoint wraps around. n1, n2 must be powers of two.
struct GridSpec {
  double x1_min = 0.0, x1_max = 0.0;
  double x2_min = 0.0, x2_max = 0.0;
  int n1 = 0, n2 = 0;

  double dx1() const { return (x1_max - x1_min) / n1; }
  double dx2() const { return (x2_max - x2_min) / n2; }
  double cell_area() const { return dx1() * dx2(); }
  double x1(int i) const { return x1_min + i * dx1(); }
  double x2(int j) const { return x2_min + j * dx2(); }
  std::size_t size() const { return static_cast<std::size_t>(n1) * n2; }
  // storage is x1-fastest
  std::size_t index(int i1, int i2) const {
    return static_cast<std::size_t>(i2) * n1 + i1;
  }
  bool operator==(const GridSpec&) const = default;
};

GridSpec make_grid(double x1_min, double x1_max, double x2_min, double x2_max,
                   int n1, int n2);

// Two-component spinor field (beta1, beta2) sampled on a grid.
struct SpinorField {
  GridSpec grid;
  std::vector<Complex> beta1, beta2;

  SpinorField() = default;
  explicit SpinorField(const GridSpec& g)
      : grid(g), beta1(g.size()), beta2(g.size()) {}
};

// The (alpha1, alpha2) representation of the same state.
struct AlphaField {
  GridSpec grid;
  std::vector<Complex> alpha1, alpha2;

  AlphaField() = default;
  explicit AlphaField(const GridSpec& g)
      : grid(g), alpha1(g.size()), alpha2(g.size()) {}
};

// sqrt of the total energy, cell-sum quadrature (spectrally accurate for
// periodic band-limited data)
double l2_norm(const SpinorField& f);
double l2_distance(const SpinorField& a, const SpinorField& b);
double energy(const SpinorField& f);

// beta1 = alpha1 + i alpha2, beta2 = alpha1 - i alpha2
SpinorField alpha_to_beta(const AlphaField& a);
AlphaField beta_to_alpha(const SpinorField& f);

bool all_finite(const SpinorField& f);

}  // namespace dirac_edge
