#pragma once

#include <optional>
#include <vector>

#include "dirac_edge/mass.hpp"

namespace dirac_edge {

struct Grid1D {
  double u_min = 0.0, u_max = 0.0;
  int n = 0;
  double du() const { return (u_max - u_min) / n; }
  double u(int i) const { return u_min + i * du(); }
};

// Eigenproblem for the 1D operator [[-lambda, m - d_u],[m + d_u, lambda]],
// d_u discretized by 4th-order central differences with periodic closure.
struct Dirac1DProblem {
  double lambda = 0.0;
  TransitionProfile profile;
  Grid1D grid;
};

// Dense 2n x 2n matrix, row-major; real symmetric by construction (the skew
// part of d_u pairs with the off-diagonal blocks).
std::vector<double> assemble(const Dirac1DProblem& p);

struct EigenPair {
  double omega = 0.0;
  // real eigenvector components on the grid, unit L2 norm (du quadrature)
  std::vector<double> v1, v2;
};

// all eigenvalues, ascending
std::vector<double> eigenvalues(const Dirac1DProblem& p);

// k pairs with smallest |omega|, eigenvectors included
std::vector<EigenPair> eigenpairs(const Dirac1DProblem& p, int k);

// continuum threshold sqrt(lambda^2 + m_inf^2) of the constant-mass limit
double essential_spectrum_edge(double lambda, double m_inf);

struct DispersionRow {
  double lambda = 0.0;
  std::optional<double> omega_gap;
  double edge = 0.0;
};

std::vector<DispersionRow> dispersion_scan(const TransitionProfile& profile,
                                           const Grid1D& grid,
                                           const std::vector<double>& lambdas);

}  // namespace dirac_edge
