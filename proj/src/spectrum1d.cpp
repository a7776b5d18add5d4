#include "dirac_edge/spectrum1d.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dirac_edge/ansatz.hpp"

namespace dirac_edge {

namespace {

void check_grid(const Dirac1DProblem& p) {
  if (p.grid.n < 64) {
    throw std::invalid_argument("1D grid too small (n >= 64 required)");
  }
  if (!(p.grid.u_max > p.grid.u_min)) {
    throw std::invalid_argument("degenerate 1D grid");
  }
  // the bound state must be flat at the boundaries for the periodic closure
  const ChiProfile chi = ChiProfile::make(p.profile);
  if (chi(p.grid.u_min) > 1e-10 || chi(p.grid.u_max) > 1e-10) {
    throw std::invalid_argument(
        "1D grid too narrow: chi does not decay below 1e-10 at the ends");
  }
}

std::vector<double> dense_eigen(std::vector<double>& a, int N, char jobz) {
  std::vector<double> w(N);
  const int info =
      LAPACKE_dsyev(LAPACK_ROW_MAJOR, jobz, 'U', N, a.data(), N, w.data());
  if (info != 0) {
    throw std::runtime_error("dsyev failed, info=" + std::to_string(info));
  }
  return w;
}

}  // namespace

std::vector<double> assemble(const Dirac1DProblem& p) {
  check_grid(p);
  const int n = p.grid.n;
  const std::size_t N = 2 * static_cast<std::size_t>(n);
  const double h = p.grid.du();
  std::vector<double> a(N * N, 0.0);

  // 4th-order central difference weights for d_u, periodic indices
  const double w1 = 8.0 / (12.0 * h);
  const double w2 = -1.0 / (12.0 * h);
  auto wrap = [n](int i) { return (i % n + n) % n; };

  for (int i = 0; i < n; ++i) {
    const double m = p.profile(p.grid.u(i));
    a[i * N + i] = -p.lambda;
    a[(n + i) * N + (n + i)] = p.lambda;
    // off-diagonal blocks: (m - D) upper, (m + D) lower
    a[i * N + (n + i)] += m;
    a[(n + i) * N + i] += m;
    const int ip1 = wrap(i + 1), im1 = wrap(i - 1);
    const int ip2 = wrap(i + 2), im2 = wrap(i - 2);
    a[i * N + (n + ip1)] -= w1;
    a[i * N + (n + im1)] += w1;
    a[i * N + (n + ip2)] -= w2;
    a[i * N + (n + im2)] += w2;
    a[(n + i) * N + ip1] += w1;
    a[(n + i) * N + im1] -= w1;
    a[(n + i) * N + ip2] += w2;
    a[(n + i) * N + im2] -= w2;
  }
  return a;
}

std::vector<double> eigenvalues(const Dirac1DProblem& p) {
  std::vector<double> a = assemble(p);
  return dense_eigen(a, 2 * p.grid.n, 'N');
}

std::vector<EigenPair> eigenpairs(const Dirac1DProblem& p, int k) {
  const int n = p.grid.n;
  const int N = 2 * n;
  std::vector<double> a = assemble(p);
  const std::vector<double> w = dense_eigen(a, N, 'V');

  std::vector<int> order(N);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&w](int i, int j) {
    return std::abs(w[i]) < std::abs(w[j]);
  });

  const double inv_sqrt_du = 1.0 / std::sqrt(p.grid.du());
  std::vector<EigenPair> out;
  out.reserve(std::min(k, N));
  for (int j = 0; j < std::min(k, N); ++j) {
    const int col = order[j];
    EigenPair e;
    e.omega = w[col];
    e.v1.resize(n);
    e.v2.resize(n);
    for (int i = 0; i < n; ++i) {
      e.v1[i] = a[i * N + col] * inv_sqrt_du;
      e.v2[i] = a[(n + i) * N + col] * inv_sqrt_du;
    }
    out.push_back(std::move(e));
  }
  return out;
}

double essential_spectrum_edge(double lambda, double m_inf) {
  return std::hypot(lambda, m_inf);
}

std::vector<DispersionRow> dispersion_scan(const TransitionProfile& profile,
                                           const Grid1D& grid,
                                           const std::vector<double>& lambdas) {
  std::vector<DispersionRow> table;
  table.reserve(lambdas.size());
  const double margin = 5.0 * grid.du() * grid.du();
  for (const double lambda : lambdas) {
    Dirac1DProblem p{lambda, profile, grid};
    const std::vector<double> w = eigenvalues(p);
    DispersionRow row;
    row.lambda = lambda;
    row.edge = essential_spectrum_edge(lambda, profile.m_inf);
    double best = row.edge;
    for (const double omega : w) {
      if (std::abs(omega) < row.edge - margin && std::abs(omega) < best) {
        best = std::abs(omega);
        row.omega_gap = omega;
      }
    }
    table.push_back(row);
  }
  return table;
}

}  // namespace dirac_edge
