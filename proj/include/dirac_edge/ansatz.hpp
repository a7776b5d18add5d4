#pragma once

#include <array>
#include <functional>
#include <variant>

#include "dirac_edge/grid.hpp"
#include "dirac_edge/mass.hpp"

namespace dirac_edge {

struct Spinor {
  Complex c1{0.0, 0.0}, c2{0.0, 0.0};
};

// Transverse bound-state profile chi(u) = C exp(-int_0^u m), normalized so
// that int chi^2 du = 1. Closed forms for the built-in profiles:
//   tanh: C cosh(u)^{-m_inf},  sign: C exp(-m_inf |u|).
struct ChiProfile {
  TransitionProfile profile;
  double C = 0.0;

  double operator()(double u) const;
  double deriv(double u) const { return -profile(u) * (*this)(u); }

  static ChiProfile make(const TransitionProfile& p);
};

struct GaussianEnvelope {
  double center = 0.0;
  double width = 1.0;
  double operator()(double v) const;
  double deriv(double v) const;
};

// 2pi-periodic C^inf bump exp(kappa (cos(a - center) - 1)), effective angular
// width ~ 1/sqrt(kappa).
struct PeriodicBumpEnvelope {
  double center = 0.0;
  double kappa = 40.0;
  double operator()(double a) const;
  double deriv(double a) const;
};

using Envelope = std::variant<GaussianEnvelope, PeriodicBumpEnvelope>;

double envelope_value(const Envelope& g, double v);
double envelope_deriv(const Envelope& g, double v);

// Spinor rotation S of the straight-edge reduction; row-major 2x2, unitary.
std::array<Complex, 4> rotation_spinor(double theta);

// Exact plane-wave edge state chi(n.x) e^{i lambda (t.x - time)} (cos t/2, i sin t/2).
Spinor plane_wave(const ChiProfile& chi, double theta, double lambda, double t,
                  double x1, double x2);

// Exact traveling edge state chi(n.x) g(t.x - time) (cos t/2, i sin t/2).
Spinor straight_traveling(const ChiProfile& chi, double theta,
                          const Envelope& g, double t, double x1, double x2);

// Radial profile of the circle ansatz: 0 on [0,R/3], cubic smoothstep blend
// into (1/sqrt R) chi(r-R) e^{-r/2R} on (R/3,R/2), that closed form beyond.
// Construction checks R > 3 r0 and the slope bound |phi'| < 12 phi(R/2)/R on
// the blend interval.
class CirclePhi {
 public:
  CirclePhi(double R, ChiProfile chi);

  double operator()(double r) const;
  double deriv(double r) const;
  double radius() const { return R_; }
  const ChiProfile& chi() const { return chi_; }

 private:
  double R_;
  ChiProfile chi_;
};

Spinor circle_ansatz(const CirclePhi& phi, const Envelope& g, double t,
                     double x1, double x2);

// Analytic value of (i d_t + D) applied to the circle ansatz.
Spinor circle_residual(const CirclePhi& phi, const Envelope& g, double t,
                       double x1, double x2);

Spinor curved_ansatz(const ChiProfile& chi, const PerturbedEdge& edge,
                     const Envelope& g, double t, double x1, double x2);

// Analytic value of (i d_t + D^eps) applied to the curved ansatz.
Spinor curved_residual(const ChiProfile& chi, const PerturbedEdge& edge,
                       const Envelope& g, double t, double x1, double x2);

// Closed-form solution evaluator used by the runner and diagnostics.
struct AnsatzSolution {
  std::function<Spinor(double t, double x1, double x2)> eval;

  SpinorField sample(const GridSpec& grid, double t, double scale = 1.0) const;
};

AnsatzSolution make_plane_ansatz(ChiProfile chi, double theta, double lambda);
AnsatzSolution make_straight_ansatz(ChiProfile chi, double theta, Envelope g);
AnsatzSolution make_circle_ansatz(CirclePhi phi, Envelope g);
AnsatzSolution make_curved_ansatz(ChiProfile chi, PerturbedEdge edge, Envelope g);

}  // namespace dirac_edge
