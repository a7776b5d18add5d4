#include "dirac_edge/ansatz.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dirac_edge {

namespace {

constexpr Complex kI{0.0, 1.0};

// log cosh without overflow
double lncosh(double u) {
  const double a = std::abs(u);
  return a + std::log1p(std::exp(-2.0 * a)) - M_LN2;
}

// adaptive Simpson for custom-profile exponents
double simpson(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  return (b - a) / 6.0 * (f(a) + 4.0 * f(c) + f(b));
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double whole, double tol, int depth) {
  const double c = 0.5 * (a + b);
  const double left = simpson(f, a, c);
  const double right = simpson(f, c, b);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol) {
    return left + right + (left + right - whole) / 15.0;
  }
  return adaptive_simpson(f, a, c, left, tol / 2, depth - 1) +
         adaptive_simpson(f, c, b, right, tol / 2, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-12) {
  if (a == b) return 0.0;
  return adaptive_simpson(f, a, b, simpson(f, a, b), tol, 40);
}

}  // namespace

double ChiProfile::operator()(double u) const {
  switch (profile.kind) {
    case TransitionProfile::Kind::Tanh:
      return C * std::exp(-profile.m_inf * lncosh(u));
    case TransitionProfile::Kind::Sign:
      return C * std::exp(-profile.m_inf * std::abs(u));
    case TransitionProfile::Kind::Custom:
      return C * std::exp(-integrate(
                     [this](double s) { return profile(s); }, 0.0, u));
  }
  return 0.0;
}

ChiProfile ChiProfile::make(const TransitionProfile& p) {
  ChiProfile chi;
  chi.profile = p;
  chi.C = 1.0;
  switch (p.kind) {
    case TransitionProfile::Kind::Tanh: {
      // int cosh^{-2m} du = sqrt(pi) Gamma(m) / Gamma(m + 1/2)
      const double m = p.m_inf;
      const double lnB =
          0.5 * std::log(M_PI) + std::lgamma(m) - std::lgamma(m + 0.5);
      chi.C = std::exp(-0.5 * lnB);
      break;
    }
    case TransitionProfile::Kind::Sign:
      // int exp(-2 m |u|) du = 1/m
      chi.C = std::sqrt(p.m_inf);
      break;
    case TransitionProfile::Kind::Custom: {
      // quadrature of chi^2 over a range wide enough that the tail bound
      // exp(-m_inf (|u|-r0)) is negligible
      const double U = p.r0 + 60.0 / p.m_inf;
      ChiProfile raw = chi;
      const double I = integrate(
          [&raw](double u) {
            const double v = raw(u);
            return v * v;
          },
          -U, U, 1e-14);
      if (!(I > 0.0) || !std::isfinite(I)) {
        throw std::runtime_error("chi normalization quadrature failed");
      }
      chi.C = 1.0 / std::sqrt(I);
      break;
    }
  }
  return chi;
}

double GaussianEnvelope::operator()(double v) const {
  const double z = (v - center) / width;
  return std::exp(-0.5 * z * z);
}

double GaussianEnvelope::deriv(double v) const {
  return -(v - center) / (width * width) * (*this)(v);
}

double PeriodicBumpEnvelope::operator()(double a) const {
  return std::exp(kappa * (std::cos(a - center) - 1.0));
}

double PeriodicBumpEnvelope::deriv(double a) const {
  return -kappa * std::sin(a - center) * (*this)(a);
}

double envelope_value(const Envelope& g, double v) {
  return std::visit([v](const auto& e) { return e(v); }, g);
}

double envelope_deriv(const Envelope& g, double v) {
  return std::visit([v](const auto& e) { return e.deriv(v); }, g);
}

std::array<Complex, 4> rotation_spinor(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return {Complex{c, 0.0}, Complex{0.0, -s}, Complex{0.0, -s}, Complex{c, 0.0}};
}

Spinor plane_wave(const ChiProfile& chi, double theta, double lambda, double t,
                  double x1, double x2) {
  const double ct = std::cos(theta), st = std::sin(theta);
  const double u = ct * x1 + st * x2;
  const double v = -st * x1 + ct * x2;
  const Complex amp = chi(u) * std::exp(kI * lambda * (v - t));
  return {amp * std::cos(theta / 2), amp * kI * std::sin(theta / 2)};
}

Spinor straight_traveling(const ChiProfile& chi, double theta,
                          const Envelope& g, double t, double x1, double x2) {
  const double ct = std::cos(theta), st = std::sin(theta);
  const double u = ct * x1 + st * x2;
  const double v = -st * x1 + ct * x2;
  const double amp = chi(u) * envelope_value(g, v - t);
  return {Complex{amp * std::cos(theta / 2), 0.0},
          Complex{0.0, amp * std::sin(theta / 2)}};
}

CirclePhi::CirclePhi(double R, ChiProfile chi) : R_(R), chi_(std::move(chi)) {
  if (!(R_ > 3.0 * chi_.profile.r0)) {
    throw std::invalid_argument("circle radius must satisfy R > 3 r0 (R=" +
                                std::to_string(R_) + ", r0=" +
                                std::to_string(chi_.profile.r0) + ")");
  }
  // Slope control on the blend interval, checked once at construction. C1
  // continuity forces phi'(R/2) = (m_inf tanh(R/2) - 1/2R) phi(R/2), so the
  // admissible bound is the continuation slope plus a 12/R allowance; the
  // blend must not overshoot it anywhere.
  const double bound =
      (chi_.profile.m_inf + 12.0 / R_) * (*this)(R_ / 2.0);
  for (int i = 1; i <= 256; ++i) {
    const double r = R_ / 3.0 + (R_ / 6.0) * i / 256.0;
    if (!(std::abs(deriv(r)) < bound)) {
      throw std::runtime_error("circle phi blend violates the slope bound");
    }
  }
}

double CirclePhi::operator()(double r) const {
  if (r <= R_ / 3.0) return 0.0;
  const double b3 = chi_(r - R_) * std::exp(-r / (2.0 * R_)) / std::sqrt(R_);
  if (r >= R_ / 2.0) return b3;
  const double s = (r - R_ / 3.0) / (R_ / 6.0);
  return s * s * (3.0 - 2.0 * s) * b3;
}

double CirclePhi::deriv(double r) const {
  if (r <= R_ / 3.0) return 0.0;
  const double e = std::exp(-r / (2.0 * R_)) / std::sqrt(R_);
  const double b3 = chi_(r - R_) * e;
  const double db3 = (chi_.deriv(r - R_) - chi_(r - R_) / (2.0 * R_)) * e;
  if (r >= R_ / 2.0) return db3;
  const double s = (r - R_ / 3.0) / (R_ / 6.0);
  const double w = s * s * (3.0 - 2.0 * s);
  const double dw = 6.0 * s * (1.0 - s) / (R_ / 6.0);
  return dw * b3 + w * db3;
}

namespace {

// polar angle in [0, 2pi); the half-angle spinor branch cut sits on theta=0
double polar_angle(double x1, double x2) {
  double a = std::atan2(x2, x1);
  if (a < 0) a += 2.0 * M_PI;
  return a;
}

}  // namespace

Spinor circle_ansatz(const CirclePhi& phi, const Envelope& g, double t,
                     double x1, double x2) {
  const double r = std::hypot(x1, x2);
  const double th = polar_angle(x1, x2);
  const double amp = phi(r) * envelope_value(g, th - t / phi.radius());
  return {Complex{amp * std::cos(th / 2), 0.0},
          Complex{0.0, amp * std::sin(th / 2)}};
}

Spinor circle_residual(const CirclePhi& phi, const Envelope& g, double t,
                       double x1, double x2) {
  const double r = std::hypot(x1, x2);
  const double R = phi.radius();
  if (r <= R / 3.0) return {};  // phi vanishes identically there
  const double th = polar_angle(x1, x2);
  const double arg = th - t / R;
  const double m = phi.chi().profile(r - R);
  const double A = phi.deriv(r) + m * phi(r) + phi(r) / (2.0 * r);
  const double B = (1.0 / r - 1.0 / R) * phi(r);
  const double G = envelope_value(g, arg);
  const double Gp = envelope_deriv(g, arg);
  const double c = std::cos(th / 2), s = std::sin(th / 2);
  return {kI * (A * G * s + B * Gp * c), Complex{A * G * c - B * Gp * s, 0.0}};
}

Spinor curved_ansatz(const ChiProfile& chi, const PerturbedEdge& edge,
                     const Envelope& g, double t, double x1, double x2) {
  const double eps = edge.epsilon;
  const double s = eps * x2;
  const double w = x1 + edge.h(s);
  const double hp = edge.dh(s);
  const double z = -eps * hp * w + x2 - t;
  const double amp = chi(w) * envelope_value(g, z);
  return {Complex{amp, 0.0}, kI * (0.5 * eps * hp * amp)};
}

Spinor curved_residual(const ChiProfile& chi, const PerturbedEdge& edge,
                       const Envelope& g, double t, double x1, double x2) {
  const double eps = edge.epsilon;
  const double s = eps * x2;
  const double w = x1 + edge.h(s);
  const double hp = edge.dh(s);
  const double hpp = edge.d2h(s);
  const double z = -eps * hp * w + x2 - t;
  const double ch = chi(w);
  const double chp = chi.deriv(w);
  const double G = envelope_value(g, z);
  const double Gp = envelope_deriv(g, z);
  const double half_eps2 = 0.5 * eps * eps;
  const Complex r1 = -kI * half_eps2 * ch * Gp * (2.0 * w * hpp + hp * hp);
  const Complex r2{half_eps2 * (ch * G * hpp + chp * G * hp * hp -
                                eps * w * ch * Gp * hp * hpp -
                                eps * ch * Gp * hp * hp * hp),
                   0.0};
  return {r1, r2};
}

SpinorField AnsatzSolution::sample(const GridSpec& grid, double t,
                                   double scale) const {
  SpinorField f(grid);
  for (int i2 = 0; i2 < grid.n2; ++i2) {
    const double x2 = grid.x2(i2);
    for (int i1 = 0; i1 < grid.n1; ++i1) {
      const Spinor v = eval(t, grid.x1(i1), x2);
      const std::size_t k = grid.index(i1, i2);
      f.beta1[k] = scale * v.c1;
      f.beta2[k] = scale * v.c2;
    }
  }
  return f;
}

AnsatzSolution make_plane_ansatz(ChiProfile chi, double theta, double lambda) {
  return {[chi = std::move(chi), theta, lambda](double t, double x1, double x2) {
    return plane_wave(chi, theta, lambda, t, x1, x2);
  }};
}

AnsatzSolution make_straight_ansatz(ChiProfile chi, double theta, Envelope g) {
  return {[chi = std::move(chi), theta, g = std::move(g)](double t, double x1,
                                                          double x2) {
    return straight_traveling(chi, theta, g, t, x1, x2);
  }};
}

AnsatzSolution make_circle_ansatz(CirclePhi phi, Envelope g) {
  return {[phi = std::move(phi), g = std::move(g)](double t, double x1,
                                                   double x2) {
    return circle_ansatz(phi, g, t, x1, x2);
  }};
}

AnsatzSolution make_curved_ansatz(ChiProfile chi, PerturbedEdge edge,
                                  Envelope g) {
  return {[chi = std::move(chi), edge = std::move(edge),
           g = std::move(g)](double t, double x1, double x2) {
    return curved_ansatz(chi, edge, g, t, x1, x2);
  }};
}

}  // namespace dirac_edge
