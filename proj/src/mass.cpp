#include "dirac_edge/mass.hpp"

#include <cmath>
#include <stdexcept>

namespace dirac_edge {

double TransitionProfile::operator()(double u) const {
  switch (kind) {
    case Kind::Tanh:
      return m_inf * std::tanh(u);
    case Kind::Sign:
      return u > 0 ? m_inf : (u < 0 ? -m_inf : 0.0);
    case Kind::Custom:
      return custom(u);
  }
  return 0.0;
}

TransitionProfile TransitionProfile::tanh_profile(double m_inf) {
  if (m_inf <= 0) throw std::invalid_argument("m_inf must be positive");
  TransitionProfile p;
  p.kind = Kind::Tanh;
  p.m_inf = m_inf;
  p.r0 = std::atanh(0.5);  // |m_inf tanh u| > m_inf/2 for |u| > atanh(1/2)
  return p;
}

TransitionProfile TransitionProfile::sign_profile(double m_inf) {
  if (m_inf <= 0) throw std::invalid_argument("m_inf must be positive");
  TransitionProfile p;
  p.kind = Kind::Sign;
  p.m_inf = m_inf;
  p.r0 = 0.1;
  return p;
}

TransitionProfile TransitionProfile::custom_profile(
    std::function<double(double)> f, double m_inf, double r0) {
  if (m_inf <= 0 || r0 <= 0) throw std::invalid_argument("bad custom profile");
  TransitionProfile p;
  p.kind = Kind::Custom;
  p.m_inf = m_inf;
  p.r0 = r0;
  p.custom = std::move(f);
  return p;
}

PerturbedEdge PerturbedEdge::sine(double epsilon, double amplitude,
                                  double frequency) {
  PerturbedEdge e;
  e.h = [=](double s) { return amplitude * std::sin(frequency * s); };
  e.dh = [=](double s) { return amplitude * frequency * std::cos(frequency * s); };
  e.d2h = [=](double s) {
    return -amplitude * frequency * frequency * std::sin(frequency * s);
  };
  e.epsilon = epsilon;
  e.h_period = 2.0 * M_PI / frequency;
  return e;
}

double signed_edge_coordinate(const EdgeGeometry& g, double x1, double x2) {
  return std::visit(
      [&](const auto& e) -> double {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, StraightEdge>) {
          return std::cos(e.theta) * x1 + std::sin(e.theta) * x2;
        } else if constexpr (std::is_same_v<T, CircleEdge>) {
          return std::hypot(x1, x2) - e.R;
        } else {
          return x1 + e.h(e.epsilon * x2);
        }
      },
      g);
}

std::vector<double> sample_mass(const MassModel& mm, const GridSpec& grid) {
  std::vector<double> m(grid.size());
  for (int i2 = 0; i2 < grid.n2; ++i2) {
    const double x2 = grid.x2(i2);
    for (int i1 = 0; i1 < grid.n1; ++i1) {
      m[grid.index(i1, i2)] = mm.eval(grid.x1(i1), x2);
    }
  }
  return m;
}

}  // namespace dirac_edge
