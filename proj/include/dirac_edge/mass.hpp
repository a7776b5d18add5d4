#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "dirac_edge/grid.hpp"

namespace dirac_edge {

// Transition function m(u) of an edge-admissible mass: tends to +-m_inf as
// u -> +-inf and satisfies |m(u)| > m_inf/2 for |u| > r0.
struct TransitionProfile {
  enum class Kind { Tanh, Sign, Custom };

  Kind kind = Kind::Tanh;
  double m_inf = 1.0;
  double r0 = 0.0;
  std::function<double(double)> custom;

  double operator()(double u) const;

  static TransitionProfile tanh_profile(double m_inf = 1.0);
  static TransitionProfile sign_profile(double m_inf = 1.0);
  static TransitionProfile custom_profile(std::function<double(double)> f,
                                          double m_inf, double r0);
};

// Edge geometries. The signed edge coordinate u vanishes on the edge and the
// mass is m(u); positive u points into the positive-mass bulk.
struct StraightEdge {
  double theta = 0.0;  // azimuth of the unit normal n = (cos t, sin t)
};

struct CircleEdge {
  double R = 0.0;  // u = r - R, positive mass outside
};

// Edge x1 + h(eps x2) = 0; h supplied with analytic first and second
// derivatives (the curved ansatz and its residual use them directly).
struct PerturbedEdge {
  std::function<double(double)> h, dh, d2h;
  double epsilon = 0.0;
  double h_period = 0.0;  // period of h in its own argument; 0 if aperiodic

  static PerturbedEdge sine(double epsilon, double amplitude = 1.0,
                            double frequency = 1.0);
};

using EdgeGeometry = std::variant<StraightEdge, CircleEdge, PerturbedEdge>;

double signed_edge_coordinate(const EdgeGeometry& g, double x1, double x2);

struct MassModel {
  TransitionProfile profile;
  EdgeGeometry geometry;

  double eval(double x1, double x2) const {
    return profile(signed_edge_coordinate(geometry, x1, x2));
  }
};

std::vector<double> sample_mass(const MassModel& mm, const GridSpec& grid);

}  // namespace dirac_edge
