#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dirac_edge/mass.hpp"

using namespace dirac_edge;

TEST_CASE("transition profile limits and oddness") {
  const TransitionProfile tanh1 = TransitionProfile::tanh_profile(1.0);
  const TransitionProfile sgn = TransitionProfile::sign_profile(1.0);
  CHECK(std::abs(tanh1(50.0) - 1.0) < 1e-10);
  CHECK(std::abs(tanh1(-50.0) + 1.0) < 1e-10);
  CHECK(std::abs(sgn(50.0) - 1.0) < 1e-10);
  CHECK(std::abs(sgn(-50.0) + 1.0) < 1e-10);
  for (double u : {0.1, 0.7, 2.0, 13.0}) {
    CHECK(tanh1(-u) == doctest::Approx(-tanh1(u)).epsilon(1e-15));
    CHECK(sgn(-u) == -sgn(u));
  }
  CHECK(sgn(0.0) == 0.0);

  // |m(u)| > m_inf/2 beyond r0
  for (double u = 1.001; u < 40.0; u *= 1.5) {
    CHECK(std::abs(tanh1(tanh1.r0 * u)) > 0.5);
    CHECK(std::abs(sgn(sgn.r0 * u)) > 0.5);
  }

  const TransitionProfile scaled = TransitionProfile::tanh_profile(2.5);
  CHECK(scaled(50.0) == doctest::Approx(2.5).epsilon(1e-12));
  CHECK_THROWS_AS(TransitionProfile::tanh_profile(-1.0), std::invalid_argument);
}

TEST_CASE("signed edge coordinate per geometry") {
  CHECK(signed_edge_coordinate(CircleEdge{20.0}, 20.0, 0.0) == 0.0);
  CHECK(signed_edge_coordinate(StraightEdge{0.0}, 3.0, 7.0) ==
        doctest::Approx(3.0).epsilon(1e-15));
  // edge x1 = -sin(0.2 x2) passes through (-sin(1), 5)
  const PerturbedEdge pe = PerturbedEdge::sine(0.2);
  CHECK(signed_edge_coordinate(pe, -std::sin(0.2 * 5.0), 5.0) ==
        doctest::Approx(0.0).epsilon(1e-15));
  // rotated straight edge
  CHECK(signed_edge_coordinate(StraightEdge{M_PI / 2}, 5.0, 2.0) ==
        doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("eval_mass") {
  const TransitionProfile p = TransitionProfile::tanh_profile(1.0);
  const MassModel on_line{p, StraightEdge{0.0}};
  CHECK(on_line.eval(0.0, 3.0) == 0.0);
  CHECK(on_line.eval(50.0, 0.0) == doctest::Approx(1.0).epsilon(1e-12));

  const MassModel ring{TransitionProfile::sign_profile(1.0), CircleEdge{10.0}};
  CHECK(ring.eval(0.0, 0.0) == -1.0);

  // sign change across the edge
  const MassModel tanh_ring{p, CircleEdge{10.0}};
  for (double th = 0.1; th < 6.2; th += 0.7) {
    const double c = std::cos(th), s = std::sin(th);
    CHECK(tanh_ring.eval(9.5 * c, 9.5 * s) < 0.0);
    CHECK(tanh_ring.eval(10.5 * c, 10.5 * s) > 0.0);
  }
}

TEST_CASE("sample_mass structure") {
  const GridSpec g = make_grid(-60, 60, -60, 60, 64, 64);

  const MassModel zero{TransitionProfile::custom_profile(
                           [](double) { return 0.0; }, 1.0, 0.1),
                       StraightEdge{0.0}};
  for (double v : sample_mass(zero, g)) CHECK(v == 0.0);

  const MassModel ring{TransitionProfile::tanh_profile(1.0), CircleEdge{20.0}};
  const std::vector<double> m = sample_mass(ring, g);
  // node nearest the origin is deep inside: m ~ -m_inf
  CHECK(m[g.index(32, 32)] == doctest::Approx(-1.0).epsilon(1e-8));

  // tanh straight edge: odd under x1-reflection about the edge line
  const MassModel line{TransitionProfile::tanh_profile(1.0), StraightEdge{0.0}};
  const std::vector<double> ml = sample_mass(line, g);
  for (int i1 = 1; i1 < 64; ++i1) {
    CHECK(ml[g.index(i1, 7)] ==
          doctest::Approx(-ml[g.index(64 - i1, 7)]).epsilon(1e-13));
  }
}

TEST_CASE("circle mass is rotationally invariant") {
  const MassModel ring{TransitionProfile::tanh_profile(1.0), CircleEdge{20.0}};
  for (double r : {1.0, 15.0, 20.0, 21.3, 44.0}) {
    const double ref = ring.eval(r, 0.0);
    for (double th = 0.3; th < 6.3; th += 0.9) {
      CHECK(ring.eval(r * std::cos(th), r * std::sin(th)) ==
            doctest::Approx(ref).epsilon(1e-12));
    }
  }
}

TEST_CASE("perturbed mass converges to the straight mass as epsilon -> 0") {
  // h(0)=0 for the built-in sine, so the limit is the theta=0 straight edge
  const TransitionProfile p = TransitionProfile::tanh_profile(1.0);
  const MassModel straight{p, StraightEdge{0.0}};
  const MassModel bent{p, PerturbedEdge::sine(1e-6)};
  for (double x1 : {-3.0, -0.2, 0.4, 2.0}) {
    for (double x2 : {-7.0, 0.0, 1.5, 6.0}) {
      CHECK(std::abs(bent.eval(x1, x2) - straight.eval(x1, x2)) < 1e-5);
    }
  }
}
