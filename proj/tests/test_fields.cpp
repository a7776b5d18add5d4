#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "dirac_edge/grid.hpp"

using namespace dirac_edge;

namespace {

std::mt19937 rng(12345);

SpinorField random_field(const GridSpec& g) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SpinorField f(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    f.beta1[i] = {u(rng), u(rng)};
    f.beta2[i] = {u(rng), u(rng)};
  }
  return f;
}

}  // namespace

TEST_CASE("make_grid spacing") {
  const GridSpec g = make_grid(-10, 10, -10 * M_PI, 10 * M_PI, 128, 512);
  CHECK(g.dx1() == doctest::Approx(20.0 / 128).epsilon(1e-15));
  CHECK(g.dx2() == doctest::Approx(20.0 * M_PI / 512).epsilon(1e-15));
  CHECK(g.x1(0) == -10.0);
  CHECK(g.x2(256) == doctest::Approx(0.0).epsilon(1e-14));

  const GridSpec tiny = make_grid(0, 1, 0, 1, 2, 2);
  CHECK(tiny.dx1() == 0.5);
  CHECK(tiny.dx2() == 0.5);

  const GridSpec big = make_grid(-60, 60, -60, 60, 512, 512);
  CHECK(big.dx1() == 0.234375);
}

TEST_CASE("make_grid rejects bad input") {
  CHECK_THROWS_AS(make_grid(0, 1, 0, 1, 100, 128), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(0, 1, 0, 1, 128, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(1, 1, 0, 1, 128, 128), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(0, 1, 2, 1, 128, 128), std::invalid_argument);
}

TEST_CASE("l2_norm basics") {
  const GridSpec g = make_grid(0, 1, 0, 1, 16, 16);
  SpinorField zero(g);
  CHECK(l2_norm(zero) == 0.0);

  SpinorField ones(g);
  for (auto& v : ones.beta1) v = 1.0;
  CHECK(l2_norm(ones) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(energy(ones) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("l2_norm of a separable chi*g product matches 1D quadratures") {
  // oracle: the cell sum factorizes exactly for f(x1,x2) = a(x1) b(x2)
  const GridSpec g = make_grid(-20, 20, -20, 20, 128, 128);
  auto a = [](double x) { return 1.0 / std::cosh(x) / std::sqrt(2.0); };
  auto b = [](double x) { return std::exp(-x * x / 2.0) / std::pow(M_PI, 0.25); };

  double qa = 0, qb = 0;
  for (int i = 0; i < 128; ++i) {
    qa += a(g.x1(i)) * a(g.x1(i)) * g.dx1();
    qb += b(g.x2(i)) * b(g.x2(i)) * g.dx2();
  }
  SpinorField f(g);
  for (int i2 = 0; i2 < g.n2; ++i2) {
    for (int i1 = 0; i1 < g.n1; ++i1) {
      f.beta1[g.index(i1, i2)] = a(g.x1(i1)) * b(g.x2(i2));
    }
  }
  // both factors are unit-normalized on the line, quadrature included
  CHECK(l2_norm(f) == doctest::Approx(std::sqrt(qa * qb)).epsilon(1e-13));
  CHECK(l2_norm(f) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("l2_distance basics and metric axioms") {
  const GridSpec g = make_grid(0, 1, 0, 1, 16, 16);
  SpinorField zero(g);
  const SpinorField b = random_field(g);
  CHECK(l2_distance(b, b) == 0.0);
  CHECK(l2_distance(zero, b) == doctest::Approx(l2_norm(b)).epsilon(1e-14));

  // constant shift of both components on the unit box
  const Complex c{0.3, -0.4};
  SpinorField shifted = b;
  for (auto& v : shifted.beta1) v += c;
  for (auto& v : shifted.beta2) v += c;
  CHECK(l2_distance(b, shifted) ==
        doctest::Approx(std::abs(c) * std::sqrt(2.0)).epsilon(1e-13));

  // symmetry and triangle inequality on random triples
  for (int rep = 0; rep < 8; ++rep) {
    const SpinorField x = random_field(g), y = random_field(g),
                      z = random_field(g);
    CHECK(l2_distance(x, y) == doctest::Approx(l2_distance(y, x)).epsilon(1e-14));
    CHECK(l2_distance(x, z) <=
          l2_distance(x, y) + l2_distance(y, z) + 1e-12);
  }

  const GridSpec other = make_grid(0, 1, 0, 1, 32, 32);
  SpinorField mismatched(other);
  CHECK_THROWS_AS(l2_distance(b, mismatched), std::invalid_argument);
}

TEST_CASE("alpha/beta change of variables") {
  const GridSpec g = make_grid(0, 1, 0, 1, 8, 8);

  AlphaField a(g);
  for (auto& v : a.alpha1) v = 1.0;
  SpinorField f = alpha_to_beta(a);
  CHECK(f.beta1[0] == Complex{1.0, 0.0});
  CHECK(f.beta2[0] == Complex{1.0, 0.0});

  AlphaField a2(g);
  for (auto& v : a2.alpha2) v = 1.0;
  SpinorField f2 = alpha_to_beta(a2);
  CHECK(f2.beta1[0] == Complex{0.0, 1.0});
  CHECK(f2.beta2[0] == Complex{0.0, -1.0});

  // round trip and norm doubling on random fields
  for (int rep = 0; rep < 4; ++rep) {
    AlphaField r(g);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double alpha_energy = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      r.alpha1[i] = {u(rng), u(rng)};
      r.alpha2[i] = {u(rng), u(rng)};
      alpha_energy += std::norm(r.alpha1[i]) + std::norm(r.alpha2[i]);
    }
    alpha_energy *= g.cell_area();
    const SpinorField beta = alpha_to_beta(r);
    CHECK(energy(beta) == doctest::Approx(2.0 * alpha_energy).epsilon(1e-12));
    const AlphaField back = beta_to_alpha(beta);
    double maxdiff = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      maxdiff = std::max(maxdiff, std::abs(back.alpha1[i] - r.alpha1[i]));
      maxdiff = std::max(maxdiff, std::abs(back.alpha2[i] - r.alpha2[i]));
    }
    CHECK(maxdiff < 1e-14);
  }
}

TEST_CASE("all_finite flags NaN") {
  const GridSpec g = make_grid(0, 1, 0, 1, 8, 8);
  SpinorField f(g);
  CHECK(all_finite(f));
  f.beta2[17] = {std::nan(""), 0.0};
  CHECK(!all_finite(f));
}
