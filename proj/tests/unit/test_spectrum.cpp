#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qbertrand/error.hpp"
#include "qbertrand/radial.hpp"
#include "qbertrand/spectrum.hpp"

using namespace qbertrand;

namespace {

FamilyParams abc(double alpha, double a, double b, double c) {
  FamilyParams p;
  p.alpha = alpha;
  p.a = a;
  p.b = b;
  p.c = c;
  return p;
}

}  // namespace

TEST_CASE("discriminant") {
  CHECK(discriminant(abc(1, 1, 1, 0)) == 0.0);
  CHECK(discriminant(coulomb_params(1, -1.0)) == doctest::Approx(9.0));
  CHECK(discriminant(abc(1, 1, 3, -2)) == 12.0);
}

TEST_CASE("epsilon_n") {
  CHECK(epsilon_n(coulomb_params(0, -1.0), 0, Sign::minus) == doctest::Approx(1.0));
  CHECK(epsilon_n(oscillator_params(0, 1.0), 1, Sign::minus) == doctest::Approx(-2.0));
  const FamilyParams degenerate = abc(1.5, 1, 1, 0);
  CHECK(epsilon_n(degenerate, 3, Sign::plus) == epsilon_n(degenerate, 3, Sign::minus));
  CHECK_THROWS_AS(epsilon_n(abc(1, 1, 1, 1), 0, Sign::plus), Error);
}

TEST_CASE("energy_coulomb") {
  CHECK(energy_coulomb(0, 0).energy == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(energy_coulomb(1, 1).energy == doctest::Approx(-1.0 / 18.0).epsilon(1e-14));
  const double e20 = energy_coulomb(2, 0).energy;
  CHECK(energy_coulomb(1, 1).energy == doctest::Approx(e20).epsilon(1e-15));
  CHECK(energy_coulomb(0, 2).energy == doctest::Approx(e20).epsilon(1e-15));

  // sigma round trip: couplings give g2 = -e^2/(4 pi eps0).
  PhysicalConstants k;
  k.coulomb_strength = 1.7;
  k.mass = 0.8;
  for (int l = 0; l <= 3; ++l) {
    const SpectralLine line = energy_coulomb(2, l, k, 1.3);
    FamilyParams p = coulomb_params(l, line.sigma, k, 1.3);
    p.epsilon = line.epsilon_n;
    CHECK(couplings(p).g2 == doctest::Approx(-1.7).epsilon(1e-12));
    CHECK(line.energy == doctest::Approx(-0.8 * 1.7 * 1.7 / (2.0 * (3.0 + l) * (3.0 + l))).epsilon(1e-12));
  }
}

TEST_CASE("energy_oscillator") {
  CHECK(energy_oscillator(0, 0, 1.0).energy == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(energy_oscillator(1, 2, 1.0).energy == doctest::Approx(5.5).epsilon(1e-14));
  for (int n = 0; n <= 3; ++n)
    for (int l = 0; l <= 3; ++l)
      CHECK(energy_oscillator(n, l, 2.0).energy ==
            doctest::Approx(2.0 * energy_oscillator(n, l, 1.0).energy).epsilon(1e-14));
  // Degeneracy through 2n + l only.
  CHECK(energy_oscillator(1, 0, 1.0).energy == energy_oscillator(0, 2, 1.0).energy);
}

TEST_CASE("laguerre") {
  CHECK(laguerre(0, 3.3, -7.0) == 1.0);
  CHECK(laguerre(1, 0.5, 2.0) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(laguerre(2, 0.0, 1.0) == doctest::Approx(-0.5).epsilon(1e-15));
  for (int n = 0; n <= 6; ++n)
    for (double k = 0.0; k <= 5.0; k += 0.5)
      for (double x = 0.0; x <= 20.0; x += 0.25) {
        const double want = oracle::laguerre_series(n, k, x);
        CHECK(std::abs(laguerre(n, k, x) - want) / std::max(1.0, std::abs(want)) < 1e-12);
      }
}

TEST_CASE("branch_select") {
  CHECK(branch_select(coulomb_params(0, -1.0)) == Sign::plus);
  CHECK(branch_select(oscillator_params(1, 1.0)) == Sign::plus);
  CHECK_THROWS_AS(branch_select(abc(2.0, 0.5, 1.0, 0.0)), Error);
}

TEST_CASE("wavefunction_eval") {
  // Oscillator ground state is finite at the origin and equals the normalisation there.
  const Wavefunction g = make_wavefunction(oscillator_params(0, 1.0), 0);
  CHECK(wavefunction_eval(g, 1e-9) == doctest::Approx(g.normalization));

  const Wavefunction c = make_wavefunction(coulomb_params(0, -1.0), 0);
  const double r1 = 0.7, r2 = 2.9;
  CHECK(wavefunction_eval(c, r1) / wavefunction_eval(c, r2) ==
        doctest::Approx(std::exp((r1 - r2) / (2.0 * c.params.a))).epsilon(1e-13));

  const Wavefunction o1 = make_wavefunction(oscillator_params(0, 1.0), 1);
  int nodes = 0;
  double prev = wavefunction_eval(o1, 1e-3);
  for (int i = 1; i <= 4000; ++i) {
    const double v = wavefunction_eval(o1, 1e-3 + i * 1e-3 * 2.0);
    if ((v > 0) != (prev > 0)) ++nodes;
    prev = v;
  }
  CHECK(nodes == 1);
}

TEST_CASE("normalize") {
  const RadialGrid grid(1e-3, 30.0, 4000);
  const Wavefunction g = normalize(make_wavefunction(oscillator_params(0, 1.0), 0), grid);
  // psi = exp(-rho^2/2): int exp(-r^2) r^2 dr = sqrt(pi)/4.
  const double dense = oracle::trapezoid([](double r) { return std::exp(-r * r) * r * r; }, 0.0, 12.0, 400000);
  CHECK(dense == doctest::Approx(std::sqrt(std::numbers::pi) / 4.0).epsilon(1e-10));
  CHECK(g.normalization == doctest::Approx(1.0 / std::sqrt(dense)).epsilon(1e-8));

  const Wavefunction again = normalize(g, grid);
  CHECK(again.normalization == doctest::Approx(g.normalization).epsilon(1e-10));

  const Wavefunction finer = normalize(g, RadialGrid(1e-3, 30.0, 7999));
  CHECK(finer.normalization == doctest::Approx(g.normalization).epsilon(1e-8));

  CHECK_THROWS_AS(normalize(g, RadialGrid(1e-3, 2.0, 400)), Error);
}

TEST_CASE("analytic eigenfunctions satisfy the radial equation") {
  const RadialGrid grid(1e-3, 30.0, 4000);
  for (int l : {0, 2}) {
    for (int n : {0, 3}) {
      const Wavefunction w = make_wavefunction(oscillator_params(l, 1.0), n);
      const auto psi = wavefunction_samples(w, grid);
      const double e = energy_oscillator(n, l, 1.0).energy;
      CHECK(residual([](double r) { return 0.5 * r * r; }, e, psi, l, grid) < 1e-6);
    }
  }
}
