#include <doctest.h>

#include <cmath>
#include <random>

#include "qbertrand/error.hpp"
#include "qbertrand/family.hpp"
#include "qbertrand/spectrum.hpp"

using namespace qbertrand;

TEST_CASE("couplings: oscillator and Coulomb parametrisations") {
  const CouplingSet osc = couplings(oscillator_params(0, 1.0));
  CHECK(osc.g1 == doctest::Approx(0.5).epsilon(1e-15));
  const CouplingSet cou = couplings(coulomb_params(2, -0.7));
  CHECK(std::abs(cou.g3) < 1e-14);
}

TEST_CASE("couplings: A0 = 0 example gives tg3 = 0") {
  FamilyParams p;
  p.alpha = 2.0;
  p.a = 1.0;
  p.b = 2.0;
  CHECK(a0(p) == 0.0);
  CHECK(std::abs(couplings(p).tg3) < 1e-15);
}

TEST_CASE("potential_eval") {
  CouplingSet zero;
  zero.exponents = {2.0, 0.0, -2.0};
  for (double r : {0.1, 1.0, 7.0}) CHECK(potential_eval(zero, 7.0, r) == 7.0);

  FamilyParams c = coulomb_params(0, -1.0);
  c.epsilon = 1.0;
  const CouplingSet cc = couplings(c);
  for (double r : {0.2, 1.0, 4.5}) CHECK(potential_eval(cc, -cc.g1, r) == doctest::Approx(cc.g2 / r));

  FamilyParams o = oscillator_params(1, 1.0);
  const CouplingSet oc = couplings(o);
  for (double r : {0.2, 1.0, 4.5}) CHECK(potential_eval(oc, -oc.g2, r) == doctest::Approx(oc.g1 * r * r));
}

TEST_CASE("Coulomb potential with E = -g1 is exactly 1/r") {
  FamilyParams c = coulomb_params(1, -1.3);
  c.epsilon = 0.4;
  const CouplingSet cs = couplings(c);
  double lo = 1e300, hi = -1e300;
  for (int i = 0; i <= 60; ++i) {
    const double r = std::pow(10.0, -2.0 + 4.0 * i / 60.0);
    const double rv = r * potential_eval(cs, -cs.g1, r);
    lo = std::min(lo, rv);
    hi = std::max(hi, rv);
  }
  CHECK((hi - lo) / std::abs(hi) < 1e-12);
}

TEST_CASE("classify_alpha") {
  CHECK(classify_alpha(1.0) == AlphaClass::coulomb);
  CHECK(classify_alpha(2.0) == AlphaClass::oscillator);
  CHECK(classify_alpha(1.5) == AlphaClass::not_constant_independent);
  CHECK(classify_alpha(2.0 + 1e-13) == AlphaClass::oscillator);
  CHECK(classify_alpha(2.0 + 1e-9) == AlphaClass::not_constant_independent);
}

TEST_CASE("coulomb_params") {
  FamilyParams p = coulomb_params(0, -1.0);
  CHECK(p.alpha == 1.0);
  CHECK(p.a == -0.5);
  CHECK(p.b == -2.0);
  CHECK(p.c == -1.0);
  CHECK(coulomb_params(1, -1.0).c == 0.0);
  for (int l = 0; l <= 6; ++l)
    CHECK(discriminant(coulomb_params(l, -0.8)) == doctest::Approx((2 * l + 1.0) * (2 * l + 1.0)));
  CHECK_THROWS_AS(coulomb_params(0, 0.0), Error);
}

TEST_CASE("oscillator_params") {
  FamilyParams p = oscillator_params(0, 1.0);
  REQUIRE(p.sigma);
  CHECK(*p.sigma == -1.0);
  CHECK(p.a == -0.5);
  CHECK(p.b == -1.0);
  CHECK(p.c == 0.0);
  for (int l = 0; l <= 6; ++l) {
    const FamilyParams q = oscillator_params(l, 1.7);
    CHECK(std::abs(couplings(q).g3) < 1e-12);
    CHECK(discriminant(q) == doctest::Approx((2 * l + 1.0) * (2 * l + 1.0)));
  }
}

TEST_CASE("A0 and tg3 vanish for both parametrisations") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> sig(-3.0, -0.1);
  for (int l = 0; l <= 10; ++l) {
    const FamilyParams c = coulomb_params(l, sig(gen));
    const FamilyParams o = oscillator_params(l, -sig(gen));
    CHECK(std::abs(a0(c)) < 1e-14);
    CHECK(std::abs(a0(o)) < 1e-14);
    CHECK(std::abs(couplings(c).tg3) < 1e-12);
    CHECK(std::abs(couplings(o).tg3) < 1e-12);
  }
}

TEST_CASE("lambda scaling of the couplings") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 50; ++i) {
    FamilyParams p;
    p.alpha = 0.5 + 2.5 * (u(gen) + 2.0) / 4.0;
    p.a = u(gen) < 0 ? -0.5 - std::abs(u(gen)) : 0.5 + std::abs(u(gen));
    p.b = u(gen);
    p.c = u(gen);
    p.epsilon = u(gen);
    p.l = 2;
    p.lambda = 0.3 + std::abs(u(gen));
    const CouplingSet cs = couplings(p);
    const double lam = p.lambda;
    CHECK(cs.g1 == doctest::Approx(cs.tg1 * std::pow(lam, 2.0 * (1.0 - p.alpha))).epsilon(1e-14));
    CHECK(cs.g2 == doctest::Approx(cs.tg2 * std::pow(lam, 2.0 - p.alpha)).epsilon(1e-14));
    CHECK(cs.g3 == doctest::Approx(cs.tg3 * lam * lam).epsilon(1e-14));
    CHECK(cs.exponents[0] == 2.0 * (p.alpha - 1.0));
    CHECK(cs.exponents[1] == p.alpha - 2.0);
    CHECK(cs.exponents[2] == -2.0);
  }
}

TEST_CASE("solve_l_for_zero_energy") {
  // alpha = 2, a = 1, b = 2 gives A0 = 0, so l(l+1) = -c.
  auto l = solve_l_for_zero_energy(2.0, 1.0, 2.0, 0.0);
  REQUIRE(l);
  CHECK(*l == doctest::Approx(0.0));
  l = solve_l_for_zero_energy(2.0, 1.0, 2.0, -2.0);
  REQUIRE(l);
  CHECK(*l == doctest::Approx(1.0));
  CHECK_FALSE(solve_l_for_zero_energy(2.0, 1.0, 2.0, 5.0));

  l = solve_l_for_zero_energy(1.5, -0.5, -2.0, -1.0);
  REQUIRE(l);
  FamilyParams p;
  p.alpha = 1.5;
  p.a = -0.5;
  p.b = -2.0;
  p.c = -1.0;
  p.l = *l;
  CHECK(std::abs(couplings(p).tg3) < 1e-10);
}
