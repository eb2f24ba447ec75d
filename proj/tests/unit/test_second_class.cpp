#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include "oracles.hpp"
#include "qbertrand/error.hpp"
#include "qbertrand/second_class.hpp"

using namespace qbertrand;

namespace {

SecondClassParams example() {
  SecondClassParams p;
  p.alpha = 2.0;
  p.a = 1.0;
  p.b = 1.0;
  p.gamma = 1.0;
  return p;
}

}  // namespace

TEST_CASE("derived_coeffs worked example") {
  const DerivedCoefficients d = derived_coeffs(example());
  CHECK(d.A2 == 1.0);
  CHECK(d.A1 == 1.0);
  CHECK(d.B1 == 4.0);
  CHECK(d.B2 == 0.5);
  CHECK(d.B3 == 0.0);
  CHECK(d.C1 == 2.0);
  CHECK(d.C2 == 0.0);
  CHECK(d.C3 == 0.0);
  CHECK(d.D1 == -4.0);
  CHECK(d.D2 == 1.0);
  CHECK(d.D3 == 6.0);
}

TEST_CASE("derived_coeffs guards and invariants") {
  SecondClassParams p = example();
  p.b = 0.0;
  try {
    derived_coeffs(p);
    FAIL("expected DegenerateCoefficient");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::degenerate_coefficient);
    CHECK(std::string(e.what()).find("C2") != std::string::npos);
  }

  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    SecondClassParams q;
    q.alpha = 1.3 + std::abs(u(gen));
    q.a = 0.4 + std::abs(u(gen));
    q.b = 0.3 + std::abs(u(gen));
    q.gamma = 0.2 + std::abs(u(gen));
    q.beta = u(gen);
    q.delta = u(gen);
    const DerivedCoefficients d = derived_coeffs(q);
    CHECK(d.A1 == doctest::Approx(1.0 / (d.A2 * d.A2)).epsilon(1e-15));
    CHECK(1.0 / d.A2 == doctest::Approx((q.alpha - 1.0) * q.gamma * q.a).epsilon(1e-15));
    CHECK(d.B3 == 1.0 + q.beta - d.B1 * d.B2 * d.B2);
    CHECK(d.C3 == doctest::Approx(-d.C1 * d.C2 * d.C2 / q.b).epsilon(1e-15));
    CHECK(d.D3 == 1.0 + q.beta - 4.0 / d.D1 - d.D1 * d.D2 * d.D2);
  }
}

TEST_CASE("eta_bar_exponents") {
  SecondClassParams p = example();
  auto [s1, s2] = eta_bar_exponents(p);
  CHECK(s1 == 0.0);
  CHECK(s2 == 0.0);
  p.beta = -3.0;
  p.delta = 2.0;
  std::tie(s1, s2) = eta_bar_exponents(p);
  CHECK(s1 == 2.0);
  CHECK(s2 == 1.0);
  p.beta = 1.0;
  p.delta = 1.0;
  CHECK_THROWS_AS(eta_bar_exponents(p), Error);
}

TEST_CASE("F_functions") {
  const SecondClassParams p = example();
  const DerivedCoefficients d = derived_coeffs(p);
  CHECK(F_functions(d, p, 1.0).F1 == 4.0);

  SecondClassParams q = example();
  q.a = -1.0;  // A2 = -1, so F1 vanishes at rho = 1
  q.b = 0.5;
  const DerivedCoefficients dq = derived_coeffs(q);
  CHECK(F_functions(dq, q, 1.0).F1 == 0.0);

  CHECK(F_functions(d, p, 1e-9).F2 == doctest::Approx(d.B3).scale(1.0).epsilon(1e-8));
  for (double rho = 0.05; rho < 10.0; rho *= 1.3) CHECK(F_functions(d, p, rho).F1 >= 0.0);

  auto f1 = [&](double r) { return F_functions(d, p, r).F1; };
  CHECK(F1_derivative(d, p, 1.3) == doctest::Approx(oracle::derivative(f1, 1.3, 1e-3)).epsilon(1e-10));
}

TEST_CASE("s_factor") {
  const SecondClassParams p = example();
  const DerivedCoefficients d = derived_coeffs(p);
  const RadialGrid grid(0.2, 2.5, 8001);
  const auto S = s_factor(d, p, grid);
  CHECK(S[(grid.size() - 1) / 2] == 1.0);

  double worst = 0.0;
  const double h = grid.spacing();
  for (std::size_t i = 2; i + 2 < grid.size(); ++i) {
    const double dlog = (std::log(S[i - 2]) - 8 * std::log(S[i - 1]) + 8 * std::log(S[i + 1]) -
                         std::log(S[i + 2])) / (12 * h);
    const double rho = grid.r(i);
    const FValues f = F_functions(d, p, rho);
    const double rhs = (f.F2 - 2.0 * F1_derivative(d, p, rho)) / (2.0 * f.F1) - 1.0 / rho;
    worst = std::max(worst, std::abs(dlog - rhs));
  }
  CHECK(worst < 1e-8);

  // Halving the spacing leaves log S unchanged on the shared points.
  const RadialGrid fine(0.2, 2.5, 16001);
  const auto Sf = s_factor(d, p, fine);
  double drift = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) drift = std::max(drift, std::abs(std::log(S[i]) - std::log(Sf[2 * i])));
  CHECK(drift < 1e-8);

  SecondClassParams q = example();
  q.a = -1.0;
  q.b = 0.5;
  CHECK_THROWS_AS(s_factor(derived_coeffs(q), q, RadialGrid(0.5, 2.0, 100)), Error);
}

TEST_CASE("second_potential worked example at rho = 1") {
  const SecondClassParams p = example();
  const DerivedCoefficients d = derived_coeffs(p);
  // Hand evaluation: -90/64 - 8 + 39 - 2.
  CHECK(second_potential(d, p, 1.0) == doctest::Approx(27.59375).epsilon(1e-15));

  DerivedCoefficients no_d = d;
  no_d.D1 = 0.0;
  no_d.D3 = 0.0;
  const SecondPotentialTerms t = second_potential_terms(no_d, p, 1.3);
  CHECK(t.product == 0.0);
  CHECK(t.d_block == 0.0);
}

TEST_CASE("second_potential large-rho slope") {
  const SecondClassParams p = example();
  const DerivedCoefficients d = derived_coeffs(p);
  std::vector<double> x, y;
  for (double rho = 1e3; rho < 1e5; rho *= 1.5) {
    x.push_back(rho);
    y.push_back(second_potential(d, p, rho));
  }
  // Every block decays like rho^{-2}: the growth of the numerators cancels against (.)^4.
  CHECK(oracle::loglog_slope(x, y) == doctest::Approx(-2.0).epsilon(1e-3));
}

TEST_CASE("second_wavefunction_series") {
  SecondClassParams p = example();
  p.gamma = 0.0;
  CHECK(second_wavefunction_series(p, 1.5, 10).series.size() == 1);

  p = example();
  p.b = -2.0;  // a s + b = 0 at s = 2
  const auto t = second_wavefunction_series(p, 2.0, 10);
  CHECK(t.terminated);
  CHECK(t.generated == 1);

  SecondClassParams q;
  q.alpha = 0.5;
  q.a = 1.0;
  q.b = 0.3;
  q.gamma = 0.2;
  const double v40 = series_eval(second_wavefunction_series(q, 1.0, 40).series, 0.5);
  const double v41 = series_eval(second_wavefunction_series(q, 1.0, 41).series, 0.5);
  CHECK(std::abs(v40 - v41) < 1e-10);
  CHECK(series_convergence_domain(q).contains(0.5));
}

TEST_CASE("constant_independence_report") {
  SecondClassParams templ = example();
  templ.b = 0.33;
  const IndependenceReport r = constant_independence_report({0.5, 1.0, 1.5, 2.0, 3.0}, templ);
  CHECK(r.negative);
  REQUIRE(r.entries.size() == 5);
  CHECK(r.entries[1].excluded);
  for (const auto& e : r.entries) {
    CHECK_FALSE(e.constant_independent);
    if (!e.excluded) CHECK_FALSE(e.surviving_exponents.empty());
  }
}

TEST_CASE("chain potential and conjugated F1 agree with the tabulated F1") {
  SecondClassParams p = example();
  p.beta = -3.0;
  p.delta = 2.0;
  const DerivedCoefficients d = derived_coeffs(p);
  for (double rho : {0.3, 1.0, 2.0})
    CHECK(conjugated_F(p, rho).F1 == doctest::Approx(F_functions(d, p, rho).F1).epsilon(1e-14));
}
