#include "qbertrand/pct.hpp"

#include <cmath>

#include "qbertrand/error.hpp"

namespace qbertrand {

PctMap identity_map() {
  return {[](double r) { return r; }, [](double) { return 1.0; }, [](double) { return 0.0; },
          [](double) { return 0.0; }};
}

PctMap exp_map() {
  auto e = [](double r) { return std::exp(r); };
  return {e, e, e, e};
}

PctMap affine_map(double scale, double shift) {
  if (!(scale > 0.0)) throw Error(Errc::invalid_parameter, "affine map needs scale > 0");
  return {[=](double r) { return scale * r + shift; }, [=](double) { return scale; },
          [](double) { return 0.0; }, [](double) { return 0.0; }};
}

const char* to_string(PctForm form) noexcept {
  return form == PctForm::canonical ? "canonical" : "tabulated";
}

namespace {

double energy_scale(const FamilyParams& p) {
  return p.constants.hbar * p.constants.hbar / (2.0 * p.constants.mass * p.lambda * p.lambda);
}

}  // namespace

double pct_linear_coupling(const FamilyParams& p) {
  return (p.b + p.a * (p.alpha - 1.0 - 2.0 * p.epsilon)) / (2.0 * p.a * p.a);
}

double pct_inverse_square_coupling(const FamilyParams& p) {
  const double h = p.b / (2.0 * p.a);
  return h * (h - 1.0) - p.c / p.a;
}

double pct_potential(const FamilyParams& p, const PctMap& map, double rho, double energy,
                     PctForm form) {
  p.validate();
  if (!(rho > 0.0)) throw Error(Errc::invalid_parameter, "pct_potential requires rho > 0");
  const double f = map.f(rho), f1 = map.d1(rho), f2 = map.d2(rho), f3 = map.d3(rho);
  if (!(f > 0.0) || !(f1 > 0.0))
    throw Error(Errc::invalid_parameter, "PCT map needs f > 0 and f' > 0");
  const double al = p.alpha;
  const double et = energy / energy_scale(p);
  const double B = pct_linear_coupling(p);
  const double K = pct_inverse_square_coupling(p);
  const double centrifugal = p.l * (p.l + 1.0) / (rho * rho);

  const double first = std::pow(f1 * std::pow(f, al - 1.0), 2.0) / (4.0 * p.a * p.a);
  const double second = B * f1 * f1 * std::pow(f, al - 2.0);
  const double third = K * (f1 / f) * (f1 / f);

  if (form == PctForm::canonical) {
    const double schwarz = 0.75 * (f2 / f1) * (f2 / f1) - 0.5 * f3 / f1;
    return et + first + second + third + schwarz - centrifugal;
  }
  return et + first + second + third - centrifugal + 0.75 * (f2 / f) * (f2 / f) - 0.5 * f3 / f1 -
         2.0 * f2 / (f * f1) + (2.0 - al) * f1 * f2 / (f * f) + 2.0 * (f2 / f1) * (f2 / f1);
}

double exp_map_potential(const FamilyParams& p, double rho, PctForm form) {
  p.validate();
  if (!(rho > 0.0)) throw Error(Errc::invalid_parameter, "exp_map_potential requires rho > 0");
  const double al = p.alpha;
  double v = std::exp(2.0 * al * rho) / (4.0 * p.a * p.a) +
             pct_linear_coupling(p) * std::exp(al * rho) - p.l * (p.l + 1.0) / (rho * rho);
  if (form == PctForm::tabulated) v -= 2.0 * std::exp(-rho);
  return v;
}

double pct_energy(const FamilyParams& p, PctForm form) {
  p.validate();
  const double K = pct_inverse_square_coupling(p);
  const double et = form == PctForm::canonical ? -(K + 0.25) : p.alpha - 17.0 / 4.0 - K;
  return energy_scale(p) * et;
}

Sign pct_branch_select(const FamilyParams& p) {
  const double d = discriminant(p);
  if (d < 0.0) throw Error(Errc::negative_discriminant, "Delta is negative");
  const double sq = std::sqrt(d);
  // u ~ f^{s sqrt(Delta)/2} exp{f^alpha/(2 a alpha)} with f = e^rho.
  if (p.alpha > 0.0 && p.a * p.alpha < 0.0) return Sign::plus;
  if (p.alpha < 0.0 && sq > 0.0) return Sign::minus;
  throw Error(Errc::not_normalizable, "no branch decays for f = e^rho");
}

PctSolution make_pct_solution(const FamilyParams& p, int l_fixed, int n, PctForm form) {
  if (l_fixed < 0) throw Error(Errc::invalid_parameter, "l must be non-negative");
  PctSolution sol;
  sol.params = p;
  sol.params.l = l_fixed;
  sol.l_fixed = l_fixed;
  sol.n = n;
  sol.form = form;
  sol.branch = pct_branch_select(p);
  sol.params.epsilon = epsilon_n(p, n, epsilon_branch_for(sol.branch));
  sol.energy = pct_energy(sol.params, form);
  return sol;
}

double pct_wavefunction(const PctSolution& sol, double rho) {
  if (!(rho > 0.0)) throw Error(Errc::invalid_parameter, "pct_wavefunction requires rho > 0");
  const FamilyParams& p = sol.params;
  const double s_sq = sign_value(sol.branch) * std::sqrt(discriminant(p));
  const double aa = p.a * p.alpha;
  const double fa = std::exp(p.alpha * rho);  // f^alpha
  const double power = (s_sq + (sol.form == PctForm::canonical ? 0.0 : 1.0)) / 2.0;
  return std::exp(power * rho + fa / (2.0 * aa)) * laguerre(sol.n, s_sq / p.alpha, -fa / aa) / rho;
}

std::pair<double, double> morse_view(const FamilyParams& p, PctForm form) {
  if (std::abs(p.alpha + 1.0) > alpha_tolerance)
    throw Error(Errc::wrong_alpha, "the Morse form needs alpha = -1");
  const double quadratic = 1.0 / (4.0 * p.a * p.a);
  double linear = pct_linear_coupling(p);
  if (form == PctForm::tabulated) linear -= 2.0;
  return {quadratic, linear};
}

}  // namespace qbertrand
