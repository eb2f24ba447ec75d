#include "qbertrand/family.hpp"

#include <algorithm>
#include <cmath>

#include "qbertrand/error.hpp"

namespace qbertrand {

void FamilyParams::validate() const {
  if (a == 0.0) throw Error(Errc::invalid_parameter, "a must be non-zero");
  if (!(lambda > 0.0)) throw Error(Errc::invalid_parameter, "lambda must be positive");
  if (!(l >= 0.0)) throw Error(Errc::invalid_parameter, "l must be non-negative");
  if (!(constants.hbar > 0.0) || !(constants.mass > 0.0))
    throw Error(Errc::invalid_parameter, "hbar and mass must be positive");
}

double a0(const FamilyParams& p) { return (p.b - 6.0 * p.a + 2.0 * p.a * p.alpha) / (2.0 * p.a); }

CouplingSet couplings(const FamilyParams& p) {
  p.validate();
  const double hbar2 = p.constants.hbar * p.constants.hbar;
  const double m = p.constants.mass;
  const double lam = p.lambda;
  const double lam2 = lam * lam;
  const double A0 = a0(p);
  const double al = p.alpha;
  const double ll = p.l * (p.l + 1.0);

  CouplingSet cs;
  cs.tg1 = hbar2 / (8.0 * m * p.a * p.a * lam2);
  cs.tg2 = hbar2 * (2.0 * A0 - al + 5.0 - 2.0 * p.epsilon) / (4.0 * m * p.a * lam2);
  const double bracket = (p.a * (2.0 - al) * (3.0 - al) + p.b * al - 2.0 * p.b + p.c) / p.a;
  cs.tg3 = hbar2 * (A0 * (A0 + 1.0) - ll - bracket) / (2.0 * m * lam2);

  cs.g1 = cs.tg1 * std::pow(lam, 2.0 * (1.0 - al));
  cs.g2 = cs.tg2 * std::pow(lam, 2.0 - al);
  cs.g3 = cs.tg3 * lam2;
  cs.exponents = {2.0 * (al - 1.0), al - 2.0, -2.0};
  return cs;
}

double potential_eval(const CouplingSet& cs, double energy, double r) {
  if (!(r > 0.0)) throw Error(Errc::invalid_parameter, "potential_eval requires r > 0");
  return energy + cs.g1 * std::pow(r, cs.exponents[0]) + cs.g2 * std::pow(r, cs.exponents[1]) +
         cs.g3 * std::pow(r, cs.exponents[2]);
}

AlphaClass classify_alpha(double alpha) noexcept {
  if (std::abs(alpha - 1.0) <= alpha_tolerance) return AlphaClass::coulomb;
  if (std::abs(alpha - 2.0) <= alpha_tolerance) return AlphaClass::oscillator;
  return AlphaClass::not_constant_independent;
}

const char* to_string(AlphaClass c) noexcept {
  switch (c) {
    case AlphaClass::coulomb: return "Coulomb";
    case AlphaClass::oscillator: return "Oscillator";
    case AlphaClass::not_constant_independent: return "NotConstantIndependent";
  }
  return "?";
}

FamilyParams coulomb_params(int l, double sigma, const PhysicalConstants& constants,
                            double lambda) {
  if (l < 0) throw Error(Errc::invalid_parameter, "l must be non-negative");
  if (sigma == 0.0 || !std::isfinite(sigma))
    throw Error(Errc::invalid_parameter, "Coulomb parametrisation needs finite sigma != 0");
  const double ll = static_cast<double>(l) * (l + 1);
  FamilyParams p;
  p.alpha = 1.0;
  p.a = 1.0 / (2.0 * sigma);
  p.b = 2.0 / sigma;
  p.c = (2.0 - ll) / (2.0 * sigma);
  p.lambda = lambda;
  p.l = l;
  p.constants = constants;
  p.sigma = sigma;
  p.validate();
  return p;
}

FamilyParams oscillator_params(int l, double omega, const PhysicalConstants& constants,
                               double lambda) {
  if (l < 0) throw Error(Errc::invalid_parameter, "l must be non-negative");
  if (!(omega > 0.0)) throw Error(Errc::invalid_parameter, "omega must be positive");
  const double sigma = -constants.mass * omega * lambda * lambda / constants.hbar;
  const double ll = static_cast<double>(l) * (l + 1);
  FamilyParams p;
  p.alpha = 2.0;
  p.a = 1.0 / (2.0 * sigma);
  p.b = 1.0 / sigma;
  p.c = -ll / (2.0 * sigma);
  p.lambda = lambda;
  p.l = l;
  p.constants = constants;
  p.constants.omega = omega;
  p.sigma = sigma;
  p.validate();
  return p;
}

std::optional<double> solve_l_for_zero_energy(double alpha, double a, double b, double c) {
  if (a == 0.0) throw Error(Errc::invalid_parameter, "a must be non-zero");
  const double A0 = (b - 6.0 * a + 2.0 * a * alpha) / (2.0 * a);
  const double rhs =
      A0 * (A0 + 1.0) - (a * (2.0 - alpha) * (3.0 - alpha) + b * alpha - 2.0 * b + c) / a;
  // Rounding can push an exact zero slightly negative.
  if (rhs < -1e-12) return std::nullopt;
  return 0.5 * (-1.0 + std::sqrt(1.0 + 4.0 * std::max(rhs, 0.0)));
}

}  // namespace qbertrand
