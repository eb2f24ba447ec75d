#pragma once

// The first-class central potential
//
//   V(r) = E + g1 r^{2(alpha-1)} + g2 r^{alpha-2} + g3 r^{-2}
//
// obtained by conjugating the Euler operator with exp{A/alpha} and mapping the
// result onto the three-dimensional radial equation.

#include <array>
#include <optional>

namespace qbertrand {

/// Natural units by default.
struct PhysicalConstants {
  double hbar = 1.0;
  double mass = 1.0;
  double coulomb_strength = 1.0;  ///< e^2 / (4 pi eps0)
  double omega = 1.0;             ///< oscillator angular frequency
};

struct FamilyParams {
  double alpha = 1.0;
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
  double epsilon = 0.0;
  double lambda = 1.0;  ///< length scale, r = lambda * rho
  double l = 0.0;       ///< may be non-integer, see solve_l_for_zero_energy
  PhysicalConstants constants{};
  /// Set by the Coulomb / oscillator constructors.
  std::optional<double> sigma{};

  /// Throws Error(invalid_parameter) unless a != 0, lambda > 0, l >= 0 and
  /// hbar, mass > 0.
  void validate() const;
};

struct CouplingSet {
  double g1 = 0.0;
  double g2 = 0.0;
  double g3 = 0.0;
  double tg1 = 0.0;
  double tg2 = 0.0;
  double tg3 = 0.0;
  std::array<double, 3> exponents{};  ///< (2(alpha-1), alpha-2, -2)
};

enum class AlphaClass { coulomb, oscillator, not_constant_independent };

inline constexpr double alpha_tolerance = 1e-12;

/// A0 = (b - 6a + 2a alpha) / (2a), the power of rho in S(rho).
double a0(const FamilyParams& p);

CouplingSet couplings(const FamilyParams& p);

/// V(r) for the given couplings; r > 0.
double potential_eval(const CouplingSet& cs, double energy, double r);

/// A constant term can be cancelled against E only when one of the exponents
/// 2(alpha-1), alpha-2 vanishes.
AlphaClass classify_alpha(double alpha) noexcept;

const char* to_string(AlphaClass c) noexcept;

/// Coulomb parametrisation: alpha = 1, a = 1/(2 sigma), b = 2/sigma,
/// c = (2 - l(l+1))/(2 sigma). sigma must be non-zero; normalisable states need
/// sigma < 0.
FamilyParams coulomb_params(int l, double sigma, const PhysicalConstants& constants = {},
                            double lambda = 1.0);

/// Oscillator parametrisation: alpha = 2, sigma = -m omega lambda^2 / hbar,
/// a = 1/(2 sigma), b = 1/sigma, c = -l(l+1)/(2 sigma).
FamilyParams oscillator_params(int l, double omega, const PhysicalConstants& constants = {},
                               double lambda = 1.0);

/// Angular momentum l >= 0 at which the inverse-square coupling vanishes, so
/// that the E = 0 problem closes. Empty when no real l >= 0 exists.
std::optional<double> solve_l_for_zero_energy(double alpha, double a, double b, double c);

}  // namespace qbertrand
