#pragma once

// Second class: conjugate (D^2 + beta D + delta) rho^s = 0 with exp{-gamma O},
// O = a rho^alpha d/drho + b rho^{alpha-1}, and map the result to radial form.
//
// The tabulated coefficient set (A1..D3), F-functions and potential are
// evaluated exactly as listed. The tabulated F2 and F3 do not reproduce the
// conjugated operator, so an exact route (conjugated_F, chain_potential) is
// provided as well and used wherever an eigenfunction has to satisfy the
// equation.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qbertrand/family.hpp"
#include "qbertrand/monomial.hpp"
#include "qbertrand/radial.hpp"

namespace qbertrand {

struct SecondClassParams {
  double alpha = 2.0;
  double beta = 0.0;
  double delta = 0.0;
  double gamma = 1.0;
  double a = 1.0;
  double b = 0.0;
  int l = 0;
  double lambda = 1.0;
  PhysicalConstants constants{};

  /// Throws Error(invalid_parameter) unless (alpha - 1) gamma a != 0, lambda > 0, l >= 0.
  void validate() const;
};

struct DerivedCoefficients {
  double A1 = 0.0, A2 = 0.0;
  double B1 = 0.0, B2 = 0.0, B3 = 0.0;
  double C1 = 0.0, C2 = 0.0, C3 = 0.0;
  double D1 = 0.0, D2 = 0.0, D3 = 0.0;
};

/// Throws Error(degenerate_coefficient) naming B2, C2 or D2 when B1, C1 or D1
/// vanishes (checked in that order).
DerivedCoefficients derived_coeffs(const SecondClassParams& p);

/// Roots of s^2 + beta s + delta = 0, larger first. Throws Error(complex_roots).
std::pair<double, double> eta_bar_exponents(const SecondClassParams& p);

struct FValues {
  double F1 = 0.0, F2 = 0.0, F3 = 0.0;
};

/// F1 = A1 rho^2 (rho^{alpha-1} + A2)^2, F2 = B1 rho (rho^{alpha-1} + B2)^2 + B3,
/// F3 = C1 (rho^{alpha-1} + C2)^2 + C3.
FValues F_functions(const DerivedCoefficients& dc, const SecondClassParams& p, double rho);

/// dF1/drho of the closed form above.
double F1_derivative(const DerivedCoefficients& dc, const SecondClassParams& p, double rho);

struct ConjugatedF {
  double F1 = 0.0, F2 = 0.0, F3 = 0.0;
  double dF1 = 0.0, dF2 = 0.0;
};

/// Coefficients of the conjugated operator itself. With k = gamma (alpha - 1),
/// P = rho + k a rho^alpha and Q = k b rho^{alpha-1}:
///   F1 = P^2, F2 = P P' + 2 P Q + beta P, F3 = P Q' + Q^2 + beta Q.
/// F1 coincides with the tabulated one.
ConjugatedF conjugated_F(const SecondClassParams& p, double rho);

/// S on the grid from S'/S = (F2 - 2 F1')/(2 F1) - 1/rho with the tabulated
/// F-functions, normalised to S = 1 at the middle grid point. Throws
/// Error(turning_point_on_grid) when F1 vanishes on [r_min, r_max].
std::vector<double> s_factor(const DerivedCoefficients& dc, const SecondClassParams& p,
                             const RadialGrid& grid);

/// Same ODE with the conjugated F-functions.
std::vector<double> s_factor_exact(const SecondClassParams& p, const RadialGrid& grid);

struct SecondPotentialTerms {
  double product = 0.0;      ///< [B-block][D-block] / (4 A1^2 rho^4 (.)^4)
  double d_block = 0.0;      ///< D1 (.)((2 alpha - 1) rho^{alpha-1} + D2) / (A1 rho^2 (.)^2)
  double geometric = 0.0;    ///< the 8/rho^2 (...)^2 (...) term
  double c_block = 0.0;      ///< -[C1 (.)^2 + C3 + delta] / (A1 rho^2 (.)^2)
  double centrifugal = 0.0;  ///< -l(l+1)/rho^2
  double total() const { return product + d_block + geometric + c_block + centrifugal; }
};

/// Tabulated Vt - Et, term by term (dimensionless).
SecondPotentialTerms second_potential_terms(const DerivedCoefficients& dc,
                                            const SecondClassParams& p, double rho);
double second_potential(const DerivedCoefficients& dc, const SecondClassParams& p, double rho);

/// Vt - Et obtained by removing the first derivative from the conjugated
/// equation: u = rho F1 S chi solves u'' = (Vt - Et + l(l+1)/rho^2) u.
double chain_potential(const SecondClassParams& p, double rho);

/// sum_k (-gamma)^k / k! O^k rho^s.
SeriesExpansion second_wavefunction_series(const SecondClassParams& p, double s_root,
                                           std::size_t truncation);

/// The series is a power series in rho^{alpha-1} with radius |A2|, so it
/// converges for rho < |A2|^{1/(alpha-1)} when alpha > 1 and for
/// rho > |A2|^{1/(alpha-1)} when alpha < 1.
struct ConvergenceDomain {
  double threshold = 0.0;
  bool upper_bound = true;  ///< true: rho < threshold
  bool contains(double rho) const { return upper_bound ? rho < threshold : rho > threshold; }
};
ConvergenceDomain series_convergence_domain(const SecondClassParams& p);

struct ZeroEnergyFit {
  double inverse_square_coefficient = 0.0;  ///< least-squares c in c / rho^2
  std::optional<double> l_effective;        ///< l' with l'(l'+1) = l(l+1) + c, if real
  double remainder = 0.0;                   ///< relative rms misfit of the c / rho^2 model
  bool absorbed = false;                    ///< remainder < 1e-8
};

struct AlphaReport {
  double alpha = 0.0;
  bool excluded = false;
  bool constant_independent = false;
  /// Exponents of the monomials in rho^2 (rho^{alpha-1} + A2)^2, the
  /// denominator that multiplies delta.
  std::vector<double> surviving_exponents;
  /// (max - min) / max of |d(Vt - Et)/d delta| over the sample grid.
  double delta_sensitivity_variation = 0.0;
  std::optional<ZeroEnergyFit> zero_energy;
  std::string note;
};

struct IndependenceReport {
  std::vector<AlphaReport> entries;
  bool negative = true;  ///< no grid alpha is constant independent
};

/// For each alpha (other fields from `templ`) decides whether the spectral
/// constant delta can be traded for a pure energy shift, as E + g_i = 0 does for
/// the first class, and fits the E = 0 potential to a pure inverse square.
IndependenceReport constant_independence_report(const std::vector<double>& alpha_grid,
                                                const SecondClassParams& templ);

}  // namespace qbertrand
