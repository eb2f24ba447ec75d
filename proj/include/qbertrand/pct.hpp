#pragma once

// Point canonical transformations rho -> f(rho) of the first-class equation.
//
// Two forms are provided. `tabulated` is the closed form with the extra
// f''-dependent terms, the -2 e^{-rho} piece and the 17/4 energy constant.
// `canonical` is the Liouville normal form of the transformed equation; only
// this one is actually solved by the eigenfunctions below (the tabulated
// potential leaves an O(1) residual).
//
// All potentials here are dimensionless: Vt(rho) = (2 m lambda^2 / hbar^2) V(lambda rho).

#include <functional>
#include <utility>

#include "qbertrand/family.hpp"
#include "qbertrand/spectrum.hpp"

namespace qbertrand {

/// f and its first three derivatives, all supplied analytically.
struct PctMap {
  std::function<double(double)> f;
  std::function<double(double)> d1;
  std::function<double(double)> d2;
  std::function<double(double)> d3;
};

PctMap identity_map();
PctMap exp_map();
/// f(rho) = scale * rho + shift, scale > 0.
PctMap affine_map(double scale, double shift = 0.0);

enum class PctForm { canonical, tabulated };

const char* to_string(PctForm form) noexcept;

/// (1/(2a^2)) [b + a(alpha - 1 - 2 epsilon)], the f^{alpha-2} coupling.
double pct_linear_coupling(const FamilyParams& p);

/// (b/2a)(b/2a - 1) - c/a, the (f'/f)^2 coupling.
double pct_inverse_square_coupling(const FamilyParams& p);

/// Dimensionless potential at rho for the given physical energy. For the
/// canonical form this is Et + T(rho) - l(l+1)/rho^2, where u'' = T u is the
/// Liouville form of the transformed equation.
double pct_potential(const FamilyParams& p, const PctMap& map, double rho, double energy,
                     PctForm form = PctForm::tabulated);

/// f = e^rho with the constant part cancelled against the energy.
double exp_map_potential(const FamilyParams& p, double rho, PctForm form = PctForm::tabulated);

/// Physical energy (hbar^2 / (2 m lambda^2)) Et, independent of l. Tabulated:
/// Et = alpha - 17/4 - (b/2a)(b/2a - 1) + c/a. Canonical: Et = -1/4 - (b/2a)(b/2a - 1) + c/a.
double pct_energy(const FamilyParams& p, PctForm form = PctForm::tabulated);

/// Sign of sqrt(Delta) that makes u decay as rho -> infinity for f = e^rho.
/// Throws Error(not_normalizable) when neither does.
Sign pct_branch_select(const FamilyParams& p);

struct PctSolution {
  FamilyParams params;  ///< epsilon matches (n, branch)
  int l_fixed = 0;
  double energy = 0.0;
  int n = 0;
  Sign branch = Sign::plus;  ///< sign of sqrt(Delta) in the eigenfunction
  PctForm form = PctForm::canonical;
};

/// Fixes l, selects the branch, sets epsilon for level n and the energy.
PctSolution make_pct_solution(const FamilyParams& p, int l_fixed, int n,
                              PctForm form = PctForm::canonical);

/// Unnormalised psi(rho) for f = e^rho. Tabulated form:
///   (1/rho) f^{(s sqrt(Delta)+1)/2} exp{f^alpha/(2a alpha)} L_n^{s sqrt(Delta)/alpha}(-f^alpha/(a alpha));
/// the canonical form carries an extra (f')^{-1/2}.
double pct_wavefunction(const PctSolution& sol, double rho);

/// Coefficients of e^{-2 rho} and e^{-rho} in the alpha = -1 exp-map potential.
/// Throws Error(wrong_alpha) unless alpha = -1.
std::pair<double, double> morse_view(const FamilyParams& p, PctForm form = PctForm::tabulated);

}  // namespace qbertrand
