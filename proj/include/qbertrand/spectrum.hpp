#pragma once

// Closed-form bound-state data for the first-class family: discriminant,
// quantised epsilon, Laguerre eigenfunctions and the Coulomb / oscillator
// energies.

#include <vector>

#include "qbertrand/family.hpp"
#include "qbertrand/radial.hpp"

namespace qbertrand {

enum class Sign { plus, minus };

inline double sign_value(Sign s) noexcept { return s == Sign::plus ? 1.0 : -1.0; }
inline Sign opposite(Sign s) noexcept { return s == Sign::plus ? Sign::minus : Sign::plus; }
const char* to_string(Sign s) noexcept;

/// (1 - b/a)^2 - 4c/a.
double discriminant(const FamilyParams& p);

/// epsilon_n^{+-} = -alpha n - (1 - b/a)/2 +- sqrt(Delta)/2.
/// Throws Error(negative_discriminant) when Delta < 0.
double epsilon_n(const FamilyParams& p, int n, Sign branch);

/// The epsilon branch whose terminated series carries rho^{(s sqrt(Delta) - 1)/2}
/// in the eigenfunction. The two sign labels run opposite to each other.
inline Sign epsilon_branch_for(Sign wavefunction_branch) noexcept {
  return opposite(wavefunction_branch);
}

struct SpectralLine {
  int n = 0;
  int l = 0;
  Sign branch = Sign::minus;  ///< epsilon label
  double epsilon_n = 0.0;
  double energy = 0.0;
  double sigma = 0.0;
};

/// Solves the Coulomb self-consistency at sigma = -m k lambda / (hbar^2 (n+l+1)),
/// k = coulomb_strength, and reads off E = -g1.
SpectralLine energy_coulomb(int n, int l, const PhysicalConstants& constants = {},
                            double lambda = 1.0);

/// E = -g2 with the oscillator parametrisation, i.e. hbar omega (2n + l + 3/2).
SpectralLine energy_oscillator(int n, int l, double omega, const PhysicalConstants& constants = {},
                               double lambda = 1.0);

/// Associated Laguerre polynomial L_n^k(x) by forward recurrence.
double laguerre(int n, double k, double x);

/// Sign of sqrt(Delta) in the eigenfunction that gives a normalisable state,
/// preferring plus. Throws Error(not_normalizable) when neither sign works.
Sign branch_select(const FamilyParams& p);

struct Wavefunction {
  FamilyParams params;
  int n = 0;
  Sign branch = Sign::plus;  ///< sign of sqrt(Delta) in the eigenfunction
  double normalization = 1.0;
};

/// Wavefunction for level n with the branch from branch_select. The returned
/// params carry the matching epsilon_n.
Wavefunction make_wavefunction(const FamilyParams& p, int n);

/// psi(rho) = N rho^{(s sqrt(Delta) - 1)/2} exp{rho^alpha / (2 a alpha)}
///            L_n^{s sqrt(Delta)/alpha}(-rho^alpha / (a alpha)).
double wavefunction_eval(const Wavefunction& w, double rho);

/// psi sampled at r_i / lambda for every grid point.
std::vector<double> wavefunction_samples(const Wavefunction& w, const RadialGrid& grid);

/// Rescales so that the integral of psi^2 r^2 dr over (0, inf) is 1. The grid
/// is in r. Throws Error(divergent_norm) when the estimated tail beyond r_max
/// exceeds 1e-8 of the total.
Wavefunction normalize(const Wavefunction& w, const RadialGrid& grid);

/// Composite Simpson on uniform samples (3/8 rule on the last panel for an
/// even count).
double simpson(std::span<const double> f, double h);

}  // namespace qbertrand
