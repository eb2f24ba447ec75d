#pragma once

// Independent numerical solvers for the reduced radial equation
//
//   -u'' + [ l(l+1)/r^2 + (2m/hbar^2) V(r) ] u = (2m/hbar^2) E u,   u = r psi,
//
// used to cross-check every closed-form spectrum.

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "qbertrand/family.hpp"

namespace qbertrand {

using RadialPotential = std::function<double(double)>;

/// Uniform grid r_i = r_min + i * spacing, i = 0 .. n_points-1.
class RadialGrid {
 public:
  RadialGrid(double r_min, double r_max, std::size_t n_points);

  double r_min() const noexcept { return r_min_; }
  double r_max() const noexcept { return r_max_; }
  std::size_t size() const noexcept { return n_; }
  double spacing() const noexcept { return h_; }
  double r(std::size_t i) const noexcept { return r_min_ + static_cast<double>(i) * h_; }
  std::vector<double> points() const;

 private:
  double r_min_;
  double r_max_;
  std::size_t n_;
  double h_;
};

struct Eigenpair {
  double energy = 0.0;
  /// Reduced radial function on every grid point, unit norm sum(u^2) h = 1.
  std::vector<double> u;
  double residual = 0.0;
};

enum class Stencil {
  second_order,  ///< 3-point, identical to the fd_spectrum discretisation
  sixth_order,   ///< 7-point central difference
};

/// Lowest `count` eigenpairs of the 3-point finite-difference Hamiltonian,
/// ascending. The last point is a Dirichlet wall; the first row uses the
/// regular behaviour u ~ r^{l+1} to close the gap between r_min and the origin.
/// Throws Error(grid_too_coarse) when the ground state moves by more than 1e-3
/// (relative) between the given grid and one with half the resolution.
std::vector<Eigenpair> fd_spectrum(const RadialPotential& V, int l, const RadialGrid& grid,
                                   std::size_t count, const PhysicalConstants& units = {});

/// Numerov shooting: outward from the origin, inward from r_max, matched at
/// the outer classical turning point. The matching determinant is continuous
/// in E, so a single sign change inside `bracket` isolates one level.
Eigenpair numerov_eigen(const RadialPotential& V, int l, const RadialGrid& grid,
                        std::pair<double, double> bracket, const PhysicalConstants& units = {});

/// Relative L2 norm of the discretised radial equation applied to psi, over
/// the interior that excludes three points at either end:
///   || -u'' + [l(l+1)/r^2 + 2m(V-E)/hbar^2] u || / || u ||,  u = r psi.
double residual(const RadialPotential& V, double energy, std::span<const double> psi, double l,
                const RadialGrid& grid, Stencil stencil = Stencil::sixth_order,
                const PhysicalConstants& units = {});

/// Lowest `count` eigenvalues of the symmetric tridiagonal matrix with the
/// given diagonal and off-diagonal, by Sturm-sequence bisection.
std::vector<double> tridiagonal_lowest_eigenvalues(std::span<const double> diag,
                                                   std::span<const double> offdiag,
                                                   std::size_t count);

}  // namespace qbertrand
