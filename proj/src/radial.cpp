#include "qbertrand/radial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qbertrand/error.hpp"

namespace qbertrand {

namespace {

double two_m_over_hbar2(const PhysicalConstants& units) {
  return 2.0 * units.mass / (units.hbar * units.hbar);
}

// Number of eigenvalues strictly below x.
std::size_t sturm_count(std::span<const double> d, std::span<const double> e, double x) {
  std::size_t count = 0;
  double q = 1.0;
  constexpr double tiny = std::numeric_limits<double>::min() * 1e10;
  for (std::size_t i = 0; i < d.size(); ++i) {
    q = d[i] - x - (i > 0 ? e[i - 1] * e[i - 1] / q : 0.0);
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++count;
  }
  return count;
}

// (T - shift) x = rhs with partial pivoting; rhs is overwritten by x.
void tridiagonal_solve(std::span<const double> diag, std::span<const double> offdiag, double shift,
                       std::vector<double>& rhs) {
  const std::size_t n = diag.size();
  std::vector<double> d(n), dl(n > 0 ? n - 1 : 0), du(dl.size()), du2(dl.size(), 0.0);
  for (std::size_t i = 0; i < n; ++i) d[i] = diag[i] - shift;
  std::copy(offdiag.begin(), offdiag.end(), dl.begin());
  std::copy(offdiag.begin(), offdiag.end(), du.begin());
  const double tiny = 1e-300;

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i])) {
      if (d[i] == 0.0) d[i] = tiny;
      const double fact = dl[i] / d[i];
      d[i + 1] -= fact * du[i];
      rhs[i + 1] -= fact * rhs[i];
      du2[i] = 0.0;
    } else {
      const double fact = d[i] / dl[i];
      d[i] = dl[i];
      const double temp = d[i + 1];
      d[i + 1] = du[i] - fact * temp;
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -fact * du2[i];
      }
      du[i] = temp;
      const double tb = rhs[i];
      rhs[i] = rhs[i + 1];
      rhs[i + 1] = tb - fact * rhs[i + 1];
    }
  }
  if (n == 0) return;
  if (d[n - 1] == 0.0) d[n - 1] = tiny;
  rhs[n - 1] /= d[n - 1];
  if (n > 1) rhs[n - 2] = (rhs[n - 2] - du[n - 2] * rhs[n - 1]) / d[n - 2];
  for (std::size_t k = n - 2; k-- > 0;) {
    rhs[k] = (rhs[k] - du[k] * rhs[k + 1] - du2[k] * rhs[k + 2]) / d[k];
  }
}

std::vector<double> inverse_iteration(std::span<const double> diag, std::span<const double> off,
                                      double& eigenvalue) {
  const std::size_t n = diag.size();
  std::vector<double> x(n);
  // Deterministic, non-degenerate start vector.
  for (std::size_t i = 0; i < n; ++i) x[i] = 1.0 + 0.1 * std::sin(0.37 * static_cast<double>(i));
  for (int it = 0; it < 4; ++it) {
    tridiagonal_solve(diag, off, eigenvalue, x);
    double norm = 0.0;
    for (double v : x) norm += v * v;
    norm = std::sqrt(norm);
    for (double& v : x) v /= norm;
  }
  // Rayleigh quotient polishes the bisection value.
  double num = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double tx = diag[i] * x[i];
    if (i > 0) tx += off[i - 1] * x[i - 1];
    if (i + 1 < n) tx += off[i] * x[i + 1];
    num += x[i] * tx;
  }
  eigenvalue = num;
  return x;
}

struct FdSystem {
  std::vector<double> diag;
  std::vector<double> off;
  double closure = 0.0;  // u_0 = closure * u_1
};

FdSystem build_fd_system(const RadialPotential& V, int l, const RadialGrid& grid, double k2) {
  const std::size_t n = grid.size();
  const double h = grid.spacing();
  const double inv_h2 = 1.0 / (h * h);
  const double ll = static_cast<double>(l) * (l + 1);
  FdSystem sys;
  sys.diag.resize(n - 2);
  sys.off.assign(n - 3, -inv_h2);
  for (std::size_t j = 0; j < n - 2; ++j) {
    const double r = grid.r(j + 1);
    const double v = V(r);
    if (!std::isfinite(v))
      throw Error(Errc::invalid_parameter, "potential is not finite at r = " + std::to_string(r));
    sys.diag[j] = 2.0 * inv_h2 + ll / (r * r) + k2 * v;
  }
  sys.closure = std::pow(grid.r(0) / grid.r(1), l + 1);
  sys.diag[0] -= sys.closure * inv_h2;
  return sys;
}

void normalise(std::vector<double>& u, double h) {
  double norm = 0.0;
  for (double v : u) norm += v * v;
  norm = std::sqrt(norm * h);
  if (norm == 0.0) return;
  // Positive just outside the origin.
  double sign = 1.0;
  const double peak = *std::max_element(u.begin(), u.end(),
                                        [](double x, double y) { return std::abs(x) < std::abs(y); });
  for (double v : u) {
    if (std::abs(v) > 1e-3 * std::abs(peak)) {
      sign = v > 0.0 ? 1.0 : -1.0;
      break;
    }
  }
  for (double& v : u) v *= sign / norm;
}

std::vector<double> psi_from_u(std::span<const double> u, const RadialGrid& grid) {
  std::vector<double> psi(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) psi[i] = u[i] / grid.r(i);
  return psi;
}

}  // namespace

RadialGrid::RadialGrid(double r_min, double r_max, std::size_t n_points)
    : r_min_(r_min), r_max_(r_max), n_(n_points), h_(0.0) {
  if (!(r_min > 0.0)) throw Error(Errc::invalid_parameter, "grid r_min must be positive");
  if (!(r_min < r_max)) throw Error(Errc::invalid_parameter, "grid needs r_min < r_max");
  if (n_points < 16) throw Error(Errc::invalid_parameter, "grid needs at least 16 points");
  h_ = (r_max - r_min) / static_cast<double>(n_points - 1);
}

std::vector<double> RadialGrid::points() const {
  std::vector<double> r(n_);
  for (std::size_t i = 0; i < n_; ++i) r[i] = this->r(i);
  return r;
}

std::vector<double> tridiagonal_lowest_eigenvalues(std::span<const double> diag,
                                                   std::span<const double> offdiag,
                                                   std::size_t count) {
  const std::size_t n = diag.size();
  if (offdiag.size() + 1 != n)
    throw Error(Errc::invalid_parameter, "off-diagonal must have n-1 entries");
  count = std::min(count, n);

  double lo = std::numeric_limits<double>::max();
  double hi = std::numeric_limits<double>::lowest();
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(offdiag[i - 1]);
    if (i + 1 < n) radius += std::abs(offdiag[i]);
    lo = std::min(lo, diag[i] - radius);
    hi = std::max(hi, diag[i] + radius);
  }
  const double scale = std::max(std::abs(lo), std::abs(hi));

  std::vector<double> values;
  values.reserve(count);
  double floor = lo;
  for (std::size_t k = 0; k < count; ++k) {
    double a = floor;
    double b = hi;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (a + b);
      if (mid == a || mid == b) break;
      if (b - a <= 4.0 * std::numeric_limits<double>::epsilon() * scale) break;
      if (sturm_count(diag, offdiag, mid) > k)
        b = mid;
      else
        a = mid;
    }
    values.push_back(0.5 * (a + b));
    floor = a;
  }
  return values;
}

std::vector<Eigenpair> fd_spectrum(const RadialPotential& V, int l, const RadialGrid& grid,
                                   std::size_t count, const PhysicalConstants& units) {
  if (count < 1) throw Error(Errc::invalid_parameter, "fd_spectrum needs count >= 1");
  if (l < 0) throw Error(Errc::invalid_parameter, "l must be non-negative");
  const double k2 = two_m_over_hbar2(units);
  const FdSystem sys = build_fd_system(V, l, grid, k2);
  const auto lambdas = tridiagonal_lowest_eigenvalues(sys.diag, sys.off, count);

  const std::size_t coarse_n = (grid.size() - 1) / 2 + 1;
  if (coarse_n >= 16) {
    const RadialGrid coarse(grid.r_min(), grid.r_max(), coarse_n);
    const FdSystem cs = build_fd_system(V, l, coarse, k2);
    const double e_coarse = tridiagonal_lowest_eigenvalues(cs.diag, cs.off, 1).front();
    const double rel = std::abs(e_coarse - lambdas.front()) /
                       std::max(std::abs(lambdas.front()), std::numeric_limits<double>::min());
    if (rel > 1e-3)
      throw Error(Errc::grid_too_coarse,
                  "ground state moved by " + std::to_string(rel) + " (relative) under refinement");
  }

  std::vector<Eigenpair> out;
  out.reserve(lambdas.size());
  for (double lambda : lambdas) {
    double polished = lambda;
    const auto x = inverse_iteration(sys.diag, sys.off, polished);
    Eigenpair ep;
    ep.energy = polished / k2;
    ep.u.assign(grid.size(), 0.0);
    std::copy(x.begin(), x.end(), ep.u.begin() + 1);
    ep.u[0] = sys.closure * ep.u[1];
    normalise(ep.u, grid.spacing());
    const auto psi = psi_from_u(ep.u, grid);
    ep.residual = residual(V, ep.energy, psi, l, grid, Stencil::second_order, units);
    out.push_back(std::move(ep));
  }
  return out;
}

namespace {

struct NumerovShot {
  std::vector<double> y;  // outward on [i0, m+1], inward on [m, n-1]
  std::vector<double> y_in;
  double determinant = 0.0;
};

class NumerovShooter {
 public:
  NumerovShooter(const RadialPotential& V, int l, const RadialGrid& grid, double k2,
                 double reference_energy)
      : grid_(grid), l_(l), k2_(k2) {
    const std::size_t n = grid.size();
    const double ll = static_cast<double>(l) * (l + 1);
    v_.resize(n);
    cent_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double r = grid.r(i);
      v_[i] = V(r);
      if (!std::isfinite(v_[i]))
        throw Error(Errc::invalid_parameter, "potential is not finite at r = " + std::to_string(r));
      cent_[i] = ll / (r * r);
    }
    const double h2 = grid.spacing() * grid.spacing();
    // Start where the Numerov weights are benign; below that u ~ r^{l+1}.
    i0_ = 0;
    while (i0_ + 4 < n &&
           h2 * std::abs(g(i0_, reference_energy)) / 12.0 > 0.05)
      ++i0_;
    // Outer classical turning point at the reference energy.
    match_ = 0;
    for (std::size_t i = n - 1; i-- > 0;) {
      if (g(i, reference_energy) < 0.0) {
        match_ = i;
        break;
      }
    }
    if (match_ == 0) match_ = (i0_ + n) / 2;
    match_ = std::clamp(match_, i0_ + 2, n - 3);
  }

  double g(std::size_t i, double energy) const { return cent_[i] + k2_ * (v_[i] - energy); }

  // Sine of the angle between the outward and inward (z_m, z_{m+1}) vectors,
  // where z = (1 - h^2 g / 12) y. Scale-free and continuous in E.
  double determinant(double energy, std::vector<double>* y_out = nullptr,
                     std::vector<double>* y_in = nullptr) const {
    const std::size_t n = grid_.size();
    const double h2 = grid_.spacing() * grid_.spacing();
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = 1.0 - h2 * g(i, energy) / 12.0;

    std::vector<double> out(n, 0.0);
    out[i0_] = std::pow(grid_.r(i0_), l_ + 1);
    out[i0_ + 1] = std::pow(grid_.r(i0_ + 1), l_ + 1);
    for (std::size_t i = i0_ + 1; i <= match_; ++i) {
      out[i + 1] = ((12.0 - 10.0 * w[i]) * out[i] - w[i - 1] * out[i - 1]) / w[i + 1];
      if (std::abs(out[i + 1]) > 1e150)
        for (std::size_t j = i0_; j <= i + 1; ++j) out[j] *= 1e-150;
    }

    std::vector<double> in(n, 0.0);
    in[n - 1] = 0.0;
    in[n - 2] = 1e-30;
    for (std::size_t i = n - 2; i > match_; --i) {
      in[i - 1] = ((12.0 - 10.0 * w[i]) * in[i] - w[i + 1] * in[i + 1]) / w[i - 1];
      if (std::abs(in[i - 1]) > 1e150)
        for (std::size_t j = i - 1; j < n; ++j) in[j] *= 1e-150;
    }

    const std::size_t m = match_;
    const double zo0 = w[m] * out[m], zo1 = w[m + 1] * out[m + 1];
    const double zi0 = w[m] * in[m], zi1 = w[m + 1] * in[m + 1];
    const double det = zo1 * zi0 - zo0 * zi1;
    const double norm = std::hypot(zo0, zo1) * std::hypot(zi0, zi1);
    if (y_out) *y_out = std::move(out);
    if (y_in) *y_in = std::move(in);
    return norm > 0.0 ? det / norm : 0.0;
  }

  std::vector<double> assemble(double energy) const {
    std::vector<double> out, in;
    determinant(energy, &out, &in);
    const std::size_t n = grid_.size();
    const std::size_t m = match_;
    // Match amplitudes at whichever of m, m+1 carries more weight.
    const std::size_t k = std::abs(out[m]) >= std::abs(out[m + 1]) ? m : m + 1;
    const double scale = in[k] != 0.0 ? out[k] / in[k] : 0.0;
    std::vector<double> u(n, 0.0);
    for (std::size_t i = i0_; i <= m; ++i) u[i] = out[i];
    for (std::size_t i = m + 1; i < n; ++i) u[i] = scale * in[i];
    const double ref = out[i0_] / std::pow(grid_.r(i0_), l_ + 1);
    for (std::size_t i = 0; i < i0_; ++i) u[i] = ref * std::pow(grid_.r(i), l_ + 1);
    return u;
  }

 private:
  const RadialGrid& grid_;
  int l_;
  double k2_;
  std::vector<double> v_;
  std::vector<double> cent_;
  std::size_t i0_ = 0;
  std::size_t match_ = 0;
};

}  // namespace

Eigenpair numerov_eigen(const RadialPotential& V, int l, const RadialGrid& grid,
                        std::pair<double, double> bracket, const PhysicalConstants& units) {
  if (l < 0) throw Error(Errc::invalid_parameter, "l must be non-negative");
  auto [lo, hi] = bracket;
  if (!(lo < hi)) throw Error(Errc::invalid_parameter, "bracket must satisfy lo < hi");
  const double k2 = two_m_over_hbar2(units);
  const NumerovShooter shooter(V, l, grid, k2, 0.5 * (lo + hi));

  double f_lo = shooter.determinant(lo);
  double f_hi = shooter.determinant(hi);
  if (f_lo == 0.0) f_hi = 0.0, hi = lo;
  if (f_lo * f_hi > 0.0)
    throw Error(Errc::no_sign_change, "matching determinant has the same sign at both ends");

  // Bisection down to a narrow bracket, then Illinois-style secant steps.
  int side = 0;
  for (int it = 0; it < 300 && hi - lo > 1e-13 * std::max(1.0, std::abs(lo)); ++it) {
    double mid;
    if (hi - lo > 1e-6) {
      mid = 0.5 * (lo + hi);
    } else {
      mid = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
      if (!(mid > lo && mid < hi)) mid = 0.5 * (lo + hi);
    }
    const double f_mid = shooter.determinant(mid);
    if (f_mid == 0.0) {
      lo = hi = mid;
      break;
    }
    if (f_mid * f_hi < 0.0) {
      lo = hi;
      f_lo = f_hi;
      hi = mid;
      f_hi = f_mid;
      if (side == -1) f_lo *= 0.5;
      side = -1;
    } else {
      hi = mid;
      f_hi = f_mid;
      if (side == 1) f_lo *= 0.5;
      side = 1;
    }
    if (lo > hi) std::swap(lo, hi), std::swap(f_lo, f_hi);
  }

  Eigenpair ep;
  ep.energy = 0.5 * (lo + hi);
  ep.u = shooter.assemble(ep.energy);
  ep.u.back() = 0.0;
  normalise(ep.u, grid.spacing());
  const auto psi = psi_from_u(ep.u, grid);
  ep.residual = residual(V, ep.energy, psi, l, grid, Stencil::sixth_order, units);
  return ep;
}

double residual(const RadialPotential& V, double energy, std::span<const double> psi, double l,
                const RadialGrid& grid, Stencil stencil, const PhysicalConstants& units) {
  const std::size_t n = grid.size();
  if (psi.size() != n) throw Error(Errc::invalid_parameter, "psi samples do not match the grid");
  const double k2 = two_m_over_hbar2(units);
  const double h = grid.spacing();
  const double inv_h2 = 1.0 / (h * h);
  const double ll = l * (l + 1.0);

  std::vector<double> u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = grid.r(i) * psi[i];

  double res2 = 0.0;
  double norm2 = 0.0;
  for (std::size_t i = 3; i + 3 < n; ++i) {
    double d2;
    if (stencil == Stencil::second_order) {
      d2 = (u[i - 1] - 2.0 * u[i] + u[i + 1]) * inv_h2;
    } else {
      d2 = ((u[i - 3] + u[i + 3]) / 90.0 - 3.0 * (u[i - 2] + u[i + 2]) / 20.0 +
            1.5 * (u[i - 1] + u[i + 1]) - 49.0 / 18.0 * u[i]) *
           inv_h2;
    }
    const double r = grid.r(i);
    const double rres = -d2 + (ll / (r * r) + k2 * (V(r) - energy)) * u[i];
    res2 += rres * rres;
    norm2 += u[i] * u[i];
  }
  if (norm2 == 0.0) return res2 == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::sqrt(res2 / norm2);
}

}  // namespace qbertrand
