#include "qbertrand/second_class.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "qbertrand/error.hpp"

namespace qbertrand {

void SecondClassParams::validate() const {
  if ((alpha - 1.0) * gamma * a == 0.0)
    throw Error(Errc::invalid_parameter, "second class needs (alpha - 1) gamma a != 0");
  if (!(lambda > 0.0)) throw Error(Errc::invalid_parameter, "lambda must be positive");
  if (l < 0) throw Error(Errc::invalid_parameter, "l must be non-negative");
}

DerivedCoefficients derived_coeffs(const SecondClassParams& p) {
  p.validate();
  const double a = p.a, b = p.b, al = p.alpha, be = p.beta, ga = p.gamma;
  DerivedCoefficients dc;
  dc.A2 = 1.0 / ((al - 1.0) * ga * a);
  const double A2sq = dc.A2 * dc.A2;
  dc.A1 = 1.0 / A2sq;

  dc.B1 = (al * a + 2.0 * b) / (a * A2sq);
  if (dc.B1 == 0.0) throw Error(Errc::degenerate_coefficient, "B2 divides by B1 = 0");
  dc.B2 = (2.0 * b + a * (3.0 + be - ga)) / (2.0 * a * dc.A2 * dc.B1);
  dc.B3 = 1.0 + be - dc.B1 * dc.B2 * dc.B2;

  dc.C1 = b * (a * al - a + b) / (a * a * A2sq);
  if (dc.C1 == 0.0) throw Error(Errc::degenerate_coefficient, "C2 divides by C1 = 0");
  dc.C2 = b * (be - ga + 1.0) / (2.0 * a * dc.A2 * dc.C1);
  dc.C3 = -dc.C1 * dc.C2 * dc.C2 / b;

  dc.D1 = (2.0 * b - 3.0 * al * a) / (a * A2sq);
  if (dc.D1 == 0.0) throw Error(Errc::degenerate_coefficient, "D2 divides by D1 = 0");
  dc.D2 = (2.0 * b + a * (be - ga - 4.0 * al - 1.0)) / (2.0 * dc.A2 * dc.D1);
  dc.D3 = 1.0 + be - 4.0 / dc.D1 - dc.D1 * dc.D2 * dc.D2;
  return dc;
}

std::pair<double, double> eta_bar_exponents(const SecondClassParams& p) {
  const double disc = p.beta * p.beta - 4.0 * p.delta;
  if (disc < 0.0)
    throw Error(Errc::complex_roots, "beta^2 - 4 delta = " + std::to_string(disc) + " < 0");
  const double sq = std::sqrt(disc);
  return {(-p.beta + sq) / 2.0, (-p.beta - sq) / 2.0};
}

FValues F_functions(const DerivedCoefficients& dc, const SecondClassParams& p, double rho) {
  if (!(rho > 0.0)) throw Error(Errc::invalid_parameter, "F_functions requires rho > 0");
  const double x = std::pow(rho, p.alpha - 1.0);
  FValues v;
  v.F1 = dc.A1 * rho * rho * (x + dc.A2) * (x + dc.A2);
  v.F2 = dc.B1 * rho * (x + dc.B2) * (x + dc.B2) + dc.B3;
  v.F3 = dc.C1 * (x + dc.C2) * (x + dc.C2) + dc.C3;
  return v;
}

double F1_derivative(const DerivedCoefficients& dc, const SecondClassParams& p, double rho) {
  const double x = std::pow(rho, p.alpha - 1.0);
  const double X = x + dc.A2;
  const double dX = (p.alpha - 1.0) * x / rho;
  return dc.A1 * (2.0 * rho * X * X + 2.0 * rho * rho * X * dX);
}

ConjugatedF conjugated_F(const SecondClassParams& p, double rho) {
  p.validate();
  if (!(rho > 0.0)) throw Error(Errc::invalid_parameter, "conjugated_F requires rho > 0");
  const double k = p.gamma * (p.alpha - 1.0);
  const double al = p.alpha;
  const double x = std::pow(rho, al - 1.0);  // rho^{alpha-1}
  const double P = rho + k * p.a * rho * x;
  const double dP = 1.0 + k * p.a * al * x;
  const double d2P = k * p.a * al * (al - 1.0) * x / rho;
  const double Q = k * p.b * x;
  const double dQ = k * p.b * (al - 1.0) * x / rho;

  ConjugatedF f;
  f.F1 = P * P;
  f.dF1 = 2.0 * P * dP;
  f.F2 = P * dP + 2.0 * P * Q + p.beta * P;
  f.dF2 = dP * dP + P * d2P + 2.0 * dP * Q + 2.0 * P * dQ + p.beta * dP;
  f.F3 = P * dQ + Q * Q + p.beta * Q;
  return f;
}

namespace {

template <typename LogDerivative>
std::vector<double> integrate_log_derivative(const RadialGrid& grid, LogDerivative&& g) {
  // Five-point Gauss-Legendre per grid interval.
  static constexpr std::array<double, 5> nodes{0.0, -0.5384693101056831, 0.5384693101056831,
                                               -0.9061798459386640, 0.9061798459386640};
  static constexpr std::array<double, 5> weights{0.5688888888888889, 0.4786286704993665,
                                                 0.4786286704993665, 0.2369268850561891,
                                                 0.2369268850561891};
  auto interval = [&](double lo, double hi) {
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    double s = 0.0;
    for (std::size_t q = 0; q < nodes.size(); ++q) s += weights[q] * g(mid + half * nodes[q]);
    return s * half;
  };

  const std::size_t n = grid.size();
  const std::size_t m = (n - 1) / 2;
  std::vector<double> log_s(n, 0.0);
  for (std::size_t i = m; i + 1 < n; ++i) log_s[i + 1] = log_s[i] + interval(grid.r(i), grid.r(i + 1));
  for (std::size_t i = m; i > 0; --i) log_s[i - 1] = log_s[i] - interval(grid.r(i - 1), grid.r(i));
  for (double& v : log_s) v = std::exp(v);
  return log_s;
}

void require_no_turning_point(const SecondClassParams& p, double A2, const RadialGrid& grid) {
  // rho^{alpha-1} + A2 is monotone, so the endpoints decide.
  const double lo = std::pow(grid.r_min(), p.alpha - 1.0) + A2;
  const double hi = std::pow(grid.r_max(), p.alpha - 1.0) + A2;
  if (lo * hi <= 0.0)
    throw Error(Errc::turning_point_on_grid, "F1 vanishes inside [" + std::to_string(grid.r_min()) +
                                                 ", " + std::to_string(grid.r_max()) + "]");
}

}  // namespace

std::vector<double> s_factor(const DerivedCoefficients& dc, const SecondClassParams& p,
                             const RadialGrid& grid) {
  require_no_turning_point(p, dc.A2, grid);
  return integrate_log_derivative(grid, [&](double rho) {
    const FValues f = F_functions(dc, p, rho);
    return (f.F2 - 2.0 * F1_derivative(dc, p, rho)) / (2.0 * f.F1) - 1.0 / rho;
  });
}

std::vector<double> s_factor_exact(const SecondClassParams& p, const RadialGrid& grid) {
  p.validate();
  require_no_turning_point(p, 1.0 / ((p.alpha - 1.0) * p.gamma * p.a), grid);
  return integrate_log_derivative(grid, [&](double rho) {
    const ConjugatedF f = conjugated_F(p, rho);
    return (f.F2 - 2.0 * f.dF1) / (2.0 * f.F1) - 1.0 / rho;
  });
}

SecondPotentialTerms second_potential_terms(const DerivedCoefficients& dc,
                                            const SecondClassParams& p, double rho) {
  if (!(rho > 0.0)) throw Error(Errc::invalid_parameter, "second_potential requires rho > 0");
  const double al = p.alpha;
  const double x = std::pow(rho, al - 1.0);
  const double X = x + dc.A2;
  const double r2 = rho * rho;
  const double bblock = dc.B1 * rho * (x + dc.B2) * (x + dc.B2) + dc.B3;
  const double dblock = dc.D1 * rho * (x + dc.D2) * (x + dc.D2) + dc.D3;
  const double ratio = (al * x + dc.A2) / X;

  SecondPotentialTerms t;
  t.product = bblock * dblock / (4.0 * dc.A1 * dc.A1 * r2 * r2 * X * X * X * X);
  t.d_block = dc.D1 * (x + dc.D2) * ((2.0 * al - 1.0) * x + dc.D2) / (dc.A1 * r2 * X * X);
  t.geometric = 8.0 / r2 * ratio * ratio *
                (1.0 / rho + (al - 1.0) / X + al * (al - 1.0) / (al * x + dc.A2));
  t.c_block = -(dc.C1 * X * X + dc.C3 + p.delta) / (dc.A1 * r2 * X * X);
  t.centrifugal = -p.l * (p.l + 1.0) / r2;
  return t;
}

double second_potential(const DerivedCoefficients& dc, const SecondClassParams& p, double rho) {
  return second_potential_terms(dc, p, rho).total();
}

double chain_potential(const SecondClassParams& p, double rho) {
  const ConjugatedF f = conjugated_F(p, rho);
  const double r = f.F2 / f.F1;
  const double dr = (f.dF2 * f.F1 - f.F2 * f.dF1) / (f.F1 * f.F1);
  const double G = (f.F3 + p.delta) / f.F1 - 0.25 * r * r - 0.5 * dr;
  return -G - p.l * (p.l + 1.0) / (rho * rho);
}

SeriesExpansion second_wavefunction_series(const SecondClassParams& p, double s_root,
                                           std::size_t truncation) {
  if (truncation < 1) throw Error(Errc::invalid_parameter, "truncation must be >= 1");
  return exp_series(OperatorO(p.a, p.b, p.alpha), -p.gamma, MonomialTerm{1.0, s_root}, truncation);
}

ConvergenceDomain series_convergence_domain(const SecondClassParams& p) {
  p.validate();
  const double A2 = 1.0 / ((p.alpha - 1.0) * p.gamma * p.a);
  return {std::pow(std::abs(A2), 1.0 / (p.alpha - 1.0)), p.alpha > 1.0};
}

namespace {

std::vector<double> log_samples(double lo, double hi, std::size_t count) {
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i)
    out[i] = lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(count - 1));
  return out;
}

// Keeps away from zeros of rho^{alpha-1} + A2 and alpha rho^{alpha-1} + A2.
bool near_pole(double alpha, double A2, double rho) {
  const double x = std::pow(rho, alpha - 1.0);
  const double scale = std::abs(x) + std::abs(A2);
  return std::abs(x + A2) < 0.05 * scale || std::abs(alpha * x + A2) < 0.05 * scale;
}

}  // namespace

IndependenceReport constant_independence_report(const std::vector<double>& alpha_grid,
                                                const SecondClassParams& templ) {
  if (alpha_grid.empty()) throw Error(Errc::invalid_parameter, "alpha grid is empty");
  IndependenceReport report;
  const auto rhos = log_samples(1e-2, 1e2, 161);

  for (double alpha : alpha_grid) {
    AlphaReport entry;
    entry.alpha = alpha;
    if (std::abs(alpha - 1.0) <= alpha_tolerance) {
      entry.excluded = true;
      entry.note = "A2 undefined at alpha = 1";
      report.entries.push_back(std::move(entry));
      continue;
    }
    SecondClassParams q = templ;
    q.alpha = alpha;
    q.validate();
    const double A2 = 1.0 / ((alpha - 1.0) * q.gamma * q.a);

    // delta enters only through -delta / (rho^2 (rho^{alpha-1} + A2)^2 / A2^2).
    const WeightedPowerSeries denominator(
        {{1.0, 2.0 * alpha}, {2.0 * A2, alpha + 1.0}, {A2 * A2, 2.0}});
    for (const auto& t : denominator.terms()) entry.surviving_exponents.push_back(t.expo);
    entry.constant_independent = denominator.size() == 1 &&
                                 std::abs(denominator.terms().front().expo) <= 1e-12;

    double smax = 0.0, smin = std::numeric_limits<double>::infinity();
    for (double rho : rhos) {
      if (near_pole(alpha, A2, rho)) continue;
      const double s = std::abs(1.0 / conjugated_F(q, rho).F1);
      smax = std::max(smax, s);
      smin = std::min(smin, s);
    }
    entry.delta_sensitivity_variation = smax > 0.0 ? (smax - smin) / smax : 0.0;

    try {
      const DerivedCoefficients dc = derived_coeffs(q);
      std::vector<double> ys;
      for (double rho : rhos) {
        if (near_pole(alpha, A2, rho)) continue;
        ys.push_back(rho * rho * second_potential(dc, q, rho));
      }
      ZeroEnergyFit fit;
      double mean = 0.0;
      for (double y : ys) mean += y;
      mean /= static_cast<double>(ys.size());
      double ss = 0.0, yy = 0.0;
      for (double y : ys) {
        ss += (y - mean) * (y - mean);
        yy += y * y;
      }
      fit.inverse_square_coefficient = mean;
      const double denom = std::abs(mean) > 0.0 ? std::abs(mean) : std::sqrt(yy / ys.size());
      fit.remainder = denom > 0.0 ? std::sqrt(ss / ys.size()) / denom : 0.0;
      fit.absorbed = fit.remainder < 1e-8;
      const double barrier = q.l * (q.l + 1.0) + mean;
      if (barrier >= 0.0) fit.l_effective = 0.5 * (-1.0 + std::sqrt(1.0 + 4.0 * barrier));
      entry.zero_energy = fit;
    } catch (const Error& e) {
      entry.note = std::string("E = 0 fit skipped: ") + e.what();
    }

    if (entry.constant_independent) report.negative = false;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace qbertrand
