#include "qbertrand/verification.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "qbertrand/error.hpp"
#include "qbertrand/family.hpp"
#include "qbertrand/monomial.hpp"
#include "qbertrand/pct.hpp"
#include "qbertrand/radial.hpp"
#include "qbertrand/second_class.hpp"
#include "qbertrand/spectrum.hpp"

namespace qbertrand {

UniformStream::UniformStream(std::uint64_t seed) : engine_(seed) {}

double UniformStream::next() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

int UniformStream::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

namespace {

using Results = std::vector<CheckResult>;

CheckResult check(const std::string& group, const std::string& name, double measured,
                  double tolerance, std::string detail = {}) {
  CheckResult r;
  r.group = group;
  r.name = name;
  r.measured = measured;
  r.tolerance = tolerance;
  r.pass = std::isfinite(measured) && measured <= tolerance;
  r.detail = std::move(detail);
  return r;
}

CheckResult failure(const std::string& group, const std::string& name, double tolerance,
                    const std::exception& e) {
  CheckResult r = check(group, name, std::numeric_limits<double>::infinity(), tolerance, e.what());
  r.pass = false;
  return r;
}

CheckResult info(const std::string& group, const std::string& name, double measured,
                 std::string detail) {
  CheckResult r = check(group, name, measured, 0.0, std::move(detail));
  r.pass = true;
  r.informational = true;
  return r;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// Physical units in which (2m/hbar^2) = 1, so dimensionless potentials can be
// passed straight to the radial residual.
const PhysicalConstants unit_k2{1.0, 0.5, 1.0, 1.0};

Results coulomb_group() {
  const std::string g = "coulomb";
  const std::string name = "fd_spectrum vs -1/(2(n+l+1)^2), n+l+1 <= 4 (relative)";
  try {
    const RadialGrid grid(1e-3, 60.0, 6000);
    double worst = 0.0;
    std::string where;
    for (int l = 0; l <= 3; ++l) {
      const auto levels = fd_spectrum([](double r) { return -1.0 / r; }, l, grid, 4 - l);
      for (int n = 0; n < 4 - l; ++n) {
        const double exact = energy_coulomb(n, l).energy;
        const double rel = std::abs(levels[n].energy - exact) / std::abs(exact);
        if (rel > worst) {
          worst = rel;
          where = "worst at n=" + std::to_string(n) + " l=" + std::to_string(l);
        }
      }
    }
    return {check(g, name, worst, 1e-3, where)};
  } catch (const std::exception& e) {
    return {failure(g, name, 1e-3, e)};
  }
}

Results oscillator_group() {
  const std::string g = "oscillator";
  const std::array<std::pair<int, int>, 6> lowest{{{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}, {0, 3}}};
  const auto V = [](double r) { return 0.5 * r * r; };
  try {
    const RadialGrid grid(1e-3, 20.0, 4000);
    double fd_worst = 0.0, nu_worst = 0.0, cross = 0.0;
    for (const auto& [n, l] : lowest) {
      const double exact = energy_oscillator(n, l, 1.0).energy;
      const auto levels = fd_spectrum(V, l, grid, static_cast<std::size_t>(n) + 1);
      const double fd = levels[n].energy;
      const double nu = numerov_eigen(V, l, grid, {fd - 0.25, fd + 0.25}).energy;
      fd_worst = std::max(fd_worst, std::abs(fd - exact));
      nu_worst = std::max(nu_worst, std::abs(nu - exact));
      cross = std::max(cross, std::abs(nu - fd));
    }
    return {check(g, "fd_spectrum vs 2n+l+3/2, six lowest (absolute)", fd_worst, 1e-4),
            check(g, "numerov_eigen vs 2n+l+3/2, six lowest (absolute)", nu_worst, 1e-4),
            check(g, "numerov vs fd agreement (absolute)", cross, 5e-4)};
  } catch (const std::exception& e) {
    return {failure(g, "oscillator spectrum", 1e-4, e)};
  }
}

Results couplings_group() {
  const std::string g = "couplings";
  const std::array<PhysicalConstants, 2> unit_sets{
      PhysicalConstants{}, PhysicalConstants{1.3, 0.7, 2.1, 1.7}};
  const std::array<double, 2> lambdas{1.0, 1.1};
  double osc_g1 = 0.0, g3_zero = 0.0, coul_g2 = 0.0;
  try {
    for (const auto& units : unit_sets) {
      for (double lam : lambdas) {
        for (int l = 0; l <= 5; ++l) {
          FamilyParams po = oscillator_params(l, units.omega, units, lam);
          po.epsilon = epsilon_n(po, 0, Sign::minus);
          const CouplingSet co = couplings(po);
          const double target = units.mass * units.omega * units.omega / 2.0;
          osc_g1 = std::max(osc_g1, std::abs(co.g1 - target) / target);
          g3_zero = std::max(g3_zero, std::abs(co.tg3) / std::max(std::abs(co.tg1), std::abs(co.tg2)));

          for (int n = 0; n <= 3; ++n) {
            const SpectralLine line = energy_coulomb(n, l, units, lam);
            FamilyParams pc = coulomb_params(l, line.sigma, units, lam);
            pc.epsilon = line.epsilon_n;
            const CouplingSet cc = couplings(pc);
            g3_zero = std::max(g3_zero,
                               std::abs(cc.tg3) / std::max(std::abs(cc.tg1), std::abs(cc.tg2)));
            coul_g2 = std::max(coul_g2, std::abs(cc.g2 + units.coulomb_strength) /
                                            units.coulomb_strength);
          }
        }
      }
    }
  } catch (const std::exception& e) {
    return {failure(g, "coupling identities", 1e-12, e)};
  }
  return {check(g, "oscillator g1 = m omega^2 / 2 (relative)", osc_g1, 1e-12),
          check(g, "g3 = 0 for both cases (relative to max |g~1|, |g~2|)", g3_zero, 1e-12),
          check(g, "Coulomb round trip g2 = -k (relative)", coul_g2, 1e-12)};
}

Results bertrand_group() {
  const std::string g = "bertrand";
  int mismatches = 0;
  std::string found;
  for (int k = 0; k <= 50; ++k) {
    const double alpha = (50.0 + 5.0 * k) / 100.0;
    const bool independent = classify_alpha(alpha) != AlphaClass::not_constant_independent;
    const bool expected = (k == 10 || k == 30);  // alpha = 1.00, 2.00
    if (independent != expected) ++mismatches;
    if (independent) found += (found.empty() ? "" : ",") + fmt(alpha);
  }
  return {check(g, "constant independent exactly at alpha in {1, 2} over 0.50..3.00",
                mismatches, 0.0, "constant independent at alpha = " + found)};
}

Results duality_group(std::uint64_t seed) {
  const std::string g = "duality";
  UniformStream rng(seed + 101);
  int accepted = 0, bad_length = 0;
  double worst = 0.0;
  const std::array<double, 4> rhos{0.25, 0.8, 1.5, 3.0};
  try {
    while (accepted < 200) {
      const double a = rng.uniform(-2.0, -0.2);
      const double b = rng.uniform(-2.0, 2.0);
      const double alpha = rng.uniform(0.5, 3.0);
      const int n = rng.integer(0, 8);
      const double sq = rng.uniform(0.1, 4.0);
      const Sign wave = rng.next() < 0.5 ? Sign::plus : Sign::minus;
      // sqrt(Delta) = j alpha lets the other root stop the series early.
      bool resonant = false;
      for (int j = 1; j <= n; ++j) resonant |= std::abs(sq / alpha - j) < 1e-6;
      if (resonant) continue;
      ++accepted;

      const double t = 1.0 - b / a;
      FamilyParams p;
      p.alpha = alpha;
      p.a = a;
      p.b = b;
      p.c = a * (t * t - sq * sq) / 4.0;
      const double eps = epsilon_n(p, n, epsilon_branch_for(wave));
      const auto ex = exp_series(OperatorA(p.a, p.b, p.c, alpha), 1.0 / alpha, {1.0, -eps});
      if (!ex.terminated || ex.generated != static_cast<std::size_t>(n) + 1) {
        ++bad_length;
        continue;
      }
      const double mu = sign_value(wave) * std::sqrt(discriminant(p)) / alpha;
      const double s_n = -eps - n * alpha;
      const double aa = a * alpha;
      double factorial = 1.0;
      for (int j = 2; j <= n; ++j) factorial *= j;
      for (double rho : rhos) {
        const double value = series_eval(ex.series, rho);
        const double ref = std::pow(rho, s_n) * std::pow(aa, n) * factorial *
                           laguerre(n, mu, -std::pow(rho, alpha) / aa);
        double scale = 0.0;
        for (const auto& term : ex.series.terms())
          scale += std::abs(term.coeff) * std::pow(rho, term.expo);
        worst = std::max(worst, std::abs(value - ref) / scale);
      }
    }
  } catch (const std::exception& e) {
    return {failure(g, "engine/spectrum duality", 0.0, e)};
  }
  return {check(g, "exp_series terminates at exactly n+1 terms (200 draws, failures)", bad_length,
                0.0),
          check(g, "terminated series vs Laguerre form (relative to sum |terms|)", worst, 1e-10)};
}

Results eigenfunctions_group() {
  const std::string g = "eigenfunctions";
  const std::string name = "Case I/II analytic psi residual, n <= 5, l <= 3";
  try {
    const RadialGrid grid(1e-3, 30.0, 4000);
    double worst = 0.0;
    std::string where;
    for (int l = 0; l <= 3; ++l) {
      for (int n = 0; n <= 5; ++n) {
        const Wavefunction wo = normalize(make_wavefunction(oscillator_params(l, 1.0), n), grid);
        const double ro = residual([](double r) { return 0.5 * r * r; },
                                   energy_oscillator(n, l, 1.0).energy,
                                   wavefunction_samples(wo, grid), l, grid);
        const SpectralLine line = energy_coulomb(n, l);
        const Wavefunction wc = make_wavefunction(coulomb_params(l, line.sigma), n);
        const double rc = residual([](double r) { return -1.0 / r; }, line.energy,
                                   wavefunction_samples(wc, grid), l, grid);
        for (auto [res, label] : {std::pair{ro, "oscillator"}, std::pair{rc, "Coulomb"}}) {
          if (res > worst) {
            worst = res;
            where = std::string("worst: ") + label + " n=" + std::to_string(n) +
                    " l=" + std::to_string(l);
          }
        }
      }
    }
    return {check(g, name, worst, 1e-6, where)};
  } catch (const std::exception& e) {
    return {failure(g, name, 1e-6, e)};
  }
}

FamilyParams family(double alpha, double a, double b, double c) {
  FamilyParams p;
  p.alpha = alpha;
  p.a = a;
  p.b = b;
  p.c = c;
  return p;
}

int sign_changes(const std::vector<double>& v) {
  int count = 0;
  double last = 0.0;
  for (double x : v) {
    if (x == 0.0) continue;
    if (last != 0.0 && (x > 0.0) != (last > 0.0)) ++count;
    last = x;
  }
  return count;
}

Results pct_group(std::uint64_t seed) {
  const std::string g = "pct";
  Results out;
  UniformStream rng(seed + 202);

  double agree = 0.0;
  int l_mismatch = 0;
  for (int draw = 0; draw < 50; ++draw) {
    double alpha = rng.uniform(-2.0, 2.0);
    if (std::abs(alpha) < 0.1) alpha += 0.2;
    const double a = (rng.next() < 0.5 ? -1.0 : 1.0) * rng.uniform(0.3, 2.0);
    FamilyParams p = family(alpha, a, rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
    p.epsilon = rng.uniform(-2.0, 2.0);
    p.l = rng.integer(0, 3);
    for (PctForm form : {PctForm::tabulated, PctForm::canonical}) {
      const double e = pct_energy(p, form);
      for (int k = 0; k < 20; ++k) {
        const double rho = rng.uniform(0.1, 10.0);
        const double v1 = pct_potential(p, exp_map(), rho, e, form);
        const double v2 = exp_map_potential(p, rho, form);
        const double scale = std::exp(2.0 * alpha * rho) / (4.0 * a * a) +
                             std::abs(pct_linear_coupling(p)) * std::exp(alpha * rho) +
                             p.l * (p.l + 1.0) / (rho * rho) + 2.0 * std::exp(-rho) +
                             2.0 * std::abs(e / 0.5) + std::abs(pct_inverse_square_coupling(p)) +
                             5.0;
        agree = std::max(agree, std::abs(v1 - v2) / scale);
      }
      FamilyParams shifted = p;
      for (int dl = 1; dl <= 3; ++dl) {
        shifted.l = p.l + dl;
        if (pct_energy(shifted, form) != e) ++l_mismatch;
      }
    }
  }
  out.push_back(check(g, "pct_potential(f = e^rho) vs exp_map_potential (relative)", agree, 1e-12));
  out.push_back(check(g, "pct_energy unchanged under l -> l+1..l+3 (mismatches)", l_mismatch, 0.0));

  const std::array<FamilyParams, 3> sets{family(0.5, -4.0, 0.0, 0.0), family(-1.0, 0.5, 0.0, -0.3),
                                         family(2.0, -1.0, 0.5, 0.2)};
  try {
    const RadialGrid grid(0.05, 25.0, 4000);
    double canonical = 0.0, tabulated = 0.0;
    int node_error = 0;
    for (std::size_t s = 0; s < sets.size(); ++s) {
      for (int n = 0; n <= 3; ++n) {
        for (PctForm form : {PctForm::canonical, PctForm::tabulated}) {
          const PctSolution sol = make_pct_solution(sets[s], 1, n, form);
          std::vector<double> psi(grid.size());
          for (std::size_t i = 0; i < grid.size(); ++i) psi[i] = pct_wavefunction(sol, grid.r(i));
          const double et = sol.energy / 0.5;
          const double res = residual(
              [&](double rho) { return pct_potential(sol.params, exp_map(), rho, sol.energy, form); },
              et, psi, sol.l_fixed, grid, Stencil::sixth_order, unit_k2);
          (form == PctForm::canonical ? canonical : tabulated) =
              std::max(form == PctForm::canonical ? canonical : tabulated, res);
          if (s == 0 && form == PctForm::canonical) {
            const RadialGrid fine(1e-3, 40.0, 20000);
            std::vector<double> v(fine.size());
            for (std::size_t i = 0; i < fine.size(); ++i) v[i] = pct_wavefunction(sol, fine.r(i));
            node_error = std::max(node_error, std::abs(sign_changes(v) - n));
          }
        }
      }
    }
    out.push_back(check(g, "PCT eigenfunction residual at fixed l, n <= 3 (canonical form)",
                        canonical, 1e-6));
    out.push_back(check(g, "PCT node count equals n (alpha = 0.5 set)", node_error, 0.0));
    out.push_back(info(g, "PCT eigenfunction residual with the tabulated form", tabulated,
                       "tabulated potential and eigenfunction do not solve the same equation"));
  } catch (const std::exception& e) {
    out.push_back(failure(g, "PCT eigenfunction residual", 1e-6, e));
  }

  double fit_worst = 0.0;
  try {
    for (FamilyParams p : {family(-1.0, 0.5, 0.0, -0.3), family(-1.0, -0.7, 1.2, 0.4)}) {
      p.epsilon = 0.3;
      p.l = 2;
      for (PctForm form : {PctForm::tabulated, PctForm::canonical}) {
        // Least squares for A e^{-2 rho} + B e^{-rho}.
        double s11 = 0, s12 = 0, s22 = 0, t1 = 0, t2 = 0, yy = 0;
        std::vector<std::array<double, 3>> rows;
        for (int i = 0; i < 200; ++i) {
          const double rho = 0.1 + 9.9 * i / 199.0;
          const double y = exp_map_potential(p, rho, form) + p.l * (p.l + 1.0) / (rho * rho);
          const double u = std::exp(-2.0 * rho), w = std::exp(-rho);
          s11 += u * u, s12 += u * w, s22 += w * w, t1 += u * y, t2 += w * y, yy += y * y;
          rows.push_back({u, w, y});
        }
        const double det = s11 * s22 - s12 * s12;
        const double A = (t1 * s22 - t2 * s12) / det;
        const double B = (s11 * t2 - s12 * t1) / det;
        double rr = 0.0;
        for (const auto& [u, w, y] : rows) rr += (A * u + B * w - y) * (A * u + B * w - y);
        const auto [qa, qb] = morse_view(p, form);
        fit_worst = std::max({fit_worst, std::sqrt(rr / yy), std::abs(A - qa) / std::abs(qa),
                              std::abs(B - qb) / std::abs(qb)});
      }
    }
    out.push_back(check(g, "Morse two-exponential fit at alpha = -1 (relative)", fit_worst, 1e-10));
  } catch (const std::exception& e) {
    out.push_back(failure(g, "Morse two-exponential fit", 1e-10, e));
  }
  return out;
}

SecondClassParams second(double alpha, double a, double b, double gamma, double beta,
                         double delta) {
  SecondClassParams p;
  p.alpha = alpha;
  p.a = a;
  p.b = b;
  p.gamma = gamma;
  p.beta = beta;
  p.delta = delta;
  return p;
}

double rel(double x, double y, double scale) {
  return scale > 0.0 ? std::abs(x - y) / scale : std::abs(x - y);
}

Results second_class_group(std::uint64_t seed) {
  const std::string g = "second-class";
  Results out;

  {
    const DerivedCoefficients dc = derived_coeffs(second(2.0, 1.0, 1.0, 1.0, 0.0, 0.0));
    const std::array<std::pair<double, double>, 11> expected{{{dc.A1, 1.0},
                                                              {dc.A2, 1.0},
                                                              {dc.B1, 4.0},
                                                              {dc.B2, 0.5},
                                                              {dc.B3, 0.0},
                                                              {dc.C1, 2.0},
                                                              {dc.C2, 0.0},
                                                              {dc.C3, 0.0},
                                                              {dc.D1, -4.0},
                                                              {dc.D2, 1.0},
                                                              {dc.D3, 6.0}}};
    int mismatches = 0;
    for (const auto& [got, want] : expected) mismatches += got != want;
    out.push_back(check(g, "worked example a=b=gamma=1, alpha=2, beta=delta=0 (mismatches)",
                        mismatches, 0.0));
  }

  {
    UniformStream rng(seed + 303);
    double worst = 0.0;
    int valid = 0, degenerate = 0;
    auto signed_range = [&](double lo, double hi) {
      return (rng.next() < 0.5 ? -1.0 : 1.0) * rng.uniform(lo, hi);
    };
    while (valid < 200) {
      double alpha = rng.uniform(-1.0, 3.0);
      if (std::abs(alpha - 1.0) < 0.05) continue;
      const SecondClassParams p = second(alpha, signed_range(0.3, 2.0), signed_range(0.3, 2.0),
                                         signed_range(0.2, 2.0), rng.uniform(-3.0, 3.0),
                                         rng.uniform(-3.0, 3.0));
      DerivedCoefficients dc;
      try {
        dc = derived_coeffs(p);
      } catch (const Error&) {
        ++degenerate;
        continue;
      }
      ++valid;
      const double inv = (p.alpha - 1.0) * p.gamma * p.a;
      const double b3 = 1.0 + p.beta - dc.B1 * dc.B2 * dc.B2;
      const double d3 = 1.0 + p.beta - 4.0 / dc.D1 - dc.D1 * dc.D2 * dc.D2;
      const double c3 = -dc.C1 * dc.C2 * dc.C2 / p.b;
      worst = std::max({worst, rel(dc.A1, 1.0 / (dc.A2 * dc.A2), std::abs(dc.A1)),
                        rel(1.0 / dc.A2, inv, std::abs(inv)),
                        rel(dc.B3, b3, 1.0 + std::abs(p.beta) + std::abs(dc.B1 * dc.B2 * dc.B2)),
                        rel(dc.C3, c3, std::abs(c3)),
                        rel(dc.D3, d3,
                            1.0 + std::abs(p.beta) + std::abs(4.0 / dc.D1) +
                                std::abs(dc.D1 * dc.D2 * dc.D2))});
    }
    out.push_back(check(g, "coefficient identities over 200 draws (relative)", worst, 1e-14,
                        std::to_string(degenerate) + " degenerate draws skipped"));
  }

  const SecondClassParams ex = second(2.0, 1.0, 0.5, 0.2, -3.0, 2.0);
  try {
    const RadialGrid grid(0.2, 2.5, 8001);
    const DerivedCoefficients dc = derived_coeffs(ex);
    const auto S = s_factor(dc, ex, grid);
    const double h = grid.spacing();
    double worst = 0.0;
    for (std::size_t i = 2; i + 2 < grid.size(); ++i) {
      const double d = (std::log(S[i - 2]) - 8.0 * std::log(S[i - 1]) + 8.0 * std::log(S[i + 1]) -
                        std::log(S[i + 2])) /
                       (12.0 * h);
      const double rho = grid.r(i);
      const FValues f = F_functions(dc, ex, rho);
      const double rhs = (f.F2 - 2.0 * F1_derivative(dc, ex, rho)) / (2.0 * f.F1) - 1.0 / rho;
      worst = std::max(worst, std::abs(d - rhs));
    }
    out.push_back(check(g, "s_factor log-derivative self-consistency (absolute)", worst, 1e-8));
  } catch (const std::exception& e) {
    out.push_back(failure(g, "s_factor log-derivative self-consistency", 1e-8, e));
  }

  {
    std::vector<double> grid;
    for (int k = 0; k <= 50; ++k)
      if (k != 10) grid.push_back((50.0 + 5.0 * k) / 100.0);
    SecondClassParams templ = second(2.0, 1.0, 0.33, 0.2, -3.0, 2.0);
    const IndependenceReport report = constant_independence_report(grid, templ);
    int positives = 0;
    double min_variation = 1.0;
    for (const auto& e : report.entries) {
      positives += e.constant_independent;
      if (!e.excluded) min_variation = std::min(min_variation, e.delta_sensitivity_variation);
    }
    out.push_back(check(g, "constant_independence_report negative on alpha grid (positives)",
                        positives, 0.0,
                        "smallest delta-sensitivity variation " + fmt(min_variation)));
  }

  try {
    const RadialGrid grid(0.2, 2.5, 3000);
    const auto roots = eta_bar_exponents(ex);
    double exact_worst = 0.0, printed_worst = 0.0, tail = 0.0;
    const DerivedCoefficients dc = derived_coeffs(ex);
    const auto S_exact = s_factor_exact(ex, grid);
    const auto S_printed = s_factor(dc, ex, grid);
    for (double s : {roots.first, roots.second}) {
      const auto series = second_wavefunction_series(ex, s, 80);
      const auto& last = series.series.terms().back();
      tail = std::max(tail, std::abs(last.coeff) * std::pow(grid.r_max(), last.expo));
      std::vector<double> psi(grid.size()), psi_printed(grid.size());
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const double rho = grid.r(i);
        const double chi = series_eval(series.series, rho);
        psi[i] = conjugated_F(ex, rho).F1 * S_exact[i] * chi;
        psi_printed[i] = F_functions(dc, ex, rho).F1 * S_printed[i] * chi;
      }
      exact_worst = std::max(
          exact_worst, residual([&](double r) { return chain_potential(ex, r); }, 0.0, psi, ex.l,
                                grid, Stencil::sixth_order, unit_k2));
      printed_worst = std::max(
          printed_worst, residual([&](double r) { return second_potential(dc, ex, r); }, 0.0,
                                  psi_printed, ex.l, grid, Stencil::sixth_order, unit_k2));
    }
    out.push_back(check(g, "transformation chain residual, psi = F1 S chi (conjugated F)",
                        exact_worst, 1e-5, "last series term at r_max " + fmt(tail)));
    out.push_back(info(g, "transformation chain residual with the tabulated F and potential",
                       printed_worst, "tabulated F2, F3 differ from the conjugated operator"));
  } catch (const std::exception& e) {
    out.push_back(failure(g, "transformation chain residual", 1e-5, e));
  }
  return out;
}

}  // namespace

const std::vector<std::string>& verification_groups() {
  static const std::vector<std::string> groups{"coulomb",     "oscillator", "couplings",
                                               "bertrand",    "duality",    "eigenfunctions",
                                               "pct",         "second-class"};
  return groups;
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  const auto& groups = verification_groups();
  for (const auto& name : options.only) {
    if (std::find(groups.begin(), groups.end(), name) == groups.end())
      throw Error(Errc::invalid_parameter, "unknown verification group '" + name + "'");
  }
  auto wanted = [&](const std::string& name) {
    return options.only.empty() ||
           std::find(options.only.begin(), options.only.end(), name) != options.only.end();
  };

  std::vector<CheckResult> all;
  auto append = [&](Results r) { all.insert(all.end(), r.begin(), r.end()); };
  if (wanted("coulomb")) append(coulomb_group());
  if (wanted("oscillator")) append(oscillator_group());
  if (wanted("couplings")) append(couplings_group());
  if (wanted("bertrand")) append(bertrand_group());
  if (wanted("duality")) append(duality_group(options.seed));
  if (wanted("eigenfunctions")) append(eigenfunctions_group());
  if (wanted("pct")) append(pct_group(options.seed));
  if (wanted("second-class")) append(second_class_group(options.seed));
  return all;
}

bool all_passed(const std::vector<CheckResult>& results) noexcept {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.informational || r.pass; });
}

}  // namespace qbertrand
