#include "qbertrand/spectrum.hpp"

#include <cmath>
#include <limits>

#include "qbertrand/error.hpp"

namespace qbertrand {

const char* to_string(Sign s) noexcept { return s == Sign::plus ? "+" : "-"; }

double discriminant(const FamilyParams& p) {
  if (p.a == 0.0) throw Error(Errc::invalid_parameter, "a must be non-zero");
  const double t = 1.0 - p.b / p.a;
  return t * t - 4.0 * p.c / p.a;
}

namespace {

double root_discriminant(const FamilyParams& p) {
  const double d = discriminant(p);
  if (d < 0.0)
    throw Error(Errc::negative_discriminant, "Delta = " + std::to_string(d) + " is negative");
  return std::sqrt(d);
}

}  // namespace

double epsilon_n(const FamilyParams& p, int n, Sign branch) {
  if (n < 0) throw Error(Errc::invalid_parameter, "n must be non-negative");
  const double sq = root_discriminant(p);
  return -p.alpha * n - 0.5 * (1.0 - p.b / p.a) + sign_value(branch) * 0.5 * sq;
}

SpectralLine energy_coulomb(int n, int l, const PhysicalConstants& constants, double lambda) {
  if (n < 0 || l < 0) throw Error(Errc::invalid_parameter, "n and l must be non-negative");
  const double N = n + l + 1.0;
  const double sigma = -constants.mass * constants.coulomb_strength * lambda /
                       (constants.hbar * constants.hbar * N);
  FamilyParams p = coulomb_params(l, sigma, constants, lambda);
  SpectralLine line;
  line.n = n;
  line.l = l;
  line.branch = Sign::minus;
  line.epsilon_n = epsilon_n(p, n, line.branch);
  p.epsilon = line.epsilon_n;
  line.energy = -couplings(p).g1;
  line.sigma = sigma;
  return line;
}

SpectralLine energy_oscillator(int n, int l, double omega, const PhysicalConstants& constants,
                               double lambda) {
  if (n < 0 || l < 0) throw Error(Errc::invalid_parameter, "n and l must be non-negative");
  FamilyParams p = oscillator_params(l, omega, constants, lambda);
  SpectralLine line;
  line.n = n;
  line.l = l;
  line.branch = Sign::minus;
  line.epsilon_n = epsilon_n(p, n, line.branch);
  p.epsilon = line.epsilon_n;
  line.energy = -couplings(p).g2;
  line.sigma = *p.sigma;
  return line;
}

double laguerre(int n, double k, double x) {
  if (n < 0) throw Error(Errc::invalid_parameter, "Laguerre degree must be non-negative");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + k - x;
  for (int j = 1; j < n; ++j) {
    const double next = ((2.0 * j + 1.0 + k - x) * cur - (j + k) * prev) / (j + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

Sign branch_select(const FamilyParams& p) {
  const double sq = root_discriminant(p);
  if (p.alpha == 0.0) throw Error(Errc::invalid_parameter, "alpha = 0 has no eigenfunction");
  const bool exp_decays_at_infinity = p.alpha > 0.0 && p.a * p.alpha < 0.0;
  const bool exp_decays_at_origin = p.alpha < 0.0 && p.a * p.alpha < 0.0;

  auto admissible = [&](Sign s) {
    const double power = (sign_value(s) * sq - 1.0) / 2.0;
    // psi^2 r^2 must be integrable at both ends.
    const bool origin_ok = exp_decays_at_origin || (p.alpha > 0.0 && power > -1.5);
    const bool infinity_ok = exp_decays_at_infinity || (p.alpha < 0.0 && power < -1.5);
    return origin_ok && infinity_ok;
  };
  if (admissible(Sign::plus)) return Sign::plus;
  if (admissible(Sign::minus)) return Sign::minus;
  throw Error(Errc::not_normalizable, "neither sign of sqrt(Delta) gives a normalisable state");
}

Wavefunction make_wavefunction(const FamilyParams& p, int n) {
  Wavefunction w;
  w.params = p;
  w.n = n;
  w.branch = branch_select(p);
  w.params.epsilon = epsilon_n(p, n, epsilon_branch_for(w.branch));
  return w;
}

double wavefunction_eval(const Wavefunction& w, double rho) {
  if (!(rho > 0.0)) throw Error(Errc::invalid_parameter, "wavefunction_eval requires rho > 0");
  const FamilyParams& p = w.params;
  const double s_sq = sign_value(w.branch) * root_discriminant(p);
  const double ra = std::pow(rho, p.alpha);
  const double aa = p.a * p.alpha;
  return w.normalization * std::pow(rho, (s_sq - 1.0) / 2.0) * std::exp(ra / (2.0 * aa)) *
         laguerre(w.n, s_sq / p.alpha, -ra / aa);
}

std::vector<double> wavefunction_samples(const Wavefunction& w, const RadialGrid& grid) {
  std::vector<double> psi(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    psi[i] = wavefunction_eval(w, grid.r(i) / w.params.lambda);
  return psi;
}

double simpson(std::span<const double> f, double h) {
  const std::size_t n = f.size();
  if (n < 2) return 0.0;
  if (n == 2) return 0.5 * h * (f[0] + f[1]);
  if (n == 3) return h / 3.0 * (f[0] + 4.0 * f[1] + f[2]);
  // Simpson needs an odd number of points; peel a 3/8 panel off the end otherwise.
  const std::size_t m = (n % 2 == 1) ? n : n - 3;
  double s = f[0] + f[m - 1];
  for (std::size_t i = 1; i + 1 < m; ++i) s += (i % 2 == 1 ? 4.0 : 2.0) * f[i];
  s *= h / 3.0;
  if (m != n) s += 3.0 * h / 8.0 * (f[n - 4] + 3.0 * f[n - 3] + 3.0 * f[n - 2] + f[n - 1]);
  return s;
}

Wavefunction normalize(const Wavefunction& w, const RadialGrid& grid) {
  Wavefunction unit = w;
  unit.normalization = 1.0;
  const auto psi = wavefunction_samples(unit, grid);
  const std::size_t n = grid.size();
  std::vector<double> integrand(n);
  for (std::size_t i = 0; i < n; ++i) integrand[i] = psi[i] * psi[i] * grid.r(i) * grid.r(i);

  double total = simpson(integrand, grid.spacing());
  // Near the origin the integrand behaves like r^{2p+2}.
  const double sq = std::sqrt(std::max(discriminant(w.params), 0.0));
  const double power = (sign_value(w.branch) * sq - 1.0) / 2.0;
  if (w.params.alpha > 0.0 && 2.0 * power + 3.0 > 0.0)
    total += integrand[0] * grid.r(0) / (2.0 * power + 3.0);

  const double last = integrand[n - 1];
  double tail = 0.0;
  if (last > 0.0) {
    const double kappa = std::log(integrand[n - 2] / last) / grid.spacing();
    tail = kappa > 0.0 ? last / kappa : std::numeric_limits<double>::infinity();
  }
  if (!(total > 0.0) || !std::isfinite(total))
    throw Error(Errc::divergent_norm, "norm integral is not positive and finite");
  if (tail > 1e-8 * total)
    throw Error(Errc::divergent_norm, "tail beyond r_max holds " + std::to_string(tail / total) +
                                          " of the norm");
  unit.normalization = 1.0 / std::sqrt(total);
  return unit;
}

}  // namespace qbertrand
