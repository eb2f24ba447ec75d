#include "qbertrand/monomial.hpp"

#include <algorithm>
#include <cmath>

#include "qbertrand/error.hpp"

namespace qbertrand {

WeightedPowerSeries::WeightedPowerSeries(std::vector<MonomialTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const MonomialTerm& x, const MonomialTerm& y) { return x.expo < y.expo; });
  for (const auto& t : terms) add(t);
}

void WeightedPowerSeries::add(MonomialTerm term) {
  if (term.coeff == 0.0) return;
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), term.expo - merge_tolerance,
      [](const MonomialTerm& t, double e) { return t.expo < e; });
  if (it != terms_.end() && std::abs(it->expo - term.expo) <= merge_tolerance) {
    it->coeff += term.coeff;
    if (it->coeff == 0.0) terms_.erase(it);
    return;
  }
  terms_.insert(it, term);
}

OperatorA::OperatorA(double a_, double b_, double c_, double alpha_)
    : a(a_), b(b_), c(c_), alpha(alpha_) {
  if (a == 0.0) throw Error(Errc::invalid_parameter, "OperatorA requires a != 0");
}

double OperatorA::factor_magnitude(double s) const noexcept {
  return std::abs(a * s * (s - 1.0)) + std::abs(b * s) + std::abs(c);
}

OperatorO::OperatorO(double a_, double b_, double alpha_) : a(a_), b(b_), alpha(alpha_) {
  if (a == 0.0) throw Error(Errc::invalid_parameter, "OperatorO requires a != 0");
}

double OperatorO::factor_magnitude(double s) const noexcept {
  return std::abs(a * s) + std::abs(b);
}

MonomialTerm apply_A(const OperatorA& op, MonomialTerm term) noexcept {
  return {term.coeff * op.factor(term.expo), term.expo + op.shift()};
}

MonomialTerm apply_O(const OperatorO& op, MonomialTerm term) noexcept {
  return {term.coeff * op.factor(term.expo), term.expo + op.shift()};
}

template <MonomialOperator Op>
SeriesExpansion exp_series(const Op& op, double scale, MonomialTerm seed, std::size_t max_terms) {
  if (max_terms < 1) throw Error(Errc::invalid_parameter, "exp_series needs max_terms >= 1");

  SeriesExpansion out;
  MonomialTerm term = seed;
  out.series.add(term);
  out.generated = 1;

  while (out.generated < max_terms) {
    const double f = op.factor(term.expo);
    const auto k = static_cast<double>(out.generated);
    const double next = term.coeff * f * scale / k;
    if (std::abs(f) <= termination_tolerance * op.factor_magnitude(term.expo) || scale == 0.0) {
      out.terminated = true;
      break;
    }
    if (next == 0.0) break;  // underflow, not an algebraic zero
    term = {next, term.expo + op.shift()};
    out.series.add(term);
    ++out.generated;
  }
  if (!out.terminated && out.generated == max_terms) {
    // One more factor decides whether the last generated term closes the series.
    const double f = op.factor(term.expo);
    out.terminated = std::abs(f) <= termination_tolerance * op.factor_magnitude(term.expo) ||
                     scale == 0.0;
  }
  return out;
}

template SeriesExpansion exp_series<OperatorA>(const OperatorA&, double, MonomialTerm,
                                               std::size_t);
template SeriesExpansion exp_series<OperatorO>(const OperatorO&, double, MonomialTerm,
                                               std::size_t);

double series_eval(const WeightedPowerSeries& s, double rho) {
  if (!(rho > 0.0)) throw Error(Errc::invalid_parameter, "series_eval requires rho > 0");
  double sum = 0.0;
  for (const auto& t : s.terms()) sum += t.coeff * std::pow(rho, t.expo);
  return sum;
}

WeightedPowerSeries series_derivative(const WeightedPowerSeries& s) {
  WeightedPowerSeries d;
  for (const auto& t : s.terms()) d.add({t.coeff * t.expo, t.expo - 1.0});
  return d;
}

}  // namespace qbertrand
