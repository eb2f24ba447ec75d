#pragma once

// Exact action of the first- and second-class generators on monomials rho^s,
// and truncated operator exponentials built from that action.

#include <concepts>
#include <cstddef>
#include <span>
#include <vector>

namespace qbertrand {

struct MonomialTerm {
  double coeff = 0.0;
  double expo = 0.0;
};

/// Finite sum of real-exponent monomials, kept sorted by strictly increasing
/// exponent. Exponents closer than `merge_tolerance` are merged and exact-zero
/// coefficients are dropped.
class WeightedPowerSeries {
 public:
  static constexpr double merge_tolerance = 1e-12;

  WeightedPowerSeries() = default;
  explicit WeightedPowerSeries(std::vector<MonomialTerm> terms);

  void add(MonomialTerm term);

  std::span<const MonomialTerm> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

 private:
  std::vector<MonomialTerm> terms_;
};

/// A = a rho^{2-alpha} d^2/drho^2 + b rho^{1-alpha} d/drho + c rho^{-alpha}.
/// On rho^s it multiplies by a s(s-1) + b s + c and lowers the power by alpha.
struct OperatorA {
  double a;
  double b;
  double c;
  double alpha;

  OperatorA(double a, double b, double c, double alpha);

  double factor(double s) const noexcept { return a * s * (s - 1.0) + b * s + c; }
  double factor_magnitude(double s) const noexcept;
  double shift() const noexcept { return -alpha; }
};

/// O = a rho^alpha d/drho + b rho^{alpha-1}: multiplies rho^s by a s + b and
/// raises the power by alpha - 1.
struct OperatorO {
  double a;
  double b;
  double alpha;

  OperatorO(double a, double b, double alpha);

  double factor(double s) const noexcept { return a * s + b; }
  double factor_magnitude(double s) const noexcept;
  double shift() const noexcept { return alpha - 1.0; }
};

template <typename Op>
concept MonomialOperator = requires(const Op& op, double s) {
  { op.factor(s) } -> std::convertible_to<double>;
  { op.factor_magnitude(s) } -> std::convertible_to<double>;
  { op.shift() } -> std::convertible_to<double>;
};

MonomialTerm apply_A(const OperatorA& op, MonomialTerm term) noexcept;
MonomialTerm apply_O(const OperatorO& op, MonomialTerm term) noexcept;

struct SeriesExpansion {
  WeightedPowerSeries series;
  /// Number of non-zero terms generated, counting the seed.
  std::size_t generated = 0;
  /// True when some op^k(seed) vanished identically; the series is then exact.
  bool terminated = false;
};

inline constexpr std::size_t default_max_terms = 64;

/// A factor is treated as an algebraic zero when it is below this fraction of
/// the magnitude of its own summands.
inline constexpr double termination_tolerance = 1e-12;

template <MonomialOperator Op>
SeriesExpansion exp_series(const Op& op, double scale, MonomialTerm seed,
                           std::size_t max_terms = default_max_terms);

extern template SeriesExpansion exp_series<OperatorA>(const OperatorA&, double, MonomialTerm,
                                                      std::size_t);
extern template SeriesExpansion exp_series<OperatorO>(const OperatorO&, double, MonomialTerm,
                                                      std::size_t);

/// Sum of coeff * rho^expo in ascending-exponent order. Requires rho > 0.
double series_eval(const WeightedPowerSeries& s, double rho);

/// Term-by-term d/drho.
WeightedPowerSeries series_derivative(const WeightedPowerSeries& s);

}  // namespace qbertrand
