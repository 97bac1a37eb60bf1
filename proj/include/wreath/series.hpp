#pragma once

// Exact multivariate power series truncated per variable, over arbitrary
// precision integers, plus the q-analogues used by the identities.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "wreath/core.hpp"

namespace wreath {

using Integer = boost::multiprecision::cpp_int;
using Exponents = std::vector<std::uint32_t>;

enum class Variable { t, q, p, a, u, t1, t2, q1, q2, b, x, y, z };

std::string to_string(Variable v);
Variable variable_from_string(const std::string& name);

/// Ordered variables with an inclusive degree cap each.
class SeriesSpace {
public:
  SeriesSpace() = default;
  SeriesSpace(std::vector<Variable> vars, std::vector<std::uint32_t> caps);
  SeriesSpace(std::initializer_list<std::pair<Variable, std::uint32_t>> spec);

  [[nodiscard]] const std::vector<Variable>& vars() const { return vars_; }
  [[nodiscard]] const std::vector<std::uint32_t>& caps() const { return caps_; }
  [[nodiscard]] std::size_t size() const { return vars_.size(); }
  [[nodiscard]] std::optional<std::size_t> index_of(Variable v) const;
  [[nodiscard]] std::size_t require(Variable v) const;
  [[nodiscard]] std::uint32_t cap(Variable v) const { return caps_[require(v)]; }
  [[nodiscard]] bool fits(const Exponents& e) const;

  /// Same variables, caps taken pointwise minimum. Throws on differing variables.
  [[nodiscard]] SeriesSpace intersect(const SeriesSpace& other) const;
  /// This space with `v` removed.
  [[nodiscard]] SeriesSpace without(Variable v) const;

  friend bool operator==(const SeriesSpace&, const SeriesSpace&) = default;

private:
  std::vector<Variable> vars_;
  std::vector<std::uint32_t> caps_;
};

class TruncatedSeries {
public:
  using Terms = std::map<Exponents, Integer>;

  TruncatedSeries() = default;
  explicit TruncatedSeries(SeriesSpace space) : space_(std::move(space)) {}

  static TruncatedSeries constant(const SeriesSpace& space, const Integer& c);
  static TruncatedSeries one(const SeriesSpace& space) { return constant(space, 1); }
  /// c · Π v^k over the listed powers; zero if some power exceeds its cap.
  static TruncatedSeries monomial(const SeriesSpace& space, const std::vector<std::pair<Variable, std::uint32_t>>& powers,
                                  const Integer& c = 1);

  [[nodiscard]] const SeriesSpace& space() const { return space_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Integer coefficient(const Exponents& e) const;
  [[nodiscard]] Integer constant_term() const;

  /// Adds c·x^e; silently dropped if e is beyond the caps.
  void add_term(const Exponents& e, const Integer& c);

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries operator-() const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_;
  }

private:
  SeriesSpace space_;
  Terms terms_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scalar_mul(const TruncatedSeries& s, const Integer& c);

/// Multiplicative inverse up to the caps. The constant term must be ±1.
TruncatedSeries invert_unit(const TruncatedSeries& s);

/// v ↦ v · monomial, re-truncated.
TruncatedSeries substitute_scaled(const TruncatedSeries& s, Variable v,
                                  const std::vector<std::pair<Variable, std::uint32_t>>& monomial);

/// Coefficient of v^k, as a series over the remaining variables.
TruncatedSeries coefficient_of(const TruncatedSeries& s, Variable v, std::uint32_t k);

/// Re-express in `target`, which must contain every variable of s that
/// occurs with a positive exponent. Terms beyond the new caps are dropped.
TruncatedSeries embed(const TruncatedSeries& s, const SeriesSpace& target);

// ---------------------------------------------------------------------------
// q-analogues

/// [n]_v = 1 + v + … + v^{n-1}
TruncatedSeries q_number(const SeriesSpace& space, std::uint32_t n, Variable v);
TruncatedSeries q_factorial(const SeriesSpace& space, std::uint32_t n, Variable v);
/// [n; parts]_v computed by exact polynomial division.
TruncatedSeries q_multinomial(const SeriesSpace& space, const std::vector<std::uint32_t>& parts, Variable v);

/// Untruncated univariate pieces, exposed for tests.
std::vector<Integer> poly_mul(const std::vector<Integer>& a, const std::vector<Integer>& b);
/// Exact quotient; throws std::logic_error on a nonzero remainder.
std::vector<Integer> poly_div_exact(const std::vector<Integer>& num, const std::vector<Integer>& den);
std::vector<Integer> q_multinomial_poly(const std::vector<std::uint32_t>& parts);

/// [n]_{r,a,p} = (1 + Σ_{j=1}^{r-1} a^j p^{j+n-1}) · [n]_p
TruncatedSeries colored_q_number(const SeriesSpace& space, std::uint32_t n, std::uint32_t r);
TruncatedSeries colored_q_factorial(const SeriesSpace& space, std::uint32_t n, std::uint32_t r);
/// 1 / [n]_{r,a,p}!
TruncatedSeries colored_exponential_term(const SeriesSpace& space, std::uint32_t n, std::uint32_t r);

/// e[u]_p = Σ u^n/[n]_p! (colors = 1) or e[u]_{r,a,p} = Σ u^n/[n]_{r,a,p}! (colors = r),
/// up to the u cap of the space.
TruncatedSeries exp_series(const SeriesSpace& space, Variable u, Variable base, std::uint32_t colors = 1);

/// [u^n] Π_f 1/(1 - u·M_f) for monomials M_f, by a knapsack recurrence.
TruncatedSeries geometric_u_coefficient(const SeriesSpace& space, const std::vector<TruncatedSeries>& monomials,
                                        std::uint32_t n);

/// 1/(1 - u q1^{-i} q2^{-j} (ab)^m).
struct GeometricFactor {
  std::uint32_t i = 0, j = 0, m = 0;
  friend bool operator==(const GeometricFactor&, const GeometricFactor&) = default;
};

/// Which factors (i, j, m), 0 ≤ i ≤ k1, 0 ≤ j ≤ k2, 0 ≤ m < r, to include.
///   as_printed       every triple
///   colored_entries  m > 0 only when j > 0 (columns are valid colored entries)
///   anchored         m > 0 only when i > 0 and j > 0
enum class ColumnSet { as_printed, colored_entries, anchored };

std::string to_string(ColumnSet c);
ColumnSet column_set_from_string(const std::string& s);

std::vector<GeometricFactor> geometric_factors(std::uint32_t k1, std::uint32_t k2, std::uint32_t r, ColumnSet set);

/// q1^{n k1} q2^{n k2} [u^n] Π 1/(1 - u q1^{-i} q2^{-j} (ab)^m). The prefactor
/// is folded into each factor, so every stored exponent is nonnegative.
/// Result lives in (q1, q2, a, b) with caps (n k1, n k2, n(r-1), n(r-1))
/// unless `space` is given.
TruncatedSeries extract_u_coefficient_laurent(const std::vector<GeometricFactor>& factors, std::uint32_t n,
                                              std::uint32_t k1, std::uint32_t k2, std::uint32_t r,
                                              std::optional<SeriesSpace> space = {});

// ---------------------------------------------------------------------------
// Serialization and comparison

nlohmann::json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::json& j);

/// "3*t^2*q + -1*a" style; for messages and small tests.
std::string to_string(const TruncatedSeries& s);

struct Mismatch {
  Exponents exponents;
  Integer lhs, rhs;
};

/// First exponent vector (ascending) where the coefficients differ. Both
/// series must share a space.
std::optional<Mismatch> first_mismatch(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

}  // namespace wreath
