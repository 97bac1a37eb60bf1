#include "wreath/series.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "wreath/core.hpp"

namespace wreath {

namespace {

constexpr std::array<const char*, 13> kVariableNames = {"t",  "q",  "p", "a", "u", "t1", "t2",
                                                        "q1", "q2", "b", "x", "y", "z"};

// Largest dense buffer we are willing to allocate for one product or inverse.
constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 21;

// Mixed-radix layout with the first variable most significant, so index
// order coincides with lexicographic order on in-cap exponent vectors.
struct Layout {
  std::vector<std::uint64_t> stride;
  std::uint64_t total = 1;

  explicit Layout(const SeriesSpace& space) : stride(space.size()) {
    for (std::size_t k = space.size(); k-- > 0;) {
      stride[k] = total;
      const auto radix = std::uint64_t{space.caps()[k]} + 1;
      if (total > (std::uint64_t{1} << 62) / radix) {
        total = std::uint64_t{1} << 62;  // effectively "too big"
        return;
      }
      total *= radix;
    }
  }

  [[nodiscard]] std::uint64_t index(const Exponents& e) const {
    std::uint64_t idx = 0;
    for (std::size_t k = 0; k < e.size(); ++k) idx += e[k] * stride[k];
    return idx;
  }

  [[nodiscard]] Exponents decode(std::uint64_t idx, std::size_t dims) const {
    Exponents e(dims);
    for (std::size_t k = 0; k < dims; ++k) {
      e[k] = static_cast<std::uint32_t>(idx / stride[k]);
      idx %= stride[k];
    }
    return e;
  }
};

bool leq(const Exponents& a, const Exponents& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

void require_same_vars(const SeriesSpace& a, const SeriesSpace& b) {
  if (a.vars() != b.vars()) throw DomainError("series variable sets differ");
}

}  // namespace

std::string to_string(Variable v) { return kVariableNames[static_cast<std::size_t>(v)]; }

Variable variable_from_string(const std::string& name) {
  for (std::size_t k = 0; k < kVariableNames.size(); ++k)
    if (name == kVariableNames[k]) return static_cast<Variable>(k);
  throw DomainError("unknown variable '" + name + "'");
}

// ---------------------------------------------------------------------------
// SeriesSpace

SeriesSpace::SeriesSpace(std::vector<Variable> vars, std::vector<std::uint32_t> caps)
    : vars_(std::move(vars)), caps_(std::move(caps)) {
  if (vars_.size() != caps_.size()) throw DomainError("series space: one cap per variable");
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j]) throw DomainError("series space: repeated variable " + to_string(vars_[i]));
}

SeriesSpace::SeriesSpace(std::initializer_list<std::pair<Variable, std::uint32_t>> spec) {
  std::vector<Variable> vars;
  std::vector<std::uint32_t> caps;
  for (const auto& [v, c] : spec) {
    vars.push_back(v);
    caps.push_back(c);
  }
  *this = SeriesSpace(std::move(vars), std::move(caps));
}

std::optional<std::size_t> SeriesSpace::index_of(Variable v) const {
  for (std::size_t k = 0; k < vars_.size(); ++k)
    if (vars_[k] == v) return k;
  return std::nullopt;
}

std::size_t SeriesSpace::require(Variable v) const {
  if (auto k = index_of(v)) return *k;
  throw DomainError("variable " + to_string(v) + " is not in the series space");
}

bool SeriesSpace::fits(const Exponents& e) const {
  if (e.size() != caps_.size()) return false;
  for (std::size_t k = 0; k < e.size(); ++k)
    if (e[k] > caps_[k]) return false;
  return true;
}

SeriesSpace SeriesSpace::intersect(const SeriesSpace& other) const {
  require_same_vars(*this, other);
  auto caps = caps_;
  for (std::size_t k = 0; k < caps.size(); ++k) caps[k] = std::min(caps[k], other.caps_[k]);
  return {vars_, std::move(caps)};
}

SeriesSpace SeriesSpace::without(Variable v) const {
  const auto drop = require(v);
  std::vector<Variable> vars;
  std::vector<std::uint32_t> caps;
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    if (k == drop) continue;
    vars.push_back(vars_[k]);
    caps.push_back(caps_[k]);
  }
  return {std::move(vars), std::move(caps)};
}

// ---------------------------------------------------------------------------
// TruncatedSeries

TruncatedSeries TruncatedSeries::constant(const SeriesSpace& space, const Integer& c) {
  TruncatedSeries s(space);
  s.add_term(Exponents(space.size(), 0), c);
  return s;
}

TruncatedSeries TruncatedSeries::monomial(const SeriesSpace& space,
                                          const std::vector<std::pair<Variable, std::uint32_t>>& powers,
                                          const Integer& c) {
  TruncatedSeries s(space);
  Exponents e(space.size(), 0);
  for (const auto& [v, k] : powers) e[space.require(v)] += k;
  s.add_term(e, c);
  return s;
}

Integer TruncatedSeries::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer{0} : it->second;
}

Integer TruncatedSeries::constant_term() const { return coefficient(Exponents(space_.size(), 0)); }

void TruncatedSeries::add_term(const Exponents& e, const Integer& c) {
  if (c == 0 || !space_.fits(e)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  require_same_vars(space_, o.space_);
  if (space_ != o.space_) {
    space_ = space_.intersect(o.space_);
    for (auto it = terms_.begin(); it != terms_.end();)
      it = space_.fits(it->first) ? std::next(it) : terms_.erase(it);
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) { return *this += -o; }

TruncatedSeries TruncatedSeries::operator-() const {
  auto out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const auto space = a.space_.intersect(b.space_);
  TruncatedSeries out(space);
  if (a.is_zero() || b.is_zero()) return out;
  const auto dims = space.size();

  // A single-term factor is a shift, which preserves term order.
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const auto& [shift, c] = *(a.terms_.size() == 1 ? a.terms_ : b.terms_).begin();
    const auto& other = a.terms_.size() == 1 ? b.terms_ : a.terms_;
    Exponents e(dims);
    for (const auto& [eo, co] : other) {
      for (std::size_t k = 0; k < dims; ++k) e[k] = eo[k] + shift[k];
      if (space.fits(e)) out.terms_.emplace_hint(out.terms_.end(), e, co * c);
    }
    return out;
  }

  const Layout layout(space);
  std::vector<std::pair<const Exponents*, std::uint64_t>> left, right;
  std::vector<const Integer*> left_c, right_c;
  for (const auto& [e, c] : a.terms_)
    if (space.fits(e)) left.emplace_back(&e, layout.index(e)), left_c.push_back(&c);
  for (const auto& [e, c] : b.terms_)
    if (space.fits(e)) right.emplace_back(&e, layout.index(e)), right_c.push_back(&c);

  auto fits_sum = [&](const Exponents& x, const Exponents& y) {
    for (std::size_t k = 0; k < dims; ++k)
      if (x[k] + y[k] > space.caps()[k]) return false;
    return true;
  };

  if (layout.total <= kDenseLimit) {
    std::vector<Integer> buf(layout.total);
    std::vector<bool> touched(layout.total, false);
    for (std::size_t i = 0; i < left.size(); ++i)
      for (std::size_t j = 0; j < right.size(); ++j) {
        if (!fits_sum(*left[i].first, *right[j].first)) continue;
        const auto idx = left[i].second + right[j].second;
        buf[idx] += *left_c[i] * *right_c[j];
        touched[idx] = true;
      }
    for (std::uint64_t idx = 0; idx < layout.total; ++idx)
      if (touched[idx] && buf[idx] != 0) out.terms_.emplace_hint(out.terms_.end(), layout.decode(idx, dims), buf[idx]);
    return out;
  }

  Exponents e(dims);
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (!fits_sum(*left[i].first, *right[j].first)) continue;
      for (std::size_t k = 0; k < dims; ++k) e[k] = (*left[i].first)[k] + (*right[j].first)[k];
      out.add_term(e, *left_c[i] * *right_c[j]);
    }
  return out;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries scalar_mul(const TruncatedSeries& s, const Integer& c) {
  return s * TruncatedSeries::constant(s.space(), c);
}

TruncatedSeries invert_unit(const TruncatedSeries& s) {
  const auto c0 = s.constant_term();
  if (c0 != 1 && c0 != -1) throw DomainError("invert_unit: constant term is not a unit");
  const auto& space = s.space();
  const Layout layout(space);
  if (layout.total > kDenseLimit) throw DomainError("invert_unit: series space too large");
  const auto dims = space.size();

  struct Term {
    Exponents e;
    std::uint64_t idx;
    Integer c;
  };
  std::vector<Term> rest;
  for (const auto& [e, c] : s.terms())
    if (std::any_of(e.begin(), e.end(), [](auto x) { return x != 0; })) rest.push_back({e, layout.index(e), c});

  // R·s = 1 solved coefficient by coefficient in index order, which is a
  // linear extension of the componentwise order.
  std::vector<Integer> inv(layout.total);
  Exponents e(dims, 0);
  for (std::uint64_t idx = 0; idx < layout.total; ++idx) {
    Integer acc = idx == 0 ? 1 : 0;
    for (const auto& t : rest)
      if (leq(t.e, e)) acc -= t.c * inv[idx - t.idx];
    inv[idx] = c0 == 1 ? acc : Integer(-acc);
    for (std::size_t k = dims; k-- > 0;) {
      if (e[k] < space.caps()[k]) {
        ++e[k];
        break;
      }
      e[k] = 0;
    }
  }

  TruncatedSeries out(space);
  for (std::uint64_t idx = 0; idx < layout.total; ++idx)
    if (inv[idx] != 0) out.add_term(layout.decode(idx, dims), inv[idx]);
  return out;
}

TruncatedSeries substitute_scaled(const TruncatedSeries& s, Variable v,
                                  const std::vector<std::pair<Variable, std::uint32_t>>& monomial) {
  const auto& space = s.space();
  const auto kv = space.require(v);
  Exponents step(space.size(), 0);
  for (const auto& [w, k] : monomial) step[space.require(w)] += k;
  TruncatedSeries out(space);
  for (const auto& [e, c] : s.terms()) {
    auto shifted = e;
    for (std::size_t k = 0; k < shifted.size(); ++k) shifted[k] += e[kv] * step[k];
    out.add_term(shifted, c);
  }
  return out;
}

TruncatedSeries coefficient_of(const TruncatedSeries& s, Variable v, std::uint32_t k) {
  const auto kv = s.space().require(v);
  TruncatedSeries out(s.space().without(v));
  for (const auto& [e, c] : s.terms()) {
    if (e[kv] != k) continue;
    auto rest = e;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(kv));
    out.add_term(rest, c);
  }
  return out;
}

TruncatedSeries embed(const TruncatedSeries& s, const SeriesSpace& target) {
  const auto& vars = s.space().vars();
  std::vector<std::optional<std::size_t>> where(vars.size());
  for (std::size_t k = 0; k < vars.size(); ++k) where[k] = target.index_of(vars[k]);
  TruncatedSeries out(target);
  for (const auto& [e, c] : s.terms()) {
    Exponents mapped(target.size(), 0);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!where[k]) throw DomainError("embed: target space lacks variable " + to_string(vars[k]));
      mapped[*where[k]] = e[k];
    }
    out.add_term(mapped, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// q-analogues

TruncatedSeries q_number(const SeriesSpace& space, std::uint32_t n, Variable v) {
  TruncatedSeries out(space);
  for (std::uint32_t i = 0; i < n; ++i) out += TruncatedSeries::monomial(space, {{v, i}});
  return out;
}

TruncatedSeries q_factorial(const SeriesSpace& space, std::uint32_t n, Variable v) {
  auto out = TruncatedSeries::one(space);
  for (std::uint32_t k = 2; k <= n; ++k) out = out * q_number(space, k, v);
  return out;
}

std::vector<Integer> poly_mul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Integer> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<Integer> poly_div_exact(const std::vector<Integer>& num, const std::vector<Integer>& den) {
  auto rem = num;
  auto trim = [](std::vector<Integer>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  auto d = den;
  trim(d);
  trim(rem);
  if (d.empty()) throw std::logic_error("poly_div_exact: division by zero");
  if (rem.size() < d.size()) {
    if (!rem.empty()) throw std::logic_error("poly_div_exact: nonzero remainder");
    return {};
  }
  std::vector<Integer> quot(rem.size() - d.size() + 1);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const auto& lead = rem[k + d.size() - 1];
    if (lead == 0) continue;
    if (lead % d.back() != 0) throw std::logic_error("poly_div_exact: inexact leading coefficient");
    quot[k] = lead / d.back();
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= quot[k] * d[j];
  }
  trim(rem);
  if (!rem.empty()) throw std::logic_error("poly_div_exact: nonzero remainder");
  return quot;
}

std::vector<Integer> q_multinomial_poly(const std::vector<std::uint32_t>& parts) {
  auto factorial = [](std::uint32_t n) {
    std::vector<Integer> f{1};
    for (std::uint32_t k = 2; k <= n; ++k) f = poly_mul(f, std::vector<Integer>(k, 1));
    return f;
  };
  std::uint32_t n = 0;
  std::vector<Integer> den{1};
  for (auto part : parts) {
    n += part;
    den = poly_mul(den, factorial(part));
  }
  return poly_div_exact(factorial(n), den);
}

TruncatedSeries q_multinomial(const SeriesSpace& space, const std::vector<std::uint32_t>& parts, Variable v) {
  const auto poly = q_multinomial_poly(parts);
  TruncatedSeries out(space);
  for (std::uint32_t k = 0; k < poly.size(); ++k) out += TruncatedSeries::monomial(space, {{v, k}}, poly[k]);
  return out;
}

TruncatedSeries colored_q_number(const SeriesSpace& space, std::uint32_t n, std::uint32_t r) {
  if (n == 0) return TruncatedSeries(space);
  auto colors = TruncatedSeries::one(space);
  for (std::uint32_t j = 1; j < r; ++j) colors += TruncatedSeries::monomial(space, {{Variable::a, j}, {Variable::p, j + n - 1}});
  return colors * q_number(space, n, Variable::p);
}

TruncatedSeries colored_q_factorial(const SeriesSpace& space, std::uint32_t n, std::uint32_t r) {
  auto out = TruncatedSeries::one(space);
  for (std::uint32_t k = 1; k <= n; ++k) out = out * colored_q_number(space, k, r);
  return out;
}

TruncatedSeries colored_exponential_term(const SeriesSpace& space, std::uint32_t n, std::uint32_t r) {
  return invert_unit(colored_q_factorial(space, n, r));
}

TruncatedSeries exp_series(const SeriesSpace& space, Variable u, Variable base, std::uint32_t colors) {
  if (colors > 1 && base != Variable::p) throw DomainError("colored exponential is defined over p and a");
  TruncatedSeries out(space);
  for (std::uint32_t m = 0; m <= space.cap(u); ++m) {
    const auto fac = colors > 1 ? colored_q_factorial(space, m, colors) : q_factorial(space, m, base);
    out += TruncatedSeries::monomial(space, {{u, m}}) * invert_unit(fac);
  }
  return out;
}

TruncatedSeries geometric_u_coefficient(const SeriesSpace& space, const std::vector<TruncatedSeries>& monomials,
                                        std::uint32_t n) {
  // dp[d] = [u^d] of the product over the factors seen so far. Walking d
  // upward lets each factor be used any number of times.
  std::vector<TruncatedSeries> dp(n + 1, TruncatedSeries(space));
  dp[0] = TruncatedSeries::one(space);
  for (const auto& m : monomials)
    for (std::uint32_t d = 1; d <= n; ++d) dp[d] += m * dp[d - 1];
  return dp[n];
}

std::string to_string(ColumnSet c) {
  switch (c) {
    case ColumnSet::as_printed: return "as_printed";
    case ColumnSet::colored_entries: return "colored_entries";
    case ColumnSet::anchored: return "anchored";
  }
  return "?";
}

ColumnSet column_set_from_string(const std::string& s) {
  if (s == "as_printed" || s == "printed") return ColumnSet::as_printed;
  if (s == "colored_entries" || s == "colored") return ColumnSet::colored_entries;
  if (s == "anchored") return ColumnSet::anchored;
  throw DomainError("unknown column set '" + s + "'");
}

std::vector<GeometricFactor> geometric_factors(std::uint32_t k1, std::uint32_t k2, std::uint32_t r, ColumnSet set) {
  std::vector<GeometricFactor> out;
  for (std::uint32_t i = 0; i <= k1; ++i)
    for (std::uint32_t j = 0; j <= k2; ++j)
      for (std::uint32_t m = 0; m < r; ++m) {
        if (m > 0 && set == ColumnSet::colored_entries && j == 0) continue;
        if (m > 0 && set == ColumnSet::anchored && (i == 0 || j == 0)) continue;
        out.push_back({i, j, m});
      }
  return out;
}

TruncatedSeries extract_u_coefficient_laurent(const std::vector<GeometricFactor>& factors, std::uint32_t n,
                                              std::uint32_t k1, std::uint32_t k2, std::uint32_t r,
                                              std::optional<SeriesSpace> space) {
  const auto color_cap = n * (r > 0 ? r - 1 : 0);
  const auto sp = space.value_or(SeriesSpace{
      {Variable::q1, n * k1}, {Variable::q2, n * k2}, {Variable::a, color_cap}, {Variable::b, color_cap}});
  std::vector<TruncatedSeries> monomials;
  monomials.reserve(factors.size());
  for (const auto& f : factors) {
    if (f.i > k1 || f.j > k2 || f.m >= r) throw DomainError("geometric factor outside 0..k1, 0..k2, 0..r-1");
    monomials.push_back(TruncatedSeries::monomial(
        sp, {{Variable::q1, k1 - f.i}, {Variable::q2, k2 - f.j}, {Variable::a, f.m}, {Variable::b, f.m}}));
  }
  return geometric_u_coefficient(sp, monomials, n);
}

// ---------------------------------------------------------------------------

nlohmann::json to_json(const TruncatedSeries& s) {
  nlohmann::json out;
  auto vars = nlohmann::json::array();
  for (auto v : s.space().vars()) vars.push_back(to_string(v));
  out["vars"] = vars;
  out["caps"] = s.space().caps();
  auto terms = nlohmann::json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back({{"exp", e}, {"coef", c.str()}});
  out["terms"] = terms;
  return out;
}

TruncatedSeries series_from_json(const nlohmann::json& j) {
  std::vector<Variable> vars;
  for (const auto& v : j.at("vars")) vars.push_back(variable_from_string(v.get<std::string>()));
  TruncatedSeries out(SeriesSpace(std::move(vars), j.at("caps").get<std::vector<std::uint32_t>>()));
  for (const auto& t : j.at("terms")) {
    auto e = t.at("exp").get<Exponents>();
    if (!out.space().fits(e)) throw DomainError("series_from_json: term beyond caps");
    out.add_term(e, Integer(t.at("coef").get<std::string>()));
  }
  return out;
}

std::string to_string(const TruncatedSeries& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    std::ostringstream mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (mono.tellp() > 0) mono << '*';
      mono << to_string(s.space().vars()[k]);
      if (e[k] > 1) mono << '^' << e[k];
    }
    const auto m = mono.str();
    if (m.empty())
      os << magnitude;
    else if (magnitude == 1)
      os << m;
    else
      os << magnitude << '*' << m;
  }
  return os.str();
}

std::optional<Mismatch> first_mismatch(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  if (lhs.space() != rhs.space()) throw DomainError("first_mismatch: series live in different spaces");
  auto a = lhs.terms().begin();
  auto b = rhs.terms().begin();
  const auto a_end = lhs.terms().end();
  const auto b_end = rhs.terms().end();
  while (a != a_end || b != b_end) {
    if (b == b_end || (a != a_end && a->first < b->first)) return Mismatch{a->first, a->second, 0};
    if (a == a_end || b->first < a->first) return Mismatch{b->first, 0, b->second};
    if (a->second != b->second) return Mismatch{a->first, a->second, b->second};
    ++a;
    ++b;
  }
  return std::nullopt;
}

}  // namespace wreath
