#include "wreath/identities.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <exception>
#include <map>
#include <numeric>
#include <thread>

namespace wreath {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

constexpr std::array<const char*, 8> kStatNames = {"des", "maj", "inv", "len", "col", "des_inv", "maj_inv", "col_inv"};

bool is_inverse_stat(Stat s) { return s == Stat::des_inv || s == Stat::maj_inv || s == Stat::col_inv; }

// Plain S_n statistics, kept apart from the colored machinery so the
// classical identities check it independently.
struct PlainStats {
  std::uint32_t des = 0, maj = 0, inv = 0, ides = 0, imaj = 0;
};

template <class F>
void for_each_plain(std::uint32_t n, F&& visit) {
  std::vector<std::uint32_t> p(n), q(n);
  std::iota(p.begin(), p.end(), 1u);
  do {
    PlainStats s;
    for (std::uint32_t i = 1; i < n; ++i)
      if (p[i - 1] > p[i]) ++s.des, s.maj += i;
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++s.inv;
    for (std::uint32_t i = 0; i < n; ++i) q[p[i] - 1] = i + 1;
    for (std::uint32_t i = 1; i < n; ++i)
      if (q[i - 1] > q[i]) ++s.ides, s.imaj += i;
    visit(s);
  } while (std::next_permutation(p.begin(), p.end()));
}

TruncatedSeries mono(const SeriesSpace& space, std::vector<std::pair<Variable, std::uint32_t>> powers) {
  return TruncatedSeries::monomial(space, powers);
}

/// 1 / Π_{i=0}^{count-1} (1 - t q^i)
TruncatedSeries inverse_denominator(const SeriesSpace& space, Variable t, Variable q, std::uint32_t count) {
  auto den = TruncatedSeries::one(space);
  for (std::uint32_t i = 0; i < count; ++i) den = den * (TruncatedSeries::one(space) - mono(space, {{t, 1}, {q, i}}));
  return invert_unit(den);
}

std::vector<std::string> var_names(const SeriesSpace& space) {
  std::vector<std::string> out;
  for (auto v : space.vars()) out.push_back(to_string(v));
  return out;
}

}  // namespace

std::string to_string(Stat s) { return kStatNames[static_cast<std::size_t>(s)]; }

Stat stat_from_string(const std::string& s) {
  for (std::size_t k = 0; k < kStatNames.size(); ++k)
    if (s == kStatNames[k]) return static_cast<Stat>(k);
  throw DomainError("unknown statistic '" + s + "'");
}

std::uint32_t max_len(std::uint32_t r, std::uint32_t n) {
  std::uint32_t bound = n * (n - (n > 0 ? 1 : 0)) / 2;
  if (r > 1) bound += n * (n + 1) / 2 + n * (r - 2);
  return bound;
}

TruncatedSeries dist_table(std::uint32_t r, std::uint32_t n, const OrderSpec& order,
                           const std::vector<StatBinding>& bindings, const SeriesSpace& space, unsigned threads) {
  const auto total = group_size(r, n);
  threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(total, 1)));

  std::vector<std::size_t> slot;
  bool need_inverse = false;
  for (const auto& b : bindings) {
    slot.push_back(space.require(b.var));
    need_inverse = need_inverse || is_inverse_stat(b.stat);
  }

  using Counts = std::map<Exponents, std::uint64_t>;
  std::vector<Counts> partial(threads);
  std::vector<std::exception_ptr> errors(threads);

  auto work = [&](unsigned part) {
    try {
      GroupCursor cursor(r, n, total * part / threads, total * (part + 1) / threads);
      while (auto g = cursor.next()) {
        const auto d = des_set(order, *g);
        std::optional<ColoredPermutation> gi;
        std::vector<std::uint32_t> di;
        if (need_inverse) {
          gi = inverse(*g);
          di = des_set(order, *gi);
        }
        Exponents e(space.size(), 0);
        for (std::size_t k = 0; k < bindings.size(); ++k) {
          std::uint32_t value = 0;
          switch (bindings[k].stat) {
            case Stat::des: value = static_cast<std::uint32_t>(d.size()); break;
            case Stat::maj: value = std::accumulate(d.begin(), d.end(), 0u); break;
            case Stat::inv: value = inv(order, *g); break;
            case Stat::len: value = len(order, *g); break;
            case Stat::col: value = col(*g); break;
            case Stat::des_inv: value = static_cast<std::uint32_t>(di.size()); break;
            case Stat::maj_inv: value = std::accumulate(di.begin(), di.end(), 0u); break;
            case Stat::col_inv: value = col(*gi); break;
          }
          e[slot[k]] += value;
        }
        ++partial[part][e];
      }
    } catch (...) {
      errors[part] = std::current_exception();
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned part = 0; part < threads; ++part) pool.emplace_back(work, part);
    for (auto& t : pool) t.join();
  }
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);

  TruncatedSeries out(space);
  for (const auto& counts : partial)
    for (const auto& [e, c] : counts) out.add_term(e, Integer(c));
  return out;
}

// ---------------------------------------------------------------------------

nlohmann::json VerificationReport::to_json(bool include_timing) const {
  nlohmann::json out;
  out["identity"] = identity;
  out["params"] = params;
  out["outcome"] = pass ? "pass" : "fail";
  out["details"] = details;
  if (witness) {
    out["witness"] = {{"vars", witness->vars},
                      {"exp", witness->exponents},
                      {"lhs", witness->lhs.str()},
                      {"rhs", witness->rhs.str()},
                      {"context", witness->context}};
  }
  if (include_timing) out["wall_ms"] = wall_ms;
  return out;
}

bool compare_into(VerificationReport& report, const TruncatedSeries& lhs, const TruncatedSeries& rhs,
                  const nlohmann::json& context) {
  const auto m = first_mismatch(lhs, rhs);
  if (!m) return true;
  if (report.pass) {
    report.pass = false;
    report.witness = Witness{var_names(lhs.space()), m->exponents, m->lhs, m->rhs, context};
  }
  return false;
}

nlohmann::json describe_order(const OrderSpec& order) {
  nlohmann::json out{{"name", order.name()},
                     {"r", order.r()},
                     {"n", order.n()},
                     {"positive_dominant", is_positive_dominant(order)}};
  if (order.kind() == OrderKind::Custom) out["ascending"] = format_entries(order.ascending());
  return out;
}

// --- classical ---------------------------------------------------------------

Sides carlitz_sides(std::uint32_t n, std::uint32_t t_cap, std::uint32_t q_cap) {
  const SeriesSpace space{{Variable::t, t_cap}, {Variable::q, q_cap}};
  TruncatedSeries num(space);
  for_each_plain(n, [&](const PlainStats& s) { num += mono(space, {{Variable::t, s.des}, {Variable::q, s.maj}}); });
  auto lhs = num * inverse_denominator(space, Variable::t, Variable::q, n + 1);

  TruncatedSeries rhs(space);
  for (std::uint32_t k = 0; k <= t_cap; ++k) {
    auto term = mono(space, {{Variable::t, k}});
    const auto base = q_number(space, k + 1, Variable::q);
    for (std::uint32_t i = 0; i < n; ++i) term = term * base;
    rhs += term;
  }
  return {std::move(lhs), std::move(rhs)};
}

VerificationReport verify_carlitz(std::uint32_t n_max, std::uint32_t t_cap, std::uint32_t q_cap) {
  const auto start = Clock::now();
  VerificationReport report;
  report.identity = "carlitz";
  report.params = {{"n_max", n_max}, {"t_cap", t_cap}, {"q_cap", q_cap}};
  for (std::uint32_t n = 0; n <= n_max; ++n) {
    const auto sides = carlitz_sides(n, t_cap, q_cap);
    compare_into(report, sides.lhs, sides.rhs, {{"n", n}});
  }
  report.details["checked_n"] = n_max + 1;
  report.wall_ms = elapsed_ms(start);
  return report;
}

Sides gg1_sides(std::uint32_t n_cap, std::uint32_t t_cap) {
  const SeriesSpace space{{Variable::t, t_cap},
                          {Variable::q, n_cap * t_cap + n_cap * (n_cap - (n_cap > 0)) / 2},
                          {Variable::p, max_len(1, n_cap)},
                          {Variable::u, n_cap}};
  TruncatedSeries lhs(space);
  for (std::uint32_t n = 0; n <= n_cap; ++n) {
    TruncatedSeries num(space);
    for_each_plain(n, [&](const PlainStats& s) {
      num += mono(space, {{Variable::t, s.des}, {Variable::q, s.maj}, {Variable::p, s.inv}});
    });
    lhs += mono(space, {{Variable::u, n}}) * num * inverse_denominator(space, Variable::t, Variable::q, n + 1) *
           invert_unit(q_factorial(space, n, Variable::p));
  }

  const auto e = exp_series(space, Variable::u, Variable::p);
  TruncatedSeries rhs(space);
  for (std::uint32_t k = 0; k <= t_cap; ++k) {
    auto term = mono(space, {{Variable::t, k}});
    for (std::uint32_t j = 0; j <= k; ++j) term = term * substitute_scaled(e, Variable::u, {{Variable::q, j}});
    rhs += term;
  }
  return {std::move(lhs), std::move(rhs)};
}

VerificationReport verify_gg1(std::uint32_t n_cap, std::uint32_t t_cap) {
  const auto start = Clock::now();
  VerificationReport report;
  report.identity = "gg1";
  const auto sides = gg1_sides(n_cap, t_cap);
  report.params = {{"n_cap", n_cap}, {"t_cap", t_cap}, {"caps", sides.lhs.space().caps()}};
  compare_into(report, sides.lhs, sides.rhs);
  report.details["lhs_terms"] = sides.lhs.terms().size();
  report.wall_ms = elapsed_ms(start);
  return report;
}

std::vector<Cell> gg2_cells(std::uint32_t n, std::uint32_t k_cap) {
  const SeriesSpace space{
      {Variable::t1, k_cap}, {Variable::t2, k_cap}, {Variable::q1, n * k_cap}, {Variable::q2, n * k_cap}};
  TruncatedSeries num(space);
  for_each_plain(n, [&](const PlainStats& s) {
    num += mono(space, {{Variable::t1, s.des}, {Variable::q1, s.maj}, {Variable::t2, s.ides}, {Variable::q2, s.imaj}});
  });
  const auto lhs = num * inverse_denominator(space, Variable::t1, Variable::q1, n + 1) *
                   inverse_denominator(space, Variable::t2, Variable::q2, n + 1);

  const auto cell_space = space.without(Variable::t1).without(Variable::t2);
  std::vector<Cell> cells;
  for (std::uint32_t k1 = 0; k1 <= k_cap; ++k1)
    for (std::uint32_t k2 = 0; k2 <= k_cap; ++k2) {
      std::vector<TruncatedSeries> monomials;
      for (std::uint32_t i = 0; i <= k1; ++i)
        for (std::uint32_t j = 0; j <= k2; ++j) monomials.push_back(mono(cell_space, {{Variable::q1, i}, {Variable::q2, j}}));
      cells.push_back({k1, k2, coefficient_of(coefficient_of(lhs, Variable::t1, k1), Variable::t2, k2),
                       geometric_u_coefficient(cell_space, monomials, n)});
    }
  return cells;
}

VerificationReport verify_gg2(std::uint32_t n, std::uint32_t k_cap) {
  const auto start = Clock::now();
  VerificationReport report;
  report.identity = "gg2";
  report.params = {{"n", n}, {"k_cap", k_cap}};
  std::size_t failing = 0;
  const auto cells = gg2_cells(n, k_cap);
  for (const auto& c : cells)
    if (!compare_into(report, c.lhs, c.rhs, {{"k1", c.k1}, {"k2", c.k2}})) ++failing;
  report.details = {{"cells", cells.size()}, {"failing_cells", failing}};
  report.wall_ms = elapsed_ms(start);
  return report;
}

// --- colored -----------------------------------------------------------------

Sides fiber_sides(const OrderSpec& order, const ColoredPermutation& eta, std::uint32_t max_f, std::uint32_t t_cap) {
  if (!is_positive_dominant(order)) throw DomainError("fiber identity needs a positive-dominant order");
  if (t_cap > max_f) throw DomainError("fiber identity: t_cap must not exceed max_f");
  const auto n = eta.n();
  const SeriesSpace space{{Variable::t, t_cap}, {Variable::q, n * t_cap}};

  TruncatedSeries lhs(space);
  for (const auto& f : enumerate_sequences(eta.r(), n, max_f)) {
    if (!(gamma_of(order, f) == eta)) continue;
    const auto m = seq_max(f);
    lhs.add_term({m, static_cast<std::uint32_t>(n * m - seq_weight(f))}, 1);
  }
  const auto rhs = mono(space, {{Variable::t, des(order, eta)}, {Variable::q, maj(order, eta)}}) *
                   inverse_denominator(space, Variable::t, Variable::q, n);
  return {std::move(lhs), rhs};
}

VerificationReport verify_fiber_identity(const OrderSpec& order, const ColoredPermutation& eta, std::uint32_t max_f,
                                         std::uint32_t t_cap) {
  const auto start = Clock::now();
  VerificationReport report;
  report.identity = "fiber";
  report.params = {{"order", describe_order(order)}, {"eta", format(eta)}, {"max_f", max_f}, {"t_cap", t_cap}};
  const auto sides = fiber_sides(order, eta, max_f, t_cap);
  compare_into(report, sides.lhs, sides.rhs);
  report.wall_ms = elapsed_ms(start);
  return report;
}

Sides lemma43_sides(std::uint32_t r, const Composition& comp, const OrderSpec& order) {
  const auto n = comp.total();
  const SeriesSpace space{{Variable::p, max_len(r, n)}, {Variable::a, n * (r - 1)}};

  TruncatedSeries lhs(space);
  for (const auto& f : enumerate_by_composition(r, comp))
    lhs.add_term({len(order, gamma_of(order, f)), seq_col(f)}, 1);

  auto rhs = q_multinomial(space, {comp.parts().begin(), comp.parts().end()}, Variable::p);
  const auto n0 = comp.size() > 0 ? comp.part(0) : 0;
  for (std::uint32_t i = n0; i < n; ++i) {
    auto factor = TruncatedSeries::one(space);
    for (std::uint32_t j = 1; j < r; ++j) factor += mono(space, {{Variable::a, j}, {Variable::p, j + i}});
    rhs = rhs * factor;
  }
  return {std::move(lhs), std::move(rhs)};
}

VerificationReport verify_lemma43(std::uint32_t r, const Composition& comp, const OrderSpec& order) {
  const auto start = Clock::now();
  VerificationReport report;
  report.identity = "lemma43";
  report.params = {{"r", r},
                   {"composition", std::vector<std::uint32_t>(comp.parts().begin(), comp.parts().end())},
                   {"order", describe_order(order)}};
  const auto sides = lemma43_sides(r, comp, order);
  compare_into(report, sides.lhs, sides.rhs);
  report.wall_ms = elapsed_ms(start);
  return report;
}

VerificationReport verify_lemma43_all(std::uint32_t r, std::uint32_t n, const OrderSpec& order) {
  const auto start = Clock::now();
  VerificationReport report;
  report.identity = "lemma43";
  report.params = {{"r", r}, {"n", n}, {"order", describe_order(order)}};
  std::size_t checked = 0, failing = 0;
  for (const auto& comp : enumerate_compositions(n)) {
    ++checked;
    const auto sides = lemma43_sides(r, comp, order);
    const std::vector<std::uint32_t> parts(comp.parts().begin(), comp.parts().end());
    if (!compare_into(report, sides.lhs, sides.rhs, {{"composition", parts}})) ++failing;
  }
  report.details = {{"compositions", checked}, {"failing", failing}};
  report.wall_ms = elapsed_ms(start);
  return report;
}

Sides four_variate_sides(std::uint32_t r, std::uint32_t n_cap, std::uint32_t t_cap, const OrderSpec& order,
                         unsigned threads) {
  if (!is_positive_dominant(order)) throw DomainError("four-variate identity needs a positive-dominant order");
  const SeriesSpace space{{Variable::t, t_cap},
                          {Variable::q, n_cap * t_cap + n_cap * (n_cap - (n_cap > 0)) / 2},
                          {Variable::p, max_len(r, n_cap)},
                          {Variable::a, n_cap * (r - 1)},
                          {Variable::u, n_cap}};
  const std::vector<StatBinding> bindings{
      {Stat::des, Variable::t}, {Stat::maj, Variable::q}, {Stat::len, Variable::p}, {Stat::col, Variable::a}};

  TruncatedSeries lhs(space);
  for (std::uint32_t n = 0; n <= n_cap; ++n) {
    // The order lives on C(r, n_cap); every smaller window is a restriction.
    const auto num = dist_table(r, n, order, bindings, space, threads);
    lhs += mono(space, {{Variable::u, n}}) * num * inverse_denominator(space, Variable::t, Variable::q, n + 1) *
           colored_exponential_term(space, n, r);
  }

  const auto plain = exp_series(space, Variable::u, Variable::p);
  const auto colored = exp_series(space, Variable::u, Variable::p, r);
  TruncatedSeries rhs(space);
  for (std::uint32_t k = 0; k <= t_cap; ++k) {
    auto term = mono(space, {{Variable::t, k}});
    for (std::uint32_t j = 0; j < k; ++j) term = term * substitute_scaled(plain, Variable::u, {{Variable::q, j}});
    term = term * substitute_scaled(colored, Variable::u, {{Variable::q, k}});
    rhs += term;
  }
  return {std::move(lhs), std::move(rhs)};
}

VerificationReport verify_four_variate(std::uint32_t r, std::uint32_t n_cap, std::uint32_t t_cap,
                                       const OrderSpec& order, unsigned threads) {
  const auto start = Clock::now();
  VerificationReport report;
  report.identity = "four";
  const auto sides = four_variate_sides(r, n_cap, t_cap, order, threads);
  report.params = {{"r", r},
                   {"n_cap", n_cap},
                   {"t_cap", t_cap},
                   {"order", describe_order(order)},
                   {"caps", sides.lhs.space().caps()}};
  compare_into(report, sides.lhs, sides.rhs);
  report.details["lhs_terms"] = sides.lhs.terms().size();
  report.wall_ms = elapsed_ms(start);
  return report;
}

std::vector<Cell> six_variate_cells(std::uint32_t r, std::uint32_t n, std::uint32_t k1_cap, std::uint32_t k2_cap,
                                    const SixVariateOptions& options) {
  const auto order = options.order.value_or(OrderSpec::ar(Ambient{r, n}));
  if (order.kind() != OrderKind::AR && !options.exploratory)
    throw DomainError("the six-variate identity is stated for A-R; pass exploratory to try " + order.name());
  const auto colors = n * (r - 1);
  const SeriesSpace space{{Variable::t1, k1_cap}, {Variable::t2, k2_cap}, {Variable::q1, n * k1_cap},
                          {Variable::q2, n * k2_cap}, {Variable::a, colors},        {Variable::b, colors}};
  const std::vector<StatBinding> bindings{{Stat::des, Variable::t1},     {Stat::maj, Variable::q1},
                                          {Stat::des_inv, Variable::t2}, {Stat::maj_inv, Variable::q2},
                                          {Stat::col, Variable::a},      {Stat::col_inv, Variable::b}};
  const auto lhs = dist_table(r, n, order, bindings, space, options.threads) *
                   inverse_denominator(space, Variable::t1, Variable::q1, n + 1) *
                   inverse_denominator(space, Variable::t2, Variable::q2, n + 1);

  const auto cell_space = space.without(Variable::t1).without(Variable::t2);
  std::vector<Cell> cells;
  for (std::uint32_t k1 = 0; k1 <= k1_cap; ++k1)
    for (std::uint32_t k2 = 0; k2 <= k2_cap; ++k2)
      cells.push_back({k1, k2, coefficient_of(coefficient_of(lhs, Variable::t1, k1), Variable::t2, k2),
                       extract_u_coefficient_laurent(geometric_factors(k1, k2, r, options.columns), n, k1, k2, r,
                                                     cell_space)});
  return cells;
}

VerificationReport verify_six_variate(std::uint32_t r, std::uint32_t n, std::uint32_t k1_cap, std::uint32_t k2_cap,
                                      const SixVariateOptions& options) {
  const auto start = Clock::now();
  VerificationReport report;
  report.identity = "six";
  const auto order = options.order.value_or(OrderSpec::ar(Ambient{r, n}));
  report.params = {{"r", r},
                   {"n", n},
                   {"k1_cap", k1_cap},
                   {"k2_cap", k2_cap},
                   {"columns", to_string(options.columns)},
                   {"order", describe_order(order)},
                   {"exploratory", options.exploratory}};
  std::size_t failing = 0;
  const auto cells = six_variate_cells(r, n, k1_cap, k2_cap, options);
  for (const auto& c : cells)
    if (!compare_into(report, c.lhs, c.rhs, {{"k1", c.k1}, {"k2", c.k2}})) ++failing;
  report.details = {{"cells", cells.size()}, {"failing_cells", failing}};
  report.wall_ms = elapsed_ms(start);
  return report;
}

ColumnSet columns_for(BipartiteRule rule) {
  return rule == BipartiteRule::anchored ? ColumnSet::anchored : ColumnSet::colored_entries;
}

Sides bipartite_gf_sides(std::uint32_t r, std::uint32_t n, std::uint32_t k1, std::uint32_t k2, BipartiteRule rule) {
  const SeriesSpace space{{Variable::x, n * k1}, {Variable::y, n * k2}, {Variable::z, n * (r - 1)}};
  TruncatedSeries lhs(space);
  for (const auto& b : enumerate_bipartite(r, n, k1, k2, rule))
    lhs.add_term({static_cast<std::uint32_t>(b.top.weight()), static_cast<std::uint32_t>(seq_weight(b.bottom)),
                  seq_col(b.bottom)},
                 1);
  std::vector<TruncatedSeries> monomials;
  for (const auto& f : geometric_factors(k1, k2, r, columns_for(rule)))
    monomials.push_back(mono(space, {{Variable::x, f.i}, {Variable::y, f.j}, {Variable::z, f.m}}));
  return {std::move(lhs), geometric_u_coefficient(space, monomials, n)};
}

Sides bipartite_regrouped_sides(std::uint32_t r, std::uint32_t n, std::uint32_t k1, std::uint32_t k2,
                                BipartiteRule rule) {
  const auto colors = n * (r - 1);
  const SeriesSpace space{{Variable::q1, n * k1}, {Variable::q2, n * k2}, {Variable::a, colors}, {Variable::b, colors}};
  TruncatedSeries lhs(space);
  for (const auto& b : enumerate_bipartite(r, n, k1, k2, rule)) {
    const auto c = seq_col(b.bottom);
    lhs.add_term({static_cast<std::uint32_t>(n * k1 - b.top.weight()),
                  static_cast<std::uint32_t>(n * k2 - seq_weight(b.bottom)), c, c},
                 1);
  }
  return {std::move(lhs),
          extract_u_coefficient_laurent(geometric_factors(k1, k2, r, columns_for(rule)), n, k1, k2, r, space)};
}

VerificationReport verify_bipartite_gf(std::uint32_t r, std::uint32_t n, std::uint32_t k1, std::uint32_t k2,
                                       BipartiteRule rule) {
  const auto start = Clock::now();
  VerificationReport report;
  report.identity = "bipartite-gf";
  report.params = {{"r", r},
                   {"n", n},
                   {"k1", k1},
                   {"k2", k2},
                   {"rule", to_string(rule)},
                   {"columns", to_string(columns_for(rule))}};
  const auto direct = bipartite_gf_sides(r, n, k1, k2, rule);
  compare_into(report, direct.lhs, direct.rhs, {{"form", "direct"}});
  const auto regrouped = bipartite_regrouped_sides(r, n, k1, k2, rule);
  compare_into(report, regrouped.lhs, regrouped.rhs, {{"form", "regrouped"}});
  Integer members = 0;
  for (const auto& [e, c] : direct.lhs.terms()) members += c;
  report.details["members"] = members.str();
  report.wall_ms = elapsed_ms(start);
  return report;
}

}  // namespace wreath
