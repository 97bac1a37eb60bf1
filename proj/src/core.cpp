#include "wreath/core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

namespace wreath {

std::ostream& operator<<(std::ostream& os, const ColoredEntry& e) {
  os << e.value;
  if (e.color != 0) os << '^' << e.color;
  return os;
}

void check_entry(const ColoredEntry& e, std::uint32_t r) {
  if (e.value == 0 && e.color != 0) throw DomainError("the zero entry cannot carry a color");
  if (e.color >= r) {
    std::ostringstream msg;
    msg << "color of " << e << " is not below r = " << r;
    throw DomainError(msg.str());
  }
}

std::vector<ColoredEntry> alphabet(Ambient amb) {
  std::vector<ColoredEntry> out;
  out.reserve(std::size_t{amb.n} * amb.r + 1);
  out.emplace_back(0, 0);
  for (std::uint32_t j = 1; j <= amb.n; ++j)
    for (std::uint32_t c = 0; c < amb.r; ++c) out.emplace_back(j, c);
  return out;
}

std::string to_string(OrderKind k) {
  switch (k) {
    case OrderKind::AR: return "ar";
    case OrderKind::BZ: return "bz";
    case OrderKind::ST: return "st";
    case OrderKind::Reiner: return "reiner";
    case OrderKind::Custom: return "custom";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// OrderSpec

OrderSpec OrderSpec::ar(Ambient amb) {
  if (amb.r == 0) throw DomainError("r must be positive");
  return {OrderKind::AR, amb};
}

OrderSpec OrderSpec::bz(Ambient amb) {
  if (amb.r == 0) throw DomainError("r must be positive");
  return {OrderKind::BZ, amb};
}

OrderSpec OrderSpec::st(Ambient amb) {
  if (amb.r == 0) throw DomainError("r must be positive");
  return {OrderKind::ST, amb};
}

OrderSpec OrderSpec::reiner(std::uint32_t n) { return {OrderKind::Reiner, Ambient{2, n}}; }

OrderSpec OrderSpec::custom(Ambient amb, std::vector<ColoredEntry> ascending) {
  if (amb.r == 0) throw DomainError("r must be positive");
  OrderSpec spec{OrderKind::Custom, amb};
  const std::size_t size = std::size_t{amb.n} * amb.r + 1;
  if (ascending.size() != size) {
    std::ostringstream msg;
    msg << "custom order lists " << ascending.size() << " entries, C(" << amb.r << ',' << amb.n
        << ") has " << size;
    throw DomainError(msg.str());
  }
  constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
  spec.rank_.assign(size, unset);
  for (std::uint32_t i = 0; i < ascending.size(); ++i) {
    const auto& e = ascending[i];
    check_entry(e, amb.r);
    if (e.value > amb.n) {
      std::ostringstream msg;
      msg << "custom order entry " << e << " exceeds n = " << amb.n;
      throw DomainError(msg.str());
    }
    auto& slot = spec.rank_[spec.slot(e)];
    if (slot != unset) {
      std::ostringstream msg;
      msg << "custom order repeats entry " << e;
      throw DomainError(msg.str());
    }
    slot = i;
  }
  return spec;
}

std::string OrderSpec::name() const { return to_string(kind_); }

std::size_t OrderSpec::slot(const ColoredEntry& e) const {
  if (e.value == 0) return 0;
  return 1 + std::size_t{e.value - 1} * amb_.r + e.color;
}

std::uint64_t OrderSpec::key(const ColoredEntry& e) const {
  check_entry(e, amb_.r);
  const std::uint64_t v = e.value;
  const std::uint64_t c = e.color;
  const std::uint64_t r = amb_.r;
  const std::uint64_t n = amb_.n;
  if (kind_ == OrderKind::AR) {
    // Color blocks from r-1 down to 1, then the uncolored block; values ascend.
    const std::uint64_t block = c == 0 ? r - 1 : r - 1 - c;
    return (block << 32) | v;
  }
  if (v > n) {
    std::ostringstream msg;
    msg << "entry " << e << " lies outside C(" << r << ',' << n << ") for the " << name() << " order";
    throw DomainError(msg.str());
  }
  switch (kind_) {
    case OrderKind::BZ:
      return c == 0 ? n * r + v : (n - v) * r + (r - 1 - c);
    case OrderKind::ST:
      return c * (n + 1) + v;
    case OrderKind::Reiner:
      if (v == 0) return 0;
      return c == 0 ? n + v : n - v + 1;
    case OrderKind::Custom:
      return rank_[slot(e)];
    case OrderKind::AR:
      break;
  }
  return 0;
}

std::strong_ordering OrderSpec::compare(const ColoredEntry& a, const ColoredEntry& b) const {
  return key(a) <=> key(b);
}

std::uint32_t OrderSpec::position(const ColoredEntry& e) const {
  if (kind_ == OrderKind::Custom) return static_cast<std::uint32_t>(key(e));
  const auto k = key(e);
  std::uint32_t below = 0;
  for (const auto& x : alphabet(amb_))
    if (key(x) < k) ++below;
  return below;
}

std::vector<ColoredEntry> OrderSpec::ascending() const {
  auto all = alphabet(amb_);
  std::sort(all.begin(), all.end(), [this](const auto& a, const auto& b) { return key(a) < key(b); });
  return all;
}

OrderSpec OrderSpec::as_custom() const { return custom(amb_, ascending()); }

std::strong_ordering compare(const OrderSpec& order, const ColoredEntry& a, const ColoredEntry& b) {
  return order.compare(a, b);
}

bool is_positive_dominant(const OrderSpec& order) {
  const auto n = order.n();
  for (std::uint32_t j = 0; j < n; ++j)
    if (!order.less(ColoredEntry{j}, ColoredEntry{j + 1})) return false;
  for (std::uint32_t i = 0; i <= n; ++i)
    for (std::uint32_t j = 1; j <= n; ++j)
      for (std::uint32_t c = 1; c < order.r(); ++c)
        if (!order.greater(ColoredEntry{i}, ColoredEntry{j, c})) return false;
  return true;
}

OrderSpec random_positive_dominant(std::uint32_t r, std::uint32_t n, std::uint64_t seed) {
  if (r == 0 || n == 0) throw DomainError("random_positive_dominant needs r, n >= 1");
  std::vector<ColoredEntry> colored;
  for (std::uint32_t j = 1; j <= n; ++j)
    for (std::uint32_t c = 1; c < r; ++c) colored.emplace_back(j, c);
  // Fisher-Yates driven directly by mt19937_64, whose output is fixed by the
  // standard; std::shuffle is not.
  std::mt19937_64 rng(seed);
  for (std::size_t i = colored.size(); i > 1; --i) std::swap(colored[i - 1], colored[rng() % i]);
  auto ascending = std::move(colored);
  for (std::uint32_t j = 0; j <= n; ++j) ascending.emplace_back(j);
  return OrderSpec::custom(Ambient{r, n}, std::move(ascending));
}

OrderSpec corrupt_positive_dominance(const OrderSpec& order) {
  auto list = order.ascending();
  const auto top_colored = std::find_if(list.rbegin(), list.rend(), [](const auto& e) { return e.colored(); });
  const auto one = std::find(list.begin(), list.end(), ColoredEntry{1});
  if (top_colored == list.rend() || one == list.end())
    throw DomainError("order has no colored entry to swap (r = 1 or n = 0)");
  std::iter_swap(top_colored, one);
  return OrderSpec::custom(order.ambient(), std::move(list));
}

// ---------------------------------------------------------------------------
// ColoredPermutation

ColoredPermutation::ColoredPermutation(std::uint32_t r, std::vector<ColoredEntry> window)
    : r_(r), window_(std::move(window)) {
  if (r_ == 0) throw DomainError("r must be positive");
  std::vector<bool> seen(window_.size() + 1, false);
  for (const auto& e : window_) {
    if (e.value == 0 || e.value > window_.size() || seen[e.value]) {
      std::ostringstream msg;
      msg << "window " << format_entries(window_) << " is not a permutation of [" << window_.size() << ']';
      throw DomainError(msg.str());
    }
    seen[e.value] = true;
    check_entry(e, r_);
  }
}

ColoredPermutation ColoredPermutation::identity(std::uint32_t r, std::uint32_t n) {
  std::vector<ColoredEntry> w(n);
  for (std::uint32_t i = 0; i < n; ++i) w[i] = ColoredEntry{i + 1};
  return {r, std::move(w)};
}

ColoredPermutation inverse(const ColoredPermutation& g) {
  std::vector<ColoredEntry> w(g.n());
  for (std::uint32_t k = 1; k <= g.n(); ++k) {
    const auto e = g.at(k);
    w[e.value - 1] = ColoredEntry{k, e.color};
  }
  return {g.r(), std::move(w)};
}

std::vector<std::uint32_t> des_set(const OrderSpec& order, const ColoredPermutation& g) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t j = 0; j < g.n(); ++j)
    if (order.greater(g.at(j), g.at(j + 1))) out.push_back(j);
  return out;
}

std::uint32_t des(const OrderSpec& order, const ColoredPermutation& g) {
  return static_cast<std::uint32_t>(des_set(order, g).size());
}

std::uint32_t maj(const OrderSpec& order, const ColoredPermutation& g) {
  const auto d = des_set(order, g);
  return std::accumulate(d.begin(), d.end(), std::uint32_t{0});
}

std::uint32_t inv(const OrderSpec& order, const ColoredPermutation& g) {
  std::uint32_t count = 0;
  for (std::uint32_t i = 1; i <= g.n(); ++i)
    for (std::uint32_t j = i + 1; j <= g.n(); ++j)
      if (order.greater(g.at(i), g.at(j))) ++count;
  return count;
}

std::uint32_t len(const OrderSpec& order, const ColoredPermutation& g) {
  std::uint32_t total = inv(order, g);
  for (const auto& e : g.window())
    if (e.colored()) total += e.value + e.color - 1;
  return total;
}

std::uint32_t col(const ColoredPermutation& g) {
  std::uint32_t total = 0;
  for (const auto& e : g.window()) total += e.color;
  return total;
}

namespace {

bool contains(std::span<const ColoredEntry> set, const ColoredEntry& e) {
  return std::find(set.begin(), set.end(), e) != set.end();
}

}  // namespace

std::uint32_t subset_inv(const OrderSpec& order, const ColoredPermutation& g,
                         std::span<const ColoredEntry> subset) {
  std::vector<ColoredEntry> picked;
  for (const auto& e : g.window())
    if (contains(subset, e)) picked.push_back(e);
  std::uint32_t count = 0;
  for (std::size_t i = 0; i < picked.size(); ++i)
    for (std::size_t j = i + 1; j < picked.size(); ++j)
      if (order.greater(picked[i], picked[j])) ++count;
  return count;
}

ColoredPermutation reorder(const ColoredPermutation& g, std::span<const ColoredEntry> subset,
                           const OrderSpec& from, const OrderSpec& to) {
  std::vector<std::uint32_t> positions;
  std::vector<ColoredEntry> entries;
  for (std::uint32_t i = 1; i <= g.n(); ++i) {
    if (contains(subset, g.at(i))) {
      positions.push_back(i);
      entries.push_back(g.at(i));
    }
  }
  for (const auto& e : subset) {
    if (!contains(entries, e)) {
      std::ostringstream msg;
      msg << "reorder: entry " << e << " does not occur in " << format(g);
      throw DomainError(msg.str());
    }
  }
  auto by_to = entries;
  std::sort(by_to.begin(), by_to.end(), [&](const auto& a, const auto& b) { return to.less(a, b); });

  std::vector<ColoredEntry> w(g.window().begin(), g.window().end());
  for (std::size_t k = 0; k < positions.size(); ++k) {
    const auto old_rank = rank(from, entries, entries[k]);
    w[positions[k] - 1] = by_to[old_rank - 1];
  }
  return {g.r(), std::move(w)};
}

std::uint32_t rank(const OrderSpec& order, std::span<const ColoredEntry> set, const ColoredEntry& a) {
  if (!contains(set, a)) {
    std::ostringstream msg;
    msg << "rank: " << a << " is not in the set";
    throw DomainError(msg.str());
  }
  std::uint32_t below = 0;
  for (const auto& s : set)
    if (order.less(s, a)) ++below;
  return below + 1;
}

// ---------------------------------------------------------------------------
// Composition

Composition::Composition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
  if (!parts_.empty() && parts_.back() == 0)
    throw DomainError("composition must end in a positive part");
}

std::uint32_t Composition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0u); }

// ---------------------------------------------------------------------------
// Window notation

namespace {

std::uint32_t parse_number(std::string_view s, const std::string& token) {
  std::uint32_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || ptr != end) throw DomainError("malformed token '" + token + "'");
  return v;
}

}  // namespace

std::vector<ColoredEntry> parse_entries(const std::string& text) {
  std::vector<ColoredEntry> out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    const auto caret = token.find('^');
    const std::string_view tv(token);
    if (caret == std::string::npos) {
      out.emplace_back(parse_number(tv, token), 0);
      continue;
    }
    const auto v = parse_number(tv.substr(0, caret), token);
    const auto c = parse_number(tv.substr(caret + 1), token);
    if (v == 0) throw DomainError("the zero entry cannot carry a color: '" + token + "'");
    out.emplace_back(v, c);
  }
  return out;
}

std::string format_entries(std::span<const ColoredEntry> entries) {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ' ';
    os << entries[i];
  }
  return os.str();
}

std::string format(const ColoredPermutation& g) { return format_entries(g.window()); }

ColoredPermutation parse_permutation(const std::string& text, std::optional<std::uint32_t> r) {
  auto entries = parse_entries(text);
  std::uint32_t max_color = 0;
  for (const auto& e : entries) max_color = std::max(max_color, e.color);
  return {r.value_or(max_color + 1), std::move(entries)};
}

}  // namespace wreath
