#include "wreath/sequences.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wreath {

ColoredSequence::ColoredSequence(std::uint32_t r, std::vector<ColoredEntry> entries)
    : r_(r), entries_(std::move(entries)) {
  if (r_ == 0) throw DomainError("r must be positive");
  for (const auto& e : entries_) check_entry(e, r_);
}

ColoredSequence parse_sequence(const std::string& text, std::optional<std::uint32_t> r) {
  auto entries = parse_entries(text);
  std::uint32_t max_color = 0;
  for (const auto& e : entries) max_color = std::max(max_color, e.color);
  return {r.value_or(max_color + 1), std::move(entries)};
}

std::string format(const ColoredSequence& f) { return format_entries(f.entries()); }

Partition::Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
  if (!std::is_sorted(parts_.begin(), parts_.end())) {
    std::ostringstream msg;
    msg << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) msg << (i ? "," : "") << parts_[i];
    msg << ") is not weakly increasing";
    throw DomainError(msg.str());
  }
}

std::uint64_t Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
}

std::string format(const Partition& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.parts().size(); ++i) os << (i ? " " : "") << p.parts()[i];
  return os.str();
}

std::uint32_t seq_max(const ColoredSequence& f) {
  std::uint32_t m = 0;
  for (const auto& e : f.entries()) m = std::max(m, e.value);
  return m;
}

std::uint64_t seq_weight(const ColoredSequence& f) {
  std::uint64_t s = 0;
  for (const auto& e : f.entries()) s += e.value;
  return s;
}

std::uint32_t seq_col(const ColoredSequence& f) {
  std::uint32_t s = 0;
  for (const auto& e : f.entries()) s += e.color;
  return s;
}

ColoredPermutation gamma_of(const OrderSpec& order, const ColoredSequence& f) {
  struct Item {
    std::uint32_t value;
    ColoredEntry entry;
  };
  std::vector<Item> items;
  items.reserve(f.n());
  for (std::uint32_t i = 1; i <= f.n(); ++i) items.push_back({f.at(i).value, ColoredEntry{i, f.at(i).color}});
  std::sort(items.begin(), items.end(), [&](const Item& a, const Item& b) {
    if (a.value != b.value) return a.value < b.value;
    return order.less(a.entry, b.entry);
  });
  std::vector<ColoredEntry> window;
  window.reserve(items.size());
  for (const auto& it : items) window.push_back(it.entry);
  return {f.r(), std::move(window)};
}

Partition lambda_of(const OrderSpec& order, const ColoredSequence& f) {
  if (!is_positive_dominant(order))
    throw DomainError("lambda_of requires a positive-dominant order");
  const auto g = gamma_of(order, f);
  const auto descents = des_set(order, g);
  std::vector<std::uint32_t> parts(f.n());
  std::size_t seen = 0;
  for (std::uint32_t i = 1; i <= f.n(); ++i) {
    while (seen < descents.size() && descents[seen] <= i - 1) ++seen;
    parts[i - 1] = f.at(g.pi(i)).value - static_cast<std::uint32_t>(seen);
  }
  return Partition(std::move(parts));
}

Arrangement arrange(const Partition& lambda, const ColoredPermutation& g) {
  if (lambda.n() != g.n()) throw DomainError("arrange: partition and permutation lengths differ");
  std::vector<ColoredEntry> entries(g.n());
  std::vector<std::uint32_t> dropped;
  for (std::uint32_t i = 1; i <= g.n(); ++i) {
    ColoredEntry e{lambda.at(i), g.color(i)};
    if (e.value == 0 && e.color != 0) {
      dropped.push_back(g.pi(i));
      e.color = 0;
    }
    entries[g.pi(i) - 1] = e;
  }
  std::sort(dropped.begin(), dropped.end());
  return {ColoredSequence(g.r(), std::move(entries)), std::move(dropped)};
}

bool is_compatible(const OrderSpec& order, const Partition& lambda, const ColoredPermutation& g) {
  if (lambda.n() != g.n()) throw DomainError("is_compatible: partition and permutation lengths differ");
  for (auto i : des_set(order, g))
    if (lambda.at(i) >= lambda.at(i + 1)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration

std::uint64_t group_size(std::uint32_t r, std::uint32_t n) {
  std::uint64_t size = 1;
  for (std::uint32_t i = 1; i <= n; ++i) size *= std::uint64_t{r} * i;
  return size;
}

ColoredPermutation unrank_group(std::uint32_t r, std::uint32_t n, std::uint64_t index) {
  std::uint64_t color_count = 1;
  for (std::uint32_t i = 0; i < n; ++i) color_count *= r;
  auto perm_index = index / color_count;
  auto color_index = index % color_count;

  std::vector<std::uint64_t> factorial(n + 1, 1);
  for (std::uint32_t i = 1; i <= n; ++i) factorial[i] = factorial[i - 1] * i;
  std::vector<std::uint32_t> pool(n);
  std::iota(pool.begin(), pool.end(), 1u);

  std::vector<ColoredEntry> window(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto f = factorial[n - 1 - i];
    const auto digit = perm_index / f;
    perm_index %= f;
    window[i].value = pool[digit];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  for (std::uint32_t i = n; i-- > 0;) {
    window[i].color = static_cast<std::uint32_t>(color_index % r);
    color_index /= r;
  }
  return {r, std::move(window)};
}

GroupCursor::GroupCursor(std::uint32_t r, std::uint32_t n, std::uint64_t first, std::optional<std::uint64_t> last)
    : r_(r), n_(n), index_(first), end_(std::min(last.value_or(group_size(r, n)), group_size(r, n))) {
  if (r == 0) throw DomainError("r must be positive");
}

std::optional<ColoredPermutation> GroupCursor::next() {
  if (index_ >= end_) return std::nullopt;
  return unrank_group(r_, n_, index_++);
}

SequenceCursor::SequenceCursor(std::uint32_t r, std::uint32_t n, std::uint32_t max_value)
    : r_(r), max_value_(max_value), current_(n) {
  if (r == 0) throw DomainError("r must be positive");
}

std::optional<ColoredSequence> SequenceCursor::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return ColoredSequence(r_, current_);
  }
  for (std::size_t i = current_.size(); i-- > 0;) {
    auto& e = current_[i];
    if (e.value > 0 && e.color + 1 < r_) {
      ++e.color;
      return ColoredSequence(r_, current_);
    }
    if (e.value < max_value_) {
      e = ColoredEntry{e.value + 1, 0};
      return ColoredSequence(r_, current_);
    }
    e = ColoredEntry{};
  }
  done_ = true;
  return std::nullopt;
}

CompositionSequenceCursor::CompositionSequenceCursor(std::uint32_t r, Composition comp)
    : r_(r), comp_(std::move(comp)) {
  if (r == 0) throw DomainError("r must be positive");
  remaining_.assign(comp_.parts().begin(), comp_.parts().end());
  current_.resize(comp_.total());
  fill_from(0);
}

void CompositionSequenceCursor::fill_from(std::size_t pos) {
  std::uint32_t v = 0;
  for (std::size_t i = pos; i < current_.size(); ++i) {
    while (remaining_[v] == 0) ++v;
    --remaining_[v];
    current_[i] = ColoredEntry{v, 0};
  }
}

bool CompositionSequenceCursor::advance() {
  for (std::size_t i = current_.size(); i-- > 0;) {
    auto& e = current_[i];
    ++remaining_[e.value];
    if (e.value > 0 && e.color + 1 < r_) {
      --remaining_[e.value];
      ++e.color;
      fill_from(i + 1);
      return true;
    }
    for (std::uint32_t v = e.value + 1; v < remaining_.size(); ++v) {
      if (remaining_[v] > 0) {
        --remaining_[v];
        e = ColoredEntry{v, 0};
        fill_from(i + 1);
        return true;
      }
    }
  }
  return false;
}

std::optional<ColoredSequence> CompositionSequenceCursor::next() {
  if (done_) return std::nullopt;
  if (started_ && !advance()) {
    done_ = true;
    return std::nullopt;
  }
  started_ = true;
  return ColoredSequence(r_, current_);
}

PartitionCursor::PartitionCursor(std::uint32_t n, std::uint32_t max_part) : max_part_(max_part), current_(n, 0) {}

std::optional<Partition> PartitionCursor::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return Partition(current_);
  }
  for (std::size_t i = current_.size(); i-- > 0;) {
    if (current_[i] < max_part_) {
      const auto v = current_[i] + 1;
      std::fill(current_.begin() + static_cast<std::ptrdiff_t>(i), current_.end(), v);
      return Partition(current_);
    }
  }
  done_ = true;
  return std::nullopt;
}

CompositionCursor::CompositionCursor(std::uint32_t n) : n_(n) {}

std::optional<Composition> CompositionCursor::next() {
  if (done_) return std::nullopt;
  if (n_ == 0) {
    done_ = true;
    return Composition{};
  }
  if (!started_) {
    started_ = true;
    current_.assign(parts_, 0);
    current_.back() = n_;
    return Composition(current_);
  }
  std::uint32_t prefix = 0;
  std::vector<std::uint32_t> prefix_sums(parts_, 0);
  for (std::size_t i = 0; i < parts_; ++i) {
    prefix += current_[i];
    prefix_sums[i] = prefix;
  }
  for (std::size_t i = parts_ - 1; i-- > 0;) {
    const auto used = prefix_sums[i] + 1;
    if (used < n_) {
      ++current_[i];
      std::fill(current_.begin() + static_cast<std::ptrdiff_t>(i) + 1, current_.end(), 0);
      current_.back() = n_ - used;
      return Composition(current_);
    }
  }
  if (parts_ == std::size_t{n_} + 1) {
    done_ = true;
    return std::nullopt;
  }
  ++parts_;
  current_.assign(parts_, 0);
  current_.back() = n_;
  return Composition(current_);
}

Composition composition_of(const ColoredSequence& f) {
  if (f.n() == 0) return Composition{};
  std::vector<std::uint32_t> parts(seq_max(f) + 1, 0);
  for (const auto& e : f.entries()) ++parts[e.value];
  return Composition(std::move(parts));
}

}  // namespace wreath
