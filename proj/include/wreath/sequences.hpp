#pragma once

// Colored integer sequences f = (f_1^{c_1}, …, f_n^{c_n}), partitions, the
// sequence → (permutation, partition) extraction, and exhaustive enumerators.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wreath/core.hpp"
#include "wreath/stream.hpp"

namespace wreath {

/// An element of N_0^{r,n}: unbounded values, colors below r, zeros uncolored.
class ColoredSequence {
public:
  ColoredSequence() = default;
  ColoredSequence(std::uint32_t r, std::vector<ColoredEntry> entries);

  [[nodiscard]] std::uint32_t r() const { return r_; }
  [[nodiscard]] std::uint32_t n() const { return static_cast<std::uint32_t>(entries_.size()); }
  [[nodiscard]] std::span<const ColoredEntry> entries() const { return entries_; }
  /// 1-based access, matching f_i.
  [[nodiscard]] const ColoredEntry& at(std::uint32_t i) const { return entries_[i - 1]; }

  friend bool operator==(const ColoredSequence& a, const ColoredSequence& b) {
    return a.entries_ == b.entries_;
  }
  friend auto operator<=>(const ColoredSequence& a, const ColoredSequence& b) {
    return a.entries_ <=> b.entries_;
  }

private:
  std::uint32_t r_ = 1;
  std::vector<ColoredEntry> entries_;
};

ColoredSequence parse_sequence(const std::string& text, std::optional<std::uint32_t> r = {});
std::string format(const ColoredSequence& f);

/// 0 ≤ λ_1 ≤ λ_2 ≤ … ≤ λ_n.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<std::uint32_t> parts);

  [[nodiscard]] std::span<const std::uint32_t> parts() const { return parts_; }
  [[nodiscard]] std::uint32_t n() const { return static_cast<std::uint32_t>(parts_.size()); }
  /// 1-based; at(0) is the conventional λ_0 = 0.
  [[nodiscard]] std::uint32_t at(std::uint32_t i) const { return i == 0 ? 0 : parts_[i - 1]; }
  [[nodiscard]] std::uint32_t max() const { return parts_.empty() ? 0 : parts_.back(); }
  [[nodiscard]] std::uint64_t weight() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  std::vector<std::uint32_t> parts_;
};

std::string format(const Partition& p);

std::uint32_t seq_max(const ColoredSequence& f);
std::uint64_t seq_weight(const ColoredSequence& f);
std::uint32_t seq_col(const ColoredSequence& f);

/// γ_O(f): positions grouped by value (values ascending), each group listed
/// ascending under `order` as entries i^{c_i}.
ColoredPermutation gamma_of(const OrderSpec& order, const ColoredSequence& f);

/// λ_i = f_{π(i)} - #{j in Des(γ_O(f)) : j ≤ i-1}. Requires a positive-dominant order.
Partition lambda_of(const OrderSpec& order, const ColoredSequence& f);

struct Arrangement {
  ColoredSequence sequence;
  /// Positions (1-based) where a zero value arrived with a positive color that was dropped.
  std::vector<std::uint32_t> dropped_colors;
};

/// λ^γ: the sequence with value λ_i, color c_i, at position π(i).
Arrangement arrange(const Partition& lambda, const ColoredPermutation& g);

/// λ_i < λ_{i+1} for every i in Des_O(γ), with λ_0 = 0.
bool is_compatible(const OrderSpec& order, const Partition& lambda, const ColoredPermutation& g);

// ---------------------------------------------------------------------------
// Enumeration. Every stream is exhaustive, duplicate-free and deterministic.

/// |Z_r ≀ S_n| = r^n · n!
std::uint64_t group_size(std::uint32_t r, std::uint32_t n);

/// The index-th colored permutation: permutations in lexicographic order,
/// colors varying fastest as base-r digits (c_1 most significant).
ColoredPermutation unrank_group(std::uint32_t r, std::uint32_t n, std::uint64_t index);

class GroupCursor {
public:
  using value_type = ColoredPermutation;
  GroupCursor(std::uint32_t r, std::uint32_t n, std::uint64_t first = 0,
              std::optional<std::uint64_t> last = {});
  std::optional<ColoredPermutation> next();

private:
  std::uint32_t r_, n_;
  std::uint64_t index_, end_;
};

/// Sequences of length n with values ≤ max_value, lexicographic on (value, color) per position.
class SequenceCursor {
public:
  using value_type = ColoredSequence;
  SequenceCursor(std::uint32_t r, std::uint32_t n, std::uint32_t max_value);
  std::optional<ColoredSequence> next();

private:
  std::uint32_t r_, max_value_;
  std::vector<ColoredEntry> current_;
  bool started_ = false, done_ = false;
};

/// N_0^{r,n}(comp): value j occurs exactly comp_j times; positive values take any color.
class CompositionSequenceCursor {
public:
  using value_type = ColoredSequence;
  CompositionSequenceCursor(std::uint32_t r, Composition comp);
  std::optional<ColoredSequence> next();

private:
  bool advance();
  void fill_from(std::size_t pos);

  std::uint32_t r_;
  Composition comp_;
  std::vector<std::uint32_t> remaining_;
  std::vector<ColoredEntry> current_;
  bool started_ = false, done_ = false;
};

/// Weakly increasing sequences of length n with parts ≤ max_part, lexicographic.
class PartitionCursor {
public:
  using value_type = Partition;
  PartitionCursor(std::uint32_t n, std::uint32_t max_part);
  std::optional<Partition> next();

private:
  std::uint32_t max_part_;
  std::vector<std::uint32_t> current_;
  bool started_ = false, done_ = false;
};

/// Canonical compositions of n: parts ≥ 0, last part ≥ 1, at most n+1 parts.
/// Ordered by number of parts, then lexicographically.
class CompositionCursor {
public:
  using value_type = Composition;
  explicit CompositionCursor(std::uint32_t n);
  std::optional<Composition> next();

private:
  std::uint32_t n_;
  std::size_t parts_ = 1;
  std::vector<std::uint32_t> current_;
  bool started_ = false, done_ = false;
};

inline Stream<GroupCursor> enumerate_group(std::uint32_t r, std::uint32_t n) {
  return Stream{GroupCursor{r, n}};
}
inline Stream<SequenceCursor> enumerate_sequences(std::uint32_t r, std::uint32_t n, std::uint32_t max_value) {
  return Stream{SequenceCursor{r, n, max_value}};
}
inline Stream<CompositionSequenceCursor> enumerate_by_composition(std::uint32_t r, Composition comp) {
  return Stream{CompositionSequenceCursor{r, std::move(comp)}};
}
inline Stream<PartitionCursor> enumerate_partitions(std::uint32_t n, std::uint32_t max_part) {
  return Stream{PartitionCursor{n, max_part}};
}
inline Stream<CompositionCursor> enumerate_compositions(std::uint32_t n) {
  return Stream{CompositionCursor{n}};
}

/// Composition read off the value multiplicities of f (values 0..max f).
Composition composition_of(const ColoredSequence& f);

}  // namespace wreath
