#pragma once

// Colored entries, total orders on them, colored permutations in window
// notation, and the single-permutation statistics (des, maj, inv, len, col).

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wreath {

/// Raised when a value violates a documented precondition or invariant.
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A nonnegative integer carrying a color. Zero is always uncolored.
struct ColoredEntry {
  std::uint32_t value = 0;
  std::uint32_t color = 0;

  constexpr ColoredEntry() = default;
  constexpr ColoredEntry(std::uint32_t v, std::uint32_t c = 0) : value(v), color(c) {}

  friend constexpr bool operator==(const ColoredEntry&, const ColoredEntry&) = default;
  /// Structural order (value, then color). Not a combinatorial order; use
  /// OrderSpec for that. Only here so entries can live in sorted containers.
  friend constexpr auto operator<=>(const ColoredEntry&, const ColoredEntry&) = default;

  [[nodiscard]] constexpr bool colored() const { return color != 0; }
};

std::ostream& operator<<(std::ostream& os, const ColoredEntry& e);

/// Throws DomainError unless `e` is canonical (value 0 implies color 0) and color < r.
void check_entry(const ColoredEntry& e, std::uint32_t r);

/// Ambient parameters of the colored alphabet C(r,n) = {0} ∪ {j^c : j in [n], c < r}.
struct Ambient {
  std::uint32_t r = 1;
  std::uint32_t n = 0;
  friend bool operator==(const Ambient&, const Ambient&) = default;
};

/// All n·r + 1 entries of C(r,n), in structural order.
std::vector<ColoredEntry> alphabet(Ambient amb);

enum class OrderKind { AR, BZ, ST, Reiner, Custom };

std::string to_string(OrderKind k);

/// A strict total order on C(r,n).
///
/// Named kinds:
///   AR      1^{r-1} < … < n^{r-1} < … < 1^1 < … < n^1 < 0 < 1 < … < n
///   BZ      n^{r-1} < … < n^1 < … < 1^{r-1} < … < 1^1 < 0 < 1 < … < n
///   ST      0 < 1 < … < n < 1^1 < … < n^1 < … < 1^{r-1} < … < n^{r-1}
///   Reiner  (r = 2 only) -n < … < -1 < 1 < … < n with j^1 read as -j;
///           the zero entry, absent from the signed alphabet, is adjoined
///           as the minimum.
///   Custom  an explicit ascending list of every entry of C(r,n).
///
/// AR also compares entries whose value exceeds n (color descending, then
/// value ascending); every other kind rejects them.
class OrderSpec {
public:
  static OrderSpec ar(Ambient amb);
  static OrderSpec bz(Ambient amb);
  static OrderSpec st(Ambient amb);
  static OrderSpec reiner(std::uint32_t n);
  static OrderSpec custom(Ambient amb, std::vector<ColoredEntry> ascending);

  [[nodiscard]] OrderKind kind() const { return kind_; }
  [[nodiscard]] Ambient ambient() const { return amb_; }
  [[nodiscard]] std::uint32_t r() const { return amb_.r; }
  [[nodiscard]] std::uint32_t n() const { return amb_.n; }

  /// Short descriptor: "ar", "bz", "st", "reiner" or "custom".
  [[nodiscard]] std::string name() const;

  /// Three-way comparison under this order.
  [[nodiscard]] std::strong_ordering compare(const ColoredEntry& a, const ColoredEntry& b) const;
  [[nodiscard]] bool less(const ColoredEntry& a, const ColoredEntry& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }
  [[nodiscard]] bool greater(const ColoredEntry& a, const ColoredEntry& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

  /// Position of `e` in the ascending list of C(r,n), 0-based.
  [[nodiscard]] std::uint32_t position(const ColoredEntry& e) const;

  /// The whole alphabet in ascending order.
  [[nodiscard]] std::vector<ColoredEntry> ascending() const;

  /// Same order re-expressed as a Custom spec.
  [[nodiscard]] OrderSpec as_custom() const;

private:
  OrderSpec(OrderKind kind, Ambient amb) : kind_(kind), amb_(amb) {}
  [[nodiscard]] std::uint64_t key(const ColoredEntry& e) const;
  [[nodiscard]] std::size_t slot(const ColoredEntry& e) const;

  OrderKind kind_;
  Ambient amb_;
  std::vector<std::uint32_t> rank_;  // Custom only: rank indexed by slot()
};

std::strong_ordering compare(const OrderSpec& order, const ColoredEntry& a, const ColoredEntry& b);

/// 0 < 1 < … < n, and every uncolored entry beats every colored one.
bool is_positive_dominant(const OrderSpec& order);

/// A positive-dominant Custom order whose colored block is shuffled
/// deterministically from `seed`.
OrderSpec random_positive_dominant(std::uint32_t r, std::uint32_t n, std::uint64_t seed);

/// Swaps the greatest colored entry with the uncolored entry 1. The result
/// violates condition (2) of positive dominance whenever r > 1.
OrderSpec corrupt_positive_dominance(const OrderSpec& order);

/// An element of Z_r ≀ S_n written as its window (π(1)^{c_1}, …, π(n)^{c_n}).
class ColoredPermutation {
public:
  ColoredPermutation() = default;
  ColoredPermutation(std::uint32_t r, std::vector<ColoredEntry> window);

  static ColoredPermutation identity(std::uint32_t r, std::uint32_t n);

  [[nodiscard]] std::uint32_t r() const { return r_; }
  [[nodiscard]] std::uint32_t n() const { return static_cast<std::uint32_t>(window_.size()); }
  [[nodiscard]] std::span<const ColoredEntry> window() const { return window_; }

  /// γ(i) for 1 ≤ i ≤ n; γ(0) is the uncolored 0.
  [[nodiscard]] ColoredEntry at(std::uint32_t i) const { return i == 0 ? ColoredEntry{} : window_[i - 1]; }
  [[nodiscard]] std::uint32_t pi(std::uint32_t i) const { return window_[i - 1].value; }
  [[nodiscard]] std::uint32_t color(std::uint32_t i) const { return window_[i - 1].color; }

  /// Same window reinterpreted with a larger color count.
  [[nodiscard]] ColoredPermutation with_r(std::uint32_t r) const { return {r, window_}; }

  friend bool operator==(const ColoredPermutation& a, const ColoredPermutation& b) {
    return a.window_ == b.window_;
  }

private:
  std::uint32_t r_ = 1;
  std::vector<ColoredEntry> window_;
};

ColoredPermutation inverse(const ColoredPermutation& g);

std::vector<std::uint32_t> des_set(const OrderSpec& order, const ColoredPermutation& g);
std::uint32_t des(const OrderSpec& order, const ColoredPermutation& g);
std::uint32_t maj(const OrderSpec& order, const ColoredPermutation& g);
std::uint32_t inv(const OrderSpec& order, const ColoredPermutation& g);
std::uint32_t len(const OrderSpec& order, const ColoredPermutation& g);
std::uint32_t col(const ColoredPermutation& g);

/// Inversions (i<j, γ(i) > γ(j)) with both γ(i) and γ(j) in `subset`.
std::uint32_t subset_inv(const OrderSpec& order, const ColoredPermutation& g,
                         std::span<const ColoredEntry> subset);

/// γ[to(B)]: the entries of `subset` are permuted among their positions so
/// that each position's rank in B under `to` equals the old entry's rank
/// under `from`. Every element of `subset` must occur in `g`.
ColoredPermutation reorder(const ColoredPermutation& g, std::span<const ColoredEntry> subset,
                           const OrderSpec& from, const OrderSpec& to);

/// 1-based rank of `a` within `set` sorted ascending under `order`.
std::uint32_t rank(const OrderSpec& order, std::span<const ColoredEntry> set, const ColoredEntry& a);

/// A composition (n_0, …, n_k) in canonical form: last part ≥ 1 unless n = 0.
class Composition {
public:
  Composition() = default;
  explicit Composition(std::vector<std::uint32_t> parts);

  [[nodiscard]] std::span<const std::uint32_t> parts() const { return parts_; }
  [[nodiscard]] std::uint32_t part(std::size_t i) const { return parts_[i]; }
  [[nodiscard]] std::size_t size() const { return parts_.size(); }
  [[nodiscard]] std::uint32_t total() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

private:
  std::vector<std::uint32_t> parts_;
};

// Window notation: whitespace-separated tokens "v" or "v^c".

std::vector<ColoredEntry> parse_entries(const std::string& text);
std::string format_entries(std::span<const ColoredEntry> entries);
std::string format(const ColoredPermutation& g);

ColoredPermutation parse_permutation(const std::string& text, std::optional<std::uint32_t> r = {});

}  // namespace wreath
