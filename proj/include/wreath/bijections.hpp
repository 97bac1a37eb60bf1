#pragma once

// Φ (sequence ↔ permutation + partition), the block bijection on Γ_n̄, the
// order-remapping map Ψ, and the bipartite split/merge.

#include <cstdint>
#include <vector>

#include "wreath/core.hpp"
#include "wreath/sequences.hpp"

namespace wreath {

struct PhiImage {
  ColoredPermutation gamma;
  Partition lambda;
  friend bool operator==(const PhiImage&, const PhiImage&) = default;
};

PhiImage phi(const OrderSpec& order, const ColoredSequence& f);

/// f_{π(i)} = λ_i + #{j in Des(γ) : j ≤ i-1}, colored c_i.
ColoredSequence phi_inverse(const OrderSpec& order, const ColoredPermutation& g, const Partition& lambda);

/// γ ∈ Γ_n̄: cut the window into consecutive blocks of sizes n_0, n_1, …;
/// each block ascends under `order` and block 0 carries no color.
bool in_block_class(const OrderSpec& order, const ColoredPermutation& g, const Composition& comp);

/// Entry π(i)^{c_i} in block m puts m^{c_i} at position π(i).
ColoredSequence block_encode(const OrderSpec& order, const ColoredPermutation& g, const Composition& comp);

struct BlockImage {
  ColoredPermutation gamma;
  Composition comp;
};

BlockImage block_decode(const OrderSpec& order, const ColoredSequence& f);

/// Re-encode f so that Inv and col computed under `to` match those of f under `from`.
ColoredSequence psi(const OrderSpec& from, const OrderSpec& to, const ColoredSequence& f);

/// Inv_O(f) = len_O(γ_O(f)).
std::uint32_t sequence_inv(const OrderSpec& order, const ColoredSequence& f);

// ---------------------------------------------------------------------------
// Bipartite partitions [g; f]

/// as_defined: g weakly increasing, and on every plateau g_i = g_{i+1} the
/// bottom row satisfies f_i ≤ f_{i+1} under A-R (extended past n).
/// anchored: additionally forbids a column with g_i = 0 over a colored f_i,
/// which amounts to a virtual leading column [0; 0].
enum class BipartiteRule { as_defined, anchored };

std::string to_string(BipartiteRule rule);

struct BipartitePartition {
  Partition top;
  ColoredSequence bottom;
  friend bool operator==(const BipartitePartition& a, const BipartitePartition& b) {
    return a.top == b.top && a.bottom == b.bottom;
  }
};

bool is_bipartite(const Partition& top, const ColoredSequence& bottom,
                  BipartiteRule rule = BipartiteRule::as_defined);

/// Validating constructor.
BipartitePartition make_bipartite(Partition top, ColoredSequence bottom,
                                  BipartiteRule rule = BipartiteRule::as_defined);

struct BipartiteTriple {
  ColoredPermutation gamma;
  Partition lambda;
  Partition mu;
  friend bool operator==(const BipartiteTriple&, const BipartiteTriple&) = default;
};

/// γ = γ_AR(f), λ = g, μ = (f_{π(1)}, …, f_{π(n)}).
BipartiteTriple bipartite_split(const BipartitePartition& b);

/// Needs μ γ-compatible and λ γ⁻¹-compatible (A-R). The bottom row puts μ_i
/// with color c_i at position π(i).
BipartitePartition bipartite_merge(const ColoredPermutation& gamma, const Partition& lambda, const Partition& mu,
                                   BipartiteRule rule = BipartiteRule::as_defined);

struct TripleCompatibility {
  bool mu_gamma = false;              // μ is γ-compatible
  bool lambda_gamma_inverse = false;  // λ (= g) is γ⁻¹-compatible
  [[nodiscard]] bool both() const { return mu_gamma && lambda_gamma_inverse; }
};

TripleCompatibility triple_compatibility(const BipartiteTriple& t);

/// Members with max(g) ≤ k1 and max(f) ≤ k2, in (g, f) lexicographic order.
std::vector<BipartitePartition> enumerate_bipartite(std::uint32_t r, std::uint32_t n, std::uint32_t k1,
                                                    std::uint32_t k2,
                                                    BipartiteRule rule = BipartiteRule::as_defined);

/// A-R on C(r, max(n,1)), used as the extended comparator for bipartite rows.
OrderSpec bipartite_order(std::uint32_t r, std::uint32_t n);

}  // namespace wreath
