#include "wreath/bijections.hpp"

#include <algorithm>
#include <sstream>

namespace wreath {

namespace {

void require_positive_dominant(const OrderSpec& order, const char* what) {
  if (!is_positive_dominant(order))
    throw DomainError(std::string(what) + ": order " + order.name() + " is not positive-dominant");
}

}  // namespace

PhiImage phi(const OrderSpec& order, const ColoredSequence& f) {
  require_positive_dominant(order, "phi");
  return {gamma_of(order, f), lambda_of(order, f)};
}

ColoredSequence phi_inverse(const OrderSpec& order, const ColoredPermutation& g, const Partition& lambda) {
  require_positive_dominant(order, "phi_inverse");
  if (lambda.n() != g.n()) throw DomainError("phi_inverse: partition and permutation lengths differ");
  const auto descents = des_set(order, g);
  std::vector<ColoredEntry> entries(g.n());
  std::size_t seen = 0;
  for (std::uint32_t i = 1; i <= g.n(); ++i) {
    while (seen < descents.size() && descents[seen] <= i - 1) ++seen;
    ColoredEntry e{lambda.at(i) + static_cast<std::uint32_t>(seen), g.color(i)};
    if (e.value == 0 && e.colored()) {
      // Can't happen for a positive-dominant order: a colored γ(i) always
      // sits after some descent.
      std::ostringstream msg;
      msg << "phi_inverse: position " << g.pi(i) << " would receive a colored zero";
      throw DomainError(msg.str());
    }
    entries[g.pi(i) - 1] = e;
  }
  return {g.r(), std::move(entries)};
}

bool in_block_class(const OrderSpec& order, const ColoredPermutation& g, const Composition& comp) {
  if (comp.total() != g.n()) return false;
  std::uint32_t start = 1;
  for (std::size_t m = 0; m < comp.size(); ++m) {
    const auto stop = start + comp.part(m);
    for (auto i = start; i < stop; ++i) {
      if (m == 0 && g.at(i).colored()) return false;
      if (i + 1 < stop && !order.less(g.at(i), g.at(i + 1))) return false;
    }
    start = stop;
  }
  return true;
}

ColoredSequence block_encode(const OrderSpec& order, const ColoredPermutation& g, const Composition& comp) {
  if (!in_block_class(order, g, comp)) {
    std::ostringstream msg;
    msg << format(g) << " is not in the block class of (";
    for (std::size_t m = 0; m < comp.size(); ++m) msg << (m ? "," : "") << comp.part(m);
    msg << ") under " << order.name();
    throw DomainError(msg.str());
  }
  std::vector<ColoredEntry> entries(g.n());
  std::uint32_t i = 1;
  for (std::size_t m = 0; m < comp.size(); ++m)
    for (std::uint32_t k = 0; k < comp.part(m); ++k, ++i)
      entries[g.pi(i) - 1] = ColoredEntry{static_cast<std::uint32_t>(m), g.color(i)};
  return {g.r(), std::move(entries)};
}

BlockImage block_decode(const OrderSpec& order, const ColoredSequence& f) {
  return {gamma_of(order, f), composition_of(f)};
}

std::uint32_t sequence_inv(const OrderSpec& order, const ColoredSequence& f) {
  return len(order, gamma_of(order, f));
}

ColoredSequence psi(const OrderSpec& from, const OrderSpec& to, const ColoredSequence& f) {
  require_positive_dominant(from, "psi");
  require_positive_dominant(to, "psi");
  const auto [gamma, comp] = block_decode(from, f);
  std::vector<ColoredEntry> colored;
  for (const auto& e : gamma.window())
    if (e.colored()) colored.push_back(e);
  const auto delta = reorder(gamma, colored, from, to);
  return block_encode(to, delta, comp);
}

// ---------------------------------------------------------------------------

std::string to_string(BipartiteRule rule) {
  return rule == BipartiteRule::anchored ? "anchored" : "as_defined";
}

OrderSpec bipartite_order(std::uint32_t r, std::uint32_t n) {
  return OrderSpec::ar(Ambient{r, std::max<std::uint32_t>(n, 1)});
}

bool is_bipartite(const Partition& top, const ColoredSequence& bottom, BipartiteRule rule) {
  if (top.n() != bottom.n()) return false;
  const auto order = bipartite_order(bottom.r(), bottom.n());
  for (std::uint32_t i = 1; i < top.n(); ++i) {
    if (top.at(i) < top.at(i + 1)) continue;
    if (order.greater(bottom.at(i), bottom.at(i + 1))) return false;
  }
  if (rule == BipartiteRule::anchored)
    for (std::uint32_t i = 1; i <= top.n(); ++i)
      if (top.at(i) == 0 && bottom.at(i).colored()) return false;
  return true;
}

BipartitePartition make_bipartite(Partition top, ColoredSequence bottom, BipartiteRule rule) {
  if (!is_bipartite(top, bottom, rule))
    throw DomainError("[" + format(top) + "; " + format(bottom) + "] is not a bipartite partition (" +
                      to_string(rule) + ")");
  return {std::move(top), std::move(bottom)};
}

BipartiteTriple bipartite_split(const BipartitePartition& b) {
  const auto order = bipartite_order(b.bottom.r(), b.bottom.n());
  auto gamma = gamma_of(order, b.bottom);
  std::vector<std::uint32_t> mu(b.bottom.n());
  for (std::uint32_t i = 1; i <= b.bottom.n(); ++i) mu[i - 1] = b.bottom.at(gamma.pi(i)).value;
  return {std::move(gamma), b.top, Partition(std::move(mu))};
}

TripleCompatibility triple_compatibility(const BipartiteTriple& t) {
  const auto order = bipartite_order(t.gamma.r(), t.gamma.n());
  return {is_compatible(order, t.mu, t.gamma), is_compatible(order, t.lambda, inverse(t.gamma))};
}

BipartitePartition bipartite_merge(const ColoredPermutation& gamma, const Partition& lambda, const Partition& mu,
                                   BipartiteRule rule) {
  const auto ok = triple_compatibility({gamma, lambda, mu});
  if (!ok.mu_gamma) throw DomainError("bipartite_merge: mu is not gamma-compatible");
  if (!ok.lambda_gamma_inverse) throw DomainError("bipartite_merge: lambda is not compatible with gamma^-1");
  auto arranged = arrange(mu, gamma);
  if (!arranged.dropped_colors.empty()) throw DomainError("bipartite_merge: a colored entry landed on zero");
  return make_bipartite(lambda, std::move(arranged.sequence), rule);
}

std::vector<BipartitePartition> enumerate_bipartite(std::uint32_t r, std::uint32_t n, std::uint32_t k1,
                                                    std::uint32_t k2, BipartiteRule rule) {
  const auto tops = enumerate_partitions(n, k1).collect();
  const auto bottoms = enumerate_sequences(r, n, k2).collect();
  std::vector<BipartitePartition> out;
  for (const auto& g : tops)
    for (const auto& f : bottoms)
      if (is_bipartite(g, f, rule)) out.push_back({g, f});
  return out;
}

}  // namespace wreath
