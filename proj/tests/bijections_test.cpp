#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "wreath/bijections.hpp"

using namespace wreath;

namespace {

std::vector<OrderSpec> pd_orders(std::uint32_t r, std::uint32_t n) {
  return {OrderSpec::ar({r, n}), OrderSpec::bz({r, n}), random_positive_dominant(r, n, 5)};
}

}  // namespace

TEST(Phi, WorkedExampleUnderBothOrders) {
  auto f = parse_sequence("4^2 3^1 0 2^2 4^1 3^1");
  auto q = OrderSpec::ar({3, 6});
  auto p = OrderSpec::bz({3, 6});

  auto a = phi(q, f);
  EXPECT_EQ(format(a.gamma), "3 4^2 2^1 6^1 1^2 5^1");
  EXPECT_EQ(a.lambda, Partition({0, 1, 2, 2, 2, 2}));
  EXPECT_EQ(des(q, a.gamma), 2u);
  EXPECT_EQ(maj(q, a.gamma), 5u);
  EXPECT_EQ(seq_max(f), a.lambda.max() + des(q, a.gamma));
  EXPECT_EQ(seq_weight(f), a.lambda.weight() + 6 * des(q, a.gamma) - maj(q, a.gamma));

  auto b = phi(p, f);
  EXPECT_EQ(format(b.gamma), "3 4^2 6^1 2^1 5^1 1^2");
  EXPECT_EQ(b.lambda, Partition({0, 1, 1, 1, 1, 1}));
  EXPECT_EQ(des(p, b.gamma), 3u);
  EXPECT_EQ(maj(p, b.gamma), 7u);
  EXPECT_EQ(seq_weight(f), b.lambda.weight() + 6 * des(p, b.gamma) - maj(p, b.gamma));
}

TEST(Phi, RoundtripAndStatistics) {
  for (std::uint32_t r = 1; r <= 3; ++r)
    for (std::uint32_t n = 1; n <= 3; ++n)
      for (const auto& o : pd_orders(r, n))
        for (const auto& f : enumerate_sequences(r, n, 3)) {
          auto img = phi(o, f);
          EXPECT_EQ(phi_inverse(o, img.gamma, img.lambda), f);
          EXPECT_EQ(seq_max(f), img.lambda.max() + des(o, img.gamma));
          EXPECT_EQ(seq_weight(f), img.lambda.weight() + std::uint64_t(n) * des(o, img.gamma) - maj(o, img.gamma));
        }
}

TEST(Phi, InverseThenForward) {
  for (std::uint32_t r = 1; r <= 3; ++r)
    for (const auto& o : pd_orders(r, 3))
      for (const auto& g : enumerate_group(r, 3))
        for (const auto& lam : enumerate_partitions(3, 2)) {
          auto f = phi_inverse(o, g, lam);
          EXPECT_EQ(phi(o, f), (PhiImage{g, lam}));
        }
}

TEST(Phi, NeedsPositiveDominance) {
  auto f = parse_sequence("1^1 0", 2);
  EXPECT_THROW(phi(OrderSpec::reiner(2), f), DomainError);
  EXPECT_THROW(phi_inverse(OrderSpec::st({2, 2}), parse_permutation("1 2", 2), Partition({0, 0})), DomainError);
}

TEST(Block, DecodeWorkedExample) {
  auto q = OrderSpec::ar({3, 6});
  auto g = parse_permutation("3 6 1^2 4^1 5^1 2", 3);
  Composition c({2, 2, 2});
  EXPECT_TRUE(in_block_class(q, g, c));
  EXPECT_EQ(format(block_encode(q, g, c)), "1^2 2 0 1^1 2^1 0");

  auto p = OrderSpec::bz({3, 6});
  auto h = parse_permutation("3 6 5^1 4^1 1^2 2", 3);
  EXPECT_TRUE(in_block_class(p, h, c));
  EXPECT_EQ(format(block_encode(p, h, c)), "2^2 2 0 1^1 1^1 0");
}

TEST(Block, RejectsNonMembers) {
  auto q = OrderSpec::ar({2, 3});
  Composition c({1, 2});
  EXPECT_FALSE(in_block_class(q, parse_permutation("1^1 2 3", 2), c));  // colored in block 0
  EXPECT_FALSE(in_block_class(q, parse_permutation("1 3 2", 2), c));    // block 1 descends
  EXPECT_THROW(block_encode(q, parse_permutation("1 3 2", 2), c), DomainError);
}

TEST(Block, BijectionOnEachComposition) {
  for (std::uint32_t r = 1; r <= 3; ++r)
    for (std::uint32_t n = 0; n <= 4; ++n)
      for (const auto& o : pd_orders(r, std::max(n, 1u)))
        for (const auto& c : enumerate_compositions(n)) {
          std::set<std::vector<ColoredEntry>> images;
          std::size_t count = 0;
          for (const auto& f : enumerate_by_composition(r, c)) {
            auto img = block_decode(o, f);
            EXPECT_EQ(img.comp, c);
            EXPECT_TRUE(in_block_class(o, img.gamma, c));
            EXPECT_EQ(block_encode(o, img.gamma, c), f);
            images.insert({img.gamma.window().begin(), img.gamma.window().end()});
            ++count;
          }
          EXPECT_EQ(images.size(), count);
        }
}

TEST(Psi, WorkedExample) {
  auto q = OrderSpec::ar({3, 6});
  auto p = OrderSpec::bz({3, 6});
  auto f = parse_sequence("1^2 2 0 1^1 2^1 0", 3);
  auto g = psi(q, p, f);
  EXPECT_EQ(format(g), "2^2 2 0 1^1 1^1 0");
  EXPECT_EQ(format(psi(p, q, g)), "1^2 2 0 1^1 2^1 0");

  auto delta = gamma_of(q, f);
  auto gamma = gamma_of(p, g);
  EXPECT_EQ(format(gamma), "3 6 5^1 4^1 1^2 2");
  EXPECT_EQ(inv(q, delta), 8u);
  EXPECT_EQ(inv(p, gamma), 8u);
  EXPECT_EQ(col(delta), 4u);
  EXPECT_EQ(sequence_inv(q, f), 19u);
  EXPECT_EQ(sequence_inv(p, g), 19u);
}

TEST(Psi, PreservesInvAndColAndIsBijective) {
  for (std::uint32_t r = 1; r <= 3; ++r) {
    auto from = OrderSpec::bz({r, 4});
    auto to = random_positive_dominant(r, 4, 9);
    for (const auto& c : enumerate_compositions(4)) {
      std::set<ColoredSequence> images;
      std::size_t count = 0;
      for (const auto& f : enumerate_by_composition(r, c)) {
        auto g = psi(from, to, f);
        EXPECT_EQ(composition_of(g), c);
        EXPECT_EQ(sequence_inv(to, g), sequence_inv(from, f));
        EXPECT_EQ(seq_col(g), seq_col(f));
        EXPECT_EQ(psi(to, from, g), f);
        images.insert(g);
        ++count;
      }
      EXPECT_EQ(images.size(), count);
    }
  }
}

TEST(Bipartite, ExampleMembers) {
  auto g = Partition({0, 1, 1, 1});
  EXPECT_TRUE(is_bipartite(g, parse_sequence("2^1 2^2 2^2 3^1", 3)));
  EXPECT_TRUE(is_bipartite(g, parse_sequence("2^2 2^1 3^1 3", 3)));
  EXPECT_FALSE(is_bipartite(g, parse_sequence("2^2 2^1 2^2 3", 3)));
  EXPECT_THROW(make_bipartite(Partition({1, 1}), parse_sequence("2^1 2^2", 3)), DomainError);
}

TEST(Bipartite, OneArrangementPerColorMultiset) {
  auto g = Partition({1, 1, 1, 1});
  std::vector<ColoredEntry> row{{2, 2}, {2, 2}, {2, 1}, {2, 1}};
  std::sort(row.begin(), row.end());
  std::vector<std::string> members;
  std::size_t arrangements = 0;
  do {
    ++arrangements;
    ColoredSequence f(3, row);
    if (is_bipartite(g, f)) members.push_back(format(f));
  } while (std::next_permutation(row.begin(), row.end()));
  EXPECT_EQ(arrangements, 6u);
  EXPECT_EQ(members, (std::vector<std::string>{"2^2 2^2 2^1 2^1"}));
}

TEST(Bipartite, AnchoredRuleDropsZeroOverColor) {
  auto g = Partition({0});
  auto f = parse_sequence("1^1", 2);
  EXPECT_TRUE(is_bipartite(g, f, BipartiteRule::as_defined));
  EXPECT_FALSE(is_bipartite(g, f, BipartiteRule::anchored));

  auto t = bipartite_split({g, f});
  auto ok = triple_compatibility(t);
  EXPECT_TRUE(ok.mu_gamma);
  EXPECT_FALSE(ok.lambda_gamma_inverse);
}

TEST(Bipartite, MuIsAlwaysGammaCompatible) {
  for (std::uint32_t r = 1; r <= 3; ++r)
    for (const auto& b : enumerate_bipartite(r, 3, 2, 2)) EXPECT_TRUE(triple_compatibility(bipartite_split(b)).mu_gamma);
}

TEST(Bipartite, AnchoredSplitMergeIsBijection) {
  for (std::uint32_t r = 1; r <= 3; ++r)
    for (std::uint32_t n = 1; n <= 3; ++n) {
      const std::uint32_t k = 2;
      auto members = enumerate_bipartite(r, n, k, k, BipartiteRule::anchored);
      for (const auto& b : members) {
        auto t = bipartite_split(b);
        ASSERT_TRUE(triple_compatibility(t).both()) << format(b.bottom);
        EXPECT_EQ(bipartite_merge(t.gamma, t.lambda, t.mu, BipartiteRule::anchored), b);
      }
      // Count compatible triples directly.
      std::size_t triples = 0;
      auto parts = enumerate_partitions(n, k).collect();
      for (const auto& g : enumerate_group(r, n))
        for (const auto& lam : parts)
          for (const auto& mu : parts)
            if (triple_compatibility({g, lam, mu}).both()) ++triples;
      EXPECT_EQ(members.size(), triples) << r << ' ' << n;
    }
}

TEST(Bipartite, MergeRejectsIncompatible) {
  auto g = parse_permutation("1^1", 2);
  EXPECT_THROW(bipartite_merge(g, Partition({0}), Partition({1})), DomainError);
  EXPECT_THROW(bipartite_merge(g, Partition({1}), Partition({0})), DomainError);
}
