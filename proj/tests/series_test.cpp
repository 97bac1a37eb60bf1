#include <gtest/gtest.h>

#include <random>

#include "wreath/series.hpp"

using namespace wreath;
using V = Variable;

namespace {

std::uint64_t factorial(std::uint32_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

TruncatedSeries random_series(const SeriesSpace& sp, std::mt19937_64& rng, int terms, bool unit = false) {
  TruncatedSeries s(sp);
  for (int k = 0; k < terms; ++k) {
    Exponents e(sp.size());
    for (std::size_t i = 0; i < sp.size(); ++i) e[i] = static_cast<std::uint32_t>(rng() % (sp.caps()[i] + 1));
    s.add_term(e, static_cast<long long>(rng() % 19) - 9);
  }
  if (unit) {
    Exponents zero(sp.size(), 0);
    s.add_term(zero, 1 - s.coefficient(zero));
  }
  return s;
}

TruncatedSeries poly(const SeriesSpace& sp, V v, const std::vector<long long>& coeffs) {
  TruncatedSeries s(sp);
  for (std::uint32_t k = 0; k < coeffs.size(); ++k) s += TruncatedSeries::monomial(sp, {{v, k}}, coeffs[k]);
  return s;
}

}  // namespace

TEST(Space, Basics) {
  SeriesSpace sp{{V::t, 3}, {V::q, 5}};
  EXPECT_EQ(sp.require(V::q), 1u);
  EXPECT_EQ(sp.cap(V::t), 3u);
  EXPECT_FALSE(sp.index_of(V::u));
  EXPECT_THROW((void)sp.require(V::u), DomainError);
  EXPECT_TRUE(sp.fits({3, 5}));
  EXPECT_FALSE(sp.fits({4, 0}));
  EXPECT_EQ(sp.intersect(SeriesSpace{{V::t, 1}, {V::q, 9}}), (SeriesSpace{{V::t, 1}, {V::q, 5}}));
  EXPECT_THROW((void)sp.intersect(SeriesSpace{{V::t, 1}}), DomainError);
  EXPECT_EQ(sp.without(V::t), (SeriesSpace{{V::q, 5}}));
  EXPECT_EQ(variable_from_string("q2"), V::q2);
  EXPECT_THROW(variable_from_string("w"), DomainError);
}

TEST(Series, SmallProducts) {
  SeriesSpace sp{{V::q, 2}};
  EXPECT_EQ(poly(sp, V::q, {1, 1}) * poly(sp, V::q, {1, -1}), poly(sp, V::q, {1, 0, -1}));
  EXPECT_TRUE((poly(sp, V::q, {1, 1}) * TruncatedSeries(sp)).is_zero());

  SeriesSpace s3{{V::q, 3}};
  auto a = poly(s3, V::q, {1, 1, 1, 1});
  EXPECT_EQ(a * a, poly(s3, V::q, {1, 2, 3, 4}));
}

TEST(Series, TruncationDropsHighTerms) {
  SeriesSpace sp{{V::t, 1}, {V::q, 1}};
  EXPECT_TRUE(TruncatedSeries::monomial(sp, {{V::t, 2}}).is_zero());
  auto x = TruncatedSeries::monomial(sp, {{V::t, 1}, {V::q, 1}}, 3);
  EXPECT_TRUE((x * x).is_zero());
  EXPECT_EQ(x.coefficient({1, 1}), 3);
}

TEST(Series, MismatchedSpacesThrow) {
  auto a = TruncatedSeries::one(SeriesSpace{{V::t, 2}});
  auto b = TruncatedSeries::one(SeriesSpace{{V::q, 2}});
  EXPECT_THROW(a + b, DomainError);
  EXPECT_THROW(a * b, DomainError);
  EXPECT_THROW((void)first_mismatch(a, b), DomainError);
}

TEST(Series, MixedCapsIntersect) {
  auto a = TruncatedSeries::monomial(SeriesSpace{{V::t, 3}}, {{V::t, 3}});
  auto b = TruncatedSeries::one(SeriesSpace{{V::t, 2}});
  auto s = a + b;
  EXPECT_EQ(s.space(), (SeriesSpace{{V::t, 2}}));
  EXPECT_EQ(s, b);
}

TEST(Invert, GeometricSeries) {
  SeriesSpace sx{{V::x, 3}};
  EXPECT_EQ(invert_unit(poly(sx, V::x, {1, -1})), poly(sx, V::x, {1, 1, 1, 1}));
  SeriesSpace sp{{V::p, 3}};
  EXPECT_EQ(invert_unit(poly(sp, V::p, {1, 1})), poly(sp, V::p, {1, -1, 1, -1}));
  EXPECT_EQ(invert_unit(poly(sp, V::p, {-1, 1})), poly(sp, V::p, {-1, -1, -1, -1}));
  EXPECT_THROW(invert_unit(poly(sp, V::p, {2, 1})), DomainError);
}

TEST(Properties, RingLawsAndInverseOnRandomInputs) {
  std::mt19937_64 rng(20240611);
  SeriesSpace sp{{V::t, 3}, {V::q, 4}, {V::a, 2}};
  auto one = TruncatedSeries::one(sp);
  for (int trial = 0; trial < 1000; ++trial) {
    auto a = random_series(sp, rng, 6);
    auto b = random_series(sp, rng, 6);
    auto c = random_series(sp, rng, 6);
    ASSERT_EQ((a * b) * c, a * (b * c)) << trial;
    ASSERT_EQ(a * (b + c), a * b + a * c) << trial;
    ASSERT_EQ(a * b, b * a) << trial;
    ASSERT_EQ(a - a, TruncatedSeries(sp));
    auto u = random_series(sp, rng, 6, true);
    ASSERT_EQ(u * invert_unit(u), one) << trial;
  }
}

TEST(Properties, DenseAndSparsePathsAgree) {
  // Single-term operands take the fast path; compare against a schoolbook sum.
  std::mt19937_64 rng(7);
  SeriesSpace sp{{V::q1, 5}, {V::q2, 5}, {V::a, 3}};
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_series(sp, rng, 12);
    auto b = random_series(sp, rng, 12);
    TruncatedSeries want(sp);
    for (const auto& [ea, ca] : a.terms())
      for (const auto& [eb, cb] : b.terms()) {
        Exponents e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        want.add_term(e, ca * cb);
      }
    ASSERT_EQ(a * b, want);
  }
}

TEST(QAnalogues, NumbersAndMultinomials) {
  SeriesSpace sq{{V::q, 6}};
  EXPECT_EQ(q_number(sq, 3, V::q), poly(sq, V::q, {1, 1, 1}));
  EXPECT_EQ(q_number(sq, 0, V::q), TruncatedSeries(sq));
  EXPECT_EQ(q_multinomial(sq, {1, 1}, V::q), poly(sq, V::q, {1, 1}));
  EXPECT_EQ(q_multinomial(sq, {2, 2}, V::q), poly(sq, V::q, {1, 1, 2, 1, 1}));
  EXPECT_EQ(q_multinomial_poly({2, 2}), (std::vector<Integer>{1, 1, 2, 1, 1}));
  EXPECT_EQ(q_factorial(sq, 3, V::q), poly(sq, V::q, {1, 2, 2, 1}));
}

TEST(QAnalogues, MultinomialAtOneIsInteger) {
  // All compositions with positive parts of n ≤ 6 (zero parts are neutral).
  for (std::uint32_t n = 0; n <= 6; ++n) {
    std::vector<std::vector<std::uint32_t>> stack{{}};
    while (!stack.empty()) {
      auto parts = stack.back();
      stack.pop_back();
      std::uint32_t s = 0;
      for (auto x : parts) s += x;
      if (s == n) {
        Integer at_one = 0;
        for (const auto& c : q_multinomial_poly(parts)) at_one += c;
        std::uint64_t want = factorial(n);
        for (auto x : parts) want /= factorial(x);
        EXPECT_EQ(at_one, want) << n;
        continue;
      }
      for (std::uint32_t k = 1; s + k <= n; ++k) {
        auto next = parts;
        next.push_back(k);
        stack.push_back(next);
      }
    }
  }
}

TEST(QAnalogues, ExactDivisionGuards) {
  EXPECT_THROW(poly_div_exact({1, 0, 1}, {1, 1}), std::logic_error);
  EXPECT_EQ(poly_div_exact({1, 0, -1}, {1, 1}), (std::vector<Integer>{1, -1}));
  EXPECT_EQ(poly_mul({1, 1}, {1, -1}), (std::vector<Integer>{1, 0, -1}));
}

TEST(QAnalogues, ColoredNumbers) {
  SeriesSpace sp{{V::p, 10}, {V::a, 4}};
  EXPECT_EQ(colored_q_number(sp, 1, 2), TruncatedSeries::one(sp) + TruncatedSeries::monomial(sp, {{V::a, 1}, {V::p, 1}}));
  auto lhs = colored_q_number(sp, 2, 3);
  auto rhs = (TruncatedSeries::one(sp) + TruncatedSeries::monomial(sp, {{V::a, 1}, {V::p, 2}}) +
              TruncatedSeries::monomial(sp, {{V::a, 2}, {V::p, 3}})) *
             poly(sp, V::p, {1, 1});
  EXPECT_EQ(lhs, rhs);
  for (std::uint32_t n = 0; n <= 8; ++n) EXPECT_EQ(colored_q_number(sp, n, 1), q_number(sp, n, V::p)) << n;
  EXPECT_EQ(colored_q_factorial(sp, 3, 2) * colored_exponential_term(sp, 3, 2), TruncatedSeries::one(sp));
}

TEST(Exponential, Coefficients) {
  SeriesSpace sp{{V::q, 6}, {V::p, 6}, {V::a, 3}, {V::u, 3}};
  auto e = exp_series(sp, V::u, V::p);
  EXPECT_EQ(coefficient_of(e, V::u, 0), TruncatedSeries::one(sp.without(V::u)));
  EXPECT_EQ(coefficient_of(e, V::u, 2), invert_unit(q_factorial(sp.without(V::u), 2, V::p)));

  auto ec = exp_series(sp, V::u, V::p, 2);
  auto inner = sp.without(V::u);
  EXPECT_EQ(coefficient_of(ec, V::u, 1), invert_unit(colored_q_number(inner, 1, 2)));

  // e[qu]_p: coefficient of u^2 gains q^2.
  auto shifted = substitute_scaled(e, V::u, {{V::q, 1}});
  EXPECT_EQ(coefficient_of(shifted, V::u, 2),
            TruncatedSeries::monomial(inner, {{V::q, 2}}) * coefficient_of(e, V::u, 2));
  EXPECT_EQ(substitute_scaled(e, V::u, {}), e);

  SeriesSpace flat{{V::p, 0}, {V::u, 4}};
  auto e0 = exp_series(flat, V::u, V::p);
  for (std::uint32_t n = 0; n <= 4; ++n) EXPECT_EQ(coefficient_of(e0, V::u, n).constant_term(), 1);
}

TEST(Substitute, ShiftsAndComposes) {
  SeriesSpace sp{{V::q, 4}, {V::u, 2}};
  auto s = TruncatedSeries::one(sp) + TruncatedSeries::monomial(sp, {{V::u, 1}});
  auto once = substitute_scaled(s, V::u, {{V::q, 1}});
  EXPECT_EQ(once, TruncatedSeries::one(sp) + TruncatedSeries::monomial(sp, {{V::q, 1}, {V::u, 1}}));
  EXPECT_EQ(substitute_scaled(once, V::u, {{V::q, 2}}), substitute_scaled(s, V::u, {{V::q, 3}}));
}

TEST(Geometric, UCoefficientCountsMultisets) {
  SeriesSpace sp{{V::x, 6}};
  std::vector<TruncatedSeries> monos{TruncatedSeries::one(sp), TruncatedSeries::monomial(sp, {{V::x, 1}})};
  // [u^3] 1/((1-u)(1-ux)) = 1 + x + x^2 + x^3
  EXPECT_EQ(geometric_u_coefficient(sp, monos, 3), poly(sp, V::x, {1, 1, 1, 1}));
  EXPECT_EQ(geometric_u_coefficient(sp, monos, 0), TruncatedSeries::one(sp));
}

TEST(Laurent, HandExamples) {
  auto one = extract_u_coefficient_laurent(geometric_factors(0, 0, 1, ColumnSet::as_printed), 1, 0, 0, 1);
  EXPECT_EQ(one, TruncatedSeries::one(one.space()));

  auto two = extract_u_coefficient_laurent(geometric_factors(1, 0, 1, ColumnSet::as_printed), 1, 1, 0, 1);
  EXPECT_EQ(two, TruncatedSeries::one(two.space()) + TruncatedSeries::monomial(two.space(), {{V::q1, 1}}));

  auto three = extract_u_coefficient_laurent(geometric_factors(0, 0, 2, ColumnSet::as_printed), 2, 0, 0, 2);
  const auto& sp = three.space();
  EXPECT_EQ(three, TruncatedSeries::one(sp) + TruncatedSeries::monomial(sp, {{V::a, 1}, {V::b, 1}}) +
                       TruncatedSeries::monomial(sp, {{V::a, 2}, {V::b, 2}}));
}

TEST(Laurent, ColumnSets) {
  EXPECT_EQ(geometric_factors(1, 1, 2, ColumnSet::as_printed).size(), 8u);
  EXPECT_EQ(geometric_factors(1, 1, 2, ColumnSet::colored_entries).size(), 6u);
  EXPECT_EQ(geometric_factors(1, 1, 2, ColumnSet::anchored).size(), 5u);
  EXPECT_EQ(column_set_from_string("anchored"), ColumnSet::anchored);
  EXPECT_EQ(to_string(ColumnSet::as_printed), "as_printed");
  EXPECT_THROW(column_set_from_string("all"), DomainError);
}

TEST(Serialization, JsonRoundtripAndText) {
  SeriesSpace sp{{V::t, 2}, {V::q, 3}};
  auto s = TruncatedSeries::monomial(sp, {{V::t, 1}, {V::q, 2}}, 3) - TruncatedSeries::one(sp);
  auto j = to_json(s);
  EXPECT_EQ(j.dump(), R"({"caps":[2,3],"terms":[{"coef":"-1","exp":[0,0]},{"coef":"3","exp":[1,2]}],"vars":["t","q"]})");
  EXPECT_EQ(series_from_json(j), s);
  EXPECT_EQ(to_string(s), "-1 + 3*t*q^2");
}

TEST(Serialization, BigCoefficientsSurvive) {
  SeriesSpace sp{{V::t, 0}};
  Integer big = 1;
  for (int i = 0; i < 100; ++i) big *= 3;
  auto s = TruncatedSeries::constant(sp, big);
  EXPECT_EQ(series_from_json(nlohmann::json::parse(to_json(s).dump())), s);
}

TEST(Compare, FirstMismatch) {
  SeriesSpace sp{{V::t, 2}};
  auto a = poly(sp, V::t, {1, 2, 3});
  auto b = poly(sp, V::t, {1, 5, 4});
  auto m = first_mismatch(a, b);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->exponents, (Exponents{1}));
  EXPECT_EQ(m->lhs, 2);
  EXPECT_EQ(m->rhs, 5);
  EXPECT_FALSE(first_mismatch(a, a));
}
