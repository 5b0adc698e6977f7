#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "waring/addsemigroup.hpp"

using namespace waring;

TEST(Frobenius, Examples) {
  EXPECT_EQ(frobenius_number(GeneratorSet({3, 5})), 7);
  EXPECT_EQ(frobenius_number(GeneratorSet({2, 3})), 1);
  EXPECT_EQ(frobenius_number(GeneratorSet({1})), -1);
  EXPECT_EQ(frobenius_number(GeneratorSet({6, 9, 20})), 43);
  EXPECT_THROW(frobenius_number(GeneratorSet({4, 6})), GcdNotOne);
}

TEST(Representable, Examples) {
  const GeneratorSet s({3, 5});
  EXPECT_TRUE(representable(s, 8));
  EXPECT_FALSE(representable(s, 7));
  EXPECT_TRUE(representable(s, 0));
  EXPECT_THROW(representable(s, -3), std::invalid_argument);
}

TEST(Sumset, Examples) {
  const SumsetWindow w{0, 100};
  EXPECT_EQ(sumset_iterate({0, 1}, 3, w), (std::set<std::int64_t>{0, 1, 2, 3}));
  EXPECT_EQ(sumset_iterate({0, 1, 4, 9}, 2, SumsetWindow{0, 10}), (std::set<std::int64_t>{0, 1, 2, 4, 5, 8, 9, 10}));
  EXPECT_EQ(sumset_iterate({3, 5}, 2, w), (std::set<std::int64_t>{6, 8, 10}));
}

TEST(Sumset, NegativeElementsNeedBound) {
  EXPECT_THROW(sumset_iterate({-1, 2}, 2, SumsetWindow{-5, 5}), UnsupportedPruning);
  EXPECT_EQ(sumset_iterate({-1, 2}, 2, SumsetWindow{-5, 5}, 2), (std::set<std::int64_t>{-2, 1, 4}));
}

TEST(Coverage, Examples) {
  const auto linear = coverage_bound_search(Polynomial({3, 2}), 200);
  EXPECT_EQ(linear.kind, CoverageResult::Kind::kCovered);
  EXPECT_EQ(linear.n, 2u);
  const auto constant = coverage_bound_search(Polynomial({5}), 200);
  EXPECT_EQ(constant.kind, CoverageResult::Kind::kNotCovered);
  EXPECT_EQ(constant.witness, Integer(5));
  const auto zero = coverage_bound_search(Polynomial(), 200);
  EXPECT_EQ(zero.kind, CoverageResult::Kind::kCovered);
  EXPECT_EQ(zero.n, 1u);
  const auto mixed = coverage_bound_search(Polynomial({-3, 0, 1}), 200);
  EXPECT_EQ(mixed.kind, CoverageResult::Kind::kNotCovered);
  EXPECT_EQ(mixed.witness, Integer(-3));
  // x^2 + x takes 0, 2, 6, 12, 20, ...; frozen from the window DP.
  EXPECT_EQ(coverage_bound_search(Polynomial({0, 1, 1}), 200).n, 3u);
}

TEST(VectorMinSummands, Examples) {
  const std::vector<Polynomial> f{Polynomial({0, 1}), Polynomial({0, 0, 1})};
  EXPECT_EQ(vector_min_summands(f, {5, 5}, 10), 5u);
  EXPECT_EQ(vector_min_summands(f, {2, 4}, 10), 1u);
  EXPECT_EQ(vector_min_summands(f, {3, 5}, 10), 2u);
  EXPECT_FALSE(vector_min_summands(f, {2, 3}, 10).has_value());
  EXPECT_THROW(vector_min_summands({Polynomial({0, -1})}, {1}, 3), UnsupportedPruning);
}

TEST(SemigroupProperties, FrobeniusAgainstExhaustive) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> pick(2, 40);
  std::uniform_int_distribution<int> size(2, 5);
  int done = 0;
  while (done < 50) {
    std::vector<long> gens;
    const int k = size(rng);
    for (int i = 0; i < k; ++i) gens.push_back(pick(rng));
    long g = 0;
    for (long v : gens) g = std::gcd(g, v);
    if (g != 1) continue;
    ++done;
    const GeneratorSet s(std::vector<std::int64_t>(gens.begin(), gens.end()));
    const std::int64_t f = frobenius_number(s);
    ASSERT_EQ(f, oracle::frobenius_brute(gens));
    EXPECT_FALSE(representable(s, f));
    for (std::int64_t t = f + 1; t <= f + 100; ++t) ASSERT_TRUE(representable(s, t)) << t;
  }
}

TEST(SemigroupProperties, ChainMonotonicity) {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<std::int64_t> pick(1, 30);
  for (int trial = 0; trial < 30; ++trial) {
    std::set<std::int64_t> a{0};
    for (int i = 0; i < 4; ++i) a.insert(pick(rng));
    const SumsetWindow w{0, 60};
    std::set<std::int64_t> prev = sumset_iterate(a, 1, w);
    for (unsigned k = 2; k <= 6; ++k) {
      const auto next = sumset_iterate(a, k, w);
      EXPECT_TRUE(std::includes(next.begin(), next.end(), prev.begin(), prev.end()));
      prev = next;
    }
  }
}

TEST(SemigroupProperties, MomentCurveNeedsMSummands) {
  for (unsigned n = 2; n <= 4; ++n) {
    std::vector<Polynomial> f;
    for (unsigned k = 1; k <= n; ++k) f.push_back(Polynomial::monomial(1, k));
    for (std::int64_t m = 1; m <= 12; ++m) {
      EXPECT_EQ(vector_min_summands(f, VectorZ(n, m), m), static_cast<unsigned>(m)) << n << " " << m;
    }
  }
}

TEST(SemigroupProperties, CoverageRecheck) {
  for (const Polynomial& f : {Polynomial({3, 2}), Polynomial({0, 1, 1}), Polynomial({1, 0, 1}),
                              Polynomial({0, 0, 0, 1}), Polynomial({2, 0, 3})}) {
    const std::int64_t hi = 120;
    const auto r = coverage_bound_search(f, hi);
    ASSERT_EQ(r.kind, CoverageResult::Kind::kCovered);
    // Brute force: every semigroup element in the window is a sum of <= N values.
    std::set<std::int64_t> values;
    for (long x = 0; x <= hi; ++x) {
      const Rational v = f(Rational(x));
      if (v <= hi) values.insert(to_int64(v.get_num()));
    }
    std::set<std::int64_t> within{values};
    std::set<std::int64_t> level{values};
    for (unsigned k = 2; k <= *r.n; ++k) {
      std::set<std::int64_t> next;
      for (auto p : level) {
        for (auto v : values) {
          if (p + v <= hi) next.insert(p + v);
        }
      }
      within.insert(next.begin(), next.end());
      level = next;
    }
    std::set<std::int64_t> all{values};
    for (int round = 0; round < 200; ++round) {
      std::set<std::int64_t> grown = all;
      for (auto p : all) {
        for (auto v : values) {
          if (p + v <= hi) grown.insert(p + v);
        }
      }
      if (grown == all) break;
      all = grown;
    }
    EXPECT_EQ(within, all) << f.str();
    EXPECT_EQ(all.size(), r.window_elements) << f.str();
  }
}
