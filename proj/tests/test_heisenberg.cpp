#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "waring/heisenberg.hpp"

using namespace waring;

namespace {

HeisPoint pt(Rational a, Rational b, Rational c) { return make_point({a}, {b}, c); }
HeisLie lie(Rational a, Rational b, Rational d) { return HeisLie{{a}, {b}, d}; }

}  // namespace

TEST(HeisMul, Examples) {
  EXPECT_EQ(mul(HeisPoint::identity(1), pt(4, 5, 6)), pt(4, 5, 6));
  EXPECT_EQ(mul(pt(1, 2, 3), pt(4, 5, 6)), pt(5, 7, 14));
  EXPECT_EQ(mul(make_point({1, 0}, {0, 1}, 0), make_point({0, 1}, {1, 0}, 0)), make_point({1, 1}, {1, 1}, 1));
  EXPECT_THROW(mul(pt(1, 2, 3), HeisPoint::identity(2)), DimensionMismatch);
}

TEST(HeisMul, MatchesMatrixOracle) {
  EXPECT_EQ(mul(pt(1, 2, 3), pt(4, 5, 6)), oracle::matrix_product({pt(1, 2, 3), pt(4, 5, 6)}));
}

TEST(HeisInv, Examples) {
  EXPECT_EQ(inv(HeisPoint::identity(1)), HeisPoint::identity(1));
  EXPECT_EQ(inv(pt(1, 2, 3)), pt(-1, -2, -1));
  EXPECT_EQ(inv(pt(0, 0, 5)), pt(0, 0, -5));
}

TEST(HeisCommutator, Examples) {
  EXPECT_EQ(commutator(pt(1, 0, 0), pt(0, 1, 0)), pt(0, 0, 1));
  EXPECT_EQ(commutator(pt(3, 4, 5), pt(3, 4, 5)), pt(0, 0, 0));
  EXPECT_EQ(commutator(make_point({1, 2}, {0, 0}, 0), make_point({0, 0}, {3, 4}, 0)), make_point({0, 0}, {0, 0}, 11));
}

TEST(SymplecticForm, Examples) {
  EXPECT_EQ(symplectic_form({1, 0, 0, 0}, {0, 0, 1, 0}), 1);
  EXPECT_EQ(symplectic_form({3, 1, 4, 1}, {3, 1, 4, 1}), 0);
  EXPECT_EQ(symplectic_form({1, 2}, {3, 4}), -2);
  EXPECT_THROW(symplectic_form({1, 2, 3}, {1, 2, 3}), DimensionMismatch);
}

TEST(LogExp, Examples) {
  EXPECT_EQ(log(pt(1, 2, 3)), lie(1, 2, 2));
  EXPECT_EQ(log(pt(0, 0, 7)), lie(0, 0, 7));
  EXPECT_EQ(log(HeisPoint::identity(1)), HeisLie::zero(1));
  EXPECT_EQ(exp(HeisLie::zero(1)), HeisPoint::identity(1));
  EXPECT_EQ(exp(lie(2, 2, 0)), pt(2, 2, 2));
  EXPECT_EQ(exp(lie(1, 2, 2)), pt(1, 2, 3));
}

TEST(Bch, Examples) {
  const HeisLie x = lie(1, 0, 0);
  EXPECT_EQ(bch(x, HeisLie::zero(1)), x);
  EXPECT_EQ(bch(x, lie(0, 1, 0)), lie(1, 1, Rational(1, 2)));
  EXPECT_EQ(bch(lie(3, Rational(1, 2), 7), -lie(3, Rational(1, 2), 7)), HeisLie::zero(1));
}

TEST(Lattice, Examples) {
  EXPECT_TRUE(lattice_member(CongruenceLattice(1, 2), pt(2, 4, 6)));
  EXPECT_FALSE(lattice_member(CongruenceLattice(1, 2), pt(1, 0, 0)));
  EXPECT_FALSE(lattice_member(CongruenceLattice(1, 4), pt(4, 8, 2)));
  EXPECT_THROW(lattice_member(CongruenceLattice(1, 2), pt(Rational(1, 2), 0, 0)), NotIntegral);
  EXPECT_THROW(CongruenceLattice(1, 3), std::invalid_argument);
}

TEST(HeisProperties, GroupAxiomsAgainstMatrices) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + i % 3;
    const HeisPoint x = oracle::random_point(rng, n, 20);
    const HeisPoint y = oracle::random_point(rng, n, 20);
    const HeisPoint z = oracle::random_point(rng, n, 20);
    ASSERT_EQ(mul(mul(x, y), z), mul(x, mul(y, z)));
    ASSERT_EQ(mul(x, y), oracle::matrix_product({x, y}));
    ASSERT_EQ(mul(x, HeisPoint::identity(n)), x);
    ASSERT_EQ(mul(HeisPoint::identity(n), x), x);
    ASSERT_EQ(mul(x, inv(x)), HeisPoint::identity(n));
    ASSERT_EQ(mul(inv(x), x), HeisPoint::identity(n));
    ASSERT_TRUE(is_integral(mul(x, inv(y))));
  }
}

TEST(HeisProperties, LogExpInverse) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + i % 3;
    const HeisPoint x = oracle::random_point(rng, n, 50);
    const HeisLie y = oracle::random_lie(rng, n, 50);
    ASSERT_EQ(exp(log(x)), x);
    ASSERT_EQ(log(exp(y)), y);
    // Matrix logarithm oracle: central entry of log(I + N).
    ASSERT_EQ(oracle::matrix_log(oracle::to_matrix(x))[0][n + 1], log(x).d);
  }
}

TEST(HeisProperties, BchMatchesProduct) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + i % 3;
    const HeisPoint x = oracle::random_point(rng, n, 30);
    const HeisPoint y = oracle::random_point(rng, n, 30);
    ASSERT_EQ(log(mul(x, y)), bch(log(x), log(y)));
    const HeisLie u = oracle::random_lie(rng, n, 30);
    const HeisLie v = oracle::random_lie(rng, n, 30);
    ASSERT_EQ(exp(bch(u, v)), mul(exp(u), exp(v)));
    const HeisLie br = bracket(u, v);
    for (const auto& c : br.a) ASSERT_EQ(c, 0);
    for (const auto& c : br.b) ASSERT_EQ(c, 0);
  }
}

TEST(HeisProperties, CommutatorIsSymplectic) {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + i % 3;
    const HeisPoint x = oracle::random_point(rng, n, 30);
    const HeisPoint y = oracle::random_point(rng, n, 30);
    std::vector<Rational> u = x.a;
    u.insert(u.end(), x.b.begin(), x.b.end());
    std::vector<Rational> v = y.a;
    v.insert(v.end(), y.b.begin(), y.b.end());
    const HeisPoint c = commutator(x, y);
    ASSERT_EQ(c.c, symplectic_form(u, v));
    ASSERT_EQ(c, mul(mul(x, y), mul(inv(x), inv(y))));
    ASSERT_EQ(conjugate(x, y), mul(mul(x, y), inv(x)));
    ASSERT_EQ(pow(x, 3), mul(x, mul(x, x)));
    ASSERT_EQ(pow(x, -2), inv(mul(x, x)));
  }
}

TEST(HeisProperties, IotaDeltaOnEvenLattice) {
  std::mt19937_64 rng(35);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + i % 3;
    const Integer D = 2 * (1 + i % 4);
    const CongruenceLattice H(n, D);
    HeisPoint x = oracle::random_point(rng, n, 10);
    for (auto& v : x.a) v *= D;
    for (auto& v : x.b) v *= D;
    x.c *= D;
    ASSERT_EQ(iota(delta(x)), x);
    ASSERT_EQ(delta(iota(x)), x);
    ASSERT_TRUE(lattice_member(H, x));
    ASSERT_TRUE(lattice_member(H, iota(x)));
    ASSERT_TRUE(lattice_member(H, delta(x)));
  }
}
