#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ncp/arith.hpp"

using namespace ncp;

namespace {

// brute-force square test: a is a square mod p iff some x has x^2 = a
int legendre_by_search(std::int64_t a, std::int64_t p) {
  a = mod(a, p);
  if (a == 0) return 0;
  for (std::int64_t x = 1; x < p; ++x)
    if (x * x % p == a) return 1;
  return -1;
}

}  // namespace

TEST(QZ, Addition) {
  EXPECT_EQ(QZ(1, 8) + QZ(7, 8), QZ(0, 1));
  EXPECT_EQ(QZ(1, 4) + QZ(1, 6), QZ(5, 12));
  EXPECT_EQ(QZ(5, 12) + QZ(5, 12), QZ(5, 6));
  EXPECT_EQ((QZ(1, 8) + QZ(7, 8)).str(), "0/1");
}

TEST(QZ, ReducesModuloOne) {
  EXPECT_EQ(QZ(9, 8), QZ(1, 8));
  EXPECT_EQ(QZ(-1, 8), QZ(7, 8));
  EXPECT_EQ(QZ(6, -8).str(), "1/4");
}

TEST(QZ, Order) {
  EXPECT_EQ(QZ(3, 8).order(), 8);
  EXPECT_EQ(QZ(0, 1).order(), 1);
  EXPECT_EQ(QZ(5, 12).order(), 12);
}

TEST(QZ, PrimaryParts) {
  const auto parts = QZ(5, 12).p_primary();
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts.at(2), QZ(3, 4));
  EXPECT_EQ(parts.at(3), QZ(2, 3));
  EXPECT_TRUE(QZ(0, 1).p_primary().empty());
  const auto one = QZ(1, 8).p_primary();
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one.at(2), QZ(1, 8));
}

TEST(QZ, PrimaryPartsBySearch) {
  // independent oracle: the unique a/4 + b/3 equal to 5/12
  std::set<std::pair<int, int>> sols;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 3; ++b)
      if (QZ(a, 4) + QZ(b, 3) == QZ(5, 12)) sols.insert({a, b});
  ASSERT_EQ(sols.size(), 1u);
  const auto parts = QZ(5, 12).p_primary();
  EXPECT_EQ(parts.at(2), QZ(sols.begin()->first, 4));
  EXPECT_EQ(parts.at(3), QZ(sols.begin()->second, 3));
}

TEST(QZ, Parse) {
  EXPECT_EQ(QZ::parse("7/8"), QZ(7, 8));
  EXPECT_EQ(QZ::parse("3"), QZ(0, 1));
  EXPECT_THROW(QZ::parse("1/0"), InvalidArgument);
  EXPECT_THROW(QZ::parse("x"), InvalidArgument);
}

TEST(QZ, OrderOfSumDividesLcm) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t d1 = 1 + static_cast<std::int64_t>(rng() % 500);
    const std::int64_t d2 = 1 + static_cast<std::int64_t>(rng() % 500);
    const QZ x(static_cast<std::int64_t>(rng() % 1000), d1);
    const QZ y(static_cast<std::int64_t>(rng() % 1000), d2);
    EXPECT_EQ(lcm(x.order(), y.order()) % (x + y).order(), 0);
    QZ sum;
    for (const auto& [p, c] : x.p_primary()) {
      sum += c;
      EXPECT_EQ(factorize(static_cast<std::int64_t>(c.order())).size(), 1u);
    }
    EXPECT_EQ(sum, x);
  }
}

TEST(Valuation, Examples) {
  EXPECT_EQ(vp(48, 2), 4);
  EXPECT_EQ(vp(48, 5), 0);
  EXPECT_EQ(vp(8 * 9, 3), 2);
  EXPECT_EQ(vp(Integer(1) << 100, 2), 100);
}

TEST(Legendre, Examples) {
  EXPECT_EQ(legendre(11, 3), -1);
  EXPECT_EQ(legendre(1, 13), 1);
  EXPECT_EQ(legendre(3, 11), 1);
  EXPECT_EQ(legendre(22, 11), 0);
  EXPECT_EQ(legendre(-1, 7), -1);
  EXPECT_EQ(legendre(-1, 13), 1);
}

TEST(Legendre, MatchesSquareSearch) {
  for (std::int64_t p : primes_up_to(150)) {
    if (p == 2) continue;
    for (std::int64_t a = -60; a <= 60; ++a) EXPECT_EQ(legendre(a, p), legendre_by_search(a, p)) << a << " mod " << p;
  }
}

TEST(Legendre, Multiplicative) {
  std::mt19937_64 rng(11);
  const auto primes = primes_up_to(300);
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t p = primes[1 + rng() % (primes.size() - 1)];
    const std::int64_t a = static_cast<std::int64_t>(rng() % 2000) - 1000;
    const std::int64_t b = static_cast<std::int64_t>(rng() % 2000) - 1000;
    EXPECT_EQ(legendre(a * b, p), legendre(a, p) * legendre(b, p));
  }
}

TEST(PrimeField, PowerClassOrder) {
  const PrimeField F7(7);
  EXPECT_EQ(F7.power_class_order(2, 3), 3);
  EXPECT_EQ(F7.power_class_order(1, 3), 1);
  EXPECT_EQ(F7.power_class_order(6, 3), 1);
  EXPECT_EQ(F7.power_class_order(3, 3), 3);
  EXPECT_EQ(F7.power_class_order(3, 2), 2);
}

TEST(PrimeField, PowerClassOrderAgainstPowers) {
  for (std::int64_t q : primes_up_to(100)) {
    const PrimeField F(q);
    for (std::int64_t n = 1; n < q; ++n) {
      if ((q - 1) % n != 0) continue;
      std::set<std::int64_t> powers;
      for (std::int64_t x = 1; x < q; ++x) powers.insert(powmod(x, static_cast<std::uint64_t>(n), q));
      for (std::int64_t a = 1; a < q; ++a) {
        const std::int64_t o = F.power_class_order(a, n);
        EXPECT_EQ(n % o, 0);
        EXPECT_EQ(o == 1, powers.count(a) > 0) << a << " in F_" << q << ", n = " << n;
        // the order of the class: smallest k with a^k an n-th power
        std::int64_t k = 1;
        while (!powers.count(powmod(a, static_cast<std::uint64_t>(k), q))) ++k;
        EXPECT_EQ(o, k);
      }
    }
  }
}

TEST(PrimeField, Generator) {
  for (std::int64_t q : primes_up_to(200)) {
    const PrimeField F(q);
    EXPECT_EQ(multiplicative_order(F.generator(), q), q - 1);
  }
}

TEST(Arith, FactorizeAndPrimes) {
  const auto f = factorize(360);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0], (std::pair<std::int64_t, int>{2, 3}));
  EXPECT_EQ(f[1], (std::pair<std::int64_t, int>{3, 2}));
  EXPECT_EQ(f[2], (std::pair<std::int64_t, int>{5, 1}));
  EXPECT_EQ(primes_up_to(10), (std::vector<std::int64_t>{2, 3, 5, 7}));
  EXPECT_TRUE(is_prime(99991));
  EXPECT_FALSE(is_prime(99993));
}
