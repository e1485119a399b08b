#include <gtest/gtest.h>

#include <functional>
#include <vector>

#include "combid/exact_arith.hpp"
#include "combid/rational.hpp"

using namespace combid;

namespace {

// Counts set partitions of {0..size-1} into `blocks` blocks in which the
// first `distinct` elements lie in different blocks (restricted growth strings).
long long count_partitions(int size, int blocks, int distinct) {
  std::vector<int> label(size, 0);
  long long count = 0;
  std::function<void(int, int)> go = [&](int i, int used) {
    if (i == size) {
      if (used == blocks) ++count;
      return;
    }
    if (i < distinct) {
      label[i] = used;
      go(i + 1, used + 1);
      return;
    }
    for (int b = 0; b <= used && b < blocks; ++b) {
      label[i] = b;
      go(i + 1, std::max(used, b + 1));
    }
  };
  go(0, 0);
  return count;
}

}  // namespace

TEST(Factorial, SmallValuesAgainstMachineProduct) {
  unsigned long long f = 1;
  for (int n = 0; n <= 20; ++n) {
    if (n > 0) f *= static_cast<unsigned long long>(n);
    EXPECT_EQ(factorial(n), Integer(f)) << n;
  }
  EXPECT_EQ(factorial(25), Integer("15511210043330985984000000"));
  EXPECT_THROW(factorial(-1), DomainError);
}

TEST(Binomial, PascalTriangleUpTo60) {
  std::vector<std::vector<Integer>> rows{{1}};
  for (int i = 1; i <= 60; ++i) {
    std::vector<Integer> row(i + 1, 1);
    for (int j = 1; j < i; ++j) row[j] = rows[i - 1][j - 1] + rows[i - 1][j];
    rows.push_back(row);
  }
  for (int i = 0; i <= 60; ++i)
    for (int j = -2; j <= i + 2; ++j) {
      Integer want = (j < 0 || j > i) ? Integer(0) : rows[i][j];
      ASSERT_EQ(binom_int(i, j), want) << i << "," << j;
      if (j >= 0) ASSERT_EQ(binom_rational(Rational(i), j), Rational(want)) << i << "," << j;
    }
}

TEST(Binomial, RationalUpperIndexSatisfiesPascal) {
  const std::vector<Rational> uppers{Rational(1, 2), Rational(-7, 3), Rational(11, 4), Rational(-5), Rational(0)};
  for (const auto& a : uppers)
    for (int j = 1; j <= 12; ++j)
      ASSERT_EQ(binom_rational(a, j), binom_rational(a - 1, j - 1) + binom_rational(a - 1, j)) << a << "," << j;
}

TEST(Binomial, KnownRationalValues) {
  EXPECT_EQ(binom_rational(Rational(1, 2), 2), Rational(-1, 8));
  EXPECT_EQ(binom_rational(Rational(1, 2), 3), Rational(1, 16));
  for (int j = 0; j <= 10; ++j) EXPECT_EQ(binom_rational(Rational(-1), j), Rational(j % 2 ? -1 : 1));
  EXPECT_EQ(binom_rational(Rational(3), 5), Rational(0));
  EXPECT_THROW(binom_rational(Rational(3), -1), DomainError);
  EXPECT_THROW(inv_binom(Rational(3), 5), PoleError);
  EXPECT_EQ(inv_binom(Rational(7, 2), 2), Rational(8, 35));
}

TEST(Stirling, RecurrenceAndBoundary) {
  for (int m = 1; m <= 25; ++m)
    for (int k = 1; k <= m; ++k)
      ASSERT_EQ(stirling2(m, k), Integer(k) * stirling2(m - 1, k) + stirling2(m - 1, k - 1)) << m << "," << k;
  EXPECT_EQ(stirling2(0, 0), 1);
  for (int m = 1; m <= 10; ++m) {
    EXPECT_EQ(stirling2(m, 0), 0);
    EXPECT_EQ(stirling2(m, m), 1);
    EXPECT_EQ(stirling2(m, m + 1), 0);
  }
  EXPECT_EQ(stirling2(10, 3), 9330);
  EXPECT_THROW(stirling2(-1, 0), DomainError);
}

TEST(Stirling, MatchesPartitionCount) {
  for (int m = 0; m <= 9; ++m)
    for (int k = 0; k <= m; ++k) ASSERT_EQ(stirling2(m, k), Integer(count_partitions(m, k, 0))) << m << "," << k;
}

TEST(RStirling, ZeroDistinguishedReducesToStirling) {
  for (int m = 0; m <= 30; ++m)
    for (int k = 0; k <= m + 1; ++k) ASSERT_EQ(r_stirling2(m, k, 0), stirling2(m, k)) << m << "," << k;
}

TEST(RStirling, Recurrence) {
  // S_v(m+v, k+v) = (k+v) S_v(m-1+v, k+v) + S_v(m-1+v, k-1+v)
  for (int v = 0; v <= 8; ++v)
    for (int m = 1; m <= 15; ++m)
      for (int k = 1; k <= m; ++k)
        ASSERT_EQ(r_stirling2(m, k, v), Integer(k + v) * r_stirling2(m - 1, k, v) + r_stirling2(m - 1, k - 1, v))
            << m << "," << k << "," << v;
  for (int v = 0; v <= 8; ++v) {
    EXPECT_EQ(r_stirling2(0, 0, v), 1);
    for (int m = 1; m <= 8; ++m) EXPECT_EQ(r_stirling2(m, 0, v), boost::multiprecision::pow(Integer(v), m));
  }
}

TEST(RStirling, MatchesRestrictedPartitionCount) {
  for (int v = 0; v <= 3; ++v)
    for (int m = 0; m + v <= 9; ++m)
      for (int k = 0; k <= m; ++k)
        ASSERT_EQ(r_stirling2(m, k, v), Integer(count_partitions(m + v, k + v, v))) << m << "," << k << "," << v;
}

TEST(AlternatingPowerSum, VanishesBelowDegreeAndEqualsSignedFactorialAtDegree) {
  for (int v = -3; v <= 5; ++v)
    for (int u = 0; u <= 9; ++u) {
      for (int m = 0; m < u; ++m) ASSERT_EQ(alternating_power_sum(u, v, m), 0) << u << "," << v << "," << m;
      ASSERT_EQ(alternating_power_sum(u, v, u), (u % 2 ? -1 : 1) * factorial(u)) << u << "," << v;
    }
  EXPECT_THROW(alternating_power_sum(-1, 0, 2), DomainError);
}

TEST(RationalHelpers, ParseAndPrint) {
  EXPECT_EQ(*parse_rational("7/2"), Rational(7, 2));
  EXPECT_EQ(*parse_rational("-14/4"), Rational(-7, 2));
  EXPECT_FALSE(parse_rational("7/0"));
  EXPECT_FALSE(parse_rational("abc"));
  EXPECT_EQ(to_string(Rational(-7, 2)), "-7/2");
  EXPECT_EQ(to_string(Rational(4)), "4");
  EXPECT_EQ(combid::pow(Rational(2, 3), -2), Rational(9, 4));
  EXPECT_EQ(combid::floor(Rational(-7, 2)), Rational(-4));
  EXPECT_THROW(to_int64(Rational(1, 2)), Error);
}
