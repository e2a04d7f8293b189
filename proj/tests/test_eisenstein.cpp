#include <gtest/gtest.h>

#include "rankiw/eisenstein.hpp"

using namespace rankiw;

TEST(Weight1, LevelElevenGolden) {
  auto g = weight1_eisenstein(quadratic_character(11), 6);
  EXPECT_EQ(to_string(g.expansion), "1/2 + q + 2*q^3 + q^4 + 2*q^5 + O(q^6)");
  EXPECT_EQ(g.expansion[2], 0);
  EXPECT_EQ(g.weight, 1);
}

TEST(Weight1, LevelSixtySeven) {
  auto g = weight1_eisenstein(quadratic_character(67), 6).expansion;
  EXPECT_EQ(g[0], Rational(1, 2));
  EXPECT_EQ(g[2], 0);  // 2 is a nonresidue mod 67
  EXPECT_EQ(g[4], 1);
}

TEST(Weight1, RequiresOddQuadratic) {
  EXPECT_THROW(weight1_eisenstein(quadratic_character(13), 6), DomainError);
  EXPECT_THROW(weight1_eisenstein(trivial_character(11), 6), DomainError);
  EXPECT_THROW(weight1_eisenstein(quadratic_character(11), 1), DomainError);
}

TEST(Weight1, PropertiesUpTo200) {
  for (long n : primes_up_to(200)) {
    if (n % 4 != 3) continue;
    auto chi = quadratic_character(n);
    auto g = weight1_eisenstein(chi, 201).expansion;
    EXPECT_EQ(g[0], l_value_at_zero(chi) / 2) << n;
    EXPECT_EQ(g[1], 1);
    for (int a = 1; a <= 200; ++a) {
      ASSERT_GE(g[a], 0);
      ASSERT_LE(g[a], static_cast<long>(divisors(a).size()));
      for (int b = 1; a * b <= 200; ++b)
        if (std::gcd(a, b) == 1) {
          ASSERT_EQ(g[a * b], g[a] * g[b]) << n << ": " << a << "*" << b;
        }
    }
  }
}

TEST(Weight2, LevelElevenGolden) {
  auto e = weight2_eisenstein(11, 12).expansion;
  EXPECT_EQ(to_string(e.truncate(6)), "5/12 + q + 3*q^2 + 4*q^3 + 7*q^4 + 6*q^5 + O(q^6)");
  EXPECT_EQ(e[11], 1);
}

TEST(Weight2, ConstantTerm) {
  EXPECT_EQ(weight2_eisenstein(67, 3).expansion[0], Rational(11, 4));
  for (long n : {3L, 7L, 19L, 199L}) EXPECT_EQ(weight2_eisenstein(n, 2).expansion[0], make_rational(n - 1, 24));
}

TEST(Weight2, NormalizedAndMultiplicativeAwayFromLevel) {
  for (long n : {11L, 43L}) {
    auto e = weight2_eisenstein(n, 150).expansion;
    EXPECT_EQ(e[1], 1);
    for (int a = 1; a < 150; ++a)
      for (int b = 1; a * b < 150; ++b)
        if (std::gcd(a, b) == 1) {
          ASSERT_EQ(e[a * b], e[a] * e[b]);
        }
  }
}

TEST(Weight2, RejectsCompositeLevel) { EXPECT_THROW(weight2_eisenstein(12, 5), DomainError); }
