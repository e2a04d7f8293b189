#include <gtest/gtest.h>

#include <random>

#include "rankiw/core/certified.hpp"
#include "rankiw/core/factor.hpp"
#include "rankiw/core/matrix.hpp"
#include "rankiw/core/numberfield.hpp"
#include "rankiw/core/qseries.hpp"

using namespace rankiw;

namespace {

UniPoly P(std::initializer_list<long> c) { return UniPoly::from_ints(c); }

std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

QMatrix random_matrix(size_t r, size_t c, long lo = -9, long hi = 9) {
  QMatrix m(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) m(i, j) = uniform(lo, hi);
  return m;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  Rational a = make_rational(6, -4);
  EXPECT_EQ(a.get_num(), -3);
  EXPECT_EQ(a.get_den(), 2);
  EXPECT_EQ(to_string(a), "-3/2");
  EXPECT_EQ(parse_rational("10/4"), Rational(5, 2));
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("abc"), DomainError);
  EXPECT_EQ(valuation(Integer(250), Integer(5)), 3);
  EXPECT_EQ(odd_part(Integer(-24)), 3);
  EXPECT_EQ(to_decimal(Rational(2, 3), 3, RoundDir::down), "0.666");
  EXPECT_EQ(to_decimal(Rational(2, 3), 3, RoundDir::up), "0.667");
  EXPECT_EQ(to_decimal(Rational(-2, 3), 2, RoundDir::down), "-0.67");
}

TEST(FactorPoly, DifferenceOfSquares) {
  auto f = factor_poly(P({-1, 0, 1}));
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].factor, P({-1, 1}));
  EXPECT_EQ(f.factors[1].factor, P({1, 1}));
  EXPECT_EQ(f.factors[0].multiplicity, 1);
  EXPECT_EQ(f.unit, 1);
}

TEST(FactorPoly, IrreducibleQuadratic) {
  auto f = factor_poly(P({-1, 1, 1}));
  ASSERT_EQ(f.factors.size(), 1u);
  EXPECT_EQ(f.factors[0].factor, P({-1, 1, 1}));
  EXPECT_TRUE(is_irreducible(P({-1, 1, 1})));
}

TEST(FactorPoly, ZeroIsDomainError) { EXPECT_THROW(factor_poly(UniPoly()), DomainError); }

TEST(FactorPoly, HardCases) {
  // x^4 + 1 is irreducible over Q but splits mod every prime.
  EXPECT_TRUE(is_irreducible(P({1, 0, 0, 0, 1})));
  // Swinnerton-Dyer style product (x^2-2)(x^2-3)
  auto f = factor_poly(P({6, 0, -5, 0, 1}));
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].factor, P({-3, 0, 1}));
  EXPECT_EQ(f.factors[1].factor, P({-2, 0, 1}));
  // repeated factors and non-monic input
  UniPoly g = Rational(3) * P({-1, 1}).pow(3) * P({1, 0, 1}) * P({0, 1});
  auto h = factor_poly(g);
  EXPECT_EQ(h.expand(), g);
  EXPECT_EQ(h.unit, 3);
}

TEST(FactorPoly, RandomProductsRoundTrip) {
  for (int t = 0; t < 200; ++t) {
    int deg = static_cast<int>(uniform(1, 6));
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i) c.emplace_back(uniform(-20, 20));
    if (c.back() == 0) c.back() = 1;
    UniPoly f(c);
    auto fac = factor_poly(f);
    EXPECT_EQ(fac.expand(), f) << f.to_string();
    for (const auto& fp : fac.factors) {
      EXPECT_TRUE(fp.factor.is_monic());
      EXPECT_TRUE(is_irreducible(fp.factor));
    }
    for (size_t i = 1; i < fac.factors.size(); ++i)
      EXPECT_TRUE(factor_order(fac.factors[i - 1], fac.factors[i]));
  }
}

TEST(SolveExact, SmallExamples) {
  auto r = solve_exact(QMatrix::identity(2), {Rational(1), Rational(2)});
  ASSERT_EQ(r.status, SolveStatus::unique);
  EXPECT_EQ(r.solution, (QVector{1, 2}));
  auto s = solve_exact(QMatrix::from_rows({{2}}), {Rational(1)});
  EXPECT_EQ(s.solution[0], Rational(1, 2));
  auto n = solve_exact(QMatrix::from_rows({{1, 1}, {1, 1}}), {Rational(1), Rational(2)});
  EXPECT_EQ(n.status, SolveStatus::no_solution);
  auto u = solve_exact(QMatrix::from_rows({{1, 1}}), {Rational(1)});
  EXPECT_EQ(u.status, SolveStatus::underdetermined);
  EXPECT_EQ(u.undetermined, (std::vector<size_t>{1}));
}

TEST(SolveExact, RandomSolvableSystems) {
  for (int t = 0; t < 100; ++t) {
    size_t n = static_cast<size_t>(uniform(1, 8));
    size_t m = n + static_cast<size_t>(uniform(0, 3));
    QMatrix a = random_matrix(m, n);
    QVector x(n);
    for (auto& v : x) v = make_rational(uniform(-30, 30), uniform(1, 7));
    QVector b = a * x;
    auto r = solve_exact(a, b);
    ASSERT_NE(r.status, SolveStatus::no_solution);
    EXPECT_EQ(a * r.solution, b);
  }
}

TEST(Charpoly, Examples) {
  EXPECT_EQ(charpoly(QMatrix::identity(2)), P({-1, 1}).pow(2));
  EXPECT_EQ(charpoly(QMatrix::from_rows({{0, 1}, {1, 0}})), P({-1, 0, 1}));
  EXPECT_THROW(charpoly(QMatrix(2, 3)), DomainError);
}

TEST(Charpoly, CayleyHamilton) {
  for (int t = 0; t < 60; ++t) {
    size_t n = static_cast<size_t>(uniform(1, 5));
    QMatrix a = random_matrix(n, n, -3, 3);
    if (t % 3 == 0) a(n - 1, 0) = 0;
    UniPoly f = charpoly(a);
    EXPECT_TRUE(f.is_monic());
    EXPECT_EQ(f.degree(), static_cast<int>(n));
    EXPECT_TRUE(eval_poly(f, a).is_zero());
  }
}

TEST(Kernel, RrefBasis) {
  QMatrix a = QMatrix::from_rows({{1, 2, 3}, {2, 4, 6}});
  Subspace k = kernel(a);
  EXPECT_EQ(k.dim(), 2u);
  EXPECT_TRUE((a * k.basis).is_zero());
  EXPECT_EQ(k.key_rows, (std::vector<size_t>{1, 2}));
}

TEST(NumberField, GoldenRatioArithmetic) {
  NumberField k(P({-1, -1, 1}));
  NFElem b = NFElem::generator(k);
  EXPECT_EQ(b * b, b + NFElem(k, Rational(1)));
  NFElem inv = b.inverse();
  EXPECT_EQ(inv, b - NFElem(k, Rational(1)));
  EXPECT_EQ(b.trace(), 1);
  EXPECT_EQ(b.charpoly(), P({-1, -1, 1}));
  EXPECT_THROW(NumberField(P({-1, 0, 1})), DomainError);
  EXPECT_THROW(NumberField(P({1, 2})), DomainError);
  NumberField other(P({-2, 0, 1}));
  EXPECT_THROW(b + NFElem::generator(other), DomainError);
}

TEST(NumberField, CanonicalPresentation) {
  // x^2 + 3x + 1 has discriminant 5
  NumberField k(P({1, 3, 1}));
  auto pres = canonical_presentation(k);
  EXPECT_EQ(pres.field.minpoly(), P({-1, -1, 1}));
  EXPECT_EQ(pres.old_generator.charpoly(), P({1, 3, 1}));
  NumberField j(P({-8, 0, 1}));
  auto pj = canonical_presentation(j);
  EXPECT_EQ(pj.field.minpoly(), P({-2, 0, 1}));
  EXPECT_EQ(pj.old_generator.charpoly(), P({-8, 0, 1}));
  NFElem y = NFElem::generator(k);
  NFElem z = y * y + Rational(5) * y;
  EXPECT_EQ(map_element(z, pres.old_generator).charpoly(), z.charpoly());
}

TEST(QSeries, Multiplication) {
  RationalSeries a({Rational(1, 2), Rational(1), Rational(0)});
  auto sq = series_mul(a, a);
  EXPECT_EQ(sq, RationalSeries({Rational(1, 4), Rational(1), Rational(1)}));
  RationalSeries one({Rational(1), Rational(0), Rational(0), Rational(0)});
  EXPECT_EQ(series_mul(a, one), a);
  EXPECT_EQ(series_mul(a, one).precision(), 3);
  EXPECT_THROW(a[3], CapError);
}

TEST(QSeries, RingAxiomsOnRandomTriples) {
  for (int t = 0; t < 30; ++t) {
    auto rnd = [] {
      std::vector<Rational> c;
      for (int i = 0; i < 8; ++i) c.push_back(make_rational(uniform(-5, 5), uniform(1, 3)));
      return RationalSeries(c);
    };
    RationalSeries a = rnd(), b = rnd(), c = rnd();
    EXPECT_EQ(series_mul(a, b), series_mul(b, a));
    EXPECT_EQ(series_mul(series_mul(a, b), c), series_mul(a, series_mul(b, c)));
  }
}

TEST(QSeries, NumberFieldCoefficients) {
  NumberField k(P({-1, -1, 1}));
  NumberField other(P({-2, 0, 1}));
  NFSeries a({NFElem(k, Rational(1)), NFElem::generator(k)});
  NFSeries b({NFElem(other, Rational(1)), NFElem::generator(other)});
  EXPECT_THROW(series_mul(a, b), DomainError);
  RationalSeries r({Rational(2), Rational(1)});
  auto m = series_mul(r, a);
  EXPECT_EQ(m[1], Rational(2) * NFElem::generator(k) + NFElem(k, Rational(1)));
}

TEST(Sturm, RootCounts) {
  UniPoly f = P({-1, -1, 1});  // roots (1 +- sqrt5)/2
  SturmChain s(f);
  EXPECT_EQ(s.count_real(), 2);
  EXPECT_EQ(s.count_in(Rational(0), Rational(2)), 1);
  EXPECT_EQ(s.count_in(Rational(-1), Rational(0)), 1);
  EXPECT_EQ(count_negative_roots(f), 1);
  EXPECT_EQ(count_negative_roots(P({0, 1})), 0);
  EXPECT_EQ(SturmChain(P({1, 0, 1})).count_real(), 0);
}

TEST(Certified, RamareBoundAtEleven) {
  CertifiedReal b = ramare_bound(11);
  EXPECT_EQ(b.lower_decimal(3), "3.905");
  EXPECT_LT(b.width(), Rational(1, 1000000000));
  EXPECT_TRUE(certified_less(Rational(1), b));
  EXPECT_FALSE(certified_less(Rational(4), b));
  EXPECT_THROW(certified_less(b.lower, b), UncertifiedComparison);
}
