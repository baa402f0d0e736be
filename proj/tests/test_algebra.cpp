#include <gtest/gtest.h>

#include <random>

#include "orbitsym/cyclotomic.hpp"
#include "orbitsym/error.hpp"
#include "orbitsym/matrix.hpp"

using namespace orbitsym;

TEST(Rational, ParseAndNormalize) {
  EXPECT_EQ(Rational::parse("6/4"), Rational(3) / Rational(2));
  EXPECT_EQ(Rational::parse("-2/4").str(), "-1/2");
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("x"), Error);
}

TEST(Cyclotomic, RootProducts) {
  Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
  EXPECT_EQ(i * i, Cyclotomic(-1));
  Cyclotomic w = Cyclotomic::root_of_unity(3, 1);
  EXPECT_TRUE((Cyclotomic(1) + w + w * w).is_zero());
}

TEST(Cyclotomic, MixedConductors) {
  Cyclotomic a = Cyclotomic::root_of_unity(4, 1);
  Cyclotomic b = Cyclotomic::root_of_unity(3, 1);
  Cyclotomic c = a * b;
  EXPECT_EQ(c.conductor(), 12);
  EXPECT_EQ(c, Cyclotomic::root_of_unity(12, 7));
  EXPECT_EQ(a.embed(12), Cyclotomic::root_of_unity(12, 3));
}

TEST(Cyclotomic, ConjugationAndGalois) {
  Cyclotomic z = Cyclotomic::root_of_unity(5, 1);
  EXPECT_EQ(z.conj(), Cyclotomic::root_of_unity(5, 4));
  EXPECT_EQ(z.galois(2), Cyclotomic::root_of_unity(5, 2));
  Cyclotomic s = z + z.conj();
  EXPECT_FALSE(s.rational().has_value());
  Cyclotomic sum;
  for (int k = 1; k < 5; ++k) sum += Cyclotomic::root_of_unity(5, k);
  EXPECT_EQ(sum.rational(), Rational(-1));
}

TEST(Cyclotomic, FieldAxiomsRandom) {
  std::mt19937_64 rng(7);
  auto random_value = [&](int n) {
    std::vector<std::pair<long, Rational>> t;
    for (int k = 0; k < n; ++k) t.emplace_back(k, Rational(static_cast<long>(rng() % 7) - 3));
    return Cyclotomic::from_terms(n, t);
  };
  for (int n : {1, 2, 4, 6, 8, 9, 12, 15}) {
    for (int trial = 0; trial < 20; ++trial) {
      Cyclotomic a = random_value(n), b = random_value(n), c = random_value(n);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
      EXPECT_EQ(a - a, Cyclotomic());
    }
  }
}

TEST(Cyclotomic, IntegerExponentReduction) {
  std::vector<long> by_exp(6, 0);
  by_exp[0] = 1;
  by_exp[2] = 1;
  by_exp[4] = 1;
  for (long c : reduce_integer_exponents(6, by_exp)) EXPECT_EQ(c, 0);
}

TEST(Matrix, RankOfDependentRows) {
  auto m = RationalMatrix::from_rows({{1, 2}, {2, 4}});
  EXPECT_EQ(mat_rank(m), 1);
  EXPECT_FALSE(mat_inverse(m).has_value());
  EXPECT_EQ(mat_kernel(m).size(), 1u);
}

TEST(Matrix, SolveRotation) {
  auto r = RationalMatrix::from_rows({{0, -1}, {1, 0}});
  auto x = mat_solve(r, RationalVector{Rational(1), Rational(0)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, (RationalVector{Rational(0), Rational(-1)}));
  auto inv = mat_inverse(r);
  ASSERT_TRUE(inv.has_value());
  EXPECT_TRUE((*inv * r).is_identity());
}

TEST(Matrix, InconsistentSystem) {
  auto m = RationalMatrix::from_rows({{1, 1}, {1, 1}});
  EXPECT_FALSE(mat_solve(m, RationalVector{Rational(1), Rational(2)}).has_value());
  EXPECT_THROW(mat_solve(m, RationalVector{Rational(1)}), Error);
}
