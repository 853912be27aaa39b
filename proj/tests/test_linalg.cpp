#include <gtest/gtest.h>

#include <random>

#include "coclass/linalg/subspace.hpp"
#include "oracles.hpp"

using namespace coclass;
using namespace coclass::linalg;
using coclass::oracle::all_vectors;

namespace {

const PrimeField F3(3);

Matrix<PrimeField> random_matrix(const PrimeField& f, std::size_t r, std::size_t c,
                                 std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, f.modulus() - 1);
  Matrix<PrimeField> m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST(Field, RejectsCharacteristicTwoAndComposites) {
  EXPECT_THROW(FieldSpec::prime(2), FieldError);
  EXPECT_THROW(FieldSpec::prime(9), FieldError);
  EXPECT_THROW(FieldSpec::prime(1), FieldError);
  EXPECT_THROW(PrimeField(65537), FieldError);
  EXPECT_NO_THROW(FieldSpec::prime(7));
  EXPECT_TRUE(FieldSpec::rational().is_rational());
}

TEST(Field, PrimeArithmeticIsCanonical) {
  const PrimeField f(7);
  EXPECT_EQ(f.from_int(-1), 6u);
  EXPECT_EQ(f.from_int(15), 1u);
  for (std::uint32_t a = 1; a < 7; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  EXPECT_EQ(f.symmetric(6), -1);
  EXPECT_EQ(*f.from_rational(Rational(1, 2)), 4u);
  EXPECT_FALSE(f.from_rational(Rational(1, 7)).has_value());
}

TEST(Field, RationalsStayReduced) {
  const RationalField q;
  auto x = q.add(Rational(1, 6), Rational(1, 3));
  EXPECT_EQ(x, Rational(1, 2));
  EXPECT_EQ(q.to_string(q.neg(Rational(2, 4))), "-1/2");
  EXPECT_THROW(q.inv(Rational(0)), std::domain_error);
}

TEST(Rref, FixedPoints) {
  auto id = Matrix<PrimeField>::identity(F3, 3);
  EXPECT_EQ(rref(id), id);
  Matrix<PrimeField> z(F3, 2, 4);
  EXPECT_EQ(rref(z), z);
}

TEST(Rref, TwoByTwoOverF3) {
  auto m = Matrix<PrimeField>::from_integers(F3, {{2, 1}, {1, 2}});
  EXPECT_EQ(rref(m), Matrix<PrimeField>::from_integers(F3, {{1, 2}, {0, 0}}));
  EXPECT_EQ(rank(m), 1u);
}

TEST(Rref, IdempotentAndRankNullity) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + trial % 5, c = 1 + (trial / 5) % 6;
    auto m = random_matrix(F3, r, c, rng);
    auto once = rref(m);
    EXPECT_EQ(rref(once), once);
    EXPECT_EQ(rank(m) + kernel(m).dim(), c);
    EXPECT_EQ(Subspace<PrimeField>::row_space(m), Subspace<PrimeField>::row_space(once));
  }
}

TEST(Kernel, TrivialCases) {
  EXPECT_TRUE(kernel(Matrix<PrimeField>::identity(F3, 4)).is_zero());
  auto k = kernel(Matrix<PrimeField>(F3, 2, 3));
  EXPECT_TRUE(k.is_full());
}

TEST(Kernel, MatchesExhaustiveEnumeration) {
  auto m = Matrix<PrimeField>::from_integers(F3, {{1, 1, 0}});
  auto k = kernel(m);
  EXPECT_EQ(k.dim(), 2u);
  EXPECT_EQ(k, Subspace<PrimeField>::span(F3, 3, {vector_from_integers(F3, {1, 2, 0}),
                                                 vector_from_integers(F3, {0, 0, 1})}));
  std::size_t count = 0;
  for (const auto& v : all_vectors(F3, 3)) {
    const bool in_kernel = is_zero(F3, linalg::apply(m, v));
    EXPECT_EQ(in_kernel, k.contains(v));
    count += in_kernel;
  }
  EXPECT_EQ(count, 9u);
}

TEST(SolveAffine, TrivialCases) {
  auto b = vector_from_integers(F3, {2, 1});
  auto s = solve_affine(Matrix<PrimeField>::identity(F3, 2), b);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->particular, b);
  EXPECT_TRUE(s->homogeneous.is_zero());
  EXPECT_FALSE(solve_affine(Matrix<PrimeField>(F3, 2, 2), b).has_value());
}

TEST(SolveAffine, SingleEquationOverF3) {
  auto m = Matrix<PrimeField>::from_integers(F3, {{1, 1}});
  auto s = solve_affine(m, vector_from_integers(F3, {1}));
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->particular, vector_from_integers(F3, {1, 0}));
  EXPECT_EQ(s->homogeneous,
            Subspace<PrimeField>::span(F3, 2, {vector_from_integers(F3, {1, 2})}));
  std::vector<Vector<PrimeField>> brute;
  for (const auto& v : all_vectors(F3, 2))
    if (linalg::apply(m, v) == vector_from_integers(F3, {1})) brute.push_back(v);
  ASSERT_EQ(brute.size(), 3u);
  for (const auto& v : brute) EXPECT_TRUE(s->homogeneous.contains(sub(F3, v, s->particular)));
}

TEST(SolveAffine, AgreesWithEnumerationOnRandomSystems) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto m = random_matrix(F3, 1 + trial % 3, 3, rng);
    Vector<PrimeField> b(m.rows());
    for (auto& x : b) x = rng() % 3;
    auto s = solve_affine(m, b);
    std::size_t brute = 0;
    for (const auto& v : all_vectors(F3, 3)) {
      if (linalg::apply(m, v) != b) continue;
      ++brute;
      ASSERT_TRUE(s.has_value());
      EXPECT_TRUE(s->homogeneous.contains(sub(F3, v, s->particular)));
    }
    std::size_t expected = 0;
    if (s) {
      expected = 1;
      for (std::size_t i = 0; i < s->homogeneous.dim(); ++i) expected *= 3;
    }
    EXPECT_EQ(brute, expected);
  }
}

TEST(Subspace, SumIntersectContains) {
  auto e = [](std::size_t i) { return unit_vector(F3, 3, i); };
  using S = Subspace<PrimeField>;
  EXPECT_EQ(subspace_sum(S::span(F3, 3, {e(0)}), S::span(F3, 3, {e(1)})),
            S::span(F3, 3, {e(0), e(1)}));
  EXPECT_EQ(subspace_intersect(S::span(F3, 3, {e(0), e(1)}), S::span(F3, 3, {e(1), e(2)})),
            S::span(F3, 3, {e(1)}));
  auto line = S::span(F3, 2, {vector_from_integers(F3, {1, 1})});
  EXPECT_TRUE(contains(line, vector_from_integers(F3, {2, 2})));
  EXPECT_FALSE(contains(line, vector_from_integers(F3, {1, 2})));
}

TEST(Subspace, DimensionFormulaAndMembershipOracle) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = Subspace<PrimeField>::row_space(random_matrix(F3, trial % 3 + 1, 3, rng));
    auto b = Subspace<PrimeField>::row_space(random_matrix(F3, (trial / 3) % 3 + 1, 3, rng));
    auto s = subspace_sum(a, b);
    auto i = subspace_intersect(a, b);
    EXPECT_EQ(s.dim() + i.dim(), a.dim() + b.dim());
    for (const auto& v : all_vectors(F3, 3)) {
      EXPECT_EQ(i.contains(v), a.contains(v) && b.contains(v));
    }
  }
}

TEST(Invert, InverseTimesMatrixIsIdentity) {
  std::mt19937 rng(3);
  const PrimeField f(5);
  int invertible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto m = random_matrix(f, 4, 4, rng);
    auto inv = invert(m);
    EXPECT_EQ(inv.has_value(), is_invertible(m));
    if (!inv) continue;
    ++invertible;
    EXPECT_EQ(multiply(*inv, m), (Matrix<PrimeField>::identity(f, 4)));
  }
  EXPECT_GT(invertible, 0);
  EXPECT_FALSE(invert(Matrix<PrimeField>(f, 2, 2)).has_value());
}

TEST(Invert, RationalMatrix) {
  const RationalField q;
  auto m = Matrix<RationalField>::from_integers(q, {{2, 1}, {1, 1}});
  auto inv = invert(m);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(*inv, (Matrix<RationalField>::from_integers(q, {{1, -1}, {-1, 2}})));
}
