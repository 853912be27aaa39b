#include <gtest/gtest.h>

#include <random>

#include "coclass/constructions/constructions.hpp"
#include "coclass/maps/identities.hpp"
#include "coclass/maps/linear_map.hpp"
#include "oracles.hpp"

using namespace coclass;
using namespace coclass::maps;
using coclass::constructions::dim5_example;
using coclass::constructions::filiform;
using coclass::constructions::heisenberg;
using linalg::PrimeField;
using Map = LinearMap<PrimeField>;

namespace {

const PrimeField F3(3);

Map dim5_beta1(const PrimeField& f) {
  return Map::from_integer_images(
      f, {{0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 0, 1}});
}

Map dim5_beta2(const PrimeField& f) {
  return Map::from_integer_images(
      f, {{1, 0, 0, 1, 0}, {0, 1, 0, 0, 0}, {0, -1, -1, 0, 0}, {0, 0, 0, -1, 0}, {0, 0, 0, 0, 1}});
}

/// [f(x), x] = 0 for every x in F_p^n, by enumeration.
bool commutes_everywhere(const algebra::LieAlgebra<PrimeField>& L, const Map& f) {
  for (const auto& x : oracle::all_vectors(L.field(), L.dim()))
    if (!linalg::is_zero(L.field(), L.bracket(f(x), x))) return false;
  return true;
}

}  // namespace

TEST(Homomorphism, IdentityAndScalar) {
  const PrimeField f5(5);
  auto H = heisenberg(2, 1, f5);
  EXPECT_TRUE(is_homomorphism(H, Map::identity(f5, 5)).clean());
  auto two = Map(linalg::Matrix<PrimeField>::from_integers(
      f5, {{2, 0, 0, 0, 0}, {0, 2, 0, 0, 0}, {0, 0, 2, 0, 0}, {0, 0, 0, 2, 0}, {0, 0, 0, 0, 2}}));
  auto r = is_homomorphism(H, two);
  EXPECT_EQ(r.kind, DefectKind::not_homomorphism);
  ASSERT_FALSE(r.clean());
  EXPECT_EQ(r.witnesses[0].indices, (std::vector<std::size_t>{0, 1}));
  // f([u1,u2]) - [f(u1), f(u2)] = 2 z1 - 4 z1
  EXPECT_EQ(r.witnesses[0].residual, linalg::vector_from_integers(f5, {0, 0, 0, 0, -2}));
  EXPECT_TRUE(is_homomorphism(dim5_example(F3), dim5_beta1(F3)).clean());
}

TEST(Automorphism, SingularAndNamedMaps) {
  auto D = dim5_example(F3);
  EXPECT_TRUE(is_automorphism(D, Map::identity(F3, 5)).clean());
  auto zero = Map(linalg::Matrix<PrimeField>(F3, 5, 5));
  auto r = is_automorphism(D, zero);
  EXPECT_EQ(r.kind, DefectKind::not_invertible);
  EXPECT_FALSE(r.clean());
  EXPECT_TRUE(is_automorphism(D, dim5_beta2(F3)).clean());
}

TEST(Commuting, Dim5Maps) {
  auto D = dim5_example(F3);
  EXPECT_TRUE(is_commuting(D, Map::identity(F3, 5)));
  EXPECT_TRUE(is_commuting(D, dim5_beta1(F3)));
  EXPECT_TRUE(is_commuting(D, dim5_beta2(F3)));
  auto prod = compose(dim5_beta1(F3), dim5_beta2(F3));
  EXPECT_EQ(prod(linalg::unit_vector(F3, 5, 0)), linalg::vector_from_integers(F3, {0, 1, 1, 0, 0}));
  EXPECT_FALSE(is_commuting(D, prod));
  auto x1 = linalg::unit_vector(F3, 5, 0);
  EXPECT_EQ(D.bracket(x1, prod(x1)), linalg::unit_vector(F3, 5, 4));
  auto defect = commuting_defect(D, prod);
  ASSERT_FALSE(defect.clean());
  EXPECT_EQ(defect.witnesses[0].indices, (std::vector<std::size_t>{0}));
}

TEST(Commuting, PrintedHeisenbergMapFailsAtPairU2U3) {
  auto H = heisenberg(2, 1, F3);
  auto printed = Map::from_integer_images(
      F3, {{1, 0, 0, 1, 0}, {0, 1, 0, 0, 0}, {-1, 0, -1, 0, 0}, {0, 0, 0, -1, 0}, {0, 0, 0, 0, 1}});
  auto r = commuting_defect(H, printed);
  bool found = false;
  for (const auto& w : r.witnesses) {
    if (w.indices == std::vector<std::size_t>{1, 2}) {
      found = true;
      EXPECT_EQ(w.residual, linalg::vector_from_integers(F3, {0, 0, 0, 0, -1}));
    }
  }
  EXPECT_TRUE(found);
  EXPECT_FALSE(commutes_everywhere(H, printed));
}

TEST(Commuting, BasisDecompositionMatchesEnumeration) {
  std::mt19937 rng(23);
  for (auto L : {heisenberg(1, 1, F3), dim5_example(F3), filiform(4, F3)}) {
    const std::size_t n = L.dim();
    int agreeing_commuting = 0;
    for (int trial = 0; trial < 300; ++trial) {
      linalg::Matrix<PrimeField> m = linalg::Matrix<PrimeField>::identity(F3, n);
      // Sparse perturbations of the identity hit commuting maps often enough.
      for (int k = 0; k < 1 + trial % 3; ++k) m(rng() % n, rng() % n) = rng() % 3;
      Map f(m);
      const bool basis = commuting_defect(L, f).clean();
      EXPECT_EQ(basis, commutes_everywhere(L, f));
      agreeing_commuting += basis;
    }
    EXPECT_GT(agreeing_commuting, 0);
  }
}

TEST(Central, NamedMaps) {
  for (std::size_t n = 4; n <= 7; ++n) {
    auto L = filiform(n, F3);
    auto m = linalg::Matrix<PrimeField>::identity(F3, n);
    m(n - 1, 1) = 1;  // v -> v + v_{n-2}
    auto r = is_central(L, Map(m));
    EXPECT_TRUE(r.clean()) << n;
    EXPECT_TRUE(is_commuting(L, Map(m)));
  }
  auto D = dim5_example(F3);
  EXPECT_TRUE(is_central(D, Map::identity(F3, 5)).clean());
  auto r = is_central(D, dim5_beta1(F3));
  EXPECT_EQ(r.kind, DefectKind::not_central);
  EXPECT_FALSE(r.clean());
}

TEST(Compose, InverseAndOrder) {
  auto b1 = dim5_beta1(F3);
  EXPECT_EQ(compose(b1, b1), Map::identity(F3, 5));
  auto b2 = dim5_beta2(F3);
  EXPECT_EQ(compose(b2, inverse(b2)), Map::identity(F3, 5));
  EXPECT_TRUE(is_commuting(dim5_example(F3), inverse(b2)));
  EXPECT_THROW(inverse(Map(linalg::Matrix<PrimeField>(F3, 2, 2))), MapError);
}

TEST(IdentitySuite, HoldsForCommutingMaps) {
  auto D = dim5_example(F3);
  for (const auto& f : {Map::identity(F3, 5), dim5_beta1(F3), dim5_beta2(F3)}) {
    auto report = lemma_identity_suite(D, f);
    EXPECT_TRUE(report.clean());
    EXPECT_GT(report.checks, 0u);
  }
  auto L = filiform(6, F3);
  EXPECT_TRUE(lemma_identity_suite(L, Map::identity(F3, 6)).clean());
}

TEST(IdentitySuite, RejectsNonCommutingInput) {
  auto D = dim5_example(F3);
  EXPECT_THROW(lemma_identity_suite(D, compose(dim5_beta1(F3), dim5_beta2(F3))), MapError);
}

TEST(IdentitySuite, RationalField) {
  const linalg::RationalField q;
  auto D = dim5_example(q);
  auto b2 = LinearMap<linalg::RationalField>::from_integer_images(
      q, {{1, 0, 0, 1, 0}, {0, 1, 0, 0, 0}, {0, -1, -1, 0, 0}, {0, 0, 0, -1, 0}, {0, 0, 0, 0, 1}});
  EXPECT_TRUE(is_commuting(D, b2));
  EXPECT_TRUE(lemma_identity_suite(D, b2).clean());
}

TEST(IdentitySuite, DetectsViolationsOnANonCommutingMap) {
  auto D = dim5_example(F3);
  auto bad = compose(dim5_beta1(F3), dim5_beta2(F3));
  auto report = evaluate_identities(D, bad);
  ASSERT_FALSE(report.clean());
  bool first_i = false;
  for (const auto& v : report.violations) first_i |= v.identity == Identity::first_i;
  EXPECT_TRUE(first_i);
  EXPECT_EQ(std::string(to_string(DefectKind::not_commuting)), "not_commuting");
  EXPECT_EQ(to_string(Identity::second_iv), "second_iv");
}

TEST(IdentitySuite, CompiledEvaluationMatchesDirect) {
  std::mt19937 rng(7);
  for (auto L : {dim5_example(F3), heisenberg(2, 1, F3), filiform(6, F3)}) {
    const std::size_t n = L.dim();
    IdentityContext<PrimeField> ctx(L);
    for (int trial = 0; trial < 40; ++trial) {
      linalg::Matrix<PrimeField> m(F3, n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rng() % 3;
      Map f(m);
      auto direct = evaluate_identities(L, f);
      auto compiled = evaluate_identities(L, f, ctx);
      EXPECT_EQ(direct.checks, compiled.checks);
      ASSERT_EQ(direct.violations.size(), compiled.violations.size());
      for (std::size_t v = 0; v < direct.violations.size(); ++v) {
        EXPECT_EQ(direct.violations[v].identity, compiled.violations[v].identity);
        EXPECT_EQ(direct.violations[v].indices, compiled.violations[v].indices);
        EXPECT_EQ(direct.violations[v].residual, compiled.violations[v].residual);
      }
    }
  }
}
