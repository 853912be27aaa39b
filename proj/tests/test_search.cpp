#include <gtest/gtest.h>

#include <algorithm>

#include "coclass/constructions/catalog.hpp"
#include "coclass/constructions/constructions.hpp"
#include "coclass/maps/identities.hpp"
#include "coclass/search/closure.hpp"
#include "coclass/search/enumerate.hpp"

using namespace coclass;
using namespace coclass::search;
using coclass::constructions::abelian;
using coclass::constructions::dim5_example;
using coclass::constructions::filiform;
using coclass::constructions::heisenberg;

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

EnumerationOptions no_short_circuit() {
  EnumerationOptions o;
  o.short_circuit_abelian = false;
  return o;
}

}  // namespace

TEST(GeneralLinear, Orders) {
  EXPECT_EQ(general_linear_order(2, 3), BigInt(48));
  EXPECT_EQ(general_linear_order(3, 3), BigInt(11232));
  EXPECT_EQ(general_linear_order(1, 7), BigInt(6));
}

TEST(BruteForce, AbelianAutomorphismsAreGL) {
  EXPECT_EQ(enumerate_aut_bruteforce(abelian(2, F3)).size(), BigInt(48));
  EXPECT_EQ(enumerate_aut_bruteforce(abelian(3, F3)).size(), BigInt(11232));
  auto h = enumerate_aut_bruteforce(heisenberg(1, 1, F3));
  EXPECT_GT(h.members.size(), 0u);
  EXPECT_LT(h.size(), general_linear_order(3, 3));
}

TEST(BruteForce, RefusesOversizedSearch) {
  EXPECT_THROW(enumerate_aut_bruteforce(filiform(4, F3)), BudgetExceeded);
}

TEST(Central, AbelianPlaneHas48) {
  auto c = enumerate_central(abelian(2, F3), no_short_circuit());
  EXPECT_FALSE(c.symbolic);
  EXPECT_EQ(c.size(), BigInt(48));
  auto s = enumerate_central(abelian(2, F3));
  EXPECT_TRUE(s.symbolic);
  EXPECT_EQ(s.size(), BigInt(48));
  EXPECT_TRUE(sets_equal(c, s).equal);
}

TEST(Central, FiliformFourHasNine) {
  auto L = filiform(4, F3);
  auto c = enumerate_central(L);
  EXPECT_EQ(c.members.size(), 9u);
  EXPECT_TRUE(c.contains(Map::identity(F3, 4)));
  auto Z = algebra::center(L);
  for (const auto& f : c.members) {
    for (std::size_t i = 0; i < 4; ++i)
      EXPECT_TRUE(Z.contains(linalg::sub(F3, f.image(i), L.basis_vector(i))));
  }
}

TEST(Commuting, FiliformMembersAreCentral) {
  for (std::size_t n = 4; n <= 6; ++n) {
    auto L = filiform(n, F3);
    auto A = enumerate_commuting(L);
    auto Z = algebra::center(L);
    for (const auto& f : A.members)
      for (std::size_t i = 0; i < n; ++i)
        EXPECT_TRUE(Z.contains(linalg::sub(F3, f.image(i), L.basis_vector(i))));
    EXPECT_TRUE(sets_equal(A, enumerate_central(L)).equal) << n;
  }
}

TEST(Commuting, Dim5ContainsBothNamedMaps) {
  auto L = dim5_example(F3);
  auto A = enumerate_commuting(L);
  EXPECT_TRUE(A.contains(dim5_beta1(F3)));
  EXPECT_TRUE(A.contains(dim5_beta2(F3)));
  EXPECT_TRUE(A.contains(Map::identity(F3, 5)));
  for (const auto& f : A.members) EXPECT_TRUE(maps::is_commuting(L, f));
  EXPECT_TRUE(commuting_set_violations(L, A, enumerate_central(L)).empty());
}

TEST(Commuting, MatchesBruteForceInSmallDimension) {
  for (const auto& name : {"abelian:2", "abelian:3", "heisenberg:1:1", "filiform:3"}) {
    auto L = constructions::over_prime(constructions::resolve_algebra(name), 3);
    auto fast = enumerate_commuting(L, no_short_circuit());
    auto brute = enumerate_commuting_bruteforce(L);
    EXPECT_TRUE(sets_equal(fast, brute).equal) << name;
    EXPECT_EQ(fast.members.size(), brute.members.size()) << name;
    auto central = enumerate_central(L, no_short_circuit());
    EXPECT_TRUE(sets_equal(central, enumerate_bruteforce(L, SetKind::central)).equal) << name;
  }
}

TEST(Commuting, ParallelismDoesNotChangeOutput) {
  auto L = dim5_example(F3);
  EnumerationOptions serial, parallel;
  serial.parallelism = 1;
  parallel.parallelism = 3;
  auto a = enumerate_commuting(L, serial);
  auto b = enumerate_commuting(L, parallel);
  EXPECT_EQ(a.members, b.members);
}

TEST(Commuting, BudgetIsEnforced) {
  EXPECT_THROW(enumerate_commuting(heisenberg(3, 1, F3)), BudgetExceeded);
  EnumerationOptions tiny;
  tiny.budget = 2;
  try {
    enumerate_commuting(dim5_example(F3), tiny);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_GT(e.projected(), 2.0L);
    EXPECT_GT(e.branch_width(), 1.0L);
  }
  EXPECT_EQ(project_commuting_search(filiform(5, F3)).total,
            project_commuting_search(filiform(5, F3)).total);
}

TEST(Commuting, AbelianShortCircuit) {
  auto A = enumerate_commuting(abelian(4, F3));
  EXPECT_TRUE(A.symbolic);
  EXPECT_EQ(A.size(), general_linear_order(4, 3));
  auto v = closure_check(abelian(4, F3), A);
  EXPECT_TRUE(v.closed);
  EXPECT_TRUE(v.analytic);
}

TEST(Closure, Dim5IsNotClosed) {
  auto L = dim5_example(F3);
  auto A = enumerate_commuting(L);
  auto v = closure_check(L, A);
  EXPECT_FALSE(v.closed);
  ASSERT_TRUE(v.witness.has_value());
  const auto& w = *v.witness;
  EXPECT_FALSE(maps::commuting_defect(L, maps::compose(w.g, w.f)).clean());
  EXPECT_FALSE(linalg::is_zero(F3, w.value));
  EXPECT_EQ(w.value, L.bracket(w.x, maps::compose(w.g, w.f)(w.x)));

  // The exhaustive route agrees with the basis route on a subset holding
  // both named maps.
  AutomorphismSet sub{SetKind::commuting, 5, 3, false,
                      {A.members.begin(), A.members.begin() + 150}};
  sub.members.push_back(dim5_beta1(F3));
  sub.members.push_back(dim5_beta2(F3));
  std::sort(sub.members.begin(), sub.members.end(), map_less);
  sub.members.erase(std::unique(sub.members.begin(), sub.members.end()), sub.members.end());
  auto fast = closure_check(L, sub);
  auto exhaustive = closure_check(L, sub, true);
  EXPECT_FALSE(fast.closed);
  EXPECT_FALSE(exhaustive.closed);
  ASSERT_TRUE(fast.witness.has_value());
  ASSERT_TRUE(exhaustive.witness.has_value());
  EXPECT_EQ(exhaustive.witness->f_index, fast.witness->f_index);
  EXPECT_EQ(exhaustive.witness->g_index, fast.witness->g_index);
  EXPECT_EQ(exhaustive.witness->x, fast.witness->x);
  EXPECT_GT(exhaustive.failing_pairs, 0u);
  EXPECT_EQ(exhaustive.pair_count, sub.members.size() * sub.members.size());

  // The named pair (beta_2 first, then beta_1) fails at x1 with value x5.
  auto h = maps::compose(dim5_beta1(F3), dim5_beta2(F3));
  auto x1 = L.basis_vector(0);
  EXPECT_EQ(L.bracket(x1, h(x1)), L.basis_vector(4));
}

TEST(Closure, FiliformIsClosed) {
  for (std::size_t n = 4; n <= 7; ++n) {
    auto L = filiform(n, F3);
    auto v = closure_check(L, enumerate_commuting(L));
    EXPECT_TRUE(v.closed) << n;
    EXPECT_FALSE(v.witness.has_value());
  }
}

TEST(Closure, IdentityAloneIsClosed) {
  auto L = dim5_example(F3);
  AutomorphismSet s{SetKind::commuting, 5, 3, false, {Map::identity(F3, 5)}};
  auto v = closure_check(L, s);
  EXPECT_TRUE(v.closed);
  EXPECT_THROW(closure_check(L, AutomorphismSet{SetKind::central, 5, 3, false, {}}),
               std::invalid_argument);
}

TEST(SetsEqual, NamedComparisons) {
  auto F5 = filiform(5, F3);
  EXPECT_TRUE(sets_equal(enumerate_commuting(F5), enumerate_central(F5)).equal);

  auto L = dim5_example(F3);
  auto A = enumerate_commuting(L);
  auto C = enumerate_central(L);
  auto cmp = sets_equal(A, C);
  EXPECT_FALSE(cmp.equal);
  EXPECT_LE(cmp.only_in_first.size(), 5u);
  EXPECT_TRUE(cmp.only_in_second.empty());
  EXPECT_TRUE(A.contains(dim5_beta1(F3)));
  EXPECT_FALSE(C.contains(dim5_beta1(F3)));
  EXPECT_TRUE(sets_equal(A, A).equal);
}

TEST(IdentitySuite, EveryFiliformCommutingMapMovesWithinSecondCenter) {
  auto L = filiform(5, F3);
  auto Z2 = algebra::second_center(L);
  for (const auto& f : enumerate_commuting(L).members) {
    EXPECT_TRUE(maps::lemma_identity_suite(L, f).clean());
    for (std::size_t i = 0; i < 5; ++i)
      EXPECT_TRUE(Z2.contains(linalg::sub(F3, f.image(i), L.basis_vector(i))));
  }
}

TEST(Inverse, CommutingSetsAreInverseClosed) {
  for (auto L : {dim5_example(F3), heisenberg(2, 1, F3), filiform(6, F3)}) {
    auto A = enumerate_commuting(L);
    for (const auto& f : A.members) EXPECT_TRUE(A.contains(maps::inverse(f)));
  }
}
