#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "coclass/algebra/series.hpp"
#include "coclass/constructions/catalog.hpp"
#include "coclass/constructions/constructions.hpp"

using namespace coclass;
using namespace coclass::constructions;
using algebra::center;
using algebra::derived_subalgebra;
using algebra::nilpotency_class;
using algebra::second_center;
using linalg::PrimeField;
using S = linalg::Subspace<PrimeField>;

namespace {

const PrimeField F3(3);

S span_of(std::size_t n, std::initializer_list<std::size_t> idx) {
  std::vector<linalg::Vector<PrimeField>> vs;
  for (auto i : idx) vs.push_back(linalg::unit_vector(F3, n, i));
  return S::span(F3, n, vs);
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("coclass_test_" + name);
}

std::string tag_value(const CatalogEntry& e, const std::string& key) {
  for (const auto& t : e.tags)
    if (t.rfind(key + "=", 0) == 0) return t.substr(key.size() + 1);
  return {};
}

}  // namespace

TEST(Abelian, Invariants) {
  EXPECT_TRUE(center(abelian(1, F3)).is_full());
  auto A = abelian(4, F3);
  EXPECT_EQ(nilpotency_class(A), 1u);
  EXPECT_EQ(algebra::coclass(A), 3u);
}

TEST(Heisenberg, Invariants) {
  auto H = heisenberg(2, 1, F3);
  EXPECT_EQ(H.dim(), 5u);
  EXPECT_EQ(derived_subalgebra(H), span_of(5, {4}));
  EXPECT_EQ(center(H), span_of(5, {4}));

  auto H11 = heisenberg(1, 1, F3);
  EXPECT_TRUE(second_center(H11).is_full());
  EXPECT_EQ(center(H11), derived_subalgebra(H11));

  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::size_t m = 1; m <= 3; ++m) {
      auto L = heisenberg(k, m, F3);
      ASSERT_EQ(L.dim(), 2 * k + m);
      EXPECT_TRUE(algebra::validate(L).empty());
      std::vector<std::size_t> zs;
      S Z = S::zero(F3, L.dim());
      for (std::size_t j = 0; j < m; ++j) Z = linalg::subspace_sum(Z, span_of(L.dim(), {2 * k + j}));
      EXPECT_EQ(center(L), Z);
      auto Lp = derived_subalgebra(L);
      EXPECT_EQ(Lp.dim(), 1u);
      EXPECT_TRUE(linalg::is_subspace_of(Lp, center(L)));
    }
  }
  EXPECT_EQ(heisenberg_table(2, 1).labels().front(), "u1");
  EXPECT_EQ(heisenberg_table(2, 1).labels().back(), "z1");
}

TEST(Filiform, Invariants) {
  EXPECT_EQ(derived_subalgebra(filiform(3, F3)).dim(), 1u);
  for (std::size_t n = 3; n <= 9; ++n) {
    auto L = filiform(n, F3);
    EXPECT_TRUE(algebra::validate(L).empty());
    EXPECT_EQ(algebra::coclass(L), 1u);
    auto lower = algebra::lower_central_series(L);
    for (std::size_t i = 1; i + 2 <= n; ++i) EXPECT_EQ(lower[i].dim(), n - 1 - i);
  }
  auto L6 = filiform(6, F3);
  EXPECT_EQ(center(L6), span_of(6, {5}));
  EXPECT_EQ(second_center(L6), span_of(6, {4, 5}));
}

TEST(Dim5Example, Invariants) {
  auto D = dim5_example(F3);
  EXPECT_EQ(center(D), span_of(5, {4}));
  EXPECT_EQ(derived_subalgebra(D), center(D));
  EXPECT_TRUE(second_center(D).is_full());
  EXPECT_EQ(dim5_example_table().labels()[0], "x1");
}

TEST(DirectSum, ClassAndCenter) {
  auto L = algebra::direct_sum(filiform(4, F3), abelian(1, F3));
  EXPECT_EQ(L.dim(), 5u);
  EXPECT_EQ(nilpotency_class(L), 3u);
  EXPECT_EQ(algebra::coclass(L), 2u);

  EXPECT_EQ(algebra::direct_sum(abelian(1, F3), abelian(1, F3)).table(), abelian(2, F3).table());

  auto H = algebra::direct_sum(heisenberg(1, 1, F3), abelian(2, F3));
  EXPECT_EQ(center(H).dim(), 3u);

  auto a = filiform(5, F3);
  auto b = heisenberg(1, 2, F3);
  auto sum = algebra::direct_sum(a, b);
  std::vector<linalg::Vector<PrimeField>> zs;
  for (auto v : center(a).basis_vectors()) {
    v.resize(9, 0);
    zs.push_back(v);
  }
  for (const auto& w : center(b).basis_vectors()) {
    linalg::Vector<PrimeField> v(5, 0);
    v.insert(v.end(), w.begin(), w.end());
    zs.push_back(v);
  }
  EXPECT_EQ(center(sum), S::span(F3, 9, zs));
  EXPECT_THROW(algebra::direct_sum(a, filiform(3, PrimeField(5))), algebra::AlgebraError);
}

TEST(ExtraConstructions, AreLieAlgebrasWithDeclaredInvariants) {
  struct Case {
    StructureTable table;
    std::size_t coclass, dim_z;
  };
  const std::vector<Case> cases = {
      {coclass2_indecomposable_table(), 2, 1},
      {two_step_dim5_table(), 3, 2},
      {hub_dim6_table(), 3, 2},
      {coclass3_dim6_abelian_z2_table(), 3, 1},
      {coclass3_dim6_nonabelian_z2_table(), 3, 1},
  };
  for (const auto& c : cases) {
    algebra::LieAlgebra<linalg::RationalField> L(linalg::RationalField{}, c.table);
    EXPECT_TRUE(algebra::validate(L).empty());
    EXPECT_EQ(algebra::coclass(L), c.coclass);
    EXPECT_EQ(center(L).dim(), c.dim_z);
  }
}

TEST(Builtins, ResolveByName) {
  EXPECT_EQ(builtin_table("abelian:3").dim(), 3u);
  EXPECT_EQ(builtin_table("heisenberg:2:1"), heisenberg_table(2, 1));
  EXPECT_EQ(builtin_table("filiform:6"), filiform_table(6));
  EXPECT_EQ(builtin_table("dim5"), dim5_example_table());
  for (const char* bad : {"abelian:0", "heisenberg:0:1", "filiform:2", "nonsense", "abelian:x"})
    EXPECT_THROW(builtin_table(bad), std::invalid_argument) << bad;
  EXPECT_EQ(resolve_algebra("builtin:dim5").table, dim5_example_table());
  EXPECT_EQ(resolve_algebra("hub_dim6").table, hub_dim6_table());
}

TEST(Catalog, ShippedEntriesValidateAndCarryCorrectTags) {
  auto entries = shipped_catalog();
  EXPECT_GE(entries.size(), 20u);
  for (const auto& e : entries) {
    EXPECT_TRUE(entry_violations(e).empty()) << e.name;
    auto L = over_prime(e, 3);
    EXPECT_EQ(tag_value(e, "coclass"), std::to_string(algebra::coclass(L))) << e.name;
    EXPECT_EQ(tag_value(e, "dim"), std::to_string(L.dim())) << e.name;
  }
}

TEST(Catalog, RoundTripIsIdentityOnCanonicalForm) {
  auto entries = shipped_catalog();
  const auto path = temp_file("roundtrip.json");
  save_catalog(entries, path);
  auto loaded = load_catalog(path);
  ASSERT_EQ(loaded.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    EXPECT_EQ(serialize_entry(loaded[i]), serialize_entry(entries[i]));
    EXPECT_EQ(loaded[i].table, entries[i].table);
  }
  std::ifstream in(path, std::ios::binary);
  std::string text((std::istreambuf_iterator<char>(in)), {});
  ASSERT_FALSE(text.empty());
  EXPECT_EQ(text.back(), '\n');
  std::filesystem::remove(path);
}

TEST(Catalog, EmptyFileLoadsAsEmptyList) {
  std::istringstream in("");
  EXPECT_TRUE(read_catalog(in).empty());
  std::istringstream blank("\n  \n");
  EXPECT_TRUE(read_catalog(blank).empty());
}

TEST(Catalog, JacobiViolationNamesTheTriple) {
  std::istringstream in(
      R"({"name":"bad","field":"rational","dim":3,"brackets":[{"i":0,"j":1,"terms":[{"k":2,"c":1}]},{"i":0,"j":2,"terms":[{"k":0,"c":1}]}]})");
  try {
    read_catalog(in);
    FAIL() << "expected a validation error";
  } catch (const CatalogValidationError& err) {
    EXPECT_EQ(err.entry(), "bad");
    ASSERT_EQ(err.violations().size(), 1u);
    EXPECT_NE(err.violations()[0].find("(0,1,2)"), std::string::npos);
  }
}

TEST(Catalog, ParseErrorsCarryLineNumbers) {
  auto expect_line = [](const std::string& text, std::size_t line) {
    std::istringstream in(text);
    try {
      parse_catalog(in);
      ADD_FAILURE() << "expected parse error for: " << text;
    } catch (const CatalogParseError& err) {
      EXPECT_EQ(err.line(), line) << err.what();
    }
  };
  const std::string ok = R"({"name":"a","field":"rational","dim":2,"brackets":[]})";
  expect_line(ok + "\n{not json", 2);
  expect_line(R"({"name":"a","field":{"prime":2},"dim":2,"brackets":[]})", 1);
  expect_line(R"({"name":"a","field":{"prime":9},"dim":2,"brackets":[]})", 1);
  expect_line(ok + "\n" + R"({"name":"b","field":"rational","dim":2,"brackets":[{"i":1,"j":0,"terms":[]}]})", 2);
  expect_line(R"({"name":"a","field":"rational","brackets":[]})", 1);
  expect_line(R"({"name":"a","field":"rational","dim":2,"brackets":[{"i":0,"j":1,"terms":[{"k":1,"c":"1/0"}]}]})", 1);
}

TEST(Catalog, RationalScalarsAndPrimeEntries) {
  std::istringstream in(
      R"({"name":"q","field":"rational","dim":3,"brackets":[{"i":0,"j":1,"terms":[{"k":2,"c":"-1/2"}]}]})"
      "\n"
      R"({"name":"p","field":{"prime":5},"dim":3,"brackets":[{"i":0,"j":1,"terms":[{"k":2,"c":7}]}]})");
  auto entries = read_catalog(in);
  ASSERT_EQ(entries.size(), 2u);
  auto Lq = over_rationals(entries[0]);
  EXPECT_EQ(Lq.bracket_basis(0, 1)[2], linalg::Rational(-1, 2));
  EXPECT_EQ(over_prime(entries[0], 3).bracket_basis(0, 1)[2], 1u);
  EXPECT_EQ(over_prime(entries[1], 5).bracket_basis(0, 1)[2], 2u);
  EXPECT_THROW(over_prime(entries[1], 3), std::invalid_argument);
  EXPECT_THROW(over_rationals(entries[1]), std::invalid_argument);
  EXPECT_NE(serialize_entry(entries[0]).find("\"-1/2\""), std::string::npos);
  EXPECT_NE(serialize_entry(entries[1]).find("\"c\":2"), std::string::npos);
}

TEST(Catalog, Coclass3Dim6CoversEveryCenterDimension) {
  auto entries = coclass3_dim6_catalog();
  EXPECT_GE(entries.size(), 3u);
  std::set<std::size_t> dims;
  for (const auto& e : entries) {
    auto L = over_prime(e, 3);
    EXPECT_EQ(L.dim(), 6u);
    EXPECT_EQ(algebra::coclass(L), 3u);
    dims.insert(center(L).dim());
  }
  EXPECT_EQ(dims, (std::set<std::size_t>{1, 2, 3}));
}

#ifdef COCLASS_DATA_DIR
TEST(Catalog, ShippedDataFilesMatchComputedTags) {
  for (const char* file : {"catalog.json", "coclass3_dim6.json"}) {
    auto entries = load_catalog(std::filesystem::path(COCLASS_DATA_DIR) / file);
    EXPECT_GE(entries.size(), 3u) << file;
    for (const auto& e : entries) {
      auto L = over_prime(e, 3);
      EXPECT_EQ(tag_value(e, "coclass"), std::to_string(algebra::coclass(L))) << e.name;
    }
  }
  auto file = load_catalog(std::filesystem::path(COCLASS_DATA_DIR) / "catalog.json");
  auto built = shipped_catalog();
  ASSERT_EQ(file.size(), built.size());
  for (std::size_t i = 0; i < file.size(); ++i)
    EXPECT_EQ(serialize_entry(file[i]), serialize_entry(built[i]));
}
#endif
