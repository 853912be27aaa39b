#include "coclass/harness/structural.hpp"

namespace coclass::harness {

namespace {

template <linalg::Field F>
std::optional<StructuralProfile> nilpotent_profile(const algebra::LieAlgebra<F>& L) {
  if (!algebra::is_nilpotent(L)) return std::nullopt;
  return profile(L);
}

}  // namespace

std::optional<StructuralProfile> profile_entry(const constructions::CatalogEntry& entry) {
  if (entry.field.is_prime()) {
    return nilpotent_profile(constructions::over_prime(entry, entry.field.modulus()));
  }
  return nilpotent_profile(constructions::over_rationals(entry));
}

bool StructuralReport::clean() const noexcept {
  for (const auto& e : entries)
    if (!e.violations.empty()) return false;
  return true;
}

StructuralEntry structural_checks(const std::string& name, const StructuralProfile& p) {
  StructuralEntry e{name, p, {}, {}};
  auto check = [&](const std::string& what, bool holds) {
    e.checked.push_back(what);
    if (!holds) e.violations.push_back(what);
  };
  const bool z2_abelian = p.second_center_class <= 1;
  const std::size_t n = p.dim;

  check("1 <= dim Z <= 3", p.dim_center >= 1 && p.dim_center <= 3);
  check("2 <= dim Z2 <= 4", p.dim_second_center >= 2 && p.dim_second_center <= 4);

  if (p.dim_center != 1) check("lemma (i): dim Z != 1 => Z2 abelian", z2_abelian);
  if (p.dim_center == 1 && p.dim_second_center >= 2 && p.dim_second_center <= 3) {
    check("lemma (ii): dim Z = 1, dim Z2 in [2,3] => Z2 abelian", z2_abelian);
  }
  if (p.dim_center == 1 && p.dim_second_center == 4 && p.dim_derived + 3 >= n &&
      p.dim_derived + 2 <= n) {
    check("lemma (iii): dim Z = 1, dim Z2 = 4, dim L' in [n-3,n-2] => Z2 abelian", z2_abelian);
  }

  if (p.second_center_class != 2) {
    check("prop (i): class(Z2) != 2 => Z2 abelian", z2_abelian);
  } else {
    check("prop (ii): class(Z2) = 2 => dim Z = 1, dim Z2 = 4, dim L' = n-4",
          p.dim_center == 1 && p.dim_second_center == 4 && p.dim_derived + 4 == n);
  }
  return e;
}

StructuralReport structural_suite(const std::vector<constructions::CatalogEntry>& catalog) {
  StructuralReport report;
  for (const auto& entry : catalog) {
    const auto p = profile_entry(entry);
    if (!p) {
      ++report.skipped;
      continue;
    }
    if (p->coclass != 3 || p->dim < 6) {
      ++report.skipped;
      continue;
    }
    report.entries.push_back(structural_checks(entry.name, *p));
  }
  return report;
}

}  // namespace coclass::harness
