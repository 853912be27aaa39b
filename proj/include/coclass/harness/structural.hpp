#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coclass/constructions/catalog.hpp"
#include "coclass/harness/profile.hpp"

namespace coclass::harness {

struct StructuralEntry {
  std::string name;
  StructuralProfile profile;
  /// Assertions evaluated, e.g. "dim Z in [1,3]".
  std::vector<std::string> checked;
  std::vector<std::string> violations;
};

/// Structure of Z_2(L) for coclass-3 algebras of dimension >= 6:
///   bounds      1 <= dim Z <= 3 and 2 <= dim Z_2 <= 4
///   lemma       dim Z != 1, or dim Z = 1 with dim Z_2 in [2,3], or dim Z = 1,
///               dim Z_2 = 4 and dim L' in [n-3, n-2], each force Z_2 abelian
///   prop (i)    class of Z_2 != 2 forces Z_2 abelian
///   prop (ii)   class of Z_2 = 2 forces dim Z = 1, dim Z_2 = 4, dim L' = n-4
/// Other entries are skipped. Profiles are computed over the declared field.
struct StructuralReport {
  std::vector<StructuralEntry> entries;
  std::size_t skipped = 0;

  bool clean() const noexcept;
};

StructuralReport structural_suite(const std::vector<constructions::CatalogEntry>& catalog);

/// Profile over the entry's declared field; empty when not nilpotent.
std::optional<StructuralProfile> profile_entry(const constructions::CatalogEntry& entry);

/// The checks above for a single profile (no coclass / dimension guard).
StructuralEntry structural_checks(const std::string& name, const StructuralProfile& p);

}  // namespace coclass::harness
