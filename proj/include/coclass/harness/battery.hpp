#pragma once

#include <string>
#include <vector>

#include "coclass/harness/structural.hpp"
#include "coclass/harness/verify.hpp"
#include "coclass/harness/witness.hpp"

namespace coclass::harness {

struct BatteryOptions {
  /// Field for the catalog sweep and the theorem checks.
  std::uint32_t p = 3;
  search::EnumerationOptions enumeration;
  /// Catalog entries verified concurrently (0 = hardware concurrency).
  unsigned jobs = 1;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  /// Wall-clock time of the work the criterion needs; kept out of JSON.
  double seconds = 0;
  /// Runtime limit in seconds, 0 when the criterion has none.
  double limit_seconds = 0;

  bool within_limit() const noexcept { return limit_seconds <= 0 || seconds <= limit_seconds; }
};

struct OracleCheck {
  std::string name;
  bool commuting_equal = false;
  bool central_equal = false;
  std::size_t commuting_size = 0;
  std::size_t central_size = 0;
};

/// Everything the theorem battery computes. Criterion 10 (determinism of
/// the JSON rendering across runs) is checked by running it twice.
struct BatteryReport {
  std::uint32_t p = 3;
  std::vector<VerdictReport> catalog;
  std::vector<double> catalog_seconds;
  std::vector<HeisenbergWitness> heisenberg;
  std::vector<Dim5Witness> dim5;
  std::vector<OracleCheck> oracle;
  StructuralReport structural;
  std::vector<CriterionResult> criteria;

  bool criteria_passed() const noexcept;
  bool catalog_consistent() const noexcept;
};

/// Verifies every shipped catalog entry, builds both witness families and
/// evaluates criteria 1-9.
BatteryReport run_battery(const BatteryOptions& options = {});

/// Verifies catalog entries over F_p, concurrently when jobs > 1; the
/// result order is the catalog order. seconds[i] is the time for entry i.
std::vector<VerdictReport> verify_catalog(const std::vector<constructions::CatalogEntry>& catalog,
                                          std::uint32_t p, const VerifyOptions& options,
                                          unsigned jobs, std::vector<double>* seconds = nullptr);

}  // namespace coclass::harness
