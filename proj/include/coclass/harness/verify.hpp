#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coclass/harness/profile.hpp"
#include "coclass/search/closure.hpp"

namespace coclass::harness {

/// What enumeration found for one algebra.
struct EnumerationSummary {
  search::BigInt commuting_size;
  search::BigInt central_size;
  /// Sets reported symbolically as GL(n, p) (abelian algebras).
  bool symbolic = false;
  bool closed = true;
  bool closure_analytic = false;
  std::optional<search::ClosureWitness> witness;
  /// Defect terms of g o f for the closure witness.
  std::vector<maps::DefectWitness<linalg::PrimeField>> witness_defects;
  bool equal = false;
  /// Up to five members of A(L) outside Aut_c(L).
  std::vector<search::Map> only_in_commuting;
  /// Identity, inverse and Aut_c containment checks on A(L).
  std::vector<std::string> set_violations;
  /// Identity suite over every explicit member.
  std::uint64_t identity_maps = 0;
  std::uint64_t identity_checks_per_map = 0;
  std::uint64_t identity_violations = 0;
  std::string first_identity_violation;
};

struct VerdictReport {
  std::string name;
  std::uint32_t p = 0;
  std::vector<std::string> labels;
  StructuralProfile profile;
  Prediction prediction;
  std::optional<EnumerationSummary> enumeration;
  /// Enumeration skipped: over budget (with the budget message) or not requested.
  bool unverified = false;
  std::string note;
  /// The prediction does not contradict the enumeration, and the set checks
  /// and identity suite found nothing.
  bool consistent = true;
  std::vector<std::string> inconsistencies;
};

struct VerifyOptions {
  bool with_enumeration = true;
  /// Run the identity suite on every explicit member of A(L).
  bool identity_suite = true;
  search::EnumerationOptions enumeration;
};

/// Profiles and predicts, then (optionally) enumerates A(L) and Aut_c(L),
/// checks closure and equality and compares with the prediction:
/// equals_Autc needs set equality, subgroup needs closure, not_subgroup needs
/// a replayable witness; no_guarantee is consistent with anything. A budget
/// overrun leaves the report unverified rather than throwing.
VerdictReport verify(const search::Algebra& L, const std::string& name,
                     const VerifyOptions& options = {});

}  // namespace coclass::harness
