#pragma once

#include <algorithm>
#include <optional>
#include <string_view>

#include "coclass/algebra/series.hpp"

namespace coclass::harness {

/// Every hypothesis quantity the theorems refer to.
struct StructuralProfile {
  std::size_t dim = 0;
  std::size_t nilpotency_class = 0;
  std::size_t coclass = 0;
  std::size_t dim_center = 0;
  std::size_t dim_second_center = 0;
  std::size_t dim_derived = 0;
  /// Nilpotency class of Z_2(L) as a Lie algebra (1 when abelian).
  std::size_t second_center_class = 0;
  /// k with Z(L) = L^k, where L^1 = L' and L^{k+1} = [L, L^k].
  std::optional<std::size_t> center_lcs_term;
  /// [L : Z(L)]
  std::size_t index_over_center = 0;
  bool derived_in_center = false;

  bool derived_equals_center() const noexcept {
    return derived_in_center && dim_derived == dim_center;
  }

  bool operator==(const StructuralProfile&) const = default;
};

/// Throws algebra::NotNilpotentError for non-nilpotent L.
template <linalg::Field F>
StructuralProfile profile(const algebra::LieAlgebra<F>& L) {
  const auto series = algebra::series_profile(L);
  const auto Z = algebra::center(L);
  const auto Z2 = algebra::second_center(L);
  const auto& derived = series.lower.at(1);

  StructuralProfile p;
  p.dim = L.dim();
  p.nilpotency_class = series.nilpotency_class;
  p.coclass = series.coclass;
  p.dim_center = Z.dim();
  p.dim_second_center = Z2.dim();
  p.dim_derived = derived.dim();
  p.second_center_class = std::max<std::size_t>(1, algebra::subalgebra_class(L, Z2));
  for (std::size_t k = 0; k < series.lower.size(); ++k) {
    if (series.lower[k] == Z) {
      p.center_lcs_term = k;
      break;
    }
  }
  p.index_over_center = L.dim() - Z.dim();
  p.derived_in_center = linalg::is_subspace_of(derived, Z);
  return p;
}

enum class Verdict { equals_autc, subgroup, not_subgroup, no_guarantee };

/// Prediction rules, applied in the order R1, R2, R4, R3, R5, R6, R7, R8.
enum class Rule { r1, r2, r3, r4, r5, r6, r7, r8, none };

struct Prediction {
  Verdict verdict = Verdict::no_guarantee;
  Rule rule = Rule::none;

  bool operator==(const Prediction&) const = default;
};

std::string_view to_string(Verdict v) noexcept;
/// Fixed citation key of a rule, e.g. "R1:coclass1_equals_autc".
std::string_view to_string(Rule r) noexcept;

Prediction predict(const StructuralProfile& p);

}  // namespace coclass::harness
