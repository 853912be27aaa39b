#include "coclass/harness/profile.hpp"

namespace coclass::harness {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::equals_autc: return "equals_Autc";
    case Verdict::subgroup: return "subgroup";
    case Verdict::not_subgroup: return "not_subgroup";
    case Verdict::no_guarantee: return "no_guarantee";
  }
  return "unknown";
}

std::string_view to_string(Rule r) noexcept {
  switch (r) {
    case Rule::r1: return "R1:coclass1_equals_autc";
    case Rule::r2: return "R2:coclass2_subgroup";
    case Rule::r3: return "R3:heisenberg_not_subgroup";
    case Rule::r4: return "R4:coclass3_dim5_iff";
    case Rule::r5: return "R5:coclass3_dim6_subgroup";
    case Rule::r6: return "R6:abelian_second_center";
    case Rule::r7: return "R7:derived_central_index2";
    case Rule::r8: return "R8:second_center_index2_lcs";
    case Rule::none: return "none";
  }
  return "unknown";
}

Prediction predict(const StructuralProfile& p) {
  if (p.coclass == 1) return {Verdict::equals_autc, Rule::r1};
  if (p.coclass == 2) return {Verdict::subgroup, Rule::r2};
  if (p.coclass == 3 && p.dim == 5) {
    const bool heisenberg_like =
        p.dim_derived == 1 && p.derived_equals_center() && p.dim_center == 1;
    return {heisenberg_like ? Verdict::not_subgroup : Verdict::subgroup, Rule::r4};
  }
  if (p.dim_derived == 1 && p.derived_in_center && p.index_over_center >= 4 && p.dim >= 5) {
    return {Verdict::not_subgroup, Rule::r3};
  }
  if (p.coclass == 3 && p.dim >= 6 &&
      (p.second_center_class != 2 || p.dim_center != 1 || p.dim_second_center != 4 ||
       p.dim_derived + 4 != p.dim)) {
    return {Verdict::subgroup, Rule::r5};
  }
  if (p.second_center_class <= 1) return {Verdict::subgroup, Rule::r6};
  if (p.derived_in_center && p.index_over_center == 2) return {Verdict::subgroup, Rule::r7};
  if (p.dim_second_center == p.dim_center + 2 && p.center_lcs_term) {
    return {Verdict::subgroup, Rule::r8};
  }
  return {Verdict::no_guarantee, Rule::none};
}

}  // namespace coclass::harness
