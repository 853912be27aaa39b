#include "coclass/maps/identities.hpp"
#include "coclass/maps/linear_map.hpp"

namespace coclass::maps {

const char* to_string(DefectKind k) noexcept {
  switch (k) {
    case DefectKind::not_homomorphism: return "not_homomorphism";
    case DefectKind::not_invertible: return "not_invertible";
    case DefectKind::not_commuting: return "not_commuting";
    case DefectKind::not_central: return "not_central";
  }
  return "unknown";
}

std::string_view to_string(Identity id) noexcept {
  switch (id) {
    case Identity::first_i: return "first_i";
    case Identity::first_ii: return "first_ii";
    case Identity::first_iii: return "first_iii";
    case Identity::second_i: return "second_i";
    case Identity::second_ii: return "second_ii";
    case Identity::second_iii: return "second_iii";
    case Identity::second_iv: return "second_iv";
    case Identity::in_second_center: return "in_second_center";
  }
  return "unknown";
}

}  // namespace coclass::maps
