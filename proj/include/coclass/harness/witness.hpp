#pragma once

#include <string>
#include <vector>

#include "coclass/search/enumerate.hpp"

namespace coclass::harness {

using search::Algebra;
using search::Map;
using search::Vec;

/// Automorphism and commuting status of one map, with every nonzero
/// commuting defect term (B(e_i) first, then S(e_i, e_j) for i < j).
struct MapCheck {
  bool automorphism = false;
  bool commuting = false;
  std::vector<maps::DefectWitness<linalg::PrimeField>> defects;
};

MapCheck check_map(const Algebra& L, const Map& f);

struct HeisenbergVariant {
  std::string name;  // "printed" or "corrected"
  Map beta2;
  MapCheck beta2_check;
  /// beta_1 beta_2, i.e. beta_2 applied first.
  Map product;
  MapCheck product_check;
  /// [u_1, beta_1 beta_2(u_1)]
  Vec defect_at_u1;
};

struct HeisenbergWitness {
  std::size_t k = 0, m = 0;
  std::uint32_t p = 0;
  Algebra algebra;
  Map beta1;
  MapCheck beta1_check;
  HeisenbergVariant printed;
  HeisenbergVariant corrected;
  /// beta_1 and corrected beta_2 commute, their product does not and has
  /// [u_1, beta_1 beta_2(u_1)] = z_1, and printed beta_2 is not commuting.
  bool confirmed = false;
  std::vector<std::string> failures;
};

/// Requires k >= 2 and m >= 1.
HeisenbergWitness heisenberg_witness(std::size_t k, std::size_t m, const linalg::PrimeField& f);

struct Dim5Witness {
  std::uint32_t p = 0;
  Algebra algebra;
  Map beta1, beta2, product;
  MapCheck beta1_check, beta2_check, product_check;
  /// [x_1, beta_1 beta_2(x_1)]
  Vec defect_at_x1;
  bool beta1_involution = false;
  /// Both maps commute, the product does not, and the defect at x_1 is x_5.
  bool confirmed = false;
  std::vector<std::string> failures;
};

Dim5Witness dim5_witness(const linalg::PrimeField& f);

}  // namespace coclass::harness
