#pragma once

#include <cstddef>
#include <string>

#include "coclass/algebra/lie_algebra.hpp"

namespace coclass::constructions {

using algebra::LieAlgebra;
using algebra::StructureTable;

/// All brackets zero.
StructureTable abelian_table(std::size_t n);

/// Basis u_1..u_2k, z_1..z_m with [u_{2i-1}, u_{2i}] = z_1 and every other
/// bracket zero. Requires k, m >= 1.
StructureTable heisenberg_table(std::size_t k, std::size_t m);

/// Model filiform algebra on u, v, v_1..v_{n-2}: [u,v] = v_1 and
/// [u, v_i] = v_{i+1}. Requires n >= 3.
StructureTable filiform_table(std::size_t n);

/// x_1..x_5 with [x_1,x_2] = x_5 = [x_3,x_4].
StructureTable dim5_example_table();

/// Coclass 2, dimension 5: [e1,e2] = e3, [e1,e3] = e5, [e2,e4] = e5.
StructureTable coclass2_indecomposable_table();

/// Coclass 3, dimension 5, two-dimensional centre: [x1,x2] = x4, [x1,x3] = x5.
StructureTable two_step_dim5_table();

/// Coclass 3, dimension 6, dim Z = 2: e1 acts on span{e2..e6} with Jordan
/// blocks of sizes 3 and 2.
StructureTable hub_dim6_table();

/// Coclass 3, dimension 6, dim Z = 1, Z_2 abelian of dimension 3:
/// [x1,x2] = x4, [x1,x3] = x5, [x2,x4] = x6, [x3,x5] = x6.
StructureTable coclass3_dim6_abelian_z2_table();

/// Coclass 3, dimension 6, dim Z = 1, Z_2 of class 2 and dimension 4:
/// the filiform relations on u, v, v1, v2 plus [x, y] = v2.
StructureTable coclass3_dim6_nonabelian_z2_table();

/// Names accepted: abelian:N, heisenberg:K:M, filiform:N, dim5.
/// Throws std::invalid_argument on anything else.
StructureTable builtin_table(const std::string& name);

template <linalg::Field F>
LieAlgebra<F> abelian(std::size_t n, const F& field) {
  return LieAlgebra<F>(field, abelian_table(n));
}

template <linalg::Field F>
LieAlgebra<F> heisenberg(std::size_t k, std::size_t m, const F& field) {
  return LieAlgebra<F>(field, heisenberg_table(k, m));
}

template <linalg::Field F>
LieAlgebra<F> filiform(std::size_t n, const F& field) {
  return LieAlgebra<F>(field, filiform_table(n));
}

template <linalg::Field F>
LieAlgebra<F> dim5_example(const F& field) {
  return LieAlgebra<F>(field, dim5_example_table());
}

}  // namespace coclass::constructions
