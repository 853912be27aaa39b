#include "coclass/harness/witness.hpp"

#include <stdexcept>

#include "coclass/constructions/constructions.hpp"

namespace coclass::harness {

namespace {

using linalg::PrimeField;

/// images[j] = f(e_j) as integer coordinates.
Map map_from(const PrimeField& f, const std::vector<std::vector<std::int64_t>>& images) {
  return Map::from_integer_images(f, images);
}

std::vector<std::vector<std::int64_t>> identity_images(std::size_t n) {
  std::vector<std::vector<std::int64_t>> out(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

}  // namespace

MapCheck check_map(const Algebra& L, const Map& f) {
  MapCheck c;
  c.automorphism = maps::is_automorphism(L, f).clean();
  c.defects = maps::commuting_defect(L, f).witnesses;
  c.commuting = c.automorphism && c.defects.empty();
  return c;
}

HeisenbergWitness heisenberg_witness(std::size_t k, std::size_t m, const PrimeField& f) {
  if (k < 2 || m < 1) throw std::invalid_argument("heisenberg_witness needs k >= 2 and m >= 1");
  const std::size_t n = 2 * k + m;
  // basis indices: u_1..u_{2k} -> 0..2k-1, z_1 -> 2k
  const std::size_t u1 = 0, u2 = 1, u3 = 2, u4 = 3, z1 = 2 * k;
  const Algebra L = constructions::heisenberg(k, m, f);

  auto b1 = identity_images(n);
  b1[u1][u3] = 1;                   // u1 -> u1 + u3
  b1[u3][u3] = -1;                  // u3 -> -u3
  b1[u4][u4] = -1, b1[u4][u2] = 1;  // u4 -> -u4 + u2
  const Map beta1 = map_from(f, b1);

  auto make_variant = [&](const std::string& name, std::size_t u3_partner) {
    auto b2 = identity_images(n);
    b2[u1][u4] = 1;  // u1 -> u1 + u4
    b2[u3][u3] = -1, b2[u3][u3_partner] = -1;
    b2[u4][u4] = -1;  // u4 -> -u4
    const Map beta2 = map_from(f, b2);
    const Map product = maps::compose(beta1, beta2);
    const auto x = L.basis_vector(u1);
    return HeisenbergVariant{name,    beta2, check_map(L, beta2),
                             product, check_map(L, product), L.bracket(x, product(x))};
  };
  HeisenbergWitness w{k,
                      m,
                      f.modulus(),
                      L,
                      beta1,
                      check_map(L, beta1),
                      make_variant("printed", u1),    // u3 -> -u1 - u3
                      make_variant("corrected", u2),  // u3 -> -u2 - u3
                      false,
                      {}};

  if (!w.beta1_check.commuting) w.failures.push_back("beta1 is not a commuting automorphism");
  if (!w.corrected.beta2_check.commuting) {
    w.failures.push_back("corrected beta2 is not a commuting automorphism");
  }
  if (w.corrected.product_check.commuting) {
    w.failures.push_back("beta1 beta2 (corrected) is commuting");
  }
  if (w.corrected.defect_at_u1 != L.basis_vector(z1)) {
    w.failures.push_back("[u1, beta1 beta2(u1)] differs from z1");
  }
  if (w.printed.beta2_check.commuting) w.failures.push_back("printed beta2 is commuting");
  w.confirmed = w.failures.empty();
  return w;
}

Dim5Witness dim5_witness(const PrimeField& f) {
  const Algebra L = constructions::dim5_example(f);
  // x1 <-> x3, x2 <-> x4, x5 fixed
  const Map beta1 = map_from(
      f, {{0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 0, 1}});
  // x1 -> x1 + x4, x2 -> x2, x3 -> -x2 - x3, x4 -> -x4, x5 -> x5
  const Map beta2 = map_from(
      f, {{1, 0, 0, 1, 0}, {0, 1, 0, 0, 0}, {0, -1, -1, 0, 0}, {0, 0, 0, -1, 0}, {0, 0, 0, 0, 1}});
  const Map product = maps::compose(beta1, beta2);
  const auto x1 = L.basis_vector(0);
  Dim5Witness w{f.modulus(),
                L,
                beta1,
                beta2,
                product,
                check_map(L, beta1),
                check_map(L, beta2),
                check_map(L, product),
                L.bracket(x1, product(x1)),
                maps::compose(beta1, beta1) == Map::identity(f, 5),
                false,
                {}};

  if (!w.beta1_check.commuting) w.failures.push_back("beta1 is not a commuting automorphism");
  if (!w.beta2_check.commuting) w.failures.push_back("beta2 is not a commuting automorphism");
  if (w.product_check.commuting) w.failures.push_back("beta1 beta2 is commuting");
  if (w.defect_at_x1 != L.basis_vector(4)) {
    w.failures.push_back("[x1, beta1 beta2(x1)] differs from x5");
  }
  if (!w.beta1_involution) w.failures.push_back("beta1 is not an involution");
  w.confirmed = w.failures.empty();
  return w;
}

}  // namespace coclass::harness
