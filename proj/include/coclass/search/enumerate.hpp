#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "coclass/maps/linear_map.hpp"

namespace coclass::search {

using linalg::BigInt;
using linalg::PrimeField;
using Algebra = algebra::LieAlgebra<PrimeField>;
using Map = maps::LinearMap<PrimeField>;
using Vec = linalg::Vector<PrimeField>;

enum class SetKind { commuting, central, full };

const char* to_string(SetKind kind) noexcept;

/// Row-major comparison of matrix entries; the canonical member order.
bool map_less(const Map& a, const Map& b);

/// A finite set of automorphisms of one algebra over F_p. Explicit sets hold
/// their members sorted and deduplicated. A symbolic set stands for all of
/// GL(n, p), which is what every kind of set is for an abelian algebra.
struct AutomorphismSet {
  SetKind kind = SetKind::commuting;
  std::size_t dim = 0;
  std::uint32_t modulus = 0;
  bool symbolic = false;
  std::vector<Map> members;

  BigInt size() const;
  bool contains(const Map& f) const;
};

/// |GL(n, p)| = prod_{i<n} (p^n - p^i).
BigInt general_linear_order(std::size_t n, std::uint32_t p);

struct EnumerationOptions {
  /// Cap on the projected number of complete generator assignments.
  double budget = 1e8;
  /// Worker threads for the root branches (0 = hardware concurrency).
  unsigned parallelism = 1;
  /// Report abelian algebras symbolically instead of enumerating GL(n, p).
  bool short_circuit_abelian = true;
  /// Cap on p^(n^2) for the brute-force oracles.
  double bruteforce_budget = 2e5;
};

/// The projected search size exceeds the configured budget. Nothing is
/// returned in that case: partial sets would corrupt closure verdicts.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string what, long double projected, double budget, long double branch_width,
                 std::size_t branch);
  long double projected() const noexcept { return projected_; }
  double budget() const noexcept { return budget_; }
  /// Widest single branching factor and the generator step it belongs to.
  long double branch_width() const noexcept { return branch_width_; }
  std::size_t branch() const noexcept { return branch_; }

 private:
  long double projected_;
  double budget_;
  long double branch_width_;
  std::size_t branch_;
};

/// Upper bound on the number of complete generator assignments the
/// commuting search visits, and the widest single step.
struct SearchProjection {
  long double total = 1;
  long double widest = 1;
  std::size_t widest_step = 0;
};
SearchProjection project_commuting_search(const Algebra& L);

/// All commuting automorphisms. Generator images are chosen one at a time in
/// g + Z_2(L), subject to the linear conditions [w_t, g_t] = 0 and
/// [w_s, g_t] + [w_t, g_s] = 0 for s < t; partial assignments are also pruned
/// when the subalgebra they generate is inconsistent with a homomorphism or
/// violates [f(y), y] = 0. Survivors are extended through the generator
/// presentation and filtered exactly.
AutomorphismSet enumerate_commuting(const Algebra& L, const EnumerationOptions& options = {});

/// All central automorphisms id + phi with phi: L -> Z(L) vanishing on L'.
AutomorphismSet enumerate_central(const Algebra& L, const EnumerationOptions& options = {});

/// Oracles: filter every n x n matrix over F_p. `kind` selects the predicate.
AutomorphismSet enumerate_bruteforce(const Algebra& L, SetKind kind,
                                     const EnumerationOptions& options = {});
AutomorphismSet enumerate_aut_bruteforce(const Algebra& L, const EnumerationOptions& options = {});
AutomorphismSet enumerate_commuting_bruteforce(const Algebra& L,
                                               const EnumerationOptions& options = {});

/// Up to `limit` members on each side of the symmetric difference.
struct SetComparison {
  bool equal = true;
  std::vector<Map> only_in_first;
  std::vector<Map> only_in_second;
};
SetComparison sets_equal(const AutomorphismSet& a, const AutomorphismSet& b, std::size_t limit = 5);

/// Structural facts every commuting set must satisfy: identity present,
/// closed under inverse, and containing every central automorphism.
/// Returns human-readable failures (empty when all hold).
std::vector<std::string> commuting_set_violations(const Algebra& L, const AutomorphismSet& commuting,
                                                  const AutomorphismSet& central);

}  // namespace coclass::search
