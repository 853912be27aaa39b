#pragma once

#include <optional>

#include "coclass/search/enumerate.hpp"

namespace coclass::search {

/// A pair of commuting automorphisms whose composite g(f(.)) is not
/// commuting, and a vector x with [x, g(f(x))] != 0.
struct ClosureWitness {
  std::size_t f_index = 0;  // positions in the set's canonical order
  std::size_t g_index = 0;
  Map f;
  Map g;
  Vec x;
  Vec value;  // [x, g(f(x))]
};

struct ClosureVerdict {
  bool closed = true;
  std::optional<ClosureWitness> witness;
  /// Composites evaluated. For exhaustive checks this is |A|^2.
  std::uint64_t pair_count = 0;
  /// Failing ordered pairs (exhaustive checks only).
  std::uint64_t failing_pairs = 0;
  /// True when the verdict is analytic (symbolic abelian set).
  bool analytic = false;
};

/// Is the set closed under composition? The commuting defect of g o f is
/// bilinear in (g, f), so the default route tests every f against a basis of
/// span(A) and only scans for g once f is known to fail. The exhaustive
/// route composes every ordered pair. Both report the lexicographically
/// first failing (f, g) and the first failing basis position of g o f.
ClosureVerdict closure_check(const Algebra& L, const AutomorphismSet& set, bool exhaustive = false);

}  // namespace coclass::search
