#pragma once

#include <vector>

#include "coclass/algebra/lie_algebra.hpp"

namespace coclass::algebra {

class NotSubalgebraError : public AlgebraError {
 public:
  NotSubalgebraError() : AlgebraError("subspace is not closed under the bracket") {}
};

/// Series and invariants. Indexing: lower[0] = L, lower[1] = L' = [L,L],
/// lower[i+1] = [L, lower[i]]; upper[0] = 0, upper[1] = Z(L), ...
template <Field F>
struct SeriesProfile {
  std::vector<Subspace<F>> lower;
  std::vector<Subspace<F>> upper;
  std::size_t nilpotency_class;
  std::size_t coclass;
};

/// span{[a, b] : a in basis(A), b in basis(B)}
template <Field F>
Subspace<F> bracket_subspaces(const LieAlgebra<F>& L, const Subspace<F>& A, const Subspace<F>& B) {
  std::vector<Vector<F>> spanning;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    const auto a = A.basis_vector(i);
    for (std::size_t j = 0; j < B.dim(); ++j) {
      auto v = L.bracket(a, B.basis_vector(j));
      if (!linalg::is_zero(L.field(), v)) spanning.push_back(std::move(v));
    }
  }
  return Subspace<F>::span(L.field(), L.dim(), spanning);
}

/// {x : [x, s] in target for every s in basis(S)}, as the kernel of the
/// stacked systems Ann(target) * ad(s).
template <Field F>
Subspace<F> bracket_preimage(const LieAlgebra<F>& L, const Subspace<F>& S,
                             const Subspace<F>& target) {
  const std::size_t n = L.dim();
  const auto ann = linalg::annihilator(target);
  Matrix<F> stacked(L.field(), 0, n);
  for (std::size_t b = 0; b < S.dim(); ++b) {
    const auto s = S.basis_vector(b);
    Matrix<F> ad(L.field(), n, n);  // column i = [e_i, s]
    for (std::size_t i = 0; i < n; ++i) ad.set_column(i, L.bracket(L.basis_vector(i), s));
    stacked = stacked.stacked(linalg::multiply(ann, ad));
  }
  return linalg::kernel(stacked);
}

template <Field F>
Subspace<F> whole(const LieAlgebra<F>& L) {
  return Subspace<F>::full(L.field(), L.dim());
}

template <Field F>
Subspace<F> zero_subspace(const LieAlgebra<F>& L) {
  return Subspace<F>::zero(L.field(), L.dim());
}

template <Field F>
Subspace<F> center(const LieAlgebra<F>& L) {
  return bracket_preimage(L, whole(L), zero_subspace(L));
}

/// Z_2(L) = {x : [x, L] in Z(L)}
template <Field F>
Subspace<F> second_center(const LieAlgebra<F>& L) {
  return bracket_preimage(L, whole(L), center(L));
}

template <Field F>
Subspace<F> derived_subalgebra(const LieAlgebra<F>& L) {
  return bracket_subspaces(L, whole(L), whole(L));
}

/// Stops at 0 or at the first repeated term (non-nilpotent case).
template <Field F>
std::vector<Subspace<F>> lower_central_series(const LieAlgebra<F>& L) {
  std::vector<Subspace<F>> out{whole(L)};
  while (!out.back().is_zero()) {
    auto next = bracket_subspaces(L, whole(L), out.back());
    if (next == out.back()) break;
    out.push_back(std::move(next));
  }
  return out;
}

/// Stops at L or at the first repeated term (non-nilpotent case).
template <Field F>
std::vector<Subspace<F>> upper_central_series(const LieAlgebra<F>& L) {
  std::vector<Subspace<F>> out{zero_subspace(L)};
  while (!out.back().is_full()) {
    auto next = bracket_preimage(L, whole(L), out.back());
    if (next == out.back()) break;
    out.push_back(std::move(next));
  }
  return out;
}

template <Field F>
bool is_nilpotent(const LieAlgebra<F>& L) {
  return lower_central_series(L).back().is_zero();
}

/// Least c with L^c = 0 (so abelian algebras have class 1).
template <Field F>
std::size_t nilpotency_class(const LieAlgebra<F>& L) {
  const auto lower = lower_central_series(L);
  if (!lower.back().is_zero()) throw NotNilpotentError();
  return lower.size() - 1;
}

template <Field F>
std::size_t coclass(const LieAlgebra<F>& L) {
  return L.dim() - nilpotency_class(L);
}

template <Field F>
SeriesProfile<F> series_profile(const LieAlgebra<F>& L) {
  auto lower = lower_central_series(L);
  if (!lower.back().is_zero()) throw NotNilpotentError();
  auto upper = upper_central_series(L);
  const std::size_t c = lower.size() - 1;
  return {std::move(lower), std::move(upper), c, L.dim() - c};
}

/// C_L(S) = {x : [x, s] = 0 for all s in S}
template <Field F>
Subspace<F> centralizer(const LieAlgebra<F>& L, const Subspace<F>& S) {
  return bracket_preimage(L, S, zero_subspace(L));
}

template <Field F>
Subspace<F> centralizer(const LieAlgebra<F>& L, const Vector<F>& v) {
  return centralizer(L, Subspace<F>::span(L.field(), L.dim(), {v}));
}

template <Field F>
bool is_subalgebra(const LieAlgebra<F>& L, const Subspace<F>& S) {
  return linalg::is_subspace_of(bracket_subspaces(L, S, S), S);
}

/// Nilpotency class of S as a Lie algebra in its own right (0 for S = 0).
template <Field F>
std::size_t subalgebra_class(const LieAlgebra<F>& L, const Subspace<F>& S) {
  if (!is_subalgebra(L, S)) throw NotSubalgebraError();
  std::size_t c = 0;
  Subspace<F> term = S;
  while (!term.is_zero()) {
    auto next = bracket_subspaces(L, S, term);
    if (next == term) throw NotNilpotentError();
    term = std::move(next);
    ++c;
  }
  return c;
}

template <Field F>
bool is_abelian(const LieAlgebra<F>& L, const Subspace<F>& S) {
  return subalgebra_class(L, S) <= 1;
}

}  // namespace coclass::algebra
