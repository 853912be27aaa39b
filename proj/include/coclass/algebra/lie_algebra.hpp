#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coclass/linalg/matrix.hpp"
#include "coclass/linalg/subspace.hpp"

namespace coclass::algebra {

using linalg::Field;
using linalg::Matrix;
using linalg::Rational;
using linalg::Subspace;
using linalg::Vector;

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotNilpotentError : public AlgebraError {
 public:
  NotNilpotentError() : AlgebraError("algebra is not nilpotent") {}
};

/// Field-independent structure constants: [e_i, e_j] = sum_k c_ij^k e_k,
/// stored for i < j only. Coefficients are exact rationals so the same table
/// can be reduced into any F_p whose characteristic avoids the denominators.
class StructureTable {
 public:
  using Terms = std::map<std::size_t, Rational>;  // k -> c

  explicit StructureTable(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }

  /// Adds c * e_k to [e_i, e_j]. Pairs with i > j are stored with the sign
  /// flipped; i == j is rejected.
  StructureTable& add(std::size_t i, std::size_t j, std::size_t k, const Rational& c);

  const std::map<std::pair<std::size_t, std::size_t>, Terms>& brackets() const noexcept {
    return brackets_;
  }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  StructureTable& set_labels(std::vector<std::string> labels);

  bool operator==(const StructureTable& o) const {
    return dim_ == o.dim_ && brackets_ == o.brackets_;
  }

 private:
  std::size_t dim_;
  std::map<std::pair<std::size_t, std::size_t>, Terms> brackets_;
  std::vector<std::string> labels_;
};

/// Default labels e1..en.
std::vector<std::string> default_labels(std::size_t n);

/// Block-diagonal sum; the second summand's indices are shifted by a.dim().
StructureTable direct_sum(const StructureTable& a, const StructureTable& b);

/// A finite-dimensional Lie algebra over F given by structure constants.
template <Field F>
class LieAlgebra {
 public:
  using value_type = typename F::value_type;

  struct Term {
    std::size_t i, j, k;  // i < j
    value_type c;
  };

  LieAlgebra(F field, const StructureTable& table)
      : field_(std::move(field)),
        dim_(table.dim()),
        labels_(table.labels()),
        dense_(dim_ * dim_ * dim_, field_.zero()) {
    if (dim_ == 0) throw AlgebraError("Lie algebra must have dimension >= 1");
    for (const auto& [ij, terms] : table.brackets()) {
      for (const auto& [k, c] : terms) {
        auto v = field_.from_rational(c);
        if (!v) {
          throw AlgebraError("structure constant " + c.str() + " is undefined over " +
                             field_.name());
        }
        if (field_.is_zero(*v)) continue;
        terms_.push_back({ij.first, ij.second, k, *v});
        dense_[index(ij.first, ij.second, k)] = *v;
        dense_[index(ij.second, ij.first, k)] = field_.neg(*v);
      }
    }
  }

  const F& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_abelian() const noexcept { return terms_.empty(); }

  /// c_ij^k, for any ordering of i and j.
  const value_type& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return dense_[index(i, j, k)];
  }

  Vector<F> bracket_basis(std::size_t i, std::size_t j) const {
    Vector<F> v(dim_);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = dense_[index(i, j, k)];
    return v;
  }

  /// Bilinear extension of the structure constants.
  Vector<F> bracket(const Vector<F>& x, const Vector<F>& y) const {
    Vector<F> r(dim_, field_.zero());
    bracket_accumulate(x, y, r);
    return r;
  }

  /// r += [x, y]
  void bracket_accumulate(const Vector<F>& x, const Vector<F>& y, Vector<F>& r) const {
    for (const auto& t : terms_) {
      const auto s = field_.sub(field_.mul(x[t.i], y[t.j]), field_.mul(x[t.j], y[t.i]));
      if (!field_.is_zero(s)) r[t.k] = field_.add(r[t.k], field_.mul(t.c, s));
    }
  }

  Vector<F> basis_vector(std::size_t i) const { return linalg::unit_vector(field_, dim_, i); }

  /// Structure constants as rationals (canonical residues for prime fields).
  StructureTable table() const {
    StructureTable t(dim_);
    for (const auto& term : terms_) t.add(term.i, term.j, term.k, field_.to_rational(term.c));
    t.set_labels(labels_);
    return t;
  }

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const noexcept {
    return (i * dim_ + j) * dim_ + k;
  }

  F field_;
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<Term> terms_;
  std::vector<value_type> dense_;
};

template <Field F>
LieAlgebra<F> direct_sum(const LieAlgebra<F>& a, const LieAlgebra<F>& b) {
  if (!(a.field() == b.field())) throw AlgebraError("direct_sum: field mismatch");
  return LieAlgebra<F>(a.field(), direct_sum(a.table(), b.table()));
}

template <Field F>
struct JacobiViolation {
  std::size_t i, j, k;
  Vector<F> residual;
};

/// Empty iff the Jacobi identity holds on every basis triple i < j < k.
/// The residual is [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]].
/// Antisymmetry holds by construction of the storage.
template <Field F>
std::vector<JacobiViolation<F>> validate(const LieAlgebra<F>& L) {
  std::vector<JacobiViolation<F>> out;
  const std::size_t n = L.dim();
  const F& f = L.field();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto ei = L.basis_vector(i);
        const auto ej = L.basis_vector(j);
        const auto ek = L.basis_vector(k);
        Vector<F> r(n, f.zero());
        L.bracket_accumulate(ei, L.bracket_basis(j, k), r);
        L.bracket_accumulate(ej, L.bracket_basis(k, i), r);
        L.bracket_accumulate(ek, L.bracket_basis(i, j), r);
        if (!linalg::is_zero(f, r)) out.push_back({i, j, k, std::move(r)});
      }
    }
  }
  return out;
}

}  // namespace coclass::algebra
