#pragma once

#include <stdexcept>
#include <vector>

#include "coclass/algebra/series.hpp"

namespace coclass::maps {

using algebra::LieAlgebra;
using linalg::Field;
using linalg::Matrix;
using linalg::Subspace;
using linalg::Vector;

class MapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Linear endomorphism of L in coordinates; column j is the image of e_j.
template <Field F>
class LinearMap {
 public:
  explicit LinearMap(Matrix<F> m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw MapError("linear map matrix must be square");
  }

  static LinearMap identity(const F& f, std::size_t n) { return LinearMap(Matrix<F>::identity(f, n)); }

  /// images[j] = f(e_j)
  static LinearMap from_images(const F& f, const std::vector<Vector<F>>& images) {
    return LinearMap(Matrix<F>::from_columns(f, images.size(), images));
  }

  /// Convenience for integer-valued maps: images[j] lists f(e_j) coordinates.
  static LinearMap from_integer_images(const F& f,
                                       const std::vector<std::vector<std::int64_t>>& images) {
    std::vector<Vector<F>> cols;
    for (const auto& img : images) {
      Vector<F> v;
      for (auto x : img) v.push_back(f.from_int(x));
      cols.push_back(std::move(v));
    }
    return from_images(f, cols);
  }

  std::size_t dim() const noexcept { return m_.rows(); }
  const F& field() const noexcept { return m_.field(); }
  const Matrix<F>& matrix() const noexcept { return m_; }

  Vector<F> image(std::size_t j) const { return m_.column(j); }
  Vector<F> operator()(const Vector<F>& x) const { return linalg::apply(m_, x); }

  bool operator==(const LinearMap& o) const { return m_ == o.m_; }

 private:
  Matrix<F> m_;
};

/// compose(f, g)(x) = f(g(x)): g is applied first, so compose(b1, b2) is the
/// juxtaposition b1 b2.
template <Field F>
LinearMap<F> compose(const LinearMap<F>& f, const LinearMap<F>& g) {
  return LinearMap<F>(linalg::multiply(f.matrix(), g.matrix()));
}

template <Field F>
LinearMap<F> inverse(const LinearMap<F>& f) {
  auto inv = linalg::invert(f.matrix());
  if (!inv) throw MapError("inverse of a singular linear map");
  return LinearMap<F>(std::move(*inv));
}

enum class DefectKind { not_homomorphism, not_invertible, not_commuting, not_central };

const char* to_string(DefectKind k) noexcept;

/// One failing basis tuple and what was left over.
template <Field F>
struct DefectWitness {
  std::vector<std::size_t> indices;
  Vector<F> residual;
};

/// A predicate check. No witnesses means the predicate holds; `kind` names
/// the predicate that failed (or the last one checked when clean).
template <Field F>
struct DefectReport {
  DefectKind kind;
  std::vector<DefectWitness<F>> witnesses;

  bool clean() const noexcept { return witnesses.empty(); }
};

/// f([e_i, e_j]) - [f(e_i), f(e_j)] for i < j; witnesses carry that residual.
template <Field F>
DefectReport<F> is_homomorphism(const LieAlgebra<F>& L, const LinearMap<F>& f) {
  if (f.dim() != L.dim()) throw MapError("map and algebra dimensions differ");
  DefectReport<F> report{DefectKind::not_homomorphism, {}};
  const std::size_t n = L.dim();
  std::vector<Vector<F>> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = f.image(i);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto lhs = f(L.bracket_basis(i, j));
      auto rhs = L.bracket(images[i], images[j]);
      auto r = linalg::sub(L.field(), lhs, rhs);
      if (!linalg::is_zero(L.field(), r)) report.witnesses.push_back({{i, j}, std::move(r)});
    }
  }
  return report;
}

/// Homomorphism plus invertibility. A singular map's witness is a nonzero
/// kernel vector.
template <Field F>
DefectReport<F> is_automorphism(const LieAlgebra<F>& L, const LinearMap<F>& f) {
  auto hom = is_homomorphism(L, f);
  if (!hom.clean()) return hom;
  DefectReport<F> report{DefectKind::not_invertible, {}};
  const auto ker = linalg::kernel(f.matrix());
  if (!ker.is_zero()) report.witnesses.push_back({{}, ker.basis_vector(0)});
  return report;
}

/// Linear part of the commuting test. B(e_i) = [f(e_i), e_i] and
/// S(e_i, e_j) = [f(e_i), e_j] + [f(e_j), e_i]; since
/// B(sum a_i e_i) = sum a_i^2 B(e_i) + sum_{i<j} a_i a_j S(e_i, e_j), all of
/// these vanish iff [f(x), x] = 0 for every x.
template <Field F>
DefectReport<F> commuting_defect(const LieAlgebra<F>& L, const LinearMap<F>& f) {
  if (f.dim() != L.dim()) throw MapError("map and algebra dimensions differ");
  DefectReport<F> report{DefectKind::not_commuting, {}};
  const std::size_t n = L.dim();
  const F& fld = L.field();
  std::vector<Vector<F>> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = f.image(i);
  for (std::size_t i = 0; i < n; ++i) {
    auto b = L.bracket(images[i], L.basis_vector(i));
    if (!linalg::is_zero(fld, b)) report.witnesses.push_back({{i}, std::move(b)});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector<F> s(n, fld.zero());
      L.bracket_accumulate(images[i], L.basis_vector(j), s);
      L.bracket_accumulate(images[j], L.basis_vector(i), s);
      if (!linalg::is_zero(fld, s)) report.witnesses.push_back({{i, j}, std::move(s)});
    }
  }
  return report;
}

/// is_homomorphism(L, f).clean() without building a report.
template <Field F>
bool is_homomorphism_clean(const LieAlgebra<F>& L, const LinearMap<F>& f) {
  if (f.dim() != L.dim()) throw MapError("map and algebra dimensions differ");
  const std::size_t n = L.dim();
  const F& fld = L.field();
  const auto& m = f.matrix();
  Vector<F> r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::fill(r.begin(), r.end(), fld.zero());
      for (std::size_t w = 0; w < n; ++w) {
        const auto& c = L.constant(i, j, w);
        if (fld.is_zero(c)) continue;
        for (std::size_t k = 0; k < n; ++k) r[k] = fld.add(r[k], fld.mul(c, m(k, w)));
      }
      for (const auto& t : L.terms()) {
        const auto s = fld.sub(fld.mul(m(t.i, i), m(t.j, j)), fld.mul(m(t.j, i), m(t.i, j)));
        if (!fld.is_zero(s)) r[t.k] = fld.sub(r[t.k], fld.mul(t.c, s));
      }
      if (!linalg::is_zero(fld, r)) return false;
    }
  }
  return true;
}

/// commuting_defect(L, f).clean() without building a report.
template <Field F>
bool commuting_defect_clean(const LieAlgebra<F>& L, const LinearMap<F>& f) {
  if (f.dim() != L.dim()) throw MapError("map and algebra dimensions differ");
  const std::size_t n = L.dim();
  const F& fld = L.field();
  const auto& m = f.matrix();
  Vector<F> r(n);
  // r += [f(e_a), e_b]
  auto accumulate = [&](std::size_t a, std::size_t b) {
    for (const auto& t : L.terms()) {
      if (t.j == b) r[t.k] = fld.add(r[t.k], fld.mul(t.c, m(t.i, a)));
      if (t.i == b) r[t.k] = fld.sub(r[t.k], fld.mul(t.c, m(t.j, a)));
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      std::fill(r.begin(), r.end(), fld.zero());
      accumulate(i, j);
      if (j != i) accumulate(j, i);
      if (!linalg::is_zero(fld, r)) return false;
    }
  }
  return true;
}

/// Membership in the set of commuting automorphisms.
template <Field F>
bool is_commuting(const LieAlgebra<F>& L, const LinearMap<F>& f) {
  return is_homomorphism_clean(L, f) && commuting_defect_clean(L, f) &&
         linalg::is_invertible(f.matrix());
}

/// (f - id)(e_i) in Z(L) for every i, after the automorphism check. Witness
/// residuals are the components outside Z(L).
template <Field F>
DefectReport<F> is_central(const LieAlgebra<F>& L, const LinearMap<F>& f) {
  auto aut = is_automorphism(L, f);
  if (!aut.clean()) return aut;
  DefectReport<F> report{DefectKind::not_central, {}};
  const auto Z = algebra::center(L);
  for (std::size_t i = 0; i < L.dim(); ++i) {
    auto r = Z.residual(linalg::sub(L.field(), f.image(i), L.basis_vector(i)));
    if (!linalg::is_zero(L.field(), r)) report.witnesses.push_back({{i}, std::move(r)});
  }
  return report;
}

}  // namespace coclass::maps
