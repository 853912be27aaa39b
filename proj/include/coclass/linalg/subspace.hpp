#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "coclass/linalg/matrix.hpp"

namespace coclass::linalg {

/// A subspace of F^n held by its reduced row-echelon basis. The rref basis is
/// canonical, so equality is entry-wise equality.
template <Field F>
class Subspace {
 public:
  static Subspace zero(const F& f, std::size_t n) { return Subspace(Matrix<F>(f, 0, n), {}); }

  static Subspace full(const F& f, std::size_t n) {
    std::vector<std::size_t> pivots(n);
    for (std::size_t i = 0; i < n; ++i) pivots[i] = i;
    return Subspace(Matrix<F>::identity(f, n), std::move(pivots));
  }

  /// Row space of `m`.
  static Subspace row_space(const Matrix<F>& m) {
    auto ech = row_reduce(m);
    const std::size_t r = ech.pivots.size();
    Matrix<F> basis(m.field(), r, m.cols());
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) basis(i, j) = ech.reduced(i, j);
    return Subspace(std::move(basis), std::move(ech.pivots));
  }

  static Subspace span(const F& f, std::size_t n, const std::vector<Vector<F>>& vectors) {
    return row_space(Matrix<F>::from_rows(f, n, vectors));
  }

  const F& field() const noexcept { return basis_.field(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  const Matrix<F>& basis() const noexcept { return basis_; }
  Vector<F> basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector<F>> basis_vectors() const {
    std::vector<Vector<F>> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
    return out;
  }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_dim(); }

  /// Residual of v after elimination against the basis; zero iff v is contained.
  Vector<F> residual(Vector<F> v) const {
    if (v.size() != ambient_dim()) throw std::invalid_argument("residual: dimension mismatch");
    const F& f = field();
    for (std::size_t i = 0; i < dim(); ++i) {
      const auto c = v[pivots_[i]];
      if (f.is_zero(c)) continue;
      for (std::size_t j = 0; j < ambient_dim(); ++j) v[j] = f.sub(v[j], f.mul(c, basis_(i, j)));
    }
    return v;
  }

  bool contains(const Vector<F>& v) const { return linalg::is_zero(field(), residual(v)); }

  /// Coordinates of v in the rref basis, or empty if v is outside.
  std::optional<Vector<F>> coordinates(const Vector<F>& v) const {
    if (!contains(v)) return std::nullopt;
    Vector<F> c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

 private:
  Subspace(Matrix<F> basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
};

template <Field F>
Subspace<F> kernel(const Matrix<F>& m) {
  auto ech = row_reduce(m);
  return Subspace<F>::span(m.field(), m.cols(), kernel_vectors(ech, m.cols()));
}

template <Field F>
struct AffineSolution {
  Vector<F> particular;
  Subspace<F> homogeneous;
};

/// Full solution set of m x = b, or empty when inconsistent.
template <Field F>
std::optional<AffineSolution<F>> solve_affine(const Matrix<F>& m, const Vector<F>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve_affine: rhs length mismatch");
  const F& f = m.field();
  const std::size_t n = m.cols();
  Matrix<F> aug(f, m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  auto ech = row_reduce(std::move(aug), n);
  for (std::size_t i = ech.pivots.size(); i < m.rows(); ++i) {
    if (!f.is_zero(ech.reduced(i, n))) return std::nullopt;
  }
  Vector<F> x(n, f.zero());
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) x[ech.pivots[i]] = ech.reduced(i, n);
  return AffineSolution<F>{std::move(x), Subspace<F>::span(f, n, kernel_vectors(ech, n))};
}

/// Matrix whose kernel is exactly `s`.
template <Field F>
Matrix<F> annihilator(const Subspace<F>& s) {
  auto ech = row_reduce(s.basis());
  return Matrix<F>::from_rows(s.field(), s.ambient_dim(), kernel_vectors(ech, s.ambient_dim()));
}

template <Field F>
Subspace<F> subspace_sum(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("sum: ambient mismatch");
  return Subspace<F>::row_space(a.basis().stacked(b.basis()));
}

template <Field F>
Subspace<F> subspace_intersect(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("intersect: ambient mismatch");
  return kernel(annihilator(a).stacked(annihilator(b)));
}

template <Field F>
bool contains(const Subspace<F>& s, const Vector<F>& v) {
  return s.contains(v);
}

template <Field F>
bool is_subspace_of(const Subspace<F>& a, const Subspace<F>& b) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!b.contains(a.basis_vector(i))) return false;
  }
  return true;
}

}  // namespace coclass::linalg
