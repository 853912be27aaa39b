#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coclass/linalg/field.hpp"

namespace coclass::linalg {

template <Field F>
using Vector = std::vector<typename F::value_type>;

template <Field F>
Vector<F> zero_vector(const F& f, std::size_t n) {
  return Vector<F>(n, f.zero());
}

template <Field F>
Vector<F> unit_vector(const F& f, std::size_t n, std::size_t i) {
  Vector<F> v(n, f.zero());
  v.at(i) = f.one();
  return v;
}

template <Field F>
Vector<F> vector_from_integers(const F& f, std::initializer_list<std::int64_t> values) {
  Vector<F> v;
  v.reserve(values.size());
  for (auto x : values) v.push_back(f.from_int(x));
  return v;
}

template <Field F>
bool is_zero(const F& f, const Vector<F>& v) {
  for (const auto& x : v) {
    if (!f.is_zero(x)) return false;
  }
  return true;
}

template <Field F>
Vector<F> add(const F& f, const Vector<F>& a, const Vector<F>& b) {
  assert(a.size() == b.size());
  Vector<F> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

template <Field F>
Vector<F> sub(const F& f, const Vector<F>& a, const Vector<F>& b) {
  assert(a.size() == b.size());
  Vector<F> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

template <Field F>
Vector<F> scale(const F& f, const typename F::value_type& s, const Vector<F>& a) {
  Vector<F> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(s, a[i]);
  return r;
}

/// y += s * x
template <Field F>
void axpy(const F& f, const typename F::value_type& s, const Vector<F>& x, Vector<F>& y) {
  assert(x.size() == y.size());
  if (f.is_zero(s)) return;
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = f.add(y[i], f.mul(s, x[i]));
}

/// Dense row-major matrix over F.
template <Field F>
class Matrix {
 public:
  using value_type = typename F::value_type;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_integers(const F& field,
                              std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(field, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
      std::size_t j = 0;
      for (auto x : row) m(i, j++) = field.from_int(x);
      ++i;
    }
    return m;
  }

  static Matrix from_rows(const F& field, std::size_t cols, const std::vector<Vector<F>>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
  }

  static Matrix from_columns(const F& field, std::size_t rows, const std::vector<Vector<F>>& cols) {
    Matrix m(field, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
    return m;
  }

  const F& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<value_type>& data() const noexcept { return data_; }

  value_type& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  const value_type& operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  Vector<F> row(std::size_t r) const {
    return Vector<F>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  Vector<F> column(std::size_t c) const {
    Vector<F> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  void set_row(std::size_t r, const Vector<F>& v) {
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
  }
  void set_column(std::size_t c, const Vector<F>& v) {
    if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  /// Appends the rows of `below` (same column count).
  Matrix stacked(const Matrix& below) const {
    if (below.cols_ != cols_) throw std::invalid_argument("stack: column mismatch");
    Matrix m(field_, rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), m.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(),
              m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return m;
  }

  bool operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

template <Field F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  const F& f = a.field();
  Matrix<F> m(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& s = a(i, k);
      if (f.is_zero(s)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) = f.add(m(i, j), f.mul(s, b(k, j)));
    }
  }
  return m;
}

template <Field F>
Vector<F> apply(const Matrix<F>& m, const Vector<F>& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("apply: shape mismatch");
  const F& f = m.field();
  Vector<F> r(m.rows(), f.zero());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r[i] = f.add(r[i], f.mul(m(i, j), v[j]));
  }
  return r;
}

template <Field F>
Matrix<F> transpose(const Matrix<F>& m) {
  Matrix<F> t(m.field(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

template <Field F>
Matrix<F> subtract(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("subtract: shape mismatch");
  Matrix<F> m = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a.field().sub(a(i, j), b(i, j));
  return m;
}

template <Field F>
struct RowEchelon {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row, in order
};

/// Gauss-Jordan elimination. Only the first `pivot_cols` columns are eligible
/// as pivots, which lets augmented systems reduce their left block only.
template <Field F>
RowEchelon<F> row_reduce(Matrix<F> m, std::optional<std::size_t> pivot_cols = std::nullopt) {
  const F f = m.field();
  const std::size_t limit = pivot_cols.value_or(m.cols());
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit && r < m.rows(); ++c) {
    std::size_t pr = r;
    while (pr < m.rows() && f.is_zero(m(pr, c))) ++pr;
    if (pr == m.rows()) continue;
    m.swap_rows(r, pr);
    const auto inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(inv, m(r, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      const auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

/// Unique reduced row-echelon form; zero rows are kept at the bottom.
template <Field F>
Matrix<F> rref(Matrix<F> m) {
  return row_reduce(std::move(m)).reduced;
}

template <Field F>
std::size_t rank(const Matrix<F>& m) {
  return row_reduce(m).pivots.size();
}

template <Field F>
bool is_invertible(const Matrix<F>& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

/// Inverse, or empty for singular / non-square input.
template <Field F>
std::optional<Matrix<F>> invert(const Matrix<F>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  const F& f = m.field();
  Matrix<F> aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = f.one();
  }
  auto ech = row_reduce(std::move(aug), n);
  if (ech.pivots.size() != n) return std::nullopt;
  Matrix<F> inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
  return inv;
}

/// Basis vectors of {x : m x = 0} read off the reduced form (one per free column).
template <Field F>
std::vector<Vector<F>> kernel_vectors(const RowEchelon<F>& ech, std::size_t cols) {
  const F& f = ech.reduced.field();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<Vector<F>> out;
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    Vector<F> x(cols, f.zero());
    x[fc] = f.one();
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) x[ech.pivots[i]] = f.neg(ech.reduced(i, fc));
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace coclass::linalg
