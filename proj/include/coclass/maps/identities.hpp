#pragma once

#include <algorithm>
#include <array>
#include <initializer_list>
#include <string_view>
#include <vector>

#include "coclass/maps/linear_map.hpp"

namespace coclass::maps {

/// Consequences of [f(x), x] = 0 that hold for every commuting automorphism.
/// With D = f - id:
///   first_i        [f(x), y] = [x, f(y)]
///   first_ii       [D(x), y] = [x, D(y)]
///   first_iii      f(Z(L)) is contained in Z(L)
///   second_i       [D(x), [y, z]] = [D(y), [x, z]]
///   second_ii      [y, [y, D(x)]] = 0 (and its polarisation in y)
///   second_iii     [D(x), [y, z]] = 2 [z, [y, D(x)]]
///   second_iv      [D(x), [y, z]] = 0
///   in_second_center  D(x) lies in Z_2(L)
enum class Identity {
  first_i,
  first_ii,
  first_iii,
  second_i,
  second_ii,
  second_iii,
  second_iv,
  in_second_center,
};

inline constexpr std::array<Identity, 8> all_identities{
    Identity::first_i,   Identity::first_ii,   Identity::first_iii,  Identity::second_i,
    Identity::second_ii, Identity::second_iii, Identity::second_iv, Identity::in_second_center};

std::string_view to_string(Identity id) noexcept;

template <Field F>
struct IdentityViolation {
  Identity identity;
  std::vector<std::size_t> indices;
  Vector<F> residual;
};

template <Field F>
struct IdentityReport {
  std::vector<IdentityViolation<F>> violations;
  std::size_t checks = 0;

  bool clean() const noexcept { return violations.empty(); }
};

/// Evaluates every identity on all basis tuples, term by term, without
/// checking that f is commuting. Each identity is multilinear (second_ii
/// after polarisation), so basis tuples suffice. `record(identity, indices,
/// residual)` is called once per check, in a fixed order.
template <Field F, class Record>
void evaluate_identities_direct(const LieAlgebra<F>& L, const Subspace<F>& Z,
                                const Subspace<F>& Z2, const Matrix<F>& m, Record&& record) {
  const std::size_t n = L.dim();
  const F& fld = L.field();
  const auto minus_two = fld.neg(fld.from_int(2));
  std::vector<Vector<F>> e(n), img(n), d(n), yd(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    e[i] = L.basis_vector(i);
    img[i] = m.column(i);
    d[i] = linalg::sub(fld, img[i], e[i]);
  }
  // yd[y * n + x] = [e_y, D(e_x)]
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) yd[y * n + x] = L.bracket(e[y], d[x]);

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      record(Identity::first_i, {x, y},
             linalg::sub(fld, L.bracket(img[x], e[y]), L.bracket(e[x], img[y])));
      record(Identity::first_ii, {x, y},
             linalg::sub(fld, L.bracket(d[x], e[y]), L.bracket(e[x], d[y])));
    }
  }
  for (std::size_t b = 0; b < Z.dim(); ++b) {
    record(Identity::first_iii, {b}, Z.residual(linalg::apply(m, Z.basis_vector(b))));
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto& y_dx = yd[y * n + x];
      record(Identity::second_ii, {y, y, x}, L.bracket(e[y], y_dx));
      for (std::size_t y2 = y + 1; y2 < n; ++y2) {
        Vector<F> r(n, fld.zero());
        L.bracket_accumulate(e[y], yd[y2 * n + x], r);
        L.bracket_accumulate(e[y2], y_dx, r);
        record(Identity::second_ii, {y, y2, x}, r);
      }
      for (std::size_t z = 0; z < n; ++z) {
        const auto lhs = L.bracket(d[x], L.bracket_basis(y, z));
        record(Identity::second_i, {x, y, z},
               linalg::sub(fld, lhs, L.bracket(d[y], L.bracket_basis(x, z))));
        auto rhs = L.bracket(e[z], y_dx);
        auto iii = lhs;
        linalg::axpy(fld, minus_two, rhs, iii);
        record(Identity::second_iii, {x, y, z}, iii);
        record(Identity::second_iv, {x, y, z}, lhs);
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    record(Identity::in_second_center, {x}, Z2.residual(d[x]));
  }
}

/// The identity checks of one algebra compiled to affine functions of the
/// matrix entries of f. Every residual is affine in f, so evaluating the
/// direct checks on the zero map and on each matrix unit E_ab determines it
/// exactly; evaluation then costs one sparse product per map.
template <Field F>
class IdentityContext {
 public:
  using value_type = typename F::value_type;

  explicit IdentityContext(const LieAlgebra<F>& L)
      : field_(L.field()), dim_(L.dim()), center_(algebra::center(L)),
        second_center_(algebra::second_center(L)) {
    const std::size_t n = dim_;
    std::vector<Check> checks;
    auto collect = [&](const Matrix<F>& m, auto&& visit) {
      std::size_t c = 0;
      evaluate_identities_direct(L, center_, second_center_, m,
                                 [&](Identity id, std::initializer_list<std::size_t> idx,
                                     const Vector<F>& r) { visit(c++, id, idx, r); });
    };
    // Constant part: the residuals of the zero map.
    collect(Matrix<F>(field_, n, n),
            [&](std::size_t, Identity id, std::initializer_list<std::size_t> idx,
                const Vector<F>& r) {
              Check ch{id, std::vector<std::size_t>(idx), {}};
              for (std::size_t k = 0; k < r.size(); ++k)
                ch.coords.push_back({r[k], {}});
              checks.push_back(std::move(ch));
            });
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        Matrix<F> unit(field_, n, n);
        unit(a, b) = field_.one();
        collect(unit, [&](std::size_t c, Identity, std::initializer_list<std::size_t>,
                          const Vector<F>& r) {
          for (std::size_t k = 0; k < r.size(); ++k) {
            const auto slope = field_.sub(r[k], checks[c].coords[k].constant);
            if (!field_.is_zero(slope)) checks[c].coords[k].slopes.push_back({a * n + b, slope});
          }
        });
      }
    }
    check_count_ = checks.size();
    for (auto& ch : checks) {
      bool trivial = true;
      for (const auto& co : ch.coords)
        if (!field_.is_zero(co.constant) || !co.slopes.empty()) trivial = false;
      if (!trivial) checks_.push_back(std::move(ch));
    }
  }

  std::size_t dim() const noexcept { return dim_; }
  const Subspace<F>& center() const noexcept { return center_; }
  const Subspace<F>& second_center() const noexcept { return second_center_; }
  /// Checks performed per map, including those that vanish identically.
  std::size_t check_count() const noexcept { return check_count_; }

  IdentityReport<F> evaluate(const Matrix<F>& m) const {
    IdentityReport<F> report;
    report.checks = check_count_;
    const auto& entries = m.data();
    Vector<F> r(dim_);
    for (const auto& ch : checks_) {
      bool zero = true;
      for (std::size_t k = 0; k < dim_; ++k) {
        auto v = ch.coords[k].constant;
        for (const auto& [idx, slope] : ch.coords[k].slopes)
          v = field_.add(v, field_.mul(slope, entries[idx]));
        if (!field_.is_zero(v)) zero = false;
        r[k] = std::move(v);
      }
      if (!zero) report.violations.push_back({ch.identity, ch.indices, r});
    }
    return report;
  }

 private:
  struct Coordinate {
    value_type constant;
    std::vector<std::pair<std::size_t, value_type>> slopes;  // (row-major entry, coefficient)
  };
  struct Check {
    Identity identity;
    std::vector<std::size_t> indices;
    std::vector<Coordinate> coords;
  };

  F field_;
  std::size_t dim_;
  Subspace<F> center_;
  Subspace<F> second_center_;
  std::size_t check_count_ = 0;
  std::vector<Check> checks_;
};

/// Evaluates every identity on all basis tuples without checking that f is
/// commuting.
template <Field F>
IdentityReport<F> evaluate_identities(const LieAlgebra<F>& L, const LinearMap<F>& f,
                                      const IdentityContext<F>& ctx) {
  if (f.dim() != L.dim() || ctx.dim() != L.dim()) {
    throw MapError("map and algebra dimensions differ");
  }
  return ctx.evaluate(f.matrix());
}

/// Reference path: runs the direct checks on f alone.
template <Field F>
IdentityReport<F> evaluate_identities(const LieAlgebra<F>& L, const LinearMap<F>& f) {
  if (f.dim() != L.dim()) throw MapError("map and algebra dimensions differ");
  IdentityReport<F> report;
  evaluate_identities_direct(L, algebra::center(L), algebra::second_center(L), f.matrix(),
                             [&](Identity id, std::initializer_list<std::size_t> idx,
                                 const Vector<F>& r) {
                               ++report.checks;
                               if (!linalg::is_zero(L.field(), r))
                                 report.violations.push_back({id, std::vector(idx), r});
                             });
  return report;
}

/// evaluate_identities for a commuting automorphism; throws MapError
/// otherwise.
template <Field F>
IdentityReport<F> lemma_identity_suite(const LieAlgebra<F>& L, const LinearMap<F>& f,
                                       const IdentityContext<F>& ctx) {
  if (!is_commuting(L, f)) {
    throw MapError("identity suite requires a commuting automorphism");
  }
  return evaluate_identities(L, f, ctx);
}

template <Field F>
IdentityReport<F> lemma_identity_suite(const LieAlgebra<F>& L, const LinearMap<F>& f) {
  return lemma_identity_suite(L, f, IdentityContext<F>(L));
}

}  // namespace coclass::maps
