#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "coclass/algebra/presentation.hpp"
#include "coclass/search/enumerate.hpp"

namespace coclass::search {

namespace {

using Matrix = linalg::Matrix<PrimeField>;
using Subspace = linalg::Subspace<PrimeField>;

long double power(std::uint32_t p, std::size_t e) {
  return std::pow(static_cast<long double>(p), static_cast<long double>(e));
}

void sort_unique(std::vector<Map>& v) {
  std::sort(v.begin(), v.end(), map_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

AutomorphismSet explicit_set(SetKind kind, const Algebra& L, std::vector<Map> members) {
  sort_unique(members);
  return {kind, L.dim(), L.field().modulus(), false, std::move(members)};
}

AutomorphismSet symbolic_set(SetKind kind, const Algebra& L) {
  return {kind, L.dim(), L.field().modulus(), true, {}};
}

unsigned worker_count(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Iterates over every coefficient vector in F_p^k in lexicographic order.
template <class Visit>
void for_each_coefficients(const PrimeField& f, std::size_t k, Visit&& visit) {
  std::vector<std::uint32_t> c(k, 0);
  while (true) {
    visit(c);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++c[i] < f.modulus()) break;
      c[i] = 0;
      if (i == 0) return;
    }
    if (k == 0) return;
  }
}

void check_budget(const char* what, long double projected, double budget, long double widest,
                  std::size_t step) {
  if (projected <= budget) return;
  std::ostringstream msg;
  msg << what << ": projected " << static_cast<double>(projected) << " candidates exceeds budget "
      << budget << " (widest branch " << static_cast<double>(widest) << " at generator " << step
      << ")";
  throw BudgetExceeded(msg.str(), projected, budget, widest, step);
}

/// maps::is_central(L, f).clean() with Z(L) computed once by the caller.
bool is_central_fast(const Algebra& L, const Subspace& Z, const Map& f) {
  if (!maps::is_homomorphism_clean(L, f) || !linalg::is_invertible(f.matrix())) return false;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    if (!Z.contains(linalg::sub(L.field(), f.image(i), L.basis_vector(i)))) return false;
  }
  return true;
}

/// r += [x, y] for raw coordinate arrays.
void bracket_into(const Algebra& L, const std::uint32_t* x, const std::uint32_t* y,
                  std::uint32_t* r) {
  const PrimeField& f = L.field();
  for (const auto& t : L.terms()) {
    const auto s = f.sub(f.mul(x[t.i], y[t.j]), f.mul(x[t.j], y[t.i]));
    if (s != 0) r[t.k] = f.add(r[t.k], f.mul(t.c, s));
  }
}

bool all_zero(const std::uint32_t* v, std::size_t n) {
  return std::all_of(v, v + n, [](std::uint32_t c) { return c == 0; });
}

/// Images of the subalgebra generated by the generators fixed so far. Rows
/// are kept as (y | f(y)) reduced on the y part, so a dependent y forces the
/// matching combination of images; each new spanning element is checked
/// against [f(y), y] = 0 and its polarisation with every earlier element.
/// Storage is append-only so the search backtracks by truncation.
class KnownImages {
 public:
  struct Mark {
    std::size_t echelon, elements;
  };

  explicit KnownImages(const Algebra& L) : L_(&L), n_(L.dim()) {}

  Mark mark() const { return {pivots_.size(), elements_.size()}; }

  void rollback(Mark m) {
    pivots_.resize(m.echelon);
    echelon_.resize(m.echelon * 2 * n_);
    elements_.resize(m.elements);
  }

  /// Records f(y) = fy; false when inconsistent with earlier images or with
  /// the commuting conditions. The caller rolls back after a failure.
  bool add(const Vec& y, const Vec& fy) {
    const PrimeField& f = L_->field();
    const std::size_t w = 2 * n_;
    queue_.assign(y.begin(), y.end());
    queue_.insert(queue_.end(), fy.begin(), fy.end());
    std::vector<std::uint32_t> row(w), s(n_);
    for (std::size_t q = 0; q * w < queue_.size(); ++q) {
      std::copy(queue_.begin() + q * w, queue_.begin() + (q + 1) * w, row.begin());
      for (std::size_t e = 0; e < pivots_.size(); ++e) {
        const auto c = row[pivots_[e]];
        if (c == 0) continue;
        const auto m = f.neg(c);
        const std::uint32_t* er = &echelon_[e * w];
        for (std::size_t k = 0; k < w; ++k) row[k] = f.add(row[k], f.mul(m, er[k]));
      }
      std::size_t pivot = 0;
      while (pivot < n_ && row[pivot] == 0) ++pivot;
      if (pivot == n_) {
        if (!all_zero(&row[n_], n_)) return false;
        continue;
      }
      const std::uint32_t* a = &queue_[q * w];
      const std::uint32_t* fa = a + n_;
      std::fill(s.begin(), s.end(), 0u);
      bracket_into(*L_, fa, a, s.data());
      if (!all_zero(s.data(), n_)) return false;
      for (std::size_t e = 0; e < elements_.size(); e += w) {
        const std::uint32_t* k = &elements_[e];
        std::fill(s.begin(), s.end(), 0u);
        bracket_into(*L_, fa, k, s.data());
        bracket_into(*L_, k + n_, a, s.data());
        if (!all_zero(s.data(), n_)) return false;
      }
      const auto inv = f.inv(row[pivot]);
      for (auto& c : row) c = f.mul(inv, c);
      pivots_.push_back(pivot);
      echelon_.insert(echelon_.end(), row.begin(), row.end());
      for (std::size_t e = 0; e < elements_.size(); e += w) {
        // queue ([k, a] | [f(k), f(a)]); a and k are re-read since the queue grows
        const std::size_t base = queue_.size();
        queue_.resize(base + w, 0u);
        const std::uint32_t* k = &elements_[e];
        const std::uint32_t* aa = &queue_[q * w];
        bracket_into(*L_, k, aa, &queue_[base]);
        bracket_into(*L_, k + n_, aa + n_, &queue_[base + n_]);
      }
      elements_.insert(elements_.end(), queue_.begin() + q * w, queue_.begin() + (q + 1) * w);
    }
    return true;
  }

 private:
  const Algebra* L_;
  std::size_t n_;
  std::vector<std::size_t> pivots_;
  std::vector<std::uint32_t> echelon_;   // rows of length 2n
  std::vector<std::uint32_t> elements_;  // (a | f(a)) rows of length 2n
  std::vector<std::uint32_t> queue_;
};

/// Depth-first search over generator images with affine constraint
/// propagation. The constraint matrix of each step depends only on the
/// algebra, so it is reduced once; each node only transforms its right-hand
/// side.
class CommutingSearch {
 public:
  explicit CommutingSearch(const Algebra& L)
      : L_(L), f_(L.field()), n_(L.dim()), P_(algebra::generator_presentation(L)) {
    const auto Z2 = algebra::second_center(L);
    const bool restrict = !Z2.is_full();
    directions_ = restrict ? Z2.basis_vectors() : Subspace::full(f_, n_).basis_vectors();
    const std::size_t d = directions_.size();
    for (std::size_t t = 0; t < P_.generators.size(); ++t) {
      Step step;
      step.offset = restrict ? L.basis_vector(P_.generators[t]) : linalg::zero_vector(f_, n_);
      step.rows = n_ * (t + 1);
      Matrix aug(f_, step.rows, d + step.rows);
      for (std::size_t blk = 0; blk <= t; ++blk) {
        // block 0: [b_a, g_t]; block s+1: [b_a, g_s]
        const auto g = L.basis_vector(P_.generators[blk == 0 ? t : blk - 1]);
        for (std::size_t a = 0; a < d; ++a) {
          const auto col = L.bracket(directions_[a], g);
          for (std::size_t r = 0; r < n_; ++r) aug(blk * n_ + r, a) = col[r];
        }
      }
      for (std::size_t r = 0; r < step.rows; ++r) aug(r, d + r) = f_.one();
      auto ech = linalg::row_reduce(std::move(aug), d);
      step.pivots = ech.pivots;
      step.kernel = linalg::kernel_vectors(ech, d);
      step.transform = Matrix(f_, step.rows, step.rows);
      for (std::size_t r = 0; r < step.rows; ++r)
        for (std::size_t c = 0; c < step.rows; ++c) step.transform(r, c) = ech.reduced(r, d + c);
      steps_.push_back(std::move(step));
    }
  }

  SearchProjection projection() const {
    SearchProjection p;
    for (std::size_t t = 0; t < steps_.size(); ++t) {
      const auto width = power(f_.modulus(), steps_[t].kernel.size());
      p.total *= width;
      if (width > p.widest) {
        p.widest = width;
        p.widest_step = t;
      }
    }
    return p;
  }

  std::vector<Map> run(unsigned threads) const {
    std::vector<Map> out;
    if (steps_.empty()) {
      out.push_back(Map::identity(f_, n_));
      return out;
    }
    std::vector<Vec> images;
    const auto roots = candidates(0, images);
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(roots.size())));
    std::vector<std::vector<Map>> found(threads);
    auto work = [&](unsigned worker) {
      std::vector<Vec> w(1);
      KnownImages known(L_);
      const auto empty = known.mark();
      for (std::size_t i = worker; i < roots.size(); i += threads) {
        known.rollback(empty);
        if (!known.add(L_.basis_vector(P_.generators[0]), roots[i])) continue;
        w[0] = roots[i];
        descend(1, w, known, found[worker]);
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned k = 0; k < threads; ++k) pool.emplace_back(work, k);
      for (auto& th : pool) th.join();
    }
    for (auto& part : found)
      for (auto& m : part) out.push_back(std::move(m));
    return out;
  }

 private:
  struct Step {
    Vec offset;
    std::size_t rows = 0;
    Matrix transform{PrimeField(3), 0, 0};
    std::vector<std::size_t> pivots;
    std::vector<Vec> kernel;
  };

  /// Every image w_t satisfying the step-t linear conditions given w_0..w_{t-1}.
  std::vector<Vec> candidates(std::size_t t, const std::vector<Vec>& w) const {
    const Step& step = steps_[t];
    const auto g_t = L_.basis_vector(P_.generators[t]);
    Vec rhs(step.rows, f_.zero());
    // block 0 right-hand side is -[o_t, g_t] = 0; block s+1 is -[o_t, g_s] - [w_s, g_t]
    for (std::size_t s = 0; s < t; ++s) {
      const auto g_s = L_.basis_vector(P_.generators[s]);
      Vec v = L_.bracket(step.offset, g_s);
      L_.bracket_accumulate(w[s], g_t, v);
      for (std::size_t r = 0; r < n_; ++r) rhs[(s + 1) * n_ + r] = f_.neg(v[r]);
    }
    const auto reduced = linalg::apply(step.transform, rhs);
    for (std::size_t r = step.pivots.size(); r < step.rows; ++r) {
      if (!f_.is_zero(reduced[r])) return {};
    }
    Vec particular(directions_.size(), f_.zero());
    for (std::size_t i = 0; i < step.pivots.size(); ++i) particular[step.pivots[i]] = reduced[i];

    std::vector<Vec> out;
    for_each_coefficients(f_, step.kernel.size(), [&](const std::vector<std::uint32_t>& lambda) {
      Vec c = particular;
      for (std::size_t j = 0; j < lambda.size(); ++j) {
        if (lambda[j] != 0) linalg::axpy(f_, lambda[j], step.kernel[j], c);
      }
      Vec img = step.offset;
      for (std::size_t a = 0; a < c.size(); ++a) {
        if (c[a] != 0) linalg::axpy(f_, c[a], directions_[a], img);
      }
      out.push_back(std::move(img));
    });
    return out;
  }

  void descend(std::size_t t, std::vector<Vec>& w, KnownImages& known,
               std::vector<Map>& out) const {
    if (t == steps_.size()) {
      Map m(algebra::extend_generator_images(L_, P_, w));
      if (maps::is_commuting(L_, m)) out.push_back(std::move(m));
      return;
    }
    const auto g_t = L_.basis_vector(P_.generators[t]);
    const auto before = known.mark();
    for (auto& img : candidates(t, w)) {
      known.rollback(before);
      if (!known.add(g_t, img)) continue;
      w.push_back(std::move(img));
      descend(t + 1, w, known, out);
      w.pop_back();
    }
    known.rollback(before);
  }

  const Algebra& L_;
  PrimeField f_;
  std::size_t n_;
  algebra::GeneratorPresentation<PrimeField> P_;
  std::vector<Vec> directions_;
  std::vector<Step> steps_;
};

}  // namespace

const char* to_string(SetKind kind) noexcept {
  switch (kind) {
    case SetKind::commuting: return "commuting";
    case SetKind::central: return "central";
    case SetKind::full: return "full";
  }
  return "unknown";
}

bool map_less(const Map& a, const Map& b) { return a.matrix().data() < b.matrix().data(); }

BigInt general_linear_order(std::size_t n, std::uint32_t p) {
  BigInt pn = 1;
  for (std::size_t i = 0; i < n; ++i) pn *= p;
  BigInt order = 1, pi = 1;
  for (std::size_t i = 0; i < n; ++i) {
    order *= pn - pi;
    pi *= p;
  }
  return order;
}

BigInt AutomorphismSet::size() const {
  if (symbolic) return general_linear_order(dim, modulus);
  return BigInt(members.size());
}

bool AutomorphismSet::contains(const Map& f) const {
  if (symbolic) return f.dim() == dim && linalg::is_invertible(f.matrix());
  return std::binary_search(members.begin(), members.end(), f, map_less);
}

BudgetExceeded::BudgetExceeded(std::string what, long double projected, double budget,
                               long double branch_width, std::size_t branch)
    : std::runtime_error(std::move(what)),
      projected_(projected),
      budget_(budget),
      branch_width_(branch_width),
      branch_(branch) {}

SearchProjection project_commuting_search(const Algebra& L) {
  return CommutingSearch(L).projection();
}

AutomorphismSet enumerate_commuting(const Algebra& L, const EnumerationOptions& options) {
  if (options.short_circuit_abelian && L.is_abelian()) return symbolic_set(SetKind::commuting, L);
  CommutingSearch search(L);
  const auto proj = search.projection();
  check_budget("commuting search", proj.total, options.budget, proj.widest, proj.widest_step);
  return explicit_set(SetKind::commuting, L, search.run(worker_count(options.parallelism)));
}

AutomorphismSet enumerate_central(const Algebra& L, const EnumerationOptions& options) {
  if (options.short_circuit_abelian && L.is_abelian()) return symbolic_set(SetKind::central, L);
  const PrimeField& f = L.field();
  const auto P = algebra::generator_presentation(L);
  const auto center = algebra::center(L);
  const auto Z = center.basis_vectors();
  const std::size_t r = P.generators.size();
  const long double width = power(f.modulus(), Z.size());
  check_budget("central search", power(f.modulus(), r * Z.size()), options.budget, width, 0);

  // phi is determined by its values on the generators; every bracket word is
  // fixed because phi(L) is central.
  std::vector<Map> out;
  for_each_coefficients(f, r * Z.size(), [&](const std::vector<std::uint32_t>& c) {
    Matrix images(f, L.dim(), L.dim());
    for (std::size_t t = 0; t < P.words.size(); ++t) {
      Vec v = P.word_basis.column(t);
      if (t < r) {
        for (std::size_t a = 0; a < Z.size(); ++a) {
          const auto coeff = c[t * Z.size() + a];
          if (coeff != 0) linalg::axpy(f, coeff, Z[a], v);
        }
      }
      images.set_column(t, v);
    }
    Map m(linalg::multiply(images, P.word_basis_inverse));
    if (is_central_fast(L, center, m)) out.push_back(std::move(m));
  });
  return explicit_set(SetKind::central, L, std::move(out));
}

AutomorphismSet enumerate_bruteforce(const Algebra& L, SetKind kind,
                                     const EnumerationOptions& options) {
  const PrimeField& f = L.field();
  const std::size_t n = L.dim();
  check_budget("brute-force enumeration", power(f.modulus(), n * n), options.bruteforce_budget,
               power(f.modulus(), n * n), 0);
  std::vector<Map> out;
  Matrix m(f, n, n);
  for_each_coefficients(f, n * n, [&](const std::vector<std::uint32_t>& c) {
    for (std::size_t i = 0; i < n * n; ++i) m(i / n, i % n) = c[i];
    Map candidate(m);
    bool keep = false;
    switch (kind) {
      case SetKind::full: keep = maps::is_automorphism(L, candidate).clean(); break;
      case SetKind::commuting: keep = maps::is_commuting(L, candidate); break;
      case SetKind::central: keep = maps::is_central(L, candidate).clean(); break;
    }
    if (keep) out.push_back(std::move(candidate));
  });
  return explicit_set(kind, L, std::move(out));
}

AutomorphismSet enumerate_aut_bruteforce(const Algebra& L, const EnumerationOptions& options) {
  return enumerate_bruteforce(L, SetKind::full, options);
}

AutomorphismSet enumerate_commuting_bruteforce(const Algebra& L,
                                               const EnumerationOptions& options) {
  return enumerate_bruteforce(L, SetKind::commuting, options);
}

SetComparison sets_equal(const AutomorphismSet& a, const AutomorphismSet& b, std::size_t limit) {
  SetComparison out;
  if (a.dim != b.dim || a.modulus != b.modulus) {
    throw std::invalid_argument("sets_equal: sets belong to different algebras");
  }
  if (a.symbolic || b.symbolic) {
    // Explicit members are invertible by construction, so sizes decide.
    out.equal = a.size() == b.size();
    return out;
  }
  std::size_t i = 0, j = 0;
  while (i < a.members.size() || j < b.members.size()) {
    if (j == b.members.size() || (i < a.members.size() && map_less(a.members[i], b.members[j]))) {
      out.equal = false;
      if (out.only_in_first.size() < limit) out.only_in_first.push_back(a.members[i]);
      ++i;
    } else if (i == a.members.size() || map_less(b.members[j], a.members[i])) {
      out.equal = false;
      if (out.only_in_second.size() < limit) out.only_in_second.push_back(b.members[j]);
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  return out;
}

std::vector<std::string> commuting_set_violations(const Algebra& L, const AutomorphismSet& commuting,
                                                  const AutomorphismSet& central) {
  std::vector<std::string> out;
  if (commuting.symbolic) {
    if (!L.is_abelian()) out.push_back("symbolic commuting set for a non-abelian algebra");
    return out;
  }
  if (!commuting.contains(Map::identity(L.field(), L.dim()))) out.push_back("identity missing");
  for (std::size_t i = 0; i < commuting.members.size(); ++i) {
    if (!commuting.contains(maps::inverse(commuting.members[i]))) {
      out.push_back("inverse of member " + std::to_string(i) + " missing");
      break;
    }
  }
  if (central.symbolic) {
    out.push_back("central set is symbolic but the commuting set is explicit");
    return out;
  }
  for (std::size_t i = 0; i < central.members.size(); ++i) {
    if (!commuting.contains(central.members[i])) {
      out.push_back("central automorphism " + std::to_string(i) + " is not in the commuting set");
      break;
    }
  }
  return out;
}

}  // namespace coclass::search
