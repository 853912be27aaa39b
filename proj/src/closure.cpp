#include "coclass/search/closure.hpp"

namespace coclass::search {

namespace {

using Subspace = linalg::Subspace<PrimeField>;

bool composite_commutes(const Algebra& L, const Map& g, const Map& f) {
  return maps::commuting_defect_clean(L, maps::compose(g, f));
}

ClosureWitness make_witness(const Algebra& L, const std::vector<Map>& members, std::size_t fi,
                            std::size_t gi) {
  const PrimeField& fld = L.field();
  const Map h = maps::compose(members[gi], members[fi]);
  const auto defect = maps::commuting_defect(L, h);
  // A failing B(e_i) gives x = e_i; otherwise every B(e_i) vanishes and the
  // first failing S(e_i, e_j) gives x = e_i + e_j.
  const maps::DefectWitness<PrimeField>* chosen = &defect.witnesses.front();
  for (const auto& w : defect.witnesses) {
    if (w.indices.size() == 1) {
      chosen = &w;
      break;
    }
  }
  Vec x = linalg::zero_vector(fld, L.dim());
  for (auto i : chosen->indices) x[i] = fld.add(x[i], fld.one());
  return {fi, gi, members[fi], members[gi], x, L.bracket(x, h(x))};
}

Vec flatten(const Map& m) {
  const auto& d = m.matrix().data();
  return Vec(d.begin(), d.end());
}

}  // namespace

ClosureVerdict closure_check(const Algebra& L, const AutomorphismSet& set, bool exhaustive) {
  if (set.kind != SetKind::commuting) {
    throw std::invalid_argument("closure_check expects a set of commuting automorphisms");
  }
  ClosureVerdict verdict;
  if (set.symbolic) {
    // Abelian algebra: [x, f(x)] = 0 for every linear map.
    verdict.analytic = true;
    return verdict;
  }
  const auto& A = set.members;

  if (exhaustive) {
    for (std::size_t fi = 0; fi < A.size(); ++fi) {
      for (std::size_t gi = 0; gi < A.size(); ++gi) {
        ++verdict.pair_count;
        if (composite_commutes(L, A[gi], A[fi])) continue;
        ++verdict.failing_pairs;
        if (!verdict.witness) verdict.witness = make_witness(L, A, fi, gi);
      }
    }
    verdict.closed = verdict.failing_pairs == 0;
    return verdict;
  }

  // Members spanning span(A), chosen greedily in canonical order.
  const std::size_t n2 = L.dim() * L.dim();
  Subspace span = Subspace::zero(L.field(), n2);
  std::vector<std::size_t> basis;
  for (std::size_t i = 0; i < A.size() && span.dim() < n2; ++i) {
    auto v = flatten(A[i]);
    if (span.contains(v)) continue;
    span = linalg::subspace_sum(span, Subspace::span(L.field(), n2, {v}));
    basis.push_back(i);
  }

  // The defect is bilinear, so basis pairs decide closure outright.
  bool basis_clean = true;
  for (auto fb : basis) {
    for (auto gb : basis) {
      ++verdict.pair_count;
      if (!composite_commutes(L, A[gb], A[fb])) basis_clean = false;
    }
  }
  if (basis_clean) return verdict;

  for (std::size_t fi = 0; fi < A.size(); ++fi) {
    bool fails = false;
    for (auto b : basis) {
      ++verdict.pair_count;
      if (!composite_commutes(L, A[b], A[fi])) {
        fails = true;
        break;
      }
    }
    if (!fails) continue;
    for (std::size_t gi = 0; gi < A.size(); ++gi) {
      ++verdict.pair_count;
      if (composite_commutes(L, A[gi], A[fi])) continue;
      verdict.closed = false;
      verdict.witness = make_witness(L, A, fi, gi);
      return verdict;
    }
    throw std::logic_error("closure_check: basis test failed but no member pair fails");
  }
  throw std::logic_error("closure_check: basis pairs fail but no member fails");
}

}  // namespace coclass::search
