#include "coclass/harness/verify.hpp"

#include "coclass/maps/identities.hpp"

namespace coclass::harness {

namespace {

void run_identity_suite(const search::Algebra& L, const search::AutomorphismSet& A,
                        EnumerationSummary& s) {
  const maps::IdentityContext<linalg::PrimeField> ctx(L);
  s.identity_checks_per_map = ctx.check_count();
  for (const auto& f : A.members) {
    ++s.identity_maps;
    const auto report = ctx.evaluate(f.matrix());
    if (report.clean()) continue;
    s.identity_violations += report.violations.size();
    if (s.first_identity_violation.empty()) {
      const auto& v = report.violations.front();
      std::string idx;
      for (auto i : v.indices) idx += (idx.empty() ? "" : ",") + std::to_string(i);
      s.first_identity_violation =
          std::string(maps::to_string(v.identity)) + " at (" + idx + ")";
    }
  }
}

void compare(VerdictReport& r) {
  const auto& e = *r.enumeration;
  switch (r.prediction.verdict) {
    case Verdict::equals_autc:
      if (!e.equal) r.inconsistencies.push_back("predicted A(L) = Aut_c(L) but the sets differ");
      break;
    case Verdict::subgroup:
      if (!e.closed) r.inconsistencies.push_back("predicted a subgroup but A(L) is not closed");
      break;
    case Verdict::not_subgroup:
      if (e.closed || !e.witness) {
        r.inconsistencies.push_back("predicted not_subgroup but A(L) is closed");
      } else if (e.witness_defects.empty()) {
        r.inconsistencies.push_back("closure witness does not replay");
      }
      break;
    case Verdict::no_guarantee: break;
  }
  for (const auto& v : e.set_violations) r.inconsistencies.push_back("set check: " + v);
  if (e.identity_violations > 0) {
    r.inconsistencies.push_back("identity suite: " + e.first_identity_violation);
  }
  r.consistent = r.inconsistencies.empty();
}

}  // namespace

VerdictReport verify(const search::Algebra& L, const std::string& name,
                     const VerifyOptions& options) {
  VerdictReport r;
  r.name = name;
  r.p = L.field().modulus();
  r.labels = L.labels();
  r.profile = profile(L);
  r.prediction = predict(r.profile);
  if (!options.with_enumeration) {
    r.unverified = true;
    r.note = "enumeration not requested";
    return r;
  }

  EnumerationSummary s;
  try {
    const auto A = search::enumerate_commuting(L, options.enumeration);
    const auto C = search::enumerate_central(L, options.enumeration);
    s.commuting_size = A.size();
    s.central_size = C.size();
    s.symbolic = A.symbolic;
    const auto closure = search::closure_check(L, A);
    s.closed = closure.closed;
    s.closure_analytic = closure.analytic;
    s.witness = closure.witness;
    if (s.witness) {
      s.witness_defects =
          maps::commuting_defect(L, maps::compose(s.witness->g, s.witness->f)).witnesses;
    }
    const auto cmp = search::sets_equal(A, C);
    s.equal = cmp.equal;
    s.only_in_commuting = cmp.only_in_first;
    s.set_violations = search::commuting_set_violations(L, A, C);
    if (options.identity_suite) run_identity_suite(L, A, s);
  } catch (const search::BudgetExceeded& e) {
    r.unverified = true;
    r.note = e.what();
    return r;
  }
  r.enumeration = std::move(s);
  compare(r);
  return r;
}

}  // namespace coclass::harness
