#include "coclass/harness/battery.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

#include "coclass/constructions/constructions.hpp"

namespace coclass::harness {

namespace {

using Clock = std::chrono::steady_clock;
using linalg::PrimeField;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& s : parts) out += (out.empty() ? "" : "; ") + s;
  return out;
}

struct Tally {
  std::vector<std::string> failures;
  std::size_t checked = 0;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) failures.push_back(what);
  }
  bool passed() const { return failures.empty() && checked > 0; }
  std::string detail(const std::string& summary) const {
    if (failures.empty()) return summary;
    return summary + "; failures: " + join(failures);
  }
};

CriterionResult timed(int id, std::string title, double limit, const std::function<Tally()>& body,
                      const std::function<std::string(const Tally&)>& summary) {
  const auto start = Clock::now();
  const Tally t = body();
  CriterionResult c;
  c.id = id;
  c.title = std::move(title);
  c.seconds = seconds_since(start);
  c.limit_seconds = limit;
  c.passed = t.passed();
  c.detail = t.detail(summary(t));
  return c;
}

/// A(L) and closure for an algebra of the catalog over F_p.
struct ClosureRun {
  search::AutomorphismSet commuting;
  search::ClosureVerdict closure;
};

ClosureRun closure_run(const constructions::CatalogEntry& e, std::uint32_t p,
                       const search::EnumerationOptions& opts) {
  const auto L = constructions::over_prime(e, p);
  auto A = search::enumerate_commuting(L, opts);
  auto v = search::closure_check(L, A);
  return {std::move(A), std::move(v)};
}

}  // namespace

bool BatteryReport::criteria_passed() const noexcept {
  for (const auto& c : criteria)
    if (!c.passed) return false;
  return !criteria.empty();
}

bool BatteryReport::catalog_consistent() const noexcept {
  for (const auto& r : catalog)
    if (!r.consistent) return false;
  return true;
}

std::vector<VerdictReport> verify_catalog(const std::vector<constructions::CatalogEntry>& catalog,
                                          std::uint32_t p, const VerifyOptions& options,
                                          unsigned jobs, std::vector<double>* seconds) {
  std::vector<VerdictReport> out(catalog.size());
  std::vector<double> times(catalog.size(), 0.0);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < catalog.size(); i = next++) {
      const auto start = Clock::now();
      out[i] = verify(constructions::over_prime(catalog[i], p), catalog[i].name, options);
      times[i] = seconds_since(start);
    }
  };
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, catalog.size())));
  if (jobs <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (seconds) *seconds = std::move(times);
  return out;
}

BatteryReport run_battery(const BatteryOptions& options) {
  BatteryReport b;
  b.p = options.p;
  const std::uint32_t p = options.p;
  const PrimeField fp(p);
  const auto catalog = constructions::shipped_catalog();
  auto entry = [&](const std::string& name) -> const constructions::CatalogEntry& {
    for (const auto& e : catalog)
      if (e.name == name) return e;
    throw std::logic_error("battery: catalog entry " + name + " missing");
  };

  // 1. Heisenberg witness family.
  b.criteria.push_back(timed(
      1, "Heisenberg witness", 1.0,
      [&] {
        Tally t;
        for (std::uint32_t q : {3u, 5u}) {
          for (auto [k, m] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 1}}) {
            b.heisenberg.push_back(heisenberg_witness(k, m, PrimeField(q)));
            const auto& w = b.heisenberg.back();
            t.expect(w.confirmed, "heisenberg(" + std::to_string(k) + "," + std::to_string(m) +
                                      ") over F_" + std::to_string(q) + ": " + join(w.failures));
          }
        }
        return t;
      },
      [](const Tally& t) {
        return std::to_string(t.checked) +
               " instances: beta1 and corrected beta2 commute, [u1, beta1 beta2(u1)] = z1, "
               "printed beta2 fails";
      }));

  // 2. Dimension-5 witness.
  b.criteria.push_back(timed(
      2, "dim5 witness", 1.0,
      [&] {
        Tally t;
        for (std::uint32_t q : {3u, 5u, 7u}) {
          b.dim5.push_back(dim5_witness(PrimeField(q)));
          t.expect(b.dim5.back().confirmed,
                   "F_" + std::to_string(q) + ": " + join(b.dim5.back().failures));
        }
        return t;
      },
      [](const Tally& t) {
        return std::to_string(t.checked) + " fields: beta1, beta2 commute, [x1, beta1 beta2(x1)] = x5";
      }));

  // 3. Coclass 1: A(L) = Aut_c(L).
  b.criteria.push_back(timed(
      3, "coclass-1 equality", 60.0,
      [&] {
        Tally t;
        for (std::size_t n = 4; n <= 7; ++n) {
          const auto L = constructions::filiform(n, fp);
          const auto A = search::enumerate_commuting(L, options.enumeration);
          const auto C = search::enumerate_central(L, options.enumeration);
          t.expect(search::sets_equal(A, C).equal, "filiform:" + std::to_string(n));
        }
        return t;
      },
      [](const Tally& t) {
        return "filiform(n), n = 4..7: A(L) = Aut_c(L) in " + std::to_string(t.checked) + " of 4";
      }));

  // 4. Coclass 2, dimensions 5-7: closed.
  std::vector<std::string> coclass2;
  for (const auto& e : catalog) {
    const auto prof = profile_entry(e);
    if (prof && prof->coclass == 2 && prof->dim >= 5 && prof->dim <= 7) coclass2.push_back(e.name);
  }
  b.criteria.push_back(timed(
      4, "coclass-2 closure", 300.0,
      [&] {
        Tally t;
        for (const auto& name : coclass2) {
          t.expect(closure_run(entry(name), p, options.enumeration).closure.closed, name);
        }
        if (coclass2.size() < 3) t.failures.push_back("fewer than 3 coclass-2 entries of dim 5-7");
        return t;
      },
      [&](const Tally& t) {
        return std::to_string(t.checked) + " coclass-2 entries closed: " + join(coclass2);
      }));

  // 5. Coclass 3, dimension 5: not closed iff L' = Z(L) and dim Z(L) = 1.
  b.criteria.push_back(timed(
      5, "coclass-3 dim-5 dichotomy", 300.0,
      [&] {
        Tally t;
        bool saw_dim5 = false;
        for (const auto& e : catalog) {
          const auto prof = profile_entry(e);
          if (!prof || prof->coclass != 3 || prof->dim != 5) continue;
          saw_dim5 |= e.name == "dim5";
          const bool expect_open = prof->derived_equals_center() && prof->dim_center == 1;
          const auto run = closure_run(e, p, options.enumeration);
          if (expect_open) {
            t.expect(!run.closure.closed && run.closure.witness.has_value(),
                     e.name + " should be not closed with a witness");
          } else {
            t.expect(run.closure.closed, e.name + " should be closed");
          }
        }
        t.expect(saw_dim5, "dim5 entry present");
        return t;
      },
      [](const Tally& t) {
        return std::to_string(t.checked - 1) +
               " dim-5 coclass-3 entries: not closed exactly when L' = Z(L) and dim Z(L) = 1";
      }));

  // Catalog sweep (feeds 6 and 7 and the verdict table).
  VerifyOptions vo;
  vo.enumeration = options.enumeration;
  if (options.jobs != 1) vo.enumeration.parallelism = 1;
  const auto sweep_start = Clock::now();
  b.catalog = verify_catalog(catalog, p, vo, options.jobs, &b.catalog_seconds);
  const double sweep_seconds = seconds_since(sweep_start);

  // 6. Z_2(L) abelian => closed.
  {
    Tally t;
    double secs = 0;
    std::size_t unverified = 0;
    for (std::size_t i = 0; i < b.catalog.size(); ++i) {
      const auto& r = b.catalog[i];
      if (r.profile.second_center_class > 1) continue;
      secs += b.catalog_seconds[i];
      if (!r.enumeration) {
        ++unverified;
        t.expect(false, r.name + " unverified (" + r.note + ")");
        continue;
      }
      t.expect(r.enumeration->closed, r.name);
    }
    CriterionResult c{6, "abelian Z2 closure", t.passed(),
                      t.detail(std::to_string(t.checked) +
                               " entries with abelian Z2 closed, " + std::to_string(unverified) +
                               " unverified"),
                      secs, 0};
    b.criteria.push_back(std::move(c));
  }

  // 7. Identity suite over every enumerated member.
  {
    Tally t;
    std::uint64_t maps_checked = 0, checks = 0, violations = 0;
    std::vector<std::string> skipped;
    for (const auto& r : b.catalog) {
      if (!r.enumeration) {
        skipped.push_back(r.name);
        continue;
      }
      const auto& e = *r.enumeration;
      maps_checked += e.identity_maps;
      checks += e.identity_maps * e.identity_checks_per_map;
      violations += e.identity_violations;
      t.expect(e.identity_violations == 0, r.name + ": " + e.first_identity_violation);
      if (!e.symbolic) {
        t.expect(search::BigInt(e.identity_maps) == e.commuting_size,
                 r.name + ": not every member was checked");
      }
    }
    std::ostringstream s;
    s << maps_checked << " maps, " << checks << " basis-tuple checks, " << violations
      << " violations";
    if (!skipped.empty()) s << "; not enumerated (over budget): " << join(skipped);
    b.criteria.push_back({7, "identity suite", t.passed(), t.detail(s.str()), sweep_seconds, 0});
  }

  // 8. Oracle equivalence at dim <= 3.
  b.criteria.push_back(timed(
      8, "brute-force oracle equivalence", 120.0,
      [&] {
        Tally t;
        search::EnumerationOptions literal = options.enumeration;
        literal.short_circuit_abelian = false;
        for (const auto& e : catalog) {
          const auto L = constructions::over_prime(e, p);
          if (L.dim() > 3) continue;
          const auto A = search::enumerate_commuting(L, literal);
          const auto C = search::enumerate_central(L, literal);
          OracleCheck o{e.name,
                        search::sets_equal(A, search::enumerate_commuting_bruteforce(L, literal)).equal,
                        search::sets_equal(C, search::enumerate_bruteforce(L, search::SetKind::central,
                                                                           literal))
                            .equal,
                        A.members.size(), C.members.size()};
          t.expect(o.commuting_equal, e.name + " commuting");
          t.expect(o.central_equal, e.name + " central");
          b.oracle.push_back(std::move(o));
        }
        return t;
      },
      [&](const Tally& t) {
        return std::to_string(b.oracle.size()) + " entries of dim <= 3, " +
               std::to_string(t.checked) + " set comparisons";
      }));

  // 9. Structural suite.
  b.criteria.push_back(timed(
      9, "coclass-3 structural suite", 10.0,
      [&] {
        Tally t;
        b.structural = structural_suite(catalog);
        for (const auto& e : b.structural.entries) {
          for (const auto& c : e.checked) {
            const bool bad =
                std::find(e.violations.begin(), e.violations.end(), c) != e.violations.end();
            t.expect(!bad, e.name + ": " + c);
          }
        }
        if (b.structural.entries.empty()) t.failures.push_back("no coclass-3 entries of dim >= 6");
        return t;
      },
      [&](const Tally& t) {
        return std::to_string(b.structural.entries.size()) + " entries, " +
               std::to_string(t.checked) + " assertions";
      }));

  return b;
}

}  // namespace coclass::harness
