#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "coclass/constructions/catalog.hpp"
#include "coclass/harness/report.hpp"

using namespace coclass;
using harness::Json;

namespace {

/// Exit codes shared by every subcommand.
enum Exit : int { ok = 0, inconsistent = 1, usage = 2, budget = 3 };

/// Bad user input that is not a parse error of the command line.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string format = "text";
  double budget = 1e8;
  unsigned jobs = 1;
  std::uint32_t p = 0;  // 0: declared prime of the entry, else 3
};

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

bool json_output(const Config& c) { return c.format == "json"; }

search::EnumerationOptions enumeration(const Config& c) {
  search::EnumerationOptions o;
  o.budget = c.budget;
  o.parallelism = c.jobs;
  return o;
}

/// A builtin or shipped name (optionally prefixed "builtin:"), else a catalog file.
std::vector<constructions::CatalogEntry> resolve_inputs(const std::string& alg_name) {
  try {
    return {constructions::resolve_algebra(alg_name)};
  } catch (const std::invalid_argument&) {
    if (alg_name.rfind("builtin:", 0) == 0 || !std::filesystem::is_regular_file(alg_name)) {
      throw UsageError("unknown algebra '" + alg_name + "'");
    }
  }
  return constructions::load_catalog(alg_name);
}

std::uint32_t prime_for(const Config& c, const constructions::CatalogEntry& e) {
  if (c.p != 0) return c.p;
  return e.field.is_prime() ? e.field.modulus() : 3;
}

search::Algebra over_field(const Config& c, const constructions::CatalogEntry& e) {
  try {
    return constructions::over_prime(e, prime_for(c, e));
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
}

int cmd_validate(const Config& c, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::vector<constructions::CatalogEntry> entries;
  try {
    entries = constructions::parse_catalog(in);
  } catch (const constructions::CatalogParseError& e) {
    if (json_output(c)) {
      print_json({{"file", path}, {"parse_error", e.what()}, {"clean", false}});
    } else {
      std::cout << path << ": parse error: " << e.what() << "\n";
    }
    return inconsistent;
  }
  bool clean = true;
  Json out = Json::array();
  for (const auto& e : entries) {
    const auto violations = constructions::entry_violations(e);
    clean = clean && violations.empty();
    if (json_output(c)) {
      out.push_back({{"name", e.name},
                     {"field", e.field.name()},
                     {"dim", e.table.dim()},
                     {"clean", violations.empty()},
                     {"violations", violations}});
    } else {
      std::cout << e.name << " (dim " << e.table.dim() << ", " << e.field.name()
                << "): " << (violations.empty() ? "clean" : "Jacobi violations") << "\n";
      for (const auto& v : violations) std::cout << "  " << v << "\n";
    }
  }
  if (json_output(c)) print_json({{"file", path}, {"entries", out}, {"clean", clean}});
  return clean ? ok : inconsistent;
}

int cmd_invariants(const Config& c, const std::string& alg_name) {
  Json out = Json::array();
  for (const auto& e : resolve_inputs(alg_name)) {
    const auto prof = harness::profile_entry(e);
    if (!prof) throw UsageError(e.name + " is not nilpotent");
    const auto pred = harness::predict(*prof);
    if (json_output(c)) {
      out.push_back({{"name", e.name},
                     {"field", e.field.name()},
                     {"profile", harness::to_json(*prof)},
                     {"prediction", harness::to_json(pred)}});
    } else {
      std::cout << e.name << " over " << e.field.name() << "\n"
                << harness::render_text(*prof) << "prediction     " << to_string(pred.verdict)
                << " (" << to_string(pred.rule) << ")\n";
    }
  }
  if (json_output(c)) print_json(out);
  return ok;
}

int cmd_search(const Config& c, const std::string& alg_name, bool members) {
  Json out = Json::array();
  for (const auto& e : resolve_inputs(alg_name)) {
    const auto L = over_field(c, e);
    const auto A = search::enumerate_commuting(L, enumeration(c));
    if (json_output(c)) {
      Json j{{"name", e.name},
             {"field", {{"prime", L.field().modulus()}}},
             {"size", A.size().str()},
             {"symbolic", A.symbolic}};
      if (members) {
        Json ms = Json::array();
        for (const auto& f : A.members) ms.push_back(harness::map_json(f, L.labels())["grid"]);
        j["labels"] = L.labels();
        j["members"] = ms;
      }
      out.push_back(std::move(j));
    } else {
      std::cout << e.name << " over F_" << L.field().modulus() << ": |A(L)| = " << A.size()
                << (A.symbolic ? " (GL(n,p), abelian)" : "") << "\n";
      if (members) {
        for (std::size_t i = 0; i < A.members.size(); ++i) {
          std::cout << "#" << i << "\n" << harness::format_map(A.members[i], L.labels());
        }
      }
    }
  }
  if (json_output(c)) print_json(out);
  return ok;
}

int cmd_check_subgroup(const Config& c, const std::string& alg_name) {
  Json out = Json::array();
  for (const auto& e : resolve_inputs(alg_name)) {
    const auto L = over_field(c, e);
    const auto A = search::enumerate_commuting(L, enumeration(c));
    const auto v = search::closure_check(L, A);
    const linalg::PrimeField f = L.field();
    if (json_output(c)) {
      Json j{{"name", e.name},
             {"field", {{"prime", f.modulus()}}},
             {"size", A.size().str()},
             {"closed", v.closed},
             {"analytic", v.analytic}};
      if (v.witness) {
        j["witness"] = {{"f_index", v.witness->f_index},
                        {"g_index", v.witness->g_index},
                        {"f", harness::map_json(v.witness->f, L.labels())},
                        {"g", harness::map_json(v.witness->g, L.labels())},
                        {"x", harness::vector_json(f, v.witness->x)},
                        {"value", harness::vector_json(f, v.witness->value)}};
      } else {
        j["witness"] = nullptr;
      }
      out.push_back(std::move(j));
    } else {
      std::cout << e.name << " over F_" << f.modulus() << ": |A(L)| = " << A.size() << ", "
                << (v.closed ? "closed under composition" : "NOT closed under composition")
                << (v.analytic ? " (abelian)" : "") << "\n";
      if (v.witness) {
        const auto& w = *v.witness;
        std::cout << "f (#" << w.f_index << "):\n"
                  << harness::format_map(w.f, L.labels()) << "g (#" << w.g_index << "):\n"
                  << harness::format_map(w.g, L.labels())
                  << "[x, g(f(x))] = " << harness::format_vector(f, w.value, L.labels())
                  << " at x = " << harness::format_vector(f, w.x, L.labels()) << "\n";
      }
    }
  }
  if (json_output(c)) print_json(out);
  return ok;
}

int cmd_witness_heisenberg(const Config& c, std::size_t k, std::size_t m,
                           const std::string& variant) {
  if (k < 2 || m < 1) throw UsageError("witness heisenberg needs --k >= 2 and --m >= 1");
  const auto w = harness::heisenberg_witness(k, m, linalg::PrimeField(c.p ? c.p : 3));
  if (json_output(c)) {
    print_json(harness::to_json(w, variant));
  } else {
    std::cout << harness::render_text(w, variant);
  }
  return w.confirmed ? ok : inconsistent;
}

int cmd_witness_dim5(const Config& c) {
  const auto w = harness::dim5_witness(linalg::PrimeField(c.p ? c.p : 3));
  if (json_output(c)) {
    print_json(harness::to_json(w));
  } else {
    std::cout << harness::render_text(w);
  }
  return w.confirmed ? ok : inconsistent;
}

int cmd_verify(const Config& c, const std::string& alg_name, const std::string& catalog) {
  if (alg_name.empty() == catalog.empty()) {
    throw UsageError("verify takes exactly one of <alg> or --catalog FILE");
  }
  std::vector<constructions::CatalogEntry> entries;
  if (!catalog.empty()) {
    if (!std::filesystem::is_regular_file(catalog)) throw UsageError("cannot open " + catalog);
    entries = constructions::load_catalog(catalog);
  } else {
    entries = resolve_inputs(alg_name);
  }
  for (const auto& e : entries) over_field(c, e);  // reject field mismatches up front
  harness::VerifyOptions vo;
  vo.enumeration = enumeration(c);
  std::vector<harness::VerdictReport> reports;
  if (c.p != 0) {
    if (c.jobs != 1) vo.enumeration.parallelism = 1;
    reports = harness::verify_catalog(entries, c.p, vo, c.jobs);
  } else {
    for (const auto& e : entries) reports.push_back(harness::verify(over_field(c, e), e.name, vo));
  }
  bool consistent = true, unverified = false;
  for (const auto& r : reports) {
    consistent = consistent && r.consistent;
    unverified = unverified || r.unverified;
  }
  if (json_output(c)) {
    Json rs = Json::array();
    for (const auto& r : reports) rs.push_back(harness::to_json(r));
    print_json({{"reports", rs}, {"all_consistent", consistent}, {"any_unverified", unverified}});
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      std::cout << (i ? "\n" : "") << harness::render_text(reports[i]);
    }
  }
  for (const auto& r : reports) {
    if (r.unverified) std::cerr << r.name << ": budget exceeded: " << r.note << "\n";
  }
  if (!consistent) return inconsistent;
  return unverified ? budget : ok;
}

int cmd_suite(const Config& c) {
  harness::BatteryOptions o;
  o.p = c.p ? c.p : 3;
  o.enumeration = enumeration(c);
  o.jobs = c.jobs;
  const auto b = harness::run_battery(o);
  if (json_output(c)) {
    print_json(harness::to_json(b));
  } else {
    std::cout << harness::render_text(b);
  }
  return b.criteria_passed() && b.catalog_consistent() ? ok : inconsistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commuting automorphisms of nilpotent Lie algebras: invariants, enumeration, "
               "closure checks, witnesses and the theorem battery."};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  if (const char* env = std::getenv("COCLASS_LAB_BUDGET")) {
    try {
      cfg.budget = std::stod(env);
    } catch (const std::exception&) {
      std::cerr << "COCLASS_LAB_BUDGET is not a number: " << env << "\n";
      return usage;
    }
  }
  cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--budget", cfg.budget, "Cap on projected search candidates")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--p", cfg.p, "Odd prime for the field F_p (default: declared prime, else 3)")
      ->check([](const std::string& s) {
        try {
          const auto v = std::stoul(s);
          linalg::PrimeField f(static_cast<std::uint32_t>(v));
          return std::string();
        } catch (const std::exception&) {
          return std::string("--p must be an odd prime below 65536");
        }
      });

  std::string path, alg, catalog, variant = "both";
  std::size_t k = 2, m = 1;
  bool members = false;

  auto* validate = app.add_subcommand("validate", "Jacobi and antisymmetry report for a catalog file");
  validate->add_option("file", path, "Line-oriented JSON catalog")->required();
  auto* invariants = app.add_subcommand("invariants", "Structural profile and prediction");
  invariants->add_option("alg", alg, "builtin:NAME, catalog name or catalog file")->required();
  auto* search_cmd = app.add_subcommand("search-commuting", "Enumerate commuting automorphisms");
  search_cmd->add_option("alg", alg, "builtin:NAME, catalog name or catalog file")->required();
  search_cmd->add_flag("--members", members, "Print every member as a grid");
  auto* subgroup = app.add_subcommand("check-subgroup", "Closure verdict with witness");
  subgroup->add_option("alg", alg, "builtin:NAME, catalog name or catalog file")->required();
  auto* witness = app.add_subcommand("witness", "Explicit non-closure witnesses");
  witness->require_subcommand(1);
  auto* heis = witness->add_subcommand("heisenberg", "Heisenberg witness pair");
  heis->add_option("--k", k, "Number of symplectic pairs (>= 2)")->capture_default_str();
  heis->add_option("--m", m, "Center dimension (>= 1)")->capture_default_str();
  heis->add_option("--variant", variant, "Which beta2 to report")
      ->check(CLI::IsMember({"printed", "corrected", "both"}))
      ->capture_default_str();
  auto* dim5 = witness->add_subcommand("dim5", "Dimension-5 coclass-3 witness pair");
  auto* verify_cmd = app.add_subcommand("verify", "Prediction against enumeration");
  verify_cmd->add_option("alg", alg, "builtin:NAME, catalog name or catalog file");
  verify_cmd->add_option("--catalog", catalog, "Catalog file to verify entry by entry");
  auto* suite = app.add_subcommand("suite", "Full acceptance battery with summary table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    if (*validate) return cmd_validate(cfg, path);
    if (*invariants) return cmd_invariants(cfg, alg);
    if (*search_cmd) return cmd_search(cfg, alg, members);
    if (*subgroup) return cmd_check_subgroup(cfg, alg);
    if (*heis) return cmd_witness_heisenberg(cfg, k, m, variant);
    if (*dim5) return cmd_witness_dim5(cfg);
    if (*verify_cmd) return cmd_verify(cfg, alg, catalog);
    if (*suite) return cmd_suite(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return usage;
  } catch (const search::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return budget;
  } catch (const constructions::CatalogParseError& e) {
    std::cerr << "catalog parse error: " << e.what() << "\n";
    return usage;
  } catch (const constructions::CatalogValidationError& e) {
    std::cerr << "catalog validation error: " << e.what() << "\n";
    for (const auto& v : e.violations()) std::cerr << "  " << v << "\n";
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}
