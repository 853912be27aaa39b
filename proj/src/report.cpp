#include "coclass/harness/report.hpp"

#include <iomanip>
#include <sstream>

namespace coclass::harness {

namespace {

using linalg::PrimeField;

std::string size_string(const search::BigInt& n) { return n.str(); }

std::string label_list(const std::vector<std::size_t>& indices,
                       const std::vector<std::string>& labels) {
  std::string out;
  for (auto i : indices) out += (out.empty() ? "" : ",") + labels.at(i);
  return out;
}

Json defects_json(const std::vector<maps::DefectWitness<PrimeField>>& defects, const PrimeField& f,
                  const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (const auto& d : defects) {
    Json at = Json::array();
    for (auto i : d.indices) at.push_back(labels.at(i));
    out.push_back({{"at", at}, {"residual", vector_json(f, d.residual)}});
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void render_check(std::ostringstream& os, const std::string& name, const MapCheck& c,
                  const PrimeField& f, const std::vector<std::string>& labels) {
  os << name << ": automorphism " << yes_no(c.automorphism) << ", commuting "
     << yes_no(c.commuting) << "\n";
  for (const auto& d : c.defects) {
    os << "  defect at (" << label_list(d.indices, labels)
       << "): " << format_vector(f, d.residual, labels) << "\n";
  }
}

void render_variant(std::ostringstream& os, const HeisenbergVariant& v, const PrimeField& f,
                    const std::vector<std::string>& labels) {
  os << "beta2 (" << v.name << "):\n" << format_map(v.beta2, labels);
  render_check(os, "beta2 (" + v.name + ")", v.beta2_check, f, labels);
  render_check(os, "beta1 beta2 (" + v.name + ")", v.product_check, f, labels);
  os << "[u1, beta1 beta2(u1)] = " << format_vector(f, v.defect_at_u1, labels) << "\n";
}

}  // namespace

Json vector_json(const PrimeField& f, const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(f.symmetric(x));
  return out;
}

Json map_json(const Map& f, const std::vector<std::string>& labels) {
  const auto& m = f.matrix();
  const auto& fld = m.field();
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(fld.symmetric(m(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"labels", labels}, {"grid", rows}};
}

Json map_check_json(const MapCheck& c, const PrimeField& f,
                    const std::vector<std::string>& labels) {
  return {{"automorphism", c.automorphism},
          {"commuting", c.commuting},
          {"defects", defects_json(c.defects, f, labels)}};
}

Json to_json(const StructuralProfile& p) {
  Json j;
  j["dim"] = p.dim;
  j["class"] = p.nilpotency_class;
  j["coclass"] = p.coclass;
  j["dim_Z"] = p.dim_center;
  j["dim_Z2"] = p.dim_second_center;
  j["dim_derived"] = p.dim_derived;
  j["z2_class"] = p.second_center_class;
  j["z_is_lcs_term"] = p.center_lcs_term.has_value();
  j["z_lcs_index"] = p.center_lcs_term ? Json(*p.center_lcs_term) : Json(nullptr);
  j["index_L_over_Z"] = p.index_over_center;
  j["L_prime_in_Z"] = p.derived_in_center;
  return j;
}

Json to_json(const Prediction& p) {
  return {{"verdict", std::string(to_string(p.verdict))}, {"rule", std::string(to_string(p.rule))}};
}

Json to_json(const VerdictReport& r) {
  const PrimeField f(r.p);
  Json j;
  j["name"] = r.name;
  j["field"] = {{"prime", r.p}};
  j["labels"] = r.labels;
  j["profile"] = to_json(r.profile);
  j["prediction"] = to_json(r.prediction);
  if (r.enumeration) {
    const auto& e = *r.enumeration;
    Json en;
    en["commuting_size"] = size_string(e.commuting_size);
    en["central_size"] = size_string(e.central_size);
    en["symbolic"] = e.symbolic;
    en["closed"] = e.closed;
    en["closure_analytic"] = e.closure_analytic;
    en["equal"] = e.equal;
    if (e.witness) {
      const auto& w = *e.witness;
      en["witness"] = {{"f", map_json(w.f, r.labels)},
                       {"g", map_json(w.g, r.labels)},
                       {"x", vector_json(f, w.x)},
                       {"value", vector_json(f, w.value)},
                       {"defects", defects_json(e.witness_defects, f, r.labels)}};
    } else {
      en["witness"] = nullptr;
    }
    Json extra = Json::array();
    for (const auto& m : e.only_in_commuting) extra.push_back(map_json(m, r.labels));
    en["only_in_commuting"] = extra;
    en["set_violations"] = e.set_violations;
    en["identity_suite"] = {{"maps", e.identity_maps},
                            {"checks_per_map", e.identity_checks_per_map},
                            {"violations", e.identity_violations},
                            {"first_violation", e.first_identity_violation}};
    j["enumeration"] = en;
  } else {
    j["enumeration"] = nullptr;
  }
  j["unverified"] = r.unverified;
  j["note"] = r.note;
  j["consistent"] = r.consistent;
  j["inconsistencies"] = r.inconsistencies;
  return j;
}

Json to_json(const HeisenbergWitness& w, const std::string& variant) {
  const PrimeField f(w.p);
  const auto& labels = w.algebra.labels();
  auto variant_json = [&](const HeisenbergVariant& v) {
    return Json{{"beta2", map_json(v.beta2, labels)},
                {"beta2_check", map_check_json(v.beta2_check, f, labels)},
                {"product", map_json(v.product, labels)},
                {"product_check", map_check_json(v.product_check, f, labels)},
                {"defect_at_u1", vector_json(f, v.defect_at_u1)}};
  };
  Json j;
  j["k"] = w.k;
  j["m"] = w.m;
  j["field"] = {{"prime", w.p}};
  j["beta1"] = map_json(w.beta1, labels);
  j["beta1_check"] = map_check_json(w.beta1_check, f, labels);
  Json variants;
  if (variant == "printed" || variant == "both") variants["printed"] = variant_json(w.printed);
  if (variant == "corrected" || variant == "both") {
    variants["corrected"] = variant_json(w.corrected);
  }
  j["variants"] = variants;
  j["confirmed"] = w.confirmed;
  j["failures"] = w.failures;
  return j;
}

Json to_json(const Dim5Witness& w) {
  const PrimeField f(w.p);
  const auto& labels = w.algebra.labels();
  Json j;
  j["field"] = {{"prime", w.p}};
  j["beta1"] = map_json(w.beta1, labels);
  j["beta2"] = map_json(w.beta2, labels);
  j["product"] = map_json(w.product, labels);
  j["beta1_check"] = map_check_json(w.beta1_check, f, labels);
  j["beta2_check"] = map_check_json(w.beta2_check, f, labels);
  j["product_check"] = map_check_json(w.product_check, f, labels);
  j["defect_at_x1"] = vector_json(f, w.defect_at_x1);
  j["beta1_involution"] = w.beta1_involution;
  j["confirmed"] = w.confirmed;
  j["failures"] = w.failures;
  return j;
}

Json to_json(const StructuralReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"name", e.name},
                       {"profile", to_json(e.profile)},
                       {"checked", e.checked},
                       {"violations", e.violations}});
  }
  return {{"entries", entries}, {"skipped", r.skipped}, {"clean", r.clean()}};
}

Json to_json(const BatteryReport& b) {
  Json criteria = Json::array();
  for (const auto& c : b.criteria) {
    criteria.push_back(
        {{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"detail", c.detail}});
  }
  Json heis = Json::array();
  for (const auto& w : b.heisenberg) heis.push_back(to_json(w));
  Json dim5 = Json::array();
  for (const auto& w : b.dim5) dim5.push_back(to_json(w));
  Json oracle = Json::array();
  for (const auto& o : b.oracle) {
    oracle.push_back({{"name", o.name},
                      {"commuting_equal", o.commuting_equal},
                      {"central_equal", o.central_equal},
                      {"commuting_size", o.commuting_size},
                      {"central_size", o.central_size}});
  }
  Json catalog = Json::array();
  for (const auto& r : b.catalog) catalog.push_back(to_json(r));
  return {{"field", {{"prime", b.p}}},
          {"criteria", criteria},
          {"criteria_passed", b.criteria_passed()},
          {"catalog_consistent", b.catalog_consistent()},
          {"witnesses", {{"heisenberg", heis}, {"dim5", dim5}}},
          {"oracle", oracle},
          {"structural", to_json(b.structural)},
          {"catalog", catalog}};
}

std::string format_vector(const PrimeField& f, const Vec& v,
                          const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto c = f.symmetric(v[i]);
    if (c == 0) continue;
    const auto mag = c < 0 ? -c : c;
    if (out.empty()) {
      out += c < 0 ? "-" : "";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag);
    out += labels.at(i);
  }
  return out.empty() ? "0" : out;
}

std::string format_map(const Map& f, const std::vector<std::string>& labels) {
  const auto& m = f.matrix();
  const auto& fld = m.field();
  std::size_t w = 2;
  for (const auto& l : labels) w = std::max(w, l.size());
  std::ostringstream os;
  os << std::setw(static_cast<int>(w)) << "" << " |";
  for (const auto& l : labels) os << " " << std::setw(static_cast<int>(w)) << l;
  os << "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << std::setw(static_cast<int>(w)) << labels.at(r) << " |";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      os << " " << std::setw(static_cast<int>(w)) << fld.symmetric(m(r, c));
    }
    os << "\n";
  }
  return os.str();
}

std::string render_text(const StructuralProfile& p) {
  std::ostringstream os;
  os << "dim            " << p.dim << "\n"
     << "class          " << p.nilpotency_class << "\n"
     << "coclass        " << p.coclass << "\n"
     << "dim_Z          " << p.dim_center << "\n"
     << "dim_Z2         " << p.dim_second_center << "\n"
     << "dim_derived    " << p.dim_derived << "\n"
     << "z2_class       " << p.second_center_class << "\n"
     << "z_is_lcs_term  "
     << (p.center_lcs_term ? "yes (L^" + std::to_string(*p.center_lcs_term) + ")" : "no") << "\n"
     << "index_L_over_Z " << p.index_over_center << "\n"
     << "L_prime_in_Z   " << yes_no(p.derived_in_center) << "\n";
  return os.str();
}

std::string render_text(const VerdictReport& r) {
  const PrimeField f(r.p);
  std::ostringstream os;
  os << r.name << " over F_" << r.p << "\n";
  os << render_text(r.profile);
  os << "prediction     " << to_string(r.prediction.verdict) << " (" << to_string(r.prediction.rule)
     << ")\n";
  if (r.enumeration) {
    const auto& e = *r.enumeration;
    os << "|A(L)|         " << size_string(e.commuting_size) << (e.symbolic ? " (GL(n,p))" : "")
       << "\n"
       << "|Aut_c(L)|     " << size_string(e.central_size) << "\n"
       << "A = Aut_c      " << yes_no(e.equal) << "\n"
       << "closed         " << yes_no(e.closed) << (e.closure_analytic ? " (abelian)" : "")
       << "\n";
    if (e.witness) {
      const auto& w = *e.witness;
      os << "witness f (#" << w.f_index << "):\n" << format_map(w.f, r.labels);
      os << "witness g (#" << w.g_index << "):\n" << format_map(w.g, r.labels);
      os << "[x, g(f(x))] = " << format_vector(f, w.value, r.labels)
         << " at x = " << format_vector(f, w.x, r.labels) << "\n";
    }
    os << "identity suite " << e.identity_maps << " maps, " << e.identity_violations
       << " violations\n";
    for (const auto& v : e.set_violations) os << "set violation: " << v << "\n";
  }
  if (r.unverified) os << "unverified     " << r.note << "\n";
  os << "consistent     " << yes_no(r.consistent) << "\n";
  for (const auto& s : r.inconsistencies) os << "inconsistency: " << s << "\n";
  return os.str();
}

std::string render_text(const HeisenbergWitness& w, const std::string& variant) {
  const PrimeField f(w.p);
  const auto& labels = w.algebra.labels();
  std::ostringstream os;
  os << "heisenberg(" << w.k << "," << w.m << ") over F_" << w.p << "\n";
  os << "beta1:\n" << format_map(w.beta1, labels);
  render_check(os, "beta1", w.beta1_check, f, labels);
  if (variant == "printed" || variant == "both") render_variant(os, w.printed, f, labels);
  if (variant == "corrected" || variant == "both") render_variant(os, w.corrected, f, labels);
  os << "confirmed: " << yes_no(w.confirmed) << "\n";
  for (const auto& s : w.failures) os << "failure: " << s << "\n";
  return os.str();
}

std::string render_text(const Dim5Witness& w) {
  const PrimeField f(w.p);
  const auto& labels = w.algebra.labels();
  std::ostringstream os;
  os << "dim5 over F_" << w.p << "\n";
  os << "beta1:\n" << format_map(w.beta1, labels);
  render_check(os, "beta1", w.beta1_check, f, labels);
  os << "beta2:\n" << format_map(w.beta2, labels);
  render_check(os, "beta2", w.beta2_check, f, labels);
  render_check(os, "beta1 beta2", w.product_check, f, labels);
  os << "[x1, beta1 beta2(x1)] = " << format_vector(f, w.defect_at_x1, labels) << "\n";
  os << "beta1 involution: " << yes_no(w.beta1_involution) << "\n";
  os << "confirmed: " << yes_no(w.confirmed) << "\n";
  for (const auto& s : w.failures) os << "failure: " << s << "\n";
  return os.str();
}

std::string render_text(const BatteryReport& b) {
  std::ostringstream os;
  os << "criteria over F_" << b.p << "\n";
  for (const auto& c : b.criteria) {
    os << (c.passed ? "PASS " : "FAIL ") << std::setw(2) << c.id << "  " << std::left
       << std::setw(32) << c.title << std::right << std::fixed << std::setprecision(2)
       << std::setw(9) << c.seconds << "s  " << c.detail << "\n";
  }
  os << "\ncatalog verdicts over F_" << b.p << "\n";
  os << std::left << std::setw(30) << "algebra" << std::setw(14) << "prediction" << std::setw(28)
     << "rule" << std::setw(12) << "|A(L)|" << std::setw(12) << "|Aut_c|" << std::setw(8)
     << "closed" << "consistent\n";
  for (std::size_t i = 0; i < b.catalog.size(); ++i) {
    const auto& r = b.catalog[i];
    os << std::setw(30) << r.name << std::setw(14) << to_string(r.prediction.verdict)
       << std::setw(28) << to_string(r.prediction.rule);
    if (r.enumeration) {
      os << std::setw(12) << size_string(r.enumeration->commuting_size) << std::setw(12)
         << size_string(r.enumeration->central_size) << std::setw(8)
         << yes_no(r.enumeration->closed);
    } else {
      os << std::setw(32) << "unverified (budget)";
    }
    os << (r.consistent ? "yes" : "NO") << "\n";
  }
  os << std::right;
  for (const auto& r : b.catalog)
    for (const auto& s : r.inconsistencies) os << "inconsistency in " << r.name << ": " << s << "\n";
  return os.str();
}

}  // namespace coclass::harness
