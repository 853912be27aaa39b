#include "coclass/constructions/catalog.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "coclass/algebra/series.hpp"
#include "coclass/constructions/constructions.hpp"

namespace coclass::constructions {

using json = nlohmann::json;
using linalg::FieldSpec;
using linalg::PrimeField;
using linalg::Rational;
using linalg::RationalField;

CatalogValidationError::CatalogValidationError(std::string entry, std::vector<std::string> violations)
    : std::runtime_error([&] {
        std::string msg = "entry '" + entry + "' violates the Jacobi identity:";
        for (const auto& v : violations) msg += " " + v + ";";
        return msg;
      }()),
      entry_(std::move(entry)),
      violations_(std::move(violations)) {}

namespace {

template <linalg::Field F>
std::vector<std::string> format_violations(const algebra::LieAlgebra<F>& L) {
  std::vector<std::string> out;
  for (const auto& v : algebra::validate(L)) {
    std::string s = "(" + std::to_string(v.i) + "," + std::to_string(v.j) + "," +
                    std::to_string(v.k) + "): residual [";
    for (std::size_t t = 0; t < v.residual.size(); ++t) {
      if (t) s += ",";
      s += L.field().to_string(v.residual[t]);
    }
    out.push_back(s + "]");
  }
  return out;
}

Rational parse_scalar(const json& c, const FieldSpec& field, std::size_t line) {
  if (c.is_number_integer()) return Rational(c.get<std::int64_t>());
  if (field.is_rational() && c.is_string()) {
    const auto text = c.get<std::string>();
    const auto slash = text.find('/');
    try {
      if (slash == std::string::npos) return Rational(linalg::BigInt(text));
      const linalg::BigInt num(text.substr(0, slash));
      const linalg::BigInt den(text.substr(slash + 1));
      if (den == 0) throw CatalogParseError(line, "zero denominator in '" + text + "'");
      return Rational(num, den);
    } catch (const CatalogParseError&) {
      throw;
    } catch (const std::exception&) {
      throw CatalogParseError(line, "malformed rational '" + text + "'");
    }
  }
  throw CatalogParseError(line, field.is_prime()
                                    ? "prime-field coefficients must be integers"
                                    : "rational coefficients must be integers or \"num/den\" strings");
}

const json& require(const json& obj, const char* key, std::size_t line) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw CatalogParseError(line, std::string("missing key '") + key + "'");
  }
  return obj.at(key);
}

std::size_t require_index(const json& obj, const char* key, std::size_t line) {
  const auto& v = require(obj, key, line);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw CatalogParseError(line, std::string("'") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

CatalogEntry parse_entry(const json& obj, std::size_t line) {
  CatalogEntry entry;
  const auto& name = require(obj, "name", line);
  if (!name.is_string()) throw CatalogParseError(line, "'name' must be a string");
  entry.name = name.get<std::string>();

  const auto& field = require(obj, "field", line);
  if (field.is_string() && field.get<std::string>() == "rational") {
    entry.field = FieldSpec::rational();
  } else if (field.is_object() && field.contains("prime") && field.at("prime").is_number_integer()) {
    const auto p = field.at("prime").get<std::int64_t>();
    if (p <= 0 || p >= PrimeField::max_modulus) {
      throw CatalogParseError(line, "prime " + std::to_string(p) + " out of range");
    }
    try {
      entry.field = FieldSpec::prime(static_cast<std::uint32_t>(p));
    } catch (const linalg::FieldError& e) {
      throw CatalogParseError(line, e.what());
    }
  } else {
    throw CatalogParseError(line, "'field' must be \"rational\" or {\"prime\": p}");
  }

  const std::size_t dim = require_index(obj, "dim", line);
  if (dim == 0) throw CatalogParseError(line, "'dim' must be >= 1");
  algebra::StructureTable table(dim);

  const auto& brackets = require(obj, "brackets", line);
  if (!brackets.is_array()) throw CatalogParseError(line, "'brackets' must be an array");
  std::set<std::pair<std::size_t, std::size_t>> seen_pairs;
  for (const auto& b : brackets) {
    const auto i = require_index(b, "i", line);
    const auto j = require_index(b, "j", line);
    if (i >= j) {
      throw CatalogParseError(line, "bracket (" + std::to_string(i) + "," + std::to_string(j) +
                                        ") must have i < j");
    }
    if (j >= dim) throw CatalogParseError(line, "bracket index out of range");
    if (!seen_pairs.insert({i, j}).second) {
      throw CatalogParseError(line, "duplicate bracket (" + std::to_string(i) + "," +
                                        std::to_string(j) + ")");
    }
    const auto& terms = require(b, "terms", line);
    if (!terms.is_array()) throw CatalogParseError(line, "'terms' must be an array");
    std::set<std::size_t> seen_k;
    for (const auto& t : terms) {
      const auto k = require_index(t, "k", line);
      if (k >= dim) throw CatalogParseError(line, "term index k out of range");
      if (!seen_k.insert(k).second) throw CatalogParseError(line, "duplicate term k");
      Rational c = parse_scalar(require(t, "c", line), entry.field, line);
      if (entry.field.is_prime()) {
        const PrimeField fp(entry.field.modulus());
        c = Rational(*fp.from_rational(c));
      }
      table.add(i, j, k, c);
    }
  }
  entry.table = std::move(table);

  if (obj.contains("tags")) {
    const auto& tags = obj.at("tags");
    if (!tags.is_array()) throw CatalogParseError(line, "'tags' must be an array");
    for (const auto& t : tags) {
      if (!t.is_string()) throw CatalogParseError(line, "tags must be strings");
      entry.tags.push_back(t.get<std::string>());
    }
  }
  return entry;
}

void require_valid(const CatalogEntry& e) {
  auto violations = entry_violations(e);
  if (!violations.empty()) throw CatalogValidationError(e.name, std::move(violations));
}

json scalar_json(const Rational& c) {
  if (boost::multiprecision::denominator(c) == 1) {
    const auto num = boost::multiprecision::numerator(c);
    if (num >= std::numeric_limits<std::int64_t>::min() &&
        num <= std::numeric_limits<std::int64_t>::max()) {
      return json(static_cast<std::int64_t>(num));
    }
    return json(num.str());
  }
  return json(c.str());
}

}  // namespace

std::vector<std::string> entry_violations(const CatalogEntry& entry) {
  if (entry.field.is_prime()) return format_violations(over_prime(entry, entry.field.modulus()));
  return format_violations(over_rationals(entry));
}

std::vector<CatalogEntry> parse_catalog(std::istream& in) {
  std::vector<CatalogEntry> out;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    json obj;
    try {
      obj = json::parse(text);
    } catch (const json::parse_error& e) {
      throw CatalogParseError(line, std::string("invalid JSON: ") + e.what());
    }
    if (!obj.is_object()) throw CatalogParseError(line, "each line must hold one JSON object");
    try {
      out.push_back(parse_entry(obj, line));
    } catch (const algebra::AlgebraError& e) {
      throw CatalogParseError(line, e.what());
    }
  }
  return out;
}

std::vector<CatalogEntry> read_catalog(std::istream& in) {
  auto entries = parse_catalog(in);
  for (const auto& e : entries) require_valid(e);
  return entries;
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog " + path.string());
  return read_catalog(in);
}

std::string serialize_entry(const CatalogEntry& entry) {
  json obj;
  obj["name"] = entry.name;
  if (entry.field.is_prime()) {
    obj["field"] = json{{"prime", entry.field.modulus()}};
  } else {
    obj["field"] = "rational";
  }
  obj["dim"] = entry.table.dim();
  json brackets = json::array();
  for (const auto& [ij, terms] : entry.table.brackets()) {
    json ts = json::array();
    for (const auto& [k, c] : terms) {
      Rational value = c;
      if (entry.field.is_prime()) {
        const PrimeField fp(entry.field.modulus());
        auto r = fp.from_rational(c);
        if (!r) throw std::invalid_argument("coefficient not representable mod p");
        if (*r == 0) continue;
        value = Rational(*r);
      }
      ts.push_back(json{{"c", scalar_json(value)}, {"k", k}});
    }
    if (ts.empty()) continue;
    brackets.push_back(json{{"i", ij.first}, {"j", ij.second}, {"terms", ts}});
  }
  obj["brackets"] = brackets;
  obj["tags"] = entry.tags;
  return obj.dump();
}

void write_catalog(const std::vector<CatalogEntry>& entries, std::ostream& out) {
  for (const auto& e : entries) out << serialize_entry(e) << '\n';
}

void save_catalog(const std::vector<CatalogEntry>& entries, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write catalog " + path.string());
  write_catalog(entries, out);
}

algebra::LieAlgebra<PrimeField> over_prime(const CatalogEntry& entry, std::uint32_t p) {
  if (entry.field.is_prime() && entry.field.modulus() != p) {
    throw std::invalid_argument("entry '" + entry.name + "' is declared over " +
                                entry.field.name() + ", not F_" + std::to_string(p));
  }
  return algebra::LieAlgebra<PrimeField>(PrimeField(p), entry.table);
}

algebra::LieAlgebra<RationalField> over_rationals(const CatalogEntry& entry) {
  if (!entry.field.is_rational()) {
    throw std::invalid_argument("entry '" + entry.name + "' is declared over " + entry.field.name());
  }
  return algebra::LieAlgebra<RationalField>(RationalField{}, entry.table);
}

CatalogEntry make_entry(std::string name, algebra::StructureTable table,
                        std::vector<std::string> extra_tags) {
  CatalogEntry e;
  e.name = std::move(name);
  e.field = FieldSpec::rational();
  e.table = std::move(table);
  const auto L = over_rationals(e);
  e.tags.push_back("dim=" + std::to_string(L.dim()));
  if (algebra::is_nilpotent(L)) {
    const auto c = algebra::nilpotency_class(L);
    e.tags.push_back("class=" + std::to_string(c));
    e.tags.push_back("coclass=" + std::to_string(L.dim() - c));
  }
  for (auto& t : extra_tags) e.tags.push_back(std::move(t));
  return e;
}

std::vector<CatalogEntry> shipped_catalog() {
  std::vector<CatalogEntry> out;
  out.push_back(make_entry("abelian:2", abelian_table(2)));
  out.push_back(make_entry("abelian:3", abelian_table(3)));
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::size_t m = 1; m <= 2; ++m) {
      const auto name = "heisenberg:" + std::to_string(k) + ":" + std::to_string(m);
      out.push_back(make_entry(name, heisenberg_table(k, m)));
    }
  }
  for (std::size_t n = 4; n <= 8; ++n) {
    out.push_back(make_entry("filiform:" + std::to_string(n), filiform_table(n)));
  }
  out.push_back(make_entry("dim5", dim5_example_table()));
  for (std::size_t n = 4; n <= 6; ++n) {
    out.push_back(make_entry("filiform:" + std::to_string(n) + "+abelian:1",
                             direct_sum(filiform_table(n), abelian_table(1))));
  }
  out.push_back(make_entry("coclass2_indecomposable", coclass2_indecomposable_table()));
  out.push_back(make_entry("heisenberg:1:1+abelian:2",
                           direct_sum(heisenberg_table(1, 1), abelian_table(2))));
  out.push_back(make_entry("two_step_dim5", two_step_dim5_table()));
  for (auto& e : coclass3_dim6_catalog()) out.push_back(std::move(e));
  out.push_back(make_entry("filiform:5+abelian:2", direct_sum(filiform_table(5), abelian_table(2))));
  return out;
}

std::vector<CatalogEntry> coclass3_dim6_catalog() {
  std::vector<CatalogEntry> out;
  out.push_back(make_entry("filiform:4+abelian:2", direct_sum(filiform_table(4), abelian_table(2))));
  out.push_back(make_entry("hub_dim6", hub_dim6_table()));
  out.push_back(make_entry("coclass3_dim6_abelian_z2", coclass3_dim6_abelian_z2_table()));
  out.push_back(make_entry("coclass3_dim6_nonabelian_z2", coclass3_dim6_nonabelian_z2_table()));
  return out;
}

CatalogEntry resolve_algebra(const std::string& name) {
  const std::string prefix = "builtin:";
  const std::string bare = name.rfind(prefix, 0) == 0 ? name.substr(prefix.size()) : name;
  for (auto& e : shipped_catalog()) {
    if (e.name == bare) return e;
  }
  return make_entry(bare, builtin_table(bare));
}

}  // namespace coclass::constructions
