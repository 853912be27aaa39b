#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "coclass/harness/battery.hpp"

namespace coclass::harness {

/// Key order is insertion order so output is schema-stable.
using Json = nlohmann::ordered_json;

/// Coordinates as symmetric integer residues in (-p/2, p/2].
Json vector_json(const linalg::PrimeField& f, const Vec& v);
/// Integer grid of f: row r holds the e_r coordinates, column j is f(e_j).
Json map_json(const Map& f, const std::vector<std::string>& labels);
Json map_check_json(const MapCheck& c, const linalg::PrimeField& f,
                    const std::vector<std::string>& labels);

Json to_json(const StructuralProfile& p);
Json to_json(const Prediction& p);
Json to_json(const VerdictReport& r);
Json to_json(const HeisenbergWitness& w, const std::string& variant = "both");
Json to_json(const Dim5Witness& w);
Json to_json(const StructuralReport& r);
/// Criteria, witnesses, oracle checks and catalog verdicts; no timings.
Json to_json(const BatteryReport& b);

/// Linear combination such as "-u1 + z2"; "0" for the zero vector.
std::string format_vector(const linalg::PrimeField& f, const Vec& v,
                          const std::vector<std::string>& labels);
/// Grid with basis labels, one line per row.
std::string format_map(const Map& f, const std::vector<std::string>& labels);

std::string render_text(const StructuralProfile& p);
std::string render_text(const VerdictReport& r);
std::string render_text(const HeisenbergWitness& w, const std::string& variant = "both");
std::string render_text(const Dim5Witness& w);
/// Summary table: one row per criterion and one per catalog entry.
std::string render_text(const BatteryReport& b);

}  // namespace coclass::harness
