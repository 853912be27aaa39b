#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "coclass/algebra/lie_algebra.hpp"
#include "coclass/linalg/field.hpp"

namespace coclass::constructions {

/// A named algebra over its declared field. Entries declared over Q with
/// integral constants can be reduced into any odd F_p.
struct CatalogEntry {
  std::string name;
  linalg::FieldSpec field = linalg::FieldSpec::rational();
  algebra::StructureTable table{1};
  std::vector<std::string> tags;
};

/// Malformed catalog text; `line` is 1-based (0 when not tied to a line).
class CatalogParseError : public std::runtime_error {
 public:
  CatalogParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Entry that parses but fails the Jacobi identity.
class CatalogValidationError : public std::runtime_error {
 public:
  CatalogValidationError(std::string entry, std::vector<std::string> violations);
  const std::string& entry() const noexcept { return entry_; }
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::string entry_;
  std::vector<std::string> violations_;
};

/// Jacobi violations over the declared field, formatted as
/// "(i,j,k): residual [..]" with 0-based indices.
std::vector<std::string> entry_violations(const CatalogEntry& entry);

/// Parses line-oriented JSON without validating the Jacobi identity.
std::vector<CatalogEntry> parse_catalog(std::istream& in);

/// Parses and validates every entry.
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path);
std::vector<CatalogEntry> read_catalog(std::istream& in);

/// One JSON object, no trailing newline. Output is canonical: brackets sorted
/// by (i, j), terms by k, residues reduced for prime fields.
std::string serialize_entry(const CatalogEntry& entry);
void write_catalog(const std::vector<CatalogEntry>& entries, std::ostream& out);
void save_catalog(const std::vector<CatalogEntry>& entries, const std::filesystem::path& path);

/// Structure constants reduced into F_p. Throws if the entry is declared
/// over a different prime or a denominator vanishes mod p.
algebra::LieAlgebra<linalg::PrimeField> over_prime(const CatalogEntry& entry, std::uint32_t p);
algebra::LieAlgebra<linalg::RationalField> over_rationals(const CatalogEntry& entry);

/// Builds an entry over Q with dim / class / coclass tags computed from the table.
CatalogEntry make_entry(std::string name, algebra::StructureTable table,
                        std::vector<std::string> extra_tags = {});

/// The curated desk-scale catalog.
std::vector<CatalogEntry> shipped_catalog();
/// The dimension-6 coclass-3 members of the shipped catalog.
std::vector<CatalogEntry> coclass3_dim6_catalog();

/// Shipped entry by name, or a builtin (abelian:N, heisenberg:K:M,
/// filiform:N, dim5). An optional "builtin:" prefix is ignored. Throws
/// std::invalid_argument if neither matches.
CatalogEntry resolve_algebra(const std::string& name);

}  // namespace coclass::constructions
