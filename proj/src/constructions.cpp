#include "coclass/constructions/constructions.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

namespace coclass::constructions {

namespace {

std::vector<std::string> numbered(const std::string& stem, std::size_t from, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(stem + std::to_string(from + i));
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::size_t parse_count(const std::string& text, const std::string& whole) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw std::invalid_argument("bad number '" + text + "' in builtin name '" + whole + "'");
  }
  return value;
}

}  // namespace

StructureTable abelian_table(std::size_t n) {
  if (n == 0) throw std::invalid_argument("abelian: n must be >= 1");
  return StructureTable(n);
}

StructureTable heisenberg_table(std::size_t k, std::size_t m) {
  if (k == 0 || m == 0) throw std::invalid_argument("heisenberg: k and m must be >= 1");
  StructureTable t(2 * k + m);
  for (std::size_t i = 0; i < k; ++i) t.add(2 * i, 2 * i + 1, 2 * k, 1);
  auto labels = numbered("u", 1, 2 * k);
  for (auto& z : numbered("z", 1, m)) labels.push_back(std::move(z));
  t.set_labels(std::move(labels));
  return t;
}

StructureTable filiform_table(std::size_t n) {
  if (n < 3) throw std::invalid_argument("filiform: n must be >= 3");
  StructureTable t(n);
  t.add(0, 1, 2, 1);
  for (std::size_t i = 1; i + 3 <= n; ++i) t.add(0, i + 1, i + 2, 1);
  std::vector<std::string> labels{"u", "v"};
  for (auto& v : numbered("v", 1, n - 2)) labels.push_back(std::move(v));
  t.set_labels(std::move(labels));
  return t;
}

StructureTable dim5_example_table() {
  StructureTable t(5);
  t.add(0, 1, 4, 1).add(2, 3, 4, 1);
  t.set_labels(numbered("x", 1, 5));
  return t;
}

StructureTable coclass2_indecomposable_table() {
  StructureTable t(5);
  t.add(0, 1, 2, 1).add(0, 2, 4, 1).add(1, 3, 4, 1);
  return t;
}

StructureTable two_step_dim5_table() {
  StructureTable t(5);
  t.add(0, 1, 3, 1).add(0, 2, 4, 1);
  t.set_labels(numbered("x", 1, 5));
  return t;
}

StructureTable hub_dim6_table() {
  StructureTable t(6);
  t.add(0, 1, 2, 1).add(0, 2, 3, 1).add(0, 4, 5, 1);
  return t;
}

StructureTable coclass3_dim6_abelian_z2_table() {
  StructureTable t(6);
  t.add(0, 1, 3, 1).add(0, 2, 4, 1).add(1, 3, 5, 1).add(2, 4, 5, 1);
  t.set_labels(numbered("x", 1, 6));
  return t;
}

StructureTable coclass3_dim6_nonabelian_z2_table() {
  StructureTable t(6);
  t.add(0, 1, 2, 1).add(0, 2, 3, 1).add(4, 5, 3, 1);
  t.set_labels({"u", "v", "v1", "v2", "x", "y"});
  return t;
}

StructureTable builtin_table(const std::string& name) {
  const auto parts = split(name, ':');
  const auto& head = parts.front();
  if (head == "abelian" && parts.size() == 2) return abelian_table(parse_count(parts[1], name));
  if (head == "filiform" && parts.size() == 2) return filiform_table(parse_count(parts[1], name));
  if (head == "heisenberg" && parts.size() == 3) {
    return heisenberg_table(parse_count(parts[1], name), parse_count(parts[2], name));
  }
  if (head == "dim5" && parts.size() == 1) return dim5_example_table();
  throw std::invalid_argument("unknown builtin algebra '" + name + "'");
}

}  // namespace coclass::constructions
