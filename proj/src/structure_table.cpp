#include "coclass/algebra/lie_algebra.hpp"

#include <algorithm>

namespace coclass::algebra {

StructureTable::StructureTable(std::size_t dim) : dim_(dim), labels_(default_labels(dim)) {}

StructureTable& StructureTable::add(std::size_t i, std::size_t j, std::size_t k,
                                    const Rational& c) {
  if (i >= dim_ || j >= dim_ || k >= dim_) {
    throw AlgebraError("basis index out of range in structure constant");
  }
  if (i == j) throw AlgebraError("[e_i, e_i] must vanish; got a constant for i = j");
  Rational value = c;
  if (i > j) {
    std::swap(i, j);
    value = -value;
  }
  if (value == 0) return *this;
  auto& terms = brackets_[{i, j}];
  auto [it, inserted] = terms.emplace(k, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms.erase(it);
  }
  if (terms.empty()) brackets_.erase({i, j});
  return *this;
}

StructureTable& StructureTable::set_labels(std::vector<std::string> labels) {
  if (labels.size() != dim_) throw AlgebraError("label count does not match dimension");
  labels_ = std::move(labels);
  return *this;
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i + 1));
  return out;
}

StructureTable direct_sum(const StructureTable& a, const StructureTable& b) {
  const std::size_t shift = a.dim();
  StructureTable out(a.dim() + b.dim());
  for (const auto& [ij, terms] : a.brackets())
    for (const auto& [k, c] : terms) out.add(ij.first, ij.second, k, c);
  for (const auto& [ij, terms] : b.brackets())
    for (const auto& [k, c] : terms) out.add(ij.first + shift, ij.second + shift, k + shift, c);

  // keep labels readable and distinct
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(l);
  for (const auto& l : b.labels()) {
    std::string candidate = l;
    while (std::find(labels.begin(), labels.end(), candidate) != labels.end()) candidate += "'";
    labels.push_back(candidate);
  }
  out.set_labels(std::move(labels));
  return out;
}

}  // namespace coclass::algebra
