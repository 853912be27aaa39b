#pragma once

#include <stdexcept>
#include <vector>

#include "coclass/algebra/series.hpp"

namespace coclass::algebra {

/// Either a generator, or [word #left, generator #generator].
struct BracketWord {
  enum class Kind { generator, bracket };
  Kind kind;
  std::size_t generator;  // index into GeneratorPresentation::generators
  std::size_t left;       // previous word index (bracket words only)

  bool operator==(const BracketWord&) const = default;
};

/// A basis of L written as left-normed bracket words in a minimal generating
/// set. Automorphisms are determined by the images of the generators; the
/// words carry those images to the whole basis.
template <Field F>
struct GeneratorPresentation {
  std::vector<std::size_t> generators;  // basis indices of the generator lifts
  std::vector<BracketWord> words;       // the first generators.size() words are the generators
  Matrix<F> word_basis;                 // column t = value of words[t]
  Matrix<F> word_basis_inverse;
};

/// Lifts are the lexicographically first basis vectors independent modulo
/// L'; the basis is completed by bracketing existing words with generators
/// in breadth-first order.
template <Field F>
GeneratorPresentation<F> generator_presentation(const LieAlgebra<F>& L) {
  if (!is_nilpotent(L)) throw NotNilpotentError();
  const std::size_t n = L.dim();
  const F& f = L.field();

  std::vector<std::size_t> gens;
  Subspace<F> reached = derived_subalgebra(L);
  for (std::size_t i = 0; i < n; ++i) {
    const auto e = L.basis_vector(i);
    if (reached.contains(e)) continue;
    gens.push_back(i);
    reached = linalg::subspace_sum(reached, Subspace<F>::span(f, n, {e}));
  }

  std::vector<BracketWord> words;
  std::vector<Vector<F>> values;
  Subspace<F> span = Subspace<F>::zero(f, n);
  auto push = [&](BracketWord w, Vector<F> v) {
    span = linalg::subspace_sum(span, Subspace<F>::span(f, n, {v}));
    words.push_back(w);
    values.push_back(std::move(v));
  };
  for (std::size_t g = 0; g < gens.size(); ++g) {
    push({BracketWord::Kind::generator, g, 0}, L.basis_vector(gens[g]));
  }
  for (std::size_t q = 0; q < words.size() && words.size() < n; ++q) {
    for (std::size_t g = 0; g < gens.size() && words.size() < n; ++g) {
      auto v = L.bracket(values[q], L.basis_vector(gens[g]));
      if (span.contains(v)) continue;
      push({BracketWord::Kind::bracket, g, q}, std::move(v));
    }
  }
  if (words.size() != n) {
    throw std::logic_error("generator lifts failed to generate a nilpotent algebra");
  }

  auto basis = Matrix<F>::from_columns(f, n, values);
  auto inverse = linalg::invert(basis);
  if (!inverse) throw std::logic_error("word basis is singular");
  return {std::move(gens), std::move(words), std::move(basis), std::move(*inverse)};
}

/// Values of every word once the generators are sent to `generator_images`.
template <Field F>
std::vector<Vector<F>> evaluate_words(const LieAlgebra<F>& L, const GeneratorPresentation<F>& P,
                                      const std::vector<Vector<F>>& generator_images) {
  if (generator_images.size() != P.generators.size()) {
    throw std::invalid_argument("one image per generator expected");
  }
  std::vector<Vector<F>> out;
  out.reserve(P.words.size());
  for (const auto& w : P.words) {
    if (w.kind == BracketWord::Kind::generator) {
      out.push_back(generator_images[w.generator]);
    } else {
      out.push_back(L.bracket(out[w.left], generator_images[w.generator]));
    }
  }
  return out;
}

/// The unique linear map agreeing with a homomorphism that sends generators
/// to `generator_images` (matrix columns are images of e_j).
template <Field F>
Matrix<F> extend_generator_images(const LieAlgebra<F>& L, const GeneratorPresentation<F>& P,
                                  const std::vector<Vector<F>>& generator_images) {
  const auto images = evaluate_words(L, P, generator_images);
  return linalg::multiply(Matrix<F>::from_columns(L.field(), L.dim(), images),
                          P.word_basis_inverse);
}

}  // namespace coclass::algebra
