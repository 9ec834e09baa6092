#include "omega/weights/corpus.hpp"

#include <set>

#include "omega/error.hpp"
#include "omega/logic/decide.hpp"

namespace omega::weights {

Formula random_formula(util::Rng& rng, std::uint32_t atoms, std::size_t depth) {
  if (atoms == 0) throw DomainError("random formulas need at least one atom");
  // Leaves: mostly atoms, occasionally a constant.
  const auto leaf = [&] {
    if (util::chance(rng, 1, 8)) return util::chance(rng, 1, 2) ? Formula::verum() : Formula::falsum();
    return Formula::atom(static_cast<std::uint32_t>(util::uniform_below(rng, atoms)));
  };
  if (depth == 0 || util::chance(rng, 1, 3)) return leaf();
  if (util::chance(rng, 1, 4)) return !random_formula(rng, atoms, depth - 1);
  const Formula a = random_formula(rng, atoms, depth - 1);
  const Formula b = random_formula(rng, atoms, depth - 1);
  switch (util::uniform_below(rng, 4)) {
    case 0:
      return a && b;
    case 1:
      return a || b;
    case 2:
      return implies(a, b);
    default:
      return iff(a, b);
  }
}

std::vector<Theory> random_corpus(std::uint64_t seed, std::size_t size, const CorpusOptions& options) {
  std::vector<Theory> corpus;
  corpus.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    util::Rng rng = util::stream_rng(seed, i);
    const auto count = util::uniform_below(rng, options.max_axioms + 1);
    std::vector<Formula> axioms;
    for (std::uint64_t k = 0; k < count; ++k) axioms.push_back(random_formula(rng, options.atoms, options.max_depth));
    corpus.emplace_back(std::move(axioms));
  }
  return corpus;
}

EntailmentMatrix entailment_matrix(const std::vector<Theory>& corpus) {
  const std::size_t n = corpus.size();
  EntailmentMatrix m(n);
  std::set<std::uint32_t> atom_set;
  for (const auto& t : corpus) atom_set.merge(t.atoms());
  const std::vector<std::uint32_t> atoms(atom_set.begin(), atom_set.end());
  const auto rows = static_cast<std::ptrdiff_t>(n);
  if (atoms.size() <= 6) {
    std::vector<std::uint64_t> masks(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < rows; ++i) masks[i] = logic::table_mask(corpus[i], atoms);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, (masks[i] & ~masks[j]) == 0);
    }
    return m;
  }
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, logic::entails(corpus[i], corpus[j]));
  }
  return m;
}

EntailmentMatrix entailment_matrix_serial(const std::vector<Theory>& corpus) {
  EntailmentMatrix m(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = 0; j < corpus.size(); ++j) m.set(i, j, logic::entails(corpus[i], corpus[j]));
  }
  return m;
}

}  // namespace omega::weights
