#pragma once

#include <cstdint>
#include <vector>

#include "omega/logic/theory.hpp"
#include "omega/util/random.hpp"

namespace omega::weights {

using logic::Formula;
using logic::Theory;

struct CorpusOptions {
  std::uint32_t atoms = 4;       // draws from p0 .. p{atoms-1}
  std::size_t max_axioms = 3;    // 0 .. max_axioms axioms per theory
  std::size_t max_depth = 2;
};

Formula random_formula(util::Rng& rng, std::uint32_t atoms, std::size_t depth);
/// Theory i is drawn from stream i of `seed`, so corpora of different sizes
/// share their prefixes.
std::vector<Theory> random_corpus(std::uint64_t seed, std::size_t size, const CorpusOptions& options = {});

/// Row-major n x n table of entails(T_i, T_j).
class EntailmentMatrix {
 public:
  explicit EntailmentMatrix(std::size_t n) : n_(n), bits_(n * n, 0) {}
  std::size_t size() const noexcept { return n_; }
  bool operator()(std::size_t i, std::size_t j) const { return bits_[i * n_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool value) { bits_[i * n_ + j] = value ? 1 : 0; }
  bool equivalent(std::size_t i, std::size_t j) const { return (*this)(i, j) && (*this)(j, i); }

  friend bool operator==(const EntailmentMatrix&, const EntailmentMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<std::uint8_t> bits_;
};

/// OpenMP over rows. Corpora over at most six atoms compare packed truth
/// tables; larger ones fall back to entails().
EntailmentMatrix entailment_matrix(const std::vector<Theory>& corpus);
/// Single-threaded reference, always through entails().
EntailmentMatrix entailment_matrix_serial(const std::vector<Theory>& corpus);

}  // namespace omega::weights
