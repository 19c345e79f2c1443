#pragma once

// Independent brute-force reference for purely odd models: the full exterior
// basis (2^g subsets), signs by explicit inversion counting on index words,
// and dense rational Gaussian elimination. Shares nothing with the library
// beyond reading the generator degrees and the differential's terms.

#include <cstdint>
#include <vector>

#include "sullivan/cdga.hpp"

namespace oracle {

using Word = std::vector<int>;  // strictly increasing generator indices

struct ExteriorTerm {
  mpq_class coeff;
  Word word;
};

/// Concatenate then sort; zero when an index repeats. Sign = parity of the
/// number of inversions in the concatenation.
bool multiply(const Word& a, const Word& b, Word& out, int& sign);

/// Per-degree Betti numbers of a purely odd model with at most 12 generators.
std::vector<std::size_t> betti(const sullivan::Cdga& cdga);

/// Rank of a dense rational matrix (rows of equal length).
std::size_t dense_rank(std::vector<std::vector<mpq_class>> m);

}  // namespace oracle
