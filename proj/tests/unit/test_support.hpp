#pragma once

#include <random>
#include <vector>

#include "tsilab/sparse_vector.hpp"

namespace tsilab::testing {

// Deterministic random rational vectors: support drawn from [1..max_index],
// coefficients p/q with p in [-4,4] \ {0}, q in [1,4].
inline SparseVector random_vector(std::mt19937& rng, int max_index,
                                  int max_support) {
  std::uniform_int_distribution<int> support_size(0, max_support);
  std::uniform_int_distribution<int> index(1, max_index);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 4);
  const int size = support_size(rng);
  std::vector<SparseVector::Term> terms;
  for (int t = 0; t < size; ++t) {
    int p = num(rng);
    if (p == 0) p = 1;
    terms.emplace_back(index(rng), Rational(p, den(rng)));
  }
  return SparseVector::from_terms(std::move(terms));
}

inline SparseVector nonzero_random_vector(std::mt19937& rng, int max_index,
                                          int max_support) {
  while (true) {
    SparseVector x = random_vector(rng, max_index, max_support);
    if (!x.zero()) return x;
  }
}

}  // namespace tsilab::testing
