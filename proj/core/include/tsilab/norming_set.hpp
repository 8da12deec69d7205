#pragma once

#include <vector>

#include "tsilab/sparse_vector.hpp"

namespace tsilab {

/// Finite set of functionals realizing a polyhedral norm on vectors
/// supported in {1..dim}:  ||x|| = max_f |<f, x>|.
///
/// Negation is implicit in the |.| pairing, so functionals are stored one
/// per {f, -f} pair, canonicalized with their first nonzero coordinate
/// positive. Construction dedups, drops functionals strictly dominated in
/// absolute value by another (|f| <= |g| coordinatewise, |f| != |g|), and
/// verifies the induced seminorm is a norm (the functionals span dim
/// coordinates). Equal-|.| functionals with different sign patterns are
/// all kept; removing them would change the norm.
class NormingSet {
 public:
  NormingSet(int dim, std::vector<Functional> functionals);

  int dim() const { return dim_; }
  const std::vector<Functional>& functionals() const { return functionals_; }
  int size() const { return static_cast<int>(functionals_.size()); }

 private:
  int dim_ = 0;
  std::vector<Functional> functionals_;
};

/// max_f |<f, x>|. Throws Error(support_out_of_range) when supp(x) is not
/// contained in {1..dim}.
Rational eval_polyhedral(const NormingSet& set, const SparseVector& x);

}  // namespace tsilab
