#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "tsilab/rational.hpp"

namespace tsilab {

class IndexSet;

/// Finitely supported vector over exact rationals, indexed by positive
/// integers (1-based). Terms are kept sorted by index with no stored zeros;
/// the empty term list is the zero vector. Immutable value type.
class SparseVector {
 public:
  using Term = std::pair<int, Rational>;

  SparseVector() = default;
  SparseVector(std::initializer_list<Term> terms);

  /// Sorts, merges duplicate indices, and drops zeros. Indices must be >= 1.
  static SparseVector from_terms(std::vector<Term> terms);

  /// The basis vector e_i.
  static SparseVector unit(int index);

  /// Sum of e_i for i in [lo, hi].
  static SparseVector ones(int lo, int hi);

  const std::vector<Term>& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }
  int support_size() const { return static_cast<int>(terms_.size()); }
  IndexSet support() const;
  int min_index() const;  // requires nonzero
  int max_index() const;  // requires nonzero

  /// Coefficient at index (zero when absent).
  const Rational& coeff(int index) const;

  /// Restriction Ex: coordinates in E kept, everything else dropped.
  SparseVector restricted(const IndexSet& set) const;
  SparseVector restricted(int lo, int hi) const;

  SparseVector scaled(const Rational& factor) const;
  SparseVector plus(const SparseVector& other) const;
  SparseVector minus(const SparseVector& other) const;

  /// Coordinatewise absolute value.
  SparseVector abs() const;

  /// Flips the sign of the given coordinate (no-op when absent).
  SparseVector with_sign_flipped(int index) const;

  /// Drops the given coordinate.
  SparseVector without_index(int index) const;

  Rational sup_norm() const;
  Rational l1_norm() const;

  /// Exact pairing <f, x> with another sparse vector.
  Rational dot(const SparseVector& other) const;

  bool operator==(const SparseVector& other) const = default;

  /// Lexicographic order on the term list; used for dedup sets.
  bool operator<(const SparseVector& other) const;

 private:
  std::vector<Term> terms_;
};

inline SparseVector operator+(const SparseVector& a, const SparseVector& b) {
  return a.plus(b);
}
inline SparseVector operator-(const SparseVector& a, const SparseVector& b) {
  return a.minus(b);
}
inline SparseVector operator*(const Rational& c, const SparseVector& x) {
  return x.scaled(c);
}

/// Functionals share the sparse-vector representation; the dual role is
/// contextual (they pair against vectors instead of being measured).
using Functional = SparseVector;

}  // namespace tsilab
