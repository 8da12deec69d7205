#pragma once

#include <functional>
#include <initializer_list>
#include <vector>

#include "tsilab/config.hpp"

namespace tsilab {

/// Finite sorted set of positive integers.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<int> elements);

  /// Sorts and dedups; all elements must be >= 1.
  static IndexSet of(std::vector<int> elements);

  /// The integer interval [lo, hi]; empty when lo > hi.
  static IndexSet interval(int lo, int hi);

  const std::vector<int>& elements() const { return elements_; }
  bool empty() const { return elements_.empty(); }
  int size() const { return static_cast<int>(elements_.size()); }
  int min() const;  // requires nonempty
  int max() const;  // requires nonempty
  bool contains(int value) const;

  bool operator==(const IndexSet& other) const = default;

 private:
  std::vector<int> elements_;
};

/// Successive finite sets E_1 < ... < E_k with k <= min E_1. Parts are
/// nonempty; max E_i < min E_{i+1}. Construction validates both invariants.
class AdmissibleFamily {
 public:
  explicit AdmissibleFamily(std::vector<IndexSet> parts);

  const std::vector<IndexSet>& parts() const { return parts_; }
  int k() const { return static_cast<int>(parts_.size()); }

  bool operator==(const AdmissibleFamily& other) const = default;

 private:
  std::vector<IndexSet> parts_;
};

using FamilyVisitor = std::function<void(const AdmissibleFamily&)>;

/// Enumerates admissible families whose parts are integer intervals meeting
/// the support, canonicalized so each part is the hull of its intersection
/// with the support (one family per same-intersections class). The
/// production recursion only needs min_parts = 2; min_parts = 1 exists for
/// the literal form of the definition.
void for_each_admissible_interval_family(const IndexSet& support,
                                         int min_parts,
                                         const FamilyVisitor& visit);
std::vector<AdmissibleFamily> enumerate_admissible_intervals(
    const IndexSet& support, int min_parts);

/// Faithful (exponential) enumerator over arbitrary subsets of the support.
/// Oracle use only: throws Error(oracle_bound_exceeded) when the support
/// has more than oracle_bound points.
void for_each_admissible_subset_family(const IndexSet& support, int min_parts,
                                       const FamilyVisitor& visit,
                                       int oracle_bound = kDefaultOracleBound);
std::vector<AdmissibleFamily> enumerate_admissible_subsets(
    const IndexSet& support, int min_parts,
    int oracle_bound = kDefaultOracleBound);

}  // namespace tsilab
