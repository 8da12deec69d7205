#pragma once

#include <optional>
#include <vector>

#include "tsilab/config.hpp"
#include "tsilab/norm_spec.hpp"
#include "tsilab/sparse_vector.hpp"

namespace tsilab {

/// sup / l1 exactly; lp as a double with a 1e-12 precision target.
/// Throws Error(invalid_argument) for non-base specs.
Scalar base_norm(const SparseVector& x, const NormSpec& spec);

/// The n-th iterate ||x||_n of the recursion
///   ||x||_0   = sup norm,
///   ||x||_m+1 = max( ||x||_m, 1/2 max { sum_i ||E_i x||_m } )
/// with the inner max over successive interval families E_1 < ... < E_k,
/// k <= min E_1, k >= 2 (k = 1 is dominated by the first branch).
/// Exact; dynamic programming over (support run, level) with a per-call
/// memo table, polynomial in the support size.
Rational tsirelson_iterate(const SparseVector& x, int level);

/// The limit norm ||x||_T as the fixed point of the recursion; every
/// admissible split with k >= 2 strictly shrinks the support, so the DP
/// is well founded by run length. Equals lim_n ||x||_n.
Rational tsirelson_limit(const SparseVector& x);

/// Literal recursion over arbitrary-subset families (min_parts = 1), no
/// memoization. Independent of the DP path; used as the oracle. Throws
/// Error(oracle_bound_exceeded) when |supp(x)| > oracle_bound.
Rational brute_force_iterate(const SparseVector& x, int level,
                             int oracle_bound = kDefaultOracleBound);

/// Brute-force limit norm via stabilization (level = |supp(x)|).
Rational brute_force_limit(const SparseVector& x,
                           int oracle_bound = kDefaultOracleBound);

/// Evaluates any polyhedrally-representable spec exactly.
/// Throws Error(unsupported_spec) for Lp.
Rational eval_exact(const SparseVector& x, const NormSpec& spec);

/// Evaluates any spec (Lp routes to the double path).
Scalar eval_norm(const SparseVector& x, const NormSpec& spec);

struct ConvergenceReport {
  std::vector<Scalar> values;
  /// First index from which all later values are equal (exact specs compare
  /// exactly; doubles within 1e-12). Always <= values.size() - 1.
  int stabilized_from = 0;
  /// True when at least the last two values agree (or the list is a
  /// singleton), i.e. a constant tail is visible.
  bool eventually_constant = false;
  std::optional<Scalar> stabilized_value;
};

/// The sequence ||x||_{spec_i} with its constant-tail analysis.
ConvergenceReport pointwise_limit(const SparseVector& x,
                                  const std::vector<NormSpec>& specs);

}  // namespace tsilab
