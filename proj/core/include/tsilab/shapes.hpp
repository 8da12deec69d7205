#pragma once

#include <vector>

#include "tsilab/norm_spec.hpp"
#include "tsilab/norming_set.hpp"

namespace tsilab {

/// Nonnegative representatives of a sign-complete functional family.
/// All built-in norms here are 1-unconditional, so their norming sets are
/// closed under coordinatewise sign flips and  ||x|| = max_F <F, |x|>
/// over the nonnegative shapes alone. Shapes keep LP sizes small; the full
/// NormingSet materializes every sign pattern.
struct ShapeSet {
  int dim = 0;
  std::vector<SparseVector> shapes;  // sorted, deduped, nonnegative
};

/// Shape set for sup / l1 / tsirelson iterates / tsirelson limit at the
/// given truncation dimension. The Tsirelson sets mirror the primal
/// recursion dually: level-(n+1) shapes are (F_1 + ... + F_k)/2 over
/// successive level-n shapes with 2 <= k <= min supp F_1. During
/// generation only equal-support dominance pruning is applied (safe under
/// further combination); the returned set is fully pruned (drop F when
/// F <= G coordinatewise, F != G). Throws Error(unsupported_spec) for Lp
/// and PolyhedralNorm, Error(dimension_bound_exceeded) past the bound.
ShapeSet build_shape_set(const NormSpec& spec, int dim);

/// max_F <F, |x|> over the shapes.
Rational eval_shapes(const ShapeSet& shapes, const SparseVector& x);

/// Process-wide memoized shape sets keyed by (spec text, dim). The values
/// are immutable once built, so results never depend on call order.
const ShapeSet& shared_shape_set(const NormSpec& spec, int dim);

/// Norming set realizing `spec` exactly on vectors supported in {1..dim}.
/// Built-in specs expand their shape set to all sign patterns; a
/// PolyhedralNorm returns its stored set (dim must match).
/// Throws Error(unsupported_spec) for Lp.
NormingSet norming_set(const NormSpec& spec, int dim);

}  // namespace tsilab
