#pragma once

namespace tsilab {

inline constexpr int kDefaultDimBound = 10;
inline constexpr int kDefaultOracleBound = 8;

/// Upper bound on the truncation dimension accepted by norming-set
/// construction (and everything built on it). Reads TSLAB_DIM_BOUND from
/// the environment once; an unparsable value throws Error(invalid_argument)
/// at first use.
int dim_bound();

/// True iff dim is within dim_bound(); callers raise dimension_bound_exceeded.
bool dim_in_bounds(int dim);

}  // namespace tsilab
