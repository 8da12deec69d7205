#pragma once

#include <vector>

#include "tsilab/norm_spec.hpp"
#include "tsilab/sparse_vector.hpp"

namespace tsilab {

/// D(num, den) restricted to vectors supported in {1..dim}:
///   D = sup { ||x||_num / ||x||_den : x != 0 }.
/// The ratio is 0-homogeneous, so the l1-sphere constraint in the defining
/// formula only rules out x = 0; the witness is stored l1-normalized.
struct DistortionResult {
  Rational value;
  int dim = 0;
  SparseVector witness;  // nonzero; ratio at witness equals value exactly
  NormSpec num;
  NormSpec den;
};

/// Exact distortion via one LP per (pruned) numerator functional over the
/// denominator unit ball. Both specs must be polyhedrally representable at
/// dim; Lp throws Error(unsupported_spec) (see distortion_estimate).
/// Monotone nondecreasing in dim.
DistortionResult distortion(const NormSpec& num, const NormSpec& den, int dim);

/// max(D(a,b), D(b,a)). The defining sup is asymmetric; this mode exists
/// because some arguments treat D as symmetric. Witness from the larger
/// side (ties resolve to the (a,b) direction).
DistortionResult distortion_symmetric(const NormSpec& a, const NormSpec& b,
                                      int dim);

/// Documented heuristic for specs without a polyhedral representation
/// (i.e. Lp on either side): maximizes the ratio over a deterministic
/// candidate battery (basis vectors, 0/1 intervals, seeded random
/// vectors). A lower bound on the true sup; no exactness claim.
struct DistortionEstimate {
  double value = 0.0;
  int dim = 0;
  SparseVector witness;
};
DistortionEstimate distortion_estimate(const NormSpec& num,
                                       const NormSpec& den, int dim);

struct GrowthRow {
  int dim = 0;
  Rational value;
};

/// Per-dim exact D values; dims must be ascending. Rechecks the
/// dim-monotonicity of the results.
std::vector<GrowthRow> distortion_growth(const NormSpec& num,
                                         const NormSpec& den,
                                         const std::vector<int>& dims);

/// phi = 1 - log D / (1 + log D), natural log, for D >= 1. Maps 1 to 1,
/// decreases strictly, tends to 0 as D grows.
struct PhiValue {
  double value = 1.0;
  Rational distortion_value;  // the exact D the value was computed from
};

/// Throws Error(domain_error) when D < 1 at this dim; Lp specs propagate
/// unsupported_spec from distortion().
PhiValue phi(const NormSpec& num, const NormSpec& den, int dim);

/// The bare formula on a double D (any D >= 1); used for synthetic values
/// and the Lp estimate path. Throws Error(domain_error) for D < 1.
double phi_from_distortion_value(double d);
double phi_from_distortion_value(const Rational& d);

}  // namespace tsilab
