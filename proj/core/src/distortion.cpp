#include "tsilab/distortion.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "tsilab/errors.hpp"
#include "tsilab/norms.hpp"
#include "tsilab/shapes.hpp"
#include "tsilab/simplex.hpp"

namespace tsilab {

namespace {

// max <F, x> over { x >= 0 : <G, x> <= 1 for all denominator shapes G }.
// On 1-unconditional balls this equals the max over the full ball, and the
// nonnegative orthant keeps the LP in standard form.
LpSolution shape_lp(const SparseVector& objective, const ShapeSet& den,
                    int dim) {
  LinearProgram lp;
  for (const auto& g : den.shapes) {
    std::vector<Rational> row(dim, Rational(0));
    for (const auto& [index, value] : g.terms()) row[index - 1] = value;
    lp.constraints.push_back(std::move(row));
    lp.rhs.emplace_back(1);
  }
  lp.objective.assign(dim, Rational(0));
  for (const auto& [index, value] : objective.terms())
    lp.objective[index - 1] = value;
  return solve_lp(lp);
}

SparseVector point_to_vector(const std::vector<Rational>& point) {
  std::vector<SparseVector::Term> terms;
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (point[i] != 0) terms.emplace_back(static_cast<int>(i) + 1, point[i]);
  }
  return SparseVector::from_terms(std::move(terms));
}

void recheck_witness(DistortionResult& result) {
  if (result.witness.zero())
    raise(Errc::domain_error, "internal: distortion witness is zero");
  // Presentation follows the defining sup over the l1 sphere.
  result.witness = result.witness.scaled(Rational(1) / result.witness.l1_norm());
  const Rational top = eval_exact(result.witness, result.num);
  const Rational bottom = eval_exact(result.witness, result.den);
  if (bottom == 0 || top / bottom != result.value)
    raise(Errc::domain_error, "internal: distortion witness recheck failed");
}

}  // namespace

DistortionResult distortion(const NormSpec& num, const NormSpec& den, int dim) {
  if (!spec_is_polyhedral(num) || !spec_is_polyhedral(den))
    raise(Errc::unsupported_spec,
          "distortion needs polyhedral-representable specs; use "
          "distortion_estimate for lp norms");

  DistortionResult result;
  result.dim = dim;
  result.num = num;
  result.den = den;

  const bool general_path = std::holds_alternative<PolyhedralNorm>(num) ||
                            std::holds_alternative<PolyhedralNorm>(den);
  bool first = true;
  if (general_path) {
    const NormingSet num_set = norming_set(num, dim);
    const NormingSet den_set = norming_set(den, dim);
    for (const auto& f : num_set.functionals()) {
      auto [value, point] = maximize_linear(f, den_set);
      if (first || value > result.value) {
        result.value = std::move(value);
        result.witness = std::move(point);
        first = false;
      }
    }
  } else {
    const ShapeSet& num_shapes = shared_shape_set(num, dim);
    const ShapeSet& den_shapes = shared_shape_set(den, dim);
    for (const auto& f : num_shapes.shapes) {
      LpSolution solution = shape_lp(f, den_shapes, dim);
      if (first || solution.value > result.value) {
        result.value = std::move(solution.value);
        result.witness = point_to_vector(solution.point);
        first = false;
      }
    }
  }
  recheck_witness(result);
  return result;
}

DistortionResult distortion_symmetric(const NormSpec& a, const NormSpec& b,
                                      int dim) {
  DistortionResult forward = distortion(a, b, dim);
  DistortionResult backward = distortion(b, a, dim);
  return backward.value > forward.value ? backward : forward;
}

DistortionEstimate distortion_estimate(const NormSpec& num, const NormSpec& den,
                                       int dim) {
  if (dim < 1) raise(Errc::invalid_argument, "dimension must be >= 1");
  DistortionEstimate best;
  best.dim = dim;
  const auto consider = [&](const SparseVector& x) {
    if (x.zero()) return;
    const double top = eval_norm(x, num).approx();
    const double bottom = eval_norm(x, den).approx();
    if (bottom <= 0) return;
    const double ratio = top / bottom;
    if (ratio > best.value) {
      best.value = ratio;
      best.witness = x;
    }
  };
  for (int i = 1; i <= dim; ++i) consider(SparseVector::unit(i));
  for (int lo = 1; lo <= dim; ++lo) {
    for (int hi = lo; hi <= dim; ++hi) consider(SparseVector::ones(lo, hi));
  }
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> numerator(-4, 4);
  std::uniform_int_distribution<int> denominator(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<SparseVector::Term> terms;
    for (int i = 1; i <= dim; ++i) {
      const int p = numerator(rng);
      if (p != 0) terms.emplace_back(i, Rational(p, denominator(rng)));
    }
    consider(SparseVector::from_terms(std::move(terms)));
  }
  return best;
}

std::vector<GrowthRow> distortion_growth(const NormSpec& num,
                                         const NormSpec& den,
                                         const std::vector<int>& dims) {
  if (dims.empty()) raise(Errc::invalid_argument, "growth needs dims");
  for (std::size_t i = 0; i + 1 < dims.size(); ++i) {
    if (dims[i] >= dims[i + 1])
      raise(Errc::invalid_argument, "growth dims must be strictly ascending");
  }
  std::vector<GrowthRow> out;
  out.reserve(dims.size());
  for (const int dim : dims) {
    GrowthRow row;
    row.dim = dim;
    row.value = distortion(num, den, dim).value;
    if (!out.empty() && row.value < out.back().value)
      raise(Errc::domain_error,
            "internal: distortion decreased with dim, which cannot happen");
    out.push_back(std::move(row));
  }
  return out;
}

double phi_from_distortion_value(double d) {
  if (d < 1.0)
    raise(Errc::domain_error, "phi needs D >= 1 (got D < 1)");
  const double log_d = std::log(d);
  return 1.0 - log_d / (1.0 + log_d);
}

double phi_from_distortion_value(const Rational& d) {
  if (d < 1)
    raise(Errc::domain_error,
          "phi needs D >= 1 (got D = " + format_rational(d) + ")");
  if (d == 1) return 1.0;
  // D > 1 has log D > 0; the clamp keeps float rounding of log_rational
  // from nudging phi above 1 when D is barely past 1.
  const double log_d = std::max(0.0, log_rational(d));
  return 1.0 - log_d / (1.0 + log_d);
}

PhiValue phi(const NormSpec& num, const NormSpec& den, int dim) {
  DistortionResult d = distortion(num, den, dim);
  PhiValue out;
  out.value = phi_from_distortion_value(d.value);
  out.distortion_value = std::move(d.value);
  return out;
}

}  // namespace tsilab
