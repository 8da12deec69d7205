#pragma once

#include <utility>
#include <vector>

#include "tsilab/norming_set.hpp"
#include "tsilab/rational.hpp"

namespace tsilab {

/// Exact-rational simplex for  max c.x  s.t.  A x <= b,  x >= 0,  b >= 0.
/// The nonnegative right-hand side makes the slack basis feasible, which is
/// all the callers here need (their feasible sets contain 0). Dantzig
/// pivoting with a Bland fallback after a stall cap, so it terminates and
/// is deterministic. Throws Error(unbounded) on an unbounded ray,
/// Error(invalid_argument) if some b_i < 0.
struct LinearProgram {
  std::vector<std::vector<Rational>> constraints;  // rows of A
  std::vector<Rational> rhs;                       // b
  std::vector<Rational> objective;                 // c
};

struct LpSolution {
  Rational value;
  std::vector<Rational> point;  // an optimal vertex
};

LpSolution solve_lp(const LinearProgram& lp);

/// Exact maximum of <objective, x> over the unit ball of the norming set
/// { x : |<f, x>| <= 1 for all f }, with an attaining vertex. Free
/// variables are handled by the u - v split. Throws
/// Error(support_out_of_range) when the objective leaves {1..dim} and
/// Error(unbounded) defensively (cannot occur for genuine norm balls).
std::pair<Rational, SparseVector> maximize_linear(const Functional& objective,
                                                  const NormingSet& ball);

}  // namespace tsilab
