#include "tsilab/simplex.hpp"

#include <algorithm>

#include "tsilab/errors.hpp"

namespace tsilab {

namespace {

// Dictionary simplex on  max c.x : A x <= b, x >= 0  with b >= 0 (so the
// slack basis starts feasible and no phase 1 is needed).
//
//   x_B = rhs - T x_N,   z = z0 + obj . x_N
//
// Dantzig pricing by default; after a cap of non-improving pivots the rule
// drops to Bland's, which cannot cycle.
class Dictionary {
 public:
  Dictionary(const LinearProgram& lp)
      : m_(static_cast<int>(lp.constraints.size())),
        n_(static_cast<int>(lp.objective.size())),
        tableau_(lp.constraints),
        rhs_(lp.rhs),
        obj_(lp.objective),
        z0_(0) {
    for (int i = 0; i < m_; ++i) {
      if (static_cast<int>(tableau_[i].size()) != n_)
        raise(Errc::invalid_argument, "ragged LP constraint matrix");
      if (rhs_[i] < 0)
        raise(Errc::invalid_argument, "simplex needs b >= 0 (0 feasible)");
    }
    nonbasic_.resize(n_);
    basic_.resize(m_);
    for (int j = 0; j < n_; ++j) nonbasic_[j] = j;          // structural ids
    for (int i = 0; i < m_; ++i) basic_[i] = n_ + i;        // slack ids
  }

  LpSolution solve() {
    const int stall_cap = 4 * (m_ + n_) + 64;
    int stalls = 0;
    bool bland = false;
    while (true) {
      const int enter = pick_entering(bland);
      if (enter < 0) break;
      const int leave = pick_leaving(enter);
      if (leave < 0)
        raise(Errc::unbounded, "objective unbounded over the feasible set");
      const bool degenerate = rhs_[leave] == 0;
      pivot(leave, enter);
      if (degenerate) {
        if (++stalls > stall_cap) bland = true;
      } else {
        stalls = 0;
      }
    }
    LpSolution out;
    out.value = z0_;
    out.point.assign(n_, Rational(0));
    for (int i = 0; i < m_; ++i) {
      if (basic_[i] < n_) out.point[basic_[i]] = rhs_[i];
    }
    return out;
  }

 private:
  int pick_entering(bool bland) const {
    int best = -1;
    for (int j = 0; j < n_; ++j) {
      if (obj_[j] <= 0) continue;
      if (bland) {
        if (best < 0 || nonbasic_[j] < nonbasic_[best]) best = j;
      } else {
        if (best < 0 || obj_[j] > obj_[best] ||
            (obj_[j] == obj_[best] && nonbasic_[j] < nonbasic_[best]))
          best = j;
      }
    }
    return best;
  }

  int pick_leaving(int enter) const {
    int best = -1;
    Rational best_ratio(0);
    for (int i = 0; i < m_; ++i) {
      if (tableau_[i][enter] <= 0) continue;
      Rational ratio = rhs_[i] / tableau_[i][enter];
      if (best < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basic_[i] < basic_[best])) {
        best = i;
        best_ratio = std::move(ratio);
      }
    }
    return best;
  }

  void pivot(int row, int col) {
    const Rational inv = Rational(1) / tableau_[row][col];
    for (int j = 0; j < n_; ++j) {
      if (j != col) tableau_[row][j] *= inv;
    }
    rhs_[row] *= inv;
    tableau_[row][col] = inv;

    for (int i = 0; i < m_; ++i) {
      if (i == row || tableau_[i][col] == 0) continue;
      const Rational factor = tableau_[i][col];
      for (int j = 0; j < n_; ++j) {
        if (j != col) tableau_[i][j] -= factor * tableau_[row][j];
      }
      rhs_[i] -= factor * rhs_[row];
      tableau_[i][col] = -factor * inv;
    }
    if (obj_[col] != 0) {
      const Rational factor = obj_[col];
      for (int j = 0; j < n_; ++j) {
        if (j != col) obj_[j] -= factor * tableau_[row][j];
      }
      z0_ += factor * rhs_[row];
      obj_[col] = -factor * inv;
    }
    std::swap(basic_[row], nonbasic_[col]);
  }

  int m_;
  int n_;
  std::vector<std::vector<Rational>> tableau_;
  std::vector<Rational> rhs_;
  std::vector<Rational> obj_;
  Rational z0_;
  std::vector<int> nonbasic_;
  std::vector<int> basic_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  if (lp.constraints.size() != lp.rhs.size())
    raise(Errc::invalid_argument, "LP rows and rhs disagree");
  return Dictionary(lp).solve();
}

std::pair<Rational, SparseVector> maximize_linear(const Functional& objective,
                                                  const NormingSet& ball) {
  const int d = ball.dim();
  if (!objective.zero() && objective.max_index() > d)
    raise(Errc::support_out_of_range,
          "objective support escapes the ball's truncation");

  // Free x via x = u - v, u, v >= 0; each functional f yields the two rows
  // <f, u - v> <= 1 and -<f, u - v> <= 1.
  LinearProgram lp;
  const int n = 2 * d;
  for (const auto& f : ball.functionals()) {
    std::vector<Rational> row(n, Rational(0));
    for (const auto& [index, value] : f.terms()) {
      row[index - 1] = value;
      row[d + index - 1] = -value;
    }
    std::vector<Rational> neg(n, Rational(0));
    for (int j = 0; j < n; ++j) neg[j] = -row[j];
    lp.constraints.push_back(std::move(row));
    lp.constraints.push_back(std::move(neg));
    lp.rhs.emplace_back(1);
    lp.rhs.emplace_back(1);
  }
  lp.objective.assign(n, Rational(0));
  for (const auto& [index, value] : objective.terms()) {
    lp.objective[index - 1] = value;
    lp.objective[d + index - 1] = -value;
  }

  const LpSolution solution = solve_lp(lp);
  std::vector<SparseVector::Term> terms;
  for (int i = 0; i < d; ++i) {
    Rational value = solution.point[i] - solution.point[d + i];
    if (value != 0) terms.emplace_back(i + 1, std::move(value));
  }
  return {solution.value, SparseVector::from_terms(std::move(terms))};
}

}  // namespace tsilab
