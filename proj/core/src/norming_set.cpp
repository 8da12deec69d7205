#include "tsilab/norming_set.hpp"

#include <algorithm>
#include <map>

#include "tsilab/errors.hpp"

namespace tsilab {

namespace {

// One representative per {f, -f}: first nonzero coordinate positive.
Functional canonical_sign(const Functional& f) {
  if (f.zero() || f.terms().front().second > 0) return f;
  return f.scaled(Rational(-1));
}

// a <= b coordinatewise on nonnegative vectors.
bool dominated(const SparseVector& a, const SparseVector& b) {
  for (const auto& [index, value] : a.terms()) {
    if (value > b.coeff(index)) return false;
  }
  return true;
}

// Rank over Q of the functionals, by Gaussian elimination.
int rank_of(const std::vector<Functional>& rows, int dim) {
  std::vector<std::vector<Rational>> m;
  m.reserve(rows.size());
  for (const auto& f : rows) {
    std::vector<Rational> dense(dim, Rational(0));
    for (const auto& [index, value] : f.terms()) dense[index - 1] = value;
    m.push_back(std::move(dense));
  }
  int rank = 0;
  for (int col = 0; col < dim && rank < static_cast<int>(m.size()); ++col) {
    int pivot = -1;
    for (int row = rank; row < static_cast<int>(m.size()); ++row) {
      if (m[row][col] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int row = rank + 1; row < static_cast<int>(m.size()); ++row) {
      if (m[row][col] == 0) continue;
      const Rational factor = m[row][col] / m[rank][col];
      for (int c = col; c < dim; ++c) m[row][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

NormingSet::NormingSet(int dim, std::vector<Functional> functionals)
    : dim_(dim) {
  if (dim < 1) raise(Errc::invalid_argument, "norming set dimension must be >= 1");
  for (auto& f : functionals) {
    if (f.zero()) continue;
    if (f.min_index() < 1 || f.max_index() > dim)
      raise(Errc::invalid_argument,
            "functional support escapes the truncation {1..dim}");
    functionals_.push_back(canonical_sign(f));
  }
  std::sort(functionals_.begin(), functionals_.end());
  functionals_.erase(std::unique(functionals_.begin(), functionals_.end()),
                     functionals_.end());
  if (functionals_.empty())
    raise(Errc::invalid_argument, "norming set needs at least one functional");

  // Drop functionals strictly dominated in absolute value. Grouping by |f|
  // first keeps this cheap and never separates equal-|.| sign patterns,
  // which all stay (they are needed to realize the norm).
  std::map<SparseVector, std::vector<Functional>> classes;
  for (const auto& f : functionals_) classes[f.abs()].push_back(f);
  std::vector<Functional> kept;
  for (const auto& [shape, members] : classes) {
    bool drop = false;
    for (const auto& [other, other_members] : classes) {
      if (other == shape) continue;
      if (dominated(shape, other)) {
        drop = true;
        break;
      }
    }
    if (!drop) kept.insert(kept.end(), members.begin(), members.end());
  }
  functionals_ = std::move(kept);

  if (rank_of(functionals_, dim_) < dim_)
    raise(Errc::invalid_argument,
          "functionals induce only a seminorm (rank below dim)");
}

Rational eval_polyhedral(const NormingSet& set, const SparseVector& x) {
  if (!x.zero() && (x.min_index() < 1 || x.max_index() > set.dim()))
    raise(Errc::support_out_of_range,
          "vector support escapes the truncation {1..dim}");
  Rational best(0);
  for (const auto& f : set.functionals()) {
    Rational value = abs(f.dot(x));
    if (value > best) best = std::move(value);
  }
  return best;
}

}  // namespace tsilab
