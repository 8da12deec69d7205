#include "tsilab/shapes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "tsilab/config.hpp"
#include "tsilab/errors.hpp"

namespace tsilab {

namespace {

void check_dim(int dim) {
  if (dim < 1) raise(Errc::invalid_argument, "dimension must be >= 1");
  if (!dim_in_bounds(dim))
    raise(Errc::dimension_bound_exceeded,
          "dim " + std::to_string(dim) + " exceeds the bound " +
              std::to_string(dim_bound()) + " (TSLAB_DIM_BOUND overrides)");
}

bool dominated(const SparseVector& a, const SparseVector& b) {
  for (const auto& [index, value] : a.terms()) {
    if (value > b.coeff(index)) return false;
  }
  return true;
}

// Keep only maximal shapes under coordinatewise <=. Sound for the final
// evaluation set: every dropped shape has a surviving pointwise dominator.
std::vector<SparseVector> prune_dominated(std::vector<SparseVector> shapes) {
  std::sort(shapes.begin(), shapes.end());
  shapes.erase(std::unique(shapes.begin(), shapes.end()), shapes.end());
  std::vector<SparseVector> kept;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < shapes.size(); ++j) {
      if (i == j || shapes[i] == shapes[j]) continue;
      if (dominated(shapes[i], shapes[j])) {
        drop = true;
        break;
      }
    }
    if (!drop) kept.push_back(shapes[i]);
  }
  return kept;
}

// Mid-generation pruning may only compare shapes with identical support:
// swapping in a wider dominator could break the successiveness of a later
// combination, while an equal-support dominator slots into every family the
// pruned shape could join. The subset-family oracle cross-checks all this.
std::vector<SparseVector> prune_equal_support(std::vector<SparseVector> shapes) {
  std::sort(shapes.begin(), shapes.end());
  shapes.erase(std::unique(shapes.begin(), shapes.end()), shapes.end());
  std::map<std::vector<int>, std::vector<SparseVector>> by_support;
  for (auto& s : shapes) {
    std::vector<int> key;
    key.reserve(s.terms().size());
    for (const auto& [index, value] : s.terms()) key.push_back(index);
    by_support[std::move(key)].push_back(std::move(s));
  }
  std::vector<SparseVector> kept;
  for (auto& [support, group] : by_support) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      bool drop = false;
      for (std::size_t j = 0; j < group.size(); ++j) {
        if (i == j || group[i] == group[j]) continue;
        if (dominated(group[i], group[j])) {
          drop = true;
          break;
        }
      }
      if (!drop) kept.push_back(group[i]);
    }
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

// All (F_1 + ... + F_k)/2 over successive tuples from `from`, with
// 2 <= k <= min supp F_1.
std::vector<SparseVector> combinations(const std::vector<SparseVector>& from,
                                       int dim) {
  // Bucket shapes by min support index for fast successor lookup.
  std::vector<std::vector<const SparseVector*>> by_min(dim + 2);
  for (const auto& s : from) by_min[s.min_index()].push_back(&s);

  std::vector<SparseVector> out;
  SparseVector acc;
  std::function<void(int, int, int)> extend =
      [&](int k_budget, int used, int next_min) {
        if (used >= 2) out.push_back(acc.scaled(Rational(1, 2)));
        if (used == k_budget) return;
        for (int start = next_min; start <= dim; ++start) {
          for (const SparseVector* f : by_min[start]) {
            if (f->max_index() > dim) continue;
            acc = acc.plus(*f);
            extend(k_budget, used + 1, f->max_index() + 1);
            acc = acc.minus(*f);
          }
        }
      };
  for (const auto& first : from) {
    const int k_budget = std::min(first.min_index(), dim);
    if (k_budget < 2) continue;
    acc = first;
    extend(k_budget, 1, first.max_index() + 1);
  }
  return out;
}

std::vector<SparseVector> unit_shapes(int dim) {
  std::vector<SparseVector> out;
  for (int i = 1; i <= dim; ++i) out.push_back(SparseVector::unit(i));
  return out;
}

std::vector<SparseVector> tsirelson_generation(int level, int dim) {
  std::vector<SparseVector> current = unit_shapes(dim);
  // Levels beyond the dimension cannot change the truncated norm.
  const int effective = std::min(level, dim);
  for (int m = 0; m < effective; ++m) {
    std::vector<SparseVector> next = current;
    std::vector<SparseVector> combos = combinations(current, dim);
    next.insert(next.end(), combos.begin(), combos.end());
    next = prune_equal_support(std::move(next));
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

}  // namespace

ShapeSet build_shape_set(const NormSpec& spec, int dim) {
  check_dim(dim);
  ShapeSet out;
  out.dim = dim;
  if (std::holds_alternative<SupNorm>(spec)) {
    out.shapes = unit_shapes(dim);
  } else if (std::holds_alternative<L1Norm>(spec)) {
    out.shapes = unit_shapes(dim);
    out.shapes.push_back(SparseVector::ones(1, dim));
    out.shapes = prune_dominated(std::move(out.shapes));
  } else if (const auto* it = std::get_if<TsirelsonIterateNorm>(&spec)) {
    if (it->level < 0) raise(Errc::invalid_argument, "iterate level must be >= 0");
    out.shapes = prune_dominated(tsirelson_generation(it->level, dim));
  } else if (std::holds_alternative<TsirelsonLimitNorm>(spec)) {
    // The truncated limit norm equals the dim-th iterate (stabilization).
    out.shapes = prune_dominated(tsirelson_generation(dim, dim));
  } else {
    raise(Errc::unsupported_spec,
          "no shape set for '" + to_string(spec) + "'");
  }
  std::sort(out.shapes.begin(), out.shapes.end());
  return out;
}

Rational eval_shapes(const ShapeSet& shapes, const SparseVector& x) {
  const SparseVector ax = x.abs();
  Rational best(0);
  for (const auto& shape : shapes.shapes) {
    Rational value = shape.dot(ax);
    if (value > best) best = std::move(value);
  }
  return best;
}

const ShapeSet& shared_shape_set(const NormSpec& spec, int dim) {
  static std::mutex mutex;
  static std::map<std::string, ShapeSet> cache;
  const std::string key = to_string(spec) + "@" + std::to_string(dim);
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_shape_set(spec, dim)).first;
  return it->second;
}

NormingSet norming_set(const NormSpec& spec, int dim) {
  if (const auto* poly = std::get_if<PolyhedralNorm>(&spec)) {
    if (poly->set->dim() != dim)
      raise(Errc::invalid_argument,
            "polyhedral spec has dim " + std::to_string(poly->set->dim()) +
                ", requested " + std::to_string(dim));
    return *poly->set;
  }
  if (std::holds_alternative<LpNorm>(spec))
    raise(Errc::unsupported_spec, "lp norms are not polyhedral");
  const ShapeSet shapes = build_shape_set(spec, dim);

  // Expand each nonnegative shape to its sign patterns (one per {f,-f}
  // pair: the lowest support coordinate stays positive). The built-in
  // norms are 1-unconditional, so their norming families are exactly these
  // sign-complete expansions.
  std::vector<Functional> functionals;
  for (const auto& shape : shapes.shapes) {
    const auto& terms = shape.terms();
    const int s = static_cast<int>(terms.size());
    for (long long mask = 0; mask < (1LL << std::max(0, s - 1)); ++mask) {
      std::vector<SparseVector::Term> signed_terms;
      signed_terms.reserve(terms.size());
      for (int t = 0; t < s; ++t) {
        const bool flip = t > 0 && ((mask >> (t - 1)) & 1);
        signed_terms.emplace_back(terms[t].first, flip ? Rational(-terms[t].second)
                                                       : terms[t].second);
      }
      functionals.push_back(SparseVector::from_terms(std::move(signed_terms)));
    }
  }
  return NormingSet(dim, std::move(functionals));
}

}  // namespace tsilab
