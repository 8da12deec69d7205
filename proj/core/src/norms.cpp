#include "tsilab/norms.hpp"

#include <cmath>
#include <functional>

#include "tsilab/errors.hpp"
#include "tsilab/index_sets.hpp"

namespace tsilab {

namespace {

using Table = std::vector<std::vector<Rational>>;

// Norm values for every support run [lo..hi] at level 0 (sup norm).
Table sup_table(const std::vector<Rational>& coeff_abs) {
  const int r = static_cast<int>(coeff_abs.size());
  Table out(r, std::vector<Rational>(r));
  for (int lo = 0; lo < r; ++lo) {
    Rational best(0);
    for (int hi = lo; hi < r; ++hi) {
      if (coeff_abs[hi] > best) best = coeff_abs[hi];
      out[lo][hi] = best;
    }
  }
  return out;
}

// One step of the recursion on every run:
//   out[lo][hi] = max( base(lo,hi), 1/2 * G(lo,hi) )
// where G maxes  sum_i read(p_i..b_i)  over successive interval parts inside
// [lo..hi] with 2 <= k <= s[first part start]. Parts are support runs; the
// subset oracle validates this interval reduction.
//
// prev == nullptr is the self-consistent (limit norm) mode: `read` is the
// table being written. Parts are then strict subruns (a k >= 2 family can
// never use the whole run), so filling hi ascending / lo descending only
// ever reads finished entries.
//
// Inner placement DP per hi, with W/A indexed [parts][position]:
//   W[t][p] = best sum of t parts, the first starting exactly at p
//   A[t][p] = best sum of t parts placed anywhere at positions >= p
void next_level(const std::vector<int>& s, const Table& base,
                const Table* prev, Table& out) {
  const int r = static_cast<int>(s.size());
  const Table& read = prev ? *prev : out;

  std::vector<std::vector<Rational>> w_val, a_val;
  std::vector<std::vector<char>> w_ok, a_ok;

  for (int hi = 0; hi < r; ++hi) {
    const int width = hi + 2;  // positions 0..hi plus the p = hi+1 sentinel
    w_val.assign(width, std::vector<Rational>(width));
    a_val.assign(width, std::vector<Rational>(width));
    w_ok.assign(width, std::vector<char>(width, 0));
    a_ok.assign(width, std::vector<char>(width, 0));
    for (int p = 0; p <= hi + 1; ++p) a_ok[0][p] = 1;  // zero parts, sum 0

    Rational g_suffix(0);
    bool g_ok = false;

    for (int p = hi; p >= 0; --p) {
      const int max_parts = hi - p + 1;
      // Parts >= 2 first; they never consume the whole run, so in self mode
      // the unfinished entry read[p][hi] is unreachable here.
      for (int t = 2; t <= max_parts; ++t) {
        for (int b = p; b <= hi; ++b) {
          if (!a_ok[t - 1][b + 1]) continue;
          Rational candidate = read[p][b] + a_val[t - 1][b + 1];
          if (!w_ok[t][p] || candidate > w_val[t][p]) {
            w_val[t][p] = std::move(candidate);
            w_ok[t][p] = 1;
          }
        }
      }
      const int k_cap = std::min(max_parts, s[p]);
      for (int k = 2; k <= k_cap; ++k) {
        if (!w_ok[k][p]) continue;
        if (!g_ok || w_val[k][p] > g_suffix) {
          g_suffix = w_val[k][p];
          g_ok = true;
        }
      }
      out[p][hi] = base[p][hi];
      if (g_ok) {
        Rational half = g_suffix / 2;
        if (half > out[p][hi]) out[p][hi] = std::move(half);
      }
      // Single-part values need read[p][hi], which now exists in self mode.
      for (int b = p; b <= hi; ++b) {
        const Rational& candidate = read[p][b];
        if (!w_ok[1][p] || candidate > w_val[1][p]) {
          w_val[1][p] = candidate;
          w_ok[1][p] = 1;
        }
      }
      for (int t = 1; t <= max_parts; ++t) {
        if (a_ok[t][p + 1]) {
          a_val[t][p] = a_val[t][p + 1];
          a_ok[t][p] = 1;
        }
        if (w_ok[t][p] && (!a_ok[t][p] || w_val[t][p] > a_val[t][p])) {
          a_val[t][p] = w_val[t][p];
          a_ok[t][p] = 1;
        }
      }
    }
  }
}

struct Decomposed {
  std::vector<int> indices;
  std::vector<Rational> coeff_abs;
};

Decomposed decompose(const SparseVector& x) {
  Decomposed out;
  out.indices.reserve(x.terms().size());
  out.coeff_abs.reserve(x.terms().size());
  for (const auto& [index, value] : x.terms()) {
    out.indices.push_back(index);
    out.coeff_abs.push_back(abs(value));
  }
  return out;
}

}  // namespace

Rational tsirelson_iterate(const SparseVector& x, int level) {
  if (level < 0) raise(Errc::invalid_argument, "iterate level must be >= 0");
  if (x.zero()) return Rational(0);
  const Decomposed d = decompose(x);
  const int r = static_cast<int>(d.indices.size());
  Table table = sup_table(d.coeff_abs);
  // The recursion stabilizes once the level reaches the support size (each
  // k >= 2 split strictly shrinks runs), so deeper levels are free.
  const int effective = std::min(level, r);
  for (int m = 0; m < effective; ++m) {
    Table next(r, std::vector<Rational>(r));
    next_level(d.indices, table, &table, next);
    table = std::move(next);
  }
  return table[0][r - 1];
}

Rational tsirelson_limit(const SparseVector& x) {
  if (x.zero()) return Rational(0);
  const Decomposed d = decompose(x);
  const int r = static_cast<int>(d.indices.size());
  const Table sup0 = sup_table(d.coeff_abs);
  Table out(r, std::vector<Rational>(r));
  next_level(d.indices, sup0, nullptr, out);
  return out[0][r - 1];
}

Rational brute_force_iterate(const SparseVector& x, int level,
                             int oracle_bound) {
  if (level < 0) raise(Errc::invalid_argument, "iterate level must be >= 0");
  if (x.zero()) return Rational(0);
  if (x.support_size() > oracle_bound)
    raise(Errc::oracle_bound_exceeded,
          "brute force is limited to supports of size <= " +
              std::to_string(oracle_bound));

  std::function<Rational(const SparseVector&, int)> bf =
      [&](const SparseVector& v, int n) -> Rational {
    if (v.zero()) return Rational(0);
    if (n == 0) return v.sup_norm();
    Rational best = bf(v, n - 1);
    for_each_admissible_subset_family(
        v.support(), 1,
        [&](const AdmissibleFamily& family) {
          Rational sum(0);
          for (const auto& part : family.parts())
            sum += bf(v.restricted(part), n - 1);
          sum /= 2;
          if (sum > best) best = std::move(sum);
        },
        oracle_bound);
    return best;
  };
  return bf(x, level);
}

Rational brute_force_limit(const SparseVector& x, int oracle_bound) {
  return brute_force_iterate(x, x.support_size(), oracle_bound);
}

Scalar base_norm(const SparseVector& x, const NormSpec& spec) {
  if (std::holds_alternative<SupNorm>(spec)) return Scalar(x.sup_norm());
  if (std::holds_alternative<L1Norm>(spec)) return Scalar(x.l1_norm());
  if (const auto* lp = std::get_if<LpNorm>(&spec)) {
    if (lp->p <= 1) raise(Errc::invalid_argument, "lp exponent must be > 1");
    const double p = to_double(lp->p);
    double sum = 0.0;
    for (const auto& [index, value] : x.terms())
      sum += std::pow(std::fabs(to_double(value)), p);
    return Scalar(std::pow(sum, 1.0 / p));
  }
  raise(Errc::invalid_argument, "base_norm handles sup, l1, and lp only");
}

Rational eval_exact(const SparseVector& x, const NormSpec& spec) {
  if (std::holds_alternative<SupNorm>(spec)) return x.sup_norm();
  if (std::holds_alternative<L1Norm>(spec)) return x.l1_norm();
  if (const auto* it = std::get_if<TsirelsonIterateNorm>(&spec))
    return tsirelson_iterate(x, it->level);
  if (std::holds_alternative<TsirelsonLimitNorm>(spec))
    return tsirelson_limit(x);
  if (const auto* poly = std::get_if<PolyhedralNorm>(&spec))
    return eval_polyhedral(*poly->set, x);
  raise(Errc::unsupported_spec, "lp norms have no exact evaluation");
}

Scalar eval_norm(const SparseVector& x, const NormSpec& spec) {
  if (std::holds_alternative<LpNorm>(spec)) return base_norm(x, spec);
  return Scalar(eval_exact(x, spec));
}

namespace {

bool scalars_close(const Scalar& a, const Scalar& b) {
  if (a.exact() && b.exact()) return a.rational() == b.rational();
  const double x = a.approx();
  const double y = b.approx();
  return std::fabs(x - y) <= 1e-12 * std::max(1.0, std::fabs(y));
}

}  // namespace

ConvergenceReport pointwise_limit(const SparseVector& x,
                                  const std::vector<NormSpec>& specs) {
  if (specs.empty())
    raise(Errc::invalid_argument, "pointwise_limit needs at least one spec");
  ConvergenceReport report;
  report.values.reserve(specs.size());
  for (const auto& spec : specs) report.values.push_back(eval_norm(x, spec));

  const int n = static_cast<int>(report.values.size());
  int from = n - 1;
  while (from > 0 && scalars_close(report.values[from - 1], report.values.back()))
    --from;
  report.stabilized_from = from;
  report.eventually_constant = (n == 1) || from <= n - 2;
  if (report.eventually_constant) report.stabilized_value = report.values.back();
  return report;
}

}  // namespace tsilab
