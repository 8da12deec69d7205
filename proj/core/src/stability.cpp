#include "tsilab/stability.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <sstream>

#include "tsilab/config.hpp"
#include "tsilab/errors.hpp"
#include "tsilab/norms.hpp"

namespace tsilab {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, sep)) out.push_back(token);
  return out;
}

}  // namespace

NormSequence::NormSequence(std::string label, std::vector<NormSpec> specs,
                           Extension extension)
    : label_(std::move(label)), specs_(std::move(specs)), extension_(extension) {
  if (specs_.size() < 2)
    raise(Errc::invalid_argument,
          "norm sequences need length >= 2 (got " +
              std::to_string(specs_.size()) + ")");
}

NormSequence NormSequence::parse(const std::string& text) {
  std::vector<NormSpec> specs;
  bool pure_ramp = false;
  for (const auto& token : split(text, ',')) {
    const auto dots = token.find("..");
    if (token.rfind("tsirelson:", 0) == 0 && dots != std::string::npos) {
      const std::string from = token.substr(10, dots - 10);
      const std::string to = token.substr(dots + 2);
      const Rational a = parse_rational(from);
      const Rational b = parse_rational(to);
      if (denominator(a) != 1 || denominator(b) != 1 || a < 0 || b < a)
        raise(Errc::invalid_argument, "bad iterate range '" + token + "'");
      for (Integer i = numerator(a); i <= numerator(b); ++i)
        specs.push_back(TsirelsonIterateNorm{static_cast<int>(i)});
      pure_ramp = specs.size() > 0 && token == text;
    } else {
      specs.push_back(parse_norm_spec(token));
    }
  }
  Extension ext = Extension::none;
  if (pure_ramp) {
    ext = Extension::iterate_ramp;
  } else if (specs.size() >= 2) {
    const std::string first = tsilab::to_string(specs.front());
    bool constant = true;
    for (const auto& s : specs) constant &= (tsilab::to_string(s) == first);
    if (constant) ext = Extension::constant;
  }
  return NormSequence(text, std::move(specs), ext);
}

NormSpec NormSequence::at(int i) const {
  if (i < 0) raise(Errc::invalid_argument, "sequence index must be >= 0");
  if (i < length()) return specs_[i];
  switch (extension_) {
    case Extension::constant:
      return specs_.back();
    case Extension::iterate_ramp: {
      const auto& last = std::get<TsirelsonIterateNorm>(specs_.back());
      return TsirelsonIterateNorm{last.level + (i - length() + 1)};
    }
    case Extension::none:
      break;
  }
  raise(Errc::invalid_argument,
        "sequence '" + label_ + "' is not extendable past its length");
}

std::string NormSequence::name_at(int i) const { return tsilab::to_string(at(i)); }

PhiMatrix phi_matrix(const NormSequence& rows, const NormSequence& cols,
                     int dim) {
  PhiMatrix out;
  out.row_label = rows.label();
  out.col_label = cols.label();
  out.dim = dim;
  for (int i = 0; i < rows.length(); ++i) out.row_names.push_back(rows.name_at(i));
  for (int j = 0; j < cols.length(); ++j) out.col_names.push_back(cols.name_at(j));
  out.cells.resize(rows.length());

  // Cells are independent; rows are filled concurrently and assembled into
  // the pre-sized grid, so the result never depends on scheduling. The
  // functional-set cache behind phi() is mutex-guarded.
  const auto fill_row = [&](int i) {
    out.cells[i].resize(cols.length());
    for (int j = 0; j < cols.length(); ++j) {
      PhiCell& cell = out.cells[i][j];
      try {
        PhiValue value = phi(rows.at(i), cols.at(j), dim);
        cell.ok = true;
        cell.phi = value.value;
        cell.has_distortion = true;
        cell.distortion_value = std::move(value.distortion_value);
      } catch (const Error& e) {
        cell.ok = false;
        cell.error = e.code_name();
      }
    }
  };
  std::vector<std::future<void>> pending;
  for (int i = 1; i < rows.length(); ++i)
    pending.push_back(std::async(std::launch::async, fill_row, i));
  fill_row(0);
  for (auto& f : pending) f.get();
  return out;
}

const char* verdict_name(Verdict v) noexcept {
  return v == Verdict::stable_at_truncation ? "stable-at-truncation"
                                            : "order-property-witnessed";
}

StabilityReport gap_report(const PhiMatrix& matrix, double tolerance) {
  const int rows = static_cast<int>(matrix.cells.size());
  const int cols = rows > 0 ? static_cast<int>(matrix.cells[0].size()) : 0;
  if (rows < 2 || cols < 2)
    raise(Errc::invalid_argument, "gap report needs length >= 2 sequences");

  // phi is strictly decreasing in D, so the sup of phi sits at the smallest
  // upper-triangle D and the inf at the largest lower-triangle D; locating
  // them by exact rational comparison keeps the verdict float-proof. Cells
  // without a backing D (synthetic matrices) force the float fallback.
  std::optional<Rational> min_upper, max_lower;
  std::optional<double> sup_upper, inf_lower;
  bool exact = true;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (i == j) continue;
      const PhiCell& cell = matrix.cells[i][j];
      if (!cell.ok)
        raise(Errc::insufficient_data,
              "cell (" + std::to_string(i) + "," + std::to_string(j) +
                  ") has no phi value: " + cell.error);
      exact &= cell.has_distortion;
      if (i < j) {
        if (!sup_upper || cell.phi > *sup_upper) sup_upper = cell.phi;
        if (cell.has_distortion &&
            (!min_upper || cell.distortion_value < *min_upper))
          min_upper = cell.distortion_value;
      } else {
        if (!inf_lower || cell.phi < *inf_lower) inf_lower = cell.phi;
        if (cell.has_distortion &&
            (!max_lower || cell.distortion_value > *max_lower))
          max_lower = cell.distortion_value;
      }
    }
  }

  StabilityReport report;
  report.tolerance = tolerance;
  report.dim = matrix.dim;
  report.rows = rows;
  report.cols = cols;
  if (exact) {
    report.min_upper_distortion = min_upper;
    report.max_lower_distortion = max_lower;
    report.sup_upper = phi_from_distortion_value(*min_upper);
    report.inf_lower = phi_from_distortion_value(*max_lower);
  } else {
    report.sup_upper = *sup_upper;
    report.inf_lower = *inf_lower;
  }
  report.gap = std::fabs(report.sup_upper - report.inf_lower);
  report.verdict = report.gap > tolerance ? Verdict::order_property_witnessed
                                          : Verdict::stable_at_truncation;
  return report;
}

namespace {

// Detected cofinite-filter limit: the longest tail whose spread stays
// within the tolerance, needing at least two members; its value is the
// final element. nullopt when no such tail exists.
std::optional<double> tail_limit(const std::vector<double>& seq,
                                 double tolerance) {
  if (seq.size() < 2) return std::nullopt;
  double lo = seq.back();
  double hi = seq.back();
  int len = 1;
  for (int i = static_cast<int>(seq.size()) - 2; i >= 0; --i) {
    const double next_lo = std::min(lo, seq[i]);
    const double next_hi = std::max(hi, seq[i]);
    if (next_hi - next_lo > tolerance) break;
    lo = next_lo;
    hi = next_hi;
    ++len;
  }
  if (len < 2) return std::nullopt;
  return seq.back();
}

double outer_limit(const std::vector<std::optional<double>>& inner,
                   double tolerance, const char* which) {
  std::vector<double> present;
  for (const auto& v : inner) {
    if (v) present.push_back(*v);
  }
  if (present.size() < 2)
    raise(Errc::no_convergence_detected,
          std::string(which) + ": fewer than two inner limits converged");
  const auto value = tail_limit(present, tolerance);
  if (!value)
    raise(Errc::no_convergence_detected,
          std::string(which) + ": outer sequence has no Cauchy tail");
  return *value;
}

}  // namespace

IteratedLimitReport double_limit_probe(const MatrixFn& cell, int rows, int cols,
                                       bool rows_extendable,
                                       bool cols_extendable, double tolerance,
                                       int window) {
  if (rows < 2 || cols < 2)
    raise(Errc::invalid_argument, "probe needs at least a 2x2 matrix");
  if (window < 2) raise(Errc::invalid_argument, "probe window must be >= 2");
  if (tolerance < 0) raise(Errc::invalid_argument, "tolerance must be >= 0");

  std::map<std::pair<int, int>, double> cache;
  const auto at = [&](int i, int j) {
    const auto key = std::make_pair(i, j);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, cell(i, j)).first;
    return it->second;
  };

  IteratedLimitReport report;
  report.tolerance = tolerance;
  report.window = window;

  // lim_i lim_j: the inner (column) index runs ahead of the outer one.
  const int wide_cols = cols_extendable ? std::max(cols, window) : cols;
  for (int i = 0; i < rows; ++i) {
    std::vector<double> row;
    row.reserve(wide_cols);
    for (int j = 0; j < wide_cols; ++j) row.push_back(at(i, j));
    report.row_limits.push_back(tail_limit(row, tolerance));
  }
  report.rows_then_cols = outer_limit(report.row_limits, tolerance, "rows");

  // lim_j lim_i: the inner (row) index runs ahead.
  const int wide_rows = rows_extendable ? std::max(rows, window) : rows;
  for (int j = 0; j < cols; ++j) {
    std::vector<double> col;
    col.reserve(wide_rows);
    for (int i = 0; i < wide_rows; ++i) col.push_back(at(i, j));
    report.col_limits.push_back(tail_limit(col, tolerance));
  }
  report.cols_then_rows = outer_limit(report.col_limits, tolerance, "cols");

  report.disagreement = std::fabs(report.rows_then_cols - report.cols_then_rows);
  report.differ = report.disagreement > tolerance;
  return report;
}

IteratedLimitReport double_limit_probe(const PhiMatrix& matrix, double tolerance,
                                       int window) {
  const int rows = static_cast<int>(matrix.cells.size());
  const int cols = rows > 0 ? static_cast<int>(matrix.cells[0].size()) : 0;
  const auto cell = [&matrix](int i, int j) {
    const PhiCell& c = matrix.cells[i][j];
    if (!c.ok)
      raise(Errc::insufficient_data, "matrix cell has no phi value: " + c.error);
    return c.phi;
  };
  return double_limit_probe(cell, rows, cols, false, false, tolerance, window);
}

IteratedLimitReport probe_phi(const NormSequence& rows, const NormSequence& cols,
                              int dim, double tolerance, int window) {
  const auto cell = [&rows, &cols, dim](int i, int j) {
    return phi(rows.at(i), cols.at(j), dim).value;
  };
  return double_limit_probe(cell, rows.length(), cols.length(),
                            rows.extendable(), cols.extendable(), tolerance,
                            window);
}

namespace {

bool ratio_reaches(const SparseVector& x, int i, int j, const Rational& target) {
  if (x.zero()) return false;
  const Rational top = tsirelson_iterate(x, i);
  const Rational bottom = tsirelson_iterate(x, j);
  return top >= target * bottom;
}

}  // namespace

std::optional<SparseVector> witness_search(int i, int j, const Rational& target,
                                           int max_dim) {
  if (j < 0 || i <= j) raise(Errc::invalid_argument, "witness needs i > j >= 0");
  if (target < 1) raise(Errc::invalid_argument, "witness target must be >= 1");
  if (max_dim < 1) raise(Errc::invalid_argument, "max_dim must be >= 1");

  // 0/1 interval blocks, shortest first.
  for (int len = 1; len <= max_dim; ++len) {
    for (int start = 1; start + len - 1 <= max_dim; ++start) {
      SparseVector candidate = SparseVector::ones(start, start + len - 1);
      if (ratio_reaches(candidate, i, j, target)) return candidate;
    }
  }

  // Spike-plus-block averages: a heavy short head followed by a flat tail,
  // the profile that lets a deeper split win while the head's position cap
  // throttles the shallower one.
  const Rational weights[] = {Rational(3, 2), Rational(2), Rational(3)};
  for (int head = 1; head <= 2; ++head) {
    for (int start = 2; start <= std::min(8, max_dim); ++start) {
      for (int end = start + head; end <= max_dim; ++end) {
        for (const Rational& w : weights) {
          SparseVector candidate =
              SparseVector::ones(start, start + head - 1).scaled(w).plus(
                  SparseVector::ones(start + head, end));
          if (ratio_reaches(candidate, i, j, target)) return candidate;
        }
      }
    }
  }

  // Geometric ladders (repeated averaging): doubling blocks with halving
  // coefficients, each block carrying equal l1 mass.
  for (int start = 2; start <= std::min(8, max_dim); ++start) {
    for (int base_len = 1; base_len <= 2; ++base_len) {
      for (int depth = 2; depth <= 4; ++depth) {
        SparseVector candidate;
        Rational coeff(1);
        int lo = start;
        int len = base_len;
        bool fits = true;
        for (int t = 0; t < depth; ++t) {
          const int hi = lo + len - 1;
          if (hi > max_dim) {
            fits = false;
            break;
          }
          candidate = candidate.plus(SparseVector::ones(lo, hi).scaled(coeff));
          lo = hi + 1;
          len *= 2;
          coeff /= 2;
        }
        if (fits && ratio_reaches(candidate, i, j, target)) return candidate;
      }
    }
  }

  // Exact distortion LPs per dim, within the polyhedral bound.
  const int lp_cap = std::min(max_dim, dim_bound());
  for (int dim = 2; dim <= lp_cap; ++dim) {
    DistortionResult result = distortion(TsirelsonIterateNorm{i},
                                         TsirelsonIterateNorm{j}, dim);
    if (result.value >= target) {
      if (!ratio_reaches(result.witness, i, j, target))
        raise(Errc::domain_error, "internal: LP witness recheck failed");
      return result.witness;
    }
  }
  return std::nullopt;
}

}  // namespace tsilab
