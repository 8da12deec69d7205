#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tsilab/distortion.hpp"
#include "tsilab/norm_spec.hpp"

namespace tsilab {

/// Finite sequence of norm structures M_0, M_1, ... with an extension rule
/// so double-limit probes can look past the base length. Length >= 2.
class NormSequence {
 public:
  enum class Extension {
    none,          // explicit list, not extendable
    constant,      // repeat the last spec
    iterate_ramp,  // tsirelson:a..b keeps ramping past b
  };

  NormSequence(std::string label, std::vector<NormSpec> specs,
               Extension extension = Extension::none);

  /// Grammar: comma-separated spec tokens, with the range shorthand
  /// "tsirelson:a..b" expanding inline. A single repeated spec becomes a
  /// constant-extendable sequence; a pure range becomes an iterate ramp.
  static NormSequence parse(const std::string& text);

  const std::string& label() const { return label_; }
  int length() const { return static_cast<int>(specs_.size()); }
  bool extendable() const { return extension_ != Extension::none; }

  /// Spec at index i, extending past length() per the extension rule.
  /// Throws Error(invalid_argument) for i >= length() on fixed lists.
  NormSpec at(int i) const;

  /// Name for row/column i in exports, e.g. "tsirelson:3".
  std::string name_at(int i) const;

 private:
  std::string label_;
  std::vector<NormSpec> specs_;
  Extension extension_;
};

/// Cell of a phi matrix. Cells where phi is undefined (D < 1, or an
/// unsupported spec) carry the error name instead of a value. Synthetic
/// matrices (tests, generic probes) may carry phi values with no backing
/// distortion; has_distortion marks the exact-D cells phi_matrix produces.
struct PhiCell {
  bool ok = false;
  double phi = 0.0;
  bool has_distortion = false;
  Rational distortion_value;
  std::string error;
};

/// entries[i][j] = phi(rows[i], cols[j]) at a fixed truncation dimension.
/// Row i is the finite shadow of the left phi-type of rows[i].
struct PhiMatrix {
  std::string row_label;
  std::string col_label;
  std::vector<std::string> row_names;
  std::vector<std::string> col_names;
  int dim = 0;
  std::vector<std::vector<PhiCell>> cells;
};

PhiMatrix phi_matrix(const NormSequence& rows, const NormSequence& cols,
                     int dim);

enum class Verdict { stable_at_truncation, order_property_witnessed };
const char* verdict_name(Verdict v) noexcept;

/// sup over strictly-upper cells vs inf over strictly-lower cells.
/// When every needed cell carries an exact D (always true for phi_matrix
/// output), the sup/inf are located by exact rational comparison first
/// (phi is strictly decreasing in D), so verdicts do not hinge on float
/// max/min; synthetic matrices fall back to float comparison.
struct StabilityReport {
  double sup_upper = 0.0;
  double inf_lower = 0.0;
  double gap = 0.0;
  Verdict verdict = Verdict::stable_at_truncation;
  double tolerance = 0.0;
  int dim = 0;
  int rows = 0;
  int cols = 0;
  std::optional<Rational> min_upper_distortion;  // exact mode only
  std::optional<Rational> max_lower_distortion;  // exact mode only
};

/// Throws Error(insufficient_data) when a needed cell is an error cell.
/// Ties (gap == tolerance) resolve to stable_at_truncation.
StabilityReport gap_report(const PhiMatrix& matrix, double tolerance = 1e-9);

/// Finite probe of the iterated limits lim_i lim_j a(i,j) and
/// lim_j lim_i a(i,j). Ultralimits are not computable; this approximates
/// them by ordinary (cofinite-filter) limits: a sequence "converges" when
/// its longest tail with spread <= tolerance has length >= 2, and its
/// detected limit is the last tail value. Inner indices whose tails fail
/// are dropped from the outer sequence; the probe throws
/// Error(no_convergence_detected) when an outer limit cannot be formed.
struct IteratedLimitReport {
  std::vector<std::optional<double>> row_limits;  // lim_j a(i, j) per row i
  std::vector<std::optional<double>> col_limits;  // lim_i a(i, j) per col j
  double rows_then_cols = 0.0;                    // lim_i lim_j
  double cols_then_rows = 0.0;                    // lim_j lim_i
  double disagreement = 0.0;
  bool differ = false;
  double tolerance = 0.0;
  int window = 0;
  /// Always "cofinite-filter tail limits": this is an approximation of the
  /// ultralimit condition, never a claim about true ultralimits.
  std::string method = "cofinite-filter tail limits";
};

using MatrixFn = std::function<double(int, int)>;

/// Generic-matrix probe. The callable is evaluated on [0, rows) x [0, cols)
/// rectangles; when a side is extendable the probe widens the *inner* index
/// of each iterated limit up to `window` so tails can outrun the outer
/// index (rows x window for lim_i lim_j, window x cols for lim_j lim_i).
IteratedLimitReport double_limit_probe(const MatrixFn& cell, int rows,
                                       int cols, bool rows_extendable,
                                       bool cols_extendable, double tolerance,
                                       int window);

/// Probe over a fixed phi matrix (no extension).
IteratedLimitReport double_limit_probe(const PhiMatrix& matrix,
                                       double tolerance, int window);

/// Probe over phi of two sequences, extending per their extension rules;
/// cells are computed on demand and cached.
IteratedLimitReport probe_phi(const NormSequence& rows,
                              const NormSequence& cols, int dim,
                              double tolerance, int window);

/// Searches for x with ||x||_i / ||x||_j >= target (exact recheck), for
/// i > j >= 0 and target >= 1. Tries structured candidates first (0/1
/// interval blocks, then spike-plus-block and geometric-ladder averages),
/// then exact distortion LPs per dim up to min(max_dim, dim_bound()).
/// Candidates are ordered deterministically (interval length, then start).
/// An empty result is not a disproof.
std::optional<SparseVector> witness_search(int i, int j, const Rational& target,
                                           int max_dim);

}  // namespace tsilab
