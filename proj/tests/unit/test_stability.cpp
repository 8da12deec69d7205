#include <doctest.h>

#include <cmath>
#include <memory>
#include <vector>

#include "tsilab/distortion.hpp"
#include "tsilab/errors.hpp"
#include "tsilab/norms.hpp"
#include "tsilab/stability.hpp"

using namespace tsilab;

namespace {

// Synthetic phi-only matrix (no backing distortion values).
PhiMatrix synthetic(const std::vector<std::vector<double>>& values) {
  PhiMatrix m;
  m.row_label = "rows";
  m.col_label = "cols";
  m.dim = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    m.row_names.push_back("r" + std::to_string(i));
    std::vector<PhiCell> row;
    for (const double v : values[i]) {
      PhiCell cell;
      cell.ok = true;
      cell.phi = v;
      row.push_back(cell);
    }
    m.cells.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < values[0].size(); ++j)
    m.col_names.push_back("c" + std::to_string(j));
  return m;
}

PhiMatrix indicator_matrix(int n) {
  std::vector<std::vector<double>> values(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) values[i][j] = i < j ? 1.0 : 0.0;
  return synthetic(values);
}

NormSpec half_sup_spec(int dim) {
  std::vector<Functional> fs;
  for (int i = 1; i <= dim; ++i)
    fs.push_back(SparseVector::unit(i).scaled(Rational(1, 2)));
  return PolyhedralNorm{std::make_shared<const NormingSet>(dim, std::move(fs))};
}

}  // namespace

TEST_CASE("norm sequence parsing, lengths, and extension rules") {
  const auto ramp = NormSequence::parse("tsirelson:0..4");
  CHECK(ramp.length() == 5);
  CHECK(ramp.extendable());
  CHECK(ramp.name_at(0) == "tsirelson:0");
  CHECK(ramp.name_at(7) == "tsirelson:7");

  const auto constant = NormSequence::parse("sup,sup,sup");
  CHECK(constant.length() == 3);
  CHECK(constant.extendable());
  CHECK(constant.name_at(9) == "sup");

  const auto mixed = NormSequence::parse("sup,l1");
  CHECK(!mixed.extendable());
  CHECK_THROWS_AS(mixed.at(2), Error);

  CHECK_THROWS_AS(NormSequence::parse("sup"), Error);
  CHECK_THROWS_AS(NormSequence::parse("tsirelson:4..1"), Error);
  const auto list = NormSequence::parse("tsirelson:0..1,tsirelson:T");
  CHECK(list.length() == 3);
  CHECK(list.name_at(2) == "tsirelson:T");
}

TEST_CASE("constant-spec matrices are all ones") {
  const auto m = phi_matrix(NormSequence::parse("sup,sup,sup"),
                            NormSequence::parse("sup,sup,sup"), 3);
  for (const auto& row : m.cells) {
    for (const auto& cell : row) {
      REQUIRE(cell.ok);
      CHECK(cell.phi == 1.0);
      CHECK(cell.distortion_value == Rational(1));
    }
  }
}

TEST_CASE("iterate matrix: ones above the diagonal, phi(3/2) at (1,0)") {
  const auto seq = NormSequence::parse("tsirelson:0..4");
  const auto m = phi_matrix(seq, seq, 6);
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      CHECK(m.cells[i][j].phi == 1.0);
      CHECK(m.cells[i][j].distortion_value == Rational(1));
    }
  }
  CHECK(m.cells[1][0].distortion_value == Rational(3, 2));
  const double expected = phi_from_distortion_value(Rational(3, 2));
  CHECK(m.cells[1][0].phi == expected);
  CHECK(expected < 0.7116);
  CHECK(expected > 0.7114);
}

TEST_CASE("cells where D < 1 are reported per cell, then gap refuses") {
  std::vector<NormSpec> rows_specs = {half_sup_spec(3), half_sup_spec(3)};
  const NormSequence rows("half-sup", rows_specs);
  const auto cols = NormSequence::parse("sup,sup");
  const auto m = phi_matrix(rows, cols, 3);
  for (const auto& row : m.cells) {
    for (const auto& cell : row) {
      CHECK(!cell.ok);
      CHECK(cell.error == "domain-error");
    }
  }
  CHECK_THROWS_AS(gap_report(m, 0.01), Error);
  try {
    gap_report(m, 0.01);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::insufficient_data);
  }
}

TEST_CASE("gap report on the canonical matrices") {
  const auto ind = gap_report(indicator_matrix(5), 1e-9);
  CHECK(ind.sup_upper == 1.0);
  CHECK(ind.inf_lower == 0.0);
  CHECK(ind.gap == 1.0);
  CHECK(ind.verdict == Verdict::order_property_witnessed);

  const auto constant = gap_report(
      synthetic(std::vector<std::vector<double>>(4, std::vector<double>(4, 0.25))),
      1e-9);
  CHECK(constant.gap == 0.0);
  CHECK(constant.verdict == Verdict::stable_at_truncation);
}

TEST_CASE("the tie gap == tolerance resolves to stable") {
  const auto m = synthetic({{0.0, 0.75}, {0.5, 0.0}});
  const auto report = gap_report(m, 0.25);
  CHECK(report.gap == 0.25);
  CHECK(report.verdict == Verdict::stable_at_truncation);
  CHECK(gap_report(m, 0.2499).verdict == Verdict::order_property_witnessed);
}

TEST_CASE("iterate gap report at length 5, dim 6") {
  const auto seq = NormSequence::parse("tsirelson:0..4");
  const auto report = gap_report(phi_matrix(seq, seq, 6), 0.01);
  CHECK(report.sup_upper == 1.0);
  CHECK(report.inf_lower <= 0.72);
  CHECK(report.gap > 0.25);
  CHECK(report.verdict == Verdict::order_property_witnessed);
  CHECK(*report.min_upper_distortion == Rational(1));
  CHECK(*report.max_lower_distortion == Rational(3, 2));
}

TEST_CASE("monotone reindexing: order-indicator values are invariant, and "
          "subsampling can only shrink the lower side") {
  const auto base = indicator_matrix(6);
  const auto sub = [&](const std::vector<int>& pick) {
    std::vector<std::vector<double>> values;
    for (const int i : pick) {
      std::vector<double> row;
      for (const int j : pick) row.push_back(base.cells[i][j].phi);
      values.push_back(std::move(row));
    }
    return synthetic(values);
  };
  const auto full = gap_report(base, 1e-9);
  const auto picked = gap_report(sub({0, 2, 5}), 1e-9);
  CHECK(picked.sup_upper == full.sup_upper);
  CHECK(picked.inf_lower == full.inf_lower);

  const auto seq = NormSequence::parse("tsirelson:0..4");
  const auto ts = phi_matrix(seq, seq, 5);
  const auto ts_full = gap_report(ts, 0.01);
  PhiMatrix ts_sub;
  ts_sub.dim = ts.dim;
  for (const int i : {0, 1, 3}) {
    ts_sub.row_names.push_back(ts.row_names[i]);
    ts_sub.col_names.push_back(ts.col_names[i]);
    std::vector<PhiCell> row;
    for (const int j : {0, 1, 3}) row.push_back(ts.cells[i][j]);
    ts_sub.cells.push_back(std::move(row));
  }
  const auto ts_picked = gap_report(ts_sub, 0.01);
  CHECK(ts_picked.sup_upper == 1.0);
  CHECK(ts_picked.inf_lower >= ts_full.inf_lower);
}

TEST_CASE("double limit probe on the canonical matrices") {
  const auto indicator = [](int i, int j) { return i < j ? 1.0 : 0.0; };
  const auto rep = double_limit_probe(indicator, 5, 5, true, true, 1e-9, 12);
  CHECK(rep.rows_then_cols == 1.0);
  CHECK(rep.cols_then_rows == 0.0);
  CHECK(rep.disagreement == 1.0);
  CHECK(rep.differ);
  for (const auto& r : rep.row_limits) CHECK(*r == 1.0);
  for (const auto& c : rep.col_limits) CHECK(*c == 0.0);

  const auto harmonic = [](int i, int j) { return 1.0 / (i + j + 2); };
  const auto rep2 = double_limit_probe(harmonic, 5, 5, true, true, 0.05, 40);
  CHECK(!rep2.differ);
  CHECK(rep2.rows_then_cols < 0.05);
  CHECK(rep2.cols_then_rows < 0.05);
  CHECK(rep2.method == "cofinite-filter tail limits");
}

TEST_CASE("probe reports failure when no tail settles") {
  const auto oscillating = [](int, int j) { return j % 2 ? 1.0 : 0.0; };
  CHECK_THROWS_AS(double_limit_probe(oscillating, 4, 4, true, true, 0.1, 16),
                  Error);
  try {
    double_limit_probe(oscillating, 4, 4, true, true, 0.1, 16);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_convergence_detected);
  }
}

TEST_CASE("probe over the iterate phi matrix: rows stabilize to one, and the "
          "iterated limits agree at this truncation") {
  const auto seq = NormSequence::parse("tsirelson:0..4");
  const auto rep = probe_phi(seq, seq, 6, 0.01, 8);
  for (const auto& r : rep.row_limits) {
    REQUIRE(r.has_value());
    CHECK(*r == 1.0);
  }
  // lim_i phi(i, 0) settles at phi(D(T, ||.||_0, 6)) = phi(3/2) < 1,
  // but later columns settle at 1, so both iterated limits are 1: the
  // sup/inf gap (0.288...) is invisible to the iterated limits here.
  REQUIRE(rep.col_limits[0].has_value());
  CHECK(*rep.col_limits[0] == phi_from_distortion_value(Rational(3, 2)));
  CHECK(rep.rows_then_cols == 1.0);
  CHECK(rep.cols_then_rows == 1.0);
  CHECK(!rep.differ);
}

TEST_CASE("probe and gap agree on matrices whose tails carry the gap") {
  // indicator: probe disagreement equals the sup/inf gap exactly
  const auto ind_gap = gap_report(indicator_matrix(5), 1e-9);
  const auto indicator = [](int i, int j) { return i < j ? 1.0 : 0.0; };
  const auto ind_probe = double_limit_probe(indicator, 5, 5, true, true, 1e-9, 12);
  CHECK(ind_probe.disagreement == ind_gap.gap);
  CHECK(ind_probe.differ == (ind_gap.verdict == Verdict::order_property_witnessed));

  // constant: both see nothing
  const auto c = synthetic(std::vector<std::vector<double>>(4, std::vector<double>(4, 0.5)));
  const auto c_gap = gap_report(c, 1e-9);
  const auto c_probe = double_limit_probe([](int, int) { return 0.5; }, 4, 4,
                                          true, true, 1e-9, 12);
  CHECK(c_probe.disagreement == c_gap.gap);
  CHECK(!c_probe.differ);

  // a single early spike is visible to sup/inf but not to the limits:
  // the two reports answer different questions.
  auto spiked = std::vector<std::vector<double>>(6, std::vector<double>(6, 0.2));
  spiked[0][5] = 0.9;
  CHECK(gap_report(synthetic(spiked), 1e-9).verdict ==
        Verdict::order_property_witnessed);
  const auto spike_probe = double_limit_probe(
      [](int i, int j) { return (i == 0 && j == 5) ? 0.9 : 0.2; }, 6, 6, true,
      true, 1e-9, 16);
  CHECK(!spike_probe.differ);
}

TEST_CASE("fixed matrices cap the probe window at their size") {
  const auto m = phi_matrix(NormSequence::parse("tsirelson:0..3"),
                            NormSequence::parse("tsirelson:0..3"), 5);
  const auto rep = double_limit_probe(m, 0.01, 32);
  CHECK(rep.rows_then_cols == 1.0);
}

TEST_CASE("witness search: targets, order, and honest failure") {
  const auto trivial = witness_search(1, 0, Rational(1), 10);
  REQUIRE(trivial.has_value());
  CHECK(*trivial == SparseVector::unit(1));

  const auto classic = witness_search(1, 0, Rational(3, 2), 10);
  REQUIRE(classic.has_value());
  CHECK(*classic == SparseVector::ones(3, 5));

  CHECK(!witness_search(1, 0, Rational(100), 6).has_value());
  CHECK_THROWS_AS(witness_search(0, 1, Rational(1), 5), Error);
  CHECK_THROWS_AS(witness_search(2, 1, Rational(1, 2), 5), Error);
  CHECK_THROWS_AS(witness_search(1, 0, Rational(1), 0), Error);
}

TEST_CASE("witness search reaches 5/4 for levels (2, 1) within dim 20") {
  const auto witness = witness_search(2, 1, Rational(5, 4), 20);
  REQUIRE(witness.has_value());
  const Rational top = tsirelson_iterate(*witness, 2);
  const Rational bottom = tsirelson_iterate(*witness, 1);
  CHECK(top >= Rational(5, 4) * bottom);
}

TEST_CASE("matrices computed in parallel match cell-by-cell recomputation") {
  const auto rows = NormSequence::parse("tsirelson:0..4");
  const auto cols = NormSequence::parse("tsirelson:0..3");
  const auto m = phi_matrix(rows, cols, 5);
  const auto again = phi_matrix(rows, cols, 5);
  for (int i = 0; i < rows.length(); ++i) {
    for (int j = 0; j < cols.length(); ++j) {
      const auto single = phi(rows.at(i), cols.at(j), 5);
      CHECK(m.cells[i][j].phi == single.value);
      CHECK(m.cells[i][j].distortion_value == single.distortion_value);
      CHECK(again.cells[i][j].phi == m.cells[i][j].phi);
    }
  }
}
