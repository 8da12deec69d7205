#include "tsilab/io.hpp"

#include <sstream>

#include <json.hpp>

#include "tsilab/errors.hpp"

namespace tsilab {

namespace {

using Json = nlohmann::ordered_json;

Json scalar_to_json(const Scalar& s) {
  if (s.exact()) return Json(format_rational(s.rational()));
  return Json(s.approx());
}

Json coords_to_json(const SparseVector& x) {
  Json coords = Json::object();
  for (const auto& [index, value] : x.terms())
    coords[std::to_string(index)] = format_rational(value);
  return coords;
}

Json vector_json(const SparseVector& x) {
  Json out = Json::object();
  out["coords"] = coords_to_json(x);
  return out;
}

SparseVector coords_from_json(const Json& coords) {
  if (!coords.is_object())
    raise(Errc::invalid_argument, "coords must be an object of index -> value");
  std::vector<SparseVector::Term> terms;
  for (const auto& [key, value] : coords.items()) {
    int index = 0;
    try {
      index = std::stoi(key);
    } catch (const std::exception&) {
      raise(Errc::invalid_argument, "bad coordinate index '" + key + "'");
    }
    if (!value.is_string())
      raise(Errc::invalid_argument,
            "coordinate values are rational strings like \"1/2\"");
    terms.emplace_back(index, parse_rational(value.get<std::string>()));
  }
  return SparseVector::from_terms(std::move(terms));
}

Json parse_json(const std::string& text) {
  Json parsed = Json::parse(text, nullptr, false);
  if (parsed.is_discarded())
    raise(Errc::invalid_argument, "malformed JSON input");
  return parsed;
}

}  // namespace

SparseVector vector_from_json(const std::string& text) {
  const Json parsed = parse_json(text);
  if (!parsed.is_object() || !parsed.contains("coords"))
    raise(Errc::invalid_argument, "vector JSON needs a \"coords\" object");
  return coords_from_json(parsed["coords"]);
}

std::string vector_to_json(const SparseVector& x) {
  return vector_json(x).dump();
}

std::string norming_set_to_json(const NormingSet& set) {
  Json out = Json::object();
  out["dim"] = set.dim();
  Json functionals = Json::array();
  for (const auto& f : set.functionals()) functionals.push_back(coords_to_json(f));
  out["functionals"] = std::move(functionals);
  return out.dump();
}

NormingSet norming_set_from_json(const std::string& text) {
  const Json parsed = parse_json(text);
  if (!parsed.is_object() || !parsed.contains("dim") ||
      !parsed.contains("functionals") || !parsed["dim"].is_number_integer() ||
      !parsed["functionals"].is_array())
    raise(Errc::invalid_argument,
          "norming set JSON needs {\"dim\": d, \"functionals\": [...]}");
  std::vector<Functional> functionals;
  for (const auto& f : parsed["functionals"]) functionals.push_back(coords_from_json(f));
  return NormingSet(parsed["dim"].get<int>(), std::move(functionals));
}

std::string growth_to_csv(const NormSpec& num, const NormSpec& den,
                          const std::vector<GrowthRow>& rows) {
  std::ostringstream out;
  out << "dim,D_num,D_den,D_value\n";
  for (const auto& row : rows) {
    out << row.dim << "," << to_string(num) << "," << to_string(den) << ","
        << format_rational(row.value) << "\n";
  }
  return out.str();
}

std::string growth_to_json(const NormSpec& num, const NormSpec& den,
                           const std::vector<GrowthRow>& rows) {
  Json out = Json::object();
  out["num"] = to_string(num);
  out["den"] = to_string(den);
  Json table = Json::array();
  for (const auto& row : rows) {
    Json entry = Json::object();
    entry["dim"] = row.dim;
    entry["D"] = format_rational(row.value);
    table.push_back(std::move(entry));
  }
  out["rows"] = std::move(table);
  // The table's sup is all this tool claims about unbounded dimension; a
  // still-rising tail flags likely divergence, it proves nothing.
  out["sup"] = format_rational(rows.back().value);
  out["rising_at_end"] =
      rows.size() >= 2 && rows[rows.size() - 2].value < rows.back().value;
  return out.dump();
}

std::string phi_matrix_to_csv(const PhiMatrix& matrix) {
  std::ostringstream out;
  out << "phi";
  for (const auto& name : matrix.col_names) out << "," << name;
  out << "\n";
  for (std::size_t i = 0; i < matrix.cells.size(); ++i) {
    out << matrix.row_names[i];
    for (const auto& cell : matrix.cells[i]) {
      out << ",";
      if (cell.ok) {
        out << Json(cell.phi).dump();
      } else {
        out << cell.error;
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string phi_matrix_to_json(const PhiMatrix& matrix) {
  Json out = Json::object();
  out["rows"] = matrix.row_label;
  out["cols"] = matrix.col_label;
  out["dim"] = matrix.dim;
  out["row_names"] = matrix.row_names;
  out["col_names"] = matrix.col_names;
  Json cells = Json::array();
  for (const auto& row : matrix.cells) {
    Json json_row = Json::array();
    for (const auto& cell : row) {
      Json entry = Json::object();
      if (cell.ok) {
        entry["phi"] = cell.phi;
        if (cell.has_distortion)
          entry["D"] = format_rational(cell.distortion_value);
      } else {
        entry["error"] = cell.error;
      }
      json_row.push_back(std::move(entry));
    }
    cells.push_back(std::move(json_row));
  }
  out["cells"] = std::move(cells);
  return out.dump();
}

std::string stability_report_to_json(const StabilityReport& report) {
  Json out = Json::object();
  out["sup_upper"] = report.sup_upper;
  out["inf_lower"] = report.inf_lower;
  out["gap"] = report.gap;
  out["verdict"] = verdict_name(report.verdict);
  out["tolerance"] = report.tolerance;
  out["dim"] = report.dim;
  out["lengths"] = Json::array({report.rows, report.cols});
  if (report.min_upper_distortion)
    out["min_upper_D"] = format_rational(*report.min_upper_distortion);
  if (report.max_lower_distortion)
    out["max_lower_D"] = format_rational(*report.max_lower_distortion);
  return out.dump();
}

std::string iterated_limit_report_to_json(const IteratedLimitReport& report) {
  Json out = Json::object();
  const auto limits = [](const std::vector<std::optional<double>>& xs) {
    Json arr = Json::array();
    for (const auto& x : xs) {
      if (x) {
        arr.push_back(*x);
      } else {
        arr.push_back(nullptr);
      }
    }
    return arr;
  };
  out["row_limits"] = limits(report.row_limits);
  out["col_limits"] = limits(report.col_limits);
  out["rows_then_cols"] = report.rows_then_cols;
  out["cols_then_rows"] = report.cols_then_rows;
  out["disagreement"] = report.disagreement;
  out["differ"] = report.differ;
  out["tolerance"] = report.tolerance;
  out["window"] = report.window;
  out["method"] = report.method;
  return out.dump();
}

std::string distortion_result_to_json(const DistortionResult& result) {
  Json out = Json::object();
  out["value"] = format_rational(result.value);
  out["dim"] = result.dim;
  out["witness"] = vector_json(result.witness);
  out["num"] = to_string(result.num);
  out["den"] = to_string(result.den);
  out["exact"] = true;
  return out.dump();
}

std::string convergence_report_to_json(const ConvergenceReport& report) {
  Json out = Json::object();
  Json values = Json::array();
  for (const auto& v : report.values) values.push_back(scalar_to_json(v));
  out["values"] = std::move(values);
  out["stabilized_from"] = report.stabilized_from;
  out["eventually_constant"] = report.eventually_constant;
  if (report.stabilized_value)
    out["stabilized_value"] = scalar_to_json(*report.stabilized_value);
  return out.dump();
}

}  // namespace tsilab
