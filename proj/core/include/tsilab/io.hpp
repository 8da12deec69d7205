#pragma once

#include <string>
#include <vector>

#include "tsilab/distortion.hpp"
#include "tsilab/norming_set.hpp"
#include "tsilab/norms.hpp"
#include "tsilab/sparse_vector.hpp"
#include "tsilab/stability.hpp"

namespace tsilab {

/// Vector wire format: {"coords": {"3": "1/2", "4": "1"}} — decimal index
/// keys, rational values as "p/q" or integer strings.
SparseVector vector_from_json(const std::string& text);
std::string vector_to_json(const SparseVector& x);

/// Norming-set export: {"dim": d, "functionals": [{"3": "1/2", ...}, ...]}.
std::string norming_set_to_json(const NormingSet& set);
NormingSet norming_set_from_json(const std::string& text);

/// Growth-table CSV: header "dim,D_num,D_den,D_value", exact "p/q" strings.
std::string growth_to_csv(const NormSpec& num, const NormSpec& den,
                          const std::vector<GrowthRow>& rows);
std::string growth_to_json(const NormSpec& num, const NormSpec& den,
                           const std::vector<GrowthRow>& rows);

/// Matrix CSV: header row with column names, one labeled row per sequence
/// index, float phi entries. Error cells print the error name.
std::string phi_matrix_to_csv(const PhiMatrix& matrix);
/// JSON variant additionally carrying the exact D rational per cell.
std::string phi_matrix_to_json(const PhiMatrix& matrix);

std::string stability_report_to_json(const StabilityReport& report);
std::string iterated_limit_report_to_json(const IteratedLimitReport& report);
std::string distortion_result_to_json(const DistortionResult& result);
std::string convergence_report_to_json(const ConvergenceReport& report);

}  // namespace tsilab
