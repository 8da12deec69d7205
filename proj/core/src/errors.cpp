#include "tsilab/errors.hpp"

namespace tsilab {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument:
      return "invalid-argument";
    case Errc::unsupported_spec:
      return "unsupported-spec";
    case Errc::dimension_bound_exceeded:
      return "dimension-bound-exceeded";
    case Errc::oracle_bound_exceeded:
      return "oracle-bound-exceeded";
    case Errc::support_out_of_range:
      return "support-out-of-range";
    case Errc::domain_error:
      return "domain-error";
    case Errc::unbounded:
      return "unbounded";
    case Errc::insufficient_data:
      return "insufficient-data";
    case Errc::no_convergence_detected:
      return "no-convergence-detected";
  }
  return "unknown-error";
}

}  // namespace tsilab
