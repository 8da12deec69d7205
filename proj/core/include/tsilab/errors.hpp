#pragma once

#include <stdexcept>
#include <string>

namespace tsilab {

/// Stable error identifiers. The CLI prints the kebab-case name verbatim.
enum class Errc {
  invalid_argument,
  unsupported_spec,
  dimension_bound_exceeded,
  oracle_bound_exceeded,
  support_out_of_range,
  domain_error,
  unbounded,
  insufficient_data,
  no_convergence_detected,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }
  const char* code_name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace tsilab
