#include "tsilab/config.hpp"

#include <cstdlib>
#include <string>

#include "tsilab/errors.hpp"

namespace tsilab {

namespace {

int read_dim_bound() {
  const char* raw = std::getenv("TSLAB_DIM_BOUND");
  if (raw == nullptr || *raw == '\0') return kDefaultDimBound;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (end == nullptr || *end != '\0' || value < 1 || value > 64)
    raise(Errc::invalid_argument,
          "TSLAB_DIM_BOUND must be an integer in [1, 64], got '" +
              std::string(raw) + "'");
  return static_cast<int>(value);
}

}  // namespace

int dim_bound() {
  static const int bound = read_dim_bound();
  return bound;
}

bool dim_in_bounds(int dim) { return dim >= 1 && dim <= dim_bound(); }

}  // namespace tsilab
