#include "tsilab/norm_spec.hpp"

#include "tsilab/errors.hpp"

namespace tsilab {

NormSpec parse_norm_spec(const std::string& text) {
  if (text == "sup") return SupNorm{};
  if (text == "l1") return L1Norm{};
  if (text.rfind("lp:", 0) == 0) {
    Rational p = parse_rational(text.substr(3));
    if (p <= 1)
      raise(Errc::invalid_argument, "lp exponent must be > 1: '" + text + "'");
    return LpNorm{std::move(p)};
  }
  if (text.rfind("tsirelson:", 0) == 0) {
    const std::string arg = text.substr(10);
    if (arg == "T") return TsirelsonLimitNorm{};
    Rational n = parse_rational(arg);
    if (denominator(n) != 1 || n < 0)
      raise(Errc::invalid_argument,
            "tsirelson iterate must be a nonnegative integer: '" + text + "'");
    return TsirelsonIterateNorm{static_cast<int>(numerator(n))};
  }
  raise(Errc::invalid_argument,
        "unknown norm spec '" + text +
            "' (expected sup | l1 | lp:<p> | tsirelson:<n> | tsirelson:T)");
}

std::string to_string(const NormSpec& spec) {
  if (std::holds_alternative<SupNorm>(spec)) return "sup";
  if (std::holds_alternative<L1Norm>(spec)) return "l1";
  if (const auto* lp = std::get_if<LpNorm>(&spec))
    return "lp:" + format_rational(lp->p);
  if (const auto* it = std::get_if<TsirelsonIterateNorm>(&spec))
    return "tsirelson:" + std::to_string(it->level);
  if (std::holds_alternative<TsirelsonLimitNorm>(spec)) return "tsirelson:T";
  const auto& poly = std::get<PolyhedralNorm>(spec);
  return "polyhedral:dim" + std::to_string(poly.set->dim());
}

bool spec_is_exact(const NormSpec& spec) {
  return !std::holds_alternative<LpNorm>(spec);
}

bool spec_is_polyhedral(const NormSpec& spec) {
  return !std::holds_alternative<LpNorm>(spec);
}

}  // namespace tsilab
