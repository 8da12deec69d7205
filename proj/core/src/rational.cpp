#include "tsilab/rational.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "tsilab/errors.hpp"

namespace tsilab {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text))
      raise(Errc::invalid_argument, "not a rational: '" + text + "'");
    return Rational(Integer(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den))
    raise(Errc::invalid_argument, "not a rational: '" + text + "'");
  Integer d(den);
  if (d == 0) raise(Errc::invalid_argument, "zero denominator: '" + text + "'");
  // Division canonicalizes a negative denominator into the numerator.
  return Rational(Integer(num)) / Rational(d);
}

std::string format_rational(const Rational& q) {
  std::ostringstream out;
  out << numerator(q);
  if (denominator(q) != 1) out << "/" << denominator(q);
  return out.str();
}

double to_double(const Rational& q) {
  if (q == 0) return 0.0;
  // Direct conversion is fine until the parts get huge; then rescale by a
  // common power of two so both fit comfortably in a double.
  const Integer num = numerator(q) < 0 ? Integer(-numerator(q)) : numerator(q);
  const Integer den = denominator(q);
  const long nbits = static_cast<long>(boost::multiprecision::msb(num));
  const long dbits = static_cast<long>(boost::multiprecision::msb(den));
  double magnitude;
  if (nbits < 900 && dbits < 900) {
    magnitude = num.convert_to<double>() / den.convert_to<double>();
  } else {
    const long shift_n = nbits > 100 ? nbits - 100 : 0;
    const long shift_d = dbits > 100 ? dbits - 100 : 0;
    const double top = Integer(num >> shift_n).convert_to<double>();
    const double bot = Integer(den >> shift_d).convert_to<double>();
    magnitude = (top / bot) * std::exp2(static_cast<double>(shift_n - shift_d));
  }
  return q < 0 ? -magnitude : magnitude;
}

double log_rational(const Rational& q) {
  if (q <= 0) raise(Errc::domain_error, "log of a nonpositive rational");
  // log(n/d) = (log2(n) - log2(d)) * ln 2 with the top bits carried in a
  // double; exact for small values, ~1e-15 relative otherwise.
  const auto log2_int = [](const Integer& v) {
    const long bits = static_cast<long>(boost::multiprecision::msb(v));
    const long shift = bits > 100 ? bits - 100 : 0;
    const double top = Integer(v >> shift).convert_to<double>();
    return std::log2(top) + static_cast<double>(shift);
  };
  const double l2 =
      log2_int(numerator(q)) - log2_int(denominator(q));
  return l2 * M_LN2;
}

std::string Scalar::str() const {
  if (exact()) return format_rational(rational());
  std::ostringstream out;
  out.precision(17);
  out << approx();
  return out.str();
}

}  // namespace tsilab
