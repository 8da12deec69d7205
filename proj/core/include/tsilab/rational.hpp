#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <variant>

namespace tsilab {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator (boost::multiprecision canonicalizes on every op).
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational rat(long long num, long long den = 1) {
  return Rational(Integer(num), Integer(den));
}

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Parses "p/q", "p", or "-p/q". Throws Error(invalid_argument) on junk.
Rational parse_rational(const std::string& text);

/// Formats as "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rational& q);

/// Nearest-double conversion, safe for arbitrarily large numerator/denominator.
double to_double(const Rational& q);

/// Natural log of a positive rational, accurate to ~1e-15 relative error.
double log_rational(const Rational& q);

/// Exact-or-approximate scalar. Exact norms carry a Rational; Lp norms
/// carry a double with a documented 1e-12 precision target.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  explicit Scalar(Rational q) : value_(std::move(q)) {}
  explicit Scalar(double d) : value_(d) {}

  bool exact() const { return std::holds_alternative<Rational>(value_); }
  const Rational& rational() const { return std::get<Rational>(value_); }
  double approx() const {
    return exact() ? to_double(rational()) : std::get<double>(value_);
  }

  /// "p/q" for exact values, shortest round-trip decimal otherwise.
  std::string str() const;

 private:
  std::variant<Rational, double> value_;
};

}  // namespace tsilab
