#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace hklat {

// Expression templates are disabled so the types behave as plain values
// inside Eigen expressions.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses "p", "-p" or "p/q" (no whitespace). Throws Error(kParse) on bad
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" with q > 0 otherwise.
std::string format_rational(const Rational& value);

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline int sign(const Rational& x) { return x.sign(); }
inline bool is_integer(const Rational& x) {
  return boost::multiprecision::denominator(x) == 1;
}

}  // namespace hklat
