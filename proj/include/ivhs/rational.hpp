#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>
#include <string_view>

namespace ivhs {

/// Arbitrary-precision integer. Expression templates are disabled so the type
/// composes cleanly with Eigen's own expression machinery.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Exact rational, always in lowest terms with a positive denominator.
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

inline Integer numerator_of(const Rational& q) {
  return boost::multiprecision::numerator(q);
}

inline Integer denominator_of(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

inline bool is_zero(const Rational& q) { return q.is_zero(); }

/// "p" when the denominator is one, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.str(); }

/// Parses "p" or "p/q" (optional leading sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace ivhs
