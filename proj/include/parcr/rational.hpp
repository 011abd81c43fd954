#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace parcr {

// Arbitrary-precision signed integer and exact rational. All arithmetic in
// this library is exact; no floating point appears anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) {
  return boost::multiprecision::numerator(q);
}

inline Integer denominator(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

// Requires is_integral(q).
inline Integer to_integer(const Rational& q) {
  if (!is_integral(q)) {
    throw std::domain_error("to_integer: " + q.str() + " is not an integer");
  }
  return numerator(q);
}

inline bool fits_int64(const Integer& n) {
  return n >= std::numeric_limits<long long>::min() &&
         n <= std::numeric_limits<long long>::max();
}

// Rational from an arbitrary integer pair. The underlying type requires a
// positive denominator at construction, so the sign is normalized here.
inline Rational make_rational(Integer num, Integer den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

// Canonical form: "n" when the denominator is 1, otherwise "p/q" with q > 0
// and the fraction fully reduced.
inline std::string to_string(const Rational& q) {
  if (is_integral(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline std::string to_string(const Integer& n) { return n.str(); }

namespace detail {

inline Integer parse_integer_token(std::string_view text, const char* what,
                                   bool allow_sign) {
  if (text.empty()) {
    throw std::invalid_argument(std::string(what) + ": empty integer");
  }
  std::size_t start = 0;
  if (allow_sign && text[0] == '-') start = 1;
  if (start == text.size()) {
    throw std::invalid_argument(std::string(what) + ": missing digits");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument(std::string(what) + ": invalid integer '" +
                                  std::string(text) + "'");
    }
  }
  return Integer(std::string(text));
}

}  // namespace detail

// Accepts the canonical forms "n" and "p/q" (q > 0); the numerator may be
// negative. Anything else is rejected.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(detail::parse_integer_token(text, "rational", true));
  }
  Integer num =
      detail::parse_integer_token(text.substr(0, slash), "numerator", true);
  Integer den = detail::parse_integer_token(text.substr(slash + 1),
                                            "denominator", false);
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  return Rational(num, den);
}

inline Integer factorial(long long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  Integer f = 1;
  for (long long k = 2; k <= n; ++k) f *= k;
  return f;
}

inline Integer integer_pow(const Integer& base, long long exponent) {
  if (exponent < 0) throw std::domain_error("integer_pow: negative exponent");
  Integer result = 1;
  Integer b = base;
  long long e = exponent;
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

}  // namespace parcr
