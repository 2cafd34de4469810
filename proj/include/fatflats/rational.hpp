#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fatflats {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact fraction, always kept canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// Raised when an operation is called outside its mathematical domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computed fact contradicts a proven statement. Never expected.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

/// "num/den", or plain "n" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "n", "-n", "a/b" or a plain decimal like "1e-6" / "0.25".
Rational parse_rational(std::string_view text);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Decimal rendering with `digits` significant digits, truncated toward zero.
std::string to_decimal(const Rational& q, int digits = 10);

/// Nearest double; only for display and coarse comparisons in tests.
double to_double(const Rational& q);

}  // namespace fatflats
