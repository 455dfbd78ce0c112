#pragma once

#include <gmpxx.h>

#include <string>

namespace lforge {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "a" or "a/b" with optional sign; throws std::invalid_argument.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

Integer factorial(unsigned k);

/// Exact square root when `q` is the square of a rational.
bool rational_sqrt(const Rational& q, Rational& root);

}  // namespace lforge
