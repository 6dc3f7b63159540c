#pragma once

#include <gmpxx.h>

#include <string>

namespace triarray {

using Int = mpz_class;
using Rational = mpq_class;

// Canonical fraction num/den; throws std::invalid_argument on a zero denominator.
Rational rat(const Int& num, const Int& den);
Rational rat(long num, long den = 1);

// "p/q", or just "p" when the denominator is 1.  Inverse of parse_rational.
std::string to_string(const Rational& q);
std::string to_string(const Int& n);

Rational parse_rational(const std::string& text);
Int parse_int(const std::string& text);

}  // namespace triarray
