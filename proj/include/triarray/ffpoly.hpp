#pragma once

#include "triarray/rational.hpp"

#include <iosfwd>
#include <map>
#include <string>

namespace triarray {

// Integer-coefficient polynomial in the falling-factorial basis (s)_k.
// Stored sparsely, degree -> coefficient; zero coefficients are never kept.
class FFPoly {
 public:
  FFPoly() = default;

  static FFPoly constant(const Int& c);
  static FFPoly basis(long k, const Int& coeff = 1);  // coeff * (s)_k

  const std::map<long, Int>& coeffs() const { return c_; }
  Int coeff(long k) const;
  long degree() const;  // -1 for the zero polynomial
  bool is_zero() const { return c_.empty(); }

  void add_term(long k, const Int& c);

  FFPoly& operator+=(const FFPoly& o);
  FFPoly& operator-=(const FFPoly& o);
  FFPoly& operator*=(const Int& c);

  friend FFPoly operator+(FFPoly a, const FFPoly& b) { return a += b; }
  friend FFPoly operator-(FFPoly a, const FFPoly& b) { return a -= b; }
  friend FFPoly operator*(FFPoly a, const Int& c) { return a *= c; }
  friend FFPoly operator*(const Int& c, FFPoly a) { return a *= c; }

  bool operator==(const FFPoly&) const = default;

 private:
  std::map<long, Int> c_;
};

// s*p(s), rewritten in the basis via s*(s)_k = (s)_{k+1} + k*(s)_k.
FFPoly ff_multiply_by_s(const FFPoly& p);

// Exact value of p at an integer point.
Int ff_eval(const FFPoly& p, const Int& s);

// s^r expanded in the basis: sum_m S(r, m) * (s)_m.
FFPoly power_to_ff(long r);

// "3*(s)_2 + (s)_1", constants bare, zero polynomial "0".  Inverse of parse_ffpoly.
std::string to_string(const FFPoly& p);
FFPoly parse_ffpoly(const std::string& text);

std::ostream& operator<<(std::ostream& os, const FFPoly& p);

}  // namespace triarray
