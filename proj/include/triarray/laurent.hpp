#pragma once

#include "triarray/rational.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace triarray {

// Finite Laurent polynomial over the rationals, exponent -> coefficient.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly term(long exponent, const Rational& c);
  static LaurentPoly one() { return term(0, 1); }

  const std::map<long, Rational>& coeffs() const { return c_; }
  Rational coeff(long exponent) const;
  bool is_zero() const { return c_.empty(); }

  void add_term(long exponent, const Rational& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  LaurentPoly operator*(const LaurentPoly& o) const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }

  LaurentPoly pow(long e) const;  // e >= 0

  bool operator==(const LaurentPoly&) const = default;

 private:
  std::map<long, Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

LaurentPoly g_poly();  // (x + 1/x)/2
LaurentPoly h_poly();  // (x - 1/x)/2

// g^{s-j} * h^j; requires 0 <= j <= s so no poles appear.
LaurentPoly G(long s, long j);

// Applies (x d/dx)^r: the coefficient at x^j picks up a factor j^r, 0^0 = 1.
LaurentPoly euler_op(const LaurentPoly& p, long r);

// Checks euler_op(G(s,0), r) == sum_j a_row[j] * G(s,j) exactly.  a_row holds
// the coefficients for j = 0..r; entries with j > s must be zero (those G are
// no longer polynomial), otherwise the check fails with a diagnostic.
bool verify_G_expansion(long s, long r, const std::vector<Int>& a_row,
                        std::string* diag = nullptr);

// Coefficients of G(s,0): value at v is binom(s, (v+s)/2) / 2^s on the even
// (or odd, matching s) lattice -s..s, zero elsewhere; they sum to 1.
std::map<long, Rational> centered_binomial_coeffs(long s);

// r-th moment of the centered binomial distribution of size s, summed
// directly over the outcome lattice.
Rational moment_bruteforce(long s, long r);

}  // namespace triarray
