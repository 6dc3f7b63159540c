#pragma once

#include "triarray/rational.hpp"

#include <string>
#include <vector>

namespace triarray {

// Power series in one formal variable, truncated at a fixed order; all
// coefficient arithmetic is exact.
class PowerSeries {
 public:
  explicit PowerSeries(long order);  // zero series with coefficients 0..order

  long order() const { return static_cast<long>(c_.size()) - 1; }
  const Rational& coeff(long m) const;
  void set_coeff(long m, const Rational& v);

  PowerSeries& operator+=(const PowerSeries& o);  // orders must match
  PowerSeries& operator-=(const PowerSeries& o);
  PowerSeries& operator*=(const Rational& c);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const Rational& c) { return a *= c; }

  PowerSeries operator*(const PowerSeries& o) const;  // truncated convolution

  // Formal derivative; the result is exact one order lower.
  PowerSeries derivative() const;

  // 1/this; requires a nonzero constant term.
  PowerSeries reciprocal() const;

  // Integer power, negative exponents via reciprocal.
  PowerSeries pow(long e) const;

  bool operator==(const PowerSeries&) const = default;

 private:
  std::vector<Rational> c_;
};

PowerSeries exp_series(const Int& a, long order);  // e^{a t}
PowerSeries cosh_series(long order);
PowerSeries sinh_series(long order);

// cosh(t)^s as the finite sum  sum_k binom(s,k)/2^s * e^{(2k-s) t},
// exact at any truncation order.
PowerSeries cosh_pow_series(long s, long order);

// The same series obtained by powering cosh(t); both routes must agree.
PowerSeries cosh_pow_series_direct(long s, long order);

// r-th derivative of cosh(t)^s at t = 0.
Rational cosh_pow_derivative(long s, long r);

// Series form of the expansion check: the r-th t-derivative of cosh(t)^s
// against sum_j a_row[j] * cosh(t)^{s-j} sinh(t)^j, compared through
// t-order `order`.  Covers r > s, where the Laurent route breaks down
// (cosh^{s-j} is inverted as a power series).
bool verify_G_expansion_series(long s, long r, const std::vector<Int>& a_row,
                               long order, std::string* diag = nullptr);

}  // namespace triarray
