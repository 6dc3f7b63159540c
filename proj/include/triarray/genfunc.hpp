#pragma once

#include "triarray/partitions.hpp"
#include "triarray/phi_field.hpp"
#include "triarray/power_series.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace triarray {

// Dense polynomial in the formal parameter z with rational coefficients.
class PolyZ {
 public:
  PolyZ() = default;
  explicit PolyZ(std::vector<Rational> coeffs);
  static PolyZ constant(const Rational& c);

  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  Rational coeff(long k) const;
  Rational at_zero() const { return coeff(0); }
  bool is_zero() const { return c_.empty(); }

  PolyZ& operator+=(const PolyZ& o);
  PolyZ& operator-=(const PolyZ& o);
  PolyZ& operator*=(const Rational& c);
  PolyZ operator*(const PolyZ& o) const;

  friend PolyZ operator+(PolyZ a, const PolyZ& b) { return a += b; }
  friend PolyZ operator-(PolyZ a, const PolyZ& b) { return a -= b; }
  friend PolyZ operator*(PolyZ a, const Rational& c) { return a *= c; }
  friend PolyZ operator*(const Rational& c, PolyZ a) { return a *= c; }

  PolyZ times_z() const;     // z * p
  PolyZ derivative() const;  // formal d/dz
  PolyZ pow(long e) const;   // e >= 0

  bool operator==(const PolyZ&) const = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const PolyZ& p);

// Polynomial in y whose coefficients are polynomials in z.
struct BivariatePoly {
  std::vector<PolyZ> by_y;  // by_y[lambda] = coefficient of y^lambda

  PolyZ coeff_y(long lambda) const;
  long y_degree() const { return static_cast<long>(by_y.size()) - 1; }
  bool operator==(const BivariatePoly&) const = default;
};

// Series in x truncated at a fixed order; the coefficient of x^n y^lambda is
// a polynomial in z, supported on 0 <= lambda <= n.
class TriSeries {
 public:
  explicit TriSeries(long order);

  long order() const { return static_cast<long>(grid_.size()) - 1; }
  PolyZ coeff(long n, long lambda) const;  // zero outside the support
  void set_coeff(long n, long lambda, PolyZ p);

  TriSeries& operator+=(const TriSeries& o);
  TriSeries& operator*=(const Rational& c);
  TriSeries operator*(const TriSeries& o) const;  // truncated in x

 private:
  std::vector<std::vector<PolyZ>> grid_;  // grid_[n][lambda], lambda <= n
};

// f_k(z) = 1/(2k)! + z/(2k+1)!.
PolyZ f_component(long k);

// F_{n,lambda}(z) = sum_k phiT_{n,lambda,k} z^k; the zero polynomial outside
// n >= lambda >= 0.
PolyZ F_from_phi(long n, long lambda, const PhiAdjoint& adj);

// Closed form: sum over partitions of n with lambda parts of
// prod_k f_k(z)^{pi(k)} / pi(k)!.
PolyZ F_closed(long n, long lambda);

// Constant term of the closed form:
// sum over partitions of 1 / prod_k [ pi(k)! ((2k)!)^{pi(k)} ];
// equals phi_{n,n-lambda,0}.
Rational phi_from_partitions(long n, long lambda);

// (2n - lambda z) F_{n,lambda} + z(z+1) F'_{n,lambda}
//   == F_{n-1,lambda-1} + F'_{n-1,lambda}, as exact polynomials.
bool verify_ode(long n, long lambda, const PhiAdjoint& adj, std::string* diag = nullptr);

// F_n(y,z) = sum_lambda F_{n,lambda}(z) y^lambda.
BivariatePoly F_n_bivariate(long n, const PhiAdjoint& adj);

// 2n F_n + z(z+1) dz F_n - z y dy F_n == y F_{n-1} + dz F_{n-1}.
bool verify_pde_n(long n, const PhiAdjoint& adj, std::string* diag = nullptr);

// exp[ y * sum_{k>=1} f_k(z) x^k ] truncated past x^K; the coefficient of
// x^n y^lambda reproduces F_{n,lambda}.
TriSeries F_truncated(long K);

// 2x dx F + z(z+1) dz F - z y dy F == y x F + x dz F, coefficientwise on the
// truncated series (exact for every x-degree <= K).
bool verify_pde_full(const TriSeries& F, std::string* diag = nullptr);
bool verify_pde_full(long K, std::string* diag = nullptr);

}  // namespace triarray
