#include "triarray/power_series.hpp"

#include "triarray/combinatorics.hpp"

#include <sstream>
#include <stdexcept>

namespace triarray {

PowerSeries::PowerSeries(long order) {
  if (order < 0) throw std::invalid_argument("PowerSeries: negative order");
  c_.assign(order + 1, Rational(0));
}

const Rational& PowerSeries::coeff(long m) const {
  if (m < 0 || m > order()) throw std::out_of_range("PowerSeries::coeff");
  return c_[m];
}

void PowerSeries::set_coeff(long m, const Rational& v) {
  if (m < 0 || m > order()) throw std::out_of_range("PowerSeries::set_coeff");
  c_[m] = v;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  if (o.order() != order()) throw std::invalid_argument("PowerSeries: order mismatch");
  for (long m = 0; m <= order(); ++m) c_[m] += o.c_[m];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  if (o.order() != order()) throw std::invalid_argument("PowerSeries: order mismatch");
  for (long m = 0; m <= order(); ++m) c_[m] -= o.c_[m];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& c) {
  for (auto& v : c_) v *= c;
  return *this;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  long n = std::min(order(), o.order());
  PowerSeries p(n);
  for (long i = 0; i <= n; ++i) {
    if (c_[i] == 0) continue;
    for (long j = 0; i + j <= n && j <= o.order(); ++j) p.c_[i + j] += c_[i] * o.c_[j];
  }
  return p;
}

PowerSeries PowerSeries::derivative() const {
  if (order() == 0) throw std::invalid_argument("PowerSeries::derivative: order exhausted");
  PowerSeries d(order() - 1);
  for (long m = 0; m < order(); ++m) d.c_[m] = (m + 1) * c_[m + 1];
  return d;
}

PowerSeries PowerSeries::reciprocal() const {
  if (c_[0] == 0) throw std::domain_error("PowerSeries::reciprocal: zero constant term");
  PowerSeries b(order());
  b.c_[0] = 1 / c_[0];
  for (long m = 1; m <= order(); ++m) {
    Rational acc = 0;
    for (long i = 1; i <= m; ++i) acc += c_[i] * b.c_[m - i];
    b.c_[m] = -acc / c_[0];
  }
  return b;
}

PowerSeries PowerSeries::pow(long e) const {
  if (e < 0) return reciprocal().pow(-e);
  PowerSeries p(order());
  p.c_[0] = 1;
  for (long i = 0; i < e; ++i) p = p * *this;
  return p;
}

PowerSeries exp_series(const Int& a, long order) {
  PowerSeries s(order);
  Int num = 1;
  for (long m = 0; m <= order; ++m) {
    s.set_coeff(m, rat(num, factorial(m)));
    num *= a;
  }
  return s;
}

PowerSeries cosh_series(long order) {
  PowerSeries s(order);
  for (long m = 0; m <= order; m += 2) s.set_coeff(m, rat(1, factorial(m)));
  return s;
}

PowerSeries sinh_series(long order) {
  PowerSeries s(order);
  for (long m = 1; m <= order; m += 2) s.set_coeff(m, rat(1, factorial(m)));
  return s;
}

PowerSeries cosh_pow_series(long s, long order) {
  if (s < 0) throw std::invalid_argument("cosh_pow_series: negative power");
  PowerSeries acc(order);
  Rational scale = rat(1, int_pow(2, s));
  for (long k = 0; k <= s; ++k) {
    PowerSeries e = exp_series(Int(2 * k - s), order);
    e *= scale * Rational(binomial(s, k));
    acc += e;
  }
  return acc;
}

PowerSeries cosh_pow_series_direct(long s, long order) {
  if (s < 0) throw std::invalid_argument("cosh_pow_series_direct: negative power");
  return cosh_series(order).pow(s);
}

Rational cosh_pow_derivative(long s, long r) {
  if (r < 0) throw std::invalid_argument("cosh_pow_derivative: negative order");
  return cosh_pow_series(s, r).coeff(r) * Rational(factorial(r));
}

bool verify_G_expansion_series(long s, long r, const std::vector<Int>& a_row, long order,
                               std::string* diag) {
  if (static_cast<long>(a_row.size()) != r + 1)
    throw std::invalid_argument("verify_G_expansion_series: row must have r+1 entries");
  if (order < r) throw std::invalid_argument("verify_G_expansion_series: order must be >= r");
  // lhs known exactly through t^order after differentiating r times.
  PowerSeries lhs = cosh_pow_series(s, order + r);
  for (long i = 0; i < r; ++i) lhs = lhs.derivative();
  PowerSeries ch = cosh_series(order), sh = sinh_series(order);
  PowerSeries rhs(order);
  for (long j = 0; j <= r; ++j) {
    if (a_row[j] == 0) continue;
    PowerSeries term = ch.pow(s - j) * sh.pow(j);
    term *= Rational(a_row[j]);
    rhs += term;
  }
  for (long m = 0; m <= order; ++m) {
    if (lhs.coeff(m) != rhs.coeff(m)) {
      if (diag) {
        std::ostringstream os;
        os << "first mismatch at t-order " << m << ": lhs=" << lhs.coeff(m)
           << " rhs=" << rhs.coeff(m);
        *diag = os.str();
      }
      return false;
    }
  }
  return true;
}

}  // namespace triarray
