#include "triarray/genfunc.hpp"

#include "triarray/combinatorics.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace triarray {

PolyZ::PolyZ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyZ PolyZ::constant(const Rational& c) { return PolyZ(std::vector<Rational>{c}); }

void PolyZ::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational PolyZ::coeff(long k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return c_[k];
}

PolyZ& PolyZ::operator+=(const PolyZ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

PolyZ& PolyZ::operator-=(const PolyZ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

PolyZ& PolyZ::operator*=(const Rational& c) {
  if (c == 0) {
    c_.clear();
  } else {
    for (auto& v : c_) v *= c;
  }
  return *this;
}

PolyZ PolyZ::operator*(const PolyZ& o) const {
  if (is_zero() || o.is_zero()) return PolyZ();
  std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  return PolyZ(std::move(out));
}

PolyZ PolyZ::times_z() const {
  if (is_zero()) return PolyZ();
  std::vector<Rational> out(c_.size() + 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i + 1] = c_[i];
  return PolyZ(std::move(out));
}

PolyZ PolyZ::derivative() const {
  if (degree() < 1) return PolyZ();
  std::vector<Rational> out(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = Rational(static_cast<long>(i)) * c_[i];
  return PolyZ(std::move(out));
}

PolyZ PolyZ::pow(long e) const {
  if (e < 0) throw std::invalid_argument("PolyZ::pow: negative exponent");
  PolyZ p = constant(1);
  for (long i = 0; i < e; ++i) p = p * *this;
  return p;
}

std::ostream& operator<<(std::ostream& os, const PolyZ& p) {
  if (p.is_zero()) return os << "0";
  for (long k = 0; k <= p.degree(); ++k) {
    if (k > 0) os << " + ";
    os << p.coeff(k);
    if (k >= 1) os << "*z^" << k;
  }
  return os;
}

PolyZ BivariatePoly::coeff_y(long lambda) const {
  if (lambda < 0 || lambda > y_degree()) return PolyZ();
  return by_y[lambda];
}

TriSeries::TriSeries(long order) {
  if (order < 0) throw std::invalid_argument("TriSeries: negative order");
  grid_.resize(order + 1);
  for (long n = 0; n <= order; ++n) grid_[n].resize(n + 1);
}

PolyZ TriSeries::coeff(long n, long lambda) const {
  if (n < 0 || n > order() || lambda < 0 || lambda > n) return PolyZ();
  return grid_[n][lambda];
}

void TriSeries::set_coeff(long n, long lambda, PolyZ p) {
  if (n < 0 || n > order() || lambda < 0 || lambda > n)
    throw std::out_of_range("TriSeries::set_coeff");
  grid_[n][lambda] = std::move(p);
}

TriSeries& TriSeries::operator+=(const TriSeries& o) {
  if (o.order() != order()) throw std::invalid_argument("TriSeries: order mismatch");
  for (long n = 0; n <= order(); ++n)
    for (long l = 0; l <= n; ++l) grid_[n][l] += o.grid_[n][l];
  return *this;
}

TriSeries& TriSeries::operator*=(const Rational& c) {
  for (auto& row : grid_)
    for (auto& p : row) p *= c;
  return *this;
}

TriSeries TriSeries::operator*(const TriSeries& o) const {
  long k = std::min(order(), o.order());
  TriSeries out(k);
  for (long n1 = 0; n1 <= k; ++n1)
    for (long l1 = 0; l1 <= n1; ++l1) {
      if (grid_[n1][l1].is_zero()) continue;
      for (long n2 = 0; n1 + n2 <= k && n2 <= o.order(); ++n2)
        for (long l2 = 0; l2 <= n2; ++l2) {
          if (o.grid_[n2][l2].is_zero()) continue;
          out.grid_[n1 + n2][l1 + l2] += grid_[n1][l1] * o.grid_[n2][l2];
        }
    }
  return out;
}

PolyZ f_component(long k) {
  if (k < 0) throw std::invalid_argument("f_component: negative index");
  return PolyZ({rat(1, factorial(2 * k)), rat(1, factorial(2 * k + 1))});
}

PolyZ F_from_phi(long n, long lambda, const PhiAdjoint& adj) {
  if (n < 0 || lambda < 0 || lambda > n) return PolyZ();
  std::vector<Rational> coeffs(lambda + 1);
  for (long k = 0; k <= lambda; ++k) coeffs[k] = adj.at(n, lambda, k);
  return PolyZ(std::move(coeffs));
}

PolyZ F_closed(long n, long lambda) {
  PolyZ acc;
  for (const Partition& pi : enumerate_partitions(n, lambda)) {
    PolyZ prod = PolyZ::constant(1);
    for (const auto& [k, mult] : pi.freq) {
      prod = prod * f_component(k).pow(mult);
      prod *= rat(1, factorial(mult));
    }
    acc += prod;
  }
  return acc;
}

Rational phi_from_partitions(long n, long lambda) {
  Rational acc = 0;
  for (const Partition& pi : enumerate_partitions(n, lambda)) {
    Int denom = 1;
    for (const auto& [k, mult] : pi.freq)
      denom *= factorial(mult) * int_pow(factorial(2 * k), mult);
    acc += rat(1, denom);
  }
  return acc;
}

namespace {

bool report_poly_mismatch(const PolyZ& lhs, const PolyZ& rhs, const std::string& where,
                          std::string* diag) {
  if (lhs == rhs) return true;
  if (diag) {
    long top = std::max(lhs.degree(), rhs.degree());
    for (long k = 0; k <= top; ++k) {
      if (lhs.coeff(k) != rhs.coeff(k)) {
        std::ostringstream os;
        os << where << ": first mismatch at z^" << k << ": lhs=" << lhs.coeff(k)
           << " rhs=" << rhs.coeff(k);
        *diag = os.str();
        break;
      }
    }
  }
  return false;
}

}  // namespace

bool verify_ode(long n, long lambda, const PhiAdjoint& adj, std::string* diag) {
  PolyZ F = F_from_phi(n, lambda, adj);
  PolyZ lhs = F * Rational(2 * n) - F.times_z() * Rational(lambda);
  PolyZ dF = F.derivative();
  lhs += dF.times_z().times_z() + dF.times_z();  // z(z+1) F'
  PolyZ rhs = F_from_phi(n - 1, lambda - 1, adj) + F_from_phi(n - 1, lambda, adj).derivative();
  std::ostringstream where;
  where << "(n=" << n << ", lambda=" << lambda << ")";
  return report_poly_mismatch(lhs, rhs, where.str(), diag);
}

BivariatePoly F_n_bivariate(long n, const PhiAdjoint& adj) {
  BivariatePoly f;
  if (n < 0) return f;
  f.by_y.resize(n + 1);
  for (long lambda = 0; lambda <= n; ++lambda) f.by_y[lambda] = F_from_phi(n, lambda, adj);
  return f;
}

bool verify_pde_n(long n, const PhiAdjoint& adj, std::string* diag) {
  BivariatePoly Fn = F_n_bivariate(n, adj);
  BivariatePoly Fp = F_n_bivariate(n - 1, adj);
  for (long lambda = 0; lambda <= std::max(n, 0L); ++lambda) {
    PolyZ f = Fn.coeff_y(lambda);
    PolyZ df = f.derivative();
    PolyZ lhs = f * Rational(2 * n) + df.times_z().times_z() + df.times_z() -
                f.times_z() * Rational(lambda);
    PolyZ rhs = Fp.coeff_y(lambda - 1) + Fp.coeff_y(lambda).derivative();
    std::ostringstream where;
    where << "(n=" << n << ", y^" << lambda << ")";
    if (!report_poly_mismatch(lhs, rhs, where.str(), diag)) return false;
  }
  return true;
}

TriSeries F_truncated(long K) {
  if (K < 0) throw std::invalid_argument("F_truncated: negative order");
  // u = y * sum_{k>=1} f_k(z) x^k has no constant term in x, so exp(u)
  // truncates after K powers.
  TriSeries u(K);
  for (long k = 1; k <= K; ++k) u.set_coeff(k, 1, f_component(k));
  TriSeries F(K);
  F.set_coeff(0, 0, PolyZ::constant(1));
  TriSeries power(K);
  power.set_coeff(0, 0, PolyZ::constant(1));
  Rational inv_fact = 1;
  for (long m = 1; m <= K; ++m) {
    power = power * u;
    inv_fact /= Rational(m);
    TriSeries term = power;
    term *= inv_fact;
    F += term;
  }
  return F;
}

bool verify_pde_full(const TriSeries& F, std::string* diag) {
  long K = F.order();
  for (long n = 0; n <= K; ++n)
    for (long lambda = 0; lambda <= n; ++lambda) {
      PolyZ f = F.coeff(n, lambda);
      PolyZ df = f.derivative();
      PolyZ lhs = f * Rational(2 * n) + df.times_z().times_z() + df.times_z() -
                  f.times_z() * Rational(lambda);
      PolyZ rhs = F.coeff(n - 1, lambda - 1) + F.coeff(n - 1, lambda).derivative();
      std::ostringstream where;
      where << "(x^" << n << ", y^" << lambda << ")";
      if (!report_poly_mismatch(lhs, rhs, where.str(), diag)) return false;
    }
  return true;
}

bool verify_pde_full(long K, std::string* diag) { return verify_pde_full(F_truncated(K), diag); }

}  // namespace triarray
