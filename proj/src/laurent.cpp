#include "triarray/laurent.hpp"

#include "triarray/combinatorics.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace triarray {

LaurentPoly LaurentPoly::term(long exponent, const Rational& c) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

Rational LaurentPoly::coeff(long exponent) const {
  auto it = c_.find(exponent);
  return it == c_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(long exponent, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = c_.emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    c_.clear();
  } else {
    for (auto& [e, v] : c_) v *= c;
  }
  return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly p;
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : o.c_) p.add_term(e1 + e2, c1 * c2);
  return p;
}

LaurentPoly LaurentPoly::pow(long e) const {
  if (e < 0) throw std::invalid_argument("LaurentPoly::pow: negative exponent");
  LaurentPoly p = one();
  for (long i = 0; i < e; ++i) p = p * *this;
  return p;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [e, c] : p.coeffs()) {
    if (!first) os << " + ";
    first = false;
    os << c << "*x^" << e;
  }
  return os;
}

LaurentPoly g_poly() {
  LaurentPoly p;
  p.add_term(1, rat(1, 2));
  p.add_term(-1, rat(1, 2));
  return p;
}

LaurentPoly h_poly() {
  LaurentPoly p;
  p.add_term(1, rat(1, 2));
  p.add_term(-1, rat(-1, 2));
  return p;
}

LaurentPoly G(long s, long j) {
  if (s < 0 || j < 0 || j > s)
    throw std::invalid_argument("G: need 0 <= j <= s, got s=" + std::to_string(s) +
                                " j=" + std::to_string(j));
  return g_poly().pow(s - j) * h_poly().pow(j);
}

LaurentPoly euler_op(const LaurentPoly& p, long r) {
  if (r < 0) throw std::invalid_argument("euler_op: negative order");
  LaurentPoly q;
  for (const auto& [e, c] : p.coeffs()) {
    // j^r with 0^0 = 1; negative exponents via |j|^r and the sign of j^r.
    Int w = int_pow(Int(e < 0 ? -e : e), r);
    if (e < 0 && r % 2 == 1) w = -w;
    q.add_term(e, c * Rational(w));
  }
  return q;
}

bool verify_G_expansion(long s, long r, const std::vector<Int>& a_row, std::string* diag) {
  if (static_cast<long>(a_row.size()) != r + 1)
    throw std::invalid_argument("verify_G_expansion: row must have r+1 entries");
  // Terms with j > s fall outside the polynomial model; they only appear
  // with zero coefficient (the recurrence kills them through (s)_j).
  for (long j = s + 1; j <= r; ++j) {
    if (a_row[j] != 0) {
      if (diag)
        *diag = "coefficient at j=" + std::to_string(j) + " is " + to_string(a_row[j]) +
                ", expected 0 for j > s=" + std::to_string(s);
      return false;
    }
  }
  LaurentPoly lhs = euler_op(G(s, 0), r);
  LaurentPoly rhs;
  for (long j = 0; j <= std::min(r, s); ++j) {
    if (a_row[j] == 0) continue;
    rhs += G(s, j) * Rational(a_row[j]);
  }
  LaurentPoly delta = lhs - rhs;
  if (delta.is_zero()) return true;
  if (diag) {
    long e = delta.coeffs().begin()->first;
    std::ostringstream os;
    os << "first mismatch at exponent " << e << ": lhs=" << lhs.coeff(e) << " rhs=" << rhs.coeff(e);
    *diag = os.str();
  }
  return false;
}

std::map<long, Rational> centered_binomial_coeffs(long s) {
  if (s < 0) throw std::invalid_argument("centered_binomial_coeffs: negative size");
  return G(s, 0).coeffs();
}

Rational moment_bruteforce(long s, long r) {
  Rational mu = 0;
  for (const auto& [v, c] : centered_binomial_coeffs(s)) {
    Int w = int_pow(Int(v < 0 ? -v : v), r);
    if (v < 0 && r % 2 == 1) w = -w;
    mu += c * Rational(w);
  }
  return mu;
}

}  // namespace triarray
