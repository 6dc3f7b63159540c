#include "triarray/triangles.hpp"

#include <sstream>

namespace triarray {

namespace {

// (s - c) * p for a symbolic entry, staying in the falling-factorial basis.
FFPoly mul_s_minus(const FFPoly& p, long c) {
  FFPoly q = ff_multiply_by_s(p);
  q -= p * Int(c);
  return q;
}

}  // namespace

ATriangle<Int> build_a_numeric(long s, long r_max) {
  ATriangle<Int> t;
  t.rows.resize(r_max + 1);
  t.rows[0] = {Int(1)};
  for (long r = 0; r < r_max; ++r) {
    const auto& cur = t.rows[r];
    auto at = [&](long j) { return (j >= 0 && j <= r) ? cur[j] : Int(0); };
    auto& next = t.rows[r + 1];
    next.resize(r + 2);
    for (long j = 0; j <= r + 1; ++j)
      next[j] = at(j - 1) * (s - (j - 1)) + at(j + 1) * (j + 1);
  }
  return t;
}

ATriangle<FFPoly> build_a_symbolic(long r_max) {
  ATriangle<FFPoly> t;
  t.rows.resize(r_max + 1);
  t.rows[0] = {FFPoly::constant(1)};
  for (long r = 0; r < r_max; ++r) {
    const auto& cur = t.rows[r];
    auto at = [&](long j) { return (j >= 0 && j <= r) ? cur[j] : FFPoly(); };
    auto& next = t.rows[r + 1];
    next.resize(r + 2);
    for (long j = 0; j <= r + 1; ++j)
      next[j] = mul_s_minus(at(j - 1), j - 1) + at(j + 1) * Int(j + 1);
  }
  return t;
}

BTriangle<Int> build_b_numeric(long s, long r_max) {
  BTriangle<Int> t;
  t.rows.resize(r_max + 1);
  t.rows[0] = {Int(1)};
  for (long r = 0; r < r_max; ++r) {
    const auto& cur = t.rows[r];
    auto at = [&](long n) { return (n >= 0 && n <= r / 2) ? cur[n] : Int(0); };
    auto& next = t.rows[r + 1];
    next.resize((r + 1) / 2 + 1);
    for (long n = 0; n <= (r + 1) / 2; ++n)
      next[n] = at(n) * (s - (r - 2 * n)) + at(n - 1) * (r - 2 * (n - 1));
  }
  return t;
}

BTriangle<FFPoly> build_b_symbolic(long r_max) {
  BTriangle<FFPoly> t;
  t.rows.resize(r_max + 1);
  t.rows[0] = {FFPoly::constant(1)};
  for (long r = 0; r < r_max; ++r) {
    const auto& cur = t.rows[r];
    auto at = [&](long n) { return (n >= 0 && n <= r / 2) ? cur[n] : FFPoly(); };
    auto& next = t.rows[r + 1];
    next.resize((r + 1) / 2 + 1);
    for (long n = 0; n <= (r + 1) / 2; ++n)
      next[n] = mul_s_minus(at(n), r - 2 * n) + at(n - 1) * Int(r - 2 * (n - 1));
  }
  return t;
}

namespace {

template <class Triangle>
bool check_numeric_sums(const Triangle& t, long s, std::string* diag) {
  for (long r = 0; r <= t.rmax(); ++r) {
    Int sum = 0;
    for (const auto& e : t.rows[r]) sum += e;
    Int want = int_pow(s, r);
    if (sum != want) {
      if (diag) {
        std::ostringstream os;
        os << "row r=" << r << " at s=" << s << ": sum=" << sum << " expected=" << want;
        *diag = os.str();
      }
      return false;
    }
  }
  return true;
}

template <class Triangle>
bool check_symbolic_sums(const Triangle& t, std::string* diag) {
  for (long r = 0; r <= t.rmax(); ++r) {
    FFPoly sum;
    for (const auto& e : t.rows[r]) sum += e;
    FFPoly want = power_to_ff(r);
    if (sum != want) {
      if (diag) {
        std::ostringstream os;
        os << "row r=" << r << ": sum=" << sum << " expected=" << want;
        *diag = os.str();
      }
      return false;
    }
  }
  return true;
}

}  // namespace

bool check_row_sums(const ATriangle<Int>& t, long s, std::string* diag) {
  return check_numeric_sums(t, s, diag);
}

bool check_row_sums(const BTriangle<Int>& t, long s, std::string* diag) {
  return check_numeric_sums(t, s, diag);
}

bool check_row_sums(const ATriangle<FFPoly>& t, std::string* diag) {
  return check_symbolic_sums(t, diag);
}

bool check_row_sums(const BTriangle<FFPoly>& t, std::string* diag) {
  return check_symbolic_sums(t, diag);
}

Int a0_column(long s, long r) { return build_a_numeric(s, r).at(r, 0); }

}  // namespace triarray
