#include "triarray/combinatorics.hpp"

#include <stdexcept>
#include <vector>

namespace triarray {

Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

Int falling_factorial(const Int& s, long k) {
  if (k < 0) throw std::invalid_argument("falling_factorial: negative depth");
  Int p = 1;
  for (long i = 0; i < k; ++i) p *= s - i;
  return p;
}

Int falling_factorial(long s, long k) { return falling_factorial(Int(s), k); }

Int int_pow(const Int& base, long e) {
  if (e < 0) throw std::invalid_argument("int_pow: negative exponent");
  Int p;
  mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return p;
}

Int int_pow(long base, long e) { return int_pow(Int(base), e); }

Int stirling2(long r, long m) {
  if (r < 0 || m < 0) throw std::invalid_argument("stirling2: negative index");
  if (m > r) return 0;
  // One row of the S(n,k) triangle at a time.
  std::vector<Int> row{1};  // S(0,0)
  for (long n = 1; n <= r; ++n) {
    std::vector<Int> next(n + 1);
    next[0] = 0;
    for (long k = 1; k <= n; ++k)
      next[k] = k * (k < n ? row[k] : Int(0)) + row[k - 1];
    row = std::move(next);
  }
  return row[m];
}

}  // namespace triarray
