#pragma once

#include "triarray/rational.hpp"

namespace triarray {

Int factorial(long n);  // n >= 0

// 0 outside 0 <= k <= n.
Int binomial(long n, long k);

// s*(s-1)*...*(s-k+1); the empty product 1 for k = 0.  Requires k >= 0.
Int falling_factorial(const Int& s, long k);
Int falling_factorial(long s, long k);

// base^e with e >= 0; 0^0 = 1.
Int int_pow(const Int& base, long e);
Int int_pow(long base, long e);

// Stirling number of the second kind S(r, m) via the triangle
// S(n,k) = k*S(n-1,k) + S(n-1,k-1); S(0,0) = 1, 0 when m > r.
Int stirling2(long r, long m);

}  // namespace triarray
