#pragma once

#include "triarray/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace triarray {

using PhiLayer = std::vector<std::vector<Rational>>;

// Three-dimensional triangular field: for each n a lower-triangular matrix
// of rationals indexed (j, k) with 0 <= k <= j <= n.  Entries outside the
// triangle read as zero; layers beyond n_max are an error.
class PhiField {
 public:
  explicit PhiField(std::vector<PhiLayer> layers) : layers_(std::move(layers)) {}

  long n_max() const { return static_cast<long>(layers_.size()) - 1; }
  Rational at(long n, long j, long k) const;
  const std::vector<PhiLayer>& layers() const { return layers_; }

 private:
  std::vector<PhiLayer> layers_;
};

// Adjoint indexing of the same field: row lambda holds the (n - lambda)-th
// diagonal of the original layer.
class PhiAdjoint {
 public:
  explicit PhiAdjoint(std::vector<PhiLayer> layers) : layers_(std::move(layers)) {}

  long n_max() const { return static_cast<long>(layers_.size()) - 1; }
  Rational at(long n, long lambda, long k) const;
  const std::vector<PhiLayer>& layers() const { return layers_; }

 private:
  std::vector<PhiLayer> layers_;
};

// Builds layers 0..n_max from
//   (2n+k) phi_{n,j,k} = (n-(j-1)) phi_{n,j-1,k-1} + (k+1) phi_{n-1,j,k+1} + phi_{n-1,j,k}
// with seed phi_{0,0,0} = 1.  Aborts with std::logic_error if a layer
// violates the expected sign structure (all entries >= 0; entries with
// j < n or k >= 1 strictly positive; phi_{n,n,0} = 0 for n >= 1).
PhiField build_phi(long n_max);

// phi_{n,k,k} = 1 / (2^n (n-k)! k! 3^k), 0 <= k <= n.
Rational closed_form_diag(long n, long k);

// (phi_{n,n-1,0}, phi_{n,n,1}) = (1/(2n)!, 1/(2n+1)!), n >= 1.
std::pair<Rational, Rational> closed_form_sub(long n);

// phiT_{n,lambda,k} = phi_{n,n-lambda+k,k}; applying it twice is the identity.
PhiAdjoint adjoint(const PhiField& f);
PhiField adjoint(const PhiAdjoint& a);

// The transformation sum_{0<=k<=j<=n} (s)_{r-n-j} (r)_{2n+k} phi_{n,j,k};
// equals B_{s,r,n}, and vanishes automatically outside 0 <= n <= r/2.
// Falling factorials of negative depth count as zero.
Rational b_from_phi(long s, long r, long n, const PhiField& f);

// sum_j (r)_j [ sum_n phi_{n,i-n,j-2n} ] == S(r, r-i), 0 <= i <= r.
bool stirling_check(long i, long r, const PhiField& f, std::string* diag = nullptr);

// sum_{0<=j<=n} (s)_{n-j} phi_{n,j,0} == mu_{s,2n} / (2n)!, with the moment
// taken from both the lattice sum and the series derivative (they must agree).
bool cosh_relation_check(long s, long n, const PhiField& f, std::string* diag = nullptr);

}  // namespace triarray
