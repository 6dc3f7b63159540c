#include "triarray/phi_field.hpp"

#include "triarray/combinatorics.hpp"
#include "triarray/laurent.hpp"
#include "triarray/power_series.hpp"

#include <sstream>
#include <stdexcept>

namespace triarray {

namespace {

Rational layer_at(const PhiLayer& layer, long n, long j, long k) {
  if (j < 0 || k < 0 || k > j || j > n) return Rational(0);
  return layer[j][k];
}

// Falling factorial with out-of-range depth reading as zero; depths past a
// non-negative integer base vanish on their own.
Int ff_depth(long m, long d) { return d < 0 ? Int(0) : falling_factorial(m, d); }

void check_layer_structure(const PhiLayer& layer, long n) {
  for (long j = 0; j <= n; ++j) {
    for (long k = 0; k <= j; ++k) {
      const Rational& v = layer[j][k];
      if (v < 0)
        throw std::logic_error("build_phi: negative entry at (" + std::to_string(n) + "," +
                               std::to_string(j) + "," + std::to_string(k) + ") = " + v.get_str());
      bool must_vanish = (n >= 1 && j == n && k == 0);
      if (must_vanish && v != 0)
        throw std::logic_error("build_phi: expected zero at (" + std::to_string(n) + "," +
                               std::to_string(n) + ",0), got " + v.get_str());
      if (!must_vanish && n >= 1 && v == 0)
        throw std::logic_error("build_phi: expected positive entry at (" + std::to_string(n) +
                               "," + std::to_string(j) + "," + std::to_string(k) + ")");
    }
  }
}

}  // namespace

Rational PhiField::at(long n, long j, long k) const {
  if (n < 0 || j < 0 || k < 0 || k > j || j > n) return Rational(0);
  if (n > n_max()) throw std::out_of_range("PhiField::at: layer " + std::to_string(n) + " not built");
  return layers_[n][j][k];
}

Rational PhiAdjoint::at(long n, long lambda, long k) const {
  if (n < 0 || lambda < 0 || k < 0 || k > lambda || lambda > n) return Rational(0);
  if (n > n_max())
    throw std::out_of_range("PhiAdjoint::at: layer " + std::to_string(n) + " not built");
  return layers_[n][lambda][k];
}

PhiField build_phi(long n_max) {
  if (n_max < 0) throw std::invalid_argument("build_phi: negative n_max");
  std::vector<PhiLayer> layers(n_max + 1);
  layers[0] = {{Rational(1)}};
  for (long n = 1; n <= n_max; ++n) {
    PhiLayer layer(n + 1);
    for (long j = 0; j <= n; ++j) layer[j].assign(j + 1, Rational(0));
    const PhiLayer& prev = layers[n - 1];
    // Row j depends on row j-1 of the same layer, so rows fill in order;
    // k runs downward within a row for a fixed, reproducible sweep.
    for (long j = 0; j <= n; ++j) {
      for (long k = j; k >= 0; --k) {
        Rational rhs = Rational(n - (j - 1)) * layer_at(layer, n, j - 1, k - 1) +
                       Rational(k + 1) * layer_at(prev, n - 1, j, k + 1) +
                       layer_at(prev, n - 1, j, k);
        long div = 2 * n + k;
        if (div == 0) throw std::logic_error("build_phi: zero divisor off the seed");
        layer[j][k] = rhs / Rational(div);
      }
    }
    check_layer_structure(layer, n);
    layers[n] = std::move(layer);
  }
  return PhiField(std::move(layers));
}

Rational closed_form_diag(long n, long k) {
  if (k < 0 || k > n) throw std::invalid_argument("closed_form_diag: need 0 <= k <= n");
  return rat(1, int_pow(2, n) * factorial(n - k) * factorial(k) * int_pow(3, k));
}

std::pair<Rational, Rational> closed_form_sub(long n) {
  if (n < 1) throw std::invalid_argument("closed_form_sub: need n >= 1");
  return {rat(1, factorial(2 * n)), rat(1, factorial(2 * n + 1))};
}

PhiAdjoint adjoint(const PhiField& f) {
  std::vector<PhiLayer> layers(f.n_max() + 1);
  for (long n = 0; n <= f.n_max(); ++n) {
    PhiLayer layer(n + 1);
    for (long lambda = 0; lambda <= n; ++lambda) {
      layer[lambda].resize(lambda + 1);
      for (long k = 0; k <= lambda; ++k) layer[lambda][k] = f.at(n, n - lambda + k, k);
    }
    layers[n] = std::move(layer);
  }
  return PhiAdjoint(std::move(layers));
}

PhiField adjoint(const PhiAdjoint& a) {
  std::vector<PhiLayer> layers(a.n_max() + 1);
  for (long n = 0; n <= a.n_max(); ++n) {
    PhiLayer layer(n + 1);
    for (long j = 0; j <= n; ++j) {
      layer[j].resize(j + 1);
      for (long k = 0; k <= j; ++k) layer[j][k] = a.at(n, n - j + k, k);
    }
    layers[n] = std::move(layer);
  }
  return PhiField(std::move(layers));
}

Rational b_from_phi(long s, long r, long n, const PhiField& f) {
  if (s < 0 || r < 0) throw std::invalid_argument("b_from_phi: negative s or r");
  Rational acc = 0;
  for (long j = 0; j <= n; ++j)
    for (long k = 0; k <= j; ++k) {
      Int a = ff_depth(s, r - n - j);
      if (a == 0) continue;
      Int b = falling_factorial(Int(r), 2 * n + k);
      if (b == 0) continue;
      acc += Rational(a * b) * f.at(n, j, k);
    }
  return acc;
}

bool stirling_check(long i, long r, const PhiField& f, std::string* diag) {
  if (i < 0 || i > r) throw std::invalid_argument("stirling_check: need 0 <= i <= r");
  Rational lhs = 0;
  for (long j = 0; j <= std::min(r, 2 * i); ++j) {
    Rational inner = 0;
    for (long n = 0; n <= i; ++n) inner += f.at(n, i - n, j - 2 * n);
    lhs += Rational(falling_factorial(Int(r), j)) * inner;
  }
  Int rhs = stirling2(r, r - i);
  if (lhs == Rational(rhs)) return true;
  if (diag) {
    std::ostringstream os;
    os << "at (i=" << i << ", r=" << r << "): phi sum=" << lhs << " S(r,r-i)=" << rhs;
    *diag = os.str();
  }
  return false;
}

bool cosh_relation_check(long s, long n, const PhiField& f, std::string* diag) {
  if (s < 0 || n < 0) throw std::invalid_argument("cosh_relation_check: negative index");
  Rational lhs = 0;
  for (long j = 0; j <= n; ++j)
    lhs += Rational(falling_factorial(Int(s), n - j)) * f.at(n, j, 0);
  Rational mu_lattice = moment_bruteforce(s, 2 * n);
  Rational mu_series = cosh_pow_derivative(s, 2 * n);
  Rational rhs = mu_lattice / Rational(factorial(2 * n));
  if (mu_lattice == mu_series && lhs == rhs) return true;
  if (diag) {
    std::ostringstream os;
    os << "at (s=" << s << ", n=" << n << "): phi sum=" << lhs
       << " lattice moment/(2n)!=" << rhs
       << " series moment/(2n)!=" << mu_series / Rational(factorial(2 * n));
    *diag = os.str();
  }
  return false;
}

}  // namespace triarray
