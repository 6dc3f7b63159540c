#include "triarray/suites.hpp"

#include "triarray/combinatorics.hpp"
#include "triarray/genfunc.hpp"
#include "triarray/laurent.hpp"
#include "triarray/partitions.hpp"
#include "triarray/phi_field.hpp"
#include "triarray/power_series.hpp"
#include "triarray/triangles.hpp"

#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace triarray::suites {

namespace {

template <class... Ts>
std::string cat(const Ts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

void count_block_partitions(long next, long blocks, long r, std::vector<Int>& by_blocks) {
  if (next == r) {
    by_blocks[blocks] += 1;
    return;
  }
  // Element `next` joins one of the existing blocks or opens a new one.
  for (long b = 0; b < blocks; ++b) count_block_partitions(next + 1, blocks, r, by_blocks);
  count_block_partitions(next + 1, blocks + 1, r, by_blocks);
}

}  // namespace

Int stirling2_bruteforce(long r, long m) {
  if (m < 0 || m > r) return 0;
  if (r == 0) return m == 0 ? 1 : 0;
  std::vector<Int> by_blocks(r + 1, Int(0));
  count_block_partitions(1, 1, r, by_blocks);  // element 0 opens block 0
  return by_blocks[m];
}

Int partition_total_bruteforce(long n) {
  // Count by largest allowed part, one part size at a time.
  std::vector<Int> ways(n + 1, Int(0));
  ways[0] = 1;
  for (long part = 1; part <= n; ++part)
    for (long m = part; m <= n; ++m) ways[m] += ways[m - part];
  return ways[n];
}

namespace {

// ---- rowsum (triangle invariants) -------------------------------------------

std::vector<IdentityResult> suite_rowsum(const Bounds& b) {
  IdentityResult rows{.name = "rowsum", .unit = "rows"};
  for (long s = 0; s <= b.smax; ++s) {
    auto a = build_a_numeric(s, b.rmax);
    auto bb = build_b_numeric(s, b.rmax);
    for (long r = 0; r <= b.rmax; ++r) {
      Int want = int_pow(s, r);
      Int sum_a = 0, sum_b = 0;
      for (const auto& e : a.rows[r]) sum_a += e;
      for (const auto& e : bb.rows[r]) sum_b += e;
      rows.record(sum_a == want && sum_b == want,
                  cat("at (s=", s, ", r=", r, "): A sum=", sum_a, " B sum=", sum_b,
                      " expected=", want));
    }
  }

  IdentityResult symbolic{.name = "rowsum/symbolic", .unit = "rows"};
  auto as = build_a_symbolic(b.rmax);
  auto bs = build_b_symbolic(b.rmax);
  for (long r = 0; r <= b.rmax; ++r) {
    FFPoly sum_a, sum_b;
    for (const auto& e : as.rows[r]) sum_a += e;
    for (const auto& e : bs.rows[r]) sum_b += e;
    FFPoly want = power_to_ff(r);
    symbolic.record(sum_a == want && sum_b == want,
                    cat("at r=", r, ": A sum=", sum_a, " B sum=", sum_b, " expected=", want));
  }

  IdentityResult coherence{.name = "rowsum/coherence", .unit = "entries"};
  for (long s = 0; s <= b.smax; ++s) {
    auto a = build_a_numeric(s, b.rmax);
    for (long r = 0; r <= b.rmax; ++r)
      for (long j = 0; j <= r; ++j)
        coherence.record(ff_eval(as.at(r, j), s) == a.at(r, j),
                         cat("at (s=", s, ", r=", r, ", j=", j,
                             "): symbolic=", ff_eval(as.at(r, j), s), " numeric=", a.at(r, j)));
  }

  IdentityResult parity{.name = "rowsum/parity", .unit = "entries"};
  for (long r = 0; r <= b.rmax; ++r)
    for (long j = 0; j <= r; ++j) {
      if ((r - j) % 2 == 0) continue;
      parity.record(as.at(r, j).is_zero(),
                    cat("at (r=", r, ", j=", j, "): entry=", as.at(r, j), " expected 0"));
    }

  IdentityResult roundtrip{.name = "rowsum/condense-expand", .unit = "entries"};
  for (long s = 0; s <= std::min(b.smax, 3L); ++s) {
    auto a = build_a_numeric(s, b.rmax);
    auto bb = build_b_numeric(s, b.rmax);
    auto condensed = condense(a);
    auto expanded = expand(bb);
    for (long r = 0; r <= b.rmax; ++r) {
      for (long n = 0; n <= r / 2; ++n)
        roundtrip.record(condensed.at(r, n) == bb.at(r, n),
                         cat("at (s=", s, ", r=", r, ", n=", n,
                             "): condensed=", condensed.at(r, n), " recurrence=", bb.at(r, n)));
      for (long j = 0; j <= r; ++j)
        roundtrip.record(expanded.at(r, j) == a.at(r, j),
                         cat("at (s=", s, ", r=", r, ", j=", j, "): expanded=", expanded.at(r, j),
                             " recurrence=", a.at(r, j)));
    }
  }

  return {rows, symbolic, coherence, parity, roundtrip};
}

// ---- moments -----------------------------------------------------------------

std::vector<IdentityResult> suite_moments(const Bounds& b) {
  IdentityResult triple{.name = "moments/triple-agreement", .unit = "pairs"};
  for (long s = 0; s <= b.smax; ++s) {
    auto a = build_a_numeric(s, b.rmax);
    for (long r = 0; r <= b.rmax; ++r) {
      Rational lattice = moment_bruteforce(s, r);
      Rational series = cosh_pow_derivative(s, r);
      Rational column(a.at(r, 0));
      bool ok = lattice == series && series == column && lattice.get_den() == 1 && lattice >= 0;
      triple.record(ok, cat("at (s=", s, ", r=", r, "): A column=", column, " lattice=", lattice,
                            " series=", series));
    }
  }

  IdentityResult odd{.name = "moments/odd-vanish", .unit = "pairs"};
  for (long s = 0; s <= 10; ++s)
    for (long r = 1; r <= 11; r += 2)
      odd.record(moment_bruteforce(s, r) == 0,
                 cat("at (s=", s, ", r=", r, "): moment=", moment_bruteforce(s, r)));

  return {triple, odd};
}

// ---- laurent ------------------------------------------------------------------

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  return rat(num(rng), den(rng));
}

LaurentPoly random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<long> nterms(1, 6), expo(-6, 6);
  LaurentPoly p;
  long n = nterms(rng);
  for (long i = 0; i < n; ++i) p.add_term(expo(rng), random_rational(rng));
  return p;
}

std::vector<IdentityResult> suite_laurent(const Bounds& b) {
  IdentityResult expansion{.name = "laurent/G-expansion", .unit = "pairs"};
  IdentityResult fallback{.name = "laurent/G-expansion-series", .unit = "pairs"};
  for (long s = 0; s <= b.smax; ++s) {
    auto a = build_a_numeric(s, b.rmax);
    for (long r = 0; r <= b.rmax; ++r) {
      std::string diag;
      if (r <= s) {
        bool ok = verify_G_expansion(s, r, a.rows[r], &diag);
        expansion.record(ok, cat("at (s=", s, ", r=", r, "): ", diag));
      } else {
        // G_{s,j} with j > s leaves the polynomial model; check the same
        // identity on truncated series instead.
        bool ok = verify_G_expansion_series(s, r, a.rows[r], std::max(r, 12L), &diag);
        fallback.record(ok, cat("at (s=", s, ", r=", r, "): ", diag));
      }
    }
  }

  std::mt19937 rng(0x5eed);
  IdentityResult product{.name = "laurent/euler-product-rule", .unit = "samples"};
  for (int i = 0; i < 100; ++i) {
    LaurentPoly p = random_laurent(rng), q = random_laurent(rng);
    LaurentPoly lhs = euler_op(p * q, 1);
    LaurentPoly rhs = euler_op(p, 1) * q + p * euler_op(q, 1);
    product.record(lhs == rhs, cat("sample ", i, ": p=", p, " q=", q));
  }

  IdentityResult compose{.name = "laurent/euler-composition", .unit = "samples"};
  std::uniform_int_distribution<long> ord(0, 5);
  for (int i = 0; i < 100; ++i) {
    LaurentPoly p = random_laurent(rng);
    long x = ord(rng), y = ord(rng);
    compose.record(euler_op(euler_op(p, x), y) == euler_op(p, x + y),
                   cat("sample ", i, ": p=", p, " a=", x, " b=", y));
  }

  IdentityResult cbd{.name = "laurent/centered-binomial", .unit = "sizes"};
  for (long s = 0; s <= 16; ++s) {
    auto coeffs = centered_binomial_coeffs(s);
    Rational total = 0;
    bool symmetric = true, support = true;
    for (const auto& [v, c] : coeffs) {
      total += c;
      if (!coeffs.count(-v) || c != coeffs.at(-v)) symmetric = false;
      if ((v + s) % 2 != 0 || v < -s || v > s) support = false;
      if (c != rat(binomial(s, (v + s) / 2), int_pow(2, s))) support = false;
    }
    cbd.record(total == 1 && symmetric && support,
               cat("at s=", s, ": total=", total, " symmetric=", symmetric,
                   " support=", support));
  }

  IdentityResult step{.name = "laurent/G-step", .unit = "pairs"};
  for (long s = 1; s <= 8; ++s)
    for (long j = 1; j < s; ++j) {
      LaurentPoly lhs = euler_op(G(s, j), 1);
      LaurentPoly rhs = G(s, j - 1) * Rational(j) + G(s, j + 1) * Rational(s - j);
      step.record(lhs == rhs, cat("at (s=", s, ", j=", j, "): lhs=", lhs, " rhs=", rhs));
    }

  return {expansion, fallback, product, compose, cbd, step};
}

// ---- phi-closed ------------------------------------------------------------

std::vector<IdentityResult> suite_phi_closed(const Bounds& b) {
  PhiField f = build_phi(b.nmax);

  IdentityResult diag_id{.name = "phi-closed/diagonal", .unit = "entries"};
  for (long n = 0; n <= b.nmax; ++n)
    for (long k = 0; k <= n; ++k)
      diag_id.record(f.at(n, k, k) == closed_form_diag(n, k),
                     cat("at (n=", n, ", k=", k, "): built=", f.at(n, k, k),
                         " closed=", closed_form_diag(n, k)));

  IdentityResult sub{.name = "phi-closed/subdiagonal", .unit = "entries"};
  for (long n = 1; n <= b.nmax; ++n) {
    auto [lo, hi] = closed_form_sub(n);
    sub.record(f.at(n, n - 1, 0) == lo,
               cat("at (", n, ",", n - 1, ",0): built=", f.at(n, n - 1, 0), " closed=", lo));
    sub.record(f.at(n, n, 1) == hi,
               cat("at (", n, ",", n, ",1): built=", f.at(n, n, 1), " closed=", hi));
  }

  IdentityResult delta{.name = "phi-closed/nn0-delta", .unit = "entries"};
  for (long n = 0; n <= b.nmax; ++n)
    delta.record(f.at(n, n, 0) == (n == 0 ? 1 : 0),
                 cat("at (", n, ",", n, ",0): built=", f.at(n, n, 0)));

  IdentityResult involution{.name = "phi-closed/adjoint-involution", .unit = "entries"};
  PhiField back = adjoint(adjoint(f));
  for (long n = 0; n <= b.nmax; ++n)
    for (long j = 0; j <= n; ++j)
      for (long k = 0; k <= j; ++k)
        involution.record(back.at(n, j, k) == f.at(n, j, k),
                          cat("at (", n, ",", j, ",", k, "): twice-adjoint=", back.at(n, j, k),
                              " original=", f.at(n, j, k)));

  return {diag_id, sub, delta, involution};
}

// ---- phi-transform -----------------------------------------------------------

std::vector<IdentityResult> suite_phi_transform(const Bounds& b) {
  PhiField f = build_phi(b.rmax / 2 + 1);
  IdentityResult xform{.name = "phi-transform", .unit = "entries"};
  for (long s = 0; s <= b.smax; ++s) {
    auto bt = build_b_numeric(s, b.rmax);
    for (long r = 0; r <= b.rmax; ++r)
      for (long n = 0; n <= r / 2 + 1; ++n) {
        Rational got = b_from_phi(s, r, n, f);
        Rational want = n <= r / 2 ? Rational(bt.at(r, n)) : Rational(0);
        xform.record(got == want, cat("at (s=", s, ", r=", r, ", n=", n, "): transform=", got,
                                      " recurrence=", want));
      }
  }
  return {xform};
}

// ---- stirling -------------------------------------------------------------------

std::vector<IdentityResult> suite_stirling(const Bounds& b) {
  PhiField f = build_phi(b.rmax);
  IdentityResult phi_id{.name = "stirling/phi-identity", .unit = "pairs"};
  for (long r = 0; r <= b.rmax; ++r)
    for (long i = 0; i <= r; ++i) {
      std::string diag;
      bool ok = stirling_check(i, r, f, &diag);
      phi_id.record(ok, diag);
    }

  IdentityResult oracle{.name = "stirling/set-partition-oracle", .unit = "pairs"};
  for (long r = 0; r <= std::min(b.rmax, 10L); ++r)
    for (long m = 0; m <= r; ++m)
      oracle.record(stirling2(r, m) == stirling2_bruteforce(r, m),
                    cat("at (r=", r, ", m=", m, "): recurrence=", stirling2(r, m),
                        " enumeration=", stirling2_bruteforce(r, m)));

  return {phi_id, oracle};
}

// ---- cosh -----------------------------------------------------------------------

std::vector<IdentityResult> suite_cosh(const Bounds& b) {
  PhiField f = build_phi(b.nmax);
  IdentityResult relation{.name = "cosh/phi-relation", .unit = "pairs"};
  for (long s = 0; s <= b.smax; ++s)
    for (long n = 0; n <= b.nmax; ++n) {
      std::string diag;
      bool ok = cosh_relation_check(s, n, f, &diag);
      relation.record(ok, diag);
    }

  IdentityResult dual{.name = "cosh/series-dual-route", .unit = "series"};
  for (long s = 0; s <= 4; ++s) {
    auto mgf = cosh_pow_series(s, 13);
    auto direct = cosh_pow_series_direct(s, 13);
    dual.record(mgf == direct, cat("at s=", s, ": exponential-sum and powered routes differ"));
  }

  return {relation, dual};
}

// ---- genfunc-closed ---------------------------------------------------------------

std::vector<IdentityResult> suite_genfunc_closed(const Bounds& b) {
  PhiField f = build_phi(b.nmax + 2);
  PhiAdjoint adj = adjoint(f);

  IdentityResult closed{.name = "genfunc-closed/partition-product", .unit = "pairs"};
  for (long n = 0; n <= b.nmax; ++n)
    for (long lambda = 0; lambda <= n; ++lambda) {
      PolyZ lhs = F_from_phi(n, lambda, adj);
      PolyZ rhs = F_closed(n, lambda);
      closed.record(lhs == rhs, cat("at (n=", n, ", lambda=", lambda, "): recurrence=", lhs,
                                    " closed=", rhs));
    }

  IdentityResult constant{.name = "genfunc-closed/constant-term", .unit = "pairs"};
  for (long n = 0; n <= b.nmax + 2; ++n)
    for (long lambda = 0; lambda <= n; ++lambda) {
      Rational got = phi_from_partitions(n, lambda);
      Rational want = f.at(n, n - lambda, 0);
      constant.record(got == want, cat("at (n=", n, ", lambda=", lambda, "): partition sum=", got,
                                       " phi=", want));
    }

  IdentityResult integrity{.name = "genfunc-closed/partition-integrity", .unit = "partitions"};
  IdentityResult counts{.name = "genfunc-closed/partition-counts", .unit = "pairs"};
  for (long n = 0; n <= 20; ++n) {
    Int total = 0;
    for (long lambda = 0; lambda <= n; ++lambda) {
      auto parts = enumerate_partitions(n, lambda);
      std::set<std::map<long, long>> seen;
      for (const auto& pi : parts) {
        bool ok = pi.weight() == n && pi.part_count() == lambda && seen.insert(pi.freq).second;
        for (const auto& [k, m] : pi.freq)
          if (k < 1 || m < 1) ok = false;
        integrity.record(ok, cat("at (n=", n, ", lambda=", lambda, "): weight=", pi.weight(),
                                 " parts=", pi.part_count()));
      }
      counts.record(Int(parts.size()) == count_partitions(n, lambda),
                    cat("at (n=", n, ", lambda=", lambda, "): enumerated=", parts.size(),
                        " recurrence=", count_partitions(n, lambda)));
      total += static_cast<long>(parts.size());
    }
    counts.record(total == partition_total_bruteforce(n),
                  cat("at n=", n, ": enumerated total=", total,
                      " bounded-part count=", partition_total_bruteforce(n)));
  }

  return {closed, constant, integrity, counts};
}

// ---- ode / pde ----------------------------------------------------------------------

std::vector<IdentityResult> suite_ode(const Bounds& b) {
  PhiAdjoint adj = adjoint(build_phi(b.nmax));
  IdentityResult ode{.name = "ode", .unit = "pairs"};
  for (long n = 0; n <= b.nmax; ++n)
    for (long lambda = 0; lambda <= n; ++lambda) {
      std::string diag;
      bool ok = verify_ode(n, lambda, adj, &diag);
      ode.record(ok, diag);
    }
  return {ode};
}

std::vector<IdentityResult> suite_pde(const Bounds& b) {
  long n_top = std::max(std::min(b.nmax, 8L), b.K);
  PhiAdjoint adj = adjoint(build_phi(n_top));

  IdentityResult bivar{.name = "pde/bivariate", .unit = "levels"};
  for (long n = 0; n <= std::min(b.nmax, 8L); ++n) {
    std::string diag;
    bool ok = verify_pde_n(n, adj, &diag);
    bivar.record(ok, diag);
  }

  IdentityResult full{.name = "pde/trivariate", .unit = "series"};
  TriSeries F = F_truncated(b.K);
  {
    std::string diag;
    bool ok = verify_pde_full(F, &diag);
    full.record(ok, diag);
  }
  full.record(F.coeff(0, 0).at_zero() == 1,
              cat("F(0,0,0)=", F.coeff(0, 0).at_zero(), " expected 1"));

  IdentityResult extraction{.name = "pde/coefficient-extraction", .unit = "pairs"};
  for (long n = 0; n <= b.K; ++n)
    for (long lambda = 0; lambda <= n; ++lambda)
      extraction.record(F.coeff(n, lambda) == F_from_phi(n, lambda, adj),
                        cat("at (n=", n, ", lambda=", lambda, "): series=", F.coeff(n, lambda),
                            " field=", F_from_phi(n, lambda, adj)));

  return {bivar, full, extraction};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "rowsum",   "moments", "laurent",        "phi-closed", "phi-transform",
      "stirling", "cosh",    "genfunc-closed", "ode",        "pde"};
  return names;
}

std::vector<IdentityResult> run_suite(const std::string& suite, const Bounds& b) {
  if (suite == "rowsum") return suite_rowsum(b);
  if (suite == "moments") return suite_moments(b);
  if (suite == "laurent") return suite_laurent(b);
  if (suite == "phi-closed") return suite_phi_closed(b);
  if (suite == "phi-transform") return suite_phi_transform(b);
  if (suite == "stirling") return suite_stirling(b);
  if (suite == "cosh") return suite_cosh(b);
  if (suite == "genfunc-closed") return suite_genfunc_closed(b);
  if (suite == "ode") return suite_ode(b);
  if (suite == "pde") return suite_pde(b);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

std::vector<IdentityResult> run_all(const Bounds& b) {
  std::vector<IdentityResult> all;
  for (const auto& name : suite_names()) {
    auto part = run_suite(name, b);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

}  // namespace triarray::suites
