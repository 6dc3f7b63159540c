#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "triarray/laurent.hpp"
#include "triarray/triangles.hpp"

#include <random>

using namespace triarray;

TEST_CASE("g and h") {
  LaurentPoly g = g_poly(), h = h_poly();
  CHECK(g.coeff(1) == rat(1, 2));
  CHECK(g.coeff(-1) == rat(1, 2));
  CHECK(h.coeff(1) == rat(1, 2));
  CHECK(h.coeff(-1) == rat(-1, 2));
  CHECK(g + h == LaurentPoly::term(1, 1));  // the 1/x parts cancel
}

TEST_CASE("G products") {
  LaurentPoly g2 = G(2, 0);
  CHECK(g2.coeff(-2) == rat(1, 4));
  CHECK(g2.coeff(0) == rat(1, 2));
  CHECK(g2.coeff(2) == rat(1, 4));
  CHECK(G(1, 1) == h_poly());
  CHECK(G(0, 0) == LaurentPoly::one());
  CHECK_THROWS_AS(G(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(G(2, -1), std::invalid_argument);
}

TEST_CASE("euler operator") {
  LaurentPoly p = LaurentPoly::term(1, 1) + LaurentPoly::term(-1, 1);  // x + 1/x
  LaurentPoly want = LaurentPoly::term(1, 1) + LaurentPoly::term(-1, -1);
  CHECK(euler_op(p, 1) == want);
  CHECK(euler_op(G(1, 0), 1) == h_poly());  // g drifts to h
  LaurentPoly q = LaurentPoly::term(3, rat(2, 5)) + LaurentPoly::term(0, 7);
  CHECK(euler_op(q, 0) == q);
  // r = 1 annihilates the constant term
  CHECK(euler_op(q, 1) == LaurentPoly::term(3, rat(6, 5)));
}

TEST_CASE("euler derivation and composition on random inputs") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<long> expo(-6, 6), num(-9, 9), den(1, 9), ord(0, 5);
  auto draw = [&] {
    LaurentPoly p;
    for (int t = 0; t < 5; ++t) p.add_term(expo(rng), rat(num(rng), den(rng)));
    return p;
  };
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly p = draw(), q = draw();
    CHECK(euler_op(p * q, 1) == euler_op(p, 1) * q + p * euler_op(q, 1));
    long a = ord(rng), b = ord(rng);
    CHECK(euler_op(euler_op(p, a), b) == euler_op(p, a + b));
  }
}

TEST_CASE("G expansion against triangle rows") {
  CHECK(verify_G_expansion(2, 2, {Int(2), Int(0), Int(2)}));
  CHECK(verify_G_expansion(1, 1, {Int(0), Int(1)}));
  CHECK(verify_G_expansion(0, 0, {Int(1)}));

  std::string diag;
  CHECK_FALSE(verify_G_expansion(2, 2, {Int(2), Int(0), Int(3)}, &diag));
  CHECK(diag.find("exponent") != std::string::npos);

  for (long s = 0; s <= 8; ++s) {
    auto a = build_a_numeric(s, 8);
    for (long r = 0; r <= s; ++r) {
      CAPTURE(s);
      CAPTURE(r);
      CHECK(verify_G_expansion(s, r, a.rows[r]));
    }
  }
}

TEST_CASE("single euler step identity") {
  for (long s = 1; s <= 8; ++s)
    for (long j = 1; j < s; ++j) {
      CAPTURE(s);
      CAPTURE(j);
      CHECK(euler_op(G(s, j), 1) == G(s, j - 1) * Rational(j) + G(s, j + 1) * Rational(s - j));
    }
}

TEST_CASE("centered binomial coefficients") {
  auto c2 = centered_binomial_coeffs(2);
  CHECK(c2.size() == 3);
  CHECK(c2.at(-2) == rat(1, 4));
  CHECK(c2.at(0) == rat(1, 2));
  CHECK(c2.at(2) == rat(1, 4));

  auto c0 = centered_binomial_coeffs(0);
  CHECK(c0.size() == 1);
  CHECK(c0.at(0) == 1);

  auto c4 = centered_binomial_coeffs(4);
  CHECK(c4.at(-4) == rat(1, 16));
  CHECK(c4.at(-2) == rat(4, 16));
  CHECK(c4.at(0) == rat(6, 16));
  CHECK(c4.at(2) == rat(4, 16));
  CHECK(c4.at(4) == rat(1, 16));

  for (long s = 0; s <= 16; ++s) {
    Rational total = 0;
    for (const auto& [v, c] : centered_binomial_coeffs(s)) {
      total += c;
      CHECK(c == centered_binomial_coeffs(s).at(-v));
    }
    CHECK(total == 1);
  }
}

TEST_CASE("moments") {
  CHECK(moment_bruteforce(2, 2) == 2);
  CHECK(moment_bruteforce(4, 4) == 40);
  CHECK(moment_bruteforce(5, 1) == 0);
  CHECK(moment_bruteforce(0, 0) == 1);  // 0^0 = 1 on the single outcome
  for (long s = 0; s <= 10; ++s)
    for (long r = 1; r <= 11; r += 2) {
      CAPTURE(s);
      CAPTURE(r);
      CHECK(moment_bruteforce(s, r) == 0);
    }
  for (long s = 0; s <= 8; ++s)
    for (long r = 0; r <= 10; ++r) {
      Rational mu = moment_bruteforce(s, r);
      CHECK(mu.get_den() == 1);
      CHECK(mu >= 0);
    }
}
