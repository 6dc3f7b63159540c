#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "triarray/laurent.hpp"
#include "triarray/power_series.hpp"
#include "triarray/triangles.hpp"

using namespace triarray;

TEST_CASE("numeric A from the recurrence") {
  auto t = build_a_numeric(2, 2);
  CHECK(t.rows[2] == std::vector<Int>{Int(2), Int(0), Int(2)});

  CHECK(build_a_numeric(3, 3).at(3, 1) == 21);

  auto z = build_a_numeric(0, 4);
  CHECK(z.at(0, 0) == 1);
  for (long r = 1; r <= 4; ++r)
    for (long j = 0; j <= r; ++j) {
      CAPTURE(r);
      CAPTURE(j);
      CHECK(z.at(r, j) == 0);
    }
}

TEST_CASE("symbolic A matches the table entries") {
  auto t = build_a_symbolic(8);
  CHECK(t.at(4, 0) == FFPoly::basis(2, 3) + FFPoly::basis(1));
  CHECK(t.at(6, 2) == FFPoly::basis(4, 45) + FFPoly::basis(3, 75) + FFPoly::basis(2, 16));
  CHECK(t.at(1, 1) == FFPoly::basis(1));
  CHECK(t.at(7, 1) ==
        FFPoly::basis(4, 105) + FFPoly::basis(3, 210) + FFPoly::basis(2, 63) + FFPoly::basis(1));
  CHECK(t.at(8, 0) == t.at(7, 1));
}

TEST_CASE("symbolic and numeric builds agree") {
  auto sym = build_a_symbolic(10);
  for (long s = 0; s <= 10; ++s) {
    auto num = build_a_numeric(s, 10);
    for (long r = 0; r <= 10; ++r)
      for (long j = 0; j <= r; ++j) {
        CAPTURE(s);
        CAPTURE(r);
        CAPTURE(j);
        CHECK(ff_eval(sym.at(r, j), s) == num.at(r, j));
      }
  }
}

TEST_CASE("checkerboard of zeros") {
  auto sym = build_a_symbolic(12);
  for (long r = 0; r <= 12; ++r)
    for (long j = 0; j <= r; ++j)
      if ((r - j) % 2 != 0) {
        CAPTURE(r);
        CAPTURE(j);
        CHECK(sym.at(r, j).is_zero());
      }
}

TEST_CASE("condensed triangle") {
  auto b2 = build_b_numeric(2, 2);
  CHECK(b2.at(2, 0) == 2);  // A_{2,2,2}
  CHECK(b2.at(2, 1) == 2);  // A_{2,2,0}
  CHECK(build_b_numeric(5, 0).at(0, 0) == 1);
  CHECK(build_b_numeric(4, 4).at(4, 2) == 40);

  for (long s = 0; s <= 6; ++s) {
    auto a = build_a_numeric(s, 12);
    auto b = build_b_numeric(s, 12);
    auto c = condense(a);
    auto e = expand(b);
    for (long r = 0; r <= 12; ++r) {
      for (long n = 0; n <= r / 2; ++n) {
        CAPTURE(s);
        CAPTURE(r);
        CAPTURE(n);
        CHECK(b.at(r, n) == a.at(r, r - 2 * n));
        CHECK(c.at(r, n) == b.at(r, n));
      }
      for (long j = 0; j <= r; ++j) CHECK(e.at(r, j) == a.at(r, j));
    }
  }

  auto bs = build_b_symbolic(8);
  auto as = build_a_symbolic(8);
  for (long r = 0; r <= 8; ++r)
    for (long n = 0; n <= r / 2; ++n) CHECK(bs.at(r, n) == as.at(r, r - 2 * n));
}

TEST_CASE("row sums") {
  auto a3 = build_a_numeric(3, 5);
  CHECK(check_row_sums(a3, 3));
  CHECK(a3.at(3, 1) + a3.at(3, 3) == 27);

  auto a0 = build_a_numeric(0, 3);
  CHECK(check_row_sums(a0, 0));  // 0^0 = 1 on the seed row

  for (long s = 0; s <= 10; ++s) {
    CAPTURE(s);
    CHECK(check_row_sums(build_a_numeric(s, 12), s));
    CHECK(check_row_sums(build_b_numeric(s, 12), s));
  }
  CHECK(check_row_sums(build_a_symbolic(12)));
  CHECK(check_row_sums(build_b_symbolic(12)));

  // a poisoned triangle reports its first bad row
  auto bad = build_a_numeric(3, 4);
  bad.rows[2][1] += 1;
  std::string diag;
  CHECK_FALSE(check_row_sums(bad, 3, &diag));
  CHECK(diag.find("r=2") != std::string::npos);
}

TEST_CASE("j=0 column") {
  CHECK(a0_column(5, 6) == 1205);
  CHECK(a0_column(3, 1) == 0);
  CHECK(a0_column(2, 4) == 8);
  for (long s = 0; s <= 8; ++s)
    for (long r = 0; r <= 10; ++r) {
      CAPTURE(s);
      CAPTURE(r);
      CHECK(Rational(a0_column(s, r)) == moment_bruteforce(s, r));
      CHECK(Rational(a0_column(s, r)) == cosh_pow_derivative(s, r));
    }
}
