#pragma once

#include "triarray/combinatorics.hpp"
#include "triarray/ffpoly.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace triarray {

// Triangular array with rows r = 0..rmax and columns j = 0..r.  Entries are
// plain integers for a fixed size parameter, or FFPoly when symbolic in s.
template <class Entry>
struct ATriangle {
  std::vector<std::vector<Entry>> rows;

  long rmax() const { return static_cast<long>(rows.size()) - 1; }

  const Entry& at(long r, long j) const {
    if (r < 0 || r > rmax() || j < 0 || j > r)
      throw std::out_of_range("ATriangle::at(" + std::to_string(r) + "," + std::to_string(j) + ")");
    return rows[r][j];
  }
};

// Condensed triangle: rows r = 0..rmax, columns n = 0..floor(r/2).
template <class Entry>
struct BTriangle {
  std::vector<std::vector<Entry>> rows;

  long rmax() const { return static_cast<long>(rows.size()) - 1; }

  const Entry& at(long r, long n) const {
    if (r < 0 || r > rmax() || n < 0 || n > r / 2)
      throw std::out_of_range("BTriangle::at(" + std::to_string(r) + "," + std::to_string(n) + ")");
    return rows[r][n];
  }
};

// A_{s,r+1,j} = A_{s,r,j-1} * (s-(j-1)) + A_{s,r,j+1} * (j+1), seeded A_{s,0,0} = 1.
ATriangle<Int> build_a_numeric(long s, long r_max);

// Same recurrence run in the falling-factorial basis; evaluating any entry
// at an integer point matches the numeric build.
ATriangle<FFPoly> build_a_symbolic(long r_max);

// B_{s,r+1,n} = B_{s,r,n} * (s-(r-2n)) + B_{s,r,n-1} * (r-2(n-1)), seeded B_{s,0,0} = 1.
BTriangle<Int> build_b_numeric(long s, long r_max);
BTriangle<FFPoly> build_b_symbolic(long r_max);

// B_{s,r,n} = A_{s,r,r-2n}.
template <class Entry>
BTriangle<Entry> condense(const ATriangle<Entry>& a) {
  BTriangle<Entry> b;
  b.rows.resize(a.rows.size());
  for (long r = 0; r <= a.rmax(); ++r) {
    b.rows[r].reserve(r / 2 + 1);
    for (long n = 0; n <= r / 2; ++n) b.rows[r].push_back(a.at(r, r - 2 * n));
  }
  return b;
}

// Inverse of condense: A_{s,r,j} = B_{s,r,(r-j)/2} when r-j is even, else 0.
template <class Entry>
ATriangle<Entry> expand(const BTriangle<Entry>& b) {
  ATriangle<Entry> a;
  a.rows.resize(b.rows.size());
  for (long r = 0; r <= b.rmax(); ++r) {
    a.rows[r].resize(r + 1);
    for (long j = 0; j <= r; ++j)
      if ((r - j) % 2 == 0) a.rows[r][j] = b.at(r, (r - j) / 2);
  }
  return a;
}

// Each row must sum to s^r exactly (0^0 = 1).  The symbolic route compares
// the row sum against power_to_ff(r) coefficientwise.  On failure, reports
// the first bad row through diag.
bool check_row_sums(const ATriangle<Int>& t, long s, std::string* diag = nullptr);
bool check_row_sums(const BTriangle<Int>& t, long s, std::string* diag = nullptr);
bool check_row_sums(const ATriangle<FFPoly>& t, std::string* diag = nullptr);
bool check_row_sums(const BTriangle<FFPoly>& t, std::string* diag = nullptr);

// A_{s,r,0}; equals the r-th centered binomial moment and the r-th derivative
// of cosh(t)^s at 0.
Int a0_column(long s, long r);

}  // namespace triarray
