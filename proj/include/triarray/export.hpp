#pragma once

#include "triarray/genfunc.hpp"
#include "triarray/phi_field.hpp"
#include "triarray/triangles.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace triarray {

enum class Format { csv, json, latex };

Format parse_format(const std::string& name);  // throws std::invalid_argument

// Latex cell forms: rationals as \frac{p}{q}, falling-factorial polynomials
// in descending order with (s)_1 printed as s, e.g. "3\,(s)_2 + s".
std::string render_rational_latex(const Rational& q);
std::string render_ffpoly_latex(const FFPoly& p);
Rational parse_rational_latex(const std::string& cell);
FFPoly parse_ffpoly_latex(const std::string& cell);

// Table writers.  csv: one line per row (A/B: "r,cells..."; phi/phiT:
// "n,j,cells..." over k).  json: indices nested as arrays, values as exact
// strings.  latex: a tabular block shaped like the triangle, out-of-support
// cells marked $\cdot$.
void write_table(std::ostream& os, const ATriangle<Int>& t, long s, Format f);
void write_table(std::ostream& os, const ATriangle<FFPoly>& t, Format f);
void write_table(std::ostream& os, const BTriangle<Int>& t, long s, Format f);
void write_table(std::ostream& os, const BTriangle<FFPoly>& t, Format f);
void write_table(std::ostream& os, const PhiField& f, Format fmt);
void write_table(std::ostream& os, const PhiAdjoint& a, Format fmt);
void write_poly_table(std::ostream& os, const PolyZ& p, long n, long lambda, Format f);

// Round-trip readers for the writers above.
ATriangle<Int> parse_a_numeric(std::istream& is, Format f);
ATriangle<FFPoly> parse_a_symbolic(std::istream& is, Format f);
BTriangle<Int> parse_b_numeric(std::istream& is, Format f);
BTriangle<FFPoly> parse_b_symbolic(std::istream& is, Format f);
PhiField parse_phi(std::istream& is, Format f);
PhiAdjoint parse_phi_adjoint(std::istream& is, Format f);
std::vector<Rational> parse_poly_coeffs_csv(const std::string& line);

// For each even r in 2..r_max, the coefficients of A_{s,r,0} on
// (s)_1, (s)_2, ... in ascending order, e.g. r=8 -> "1,63,210,105".
std::vector<std::string> oeis_rows(long r_max);

}  // namespace triarray
