#include "triarray/export.hpp"

#include <json.hpp>

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace triarray {

using json = nlohmann::ordered_json;

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  if (name == "latex") return Format::latex;
  throw std::invalid_argument("unknown format '" + name + "'");
}

std::string render_rational_latex(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  std::string sign = q < 0 ? "-" : "";
  Int num = abs(q.get_num());
  return sign + "\\frac{" + num.get_str() + "}{" + q.get_den().get_str() + "}";
}

Rational parse_rational_latex(const std::string& cell) {
  std::string t = cell;
  bool neg = false;
  if (!t.empty() && t[0] == '-') {
    neg = true;
    t = t.substr(1);
  }
  if (t.rfind("\\frac{", 0) == 0) {
    auto close = t.find('}');
    auto open2 = t.find('{', close);
    auto close2 = t.find('}', open2);
    if (close == std::string::npos || open2 == std::string::npos || close2 == std::string::npos)
      throw std::invalid_argument("parse_rational_latex: bad cell '" + cell + "'");
    Rational q = rat(parse_int(t.substr(6, close - 6)), parse_int(t.substr(open2 + 1, close2 - open2 - 1)));
    return neg ? Rational(-q) : q;
  }
  Rational q(parse_int(t));
  return neg ? Rational(-q) : q;
}

std::string render_ffpoly_latex(const FFPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    const auto& [k, c] = *it;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << c;
      continue;
    }
    if (c == -1)
      os << "-";
    else if (c != 1)
      os << c << "\\,";
    if (k == 1)
      os << "s";
    else
      os << "(s)_" << k;
  }
  return os.str();
}

namespace {

void parse_ff_term_latex(const std::string& term, FFPoly& out) {
  std::string t = term;
  bool neg = false;
  if (!t.empty() && t[0] == '-') {
    neg = true;
    t = t.substr(1);
  }
  Int coeff = 1;
  std::string body = t;
  auto sep = t.find("\\,");
  if (sep != std::string::npos) {
    coeff = parse_int(t.substr(0, sep));
    body = t.substr(sep + 2);
  }
  long k;
  if (body == "s")
    k = 1;
  else if (body.rfind("(s)_", 0) == 0)
    k = std::stol(body.substr(4));
  else {
    k = 0;
    coeff = parse_int(body);
  }
  out.add_term(k, neg ? Int(-coeff) : coeff);
}

}  // namespace

FFPoly parse_ffpoly_latex(const std::string& cell) {
  FFPoly p;
  if (cell == "0") return p;
  size_t pos = 0;
  while (pos < cell.size()) {
    auto next = cell.find(" + ", pos);
    parse_ff_term_latex(
        cell.substr(pos, next == std::string::npos ? std::string::npos : next - pos), p);
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  return p;
}

namespace {

// ---- cell conversion ----------------------------------------------------

std::string plain_cell(const Int& v) { return to_string(v); }
std::string plain_cell(const Rational& v) { return to_string(v); }
std::string plain_cell(const FFPoly& v) { return to_string(v); }

std::string latex_cell(const Int& v) { return to_string(v); }
std::string latex_cell(const Rational& v) { return render_rational_latex(v); }
std::string latex_cell(const FFPoly& v) { return render_ffpoly_latex(v); }

template <class Entry>
Entry cell_value(const std::string& cell, Format f);

template <>
Int cell_value<Int>(const std::string& cell, Format) {
  return parse_int(cell);
}

template <>
Rational cell_value<Rational>(const std::string& cell, Format f) {
  return f == Format::latex ? parse_rational_latex(cell) : parse_rational(cell);
}

template <>
FFPoly cell_value<FFPoly>(const std::string& cell, Format f) {
  return f == Format::latex ? parse_ffpoly_latex(cell) : parse_ffpoly(cell);
}

// ---- generic line utilities ----------------------------------------------

std::vector<std::string> split(const std::string& line, const std::string& sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    auto next = line.find(sep, pos);
    out.push_back(line.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    if (next == std::string::npos) break;
    pos = next + sep.size();
  }
  return out;
}

std::string strip_math(const std::string& cell) {
  std::string t = cell;
  if (t.size() >= 2 && t.front() == '$' && t.back() == '$') t = t.substr(1, t.size() - 2);
  return t;
}

// Rows of a latex tabular body: line index label first, then one entry per
// column; $\cdot$ marks out-of-support cells and is dropped.
std::vector<std::vector<std::string>> latex_data_rows(std::istream& is) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (line.find(" & ") == std::string::npos) continue;
    if (line.find("\\backslash") != std::string::npos) continue;  // header row
    auto stripped = line;
    auto bs = stripped.rfind(" \\\\");
    if (bs != std::string::npos) stripped = stripped.substr(0, bs);
    std::vector<std::string> cells;
    for (auto& c : split(stripped, " & ")) {
      auto t = strip_math(c);
      if (t == "\\cdot") continue;
      cells.push_back(t);
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

std::vector<std::vector<std::string>> csv_rows(std::istream& is) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    rows.push_back(split(line, ","));
  }
  return rows;
}

// ---- triangle writers -----------------------------------------------------

// Grid shape shared by the A and B writers: ncols(r) entries in row r.
template <class Entry, class NCols>
void write_triangle_csv(std::ostream& os, const std::vector<std::vector<Entry>>& rows,
                        NCols ncols) {
  for (size_t r = 0; r < rows.size(); ++r) {
    os << r;
    for (long c = 0; c < ncols(static_cast<long>(r)); ++c) os << ',' << plain_cell(rows[r][c]);
    os << '\n';
  }
}

template <class Entry>
json triangle_json_rows(const std::vector<std::vector<Entry>>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json jr = json::array();
    for (const auto& e : row) jr.push_back(plain_cell(e));
    out.push_back(jr);
  }
  return out;
}

template <class Entry, class NCols>
void write_triangle_latex(std::ostream& os, const std::vector<std::vector<Entry>>& rows,
                          NCols ncols, const std::string& row_label,
                          const std::string& col_label) {
  long width = 0;
  for (size_t r = 0; r < rows.size(); ++r) width = std::max(width, ncols(static_cast<long>(r)));
  os << "\\begin{tabular}{r|" << std::string(width, 'l') << "}\n";
  os << "$" << row_label << " \\backslash " << col_label << "$";
  for (long c = 0; c < width; ++c) os << " & $" << c << "$";
  os << " \\\\\n\\hline\n";
  for (size_t r = 0; r < rows.size(); ++r) {
    os << "$" << r << "$";
    for (long c = 0; c < width; ++c) {
      if (c < ncols(static_cast<long>(r)))
        os << " & $" << latex_cell(rows[r][c]) << "$";
      else
        os << " & $\\cdot$";
    }
    os << " \\\\\n";
  }
  os << "\\end{tabular}\n";
}

template <class Entry, class NCols>
std::vector<std::vector<Entry>> triangle_from_rows(
    const std::vector<std::vector<std::string>>& raw, NCols ncols, bool indexed, Format f,
    const std::string& what) {
  std::vector<std::vector<Entry>> rows;
  for (size_t r = 0; r < raw.size(); ++r) {
    const auto& cells = raw[r];
    size_t start = indexed ? 1 : 0;
    if (indexed && (cells.empty() || parse_int(cells[0]) != static_cast<long>(r)))
      throw std::invalid_argument(what + ": bad row index in row " + std::to_string(r));
    long want = ncols(static_cast<long>(r));
    if (static_cast<long>(cells.size() - start) != want)
      throw std::invalid_argument(what + ": row " + std::to_string(r) + " has " +
                                  std::to_string(cells.size() - start) + " cells, expected " +
                                  std::to_string(want));
    std::vector<Entry> row;
    row.reserve(want);
    for (long c = 0; c < want; ++c) row.push_back(cell_value<Entry>(cells[start + c], f));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument(what + ": no rows");
  return rows;
}

template <class Entry>
void write_triangle(std::ostream& os, const std::vector<std::vector<Entry>>& rows, Format f,
                    const json& meta, const std::string& row_label,
                    const std::string& col_label) {
  switch (f) {
    case Format::csv:
      write_triangle_csv(os, rows, [&](long r) { return static_cast<long>(rows[r].size()); });
      break;
    case Format::json: {
      json doc = meta;
      doc["rows"] = triangle_json_rows(rows);
      os << doc.dump(2) << '\n';
      break;
    }
    case Format::latex:
      write_triangle_latex(os, rows, [&](long r) { return static_cast<long>(rows[r].size()); },
                           row_label, col_label);
      break;
  }
}

template <class Entry, class NCols>
std::vector<std::vector<Entry>> read_triangle(std::istream& is, Format f, NCols ncols,
                                              const std::string& what) {
  switch (f) {
    case Format::csv:
      return triangle_from_rows<Entry>(csv_rows(is), ncols, true, f, what);
    case Format::latex:
      return triangle_from_rows<Entry>(latex_data_rows(is), ncols, true, f, what);
    case Format::json: {
      json doc = json::parse(is);
      std::vector<std::vector<std::string>> raw;
      for (const auto& row : doc.at("rows")) {
        std::vector<std::string> cells;
        for (const auto& c : row) cells.push_back(c.get<std::string>());
        raw.push_back(std::move(cells));
      }
      return triangle_from_rows<Entry>(raw, ncols, false, f, what);
    }
  }
  throw std::logic_error("unreachable");
}

auto a_cols = [](long r) { return r + 1; };
auto b_cols = [](long r) { return r / 2 + 1; };

// ---- phi writers -----------------------------------------------------------

void write_layers_csv(std::ostream& os, const std::vector<PhiLayer>& layers) {
  for (size_t n = 0; n < layers.size(); ++n)
    for (size_t j = 0; j < layers[n].size(); ++j) {
      os << n << ',' << j;
      for (const auto& v : layers[n][j]) os << ',' << plain_cell(v);
      os << '\n';
    }
}

void write_layers_latex(std::ostream& os, const std::vector<PhiLayer>& layers,
                        const std::string& row_label) {
  for (size_t n = 0; n < layers.size(); ++n) {
    os << "% layer n=" << n << "\n";
    os << "\\begin{tabular}{r|" << std::string(n + 1, 'l') << "}\n";
    os << "$" << row_label << " \\backslash k$";
    for (size_t k = 0; k <= n; ++k) os << " & $" << k << "$";
    os << " \\\\\n\\hline\n";
    for (size_t j = 0; j < layers[n].size(); ++j) {
      os << "$" << j << "$";
      for (size_t k = 0; k <= n; ++k) {
        if (k < layers[n][j].size())
          os << " & $" << latex_cell(layers[n][j][k]) << "$";
        else
          os << " & $\\cdot$";
      }
      os << " \\\\\n";
    }
    os << "\\end{tabular}\n";
  }
}

json layers_json(const std::vector<PhiLayer>& layers) {
  json out = json::array();
  for (const auto& layer : layers) {
    json jl = json::array();
    for (const auto& row : layer) {
      json jr = json::array();
      for (const auto& v : row) jr.push_back(plain_cell(v));
      jl.push_back(jr);
    }
    out.push_back(jl);
  }
  return out;
}

void write_layers(std::ostream& os, const std::vector<PhiLayer>& layers, Format f,
                  const std::string& structure, const std::string& row_label) {
  switch (f) {
    case Format::csv:
      write_layers_csv(os, layers);
      break;
    case Format::json: {
      json doc;
      doc["structure"] = structure;
      doc["nmax"] = layers.size() - 1;
      doc["layers"] = layers_json(layers);
      os << doc.dump(2) << '\n';
      break;
    }
    case Format::latex:
      write_layers_latex(os, layers, row_label);
      break;
  }
}

std::vector<PhiLayer> read_layers(std::istream& is, Format f, const std::string& what) {
  std::vector<PhiLayer> layers;
  auto place = [&](size_t n, size_t j, std::vector<Rational> row) {
    if (layers.size() <= n) layers.resize(n + 1);
    if (layers[n].size() <= j) layers[n].resize(j + 1);
    if (row.size() != j + 1)
      throw std::invalid_argument(what + ": row (" + std::to_string(n) + "," + std::to_string(j) +
                                  ") has " + std::to_string(row.size()) + " cells");
    layers[n][j] = std::move(row);
  };
  switch (f) {
    case Format::csv: {
      for (const auto& cells : csv_rows(is)) {
        if (cells.size() < 2) throw std::invalid_argument(what + ": short line");
        size_t n = parse_int(cells[0]).get_ui(), j = parse_int(cells[1]).get_ui();
        std::vector<Rational> row;
        for (size_t c = 2; c < cells.size(); ++c) row.push_back(parse_rational(cells[c]));
        place(n, j, std::move(row));
      }
      break;
    }
    case Format::latex: {
      // "% layer n=..." comments delimit layers; data rows carry j first.
      std::string line;
      long n = -1;
      while (std::getline(is, line)) {
        if (line.rfind("% layer n=", 0) == 0) {
          n = std::stol(line.substr(10));
          continue;
        }
        if (line.find(" & ") == std::string::npos ||
            line.find("\\backslash") != std::string::npos)
          continue;
        auto stripped = line;
        auto bs = stripped.rfind(" \\\\");
        if (bs != std::string::npos) stripped = stripped.substr(0, bs);
        auto cells = split(stripped, " & ");
        long j = parse_int(strip_math(cells[0])).get_si();
        std::vector<Rational> row;
        for (size_t c = 1; c < cells.size(); ++c) {
          auto t = strip_math(cells[c]);
          if (t == "\\cdot") continue;
          row.push_back(parse_rational_latex(t));
        }
        if (n < 0) throw std::invalid_argument(what + ": data before layer marker");
        place(n, j, std::move(row));
      }
      break;
    }
    case Format::json: {
      json doc = json::parse(is);
      const auto& jl = doc.at("layers");
      for (size_t n = 0; n < jl.size(); ++n)
        for (size_t j = 0; j < jl[n].size(); ++j) {
          std::vector<Rational> row;
          for (const auto& c : jl[n][j]) row.push_back(parse_rational(c.get<std::string>()));
          place(n, j, std::move(row));
        }
      break;
    }
  }
  // Validate the triangular shape.
  for (size_t n = 0; n < layers.size(); ++n) {
    if (layers[n].size() != n + 1)
      throw std::invalid_argument(what + ": layer " + std::to_string(n) + " has " +
                                  std::to_string(layers[n].size()) + " rows");
  }
  if (layers.empty()) throw std::invalid_argument(what + ": no layers");
  return layers;
}

}  // namespace

void write_table(std::ostream& os, const ATriangle<Int>& t, long s, Format f) {
  json meta;
  meta["structure"] = "A";
  meta["symbolic"] = false;
  meta["s"] = s;
  meta["rmax"] = t.rmax();
  write_triangle(os, t.rows, f, meta, "r", "j");
}

void write_table(std::ostream& os, const ATriangle<FFPoly>& t, Format f) {
  json meta;
  meta["structure"] = "A";
  meta["symbolic"] = true;
  meta["rmax"] = t.rmax();
  write_triangle(os, t.rows, f, meta, "r", "j");
}

void write_table(std::ostream& os, const BTriangle<Int>& t, long s, Format f) {
  json meta;
  meta["structure"] = "B";
  meta["symbolic"] = false;
  meta["s"] = s;
  meta["rmax"] = t.rmax();
  write_triangle(os, t.rows, f, meta, "r", "n");
}

void write_table(std::ostream& os, const BTriangle<FFPoly>& t, Format f) {
  json meta;
  meta["structure"] = "B";
  meta["symbolic"] = true;
  meta["rmax"] = t.rmax();
  write_triangle(os, t.rows, f, meta, "r", "n");
}

void write_table(std::ostream& os, const PhiField& f, Format fmt) {
  write_layers(os, f.layers(), fmt, "phi", "j");
}

void write_table(std::ostream& os, const PhiAdjoint& a, Format fmt) {
  write_layers(os, a.layers(), fmt, "phiT", "\\lambda");
}

void write_poly_table(std::ostream& os, const PolyZ& p, long n, long lambda, Format f) {
  switch (f) {
    case Format::csv: {
      if (p.is_zero()) {
        os << "0\n";
        return;
      }
      for (long k = 0; k <= p.degree(); ++k) {
        if (k) os << ',';
        os << to_string(p.coeff(k));
      }
      os << '\n';
      break;
    }
    case Format::json: {
      json doc;
      doc["structure"] = "F";
      doc["n"] = n;
      doc["lam"] = lambda;
      json coeffs = json::array();
      for (long k = 0; k <= std::max(p.degree(), 0L); ++k) coeffs.push_back(to_string(p.coeff(k)));
      doc["coeffs"] = coeffs;
      os << doc.dump(2) << '\n';
      break;
    }
    case Format::latex: {
      if (p.is_zero()) {
        os << "$0$\n";
        return;
      }
      os << '$';
      for (long k = 0; k <= p.degree(); ++k) {
        if (k) os << " + ";
        os << render_rational_latex(p.coeff(k));
        if (k == 1) os << "\\,z";
        if (k >= 2) os << "\\,z^{" << k << "}";
      }
      os << "$\n";
      break;
    }
  }
}

ATriangle<Int> parse_a_numeric(std::istream& is, Format f) {
  return ATriangle<Int>{read_triangle<Int>(is, f, a_cols, "A")};
}

ATriangle<FFPoly> parse_a_symbolic(std::istream& is, Format f) {
  return ATriangle<FFPoly>{read_triangle<FFPoly>(is, f, a_cols, "A symbolic")};
}

BTriangle<Int> parse_b_numeric(std::istream& is, Format f) {
  return BTriangle<Int>{read_triangle<Int>(is, f, b_cols, "B")};
}

BTriangle<FFPoly> parse_b_symbolic(std::istream& is, Format f) {
  return BTriangle<FFPoly>{read_triangle<FFPoly>(is, f, b_cols, "B symbolic")};
}

PhiField parse_phi(std::istream& is, Format f) { return PhiField(read_layers(is, f, "phi")); }

PhiAdjoint parse_phi_adjoint(std::istream& is, Format f) {
  return PhiAdjoint(read_layers(is, f, "phiT"));
}

std::vector<Rational> parse_poly_coeffs_csv(const std::string& line) {
  std::vector<Rational> out;
  for (const auto& cell : split(line, ",")) out.push_back(parse_rational(cell));
  return out;
}

std::vector<std::string> oeis_rows(long r_max) {
  auto t = build_a_symbolic(r_max);
  std::vector<std::string> out;
  for (long r = 2; r <= r_max; r += 2) {
    const FFPoly& p = t.at(r, 0);
    std::ostringstream os;
    for (long k = 1; k <= r / 2; ++k) {
      if (k > 1) os << ',';
      os << p.coeff(k);
    }
    out.push_back(os.str());
  }
  return out;
}

}  // namespace triarray
