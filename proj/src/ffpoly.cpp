#include "triarray/ffpoly.hpp"

#include "triarray/combinatorics.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace triarray {

FFPoly FFPoly::constant(const Int& c) { return basis(0, c); }

FFPoly FFPoly::basis(long k, const Int& coeff) {
  FFPoly p;
  p.add_term(k, coeff);
  return p;
}

Int FFPoly::coeff(long k) const {
  auto it = c_.find(k);
  return it == c_.end() ? Int(0) : it->second;
}

long FFPoly::degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }

void FFPoly::add_term(long k, const Int& c) {
  if (k < 0) throw std::invalid_argument("FFPoly: negative basis degree");
  if (c == 0) return;
  auto [it, inserted] = c_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

FFPoly& FFPoly::operator+=(const FFPoly& o) {
  for (const auto& [k, c] : o.c_) add_term(k, c);
  return *this;
}

FFPoly& FFPoly::operator-=(const FFPoly& o) {
  for (const auto& [k, c] : o.c_) add_term(k, -c);
  return *this;
}

FFPoly& FFPoly::operator*=(const Int& c) {
  if (c == 0) {
    c_.clear();
  } else {
    for (auto& [k, v] : c_) v *= c;
  }
  return *this;
}

FFPoly ff_multiply_by_s(const FFPoly& p) {
  // s*(s)_k = (s)_{k+1} + k*(s)_k
  FFPoly q;
  for (const auto& [k, c] : p.coeffs()) {
    q.add_term(k + 1, c);
    q.add_term(k, k * c);
  }
  return q;
}

Int ff_eval(const FFPoly& p, const Int& s) {
  Int v = 0;
  for (const auto& [k, c] : p.coeffs()) v += c * falling_factorial(s, k);
  return v;
}

FFPoly power_to_ff(long r) {
  FFPoly p;
  for (long m = 0; m <= r; ++m) p.add_term(m, stirling2(r, m));
  return p;
}

std::string to_string(const FFPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first, matching the usual table rendering.
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    const auto& [k, c] = *it;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << c;
    } else {
      if (c == -1)
        os << "-";
      else if (c != 1)
        os << c << "*";
      os << "(s)_" << k;
    }
  }
  return os.str();
}

namespace {

// One term of the plain rendering: "N", "(s)_k", "N*(s)_k", optional minus.
void parse_ff_term(const std::string& term, FFPoly& out) {
  std::string t = term;
  bool neg = false;
  if (!t.empty() && t[0] == '-') {
    neg = true;
    t = t.substr(1);
  }
  Int coeff = 1;
  std::string body = t;
  auto star = t.find('*');
  if (star != std::string::npos) {
    coeff = parse_int(t.substr(0, star));
    body = t.substr(star + 1);
  }
  long k = 0;
  if (body.rfind("(s)_", 0) == 0) {
    k = std::stol(body.substr(4));
  } else {
    coeff = parse_int(body);
  }
  out.add_term(k, neg ? Int(-coeff) : coeff);
}

}  // namespace

FFPoly parse_ffpoly(const std::string& text) {
  FFPoly p;
  if (text == "0") return p;
  size_t pos = 0;
  while (pos < text.size()) {
    auto next = text.find(" + ", pos);
    auto piece = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    parse_ff_term(piece, p);
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  return p;
}

std::ostream& operator<<(std::ostream& os, const FFPoly& p) { return os << to_string(p); }

}  // namespace triarray
