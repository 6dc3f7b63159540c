#include "triarray/rational.hpp"

#include <stdexcept>

namespace triarray {

Rational rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rat(long num, long den) { return rat(Int(num), Int(den)); }

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Int& n) { return n.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("parse_rational: bad input '" + text + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

Int parse_int(const std::string& text) {
  Int n;
  if (n.set_str(text, 10) != 0)
    throw std::invalid_argument("parse_int: bad input '" + text + "'");
  return n;
}

}  // namespace triarray
