#include "triarray/partitions.hpp"

#include <stdexcept>

namespace triarray {

long Partition::weight() const {
  long w = 0;
  for (const auto& [k, m] : freq) w += k * m;
  return w;
}

long Partition::part_count() const {
  long c = 0;
  for (const auto& [k, m] : freq) c += m;
  return c;
}

namespace {

Partition from_parts(const std::vector<long>& parts) {
  Partition p;
  for (long k : parts) ++p.freq[k];
  return p;
}

// Parts are chosen non-increasing, largest candidate first, which yields the
// descending-largest-part order.
void emit(long n, long lam, long max_part, std::vector<long>& parts,
          std::vector<Partition>& out) {
  if (lam == 0) {
    if (n == 0) out.push_back(from_parts(parts));
    return;
  }
  long hi = std::min(max_part, n - (lam - 1));
  long lo = (n + lam - 1) / lam;  // the largest part is at least ceil(n/lam)
  for (long p = hi; p >= lo && p >= 1; --p) {
    parts.push_back(p);
    emit(n - p, lam - 1, p, parts, out);
    parts.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(long n, long lam) {
  if (n < 0 || lam < 0) throw std::invalid_argument("enumerate_partitions: negative argument");
  std::vector<Partition> out;
  std::vector<long> parts;
  emit(n, lam, n, parts, out);
  return out;
}

Int count_partitions(long n, long lam) {
  if (n < 0 || lam < 0) return 0;
  if (lam == 0) return n == 0 ? 1 : 0;
  if (n < lam) return 0;
  // p(n, l) = p(n-1, l-1) + p(n-l, l)
  std::vector<std::vector<Int>> p(n + 1, std::vector<Int>(lam + 1, Int(0)));
  p[0][0] = 1;
  for (long m = 1; m <= n; ++m)
    for (long l = 1; l <= lam; ++l) {
      p[m][l] = p[m - 1][l - 1];
      if (m >= l) p[m][l] += p[m - l][l];
    }
  return p[n][lam];
}

}  // namespace triarray
