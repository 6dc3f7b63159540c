#pragma once

#include "triarray/rational.hpp"

#include <map>
#include <vector>

namespace triarray {

// Integer partition in frequency form: part -> multiplicity, no zero entries.
// The empty map is the empty partition.
struct Partition {
  std::map<long, long> freq;

  long weight() const;      // sum of part * multiplicity
  long part_count() const;  // sum of multiplicities

  bool operator==(const Partition&) const = default;
};

// All partitions of n into exactly lam parts, each once, ordered by
// descending largest part (then lexicographically).  enumerate(0,0) yields
// the empty partition; enumerate(n,0) for n > 0 yields nothing.
std::vector<Partition> enumerate_partitions(long n, long lam);

// |P_{n,lam}| by the independent recurrence p(n,l) = p(n-1,l-1) + p(n-l,l).
Int count_partitions(long n, long lam);

}  // namespace triarray
