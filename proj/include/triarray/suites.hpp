#pragma once

#include "triarray/rational.hpp"

#include <string>
#include <vector>

namespace triarray::suites {

struct Bounds {
  long smax = 8;
  long rmax = 12;
  long nmax = 10;
  long K = 8;
};

struct IdentityResult {
  std::string name;
  std::string unit = "checks";
  bool pass = true;
  long checks = 0;
  std::vector<std::string> failures;  // "at (indices): values"

  void record(bool ok, const std::string& failure_detail) {
    ++checks;
    if (!ok) {
      pass = false;
      failures.push_back(failure_detail);
    }
  }
};

// Suite names accepted by run_suite, in report order ("all" excluded).
const std::vector<std::string>& suite_names();

// Runs one named suite; throws std::invalid_argument for unknown names.
std::vector<IdentityResult> run_suite(const std::string& suite, const Bounds& b);

// Every suite, in order.
std::vector<IdentityResult> run_all(const Bounds& b);

// Independent reference routes used by the suites.
Int stirling2_bruteforce(long r, long m);  // counts set partitions directly
Int partition_total_bruteforce(long n);    // p(n) by bounded-part counting

}  // namespace triarray::suites
