#include "triarray/export.hpp"
#include "triarray/suites.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

int run_table(const std::string& structure, long s, long rmax, long nmax, long n, long lam,
              bool symbolic, const std::string& format) {
  using namespace triarray;
  Format f = parse_format(format);
  if (structure == "A" || structure == "B") {
    if (rmax < 0) {
      std::cerr << "table " << structure << ": --rmax is required\n";
      return 2;
    }
    if (!symbolic && s < 0) {
      std::cerr << "table " << structure << ": --s is required without --symbolic\n";
      return 2;
    }
    if (structure == "A") {
      if (symbolic)
        write_table(std::cout, build_a_symbolic(rmax), f);
      else
        write_table(std::cout, build_a_numeric(s, rmax), s, f);
    } else {
      if (symbolic)
        write_table(std::cout, build_b_symbolic(rmax), f);
      else
        write_table(std::cout, build_b_numeric(s, rmax), s, f);
    }
    return 0;
  }
  if (structure == "phi" || structure == "phiT") {
    if (nmax < 0) {
      std::cerr << "table " << structure << ": --nmax is required\n";
      return 2;
    }
    PhiField field = build_phi(nmax);
    if (structure == "phi")
      write_table(std::cout, field, f);
    else
      write_table(std::cout, adjoint(field), f);
    return 0;
  }
  // F
  if (n < 0 || lam < 0) {
    std::cerr << "table F: --n and --lam are required\n";
    return 2;
  }
  PhiAdjoint adj = adjoint(build_phi(n));
  write_poly_table(std::cout, F_from_phi(n, lam, adj), n, lam, f);
  return 0;
}

int run_verify(const std::string& suite, const triarray::suites::Bounds& bounds) {
  using namespace triarray::suites;
  std::vector<IdentityResult> results;
  if (suite == "all")
    results = run_all(bounds);
  else
    results = run_suite(suite, bounds);

  bool all_pass = true;
  long failures = 0;
  for (const auto& r : results) {
    std::cout << r.name << ": " << (r.pass ? "PASS" : "FAIL") << ", " << r.checks << " " << r.unit
              << " checked";
    if (!r.pass) std::cout << ", " << r.failures.size() << " failed";
    std::cout << "\n";
    for (const auto& f : r.failures) std::cout << "  " << f << "\n";
    all_pass = all_pass && r.pass;
    failures += static_cast<long>(r.failures.size());
  }
  if (!all_pass) {
    std::cout << "verify " << suite << ": FAIL (" << failures << " failures)\n";
    return 1;
  }
  std::cout << "verify " << suite << ": PASS\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact builders and verifiers for the triangular structures A, B, phi and their "
               "generating functions"};
  app.require_subcommand(1);

  // table
  auto* table = app.add_subcommand("table", "print a structure as csv, json, or latex");
  std::string structure;
  long s = -1, rmax = -1, nmax = -1, n = -1, lam = -1;
  bool symbolic = false;
  std::string format = "csv";
  table->add_option("structure", structure, "A, B, phi, phiT, or F")
      ->required()
      ->check(CLI::IsMember({"A", "B", "phi", "phiT", "F"}));
  table->add_option("--s", s, "size parameter for numeric A/B tables")->check(CLI::NonNegativeNumber);
  table->add_option("--rmax", rmax, "number of rows for A/B")->check(CLI::NonNegativeNumber);
  table->add_option("--nmax", nmax, "number of layers for phi/phiT")->check(CLI::NonNegativeNumber);
  table->add_option("--n", n, "first index of F")->check(CLI::NonNegativeNumber);
  table->add_option("--lam", lam, "second index of F")->check(CLI::NonNegativeNumber);
  table->add_flag("--symbolic", symbolic, "entries as falling-factorial polynomials in s");
  table->add_option("--format", format, "csv (default), json, or latex")
      ->check(CLI::IsMember({"csv", "json", "latex"}));

  // verify
  auto* verify = app.add_subcommand("verify", "run an identity suite and report PASS/FAIL");
  std::string suite;
  triarray::suites::Bounds bounds;
  bool default_bounds = false;
  std::vector<std::string> suite_choices = triarray::suites::suite_names();
  suite_choices.push_back("all");
  verify->add_option("suite", suite, "suite name or 'all'")
      ->required()
      ->check(CLI::IsMember(suite_choices));
  verify->add_option("--smax", bounds.smax, "largest size parameter")->check(CLI::NonNegativeNumber);
  verify->add_option("--rmax", bounds.rmax, "largest row index")->check(CLI::NonNegativeNumber);
  verify->add_option("--nmax", bounds.nmax, "largest layer index")->check(CLI::NonNegativeNumber);
  verify->add_option("--K", bounds.K, "truncation order of the trivariate series")
      ->check(CLI::NonNegativeNumber);
  verify->add_flag("--default-bounds", default_bounds, "use the built-in bounds (s<=8, r<=12, n<=10, K=8)");

  // oeis-rows
  auto* oeis = app.add_subcommand("oeis-rows",
                                  "coefficient rows of A_{s,r,0} for even r, ascending (s)_k");
  long oeis_rmax = -1;
  oeis->add_option("--rmax", oeis_rmax, "largest (even) row index")
      ->required()
      ->check(CLI::Range(2L, 1000L));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*table) return run_table(structure, s, rmax, nmax, n, lam, symbolic, format);
    if (*verify) return run_verify(suite, bounds);
    if (*oeis) {
      for (const auto& row : triarray::oeis_rows(oeis_rmax)) std::cout << row << "\n";
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
