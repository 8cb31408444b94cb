#pragma once

#include "rfdiv/arith.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace rfdiv::cli {

struct RunConfig {
  std::string subcommand;
  std::string cover;  // --cover
  std::string poly;   // --poly
  unsigned p = 0;     // --p, with --poly: the cover y^p = poly
  long N = 0;
  std::string method = "exact";
  unsigned prime_budget = 50;          // --primes
  unsigned long euler_bound = 1000;    // --euler-bound
  std::string output = "json";
  std::string out_path;
  unsigned jobs = 1;
  std::uint64_t factor_budget = 1u << 24;
  // classify-radical
  std::string value;
  std::vector<std::string> compare_with;
};

enum ExitCode : int { ok = 0, failure = 1, domain_error = 2, budget_error = 3 };

/// Runs one subcommand. The report goes to `out` (or to out_path), diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs it.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rfdiv::cli
