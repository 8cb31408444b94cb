#pragma once

#include "rfdiv/covers.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace rfdiv::diversity {

enum class Method { exact_kummer, ramified_set, fingerprint };
std::string_view to_string(Method m);
/// Accepts "exact", "ramified", "fingerprint".
Method parse_method(std::string_view text);

enum class SkipReason { branch, degenerate_counted_as_q, unresolved };
std::string_view to_string(SkipReason r);

struct Skipped {
  long n = 0;
  SkipReason reason = SkipReason::branch;
  std::string detail;
};

struct DiversityReport {
  std::string cover;
  long N = 0;
  Method method = Method::exact_kummer;
  /// series[i] = D(i + 1): distinct fields among the fibers over 1..i+1.
  std::vector<long> series;
  std::vector<Skipped> skipped;
  /// Primes left out of ramified sets (ramified-set method only).
  std::vector<Int> excluded_primes;
  std::vector<std::string> assumptions;

  long distinct() const { return series.empty() ? 0 : series.back(); }
  double ratio() const { return N ? static_cast<double>(distinct()) / static_cast<double>(N) : 0.0; }
};

struct CompositumReport {
  std::string cover;
  unsigned p = 2;
  long N = 0;
  /// rank[i] = F_p-rank of the classes of g(1), ..., g(i + 1).
  std::vector<long> rank;
  /// rank * log(p): natural log of [k(n):Q].
  std::vector<double> log_degree;
  std::vector<Skipped> skipped;
  /// Distinct primes met in the kernels, plus the sign column for p = 2 when used.
  long columns = 0;
  std::vector<std::string> assumptions;
};

struct EngineOptions {
  covers::SpecializeOptions specialize;
  unsigned jobs = 1;
};

/// Primes dividing p, lc(g) and disc(radical(g)): kept out of ramified sets.
std::vector<Int> ramified_exclusions(const covers::CyclicCover& c);

/// Specializes fibers 1..N in parallel; output indexed by n - 1.
std::vector<covers::FiberSpec> specialize_range(const covers::CoverSpec& c, long N, const EngineOptions& options);

DiversityReport weak_diversity_count(const covers::CoverSpec& c, long N, Method method,
                                     const EngineOptions& options = {});

/// Cyclic covers only. [k(N):Q] = p^rank(N).
CompositumReport strong_diversity_rank(const covers::CoverSpec& c, long N, const EngineOptions& options = {});

struct NormCollision {
  unsigned long max_multiplicity = 0;
  Int witness;  // smallest |h(n)| attaining the maximum
  unsigned long bound = 0;  // 2 deg h
  bool within_bound = true;
};

/// Largest number of n in 1..N sharing one value of |h(n)|.
NormCollision norm_collision_check(const polyring::IntPoly& h, long N);

struct MethodComparison {
  long N = 0;
  long exact = 0;
  long ramified = 0;
  long fingerprint = 0;
  /// ramified <= exact and fingerprint <= exact at every prefix.
  bool ordered = true;
};

/// Cyclic covers only.
MethodComparison compare_methods(const covers::CoverSpec& c, long N, const EngineOptions& options = {});

}  // namespace rfdiv::diversity
