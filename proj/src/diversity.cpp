#include "rfdiv/diversity.hpp"

#include "rfdiv/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>

namespace rfdiv::diversity {

using covers::FiberSpec;
using covers::FiberStatus;
using kummer::FieldFingerprint;

std::string_view to_string(Method m) {
  switch (m) {
    case Method::exact_kummer: return "exact-kummer";
    case Method::ramified_set: return "ramified-set";
    case Method::fingerprint: return "fingerprint";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  if (text == "exact" || text == "exact-kummer") return Method::exact_kummer;
  if (text == "ramified" || text == "ramified-set") return Method::ramified_set;
  if (text == "fingerprint") return Method::fingerprint;
  throw DomainError("diversity", "diversity: unknown method '" + std::string(text) + "'");
}

std::string_view to_string(SkipReason r) {
  switch (r) {
    case SkipReason::branch: return "branch";
    case SkipReason::degenerate_counted_as_q: return "degenerate-counted-as-Q";
    case SkipReason::unresolved: return "unresolved";
  }
  return "?";
}

namespace {

void require_n(long N) {
  if (N < 1) throw DomainError("diversity", "diversity: N ≥ 1 required");
}

const covers::CyclicCover& require_cyclic(const covers::CoverSpec& c, std::string_view what) {
  const auto* cyc = std::get_if<covers::CyclicCover>(&c);
  if (!cyc) throw DomainError("diversity", "diversity: " + std::string(what) + " requires a cyclic cover y^p = g(x)");
  return *cyc;
}

struct Tally {
  std::vector<long> series;
  std::vector<Skipped> skipped;
};

// Shared walk over fibers in increasing n: `key_is_new(fiber)` decides whether the
// fiber's field is new; branch and unresolved fibers never count.
template <class IsNew>
Tally walk(const std::vector<FiberSpec>& fibers, IsNew&& key_is_new) {
  Tally t;
  t.series.reserve(fibers.size());
  long distinct = 0;
  for (const auto& f : fibers) {
    const long n = f.n.get_si();
    switch (f.status) {
      case FiberStatus::branch:
        t.skipped.push_back({n, SkipReason::branch, {}});
        break;
      case FiberStatus::unresolved:
        t.skipped.push_back({n, SkipReason::unresolved, f.unresolved_reason});
        break;
      case FiberStatus::degenerate:
        t.skipped.push_back({n, SkipReason::degenerate_counted_as_q, {}});
        [[fallthrough]];
      case FiberStatus::regular:
        if (key_is_new(f)) ++distinct;
        break;
    }
    t.series.push_back(distinct);
  }
  return t;
}

Tally tally_exact(const std::vector<FiberSpec>& fibers) {
  std::set<Int> seen;
  return walk(fibers, [&](const FiberSpec& f) { return seen.insert(f.kummer_class->canonical_value()).second; });
}

Tally tally_ramified(const std::vector<FiberSpec>& fibers, const std::vector<Int>& excluded) {
  std::set<std::vector<Int>> seen;
  return walk(fibers, [&](const FiberSpec& f) { return seen.insert(kummer::ramified_set(*f.kummer_class, excluded)).second; });
}

using FiberKey = std::vector<FieldFingerprint>;

bool match_from(const FiberKey& a, const FiberKey& b, std::size_t i, std::vector<bool>& used) {
  if (i == a.size()) return true;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (used[j] || kummer::certifies_distinct(a[i], b[j])) continue;
    used[j] = true;
    if (match_from(a, b, i + 1, used)) return true;
    used[j] = false;
  }
  return false;
}

// Fibers certainly carry different multisets of residue fields when no pairing of
// their factor fields survives the fingerprint test.
bool fibers_certified_distinct(const FiberKey& a, const FiberKey& b) {
  if (a.size() != b.size()) return true;
  std::vector<bool> used(b.size(), false);
  return !match_from(a, b, 0, used);
}

std::vector<FiberKey> fingerprint_keys(const covers::CoverSpec& c, const std::vector<FiberSpec>& fibers,
                                       const EngineOptions& options) {
  std::vector<FiberKey> keys(fibers.size());
  const unsigned budget = options.specialize.prime_budget;
  const auto* cyc = std::get_if<covers::CyclicCover>(&c);
  const FieldFingerprint rational = kummer::field_fingerprint(polyring::IntPoly{0, 1}, budget, true);
  parallel_for(fibers.size(), options.jobs, [&](std::size_t i) {
    const FiberSpec& f = fibers[i];
    if (f.status == FiberStatus::branch || f.status == FiberStatus::unresolved) return;
    if (cyc) {
      if (f.status == FiberStatus::degenerate) {
        keys[i] = {rational};
      } else {
        // x^p - k for the canonical representative k of the class.
        const polyring::IntPoly minpoly =
            polyring::IntPoly::monomial(Int(1), cyc->p) - polyring::IntPoly::constant(f.kummer_class->canonical_value());
        keys[i] = {kummer::field_fingerprint(minpoly, budget, true)};
      }
    } else {
      for (const auto& factor : f.factors) {
        for (unsigned m = 0; m < factor.multiplicity; ++m) keys[i].push_back(factor.fingerprint);
      }
      std::sort(keys[i].begin(), keys[i].end());
    }
  });
  return keys;
}

Tally tally_fingerprint(const covers::CoverSpec& c, const std::vector<FiberSpec>& fibers, const EngineOptions& options) {
  const std::vector<FiberKey> keys = fingerprint_keys(c, fibers, options);
  // Greedy: a fiber counts when it is certified distinct from every fiber counted
  // so far, so the counted fibers are pairwise distinct and D is a lower bound.
  std::vector<const FiberKey*> representatives;
  return walk(fibers, [&](const FiberSpec& f) {
    const FiberKey& key = keys[static_cast<std::size_t>(&f - fibers.data())];
    for (const FiberKey* rep : representatives) {
      if (!fibers_certified_distinct(key, *rep)) return false;
    }
    representatives.push_back(&key);
    return true;
  });
}

class RankF2 {
 public:
  // Returns true when the row (column indices with odd exponent) raised the rank.
  bool insert(std::vector<std::size_t> bits) {
    std::vector<std::uint64_t> row;
    for (std::size_t b : bits) {
      if (row.size() <= b / 64) row.resize(b / 64 + 1, 0);
      row[b / 64] ^= std::uint64_t{1} << (b % 64);
    }
    for (;;) {
      std::size_t word = 0;
      while (word < row.size() && row[word] == 0) ++word;
      if (word == row.size()) return false;
      const std::size_t pivot = word * 64 + static_cast<std::size_t>(__builtin_ctzll(row[word]));
      auto it = basis_.find(pivot);
      if (it == basis_.end()) {
        basis_.emplace(pivot, std::move(row));
        return true;
      }
      const auto& b = it->second;
      if (row.size() < b.size()) row.resize(b.size(), 0);
      for (std::size_t w = word; w < b.size(); ++w) row[w] ^= b[w];
    }
  }

 private:
  // pivot column -> row whose lowest set bit is the pivot
  std::unordered_map<std::size_t, std::vector<std::uint64_t>> basis_;
};

class RankFp {
 public:
  explicit RankFp(unsigned p) : p_(p) {}

  bool insert(std::map<std::size_t, unsigned> row) {
    for (;;) {
      if (row.empty()) return false;
      const auto [pivot, value] = *row.begin();
      auto it = basis_.find(pivot);
      if (it == basis_.end()) {
        const unsigned inv = inverse(value);
        for (auto& [col, v] : row) v = static_cast<unsigned>(std::uint64_t{v} * inv % p_);
        basis_.emplace(pivot, std::move(row));
        return true;
      }
      // row -= value * basis_row (basis rows have pivot entry 1)
      for (const auto& [col, v] : it->second) {
        const unsigned sub = static_cast<unsigned>(std::uint64_t{v} * value % p_);
        unsigned& slot = row[col];
        slot = (slot + p_ - sub) % p_;
        if (slot == 0) row.erase(col);
      }
    }
  }

 private:
  unsigned inverse(unsigned a) const {
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<unsigned>(result);
  }

  unsigned p_;
  std::unordered_map<std::size_t, std::map<std::size_t, unsigned>> basis_;
};

std::vector<std::string> cover_assumptions(const covers::CoverSpec& c) {
  std::vector<std::string> out;
  if (covers::is_cyclic(c)) {
    out.push_back("geometric irreducibility certified by Capelli: some factor of g has multiplicity not divisible by p");
  } else {
    out.push_back("plane cover: geometric irreducibility of F over Qbar(x) is assumed, not verified");
    out.push_back("plane cover: branch locus taken as the roots of radical(disc_y F), possibly over-approximated");
  }
  out.push_back("branch fibers are excluded; degenerate fibers contribute the field Q once");
  return out;
}

}  // namespace

std::vector<Int> ramified_exclusions(const covers::CyclicCover& c) {
  std::set<Int> primes{Int(c.p)};
  auto add_support = [&](const Int& v) {
    if (v == 0) return;
    for (const auto& pp : arith::factor(v).factors) primes.insert(pp.prime);
  };
  add_support(c.g.leading());
  add_support(polyring::discriminant(polyring::radical(c.g)));
  return {primes.begin(), primes.end()};
}

std::vector<FiberSpec> specialize_range(const covers::CoverSpec& c, long N, const EngineOptions& options) {
  require_n(N);
  std::vector<FiberSpec> fibers(static_cast<std::size_t>(N));
  parallel_for(fibers.size(), options.jobs, [&](std::size_t i) {
    fibers[i] = covers::specialize(c, Int(static_cast<long>(i) + 1), options.specialize);
  });
  return fibers;
}

DiversityReport weak_diversity_count(const covers::CoverSpec& c, long N, Method method, const EngineOptions& options) {
  require_n(N);
  DiversityReport report;
  report.cover = covers::describe(c);
  report.N = N;
  report.method = method;
  report.assumptions = cover_assumptions(c);
  if (method != Method::fingerprint) require_cyclic(c, std::string(to_string(method)) + " method");
  const auto fibers = specialize_range(c, N, options);
  Tally t;
  switch (method) {
    case Method::exact_kummer:
      t = tally_exact(fibers);
      report.assumptions.push_back("fields compared up to isomorphism by canonical Kummer class (exact)");
      break;
    case Method::ramified_set:
      report.excluded_primes = ramified_exclusions(std::get<covers::CyclicCover>(c));
      t = tally_ramified(fibers, report.excluded_primes);
      report.assumptions.push_back(
          "ramified-set count is a lower bound; primes dividing p, lc(g) and disc(radical g) are ignored");
      break;
    case Method::fingerprint:
      t = tally_fingerprint(c, fibers, options);
      report.assumptions.push_back("fingerprint count is a certified lower bound with prime budget " +
                                   std::to_string(options.specialize.prime_budget));
      break;
  }
  report.series = std::move(t.series);
  report.skipped = std::move(t.skipped);
  return report;
}

CompositumReport strong_diversity_rank(const covers::CoverSpec& c, long N, const EngineOptions& options) {
  require_n(N);
  const auto& cyc = require_cyclic(c, "strong diversity rank");
  CompositumReport report;
  report.cover = covers::describe(c);
  report.p = cyc.p;
  report.N = N;
  report.assumptions = cover_assumptions(c);
  report.assumptions.push_back("[k(N):Q] = p^rank over Q, since [Q(zeta_p):Q] = p - 1 is prime to p");
  const auto fibers = specialize_range(c, N, options);

  std::map<Int, std::size_t> column;  // prime -> column; column 0 is the sign for p = 2
  bool sign_used = false;
  RankF2 rank2;
  RankFp rankp(cyc.p);
  long rank = 0;
  const double log_p = std::log(static_cast<double>(cyc.p));
  for (const auto& f : fibers) {
    const long n = f.n.get_si();
    if (f.status == FiberStatus::unresolved) {
      throw BudgetError("diversity", f.value,
                        "diversity: strong rank aborted, g(" + std::to_string(n) + ") unresolved: " + f.unresolved_reason);
    }
    if (f.status == FiberStatus::branch) {
      report.skipped.push_back({n, SkipReason::branch, {}});
    } else {
      if (f.status == FiberStatus::degenerate) report.skipped.push_back({n, SkipReason::degenerate_counted_as_q, {}});
      const auto& kernel = f.kummer_class->kernel;
      auto column_of = [&](const Int& q) {
        auto [it, inserted] = column.emplace(q, column.size() + 1);
        return it->second;
      };
      bool raised = false;
      if (cyc.p == 2) {
        std::vector<std::size_t> bits;
        if (kernel.sign < 0) {
          bits.push_back(0);
          sign_used = true;
        }
        for (const auto& pp : kernel.factors) bits.push_back(column_of(pp.prime));
        raised = rank2.insert(std::move(bits));
      } else {
        std::map<std::size_t, unsigned> row;
        for (const auto& pp : kernel.factors) row[column_of(pp.prime)] = pp.exponent % cyc.p;
        raised = rankp.insert(std::move(row));
      }
      if (raised) ++rank;
    }
    report.rank.push_back(rank);
    report.log_degree.push_back(static_cast<double>(rank) * log_p);
  }
  report.columns = static_cast<long>(column.size()) + (sign_used ? 1 : 0);
  return report;
}

NormCollision norm_collision_check(const polyring::IntPoly& h, long N) {
  require_n(N);
  if (h.degree() < 1) throw DomainError("diversity", "diversity: norm collision check requires a non-constant polynomial");
  std::vector<Int> values;
  values.reserve(static_cast<std::size_t>(N));
  for (long n = 1; n <= N; ++n) values.push_back(abs(h(Int(n))));
  std::sort(values.begin(), values.end());
  NormCollision out;
  out.bound = 2ul * static_cast<unsigned long>(h.degree());
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    if (j - i > out.max_multiplicity) {
      out.max_multiplicity = j - i;
      out.witness = values[i];
    }
    i = j;
  }
  out.within_bound = out.max_multiplicity <= out.bound;
  return out;
}

MethodComparison compare_methods(const covers::CoverSpec& c, long N, const EngineOptions& options) {
  require_n(N);
  const auto& cyc = require_cyclic(c, "compare_methods");
  const auto fibers = specialize_range(c, N, options);
  const Tally exact = tally_exact(fibers);
  const Tally ramified = tally_ramified(fibers, ramified_exclusions(cyc));
  const Tally fingerprint = tally_fingerprint(c, fibers, options);
  MethodComparison out;
  out.N = N;
  out.exact = exact.series.back();
  out.ramified = ramified.series.back();
  out.fingerprint = fingerprint.series.back();
  for (std::size_t i = 0; i < exact.series.size(); ++i) {
    if (ramified.series[i] > exact.series[i] || fingerprint.series[i] > exact.series[i]) out.ordered = false;
  }
  return out;
}

}  // namespace rfdiv::diversity
