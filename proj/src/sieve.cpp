#include "rfdiv/sieve.hpp"

#include "rfdiv/parallel.hpp"

#include <algorithm>
#include <set>

namespace rfdiv::sieve {

using polyring::IntPoly;

namespace {

void require_nonconstant(const IntPoly& h, long N) {
  if (h.degree() < 1) throw DomainError("sieve", "sieve: h must be non-constant");
  if (N < 1) throw DomainError("sieve", "sieve: N ≥ 1 required");
}

bool every_residue_is_root(const IntPoly& h, std::uint64_t q) {
  const std::uint64_t q2 = q * q;
  const Int m(static_cast<unsigned long>(q2));
  for (std::uint64_t r = 0; r < q2; ++r) {
    Int v = h(Int(static_cast<unsigned long>(r)));
    if (!mpz_divisible_p(v.get_mpz_t(), m.get_mpz_t())) return false;
  }
  return true;
}

Int largest_prime(const Int& v) {
  if (abs(v) <= 1) return 0;
  const auto f = arith::factor(v);
  return f.factors.back().prime;
}

}  // namespace

std::vector<std::uint64_t> fixed_square_primes(const IntPoly& h) {
  if (h.degree() < 1) throw DomainError("sieve", "sieve: h must be non-constant");
  // A fixed prime has q <= deg h or q^2 | content(h): otherwise h mod q^2 (or h/q mod q)
  // is a nonzero polynomial of degree < q and misses some residue.
  const Int content = abs(h.content());
  std::set<std::uint64_t> out;
  for (std::uint32_t q : arith::small_primes()) {
    if (q > static_cast<std::uint32_t>(h.degree())) break;
    if (every_residue_is_root(h, q)) out.insert(q);
  }
  if (content > 1) {
    const auto cf = arith::factor(content);
    Int bound = std::max<long>(h.degree(), 1000);
    bool bound_known = false;
    for (const auto& [q, e] : cf.factors) {
      if (e < 2) continue;
      if (q > bound && !bound_known) {
        bound = std::max(bound, largest_prime(polyring::discriminant(polyring::radical(h))));
        bound_known = true;
      }
      if (q <= bound) out.insert(q.get_ui());
    }
  }
  return {out.begin(), out.end()};
}

Rational euler_product(const IntPoly& h, unsigned long bound, const std::vector<std::uint64_t>& fixed) {
  Rational product = 1;
  for (std::uint32_t q : arith::small_primes()) {
    if (q > bound) break;
    if (std::binary_search(fixed.begin(), fixed.end(), std::uint64_t{q})) continue;
    const Int q2 = Int(q) * Int(q);
    const Int rho = polyring::roots_mod(h, q2);
    product *= Rational(q2 - rho, q2);
    product.canonicalize();
  }
  return product;
}

Rational euler_density(const IntPoly& h, unsigned long bound) {
  if (h.degree() < 1) throw DomainError("sieve", "sieve: h must be non-constant");
  const IntPoly separable = polyring::discriminant(h) == 0 ? polyring::radical(h) : h;
  return euler_product(separable, bound, fixed_square_primes(separable));
}

SieveReport squarefree_value_count(const IntPoly& h, long N, const SieveOptions& options) {
  require_nonconstant(h, N);
  SieveReport report;
  report.h = h;
  report.N = N;
  report.euler_bound = options.euler_bound;
  report.fixed_square_primes = fixed_square_primes(h);
  const auto& fixed = report.fixed_square_primes;
  auto is_fixed = [&](std::uint64_t q) { return std::binary_search(fixed.begin(), fixed.end(), q); };

  const std::size_t count = static_cast<std::size_t>(N);
  std::vector<char> bad(count, 0);

  // |h| on [1, N] is bounded by sum |c_i| N^i.
  Int max_abs = 0;
  for (std::size_t i = 0; i < h.coeffs().size(); ++i) {
    Int term;
    mpz_pow_ui(term.get_mpz_t(), Int(N).get_mpz_t(), static_cast<unsigned long>(i));
    max_abs += abs(h.coeffs()[i]) * term;
  }
  const Int root = sqrt(max_abs);
  // Past about 64 primes per n, factoring the survivors is cheaper than more sieving.
  const std::uint64_t balance = std::max<std::uint64_t>(1u << 16, 64 * static_cast<std::uint64_t>(N));
  const std::uint64_t limit =
      std::min<std::uint64_t>({options.sieve_prime_limit, std::uint64_t{arith::kSmallPrimeLimit}, balance});
  const bool complete = root <= limit;
  const std::uint64_t sieve_bound = complete ? root.get_ui() : limit;
  report.sieve_bound = sieve_bound;

  // A square prime of the content that is not fixed (beyond the bound) rules out every n.
  bool all_bad = false;
  if (const Int content = abs(h.content()); content > 1) {
    for (const auto& [q, e] : arith::factor(content).factors) {
      if (e >= 2 && !(q.fits_ulong_p() && is_fixed(q.get_ui()))) all_bad = true;
    }
  }
  if (all_bad) {
    report.count = 0;
    report.euler_product = euler_product(h, options.euler_bound, fixed);
    if (options.keep_flags) report.flags.assign(count, false);
    return report;
  }

  std::vector<std::uint32_t> primes;
  for (std::uint32_t q : arith::small_primes()) {
    if (q > sieve_bound) break;
    if (!is_fixed(q)) primes.push_back(q);
  }
  std::vector<std::vector<std::uint64_t>> roots(primes.size());
  parallel_for(primes.size(), options.jobs, [&](std::size_t i) {
    roots[i] = polyring::roots_mod_prime_square(h, primes[i]);
  });

  constexpr std::size_t kSegment = 1 << 16;
  const std::size_t segments = (count + kSegment - 1) / kSegment;
  parallel_for(segments, options.jobs, [&](std::size_t s) {
    const std::uint64_t lo = s * kSegment + 1;  // first n in segment
    const std::uint64_t hi = std::min<std::uint64_t>(count, (s + 1) * kSegment);
    for (std::uint64_t n = lo; n <= hi; ++n) {
      if (h(Int(static_cast<unsigned long>(n))) == 0) bad[n - 1] = 1;
    }
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const std::uint64_t q2 = std::uint64_t{primes[i]} * primes[i];
      for (std::uint64_t r : roots[i]) {
        // smallest n >= lo with n = r mod q^2
        std::uint64_t n = lo + (r + q2 - lo % q2) % q2;
        for (; n <= hi; n += q2) bad[n - 1] = 1;
      }
    }
  });

  if (!complete) {
    // Values below (bound + 1)^2 have no square prime factor above the bound.
    const Int covered = (Int(static_cast<unsigned long>(sieve_bound)) + 1) * (Int(static_cast<unsigned long>(sieve_bound)) + 1) - 1;
    std::vector<char> residual(count, 0);
    parallel_for(count, options.jobs, [&](std::size_t i) {
      if (bad[i]) return;
      const Int value = h(Int(static_cast<unsigned long>(i + 1)));
      if (abs(value) <= covered) return;
      arith::Factorization f;
      try {
        f = arith::factor(value, options.factor);
      } catch (const BudgetError& e) {
        throw BudgetError("sieve", e.residual(),
                          "sieve: factorization budget exceeded at n = " + std::to_string(i + 1) + ", residual " +
                              e.residual().get_str());
      }
      residual[i] = 1;
      for (const auto& [q, e] : f.factors) {
        if (e >= 2 && !(q.fits_ulong_p() && is_fixed(q.get_ui()))) bad[i] = 1;
      }
    });
    report.residual_factorizations = std::count(residual.begin(), residual.end(), 1);
  }

  report.count = static_cast<long>(std::count(bad.begin(), bad.end(), 0));
  report.empirical_density = static_cast<double>(report.count) / static_cast<double>(N);
  report.euler_product = euler_product(h, options.euler_bound, fixed);
  if (options.keep_flags) {
    report.flags.resize(count);
    for (std::size_t i = 0; i < count; ++i) report.flags[i] = bad[i] == 0;
  }
  return report;
}

ExactOrderPrimes exact_order_prime_ratio(const IntPoly& g, long n, const arith::FactorOptions& options, unsigned jobs) {
  if (n < 1) throw DomainError("sieve", "sieve: n >= 1 required");
  if (g.degree() < 2) {
    throw DomainError("sieve", "sieve: exact-order prime count needs an irreducible polynomial of degree at least 2, "
                               "got degree " + std::to_string(g.degree()));
  }
  if (!polyring::is_irreducible(g)) {
    throw DomainError("sieve", "sieve: exact-order prime count needs an irreducible polynomial, " + g.to_string() +
                                   " is reducible over Q");
  }
  std::vector<std::vector<Int>> per_m(static_cast<std::size_t>(n));
  const Int floor(n);
  parallel_for(per_m.size(), jobs, [&](std::size_t i) {
    per_m[i] = arith::exact_order_primes(g(Int(static_cast<long>(i) + 1)), floor, options);
  });
  std::set<Int> primes;
  for (const auto& v : per_m) primes.insert(v.begin(), v.end());
  ExactOrderPrimes out;
  out.primes.assign(primes.begin(), primes.end());
  out.count = static_cast<long>(out.primes.size());
  out.ratio = static_cast<double>(out.count) / static_cast<double>(n);
  return out;
}

}  // namespace rfdiv::sieve
