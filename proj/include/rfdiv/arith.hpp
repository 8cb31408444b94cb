#pragma once

#include "rfdiv/errors.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace rfdiv::arith {

struct PrimePower {
  Int prime;
  unsigned exponent = 0;

  bool operator==(const PrimePower&) const = default;
};

/// Signed prime-power decomposition. Primes strictly increasing, exponents >= 1.
/// The factorization of +1 or -1 has no factors.
struct Factorization {
  int sign = 1;
  std::vector<PrimePower> factors;

  Int reconstruct() const;
  bool is_unit() const { return factors.empty(); }
  bool operator==(const Factorization&) const = default;
};

struct FactorOptions {
  /// Primes up to this bound are removed by trial division before Miller-Rabin.
  std::uint64_t trial_bound = 1u << 16;
  /// Total Pollard-Brent iterations allowed per call to factor().
  std::uint64_t rho_budget = 1u << 24;
};

/// Primes <= 10^6, sieved once on first use and shared read-only afterwards.
std::span<const std::uint32_t> small_primes();
inline constexpr std::uint32_t kSmallPrimeLimit = 1'000'000;

/// Deterministic for n < 3.3e24 (Miller-Rabin with the first 13 prime bases);
/// above that, Baillie-PSW via GMP.
bool is_prime(const Int& n);
bool is_prime(std::uint64_t n);

Factorization factor(const Int& n, const FactorOptions& options = {});

/// Largest e with p^e | n.
unsigned valuation(const Int& n, const Int& p);

/// sign(n) * product of primes with odd exponent in n.
Int squarefree_kernel(const Int& n, const FactorOptions& options = {});

/// Exponents reduced mod p, zero exponents dropped. For odd p the sign is absorbed
/// (-1 is a p-th power); for p = 2 it is kept.
Factorization p_free_kernel(const Int& n, unsigned p, const FactorOptions& options = {});
Factorization p_free_kernel(const Factorization& f, unsigned p);

/// { q prime : q >= min_prime, v_q(n) = 1 }, increasing.
std::vector<Int> exact_order_primes(const Int& n, const Int& min_prime,
                                    const FactorOptions& options = {});
std::vector<Int> exact_order_primes(const Factorization& f, const Int& min_prime);

}  // namespace rfdiv::arith
