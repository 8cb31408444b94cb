#pragma once

#include "rfdiv/arith.hpp"
#include "rfdiv/polyring.hpp"

#include <cstdint>
#include <vector>

namespace rfdiv::sieve {

struct SieveReport {
  polyring::IntPoly h;
  long N = 0;
  /// Primes q (up to the bound below) with q^2 | h(n) for every integer n.
  std::vector<std::uint64_t> fixed_square_primes;
  /// n in 1..N with v_q(h(n)) <= 1 for every prime q outside the fixed set.
  long count = 0;
  double empirical_density = 0.0;
  /// prod over primes q <= B, q not fixed, of (1 - rho_h(q^2)/q^2).
  Rational euler_product;
  unsigned long euler_bound = 0;
  /// Largest prime sieved; values were fully factored when this fell short of sqrt(max |h(n)|).
  std::uint64_t sieve_bound = 0;
  long residual_factorizations = 0;
  /// flags[n - 1]: h(n) passes the squarefree test. Filled only on request.
  std::vector<bool> flags;
};

struct SieveOptions {
  unsigned long euler_bound = 1000;
  unsigned jobs = 1;
  /// Primes above this are not sieved; survivors are factored instead. The sieve
  /// also stops at max(2^16, 64 N), where factoring becomes the cheaper option.
  std::uint64_t sieve_prime_limit = arith::kSmallPrimeLimit;
  arith::FactorOptions factor;
  bool keep_flags = false;
};

/// Primes q <= max(deg h, largest prime of disc(radical h), 1000) with rho_h(q^2) = q^2:
/// the integer stand-in for a fixed ideal divisor.
std::vector<std::uint64_t> fixed_square_primes(const polyring::IntPoly& h);

SieveReport squarefree_value_count(const polyring::IntPoly& h, long N, const SieveOptions& options = {});

/// Truncated Euler product for h as given, skipping `fixed`.
Rational euler_product(const polyring::IntPoly& h, unsigned long bound, const std::vector<std::uint64_t>& fixed);

/// Predicted squarefree density of h(n); the radical of h is used when h is not separable.
Rational euler_density(const polyring::IntPoly& h, unsigned long bound);

struct ExactOrderPrimes {
  long count = 0;
  double ratio = 0.0;
  std::vector<Int> primes;
};

/// #{ p >= n prime : v_p(g(m)) = 1 for some m <= n }. Requires g irreducible of degree >= 2.
ExactOrderPrimes exact_order_prime_ratio(const polyring::IntPoly& g, long n, const arith::FactorOptions& options = {},
                                         unsigned jobs = 1);

}  // namespace rfdiv::sieve
