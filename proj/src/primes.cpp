#include "rfdiv/arith.hpp"

#include <vector>

namespace rfdiv::arith {

namespace {

std::vector<std::uint32_t> sieve_primes(std::uint32_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint32_t> primes;
  primes.reserve(80000);
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = std::uint64_t{i} * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

}  // namespace

std::span<const std::uint32_t> small_primes() {
  static const std::vector<std::uint32_t> table = sieve_primes(kSmallPrimeLimit);
  return table;
}

}  // namespace rfdiv::arith
