#include "doctest.h"
#include "oracles.hpp"

#include "rfdiv/arith.hpp"
#include "rfdiv/errors.hpp"

#include <random>

using namespace rfdiv;
using arith::Factorization;
using arith::PrimePower;

namespace {

Factorization fact(int sign, std::vector<std::pair<long, unsigned>> pp) {
  Factorization f;
  f.sign = sign;
  for (auto [p, e] : pp) f.factors.push_back({Int(p), e});
  return f;
}

Factorization from_oracle(const Int& n) {
  Factorization f;
  f.sign = sgn(n) < 0 ? -1 : 1;
  for (const auto& [p, e] : oracle::trial_factor(n)) f.factors.push_back({p, e});
  return f;
}

}  // namespace

TEST_CASE("factor small values") {
  CHECK(arith::factor(12) == fact(1, {{2, 2}, {3, 1}}));
  CHECK(arith::factor(-1) == fact(-1, {}));
  CHECK(arith::factor(1) == fact(1, {}));
  CHECK(arith::factor(97) == fact(1, {{97, 1}}));
  CHECK_THROWS_AS(arith::factor(0), DomainError);
}

TEST_CASE("factor agrees with trial division") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-2'000'000'000L, 2'000'000'000L);
  for (int i = 0; i < 300; ++i) {
    Int n = dist(rng);
    if (n == 0) continue;
    CHECK(arith::factor(n) == from_oracle(n));
  }
  for (long n = 1; n <= 3000; ++n) CHECK(arith::factor(n) == from_oracle(n));
}

TEST_CASE("factor semiprimes beyond trial division") {
  const Int p("1000000007"), q("998244353"), r("4294967311");
  CHECK(arith::factor(p * q) == fact(1, {{998244353, 1}, {1000000007, 1}}));
  const auto f = arith::factor(-p * p * r * 12);
  CHECK(f.sign == -1);
  CHECK(f.reconstruct() == -p * p * r * 12);
  REQUIRE(f.factors.size() == 4);
  CHECK(f.factors[2] == PrimePower{p, 2});
  CHECK(f.factors[3] == PrimePower{r, 1});
  const Int big("170141183460469231731687303715884105727");  // 2^127 - 1
  CHECK(arith::factor(big * 3).factors == std::vector<PrimePower>{{Int(3), 1}, {big, 1}});
  CHECK(arith::is_prime(big));
}

TEST_CASE("reconstruct round trip on random large values") {
  std::mt19937_64 rng(11);
  gmp_randclass gr(gmp_randinit_default);
  gr.seed(42);
  for (int i = 0; i < 40; ++i) {
    Int n = gr.get_z_bits(90) + 1;
    if (i % 2) n = -n;
    const auto f = arith::factor(n);
    CHECK(f.reconstruct() == n);
    for (const auto& pp : f.factors) CHECK(arith::is_prime(pp.prime));
    for (std::size_t k = 1; k < f.factors.size(); ++k) CHECK(f.factors[k - 1].prime < f.factors[k].prime);
  }
}

TEST_CASE("budget exhaustion names the residual") {
  const Int p("1000000000000000003"), q("1000000000000000009");
  arith::FactorOptions tight;
  tight.rho_budget = 10;
  try {
    arith::factor(p * q * 4, tight);
    FAIL("expected BudgetError");
  } catch (const BudgetError& e) {
    CHECK(e.residual() == p * q);
    CHECK(std::string(e.what()).find(Int(p * q).get_str()) != std::string::npos);
  }
}

TEST_CASE("primality matches the oracle") {
  for (std::uint64_t n = 0; n < 20000; ++n) CHECK(arith::is_prime(n) == oracle::is_prime(n));
  CHECK(arith::is_prime(std::uint64_t{18446744073709551557ULL}));
  CHECK_FALSE(arith::is_prime(std::uint64_t{3215031751ULL}));  // strong pseudoprime to 2,3,5,7
  CHECK_FALSE(arith::is_prime(Int("3825123056546413051")));
  CHECK_FALSE(arith::is_prime(Int("318665857834031151167461")));
  CHECK_FALSE(arith::is_prime(Int("3317044064679887385961981")));
  CHECK(arith::is_prime(Int("1000000000000000000000007")));
}

TEST_CASE("valuation") {
  CHECK(arith::valuation(12, 2) == 2);
  CHECK(arith::valuation(7, 2) == 0);
  CHECK(arith::valuation(-8, 2) == 3);
  CHECK_THROWS_AS(arith::valuation(12, 4), DomainError);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> dist(1, 100000);
  for (int i = 0; i < 200; ++i) {
    const Int a = dist(rng), b = dist(rng);
    for (long p : {2L, 3L, 5L, 7L}) CHECK(arith::valuation(a * b, p) == arith::valuation(a, p) + arith::valuation(b, p));
  }
}

TEST_CASE("squarefree kernel") {
  CHECK(arith::squarefree_kernel(12) == 3);
  CHECK(arith::squarefree_kernel(1) == 1);
  CHECK(arith::squarefree_kernel(-18) == -2);
  for (long n = -500; n <= 500; ++n) {
    if (n == 0) continue;
    CHECK(arith::squarefree_kernel(n) == oracle::squarefree_kernel(n));
    CHECK(arith::squarefree_kernel(n) == arith::p_free_kernel(n, 2).reconstruct());
    for (long k : {2L, 3L, 10L}) CHECK(arith::squarefree_kernel(n * k * k) == arith::squarefree_kernel(n));
  }
}

TEST_CASE("p-free kernel") {
  CHECK(arith::p_free_kernel(8, 3) == fact(1, {}));
  CHECK(arith::p_free_kernel(12, 3) == fact(1, {{2, 2}, {3, 1}}));
  CHECK(arith::p_free_kernel(-4, 2) == fact(-1, {}));
  CHECK(arith::p_free_kernel(-24, 3) == fact(1, {{3, 1}}));
  for (unsigned p : {2u, 3u, 5u}) {
    for (long n = -200; n <= 200; ++n) {
      if (n == 0) continue;
      const auto base = arith::p_free_kernel(n, p);
      for (long k : {2L, -3L, 6L}) {
        Int kp;
        mpz_pow_ui(kp.get_mpz_t(), Int(k).get_mpz_t(), p);
        CHECK(arith::p_free_kernel(n * kp, p) == base);
      }
      for (const auto& pp : base.factors) {
        CHECK(pp.exponent >= 1);
        CHECK(pp.exponent < p);
      }
      if (p % 2) CHECK(base.sign == 1);
    }
  }
}

TEST_CASE("exact-order primes") {
  CHECK(arith::exact_order_primes(12, 2) == std::vector<Int>{3});
  CHECK(arith::exact_order_primes(4, 2).empty());
  CHECK(arith::exact_order_primes(30, 3) == std::vector<Int>{3, 5});
  for (long n = 2; n < 2000; ++n) {
    std::vector<Int> expect;
    for (const auto& [q, e] : oracle::trial_factor(n)) {
      if (e == 1 && q >= 5) expect.push_back(q);
    }
    CHECK(arith::exact_order_primes(n, 5) == expect);
  }
}

TEST_CASE("small prime table") {
  const auto primes = arith::small_primes();
  CHECK(primes.size() == 78498);
  CHECK(primes.front() == 2);
  CHECK(primes.back() == 999983);
}
