#include "rfdiv/arith.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rfdiv::arith {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

bool fits_u64(const Int& n) { return mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

u64 to_u64(const Int& n) {
  u64 lo = 0;
  mpz_export(&lo, nullptr, -1, sizeof(u64), 0, 0, n.get_mpz_t());
  return lo;
}

Int from_u64(u64 v) {
  Int r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(u64), 0, 0, &v);
  return r;
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool miller_rabin_u64(u64 n, u64 a) {
  a %= n;
  if (a == 0) return true;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool miller_rabin(const Int& n, unsigned long a) {
  Int d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Int x;
  Int base = a;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Int minus_one = n - 1;
  if (x == 1 || x == minus_one) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == minus_one) return true;
  }
  return false;
}

class RhoBudget {
 public:
  explicit RhoBudget(u64 limit) : left_(limit) {}

  void spend(u64 steps, const Int& residual) {
    if (steps > left_) {
      throw BudgetError("arith", residual,
                        "arith: factorization budget exceeded, unfactored residual " +
                            residual.get_str());
    }
    left_ -= steps;
  }

 private:
  u64 left_;
};

// Brent's cycle-finding variant of Pollard rho, batching gcds over blocks of 128 steps.
u64 brent_u64(u64 n, RhoBudget& budget) {
  constexpr u64 kBlock = 128;
  const Int residual = from_u64(n);
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 v) { return static_cast<u64>((static_cast<u128>(v) * v + c) % n); };
    u64 y = 2, x = 2, ys = 2, q = 1, g = 1;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      budget.spend(r, residual);
      for (u64 k = 0; k < r && g == 1; k += kBlock) {
        ys = y;
        const u64 steps = std::min(kBlock, r - k);
        for (u64 i = 0; i < steps; ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        budget.spend(steps, residual);
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

Int brent_mpz(const Int& n, RhoBudget& budget) {
  constexpr u64 kBlock = 128;
  for (unsigned long c = 1;; ++c) {
    auto f = [&](Int& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    Int y = 2, x = 2, ys = 2, q = 1, g = 1, diff;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) f(y);
      budget.spend(r, n);
      for (u64 k = 0; k < r && g == 1; k += kBlock) {
        ys = y;
        const u64 steps = std::min(kBlock, r - k);
        for (u64 i = 0; i < steps; ++i) {
          f(y);
          diff = x - y;
          q = q * diff % n;
        }
        budget.spend(steps, n);
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (g == n) {
      do {
        f(ys);
        diff = x - ys;
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

// Splits m > 1 (no prime factors below the trial bound required) into primes.
void split_composite(const Int& m, std::map<Int, unsigned>& acc, RhoBudget& budget) {
  std::vector<Int> stack{m};
  while (!stack.empty()) {
    Int x = std::move(stack.back());
    stack.pop_back();
    if (x == 1) continue;
    if (mpz_even_p(x.get_mpz_t())) {
      unsigned e = mpz_remove(x.get_mpz_t(), x.get_mpz_t(), Int(2).get_mpz_t());
      acc[Int(2)] += e;
      stack.push_back(x);
      continue;
    }
    if (is_prime(x)) {
      ++acc[x];
      continue;
    }
    if (mpz_perfect_square_p(x.get_mpz_t())) {
      Int root = sqrt(x);
      stack.push_back(root);
      stack.push_back(root);
      continue;
    }
    Int d = fits_u64(x) ? from_u64(brent_u64(to_u64(x), budget)) : brent_mpz(x, budget);
    stack.push_back(x / d);
    stack.push_back(d);
  }
}

}  // namespace

Int Factorization::reconstruct() const {
  Int r = sign;
  for (const auto& [p, e] : factors) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    r *= pe;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    if (!miller_rabin_u64(n, a)) return false;
  }
  return true;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime(to_u64(n));
  static const Int kDeterministicLimit("3317044064679887385961981");
  if (n < kDeterministicLimit) {
    for (unsigned long a : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul, 41ul}) {
      if (!miller_rabin(n, a)) return false;
    }
    return true;
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

Factorization factor(const Int& n, const FactorOptions& options) {
  if (n == 0) throw DomainError("arith", "arith: factor requires a nonzero integer");
  Factorization result;
  result.sign = sgn(n) < 0 ? -1 : 1;
  Int m = abs(n);
  std::map<Int, unsigned> acc;
  bool cofactor_is_prime = false;

  if (fits_u64(m)) {
    u64 v = to_u64(m);
    for (std::uint32_t p : small_primes()) {
      if (p > options.trial_bound) break;
      if (u64{p} * p > v) {
        cofactor_is_prime = true;
        break;
      }
      if (v % p) continue;
      unsigned e = 0;
      do {
        v /= p;
        ++e;
      } while (v % p == 0);
      acc[Int(p)] = e;
    }
    m = from_u64(v);
  } else {
    Int p_big;
    for (std::uint32_t p : small_primes()) {
      if (p > options.trial_bound) break;
      if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) continue;
      p_big = p;
      acc[p_big] = mpz_remove(m.get_mpz_t(), m.get_mpz_t(), p_big.get_mpz_t());
      if (fits_u64(m)) {
        // Finish the remaining (smaller) cofactor on the fast path.
        Factorization rest = factor(m, options);
        for (auto& pp : rest.factors) acc[pp.prime] += pp.exponent;
        m = 1;
        break;
      }
    }
  }

  if (m > 1) {
    if (cofactor_is_prime) {
      ++acc[m];
    } else {
      RhoBudget budget(options.rho_budget);
      split_composite(m, acc, budget);
    }
  }
  result.factors.reserve(acc.size());
  for (auto& [p, e] : acc) result.factors.push_back({p, e});
  return result;
}

unsigned valuation(const Int& n, const Int& p) {
  if (n == 0) throw DomainError("arith", "arith: valuation requires a nonzero integer");
  if (!is_prime(p)) throw DomainError("arith", "arith: valuation requires a prime, got " + p.get_str());
  Int m = n;
  return static_cast<unsigned>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()));
}

Int squarefree_kernel(const Int& n, const FactorOptions& options) {
  return p_free_kernel(factor(n, options), 2).reconstruct();
}

Factorization p_free_kernel(const Factorization& f, unsigned p) {
  Factorization k;
  k.sign = p == 2 ? f.sign : 1;
  for (const auto& [q, e] : f.factors) {
    if (e % p) k.factors.push_back({q, e % p});
  }
  return k;
}

Factorization p_free_kernel(const Int& n, unsigned p, const FactorOptions& options) {
  if (!is_prime(std::uint64_t{p}))
    throw DomainError("arith", "arith: p_free_kernel requires a prime exponent, got " + std::to_string(p));
  return p_free_kernel(factor(n, options), p);
}

std::vector<Int> exact_order_primes(const Factorization& f, const Int& min_prime) {
  std::vector<Int> out;
  for (const auto& [q, e] : f.factors) {
    if (e == 1 && q >= min_prime) out.push_back(q);
  }
  return out;
}

std::vector<Int> exact_order_primes(const Int& n, const Int& min_prime, const FactorOptions& options) {
  return exact_order_primes(factor(n, options), min_prime);
}

}  // namespace rfdiv::arith
