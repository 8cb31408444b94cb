#include "rfdiv/arith.hpp"
#include "rfdiv/modpoly.hpp"
#include "rfdiv/polyring.hpp"

#include <algorithm>

namespace rfdiv::polyring {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kExhaustiveLimit = 100'000;

std::vector<u64> reduce_u64(const IntPoly& f, u64 m) {
  std::vector<u64> out(f.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mpz_fdiv_ui(f.coeffs()[i].get_mpz_t(), m);
  return out;
}

u64 eval_mod(const std::vector<u64>& f, u64 x, u64 m) {
  u128 acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (acc * x + *it) % m;
  return static_cast<u64>(acc);
}

unsigned content_valuation(const IntPoly& f, const Int& q) {
  unsigned v = ~0u;
  for (const auto& c : f.coeffs()) {
    if (c == 0) continue;
    Int t = c;
    v = std::min(v, static_cast<unsigned>(mpz_remove(t.get_mpz_t(), t.get_mpz_t(), q.get_mpz_t())));
  }
  return v;
}

IntPoly divide_content(const IntPoly& f, const Int& qa) {
  std::vector<Int> v = f.coeffs();
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), qa.get_mpz_t());
  return IntPoly(std::move(v));
}

Int power(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// Roots mod q^e descending from the root r mod q^j of f (f not identically 0 mod q).
Int count_from(const IntPoly& f, const IntPoly& df, const Int& q, const Int& r, unsigned j, unsigned e) {
  if (j == e) return 1;
  Int d = df(r);
  if (mpz_divisible_p(d.get_mpz_t(), q.get_mpz_t()) == 0) return 1;  // Hensel: unique lift
  const Int qj1 = power(q, j + 1);
  Int v = f(r);
  if (mpz_divisible_p(v.get_mpz_t(), qj1.get_mpz_t()) == 0) return 0;
  if (j + 1 == e) return q;
  const Int qj = power(q, j);
  Int total = 0;
  for (Int t = 0; t < q; ++t) total += count_from(f, df, q, r + t * qj, j + 1, e);
  return total;
}

Int count_prime_power(const IntPoly& f, const Int& q, unsigned e) {
  if (f.is_zero()) return power(q, e);
  const unsigned a = content_valuation(f, q);
  if (a >= e) return power(q, e);
  const IntPoly g = divide_content(f, power(q, a));
  const unsigned rest = e - a;
  if (!q.fits_ulong_p() || q.get_ui() >= (1ul << 32)) {
    throw DomainError("polyring", "polyring: roots_mod supports prime factors below 2^32, got " + q.get_str());
  }
  const u64 qs = q.get_ui();
  const auto base_roots = modp::roots(modp::reduce(g, qs), qs);
  const IntPoly dg = g.derivative();
  Int total = 0;
  for (u64 r : base_roots) total += count_from(g, dg, q, Int(static_cast<unsigned long>(r)), 1, rest);
  return total * power(q, a);
}

}  // namespace

Int roots_mod(const IntPoly& f, const Int& m) {
  if (m < 2) throw DomainError("polyring", "polyring: roots_mod requires a modulus >= 2");
  if (m <= kExhaustiveLimit) {
    const u64 mm = m.get_ui();
    const auto fm = reduce_u64(f, mm);
    unsigned long count = 0;
    for (u64 r = 0; r < mm; ++r) count += eval_mod(fm, r, mm) == 0;
    return Int(count);
  }
  Int total = 1;
  for (const auto& [q, e] : arith::factor(m).factors) total *= count_prime_power(f, q, e);
  return total;
}

std::vector<u64> roots_mod_prime_square(const IntPoly& f, u64 q) {
  const u64 q2 = q * q;
  std::vector<u64> out;
  const Int qi(static_cast<unsigned long>(q));
  const unsigned a = f.is_zero() ? 2 : content_valuation(f, qi);
  if (a >= 2) {
    out.resize(q2);
    for (u64 r = 0; r < q2; ++r) out[r] = r;
    return out;
  }
  const IntPoly g = a == 1 ? divide_content(f, qi) : f;
  const auto base = modp::roots(modp::reduce(g, q), q);
  if (a == 1) {
    for (u64 r : base)
      for (u64 t = 0; t < q; ++t) out.push_back(r + t * q);
    std::sort(out.begin(), out.end());
    return out;
  }
  const auto g2 = reduce_u64(g, q2);
  const auto dg = modp::reduce(g.derivative(), q);
  for (u64 r : base) {
    const u64 d = modp::eval(dg, r, q);
    const u64 v = eval_mod(g2, r, q2);
    if (d != 0) {
      // Newton step: r - g(r)/g'(r); g(r) is divisible by q so g'(r)^-1 mod q suffices.
      const u64 step = static_cast<u64>(static_cast<u128>(v) * modp::inverse(d, q) % q2);
      out.push_back((r + q2 - step) % q2);
    } else if (v == 0) {
      for (u64 t = 0; t < q; ++t) out.push_back(r + t * q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rfdiv::polyring
