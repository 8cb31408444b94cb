#include "rfdiv/modpoly.hpp"

#include <algorithm>

namespace rfdiv::modp {

u64 inverse(u64 a, u64 q) {
  // q prime: a^(q-2)
  u64 result = 1, base = a % q, e = q - 2;
  while (e) {
    if (e & 1) result = result * base % q;
    base = base * base % q;
    e >>= 1;
  }
  return result;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly reduce(const polyring::IntPoly& f, u64 q) {
  Poly out(f.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = mpz_fdiv_ui(f.coeffs()[i].get_mpz_t(), q);
  }
  trim(out);
  return out;
}

u64 eval(const Poly& f, u64 x, u64 q) {
  u64 acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (acc * x + *it) % q;
  return acc;
}

Poly add(const Poly& a, const Poly& b, u64 q) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % q;
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, u64 q) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + q - b[i]) % q;
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, u64 q) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % q;
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, u64 c, u64 q) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * (c % q) % q;
  trim(r);
  return r;
}

Poly derivative(const Poly& a, u64 q) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * (i % q) % q;
  trim(r);
  return r;
}

Poly monic(const Poly& a, u64 q) {
  if (a.empty()) return a;
  return scale(a, inverse(a.back(), q), q);
}

void divmod(const Poly& a, const Poly& b, u64 q, Poly& quot, Poly& rem) {
  rem = a;
  trim(rem);
  if (rem.size() < b.size()) {
    quot.clear();
    return;
  }
  quot.assign(rem.size() - b.size() + 1, 0);
  const u64 inv = inverse(b.back(), q);
  for (std::size_t i = rem.size(); i-- >= b.size();) {
    const u64 c = rem[i] * inv % q;
    quot[i - (b.size() - 1)] = c;
    if (c == 0) continue;
    const std::size_t shift = i - (b.size() - 1);
    for (std::size_t j = 0; j < b.size(); ++j) {
      rem[shift + j] = (rem[shift + j] + q - c * b[j] % q) % q;
    }
  }
  trim(rem);
  trim(quot);
}

Poly rem(const Poly& a, const Poly& b, u64 q) {
  Poly quot, r;
  divmod(a, b, q, quot, r);
  return r;
}

Poly gcd(Poly a, Poly b, u64 q) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, q);
}

Poly ext_gcd(const Poly& a, const Poly& b, u64 q, Poly& s, Poly& t) {
  Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    Poly quot, r;
    divmod(r0, r1, q, quot, r);
    Poly s2 = sub(s0, mul(quot, s1, q), q);
    Poly t2 = sub(t0, mul(quot, t1, q), q);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) {
    s.clear();
    t.clear();
    return r0;
  }
  const u64 inv = inverse(r0.back(), q);
  s = scale(s0, inv, q);
  t = scale(t0, inv, q);
  return scale(r0, inv, q);
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& f, u64 q) { return rem(mul(a, b, q), f, q); }

Poly powmod(const Poly& base, const Int& exponent, const Poly& f, u64 q) {
  Poly result{1};
  result = rem(result, f, q);
  Poly b = rem(base, f, q);
  const auto bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  if (exponent == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, f, q);
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = mulmod(result, b, f, q);
  }
  return result;
}

std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f_in, u64 q) {
  std::vector<std::pair<Poly, int>> out;
  Poly f = monic(f_in, q);
  const Poly x{0, 1};
  Poly h = rem(x, f, q);
  const Int qq(static_cast<unsigned long>(q));
  for (int d = 1; 2 * d <= degree(f); ++d) {
    h = powmod(h, qq, f, q);
    Poly g = gcd(f, sub(h, x, q), q);
    if (degree(g) > 0) {
      out.emplace_back(g, d);
      Poly quot, r;
      divmod(f, g, q, quot, r);
      f = quot;
      h = rem(h, f, q);
    }
  }
  if (degree(f) > 0) out.emplace_back(f, degree(f));
  return out;
}

std::vector<int> splitting_degrees(const Poly& f, u64 q) {
  std::vector<int> degrees;
  for (const auto& [g, d] : distinct_degree(f, q)) {
    for (int k = 0; k < degree(g) / d; ++k) degrees.push_back(d);
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

namespace {

// Cantor-Zassenhaus equal-degree splitting of a monic f whose factors all have degree d.
void equal_degree(const Poly& f, int d, u64 q, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (degree(f) == d) {
    out.push_back(f);
    return;
  }
  Int e;
  mpz_ui_pow_ui(e.get_mpz_t(), q, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> coin(0, q - 1);
  for (;;) {
    Poly a(static_cast<std::size_t>(degree(f)));
    for (auto& c : a) c = coin(rng);
    trim(a);
    if (degree(a) < 1) continue;
    Poly b = sub(powmod(a, e, f, q), Poly{1}, q);
    Poly g = gcd(f, b, q);
    if (degree(g) > 0 && degree(g) < degree(f)) {
      Poly quot, r;
      divmod(f, g, q, quot, r);
      equal_degree(g, d, q, rng, out);
      equal_degree(monic(quot, q), d, q, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Poly> factor_squarefree(const Poly& f, u64 q, std::mt19937_64& rng) {
  std::vector<Poly> out;
  for (const auto& [g, d] : distinct_degree(f, q)) equal_degree(g, d, q, rng, out);
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<u64> roots(const Poly& f_in, u64 q) {
  Poly f = f_in;
  trim(f);
  std::vector<u64> out;
  if (f.empty()) {
    out.resize(q);
    for (u64 r = 0; r < q; ++r) out[r] = r;
    return out;
  }
  if (degree(f) == 0) return out;
  if (q < 64) {
    for (u64 r = 0; r < q; ++r) {
      if (eval(f, r, q) == 0) out.push_back(r);
    }
    return out;
  }
  // Product of the distinct linear factors is gcd(f, x^q - x).
  const Poly x{0, 1};
  Poly fm = monic(f, q);
  Poly xq = powmod(x, Int(static_cast<unsigned long>(q)), fm, q);
  Poly linear = gcd(fm, sub(xq, x, q), q);
  if (degree(linear) <= 0) return out;
  std::mt19937_64 rng(q);
  std::vector<Poly> parts;
  equal_degree(linear, 1, q, rng, parts);
  for (const auto& part : parts) out.push_back((q - part[0]) % q);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rfdiv::modp
