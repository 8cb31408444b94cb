#include "rfdiv/kummer.hpp"

#include "rfdiv/modpoly.hpp"

#include <algorithm>

namespace rfdiv::kummer {

namespace {

void require_prime(unsigned p) {
  if (!arith::is_prime(std::uint64_t{p}))
    throw DomainError("kummer", "kummer: exponent p must be prime, got " + std::to_string(p));
}

arith::Factorization twisted(const arith::Factorization& kernel, unsigned p, unsigned j) {
  arith::Factorization t;
  t.sign = kernel.sign;
  for (const auto& [q, e] : kernel.factors) {
    const unsigned ej = (e * j) % p;
    if (ej) t.factors.push_back({q, ej});
  }
  return t;
}

bool exponent_vector_less(const arith::Factorization& a, const arith::Factorization& b) {
  // Same support (twists of one kernel), so compare exponents position by position.
  for (std::size_t i = 0; i < a.factors.size() && i < b.factors.size(); ++i) {
    if (a.factors[i].exponent != b.factors[i].exponent) return a.factors[i].exponent < b.factors[i].exponent;
  }
  return a.factors.size() < b.factors.size();
}

}  // namespace

KummerClass class_of_kernel(arith::Factorization kernel, unsigned p) {
  KummerClass c;
  c.p = p;
  if (p != 2) kernel.sign = 1;
  c.kernel = std::move(kernel);
  c.canonical = c.kernel;
  c.twist = 1;
  Int best = abs(c.canonical.reconstruct());
  for (unsigned j = 2; j < p; ++j) {
    arith::Factorization t = twisted(c.kernel, p, j);
    const Int value = abs(t.reconstruct());
    const int order = cmp(value, best);
    if (order < 0 || (order == 0 && exponent_vector_less(t, c.canonical))) {
      best = value;
      c.canonical = std::move(t);
      c.twist = j;
    }
  }
  return c;
}

KummerClass radical_class(const Rational& a_in, unsigned p, const arith::FactorOptions& options) {
  require_prime(p);
  Rational a = a_in;
  a.canonicalize();
  if (a == 0) throw DomainError("kummer", "kummer: radical_class requires a nonzero rational");
  // a = u/v is in the class of u * v^(p-1).
  const arith::Factorization num = arith::factor(a.get_num(), options);
  const arith::Factorization den = arith::factor(a.get_den(), options);
  arith::Factorization combined;
  combined.sign = num.sign;
  std::size_t i = 0, j = 0;
  while (i < num.factors.size() || j < den.factors.size()) {
    if (j == den.factors.size() || (i < num.factors.size() && num.factors[i].prime < den.factors[j].prime)) {
      combined.factors.push_back(num.factors[i++]);
    } else if (i == num.factors.size() || den.factors[j].prime < num.factors[i].prime) {
      combined.factors.push_back({den.factors[j].prime, den.factors[j].exponent * (p - 1)});
      ++j;
    } else {
      combined.factors.push_back({num.factors[i].prime, num.factors[i].exponent + den.factors[j].exponent * (p - 1)});
      ++i;
      ++j;
    }
  }
  return class_of_kernel(arith::p_free_kernel(combined, p), p);
}

bool radical_fields_isomorphic(const Rational& a, const Rational& b, unsigned p, const arith::FactorOptions& options) {
  const KummerClass ca = radical_class(a, p, options);
  const KummerClass cb = radical_class(b, p, options);
  if (ca.trivial() || cb.trivial()) {
    throw DomainError("kummer", "kummer: degenerate input, " + (ca.trivial() ? a : b).get_str() + " is a " +
                                    std::to_string(p) + "-th power");
  }
  return ca == cb;
}

std::vector<Int> ramified_set(const KummerClass& c, const std::vector<Int>& excluded) {
  std::vector<Int> out;
  const Int p(c.p);
  for (const auto& [q, e] : c.kernel.factors) {
    if (q == p) continue;
    if (std::find(excluded.begin(), excluded.end(), q) != excluded.end()) continue;
    out.push_back(q);
  }
  return out;
}

std::vector<Int> ramified_set(const Rational& a, unsigned p, const std::vector<Int>& excluded,
                              const arith::FactorOptions& options) {
  const KummerClass c = radical_class(a, p, options);
  if (c.trivial()) {
    throw DomainError("kummer", "kummer: ramified_set requires a non-" + std::to_string(p) + "-th power");
  }
  return ramified_set(c, excluded);
}

FieldFingerprint field_fingerprint(const polyring::IntPoly& minpoly, unsigned prime_budget, bool assume_irreducible) {
  if (minpoly.degree() < 1) throw DomainError("kummer", "kummer: fingerprint requires a non-constant polynomial");
  if (!assume_irreducible && !polyring::is_irreducible(minpoly)) {
    throw DomainError("kummer", "kummer: fingerprint requires an irreducible polynomial, got " + minpoly.to_string());
  }
  FieldFingerprint fp;
  fp.degree = minpoly.degree();
  const Int bad = polyring::discriminant(minpoly) * minpoly.leading();
  for (std::uint32_t q : arith::small_primes()) {
    if (fp.splitting.size() >= prime_budget) break;
    if (mpz_divisible_ui_p(bad.get_mpz_t(), q)) continue;
    if (fp.degree == 1) {
      fp.splitting.emplace_back(q, std::vector<int>{1});
      continue;
    }
    const modp::Poly f = modp::monic(modp::reduce(minpoly, q), q);
    fp.splitting.emplace_back(q, modp::splitting_degrees(f, q));
  }
  return fp;
}

bool certifies_distinct(const FieldFingerprint& a, const FieldFingerprint& b) {
  if (a.degree != b.degree) return true;
  auto i = a.splitting.begin();
  auto j = b.splitting.begin();
  while (i != a.splitting.end() && j != b.splitting.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      if (i->second != j->second) return true;
      ++i;
      ++j;
    }
  }
  return false;
}

}  // namespace rfdiv::kummer
