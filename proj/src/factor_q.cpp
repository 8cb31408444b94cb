#include "rfdiv/arith.hpp"
#include "rfdiv/modpoly.hpp"
#include "rfdiv/polyring.hpp"

#include <algorithm>

// Zassenhaus: squarefree part, factor modulo a good prime, Hensel-lift to beat
// the coefficient bound, then recombine subsets of lifted factors.

namespace rfdiv::polyring {

namespace {

using modp::Poly;
using ZPoly = std::vector<Int>;  // coefficients reduced into [0, M), lowest first

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zreduce(ZPoly a, const Int& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(a);
  return a;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return zreduce(std::move(r), m);
}

ZPoly from_modp(const Poly& a) {
  ZPoly r;
  r.reserve(a.size());
  for (auto c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

IntPoly symmetric(const ZPoly& a, const Int& m) {
  const Int half = m / 2;
  std::vector<Int> v = a;
  for (auto& c : v) {
    if (c > half) c -= m;
  }
  return IntPoly(std::move(v));
}

// Given f = g*h mod q (g, h monic and coprime mod q, f monic mod M = q^k),
// lifts g and h in place so that f = g*h mod M.
void hensel_lift_pair(const ZPoly& f, ZPoly& g, ZPoly& h, std::uint64_t q, unsigned k, const Int& m) {
  Poly s, t;
  modp::ext_gcd(modp::reduce(IntPoly(g), q), modp::reduce(IntPoly(h), q), q, s, t);
  const Poly g_mod = modp::reduce(IntPoly(g), q);
  const Int qq(static_cast<unsigned long>(q));
  Int modulus = qq;  // current precision q^j
  for (unsigned j = 1; j < k; ++j) {
    ZPoly gh = zmul(g, h, m);
    ZPoly e = f;
    if (e.size() < gh.size()) e.resize(gh.size(), Int(0));
    for (std::size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
    e = zreduce(std::move(e), m);
    std::vector<Int> scaled(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) mpz_divexact(scaled[i].get_mpz_t(), e[i].get_mpz_t(), modulus.get_mpz_t());
    const Poly ej = modp::reduce(IntPoly(std::move(scaled)), q);
    if (!ej.empty()) {
      Poly quot, b;
      modp::divmod(modp::mul(ej, t, q), g_mod, q, quot, b);
      const Poly a = modp::add(modp::mul(ej, s, q), modp::mul(quot, modp::reduce(IntPoly(h), q), q), q);
      const ZPoly bz = from_modp(b), az = from_modp(a);
      if (g.size() < bz.size()) g.resize(bz.size(), Int(0));
      for (std::size_t i = 0; i < bz.size(); ++i) mpz_addmul(g[i].get_mpz_t(), bz[i].get_mpz_t(), modulus.get_mpz_t());
      if (h.size() < az.size()) h.resize(az.size(), Int(0));
      for (std::size_t i = 0; i < az.size(); ++i) mpz_addmul(h[i].get_mpz_t(), az[i].get_mpz_t(), modulus.get_mpz_t());
      g = zreduce(std::move(g), m);
      h = zreduce(std::move(h), m);
    }
    modulus *= qq;
  }
}

std::vector<IntPoly> zassenhaus(const IntPoly& f, const FactorQOptions& options) {
  const int n = f.degree();
  // Pick a reduction prime: odd, not dividing lc(f), f squarefree mod q. Among the
  // first few such primes keep the one with fewest modular factors.
  std::uint64_t best_q = 0;
  std::vector<Poly> best_factors;
  int good_primes = 0;
  for (std::uint32_t q : arith::small_primes()) {
    if (q == 2) continue;
    if (q > options.max_reduction_prime) break;
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), q)) continue;
    const Poly fq = modp::reduce(f, q);
    if (modp::degree(modp::gcd(fq, modp::derivative(fq, q), q)) != 0) continue;
    std::mt19937_64 rng(0x5eedULL ^ q);
    std::vector<Poly> fac = modp::factor_squarefree(modp::monic(fq, q), q, rng);
    if (best_q == 0 || fac.size() < best_factors.size()) {
      best_q = q;
      best_factors = std::move(fac);
    }
    if (best_factors.size() == 1 || ++good_primes >= 5) break;
  }
  if (best_q == 0) {
    throw DomainError("polyring", "polyring: no squarefree reduction prime below " +
                                      std::to_string(options.max_reduction_prime));
  }
  if (best_factors.size() == 1) return {f};

  const std::uint64_t q = best_q;
  // Coefficients of lc(f)/lc(g) * g for any factor g are below |lc(f)| * 2^n * ||f||_2.
  Int norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  Int bound = sqrt(norm2) + 1;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
  bound *= abs(f.leading());
  bound *= 2;
  const Int qq(static_cast<unsigned long>(q));
  Int m = qq;
  unsigned k = 1;
  while (m <= bound) {
    m *= qq;
    ++k;
  }

  // f made monic mod M.
  Int lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), f.leading().get_mpz_t(), m.get_mpz_t());
  ZPoly fm = zreduce(f.coeffs(), m);
  for (auto& c : fm) c *= lc_inv;
  fm = zreduce(std::move(fm), m);

  std::vector<ZPoly> lifted;
  ZPoly current = fm;
  for (std::size_t i = 0; i + 1 < best_factors.size(); ++i) {
    Poly rest{1};
    for (std::size_t j = i + 1; j < best_factors.size(); ++j) rest = modp::mul(rest, best_factors[j], q);
    ZPoly g = from_modp(best_factors[i]), h = from_modp(rest);
    hensel_lift_pair(current, g, h, q, k, m);
    lifted.push_back(std::move(g));
    current = std::move(h);
  }
  lifted.push_back(std::move(current));

  std::vector<IntPoly> found;
  IntPoly rest = f;
  std::vector<std::size_t> live(lifted.size());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
  std::size_t size = 1;
  while (2 * size <= live.size()) {
    bool hit = false;
    std::vector<bool> pick(live.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      ZPoly prod{Int(1)};
      for (std::size_t i = 0; i < live.size(); ++i) {
        if (pick[i]) prod = zmul(prod, lifted[live[i]], m);
      }
      for (auto& c : prod) c *= rest.leading();
      const IntPoly candidate = symmetric(zreduce(std::move(prod), m), m).primitive_part();
      IntPoly quotient;
      if (divides(candidate, rest, &quotient)) {
        found.push_back(candidate);
        rest = quotient;
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < live.size(); ++i) {
          if (!pick[i]) keep.push_back(live[i]);
        }
        live = std::move(keep);
        hit = true;
        break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (!hit) ++size;
  }
  if (rest.degree() > 0) found.push_back(rest.primitive_part());
  return found;
}

}  // namespace

IntPoly IrreducibleFactorization::expand() const {
  IntPoly out = IntPoly::constant(content);
  for (const auto& [g, mult] : factors) out = out * pow(g, mult);
  return out;
}

IrreducibleFactorization factor_over_q(const IntPoly& f, const FactorQOptions& options) {
  if (f.is_zero()) throw DomainError("polyring", "polyring: cannot factor the zero polynomial");
  if (f.degree() > options.max_degree) {
    throw DomainError("polyring", "polyring: degree " + std::to_string(f.degree()) + " exceeds factorization bound " +
                                      std::to_string(options.max_degree));
  }
  IrreducibleFactorization out;
  out.content = f.content();
  if (f.degree() == 0) return out;
  const IntPoly prim = f.primitive_part();
  IntPoly squarefree;
  divides(gcd(prim, prim.derivative()), prim, &squarefree);

  std::vector<IntPoly> irreducible;
  if (squarefree.degree() == 1) {
    irreducible.push_back(squarefree);
  } else {
    irreducible = zassenhaus(squarefree, options);
  }
  for (auto& g : irreducible) {
    if (sgn(g.leading()) < 0) g = -g;
    unsigned mult = 0;
    IntPoly rest = prim, quotient;
    while (divides(g, rest, &quotient)) {
      rest = quotient;
      ++mult;
    }
    out.factors.push_back({g, mult});
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const IrreducibleFactor& a, const IrreducibleFactor& b) { return a.factor < b.factor; });
  return out;
}

bool is_irreducible(const IntPoly& f, const FactorQOptions& options) {
  if (f.degree() < 1) return false;
  const auto fac = factor_over_q(f, options);
  return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

IntPoly radical(const IntPoly& g, const FactorQOptions& options) {
  if (g.degree() < 1) throw DomainError("polyring", "polyring: radical requires a non-constant polynomial");
  const auto fac = factor_over_q(g, options);
  IntPoly product = IntPoly::constant(1);
  for (const auto& [h, mult] : fac.factors) product = product * h;
  Int scale;
  mpz_divexact(scale.get_mpz_t(), g.leading().get_mpz_t(), product.leading().get_mpz_t());
  return product * scale;
}

}  // namespace rfdiv::polyring
