#pragma once

// Dense polynomials over F_q for a prime q < 2^32. Internal machinery shared by
// factorization over Q, root counting and splitting-type fingerprints.

#include "rfdiv/polyring.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace rfdiv::modp {

using u64 = std::uint64_t;
/// Lowest degree first, trimmed (zero polynomial is empty).
using Poly = std::vector<u64>;

u64 inverse(u64 a, u64 q);
void trim(Poly& a);
inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly reduce(const polyring::IntPoly& f, u64 q);
u64 eval(const Poly& f, u64 x, u64 q);

Poly add(const Poly& a, const Poly& b, u64 q);
Poly sub(const Poly& a, const Poly& b, u64 q);
Poly mul(const Poly& a, const Poly& b, u64 q);
Poly scale(const Poly& a, u64 c, u64 q);
Poly derivative(const Poly& a, u64 q);
Poly monic(const Poly& a, u64 q);

/// a = quot*b + rem, b nonzero.
void divmod(const Poly& a, const Poly& b, u64 q, Poly& quot, Poly& rem);
Poly rem(const Poly& a, const Poly& b, u64 q);
/// Monic gcd (zero when both inputs are zero).
Poly gcd(Poly a, Poly b, u64 q);
/// Monic g = s*a + t*b.
Poly ext_gcd(const Poly& a, const Poly& b, u64 q, Poly& s, Poly& t);

Poly mulmod(const Poly& a, const Poly& b, const Poly& f, u64 q);
Poly powmod(const Poly& base, const Int& exponent, const Poly& f, u64 q);

/// Distinct-degree factorization of a monic squarefree f: (product of all
/// irreducible factors of degree d, d) for each d that occurs.
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f, u64 q);
/// Sorted degrees of the irreducible factors of a squarefree f.
std::vector<int> splitting_degrees(const Poly& f, u64 q);
/// Monic irreducible factors of a squarefree f (q odd), sorted.
std::vector<Poly> factor_squarefree(const Poly& f, u64 q, std::mt19937_64& rng);
/// Distinct roots of f in F_q, increasing.
std::vector<u64> roots(const Poly& f, u64 q);

}  // namespace rfdiv::modp
