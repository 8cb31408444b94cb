#pragma once

#include "rfdiv/arith.hpp"
#include "rfdiv/polyring.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace rfdiv::kummer {

/// Class of a nonzero rational in Q*/(Q*)^p, identified up to the exponent twists
/// a -> a^j (j = 1..p-1), which is exactly the isomorphism class of Q(a^(1/p)).
struct KummerClass {
  unsigned p = 2;
  /// p-free kernel of the value itself: exponents in [1, p-1], sign kept only for p = 2.
  arith::Factorization kernel;
  /// Twist of `kernel` with the smallest absolute value; ties go to the
  /// lexicographically smallest exponent vector.
  arith::Factorization canonical;
  /// canonical = kernel^twist (exponents mod p).
  unsigned twist = 1;

  bool trivial() const { return canonical.is_unit() && canonical.sign == 1; }
  Int canonical_value() const { return canonical.reconstruct(); }

  bool operator==(const KummerClass& o) const { return p == o.p && canonical == o.canonical; }
};

/// Builds the class from an already reduced kernel (see arith::p_free_kernel).
KummerClass class_of_kernel(arith::Factorization kernel, unsigned p);

KummerClass radical_class(const Rational& a, unsigned p, const arith::FactorOptions& options = {});

/// Q(a^(1/p)) and Q(b^(1/p)) are isomorphic. Both must be non-p-th powers.
bool radical_fields_isomorphic(const Rational& a, const Rational& b, unsigned p,
                               const arith::FactorOptions& options = {});

/// Primes dividing the kernel, minus `excluded` and p. For a not a p-th power these
/// are the primes ramified in Q(a^(1/p)) away from p and the excluded set.
std::vector<Int> ramified_set(const KummerClass& c, const std::vector<Int>& excluded);
std::vector<Int> ramified_set(const Rational& a, unsigned p, const std::vector<Int>& excluded,
                              const arith::FactorOptions& options = {});

/// Degree plus splitting types of the minimal polynomial at the first `prime_budget`
/// primes not dividing its discriminant or leading coefficient.
struct FieldFingerprint {
  int degree = 0;
  std::vector<std::pair<std::uint32_t, std::vector<int>>> splitting;

  bool operator==(const FieldFingerprint&) const = default;
  auto operator<=>(const FieldFingerprint&) const = default;
};

/// Throws DomainError for a reducible minpoly unless `assume_irreducible` is set
/// (callers that already hold an irreducible factor skip the recheck).
FieldFingerprint field_fingerprint(const polyring::IntPoly& minpoly, unsigned prime_budget,
                                   bool assume_irreducible = false);

/// True when the two fingerprints prove the fields non-isomorphic: different degree,
/// or a prime admissible for both with different splitting types. Isomorphic fields
/// never certify as distinct.
bool certifies_distinct(const FieldFingerprint& a, const FieldFingerprint& b);

}  // namespace rfdiv::kummer
