#pragma once

#include "rfdiv/errors.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace rfdiv::polyring {

/// Dense univariate polynomial over Z, coefficients lowest degree first.
/// Always trimmed: the zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  IntPoly(std::initializer_list<long> coeffs);
  static IntPoly constant(const Int& c);
  /// c * x^k
  static IntPoly monomial(const Int& c, unsigned k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }
  const Int& leading() const { return coeffs_.back(); }

  /// gcd of the coefficients, sign taken from the leading coefficient.
  Int content() const;
  IntPoly primitive_part() const;
  IntPoly derivative() const;
  Int operator()(const Int& x) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const Int& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const Int& c) { return a *= c; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly operator-() const;

  bool operator==(const IntPoly&) const = default;
  /// Canonical ordering: degree first, then coefficients lowest degree first.
  std::strong_ordering operator<=>(const IntPoly& o) const;

  /// Canonical text form, descending powers ("3x^2 - x + 1").
  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

IntPoly pow(const IntPoly& f, unsigned k);

/// f = q*g exactly over Z; returns nullopt-like false when g does not divide f.
bool divides(const IntPoly& g, const IntPoly& f, IntPoly* quotient = nullptr);

/// Pseudo-division: lc(g)^(deg f - deg g + 1) f = q g + r.
void pseudo_divide(const IntPoly& f, const IntPoly& g, IntPoly& q, IntPoly& r);

/// Primitive gcd over Z with positive leading coefficient (gcd(0,0) = 0).
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Bivariate polynomial monic in y, stored sparsely by (x-degree, y-degree).
class PlanePoly {
 public:
  using Monomial = std::pair<unsigned, unsigned>;

  PlanePoly() = default;
  /// Throws DomainError unless monic in y with y-degree >= 2.
  explicit PlanePoly(std::map<Monomial, Int> terms);

  unsigned y_degree() const { return y_degree_; }
  unsigned x_degree() const;
  const std::map<Monomial, Int>& terms() const { return terms_; }

  /// Coefficient of y^j as a polynomial in x.
  IntPoly coeff_in_y(unsigned j) const;
  /// F(n, y) as a univariate polynomial in y.
  IntPoly specialize_x(const Int& n) const;

  bool operator==(const PlanePoly&) const = default;
  std::string to_string() const;

 private:
  std::map<Monomial, Int> terms_;
  unsigned y_degree_ = 0;
};

/// Raw output of the grammar: any polynomial in x and y with integer coefficients.
using BivariateTerms = std::map<PlanePoly::Monomial, Int>;

/// Parses the polynomial grammar. Throws DomainError with a character offset on failure.
BivariateTerms parse_terms(std::string_view text);

/// IntPoly when `y` does not occur, PlanePoly otherwise.
std::variant<IntPoly, PlanePoly> parse_poly(std::string_view text);
IntPoly parse_int_poly(std::string_view text);

/// Resultant over Z via the subresultant pseudo-remainder sequence.
Int resultant(const IntPoly& f, const IntPoly& g);
/// (-1)^(d(d-1)/2) res(f, f') / lc(f). Degree-0 input has discriminant 1.
Int discriminant(const IntPoly& f);
/// Discriminant with respect to y, as a polynomial in x.
IntPoly discriminant_y(const PlanePoly& f);

struct IrreducibleFactor {
  IntPoly factor;  // primitive, irreducible over Q, positive leading coefficient
  unsigned multiplicity = 1;

  bool operator==(const IrreducibleFactor&) const = default;
};

struct IrreducibleFactorization {
  Int content;  // nonzero
  std::vector<IrreducibleFactor> factors;

  IntPoly expand() const;
};

struct FactorQOptions {
  int max_degree = 64;
  std::uint32_t max_reduction_prime = 10'000;
};

/// Complete factorization over Q; factors ordered by degree, then coefficients.
IrreducibleFactorization factor_over_q(const IntPoly& f, const FactorQOptions& options = {});
bool is_irreducible(const IntPoly& f, const FactorQOptions& options = {});

/// lc(g) * product of the distinct monic irreducible factors of g: separable,
/// same roots and leading coefficient as g, and integral.
IntPoly radical(const IntPoly& g, const FactorQOptions& options = {});

/// Number of r in Z/m with f(r) = 0 mod m.
Int roots_mod(const IntPoly& f, const Int& m);
/// All roots of f modulo q^2 for a prime q < 2^31, increasing.
std::vector<std::uint64_t> roots_mod_prime_square(const IntPoly& f, std::uint64_t q);

}  // namespace rfdiv::polyring
