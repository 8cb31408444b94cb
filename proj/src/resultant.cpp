#include "rfdiv/polyring.hpp"

namespace rfdiv::polyring {

namespace {

Int power(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace

// Collins' subresultant algorithm; all divisions below are exact.
Int resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  IntPoly a = f, b = g;
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() % 2) && (b.degree() % 2)) s = -s;
  }
  if (b.degree() == 0) return s * power(b.leading(), static_cast<unsigned long>(a.degree()));

  const Int ca = a.content(), cb = b.content();
  a = a.primitive_part();
  b = b.primitive_part();
  const Int t = power(ca, static_cast<unsigned long>(b.degree())) * power(cb, static_cast<unsigned long>(a.degree()));
  Int gg = 1, h = 1;
  for (;;) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() % 2) && (b.degree() % 2)) s = -s;
    IntPoly q, r;
    pseudo_divide(a, b, q, r);
    a = std::move(b);
    if (r.is_zero()) return 0;
    const Int divisor = gg * power(h, static_cast<unsigned long>(delta));
    std::vector<Int> c = r.coeffs();
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), divisor.get_mpz_t());
    b = IntPoly(std::move(c));
    gg = a.leading();
    // h <- g^delta / h^(delta-1)
    if (delta == 0) {
      // h^(1) * g^0 = h
    } else {
      Int num = power(gg, static_cast<unsigned long>(delta));
      Int den = power(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.degree() == 0) {
      const unsigned long da = static_cast<unsigned long>(a.degree());
      Int num = power(b.leading(), da);
      Int den = power(h, da - 1);
      Int hh;
      mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      return s * t * hh;
    }
  }
}

Int discriminant(const IntPoly& f) {
  if (f.is_zero()) throw DomainError("polyring", "polyring: discriminant of the zero polynomial");
  const int d = f.degree();
  if (d <= 0) return 1;
  Int r = resultant(f, f.derivative());
  Int out;
  mpz_divexact(out.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
  if ((d * (d - 1) / 2) % 2) out = -out;
  return out;
}

IntPoly discriminant_y(const PlanePoly& f) {
  // Monic in y, so discriminants commute with specialization in x; interpolate.
  const unsigned d = f.y_degree();
  const unsigned bound = (2 * d - 1) * f.x_degree();
  std::vector<Rational> xs, divided;
  for (unsigned i = 0; i <= bound; ++i) {
    xs.emplace_back(static_cast<long>(i));
    divided.emplace_back(discriminant(f.specialize_x(Int(static_cast<long>(i)))));
  }
  // Newton divided differences in place.
  for (unsigned level = 1; level <= bound; ++level) {
    for (unsigned i = bound; i >= level; --i) {
      divided[i] = (divided[i] - divided[i - 1]) / (xs[i] - xs[i - level]);
    }
  }
  // Expand the Newton form into monomial coefficients.
  std::vector<Rational> coeffs(bound + 1, Rational(0));
  for (unsigned k = bound + 1; k-- > 0;) {
    // coeffs <- coeffs * (x - xs[k]) + divided[k]
    std::vector<Rational> next(bound + 1, Rational(0));
    for (unsigned j = 0; j <= bound; ++j) {
      if (coeffs[j] == 0) continue;
      if (j + 1 <= bound) next[j + 1] += coeffs[j];
      next[j] -= coeffs[j] * xs[k];
    }
    next[0] += divided[k];
    coeffs = std::move(next);
  }
  std::vector<Int> out(bound + 1);
  for (unsigned j = 0; j <= bound; ++j) {
    coeffs[j].canonicalize();
    if (coeffs[j].get_den() != 1) throw std::logic_error("polyring: non-integral discriminant interpolation");
    out[j] = coeffs[j].get_num();
  }
  return IntPoly(std::move(out));
}

}  // namespace rfdiv::polyring
