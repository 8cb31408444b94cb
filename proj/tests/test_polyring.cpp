#include "doctest.h"
#include "oracles.hpp"

#include "rfdiv/errors.hpp"
#include "rfdiv/polyring.hpp"

#include <random>
#include <variant>

using namespace rfdiv;
using namespace rfdiv::polyring;

namespace {

IntPoly P(std::string_view s) { return parse_int_poly(s); }

bool has_repeated_factor(const IrreducibleFactorization& f) {
  for (const auto& x : f.factors) {
    if (x.multiplicity > 1) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("parse univariate and plane polynomials") {
  CHECK(P("x^3 - x") == IntPoly{0, -1, 0, 1});
  CHECK(P("3x^2 - x + 1") == IntPoly{1, -1, 3});
  CHECK(P("(x+1)^3") == IntPoly{1, 3, 3, 1});
  CHECK(P("-2*(x - 1)*x") == IntPoly{0, 2, -2});
  CHECK(P("x^2*x") == IntPoly{0, 0, 0, 1});
  CHECK(P("7") == IntPoly{7});
  const auto plane = parse_poly("y^2 - (x^3 - x)");
  REQUIRE(std::holds_alternative<PlanePoly>(plane));
  const auto& F = std::get<PlanePoly>(plane);
  CHECK(F.y_degree() == 2);
  CHECK(F.coeff_in_y(2) == IntPoly{1});
  CHECK(F.coeff_in_y(0) == IntPoly{0, 1, 0, -1});
  CHECK(F.specialize_x(2) == IntPoly{-6, 0, 1});
}

TEST_CASE("parse errors report offsets") {
  auto message = [](std::string_view s) {
    try {
      parse_poly(s);
    } catch (const DomainError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("x^^2").find("offset 2") != std::string::npos);
  CHECK(message("x^^2").find("polyring") != std::string::npos);
  CHECK(message("x + ").find("offset") != std::string::npos);
  CHECK(message("1/2 x").find("non-integer") != std::string::npos);
  CHECK(message("1.5x").find("non-integer") != std::string::npos);
  CHECK(message("(x + 1").find("offset") != std::string::npos);
  CHECK(message("z^2").find("offset 0") != std::string::npos);
  CHECK_THROWS_AS(parse_poly("2*y^2 - x"), DomainError);  // not monic in y
  CHECK_THROWS_AS(parse_int_poly("y - x"), DomainError);
}

TEST_CASE("evaluation") {
  CHECK(P("x^3 - x")(2) == 6);
  CHECK(P("x^3 - x")(1) == 0);
  CHECK(P("x^2 + 1")(10) == 101);
}

TEST_CASE("parse and evaluate agree with direct arithmetic") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> coeff(-50, 50), arg(-1000, 1000);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 1 + trial % 6;
    std::vector<Int> c(d + 1);
    std::string text;
    for (int i = d; i >= 0; --i) {
      c[i] = coeff(rng);
      text += (c[i] < 0 ? " - " : " + ") + Int(abs(c[i])).get_str() + "*x^" + std::to_string(i);
    }
    const Int n = arg(rng);
    Int direct = 0, power = 1;
    for (int i = 0; i <= d; ++i) {
      direct += c[i] * power;
      power *= n;
    }
    CHECK(P(text)(n) == direct);
    if (c[d] != 0) CHECK(P(P(text).to_string()) == P(text));
  }
}

TEST_CASE("printing") {
  CHECK(P("3x^2 - x + 1").to_string() == "3x^2 - x + 1");
  CHECK(IntPoly{}.to_string() == "0");
  CHECK(IntPoly{-1}.to_string() == "-1");
  CHECK(std::get<PlanePoly>(parse_poly("y^2 + x^2*y - x")).to_string() == "y^2 + x^2*y - x");
}

TEST_CASE("division and gcd") {
  const IntPoly f = P("(x^2 + 1)*(x - 3)^2"), g = P("(x - 3)*(2x + 5)");
  CHECK(gcd(f, g) == P("x - 3"));
  IntPoly q;
  CHECK(divides(P("x - 3"), f, &q));
  CHECK(q * P("x - 3") == f);
  CHECK_FALSE(divides(P("x + 3"), f));
  CHECK(pow(P("x + 1"), 4) == P("x^4 + 4x^3 + 6x^2 + 4x + 1"));
}

TEST_CASE("resultant and discriminant against the Sylvester determinant") {
  CHECK(discriminant(P("x^2 - 5")) == 20);
  CHECK(discriminant(P("x^3 - x")) == 4);
  CHECK(discriminant(P("x^3 + 2x + 3")) == -4 * 8 - 27 * 9);
  std::mt19937_64 rng(41);
  for (int i = 0; i < 60; ++i) {
    const auto f = oracle::random_poly(rng, 1 + i % 6, 20);
    const auto g = oracle::random_poly(rng, 1 + (i / 6) % 5, 20);
    CHECK(resultant(f, g) == oracle::sylvester_resultant(f, g));
    if (f.degree() >= 2) CHECK(discriminant(f) == oracle::discriminant(f));
  }
}

TEST_CASE("discriminant in y") {
  const auto F = std::get<PlanePoly>(parse_poly("y^2 - (x^3 - x)"));
  CHECK(discriminant_y(F) == P("4x^3 - 4x"));
  const auto G = std::get<PlanePoly>(parse_poly("y^3 + x*y + x^2 + 1"));
  // Cubic y^3 + a y + b has discriminant -4a^3 - 27b^2.
  const IntPoly a = P("x"), b = P("x^2 + 1");
  CHECK(discriminant_y(G) == IntPoly{0} - IntPoly{4} * a * a * a - IntPoly{27} * b * b);
  for (long x = -5; x <= 5; ++x) CHECK(discriminant_y(G)(x) == oracle::discriminant(G.specialize_x(x)));
}

TEST_CASE("factorization over Q") {
  auto fq = factor_over_q(P("(x^2 + 1)*(x^3 - 2)"));
  CHECK(fq.content == 1);
  REQUIRE(fq.factors.size() == 2);
  CHECK(fq.factors[0] == IrreducibleFactor{P("x^2 + 1"), 1});
  CHECK(fq.factors[1] == IrreducibleFactor{P("x^3 - 2"), 1});
  fq = factor_over_q(P("x^2 - 1"));
  REQUIRE(fq.factors.size() == 2);
  CHECK(fq.factors[0].factor == P("x - 1"));
  CHECK(fq.factors[1].factor == P("x + 1"));
  CHECK(is_irreducible(P("x^4 + 1")));
  CHECK(is_irreducible(P("x^4 - 10x^2 + 1")));  // splits mod every prime
  CHECK_FALSE(is_irreducible(P("x^4 + 4")));     // (x^2 + 2x + 2)(x^2 - 2x + 2)
  fq = factor_over_q(P("-6*(x - 1)^3*(2x + 1)^2*x"));
  CHECK(fq.content == -6);
  REQUIRE(fq.factors.size() == 3);
  CHECK(fq.factors[0] == IrreducibleFactor{P("x - 1"), 3});
  CHECK(fq.factors[1] == IrreducibleFactor{P("x"), 1});
  CHECK(fq.factors[2] == IrreducibleFactor{P("2x + 1"), 2});
}

TEST_CASE("factorization round trip on random products") {
  const std::vector<IntPoly> irreducibles = {P("x"),           P("x + 1"),          P("2x - 3"),     P("x^2 + 1"),
                                             P("x^2 - 2"),     P("x^2 + x + 1"),    P("x^3 - 2"),    P("x^3 - x - 1"),
                                             P("x^4 + 1"),     P("3x^2 + 5x - 7"),  P("x^5 - x + 1"), P("x^4 - 10x^2 + 1")};
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<std::size_t> pick(0, irreducibles.size() - 1);
  std::uniform_int_distribution<int> count(1, 3), mult(1, 2), scale(1, 6);
  for (int trial = 0; trial < 80; ++trial) {
    std::map<IntPoly, unsigned> expect;
    IntPoly f{scale(rng)};
    int degree = 0;
    for (int k = count(rng); k > 0; --k) {
      const auto& g = irreducibles[pick(rng)];
      const int m = mult(rng);
      if (degree + m * g.degree() > 12) continue;
      degree += m * g.degree();
      expect[g] += m;
      f = f * pow(g, m);
    }
    const auto fq = factor_over_q(f);
    CHECK(fq.expand() == f);
    std::map<IntPoly, unsigned> got;
    for (const auto& x : fq.factors) {
      got[x.factor] += x.multiplicity;
      CHECK(x.factor.leading() > 0);
      CHECK(x.factor.content() == 1);
    }
    CHECK(got == expect);
    CHECK((discriminant(f) == 0) == has_repeated_factor(fq));
  }
}

TEST_CASE("factorization of random polynomials reproduces the input") {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 60; ++i) {
    const auto a = oracle::random_poly(rng, 1 + i % 4, 9), b = oracle::random_poly(rng, 1 + i % 3, 9);
    const auto f = a * b;
    const auto fq = factor_over_q(f);
    CHECK(fq.expand() == f);
    for (const auto& x : fq.factors) CHECK(is_irreducible(x.factor));
  }
}

TEST_CASE("radical") {
  CHECK(radical(P("x^2*(x + 1)")) == P("x^2 + x"));
  CHECK(radical(P("x^3 - x")) == P("x^3 - x"));
  CHECK(radical(P("4x^2")) == P("4x"));
  CHECK_THROWS_AS(radical(P("5")), DomainError);
  std::mt19937_64 rng(61);
  for (int i = 0; i < 40; ++i) {
    const auto a = oracle::random_poly(rng, 1 + i % 3, 6), b = oracle::random_poly(rng, 1 + i % 2, 6);
    const auto g = a * a * b;
    const auto h = radical(g);
    CHECK(h.leading() == g.leading());
    CHECK(gcd(h, h.derivative()).degree() == 0);
    CHECK(divides(h.primitive_part(), g));
  }
}

TEST_CASE("roots modulo m") {
  CHECK(roots_mod(P("x^2 + 1"), 5) == 2);
  CHECK(roots_mod(P("x^2 + 1"), 3) == 0);
  CHECK(roots_mod(P("x"), 4) == 1);
  std::mt19937_64 rng(67);
  for (int i = 0; i < 40; ++i) {
    const auto f = oracle::random_poly(rng, 1 + i % 4, 12);
    for (unsigned long m : {8ul, 9ul, 12ul, 25ul, 49ul, 72ul, 121ul, 1000ul, 1331ul}) {
      CHECK(roots_mod(f, m) == oracle::roots_exhaustive(f, m));
    }
  }
}

TEST_CASE("roots modulo large composite m use the factorization of m") {
  // m above the exhaustive threshold; compare against CRT of exhaustive counts.
  const auto f = P("x^3 - 3x + 2");  // (x - 1)^2 (x + 2)
  const unsigned long a = 343, b = 1331;  // 7^3 * 11^3
  const Int expect = oracle::roots_exhaustive(f, a) * oracle::roots_exhaustive(f, b);
  CHECK(roots_mod(f, Int(a * b)) == expect);
  const auto g = P("x^2 + 1");
  CHECK(roots_mod(g, Int(5 * 5 * 13 * 17 * 29 * 37)) == 32);
  const auto h = P("9x^2 + 3");  // content 3 needs care
  CHECK(roots_mod(h, Int(27 * 4913)) == oracle::roots_exhaustive(h, 27) * oracle::roots_exhaustive(h, 4913));
}

TEST_CASE("roots modulo prime squares") {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 30; ++i) {
    const auto f = oracle::random_poly(rng, 1 + i % 5, 30);
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 13ull, 31ull}) {
      std::vector<std::uint64_t> expect;
      for (std::uint64_t r = 0; r < q * q; ++r) {
        if (f(Int(r)) % Int(q * q) == 0) expect.push_back(r);
      }
      CHECK(roots_mod_prime_square(f, q) == expect);
    }
  }
}

TEST_CASE("divisibility ladder h | g | h^(p-1)") {
  std::mt19937_64 rng(73);
  for (unsigned p : {2u, 3u, 5u}) {
    std::uniform_int_distribution<unsigned> mult(1, p - 1);
    for (int i = 0; i < 10; ++i) {
      IntPoly g{1};
      for (int k = 0; k < 2; ++k) g = g * pow(oracle::random_poly(rng, 1 + (i + k) % 2, 5), mult(rng));
      unsigned top = 0;
      for (const auto& f : factor_over_q(g).factors) top = std::max(top, f.multiplicity);
      if (top > p - 1) continue;
      const auto h = radical(g);
      CHECK(divides(h.primitive_part(), g));
      CHECK(divides(g.primitive_part(), pow(h, p - 1)));
    }
  }
}
