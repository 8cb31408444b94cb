#include "doctest.h"
#include "oracles.hpp"

#include "rfdiv/modpoly.hpp"

#include <algorithm>
#include <numeric>

using namespace rfdiv;
namespace mp = rfdiv::modp;

namespace {

mp::Poly random_monic(std::mt19937_64& rng, int degree, mp::u64 q) {
  std::uniform_int_distribution<mp::u64> c(0, q - 1);
  mp::Poly f(degree + 1);
  for (auto& x : f) x = c(rng);
  f.back() = 1;
  return f;
}

}  // namespace

TEST_CASE("inverse and basic arithmetic") {
  for (mp::u64 q : {2ull, 3ull, 101ull, 65537ull}) {
    for (mp::u64 a = 1; a < std::min<mp::u64>(q, 200); ++a) CHECK(a * mp::inverse(a, q) % q == 1);
  }
  std::mt19937_64 rng(5);
  const mp::u64 q = 97;
  for (int i = 0; i < 50; ++i) {
    const auto a = random_monic(rng, 5, q), b = random_monic(rng, 3, q);
    mp::Poly quot, r;
    mp::divmod(a, b, q, quot, r);
    CHECK(mp::add(mp::mul(quot, b, q), r, q) == a);
    CHECK(mp::degree(r) < mp::degree(b));
    mp::Poly s, t;
    const auto g = mp::ext_gcd(a, b, q, s, t);
    CHECK(mp::add(mp::mul(s, a, q), mp::mul(t, b, q), q) == g);
    CHECK(mp::rem(a, g, q).empty());
  }
}

TEST_CASE("roots match exhaustive evaluation") {
  std::mt19937_64 rng(9);
  for (mp::u64 q : {3ull, 5ull, 61ull, 67ull, 101ull, 1009ull}) {
    for (int i = 0; i < 20; ++i) {
      const auto f = random_monic(rng, 1 + i % 6, q);
      std::vector<mp::u64> expect;
      for (mp::u64 x = 0; x < q; ++x) {
        if (mp::eval(f, x, q) == 0) expect.push_back(x);
      }
      auto got = mp::roots(f, q);
      std::sort(got.begin(), got.end());
      CHECK(got == expect);
    }
  }
}

TEST_CASE("splitting degrees sum to the degree") {
  std::mt19937_64 rng(17);
  for (mp::u64 q : {3ull, 7ull, 101ull}) {
    for (int i = 0; i < 30; ++i) {
      auto f = random_monic(rng, 2 + i % 7, q);
      // Make f squarefree by dividing out gcd(f, f').
      const auto g = mp::gcd(f, mp::derivative(f, q), q);
      if (mp::degree(g) > 0) continue;
      const auto degs = mp::splitting_degrees(f, q);
      CHECK(std::accumulate(degs.begin(), degs.end(), 0) == mp::degree(f));
      CHECK(std::is_sorted(degs.begin(), degs.end()));
      const auto lin = std::count(degs.begin(), degs.end(), 1);
      CHECK(static_cast<std::size_t>(lin) == mp::roots(f, q).size());
    }
  }
  // x^4 + 1 splits into two quadratics mod 3 and into linears mod 17.
  CHECK(mp::splitting_degrees({1, 0, 0, 0, 1}, 3) == std::vector<int>{2, 2});
  CHECK(mp::splitting_degrees({1, 0, 0, 0, 1}, 17) == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("equal-degree factors multiply back") {
  std::mt19937_64 rng(23);
  for (mp::u64 q : {5ull, 101ull, 7919ull}) {
    for (int i = 0; i < 20; ++i) {
      const auto f = random_monic(rng, 2 + i % 8, q);
      if (mp::degree(mp::gcd(f, mp::derivative(f, q), q)) > 0) continue;
      const auto parts = mp::factor_squarefree(f, q, rng);
      mp::Poly prod{1};
      for (const auto& p : parts) {
        prod = mp::mul(prod, p, q);
        CHECK(p.back() == 1);
        CHECK(mp::splitting_degrees(p, q).size() == 1);
      }
      CHECK(prod == f);
    }
  }
}
