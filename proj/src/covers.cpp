#include "rfdiv/covers.hpp"

#include <numeric>

namespace rfdiv::covers {

using polyring::IntPoly;

CyclicCover normalize_cyclic(unsigned p, const IntPoly& g) {
  if (!arith::is_prime(std::uint64_t{p}))
    throw DomainError("covers", "covers: cyclic degree p must be prime, got " + std::to_string(p));
  if (g.degree() < 1) throw DomainError("covers", "covers: cyclic cover needs a non-constant g");
  const auto fac = polyring::factor_over_q(g);
  CyclicCover c;
  c.p = p;
  IntPoly reduced = IntPoly::constant(fac.content);
  bool all_divisible = true;
  for (const auto& [f, mult] : fac.factors) {
    if (mult % p) all_divisible = false;
    if (mult >= p) c.reduced.push_back({f, mult});
    reduced = reduced * pow(f, mult % p);
  }
  if (all_divisible) {
    throw DomainError("covers", "covers: reducible cover, every factor of g = " + g.to_string() +
                                    " has multiplicity divisible by p = " + std::to_string(p));
  }
  c.g = reduced;
  return c;
}

PlaneCover make_plane_cover(const polyring::PlanePoly& F) {
  const IntPoly disc = polyring::discriminant_y(F);
  if (disc.is_zero()) {
    throw DomainError("covers", "covers: plane polynomial has a repeated factor in y");
  }
  const IntPoly branch = disc.degree() < 1 ? IntPoly::constant(1) : polyring::radical(disc).primitive_part();
  for (long x0 = 0; x0 < 64; ++x0) {
    const IntPoly fiber = F.specialize_x(Int(x0));
    if (polyring::is_irreducible(fiber)) return PlaneCover{F, Int(x0), branch};
  }
  throw DomainError("covers", "covers: could not certify irreducibility of " + F.to_string() +
                                  " (no irreducible specialization at x = 0..63)");
}

CoverSpec parse_cover(std::string_view text) {
  polyring::BivariateTerms terms = polyring::parse_terms(text);
  unsigned y_power = 0;
  bool pure = true;
  std::vector<Int> g;
  for (const auto& [m, c] : terms) {
    if (m.second == 0) {
      if (g.size() <= m.first) g.resize(m.first + 1, Int(0));
      g[m.first] = -c;
    } else if (m.first == 0 && c == 1 && y_power == 0) {
      y_power = m.second;
    } else {
      pure = false;
    }
  }
  if (pure && y_power >= 2 && arith::is_prime(std::uint64_t{y_power})) {
    return normalize_cyclic(y_power, IntPoly(std::move(g)));
  }
  return make_plane_cover(polyring::PlanePoly(std::move(terms)));
}

bool is_cyclic(const CoverSpec& c) { return std::holds_alternative<CyclicCover>(c); }

std::string describe(const CoverSpec& c) {
  if (const auto* cyc = std::get_if<CyclicCover>(&c)) {
    return "y^" + std::to_string(cyc->p) + " = " + cyc->g.to_string();
  }
  return std::get<PlaneCover>(c).F.to_string() + " = 0";
}

IntPoly branch_polynomial(const CoverSpec& c) {
  if (const auto* plane = std::get_if<PlaneCover>(&c)) return plane->branch;
  return polyring::radical(std::get<CyclicCover>(c).g).primitive_part();
}

NonrationalBranchPoint has_nonrational_branch_point(const CoverSpec& c) {
  const IntPoly branch = branch_polynomial(c);
  if (branch.degree() < 2) return {};
  for (const auto& [f, mult] : polyring::factor_over_q(branch).factors) {
    if (f.degree() >= 2) return {true, f};
  }
  return {};
}

unsigned points_over_infinity(const CoverSpec& c) {
  const auto* cyc = std::get_if<CyclicCover>(&c);
  if (!cyc) throw DomainError("covers", "covers: points over infinity are only computed for cyclic covers");
  return std::gcd(cyc->p, static_cast<unsigned>(cyc->g.degree()));
}

std::string_view to_string(FiberStatus s) {
  switch (s) {
    case FiberStatus::regular: return "regular";
    case FiberStatus::branch: return "branch";
    case FiberStatus::degenerate: return "degenerate";
    case FiberStatus::unresolved: return "unresolved";
  }
  return "?";
}

FiberSpec specialize(const CoverSpec& c, const Int& n, const SpecializeOptions& options) {
  FiberSpec fiber;
  fiber.n = n;
  if (const auto* cyc = std::get_if<CyclicCover>(&c)) {
    fiber.value = cyc->g(n);
    if (fiber.value == 0) {
      fiber.status = FiberStatus::branch;
      return fiber;
    }
    try {
      const auto f = arith::factor(fiber.value, options.factor);
      fiber.kummer_class = kummer::class_of_kernel(arith::p_free_kernel(f, cyc->p), cyc->p);
    } catch (const BudgetError& e) {
      fiber.status = FiberStatus::unresolved;
      fiber.unresolved_reason = e.what();
      return fiber;
    }
    fiber.status = fiber.kummer_class->trivial() ? FiberStatus::degenerate : FiberStatus::regular;
    return fiber;
  }
  const auto& plane = std::get<PlaneCover>(c);
  if (plane.branch(n) == 0) {
    fiber.status = FiberStatus::branch;
    return fiber;
  }
  const auto fac = polyring::factor_over_q(plane.F.specialize_x(n));
  for (const auto& [f, mult] : fac.factors) {
    fiber.factors.push_back({f, mult, kummer::field_fingerprint(f, options.prime_budget, true)});
  }
  return fiber;
}

}  // namespace rfdiv::covers
