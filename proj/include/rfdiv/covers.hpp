#pragma once

#include "rfdiv/arith.hpp"
#include "rfdiv/kummer.hpp"
#include "rfdiv/polyring.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rfdiv::covers {

/// y^p = g(x), p prime, with every irreducible factor of g of multiplicity < p.
struct CyclicCover {
  unsigned p = 2;
  polyring::IntPoly g;
  /// Factors of the input whose multiplicity was reduced, with their input multiplicity.
  std::vector<polyring::IrreducibleFactor> reduced;
};

/// F(x, y) = 0 with F monic in y and irreducible over Q(x).
struct PlaneCover {
  polyring::PlanePoly F;
  /// x-value whose specialization F(x0, y) is irreducible over Q; certifies irreducibility of F.
  Int irreducibility_witness;
  /// Radical of disc_y(F), primitive.
  polyring::IntPoly branch;
};

using CoverSpec = std::variant<CyclicCover, PlaneCover>;

/// Reduces multiplicities mod p. Throws DomainError when every multiplicity is
/// divisible by p (y^p - g is then not geometrically irreducible).
CyclicCover normalize_cyclic(unsigned p, const polyring::IntPoly& g);
PlaneCover make_plane_cover(const polyring::PlanePoly& F);

/// "y^p - g(x)" with p prime becomes a cyclic cover, anything else a plane cover.
CoverSpec parse_cover(std::string_view text);
std::string describe(const CoverSpec& c);
bool is_cyclic(const CoverSpec& c);

/// Squarefree primitive polynomial (positive leading coefficient) whose roots are
/// the finite branch points. For plane covers this is the radical of disc_y(F) and
/// may over-approximate the branch locus.
polyring::IntPoly branch_polynomial(const CoverSpec& c);

struct NonrationalBranchPoint {
  bool present = false;
  polyring::IntPoly witness;  // irreducible factor of degree >= 2 when present
};
NonrationalBranchPoint has_nonrational_branch_point(const CoverSpec& c);

/// gcd(p, deg g): geometric points over infinity on the smooth completion of a
/// cyclic cover. Plane covers are unsupported.
unsigned points_over_infinity(const CoverSpec& c);

enum class FiberStatus { regular, branch, degenerate, unresolved };
std::string_view to_string(FiberStatus s);

struct FiberFactor {
  polyring::IntPoly factor;  // irreducible factor of F(n, y)
  unsigned multiplicity = 1;
  kummer::FieldFingerprint fingerprint;
};

struct FiberSpec {
  Int n;
  FiberStatus status = FiberStatus::regular;
  // cyclic payload
  Int value;
  std::optional<kummer::KummerClass> kummer_class;
  // plane payload
  std::vector<FiberFactor> factors;
  std::string unresolved_reason;
};

struct SpecializeOptions {
  arith::FactorOptions factor;
  unsigned prime_budget = 50;
};

/// Never throws on factorization budget exhaustion: the fiber is marked unresolved.
FiberSpec specialize(const CoverSpec& c, const Int& n, const SpecializeOptions& options = {});

}  // namespace rfdiv::covers
