#ifndef EBC_FLAT_PAIRS_HPP
#define EBC_FLAT_PAIRS_HPP

#include <optional>
#include <string>
#include <vector>

#include "ebc/bundle.hpp"
#include "ebc/chevalley.hpp"
#include "ebc/root_system.hpp"

namespace ebc {

/// Flat torus representation rho: pi1(E) -> T as two commuting torsion
/// coweights, coordinates in the coroot basis, reduced mod 1.
struct FlatPair {
  RatVector x, y;

  static FlatPair of(const RootSystem& rs, RatVector x, RatVector y);
};

/// One irreducible component of the centralizer subsystem R(rho).
struct SubsystemComponent {
  char type = 'A';
  int rank = 0;
  std::vector<int> simple_roots;        // positive-root indices in the parent
  std::vector<long long> casimir_weights; // d_i, ascending
};

struct CentralizerInfo {
  std::vector<int> positive_roots; // R(rho) ∩ R+, positive-root indices
  std::vector<int> canonical_simple; // indecomposables of the positive part
  std::vector<SubsystemComponent> components;
  int center_dim = 0; // r minus the subsystem rank
  int rank() const;   // rank of z_g(rho): always r for simply connected G
};

/// Nilpotent direction for the twist: either a subset of the canonical
/// simple system of R(rho) (realized as a sum of root vectors) or an
/// explicit element.
struct NilpotentDatum {
  std::vector<int> simple_subset; // indices into canonical_simple
  std::optional<AlgElement> explicit_element;
};

CentralizerInfo centralizer(const RootSystem& rs, const FlatPair& rho);

/// ad xi_0 = O^r + sum over roots of the degree-0 line bundle at
/// (alpha(x), alpha(y)) mod 1.
BundleExpr adjoint_bundle_flat(const RootSystem& rs, const FlatPair& rho);

/// Principal choice: all of the canonical simple system of R(rho).
NilpotentDatum regular_nilpotent_for(const RootSystem& rs, const FlatPair& rho);

AlgElement realize_nilpotent(const ChevalleyAlgebra& alg,
                             const CentralizerInfo& info,
                             const NilpotentDatum& X);

/// (h0, h1) of ad of the bundle attached to (rho, X): both equal the exact
/// kernel dimension of ad X on z_g(rho).
std::pair<long long, long long> pair_cohomology(const ChevalleyAlgebra& alg,
                                                const FlatPair& rho,
                                                const NilpotentDatum& X);

/// Trivial-constituent part of ad xi for the regular representative:
/// O^{center} + per component the sum of I_{2 d_i - 1}.
BundleExpr regular_adjoint_O_part(const RootSystem& rs, const FlatPair& rho);

/// Parabolic and Levi root sets cut out by a rational coweight mu.
struct ParabolicLevi {
  std::vector<RootCoords> p_roots;    // <alpha, mu> >= 0
  std::vector<RootCoords> levi_roots; // <alpha, mu> = 0
};
ParabolicLevi parabolic_levi_from_mu(const RootSystem& rs, const RatVector& mu);

/// Saturation of (L, mu): the roots vanishing on mu are exactly the Levi's.
bool is_saturated(const RootSystem& rs,
                  const std::vector<RootCoords>& levi_roots,
                  const RatVector& mu);

/// The Atiyah-Bott point of a vector bundle; same values as mu_vector.
MuVector atiyah_bott_point(const BundleExpr& v);

/// Canonical representative of the diagonal W-orbit of (x, y):
/// lexicographic minimum over the full orbit for rank <= 4, greedy descent
/// with exact equality fallback above that.
FlatPair canonical_pair(const RootSystem& rs, const FlatPair& rho);

/// Exact W-equivalence of two pairs (diagonal action).
bool pairs_equivalent(const RootSystem& rs, const FlatPair& a,
                      const FlatPair& b, std::size_t max_orbit = 2000000);

} // namespace ebc

#endif
