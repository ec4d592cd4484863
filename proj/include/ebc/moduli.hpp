#ifndef EBC_MODULI_HPP
#define EBC_MODULI_HPP

#include <optional>
#include <string>
#include <vector>

#include "ebc/rational.hpp"
#include "ebc/root_system.hpp"

namespace ebc {

/// Weighted projective data of a moduli space M(G) or M(G, c). Weights are
/// kept verbatim (e.g. P(1,2,...,2) is never renamed to its underlying
/// projective space); both the diagram order and the ascending multiset are
/// reported.
struct ModuliDescriptor {
  char type = 'A';
  int rank = 0;
  int center_label = -1; // -1: simply connected
  std::vector<long long> weights;        // diagram/orbit order
  std::vector<long long> weights_sorted; // ascending
  long long dim = 0;
  bool is_point = false;
  bool is_straight_projective = false; // all weights equal 1
};

/// Singular-stratum record: points whose automorphism component group is
/// cyclic of order d.
struct StratumRecord {
  long long d = 1;
  long long locus_dim = 0;
  std::vector<Rat> phases; // eigenvalue phases in [0,1), multiset sorted
};

ModuliDescriptor moduli_weights(const RootSystem& rs);
ModuliDescriptor moduli_weights_c(const RootSystem& rs, const CenterElement& c);

/// Simply connected stratum (c = nullopt) or c-twisted stratum for the pair
/// (G~/<c>, c). Inadmissible d is a domain error.
StratumRecord strata(const RootSystem& rs,
                     const std::optional<CenterElement>& c, long long d);

/// The isogenous simply connected partner whose moduli space coincides with
/// M(G~/<c>, c); rank 0 means the trivial group (a point).
struct IsogenyPartner {
  char type = 'A';
  int rank = 0;
  std::string display; // e.g. "Sp(4)" or "F4"
};
IsogenyPartner isogeny_partner(const RootSystem& rs, const CenterElement& c);

/// Product bookkeeping for semisimple-times-torus groups.
struct ProductDescriptor {
  std::vector<ModuliDescriptor> factors;
  long long dim = 0;         // sum of factor dims plus the abelian factor
  long long abelian_dim = 0; // torus rank d gives a (Pic^0 E)^d factor
};
ProductDescriptor product_descriptor(
    const std::vector<std::pair<const RootSystem*, std::optional<CenterElement>>>&
        factors,
    long long torus_rank = 0);

} // namespace ebc

#endif
