#ifndef EBC_ROOT_SYSTEM_HPP
#define EBC_ROOT_SYSTEM_HPP

#include <string>
#include <vector>

#include "ebc/rational.hpp"

namespace ebc {

/// Integer coordinates of a root in the simple-root basis.
using RootCoords = std::vector<long long>;

/// Element of the Weyl group. The matrix acts on coroot coordinates (the
/// lattice where flat pairs live); the word is kept for provenance, stored
/// in application order (first letter acts first).
struct WeylElement {
  std::vector<int> word;
  std::vector<std::vector<long long>> mat;

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.mat == b.mat;
  }
};

/// Element of the center of the simply connected group, realized as the
/// class of a minuscule fundamental coweight modulo the coroot lattice.
struct CenterElement {
  int label = 0;       // 0 is the identity
  int node = -1;       // minuscule node i(c), -1 for the identity
  long long order = 1; // order in the center
  RatVector coweight;  // representative coweight, coordinates mod 1
};

/// Orbit data of w_c on the extended node set {alpha_0, ..., alpha_r}.
struct CenterOrbitData {
  WeylElement w_c;
  std::vector<std::vector<int>> orbits; // partition of {0..r}, node 0 = alpha_0
  std::vector<long long> orbit_sizes;   // n_o
  std::vector<long long> orbit_comarks; // g_o
  long long d0 = 0;                     // gcd of n_o * g_o
};

/// Immutable Cartan/root/Weyl data for one simple type. All coordinates are
/// exact; positive roots are listed in height-then-lex order so downstream
/// indices are reproducible.
class RootSystem {
public:
  /// Valid pairs: A_n n>=1, B_n n>=2, C_n n>=2, D_n n>=3, E_6..E_8, F_4, G_2.
  static RootSystem build(char type, int rank);

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, type_) + std::to_string(rank_); }

  /// cartan()[i][j] = <alpha_j, alpha_i^vee>.
  const std::vector<std::vector<long long>>& cartan() const { return cartan_; }
  long long cartan_det() const { return cartan_det_; }

  /// Positive roots in height-then-lex order.
  const std::vector<RootCoords>& positive_roots() const { return pos_roots_; }
  std::size_t num_roots() const { return 2 * pos_roots_.size(); }
  /// Index into positive_roots(), or -1.
  int positive_index(const RootCoords& r) const;
  bool is_root(const RootCoords& r) const;

  const RootCoords& highest_root() const { return pos_roots_.back(); }
  const std::vector<long long>& marks() const { return marks_; }
  /// Comarks g_1..g_r; g_0 = 1 by convention.
  const std::vector<long long>& comarks() const { return comarks_; }
  /// (g_0, g_1, ..., g_r).
  std::vector<long long> extended_comarks() const;
  const std::vector<long long>& exponents() const { return exponents_; }
  /// Casimir weights d_i = m_i + 1, ascending.
  std::vector<long long> casimir_weights() const;
  long long weyl_order() const { return weyl_order_; }

  /// Squared length (alpha, alpha), normalized so long roots have length 2.
  const std::vector<Rat>& simple_norm2() const { return norm2_; }
  Rat root_norm2(const RootCoords& r) const;
  /// W-invariant bilinear form on the root side (coordinates in the
  /// simple-root basis).
  Rat inner_product(const RootCoords& x, const RootCoords& y) const;
  /// Coroot of a root, as an integer vector in the simple-coroot basis.
  std::vector<long long> coroot_coords(const RootCoords& r) const;

  /// <beta, alpha_i^vee> for a root beta.
  long long pair_root_simple_coroot(const RootCoords& beta, int i) const;
  /// <beta, x> where x has coroot coordinates.
  Rat pair_root_coweight(const RootCoords& beta, const RatVector& x) const;

  // --- Weyl group ---
  WeylElement identity_element() const;
  WeylElement simple_reflection(int i) const;
  WeylElement compose(const WeylElement& a, const WeylElement& b) const; // a after b
  /// Longest element of the parabolic on simple indices J (full group when
  /// J is all of 0..r-1).
  WeylElement longest_element(const std::vector<int>& J) const;
  WeylElement longest_element() const;

  RatVector act_coweight(const WeylElement& w, const RatVector& v) const;
  RootCoords act_root(const WeylElement& w, const RootCoords& beta) const;
  /// Images of the positive-root list under w (signed index convention:
  /// roots are looked up by coordinates).
  std::vector<RootCoords> act_root_list(const WeylElement& w) const;

  /// Orbit of a coweight vector, canonically sorted. Throws DomainError when
  /// the orbit exceeds max_elements.
  std::vector<RatVector> weyl_orbit(const RatVector& v,
                                    std::size_t max_elements = 2000000) const;
  std::vector<RootCoords> weyl_orbit_root(const RootCoords& beta) const;

  // --- center ---
  std::vector<CenterElement> center_elements() const;
  /// Requires a nontrivial c. w_c = w_{0,J} w_0 with J the complement of the
  /// minuscule node; the construction is validated by checking that w_c
  /// permutes the extended simple-root set.
  CenterOrbitData center_orbit_data(const CenterElement& c) const;

private:
  RootSystem() = default;
  void generate_roots();
  void compute_norms();
  void compute_marks_comarks();
  void compute_exponents();
  void validate() const;

  char type_ = 'A';
  int rank_ = 0;
  std::vector<std::vector<long long>> cartan_;
  long long cartan_det_ = 0;
  std::vector<RootCoords> pos_roots_;
  std::vector<long long> heights_;
  std::vector<Rat> norm2_;
  std::vector<long long> marks_, comarks_, exponents_;
  long long weyl_order_ = 0;
};

} // namespace ebc

#endif
