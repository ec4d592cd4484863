#ifndef EBC_CHEVALLEY_HPP
#define EBC_CHEVALLEY_HPP

#include <map>
#include <string>
#include <vector>

#include "ebc/rational.hpp"
#include "ebc/root_system.hpp"

namespace ebc {

/// Exact rational coordinate vector over a ChevalleyAlgebra basis.
using AlgElement = RatVector;

struct Sl2Triple {
  AlgElement x_plus, h, x_minus;
};

class ChevalleyAlgebra;

/// Span of a subset of the parent basis: a chunk of the Cartan plus a root
/// subset closed under bracket. Stores parent indices, never re-derived
/// structure constants.
struct Subalgebra {
  const ChevalleyAlgebra* parent = nullptr;
  std::vector<int> basis_indices; // sorted

  std::size_t dim() const { return basis_indices.size(); }
};

/// Chevalley-basis realization of the simple Lie algebra of a RootSystem:
/// basis {h_1..h_r} followed by e_beta for beta over positive then negative
/// roots, integer structure constants with |N_{a,b}| = p+1. Signs are fixed
/// by assigning +(p+1) on extraspecial pairs in the height-lex root order;
/// every exported quantity (ranks, kernel dimensions) is independent of that
/// choice.
class ChevalleyAlgebra {
public:
  static ChevalleyAlgebra build(const RootSystem& rs);

  const RootSystem& root_system() const { return rs_; }
  std::size_t dim() const { return dim_; }
  int rank() const { return rs_.rank(); }
  std::size_t num_positive() const { return rs_.positive_roots().size(); }

  /// Signed root index: k in [0,P) positive, [P,2P) the negative of k-P.
  int basis_index_of_root(int signed_root) const {
    return rank() + signed_root;
  }
  int negate_signed(int signed_root) const {
    int p = (int)num_positive();
    return signed_root < p ? signed_root + p : signed_root - p;
  }
  RootCoords signed_root_coords(int signed_root) const;
  /// Signed index of a root given by coordinates, -1 if not a root.
  int signed_index(const RootCoords& r) const;

  AlgElement zero() const { return AlgElement(dim_, Rat(0)); }
  AlgElement cartan_element(int i) const;
  AlgElement root_vector(int signed_root) const;
  /// h_{beta^vee} as a combination of the simple h_i.
  AlgElement coroot_element(const RootCoords& beta) const;

  /// Structure constant N_{a,b} for signed roots with a+b a root.
  long long structure_N(int a, int b) const;

  AlgElement bracket(const AlgElement& x, const AlgElement& y) const;

  /// dim Ker(ad X) on the full algebra, by exact rank.
  std::size_t centralizer_dim(const AlgElement& x) const;
  /// Same restricted to a subalgebra; X must lie in its span and the span
  /// must be bracket-closed around X.
  std::size_t centralizer_dim(const Subalgebra& sub, const AlgElement& x) const;

  /// Complete X_+ = sum of e_beta over S (signed indices of a simple system
  /// of some closed subsystem) to an sl2-triple, exactly verified.
  Sl2Triple sl2_complete(const std::vector<int>& S) const;

  /// Dimensions of the sl2-irreducible summands of the (sub)algebra under a
  /// triple, via ad-H weights on Ker ad X_+.
  std::vector<long long> sl2_decompose(const Sl2Triple& t) const;
  std::vector<long long> sl2_decompose(const Subalgebra& sub,
                                       const Sl2Triple& t) const;

  /// Full-algebra handle as a Subalgebra.
  Subalgebra full() const;
  /// Cartan plus the span of e_alpha over a closed signed-root subset.
  Subalgebra span_with_cartan(const std::vector<int>& signed_roots) const;

  /// Jacobi identity on the given basis triple (used by the build-time
  /// sampler and exhaustively by the unit tests).
  bool jacobi_holds(int i, int j, int k) const;

  std::string element_str(const AlgElement& x) const;

private:
  explicit ChevalleyAlgebra(RootSystem rs) : rs_(std::move(rs)) {}
  long long n_positive_pair(int i, int j) const; // memoized, i,j positive
  long long p_value(int a, int b) const;
  Rat signed_norm2(int a) const;

  RootSystem rs_;
  std::size_t dim_ = 0;
  std::vector<std::pair<int, int>> extraspecial_; // per positive root, or (-1,-1)
  mutable std::map<std::pair<int, int>, long long> npos_memo_;
  std::map<RootCoords, int> signed_lookup_;
};

} // namespace ebc

#endif
