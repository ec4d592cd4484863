#ifndef EBC_BUNDLE_HPP
#define EBC_BUNDLE_HPP

#include <utility>
#include <vector>

#include "ebc/rational.hpp"
#include "ebc/torsion.hpp"

namespace ebc {

/// Indecomposable semistable building block I_d(W_n(a;lambda)): Jordan
/// multiplicity d over the stable bundle of rank n, degree a, with
/// det lambda = O((a-1)p0 + t). Coprimality gcd(n,a) = 1 is enforced
/// whenever n > 1.
struct BundleAtom {
  long long d = 1;
  long long n = 1;
  long long a = 0;
  TorsionPoint t;

  BundleAtom() = default;
  BundleAtom(long long d_, long long n_, long long a_, TorsionPoint t_);

  long long rank() const { return d * n; }
  long long degree() const { return d * a; }
  Rat slope() const { return Rat(a, n); }
  /// Stable constituent data (n, a, t); atoms with equal stable part differ
  /// only in Jordan multiplicity.
  friend bool same_stable_part(const BundleAtom& x, const BundleAtom& y) {
    return x.n == y.n && x.a == y.a && x.t == y.t;
  }
  friend bool operator==(const BundleAtom& x, const BundleAtom& y) {
    return x.d == y.d && same_stable_part(x, y);
  }
};

/// Formal direct sum of atoms, kept in the canonical order
/// (slope desc, n asc, d desc, t lex).
struct BundleExpr {
  std::vector<BundleAtom> atoms;

  static BundleExpr of(std::vector<BundleAtom> atoms);

  long long rank() const;
  long long degree() const;
  bool is_semistable() const;
  /// Slope of the whole bundle; rank 0 is a domain error.
  Rat slope() const;

  friend bool operator==(const BundleExpr& x, const BundleExpr& y) {
    return x.atoms == y.atoms;
  }
};

/// Weakly decreasing slope vector, one entry per rank-unit; carries the two
/// integrality properties of the Atiyah-Bott point.
struct MuVector {
  std::vector<Rat> values;
};

/// Harder-Narasimhan blocks: (slope, semistable piece), slopes strictly
/// decreasing.
std::vector<std::pair<Rat, BundleExpr>> hn_filtration(const BundleExpr& v);

MuVector mu_vector(const BundleExpr& v);

/// Associated graded of the S-equivalence class: I_d(W) -> W^{+d}.
BundleExpr s_equiv_graded(const BundleExpr& v);

/// dim Hom for equal-slope semistable bundles: sum of min(d_i, d_j) over
/// atom pairs with identical stable part.
long long hom_dim(const BundleExpr& v, const BundleExpr& w);

long long aut_dim(const BundleExpr& v);
bool is_regular(const BundleExpr& v);

/// Unique regular representative of the S-class: atoms with identical
/// stable part merged into a single Jordan block.
BundleExpr regular_representative(const BundleExpr& v);

/// (h0, h1), exact on every input; h0 - h1 = degree.
std::pair<long long, long long> cohomology(const BundleExpr& v);

/// Tensor with the degree-k line bundle O((k-1)p0 + s).
BundleExpr tensor_line(const BundleExpr& v, const TorsionPoint& s, long long k);
BundleExpr dual(const BundleExpr& v);

} // namespace ebc

#endif
