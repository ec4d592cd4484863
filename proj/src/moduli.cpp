#include "ebc/moduli.hpp"

#include <algorithm>

#include "ebc/errors.hpp"
#include "ebc/qmatrix.hpp"

namespace ebc {

namespace {

void finish(ModuliDescriptor& md) {
  md.weights_sorted = md.weights;
  std::sort(md.weights_sorted.begin(), md.weights_sorted.end());
  md.dim = (long long)md.weights.size() - 1;
  md.is_point = md.dim == 0;
  md.is_straight_projective =
      std::all_of(md.weights.begin(), md.weights.end(),
                  [](long long w) { return w == 1; });
}

long long fixed_space_dim(const RootSystem& rs, const WeylElement& w) {
  QMat m(rs.rank(), rs.rank());
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j)
      m.at(i, j) = (long)(w.mat[i][j] - (i == j ? 1 : 0));
  return rs.rank() - (long long)m.rank();
}

} // namespace

ModuliDescriptor moduli_weights(const RootSystem& rs) {
  ModuliDescriptor md;
  md.type = rs.type();
  md.rank = rs.rank();
  md.weights = rs.extended_comarks();
  finish(md);
  return md;
}

ModuliDescriptor moduli_weights_c(const RootSystem& rs,
                                  const CenterElement& c) {
  if (c.node < 0)
    throw DomainError("moduli_weights_c needs a nontrivial center element");
  CenterOrbitData od = rs.center_orbit_data(c);
  ModuliDescriptor md;
  md.type = rs.type();
  md.rank = rs.rank();
  md.center_label = c.label;
  for (std::size_t k = 0; k < od.orbits.size(); ++k)
    md.weights.push_back(od.orbit_sizes[k] * od.orbit_comarks[k]);
  finish(md);
  // two-route check: #orbits - 1 must equal dim h^{w_c}
  if (md.dim != fixed_space_dim(rs, od.w_c))
    throw std::logic_error("orbit count disagrees with the w_c fixed space");
  return md;
}

StratumRecord strata(const RootSystem& rs,
                     const std::optional<CenterElement>& c, long long d) {
  if (d < 1) throw DomainError("stratum order must be >= 1");
  StratumRecord rec;
  rec.d = d;
  std::vector<long long> weights;
  if (!c || c->node < 0) {
    weights = rs.extended_comarks();
    bool divides_some =
        std::any_of(weights.begin(), weights.end(),
                    [d](long long g) { return g % d == 0; });
    if (!divides_some)
      throw DomainError("no stratum of order " + std::to_string(d) + " in " +
                            rs.name(),
                        "Thm 5.6(ii): the component group is cyclic and its order "
                        "divides some comark g_i");
  } else {
    CenterOrbitData od = rs.center_orbit_data(*c);
    for (std::size_t k = 0; k < od.orbits.size(); ++k)
      weights.push_back(od.orbit_sizes[k] * od.orbit_comarks[k]);
    bool divides_some =
        std::any_of(weights.begin(), weights.end(),
                    [d](long long g) { return g % d == 0; });
    if (d % od.d0 != 0 || !divides_some)
      throw DomainError("no stratum of order " + std::to_string(d) + " in " +
                            rs.name() + " twisted by c" +
                            std::to_string(c->label),
                        "Thm 5.9(ii)-(iii): admissible orders are multiples of d_0 "
                        "dividing some n_o g_o");
  }
  long long divisible = 0;
  for (long long g : weights) {
    if (g % d == 0) {
      ++divisible;
    } else {
      rec.phases.push_back(Rat(g, d).mod1());
    }
  }
  rec.locus_dim = divisible - 1;
  std::sort(rec.phases.begin(), rec.phases.end());
  return rec;
}

IsogenyPartner isogeny_partner(const RootSystem& rs, const CenterElement& c) {
  if (c.node < 0)
    throw DomainError("no table entry for the identity center element");
  char t = rs.type();
  int n = rs.rank();
  auto sp = [](int m) { // Sp(2k) as C_k, with the degenerate ranks spelled out
    IsogenyPartner p;
    p.type = 'C';
    p.rank = m / 2;
    p.display = m == 0 ? std::string("trivial group")
                       : "Sp(" + std::to_string(m) + ")";
    return p;
  };
  if (t == 'A') {
    long long f = c.order;
    IsogenyPartner p;
    p.type = 'A';
    p.rank = (int)((n + 1) / f) - 1;
    p.display = "SL(" + std::to_string((n + 1) / f) + ")";
    return p;
  }
  if (t == 'B') return sp(2 * n - 2);
  if (t == 'C') return n % 2 == 0 ? sp(n) : sp(n - 1);
  if (t == 'D') {
    if (c.node == 0) return sp(2 * n - 4); // the SO(2n) kernel
    if (n % 2 == 1) return sp(n - 3);      // spinor element of order 4
    IsogenyPartner p;                      // exotic order-2 element
    p.type = 'B';
    p.rank = n / 2;
    p.display = "Spin(" + std::to_string(n + 1) + ")";
    return p;
  }
  if (t == 'E' && n == 6) return {'G', 2, "G2"};
  if (t == 'E' && n == 7) return {'F', 4, "F4"};
  throw DomainError("no table entry for " + rs.name() + " with center c" +
                    std::to_string(c.label));
}

ProductDescriptor product_descriptor(
    const std::vector<std::pair<const RootSystem*, std::optional<CenterElement>>>&
        factors,
    long long torus_rank) {
  ProductDescriptor pd;
  pd.abelian_dim = torus_rank;
  pd.dim = torus_rank;
  for (const auto& [rs, c] : factors) {
    ModuliDescriptor md =
        c && c->node >= 0 ? moduli_weights_c(*rs, *c) : moduli_weights(*rs);
    pd.dim += md.dim;
    pd.factors.push_back(std::move(md));
  }
  return pd;
}

} // namespace ebc
