#include "ebc/bundle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ebc/errors.hpp"

namespace ebc {

BundleAtom::BundleAtom(long long d_, long long n_, long long a_,
                       TorsionPoint t_)
    : d(d_), n(n_), a(a_), t(t_) {
  if (d < 1 || n < 1) throw DomainError("atom needs d >= 1 and n >= 1");
  if (n > 1 && std::gcd(n, a < 0 ? -a : a) != 1)
    throw DomainError("gcd(n, a) = 1 required for W_n(a; lambda)",
                      "stable atoms have coprime rank and degree");
}

namespace {

bool atom_before(const BundleAtom& x, const BundleAtom& y) {
  Rat sx = x.slope(), sy = y.slope();
  if (sx != sy) return sy < sx; // slope descending
  if (x.n != y.n) return x.n < y.n;
  if (x.d != y.d) return y.d < x.d; // multiplicity descending
  return x.t < y.t;
}

} // namespace

BundleExpr BundleExpr::of(std::vector<BundleAtom> atoms) {
  std::sort(atoms.begin(), atoms.end(), atom_before);
  return BundleExpr{std::move(atoms)};
}

long long BundleExpr::rank() const {
  long long r = 0;
  for (const BundleAtom& a : atoms) r += a.rank();
  return r;
}

long long BundleExpr::degree() const {
  long long d = 0;
  for (const BundleAtom& a : atoms) d += a.degree();
  return d;
}

bool BundleExpr::is_semistable() const {
  for (std::size_t i = 1; i < atoms.size(); ++i)
    if (atoms[i].slope() != atoms[0].slope()) return false;
  return true;
}

Rat BundleExpr::slope() const {
  if (rank() == 0) throw DomainError("slope of the zero bundle");
  return Rat(degree()) / Rat(rank());
}

std::vector<std::pair<Rat, BundleExpr>> hn_filtration(const BundleExpr& v) {
  std::vector<std::pair<Rat, BundleExpr>> blocks;
  for (const BundleAtom& a : v.atoms) { // atoms already sorted by slope desc
    if (blocks.empty() || blocks.back().first != a.slope())
      blocks.push_back({a.slope(), BundleExpr{}});
    blocks.back().second.atoms.push_back(a);
  }
  return blocks;
}

MuVector mu_vector(const BundleExpr& v) {
  MuVector mu;
  for (const auto& [slope, block] : hn_filtration(v))
    for (long long i = 0; i < block.rank(); ++i) mu.values.push_back(slope);
  return mu;
}

BundleExpr s_equiv_graded(const BundleExpr& v) {
  if (!v.is_semistable())
    throw DomainError("S-equivalence classes are defined for semistable bundles");
  std::vector<BundleAtom> out;
  for (const BundleAtom& a : v.atoms)
    for (long long i = 0; i < a.d; ++i) out.push_back({1, a.n, a.a, a.t});
  return BundleExpr::of(std::move(out));
}

long long hom_dim(const BundleExpr& v, const BundleExpr& w) {
  if (!v.is_semistable() || !w.is_semistable())
    throw DomainError("hom_dim requires semistable bundles");
  if (!v.atoms.empty() && !w.atoms.empty() && v.slope() != w.slope())
    throw DomainError("hom_dim requires equal slopes",
                      "maps between stable bundles of equal slope vanish "
                      "unless the bundles are isomorphic");
  long long total = 0;
  for (const BundleAtom& a : v.atoms)
    for (const BundleAtom& b : w.atoms)
      if (same_stable_part(a, b)) total += std::min(a.d, b.d);
  return total;
}

long long aut_dim(const BundleExpr& v) { return hom_dim(v, v); }

bool is_regular(const BundleExpr& v) {
  if (!v.is_semistable())
    throw DomainError("regularity is defined for semistable bundles");
  for (std::size_t i = 0; i < v.atoms.size(); ++i)
    for (std::size_t j = i + 1; j < v.atoms.size(); ++j)
      if (same_stable_part(v.atoms[i], v.atoms[j])) return false;
  return true;
}

BundleExpr regular_representative(const BundleExpr& v) {
  if (!v.is_semistable())
    throw DomainError("regular representatives exist per S-class of "
                      "semistable bundles");
  std::vector<BundleAtom> merged;
  for (const BundleAtom& a : v.atoms) {
    bool found = false;
    for (BundleAtom& m : merged)
      if (same_stable_part(m, a)) {
        m.d += a.d;
        found = true;
      }
    if (!found) merged.push_back(a);
  }
  return BundleExpr::of(std::move(merged));
}

std::pair<long long, long long> cohomology(const BundleExpr& v) {
  long long h0 = 0, h1 = 0;
  for (const BundleAtom& a : v.atoms) {
    if (a.a > 0) {
      h0 += a.degree();
    } else if (a.a < 0) {
      h1 += -a.degree();
    } else {
      // slope zero forces n = 1; sections of I_d(lambda) are the kernel of
      // one Jordan block when lambda is trivial, nothing otherwise
      if (a.t.is_origin()) {
        h0 += 1;
        h1 += 1;
      }
    }
  }
  return {h0, h1};
}

BundleExpr tensor_line(const BundleExpr& v, const TorsionPoint& s,
                       long long k) {
  std::vector<BundleAtom> out;
  for (const BundleAtom& a : v.atoms)
    out.push_back({a.d, a.n, a.a + a.n * k, a.t + s.times(a.n)});
  return BundleExpr::of(std::move(out));
}

BundleExpr dual(const BundleExpr& v) {
  std::vector<BundleAtom> out;
  for (const BundleAtom& a : v.atoms) out.push_back({a.d, a.n, -a.a, -a.t});
  return BundleExpr::of(std::move(out));
}

} // namespace ebc
