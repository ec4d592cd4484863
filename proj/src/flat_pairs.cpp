#include "ebc/flat_pairs.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ebc/errors.hpp"
#include "ebc/qmatrix.hpp"

namespace ebc {

FlatPair FlatPair::of(const RootSystem& rs, RatVector x, RatVector y) {
  if ((int)x.size() != rs.rank() || (int)y.size() != rs.rank())
    throw DomainError("coweight length must equal the rank");
  for (Rat& c : x) c = c.mod1();
  for (Rat& c : y) c = c.mod1();
  return FlatPair{std::move(x), std::move(y)};
}

int CentralizerInfo::rank() const {
  int sub = 0;
  for (const SubsystemComponent& c : components) sub += c.rank;
  return sub + center_dim;
}

namespace {

// exponents of a subsystem from its positive-root heights histogram (the
// height partition is conjugate to the exponent partition)
std::vector<long long> exponents_from_heights(std::vector<long long> heights) {
  std::map<long long, long long> count;
  long long max_h = 0;
  for (long long h : heights) {
    ++count[h];
    max_h = std::max(max_h, h);
  }
  std::vector<long long> exps;
  for (long long h = 1; h <= max_h; ++h) {
    long long k = count.count(h) ? count[h] : 0;
    long long k1 = count.count(h + 1) ? count[h + 1] : 0;
    for (long long i = 0; i < k - k1; ++i) exps.push_back(h);
  }
  std::sort(exps.begin(), exps.end());
  return exps;
}

// Dynkin type of a component from its Cartan matrix
std::pair<char, int> classify(const std::vector<std::vector<long long>>& c) {
  int n = (int)c.size();
  if (n == 1) return {'A', 1};
  std::vector<std::vector<int>> adj(n);
  int max_edge = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (c[i][j] != 0) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        max_edge = std::max<int>(max_edge, (int)(c[i][j] * c[j][i]));
      }
  if (max_edge == 3) return {'G', 2};
  int fork = -1;
  for (int i = 0; i < n; ++i)
    if (adj[i].size() >= 3) fork = i;
  if (fork >= 0) {
    std::vector<int> arms;
    for (int s : adj[fork]) {
      int len = 1, prev = fork, cur = s;
      while (true) {
        int nxt = -1;
        for (int t : adj[cur])
          if (t != prev) nxt = t;
        if (nxt < 0) break;
        prev = cur;
        cur = nxt;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return {'D', n};
    if (arms == std::vector<int>{1, 2, 2}) return {'E', 6};
    if (arms == std::vector<int>{1, 2, 3}) return {'E', 7};
    if (arms == std::vector<int>{1, 2, 4}) return {'E', 8};
    throw std::logic_error("unrecognized forked diagram");
  }
  if (max_edge == 1) return {'A', n};
  // chain with one double edge; find the chain order from an endpoint
  int end = 0;
  for (int i = 0; i < n; ++i)
    if (adj[i].size() == 1) end = i;
  std::vector<int> chain = {end};
  while ((int)chain.size() < n) {
    int cur = chain.back();
    for (int t : adj[cur])
      if (chain.size() < 2 || t != chain[chain.size() - 2]) {
        chain.push_back(t);
        break;
      }
  }
  int epos = -1;
  for (int k = 0; k + 1 < n; ++k)
    if (c[chain[k]][chain[k + 1]] * c[chain[k + 1]][chain[k]] == 2) epos = k;
  if (epos > 0 && epos + 2 < n) return {'F', 4};
  // double edge at an end: orient so it sits at the back
  if (epos == 0) {
    std::reverse(chain.begin(), chain.end());
    epos = n - 2;
  }
  // cartan[short][long] = -2; B has the short root at the end of the chain
  bool end_is_short = c[chain[n - 1]][chain[n - 2]] == -2;
  if (n == 2) return {'B', 2}; // B2 = C2; one canonical label
  return end_is_short ? std::make_pair('B', n) : std::make_pair('C', n);
}

} // namespace

CentralizerInfo centralizer(const RootSystem& rs, const FlatPair& rho) {
  CentralizerInfo info;
  const auto& pos = rs.positive_roots();
  for (std::size_t k = 0; k < pos.size(); ++k) {
    if (rs.pair_root_coweight(pos[k], rho.x).mod1().is_zero() &&
        rs.pair_root_coweight(pos[k], rho.y).mod1().is_zero())
      info.positive_roots.push_back((int)k);
  }
  // indecomposables of the positive part form the canonical simple system
  std::set<RootCoords> inside;
  for (int k : info.positive_roots) inside.insert(pos[k]);
  for (int k : info.positive_roots) {
    bool decomposable = false;
    for (int k2 : info.positive_roots) {
      RootCoords rest = pos[k];
      bool nonneg = true;
      for (int j = 0; j < rs.rank(); ++j) {
        rest[j] -= pos[k2][j];
        if (rest[j] < 0) nonneg = false;
      }
      if (nonneg && inside.count(rest)) decomposable = true;
    }
    if (!decomposable) info.canonical_simple.push_back(k);
  }
  // split by orthogonality into components
  int m = (int)info.canonical_simple.size();
  std::vector<int> comp(m, -1);
  int ncomp = 0;
  for (int i = 0; i < m; ++i) {
    if (comp[i] >= 0) continue;
    comp[i] = ncomp;
    std::vector<int> stack = {i};
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int j = 0; j < m; ++j) {
        if (comp[j] >= 0) continue;
        if (!rs.inner_product(pos[info.canonical_simple[cur]],
                              pos[info.canonical_simple[j]])
                 .is_zero()) {
          comp[j] = ncomp;
          stack.push_back(j);
        }
      }
    }
    ++ncomp;
  }
  for (int c = 0; c < ncomp; ++c) {
    SubsystemComponent sc;
    for (int i = 0; i < m; ++i)
      if (comp[i] == c) sc.simple_roots.push_back(info.canonical_simple[i]);
    sc.rank = (int)sc.simple_roots.size();
    // component Cartan matrix
    std::vector<std::vector<long long>> cart(sc.rank,
                                             std::vector<long long>(sc.rank));
    for (int i = 0; i < sc.rank; ++i)
      for (int j = 0; j < sc.rank; ++j) {
        Rat v = Rat(2) * rs.inner_product(pos[sc.simple_roots[i]],
                                          pos[sc.simple_roots[j]]) /
                rs.root_norm2(pos[sc.simple_roots[i]]);
        if (!v.is_integer()) throw std::logic_error("non-integral pairing");
        cart[i][j] = v.num();
      }
    auto [t, r] = classify(cart);
    sc.type = t;
    sc.rank = r;
    // heights of the component's positive roots via exact expansion in the
    // component's simple roots
    QMat basis(rs.rank(), sc.rank);
    for (int j = 0; j < sc.rank; ++j)
      for (int i = 0; i < rs.rank(); ++i)
        basis.at(i, j) = (long)pos[sc.simple_roots[j]][i];
    std::vector<long long> heights;
    for (int k : info.positive_roots) {
      std::vector<mpq_class> rhs(rs.rank());
      for (int i = 0; i < rs.rank(); ++i) rhs[i] = (long)pos[k][i];
      auto sol = basis.solve(rhs);
      if (!sol) continue;
      // membership needs the residual to vanish
      bool fits = true;
      for (int i = 0; i < rs.rank() && fits; ++i) {
        mpq_class acc = 0;
        for (int j = 0; j < sc.rank; ++j) acc += basis.at(i, j) * (*sol)[j];
        if (acc != mpq_class((long)pos[k][i])) fits = false;
      }
      if (!fits) continue;
      long long h = 0;
      for (int j = 0; j < sc.rank; ++j) {
        if ((*sol)[j] < 0) { fits = false; break; }
        h += to_rat((*sol)[j]).num();
      }
      if (fits) heights.push_back(h);
    }
    sc.casimir_weights = exponents_from_heights(std::move(heights));
    for (long long& d : sc.casimir_weights) ++d;
    info.components.push_back(std::move(sc));
  }
  int sub_rank = 0;
  for (const auto& c : info.components) sub_rank += c.rank;
  info.center_dim = rs.rank() - sub_rank;
  return info;
}

BundleExpr adjoint_bundle_flat(const RootSystem& rs, const FlatPair& rho) {
  std::vector<BundleAtom> atoms;
  for (int i = 0; i < rs.rank(); ++i) atoms.push_back({1, 1, 0, TorsionPoint()});
  for (const RootCoords& beta : rs.positive_roots()) {
    Rat u = rs.pair_root_coweight(beta, rho.x).mod1();
    Rat v = rs.pair_root_coweight(beta, rho.y).mod1();
    atoms.push_back({1, 1, 0, TorsionPoint(u, v)});
    atoms.push_back({1, 1, 0, TorsionPoint(-u, -v)});
  }
  return BundleExpr::of(std::move(atoms));
}

NilpotentDatum regular_nilpotent_for(const RootSystem& rs,
                                     const FlatPair& rho) {
  CentralizerInfo info = centralizer(rs, rho);
  NilpotentDatum X;
  X.simple_subset.resize(info.canonical_simple.size());
  for (std::size_t i = 0; i < X.simple_subset.size(); ++i)
    X.simple_subset[i] = (int)i;
  return X;
}

AlgElement realize_nilpotent(const ChevalleyAlgebra& alg,
                             const CentralizerInfo& info,
                             const NilpotentDatum& X) {
  if (X.explicit_element) return *X.explicit_element;
  AlgElement e = alg.zero();
  for (int i : X.simple_subset) {
    if (i < 0 || i >= (int)info.canonical_simple.size())
      throw DomainError("nilpotent subset index out of range");
    e[alg.basis_index_of_root(info.canonical_simple[i])] += Rat(1);
  }
  return e;
}

std::pair<long long, long long> pair_cohomology(const ChevalleyAlgebra& alg,
                                                const FlatPair& rho,
                                                const NilpotentDatum& X) {
  const RootSystem& rs = alg.root_system();
  CentralizerInfo info = centralizer(rs, rho);
  std::vector<int> signed_roots;
  for (int k : info.positive_roots) {
    signed_roots.push_back(k);
    signed_roots.push_back(alg.negate_signed(k));
  }
  Subalgebra z = alg.span_with_cartan(signed_roots);
  AlgElement x = realize_nilpotent(alg, info, X);
  long long h = (long long)alg.centralizer_dim(z, x);
  return {h, h}; // square ad matrix: dim Ker = dim Coker
}

BundleExpr regular_adjoint_O_part(const RootSystem& rs, const FlatPair& rho) {
  CentralizerInfo info = centralizer(rs, rho);
  std::vector<BundleAtom> atoms;
  for (int i = 0; i < info.center_dim; ++i)
    atoms.push_back({1, 1, 0, TorsionPoint()});
  for (const SubsystemComponent& c : info.components)
    for (long long d : c.casimir_weights)
      atoms.push_back({2 * d - 1, 1, 0, TorsionPoint()});
  return BundleExpr::of(std::move(atoms));
}

ParabolicLevi parabolic_levi_from_mu(const RootSystem& rs,
                                     const RatVector& mu) {
  if ((int)mu.size() != rs.rank())
    throw DomainError("mu length must equal the rank");
  ParabolicLevi out;
  for (const RootCoords& beta : rs.positive_roots()) {
    RootCoords neg = beta;
    for (long long& c : neg) c = -c;
    Rat v = rs.pair_root_coweight(beta, mu);
    if (v >= Rat(0)) out.p_roots.push_back(beta);
    if (-v >= Rat(0)) out.p_roots.push_back(neg);
    if (v.is_zero()) {
      out.levi_roots.push_back(beta);
      out.levi_roots.push_back(neg);
    }
  }
  return out;
}

bool is_saturated(const RootSystem& rs,
                  const std::vector<RootCoords>& levi_roots,
                  const RatVector& mu) {
  std::set<RootCoords> levi(levi_roots.begin(), levi_roots.end());
  std::set<RootCoords> vanish;
  for (const RootCoords& beta : rs.positive_roots()) {
    if (rs.pair_root_coweight(beta, mu).is_zero()) {
      vanish.insert(beta);
      RootCoords neg = beta;
      for (long long& c : neg) c = -c;
      vanish.insert(neg);
    }
  }
  return levi == vanish;
}

MuVector atiyah_bott_point(const BundleExpr& v) { return mu_vector(v); }

namespace {

RatVector mod1(RatVector v) {
  for (Rat& c : v) c = c.mod1();
  return v;
}

bool pair_less(const FlatPair& a, const FlatPair& b) {
  if (a.x != b.x) return std::lexicographical_compare(a.x.begin(), a.x.end(),
                                                      b.x.begin(), b.x.end());
  return std::lexicographical_compare(a.y.begin(), a.y.end(), b.y.begin(),
                                      b.y.end());
}

// all Weyl elements as coroot-coordinate matrices (small ranks only)
std::vector<WeylElement> enumerate_weyl(const RootSystem& rs) {
  std::set<std::vector<std::vector<long long>>> seen;
  std::vector<WeylElement> todo = {rs.identity_element()}, all;
  seen.insert(todo[0].mat);
  while (!todo.empty()) {
    WeylElement w = todo.back();
    todo.pop_back();
    all.push_back(w);
    for (int i = 0; i < rs.rank(); ++i) {
      WeylElement nw = rs.compose(rs.simple_reflection(i), w);
      if (seen.insert(nw.mat).second) todo.push_back(nw);
    }
  }
  return all;
}

} // namespace

FlatPair canonical_pair(const RootSystem& rs, const FlatPair& rho) {
  FlatPair best{mod1(rho.x), mod1(rho.y)};
  if (rs.rank() <= 4) {
    for (const WeylElement& w : enumerate_weyl(rs)) {
      FlatPair cand{mod1(rs.act_coweight(w, rho.x)),
                    mod1(rs.act_coweight(w, rho.y))};
      if (pair_less(cand, best)) best = cand;
    }
    return best;
  }
  // greedy simple-reflection descent; strict lex decrease guarantees
  // termination
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rs.rank(); ++i) {
      WeylElement s = rs.simple_reflection(i);
      FlatPair cand{mod1(rs.act_coweight(s, best.x)),
                    mod1(rs.act_coweight(s, best.y))};
      if (pair_less(cand, best)) {
        best = cand;
        moved = true;
      }
    }
  }
  return best;
}

bool pairs_equivalent(const RootSystem& rs, const FlatPair& a,
                      const FlatPair& b, std::size_t max_orbit) {
  FlatPair pa{mod1(a.x), mod1(a.y)}, pb{mod1(b.x), mod1(b.y)};
  if (rs.rank() <= 4) {
    FlatPair ca = canonical_pair(rs, pa), cb = canonical_pair(rs, pb);
    return ca.x == cb.x && ca.y == cb.y;
  }
  // exact orbit walk on the pair
  std::set<std::pair<RatVector, RatVector>> seen;
  std::vector<FlatPair> stack = {pa};
  seen.insert({pa.x, pa.y});
  while (!stack.empty()) {
    FlatPair cur = stack.back();
    stack.pop_back();
    if (cur.x == pb.x && cur.y == pb.y) return true;
    for (int i = 0; i < rs.rank(); ++i) {
      WeylElement s = rs.simple_reflection(i);
      FlatPair nxt{mod1(rs.act_coweight(s, cur.x)),
                   mod1(rs.act_coweight(s, cur.y))};
      if (seen.insert({nxt.x, nxt.y}).second) {
        if (seen.size() > max_orbit)
          throw DomainError("pair orbit exceeds element cap");
        stack.push_back(nxt);
      }
    }
  }
  return false;
}

} // namespace ebc
