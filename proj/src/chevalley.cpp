#include "ebc/chevalley.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "ebc/errors.hpp"
#include "ebc/qmatrix.hpp"

namespace ebc {

ChevalleyAlgebra ChevalleyAlgebra::build(const RootSystem& rs) {
  ChevalleyAlgebra alg(rs);
  std::size_t p = alg.rs_.positive_roots().size();
  alg.dim_ = rs.rank() + 2 * p;

  for (std::size_t k = 0; k < p; ++k) {
    alg.signed_lookup_[alg.rs_.positive_roots()[k]] = (int)k;
    RootCoords neg = alg.rs_.positive_roots()[k];
    for (long long& x : neg) x = -x;
    alg.signed_lookup_[neg] = (int)(k + p);
  }

  // extraspecial pair per non-simple positive root: the decomposition
  // delta = beta + gamma with beta minimal in the height-lex order
  alg.extraspecial_.assign(p, {-1, -1});
  for (std::size_t d = 0; d < p; ++d) {
    const RootCoords& delta = alg.rs_.positive_roots()[d];
    long long height = 0;
    for (long long c : delta) height += c;
    if (height == 1) continue;
    for (std::size_t i = 0; i < p; ++i) {
      RootCoords rest = delta;
      bool nonneg = true;
      for (int j = 0; j < rs.rank(); ++j) {
        rest[j] -= alg.rs_.positive_roots()[i][j];
        if (rest[j] < 0) nonneg = false;
      }
      if (!nonneg) continue;
      int jidx = alg.rs_.positive_index(rest);
      if (jidx >= 0) {
        alg.extraspecial_[d] = {(int)i, jidx};
        break;
      }
    }
    if (alg.extraspecial_[d].first < 0)
      throw std::logic_error("no extraspecial pair found");
  }

  // spot-check Jacobi on a deterministic sample of basis triples
  std::size_t n = alg.dim_;
  unsigned long long state = 0x9e3779b97f4a7c15ull;
  auto next = [&state, n] {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return (int)((state >> 33) % n);
  };
  for (int trial = 0; trial < 200; ++trial)
    if (!alg.jacobi_holds(next(), next(), next()))
      throw std::logic_error("Jacobi identity failed in Chevalley build");
  return alg;
}

RootCoords ChevalleyAlgebra::signed_root_coords(int s) const {
  std::size_t p = num_positive();
  RootCoords r = rs_.positive_roots()[s < (int)p ? s : s - p];
  if (s >= (int)p)
    for (long long& x : r) x = -x;
  return r;
}

int ChevalleyAlgebra::signed_index(const RootCoords& r) const {
  auto it = signed_lookup_.find(r);
  return it == signed_lookup_.end() ? -1 : it->second;
}

AlgElement ChevalleyAlgebra::cartan_element(int i) const {
  AlgElement x = zero();
  x[i] = Rat(1);
  return x;
}

AlgElement ChevalleyAlgebra::root_vector(int s) const {
  AlgElement x = zero();
  x[basis_index_of_root(s)] = Rat(1);
  return x;
}

AlgElement ChevalleyAlgebra::coroot_element(const RootCoords& beta) const {
  std::vector<long long> cv = rs_.coroot_coords(beta);
  AlgElement x = zero();
  for (int i = 0; i < rank(); ++i) x[i] = Rat(cv[i]);
  return x;
}

Rat ChevalleyAlgebra::signed_norm2(int s) const {
  return rs_.root_norm2(signed_root_coords(s));
}

long long ChevalleyAlgebra::p_value(int a, int b) const {
  // largest k with root(b) - k root(a) still a root
  RootCoords ra = signed_root_coords(a), cur = signed_root_coords(b);
  long long k = 0;
  while (true) {
    bool zero = true;
    for (int j = 0; j < rank(); ++j) {
      cur[j] -= ra[j];
      if (cur[j] != 0) zero = false;
    }
    if (zero || signed_lookup_.find(cur) == signed_lookup_.end()) break;
    ++k;
  }
  return k;
}

long long ChevalleyAlgebra::n_positive_pair(int i, int j) const {
  if (i > j) return -n_positive_pair(j, i);
  auto key = std::make_pair(i, j);
  auto it = npos_memo_.find(key);
  if (it != npos_memo_.end()) return it->second;

  RootCoords delta = signed_root_coords(i);
  const RootCoords& rj = signed_root_coords(j);
  for (int k = 0; k < rank(); ++k) delta[k] += rj[k];
  int d = rs_.positive_index(delta);
  if (d < 0) throw std::logic_error("n_positive_pair on a non-special pair");

  long long value;
  if (extraspecial_[d] == std::make_pair(i, j)) {
    value = p_value(i, j) + 1;
  } else {
    // Carter's four-root identity against the extraspecial pair (a1, b1):
    //   N_{b,g} = -(|d|^2 / N_{a1,b1}) * ( N_{a1,-b} N_{b1,-g} / |a1-b|^2
    //                                    + N_{-b,b1} N_{a1,-g} / |b1-b|^2 )
    int a1 = extraspecial_[d].first, b1 = extraspecial_[d].second;
    int p = (int)num_positive();
    auto term = [&](int x, int y) -> std::pair<long long, bool> {
      RootCoords sum = signed_root_coords(x);
      const RootCoords& ry = signed_root_coords(y);
      bool zero = true;
      for (int k = 0; k < rank(); ++k) {
        sum[k] += ry[k];
        if (sum[k] != 0) zero = false;
      }
      if (zero || signed_lookup_.find(sum) == signed_lookup_.end())
        return {0, false};
      return {structure_N(x, y), true};
    };
    Rat acc(0);
    auto [n1a, ok1a] = term(a1, i + p); // N_{a1, -b}
    if (ok1a) {
      auto [n1b, ok1b] = term(b1, j + p); // N_{b1, -g}
      if (ok1b) {
        RootCoords diff = signed_root_coords(a1);
        const RootCoords& rb = signed_root_coords(i);
        for (int k = 0; k < rank(); ++k) diff[k] -= rb[k];
        acc += Rat(n1a) * Rat(n1b) / rs_.root_norm2(diff);
      }
    }
    auto [n2a, ok2a] = term(i + p, b1); // N_{-b, b1}
    if (ok2a) {
      auto [n2b, ok2b] = term(a1, j + p); // N_{a1, -g}
      if (ok2b) {
        RootCoords diff = signed_root_coords(b1);
        const RootCoords& rb = signed_root_coords(i);
        for (int k = 0; k < rank(); ++k) diff[k] -= rb[k];
        acc += Rat(n2a) * Rat(n2b) / rs_.root_norm2(diff);
      }
    }
    Rat v = -(rs_.root_norm2(delta) / Rat(n_positive_pair(a1, b1))) * acc;
    if (!v.is_integer())
      throw std::logic_error("non-integral structure constant");
    value = v.num();
  }
  npos_memo_[key] = value;
  return value;
}

long long ChevalleyAlgebra::structure_N(int a, int b) const {
  int p = (int)num_positive();
  bool aneg = a >= p, bneg = b >= p;
  if (!aneg && !bneg) return n_positive_pair(a, b);
  if (aneg && bneg) return -structure_N(a - p, b - p);
  if (aneg) return -structure_N(b, a);
  // a positive, b negative; reduce by the zero-sum triple (a, b, z)
  RootCoords sum = signed_root_coords(a);
  const RootCoords& rb = signed_root_coords(b);
  for (int k = 0; k < rank(); ++k) sum[k] += rb[k];
  int s = signed_index(sum);
  if (s < 0) throw std::logic_error("structure_N on a non-root sum");
  Rat v;
  if (s < p) {
    // z = -s: N_{a,b} = (|s|^2 / |a|^2) N_{b,z}
    v = (signed_norm2(s) / signed_norm2(a)) * Rat(structure_N(b, s + p));
  } else {
    // z = -s positive: N_{a,b} = (|s|^2 / |b|^2) N_{z,a}
    v = (signed_norm2(s) / signed_norm2(b)) * Rat(structure_N(s - p, a));
  }
  if (!v.is_integer()) throw std::logic_error("non-integral structure constant");
  return v.num();
}

AlgElement ChevalleyAlgebra::bracket(const AlgElement& x,
                                     const AlgElement& y) const {
  AlgElement out = zero();
  int r = rank();
  int p = (int)num_positive();
  std::vector<int> xs, ys;
  for (std::size_t k = 0; k < dim_; ++k) {
    if (!x[k].is_zero()) xs.push_back((int)k);
    if (!y[k].is_zero()) ys.push_back((int)k);
  }
  for (int i : xs)
    for (int j : ys) {
      Rat c = x[i] * y[j];
      if (i < r && j < r) continue;
      if (i < r || j < r) {
        // Cartan against a root vector
        int hidx = i < r ? i : j;
        int eidx = i < r ? j : i;
        Rat sign = i < r ? Rat(1) : Rat(-1);
        int s = eidx - r;
        long long pairing =
            rs_.pair_root_simple_coroot(signed_root_coords(s), hidx);
        out[eidx] += sign * c * Rat(pairing);
        continue;
      }
      int s = i - r, t = j - r;
      if (negate_signed(s) == t) {
        // [e_beta, e_{-beta}] = h_{beta^vee}
        std::vector<long long> cv = rs_.coroot_coords(signed_root_coords(s));
        for (int k = 0; k < r; ++k) out[k] += c * Rat(cv[k]);
        continue;
      }
      RootCoords sum = signed_root_coords(s);
      RootCoords rt = signed_root_coords(t);
      for (int k = 0; k < r; ++k) sum[k] += rt[k];
      int u = signed_index(sum);
      if (u < 0) continue;
      out[r + u] += c * Rat(structure_N(s, t));
    }
  return out;
}

std::size_t ChevalleyAlgebra::centralizer_dim(const AlgElement& x) const {
  return centralizer_dim(full(), x);
}

std::size_t ChevalleyAlgebra::centralizer_dim(const Subalgebra& sub,
                                              const AlgElement& x) const {
  std::set<int> allowed(sub.basis_indices.begin(), sub.basis_indices.end());
  for (std::size_t k = 0; k < dim_; ++k)
    if (!x[k].is_zero() && !allowed.count((int)k))
      throw DomainError("element lies outside the subalgebra");
  std::size_t s = sub.dim();
  QMat m(s, s);
  for (std::size_t j = 0; j < s; ++j) {
    AlgElement bj = zero();
    bj[sub.basis_indices[j]] = Rat(1);
    AlgElement br = bracket(x, bj);
    for (std::size_t k = 0; k < dim_; ++k) {
      if (br[k].is_zero()) continue;
      auto it = std::lower_bound(sub.basis_indices.begin(),
                                 sub.basis_indices.end(), (int)k);
      if (it == sub.basis_indices.end() || *it != (int)k)
        throw std::logic_error("subalgebra not closed under ad X");
      m.at((std::size_t)(it - sub.basis_indices.begin()), j) = to_mpq(br[k]);
    }
  }
  return s - m.rank();
}

Sl2Triple ChevalleyAlgebra::sl2_complete(const std::vector<int>& S) const {
  // pairwise differences must not be roots, so that [e_a, e_{-b}] = 0 across S
  for (int a : S)
    for (int b : S) {
      if (a == b) continue;
      RootCoords diff = signed_root_coords(a);
      RootCoords rb = signed_root_coords(b);
      for (int k = 0; k < rank(); ++k) diff[k] -= rb[k];
      if (signed_index(diff) >= 0)
        throw DomainError("S is not a simple system: difference of members is a root");
    }
  std::size_t n = S.size();
  Sl2Triple t{zero(), zero(), zero()};
  if (n == 0) return t; // the zero triple for the empty set
  // solve sum_g c_g <beta, gamma^vee> = 2 over beta in S
  QMat a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    RootCoords beta = signed_root_coords(S[i]);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<long long> gv = rs_.coroot_coords(signed_root_coords(S[j]));
      long long pairing = 0;
      for (int k = 0; k < rank(); ++k)
        pairing += gv[k] * rs_.pair_root_simple_coroot(beta, k);
      a.at(i, j) = (long)pairing;
    }
  }
  std::vector<mpq_class> rhs(n, mpq_class(2));
  auto c = a.solve(rhs);
  if (!c) throw DomainError("no coweight solves <alpha,H> = 2 on S");
  for (std::size_t j = 0; j < n; ++j) {
    Rat cj = to_rat((*c)[j]);
    AlgElement hj = coroot_element(signed_root_coords(S[j]));
    for (std::size_t k = 0; k < dim_; ++k) t.h[k] += cj * hj[k];
    t.x_plus[basis_index_of_root(S[j])] += Rat(1);
    t.x_minus[basis_index_of_root(negate_signed(S[j]))] += cj;
  }
  AlgElement e1 = bracket(t.h, t.x_plus);
  AlgElement e2 = bracket(t.h, t.x_minus);
  AlgElement e3 = bracket(t.x_plus, t.x_minus);
  for (std::size_t k = 0; k < dim_; ++k) {
    if (e1[k] != Rat(2) * t.x_plus[k] || e2[k] != Rat(-2) * t.x_minus[k] ||
        e3[k] != t.h[k])
      throw std::logic_error("sl2 triple relations failed");
  }
  return t;
}

std::vector<long long> ChevalleyAlgebra::sl2_decompose(
    const Sl2Triple& t) const {
  return sl2_decompose(full(), t);
}

std::vector<long long> ChevalleyAlgebra::sl2_decompose(
    const Subalgebra& sub, const Sl2Triple& t) const {
  int r = rank();
  for (std::size_t k = r; k < dim_; ++k)
    if (!t.h[k].is_zero())
      throw DomainError("triple's H must lie in the Cartan subalgebra");
  // ad H is diagonal on the basis; group indices by weight
  std::map<long long, std::vector<int>> by_weight;
  for (int idx : sub.basis_indices) {
    long long w = 0;
    if (idx >= r) {
      Rat wr(0);
      RootCoords beta = signed_root_coords(idx - r);
      for (int i = 0; i < r; ++i)
        wr += t.h[i] * Rat(rs_.pair_root_simple_coroot(beta, i));
      if (!wr.is_integer())
        throw DomainError("non-integral ad-H weight; not a valid sl2 triple");
      w = wr.num();
    }
    by_weight[w].push_back(idx);
  }
  // highest-weight vectors of weight w are Ker ad X_+ within the weight
  // space; each spawns a V(w+1)
  std::vector<long long> dims;
  long long total = 0;
  for (auto& [w, indices] : by_weight) {
    if (w < 0) continue;
    QMat m(dim_, indices.size());
    for (std::size_t j = 0; j < indices.size(); ++j) {
      AlgElement bj = zero();
      bj[indices[j]] = Rat(1);
      AlgElement br = bracket(t.x_plus, bj);
      for (std::size_t k = 0; k < dim_; ++k)
        if (!br[k].is_zero()) m.at(k, j) = to_mpq(br[k]);
    }
    std::size_t n_w = indices.size() - m.rank();
    for (std::size_t i = 0; i < n_w; ++i) dims.push_back(w + 1);
    total += (long long)n_w * (w + 1);
  }
  if (total != (long long)sub.dim())
    throw std::logic_error("sl2 summand dimensions do not fill the algebra");
  std::sort(dims.begin(), dims.end());
  return dims;
}

Subalgebra ChevalleyAlgebra::full() const {
  Subalgebra s;
  s.parent = this;
  s.basis_indices.resize(dim_);
  for (std::size_t k = 0; k < dim_; ++k) s.basis_indices[k] = (int)k;
  return s;
}

Subalgebra ChevalleyAlgebra::span_with_cartan(
    const std::vector<int>& signed_roots) const {
  std::set<int> roots(signed_roots.begin(), signed_roots.end());
  for (int a : roots)
    for (int b : roots) {
      if (negate_signed(a) == b) continue;
      RootCoords sum = signed_root_coords(a);
      RootCoords rb = signed_root_coords(b);
      for (int k = 0; k < rank(); ++k) sum[k] += rb[k];
      int u = signed_index(sum);
      if (u >= 0 && !roots.count(u))
        throw DomainError("root subset is not closed under addition");
    }
  Subalgebra s;
  s.parent = this;
  for (int i = 0; i < rank(); ++i) s.basis_indices.push_back(i);
  for (int a : roots) s.basis_indices.push_back(basis_index_of_root(a));
  std::sort(s.basis_indices.begin(), s.basis_indices.end());
  return s;
}

bool ChevalleyAlgebra::jacobi_holds(int i, int j, int k) const {
  AlgElement bi = zero(), bj = zero(), bk = zero();
  bi[i] = Rat(1);
  bj[j] = Rat(1);
  bk[k] = Rat(1);
  AlgElement s1 = bracket(bracket(bi, bj), bk);
  AlgElement s2 = bracket(bracket(bj, bk), bi);
  AlgElement s3 = bracket(bracket(bk, bi), bj);
  for (std::size_t t = 0; t < dim_; ++t)
    if (!(s1[t] + s2[t] + s3[t]).is_zero()) return false;
  return true;
}

std::string ChevalleyAlgebra::element_str(const AlgElement& x) const {
  std::string out;
  int r = rank();
  for (std::size_t k = 0; k < dim_; ++k) {
    if (x[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string base;
    if ((int)k < r) {
      base = "h" + std::to_string(k + 1);
    } else {
      RootCoords c = signed_root_coords((int)k - r);
      base = "e(";
      for (int i = 0; i < r; ++i) {
        if (i) base += ",";
        base += std::to_string(c[i]);
      }
      base += ")";
    }
    out += (x[k] == Rat(1)) ? base : x[k].str() + "*" + base;
  }
  return out.empty() ? "0" : out;
}

} // namespace ebc
