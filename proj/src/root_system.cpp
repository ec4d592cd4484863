#include "ebc/root_system.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ebc/errors.hpp"
#include "ebc/qmatrix.hpp"

namespace ebc {

namespace {

long long classical_positive_count(char t, int n) {
  switch (t) {
    case 'A': return (long long)n * (n + 1) / 2;
    case 'B':
    case 'C': return (long long)n * n;
    case 'D': return (long long)n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  return -1;
}

// cartan[i][j] = <alpha_j, alpha_i^vee>; single edges are -1/-1, the double
// and triple edges carry the asymmetric pair on the (long row, short row).
std::vector<std::vector<long long>> cartan_matrix(char t, int n) {
  std::vector<std::vector<long long>> c(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto edge = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (t) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case 'B': // short root at the end
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      c[n - 1][n - 2] = -2;
      break;
    case 'C': // long root at the end
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      c[n - 2][n - 1] = -2;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      edge(n - 3, n - 1);
      break;
    case 'E':
      if (n == 6) {
        edge(0, 2); edge(2, 3); edge(3, 4); edge(4, 5); edge(1, 3);
      } else if (n == 7) {
        edge(0, 2); edge(2, 3); edge(3, 4); edge(4, 5); edge(5, 6); edge(1, 3);
      } else {
        // chain 0..5 continuing to 7, branch node 6 on 4; this ordering walks
        // the affine diagram from the attachment node outward
        edge(0, 1); edge(1, 2); edge(2, 3); edge(3, 4); edge(4, 5);
        edge(5, 7); edge(4, 6);
      }
      break;
    case 'F': // 0,1 long; 2,3 short
      edge(0, 1); edge(1, 2); edge(2, 3);
      c[2][1] = -2;
      break;
    case 'G': // 0 long, 1 short
      edge(0, 1);
      c[1][0] = -3;
      break;
  }
  return c;
}

long long det_ll(std::vector<std::vector<long long>> m) {
  // integer determinant via QMat (sizes are at most 8x8)
  std::size_t n = m.size();
  QMat q(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q.at(i, j) = (long)m[i][j];
  // Gaussian elimination tracking the determinant exactly
  mpq_class det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && q.at(p, col) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(q.at(p, j), q.at(col, j));
      det = -det;
    }
    det *= q.at(col, col);
    mpq_class inv = 1 / q.at(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      mpq_class f = q.at(i, col) * inv;
      if (f == 0) continue;
      for (std::size_t j = col; j < n; ++j) q.at(i, j) -= f * q.at(col, j);
    }
  }
  mpz_class num = det.get_num();
  return num.get_si();
}

} // namespace

RootSystem RootSystem::build(char type, int rank) {
  bool ok = (type == 'A' && rank >= 1) || (type == 'B' && rank >= 2) ||
            (type == 'C' && rank >= 2) || (type == 'D' && rank >= 3) ||
            (type == 'E' && rank >= 6 && rank <= 8) ||
            (type == 'F' && rank == 4) || (type == 'G' && rank == 2);
  if (!ok)
    throw DomainError("invalid simple type " + std::string(1, type) +
                      std::to_string(rank));
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  rs.cartan_ = cartan_matrix(type, rank);
  rs.cartan_det_ = det_ll(rs.cartan_);
  rs.generate_roots();
  rs.compute_norms();
  rs.compute_marks_comarks();
  rs.compute_exponents();
  long long fact = 1;
  for (int i = 2; i <= rank; ++i) fact *= i;
  long long prod_marks = 1;
  for (long long a : rs.marks_) prod_marks *= a;
  rs.weyl_order_ = fact * prod_marks * rs.cartan_det_;
  rs.validate();
  return rs;
}

void RootSystem::generate_roots() {
  // closure by root strings: beta + alpha_i is a root iff the string
  // quantity q = p - <beta, alpha_i^vee> is positive, where p is the depth
  // of the string below beta (all lower roots are already known).
  std::set<RootCoords> seen;
  std::vector<std::vector<RootCoords>> by_height;
  by_height.emplace_back();
  for (int i = 0; i < rank_; ++i) {
    RootCoords a(rank_, 0);
    a[i] = 1;
    by_height[0].push_back(a);
    seen.insert(a);
  }
  while (!by_height.back().empty()) {
    std::vector<RootCoords> next;
    for (const RootCoords& beta : by_height.back()) {
      for (int i = 0; i < rank_; ++i) {
        long long pairing = 0;
        for (int j = 0; j < rank_; ++j) pairing += cartan_[i][j] * beta[j];
        long long p = 0;
        RootCoords down = beta;
        while (true) {
          down[i] -= 1;
          bool zero = std::all_of(down.begin(), down.end(),
                                  [](long long x) { return x == 0; });
          if (zero || !seen.count(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          RootCoords up = beta;
          up[i] += 1;
          if (seen.insert(up).second) next.push_back(up);
        }
      }
    }
    by_height.push_back(std::move(next));
  }
  pos_roots_.clear();
  heights_.clear();
  for (std::size_t h = 0; h < by_height.size(); ++h) {
    std::sort(by_height[h].begin(), by_height[h].end());
    for (RootCoords& r : by_height[h]) {
      pos_roots_.push_back(std::move(r));
      heights_.push_back((long long)h + 1);
    }
  }
}

void RootSystem::compute_norms() {
  // propagate relative lengths over the diagram, then scale long roots to 2
  norm2_.assign(rank_, Rat(0));
  norm2_[0] = Rat(2);
  std::vector<bool> done(rank_, false);
  done[0] = true;
  std::vector<int> stack = {0};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < rank_; ++j) {
      if (done[j] || cartan_[i][j] == 0 || i == j) continue;
      // n_j / n_i = c[i][j] / c[j][i]
      norm2_[j] = norm2_[i] * Rat(cartan_[i][j]) / Rat(cartan_[j][i]);
      done[j] = true;
      stack.push_back(j);
    }
  }
  Rat mx = norm2_[0];
  for (const Rat& x : norm2_)
    if (mx < x) mx = x;
  for (Rat& x : norm2_) x = x * Rat(2) / mx;
}

Rat RootSystem::inner_product(const RootCoords& x, const RootCoords& y) const {
  // (alpha_i, alpha_j) = cartan[i][j] * n_i / 2
  Rat acc(0);
  for (int i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (y[j] == 0) continue;
      acc += Rat(x[i]) * Rat(y[j]) * Rat(cartan_[i][j]) * norm2_[i] / Rat(2);
    }
  }
  return acc;
}

Rat RootSystem::root_norm2(const RootCoords& r) const {
  return inner_product(r, r);
}

std::vector<long long> RootSystem::coroot_coords(const RootCoords& r) const {
  Rat n2 = root_norm2(r);
  std::vector<long long> out(rank_);
  for (int i = 0; i < rank_; ++i) {
    Rat c = Rat(r[i]) * norm2_[i] / n2;
    if (!c.is_integer()) throw std::logic_error("non-integral coroot");
    out[i] = c.num();
  }
  return out;
}

void RootSystem::compute_marks_comarks() {
  marks_ = highest_root();
  comarks_ = coroot_coords(highest_root());
}

void RootSystem::compute_exponents() {
  // heights histogram is conjugate to the exponent partition
  std::map<long long, long long> count;
  for (long long h : heights_) ++count[h];
  exponents_.clear();
  long long max_h = heights_.back();
  for (long long h = 1; h <= max_h; ++h) {
    long long k = count.count(h) ? count[h] : 0;
    long long k1 = count.count(h + 1) ? count[h + 1] : 0;
    for (long long i = 0; i < k - k1; ++i) exponents_.push_back(h);
  }
  std::sort(exponents_.begin(), exponents_.end());
}

std::vector<long long> RootSystem::casimir_weights() const {
  std::vector<long long> d(exponents_);
  for (long long& x : d) ++x;
  return d;
}

std::vector<long long> RootSystem::extended_comarks() const {
  std::vector<long long> g;
  g.push_back(1);
  g.insert(g.end(), comarks_.begin(), comarks_.end());
  return g;
}

void RootSystem::validate() const {
  if ((long long)pos_roots_.size() != classical_positive_count(type_, rank_))
    throw std::logic_error("positive root count mismatch for " + name());
  // alpha~^vee = sum g_i alpha_i^vee, checked through all simple pairings
  for (int j = 0; j < rank_; ++j) {
    long long lhs = 0;
    std::vector<long long> hv = coroot_coords(highest_root());
    for (int i = 0; i < rank_; ++i) lhs += hv[i] * cartan_[i][j];
    long long rhs = 0;
    for (int i = 0; i < rank_; ++i) rhs += comarks_[i] * cartan_[i][j];
    if (lhs != rhs) throw std::logic_error("comark identity failed");
  }
  for (long long g : comarks_)
    if (g < 1) throw std::logic_error("comark < 1");
  long long prod = 1;
  for (long long d : casimir_weights()) prod *= d;
  if (prod != weyl_order_)
    throw std::logic_error("prod d_i != |W| for " + name());
}

int RootSystem::positive_index(const RootCoords& r) const {
  auto it = std::find(pos_roots_.begin(), pos_roots_.end(), r);
  return it == pos_roots_.end() ? -1 : (int)(it - pos_roots_.begin());
}

bool RootSystem::is_root(const RootCoords& r) const {
  if (positive_index(r) >= 0) return true;
  RootCoords neg(r);
  for (long long& x : neg) x = -x;
  return positive_index(neg) >= 0;
}

long long RootSystem::pair_root_simple_coroot(const RootCoords& beta,
                                              int i) const {
  long long s = 0;
  for (int j = 0; j < rank_; ++j) s += cartan_[i][j] * beta[j];
  return s;
}

Rat RootSystem::pair_root_coweight(const RootCoords& beta,
                                   const RatVector& x) const {
  Rat s(0);
  for (int i = 0; i < rank_; ++i)
    s += x[i] * Rat(pair_root_simple_coroot(beta, i));
  return s;
}

WeylElement RootSystem::identity_element() const {
  WeylElement w;
  w.mat.assign(rank_, std::vector<long long>(rank_, 0));
  for (int i = 0; i < rank_; ++i) w.mat[i][i] = 1;
  return w;
}

WeylElement RootSystem::simple_reflection(int i) const {
  // s_i(v) = v - <alpha_i, v> alpha_i^vee; on coroot coordinates only row i
  // changes: v_i' = v_i - sum_j cartan[j][i] v_j
  WeylElement w = identity_element();
  w.word = {i};
  for (int j = 0; j < rank_; ++j) w.mat[i][j] -= cartan_[j][i];
  return w;
}

WeylElement RootSystem::compose(const WeylElement& a,
                                const WeylElement& b) const {
  WeylElement w;
  w.word = b.word;
  w.word.insert(w.word.end(), a.word.begin(), a.word.end());
  w.mat.assign(rank_, std::vector<long long>(rank_, 0));
  for (int i = 0; i < rank_; ++i)
    for (int k = 0; k < rank_; ++k) {
      if (a.mat[i][k] == 0) continue;
      for (int j = 0; j < rank_; ++j) w.mat[i][j] += a.mat[i][k] * b.mat[k][j];
    }
  return w;
}

RatVector RootSystem::act_coweight(const WeylElement& w,
                                   const RatVector& v) const {
  RatVector out(rank_, Rat(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (w.mat[i][j] != 0) out[i] += Rat(w.mat[i][j]) * v[j];
  return out;
}

RootCoords RootSystem::act_root(const WeylElement& w,
                                const RootCoords& beta) const {
  // the stored word is in application order (first letter acts first)
  RootCoords r = beta;
  for (int i : w.word) {
    long long p = pair_root_simple_coroot(r, i);
    r[i] -= p;
  }
  return r;
}

std::vector<RootCoords> RootSystem::act_root_list(const WeylElement& w) const {
  std::vector<RootCoords> out;
  out.reserve(pos_roots_.size());
  for (const RootCoords& r : pos_roots_) out.push_back(act_root(w, r));
  return out;
}

WeylElement RootSystem::longest_element(const std::vector<int>& J) const {
  // drive a J-regular dominant coweight to the antidominant chamber
  RatVector v(rank_, Rat(0));
  {
    // v = sum of fundamental coweights over J
    QMat a(rank_, rank_);
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) a.at(i, j) = (long)cartan_[i][j];
    for (int idx : J) {
      std::vector<mpq_class> e(rank_, mpq_class(0));
      // want x with <alpha_j, x> = delta_{j,idx}: cartan^T x = e_idx
      e[idx] = 1;
      auto x = a.transpose().solve(e);
      if (!x) throw std::logic_error("singular Cartan matrix");
      for (int i = 0; i < rank_; ++i) v[i] += to_rat((*x)[i]);
    }
  }
  WeylElement w = identity_element();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : J) {
      Rat p(0);
      for (int j = 0; j < rank_; ++j) p += Rat(cartan_[j][i]) * v[j];
      if (p > Rat(0)) {
        v[i] = v[i] - p;
        w = compose(simple_reflection(i), w);
        moved = true;
      }
    }
  }
  return w;
}

WeylElement RootSystem::longest_element() const {
  std::vector<int> J(rank_);
  std::iota(J.begin(), J.end(), 0);
  return longest_element(J);
}

std::vector<RatVector> RootSystem::weyl_orbit(const RatVector& v,
                                              std::size_t max_elements) const {
  std::set<RatVector> seen;
  std::vector<RatVector> stack = {v};
  seen.insert(v);
  while (!stack.empty()) {
    RatVector cur = stack.back();
    stack.pop_back();
    for (int i = 0; i < rank_; ++i) {
      Rat p(0);
      for (int j = 0; j < rank_; ++j) p += Rat(cartan_[j][i]) * cur[j];
      RatVector img = cur;
      img[i] = img[i] - p;
      if (seen.insert(img).second) {
        if (seen.size() > max_elements)
          throw DomainError("Weyl orbit exceeds element cap");
        stack.push_back(img);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<RootCoords> RootSystem::weyl_orbit_root(
    const RootCoords& beta) const {
  std::set<RootCoords> seen;
  std::vector<RootCoords> stack = {beta};
  seen.insert(beta);
  while (!stack.empty()) {
    RootCoords cur = stack.back();
    stack.pop_back();
    for (int i = 0; i < rank_; ++i) {
      RootCoords img = cur;
      img[i] -= pair_root_simple_coroot(cur, i);
      if (seen.insert(img).second) stack.push_back(img);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<CenterElement> RootSystem::center_elements() const {
  std::vector<CenterElement> out;
  CenterElement id;
  id.label = 0;
  id.node = -1;
  id.order = 1;
  id.coweight.assign(rank_, Rat(0));
  out.push_back(id);

  QMat a(rank_, rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) a.at(i, j) = (long)cartan_[i][j];
  int label = 1;
  for (int i = 0; i < rank_; ++i) {
    if (marks_[i] != 1) continue; // minuscule nodes carry the center
    std::vector<mpq_class> e(rank_, mpq_class(0));
    e[i] = 1;
    auto x = a.transpose().solve(e);
    if (!x) throw std::logic_error("singular Cartan matrix");
    CenterElement c;
    c.label = label++;
    c.node = i;
    c.coweight.resize(rank_);
    long long ord = 1;
    for (int k = 0; k < rank_; ++k) {
      c.coweight[k] = to_rat((*x)[k]).mod1();
      ord = std::lcm(ord, c.coweight[k].den());
    }
    c.order = ord;
    out.push_back(c);
  }
  if ((long long)out.size() != cartan_det_)
    throw std::logic_error("center order mismatch");
  return out;
}

CenterOrbitData RootSystem::center_orbit_data(const CenterElement& c) const {
  if (c.node < 0)
    throw DomainError("center_orbit_data requires a nontrivial center element",
                      "identity uses the simply connected description");
  std::vector<int> J;
  for (int i = 0; i < rank_; ++i)
    if (i != c.node) J.push_back(i);
  CenterOrbitData data;
  data.w_c = compose(longest_element(J), longest_element());

  // the extended node set: node 0 is alpha_0 = -highest root
  std::vector<long long> g = extended_comarks();
  RootCoords neg_high = highest_root();
  for (long long& x : neg_high) x = -x;
  auto node_of = [&](const RootCoords& r) -> int {
    if (r == neg_high) return 0;
    for (int i = 0; i < rank_; ++i) {
      bool match = true;
      for (int j = 0; j < rank_; ++j)
        if (r[j] != (j == i ? 1 : 0)) match = false;
      if (match) return i + 1;
    }
    return -1;
  };
  std::vector<int> image(rank_ + 1, -1);
  for (int node = 0; node <= rank_; ++node) {
    RootCoords r;
    if (node == 0) {
      r = neg_high;
    } else {
      r.assign(rank_, 0);
      r[node - 1] = 1;
    }
    image[node] = node_of(act_root(data.w_c, r));
    if (image[node] < 0)
      throw std::logic_error("w_c does not permute the extended diagram");
  }

  std::vector<bool> visited(rank_ + 1, false);
  for (int start = 0; start <= rank_; ++start) {
    if (visited[start]) continue;
    std::vector<int> orbit;
    int cur = start;
    while (!visited[cur]) {
      visited[cur] = true;
      orbit.push_back(cur);
      cur = image[cur];
    }
    long long go = g[orbit.front()];
    for (int n : orbit)
      if (g[n] != go) throw std::logic_error("comark not constant on orbit");
    data.orbits.push_back(orbit);
    data.orbit_sizes.push_back((long long)orbit.size());
    data.orbit_comarks.push_back(go);
  }
  long long d0 = 0;
  for (std::size_t k = 0; k < data.orbits.size(); ++k)
    d0 = std::gcd(d0, data.orbit_sizes[k] * data.orbit_comarks[k]);
  data.d0 = d0;
  return data;
}

} // namespace ebc
