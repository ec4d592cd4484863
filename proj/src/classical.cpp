#include "ebc/classical.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ebc/bundle_parse.hpp"
#include "ebc/errors.hpp"

namespace ebc {

FormKind form_kind_of(GroupKind g) {
  switch (g) {
    case GroupKind::Sp:
    case GroupKind::PSp: return FormKind::alternating;
    default: return FormKind::symmetric;
  }
}

long long value_degree_of(GroupKind g) {
  return (g == GroupKind::PSp || g == GroupKind::PSO) ? 1 : 0;
}

std::string group_name(GroupKind g, long long rank) {
  switch (g) {
    case GroupKind::Sp: return "Sp" + std::to_string(rank);
    case GroupKind::SOOdd:
    case GroupKind::SOEven: return "SO" + std::to_string(rank);
    case GroupKind::Spin: return "Spin" + std::to_string(rank);
    case GroupKind::PSp: return "PSp" + std::to_string(rank);
    case GroupKind::PSO: return "PSO" + std::to_string(rank);
  }
  return "?";
}

std::pair<GroupKind, long long> parse_group_name(const std::string& name) {
  auto starts = [&](const char* p) {
    return name.rfind(p, 0) == 0;
  };
  auto num = [&](std::size_t off) -> long long {
    if (off >= name.size()) throw DomainError("group name needs a rank: " + name);
    for (std::size_t i = off; i < name.size(); ++i)
      if (!std::isdigit((unsigned char)name[i]))
        throw DomainError("bad group name: " + name);
    return std::stoll(name.substr(off));
  };
  if (starts("Spin")) return {GroupKind::Spin, num(4)};
  if (starts("PSp")) return {GroupKind::PSp, num(3)};
  if (starts("PSO")) return {GroupKind::PSO, num(3)};
  if (starts("Sp")) return {GroupKind::Sp, num(2)};
  if (starts("SO")) {
    long long r = num(2);
    return {r % 2 == 1 ? GroupKind::SOOdd : GroupKind::SOEven, r};
  }
  throw DomainError("unknown classical group: " + name);
}

bool form_parity_In(long long d, FormKind kind) {
  if (d < 1) throw DomainError("rank must be positive");
  return kind == FormKind::alternating ? d % 2 == 0 : d % 2 == 1;
}

bool form_parity_IdW2(const TorsionPoint& q, long long d, FormKind kind) {
  if (d < 1) throw DomainError("multiplicity must be positive");
  if (q != -q) return false;
  bool alt = kind == FormKind::alternating;
  if (q.is_origin()) return alt ? d % 2 == 1 : d % 2 == 0;
  return alt ? d % 2 == 0 : d % 2 == 1;
}

BuiltinDims builtin_dims(long long n) {
  if (n < 1) throw DomainError("n must be positive");
  return {n, n, n, n, n, n + 1};
}

namespace {

BundleAtom partner_atom(const BundleAtom& a, GroupKind g) {
  BundleAtom d{a.d, a.n, -a.a, -a.t};
  if (value_degree_of(g) == 1) {
    d.a += d.n; // tensor by O(p0)
  }
  return d;
}

bool is_self_dual(const BundleAtom& a, GroupKind g) {
  BundleAtom p = partner_atom(a, g);
  return same_stable_part(a, p);
}

} // namespace

FormedBundle FormedBundle::make(BundleExpr expr, GroupKind group) {
  for (const BundleAtom& a : expr.atoms) {
    if (value_degree_of(group) == 0) {
      if (a.n != 1 || a.a != 0)
        throw DomainError("forms with trivial value line need slope-zero "
                          "constituents I_d(lambda)");
    } else {
      if (a.n != 2 || a.a != 1)
        throw DomainError("conformal forms to O(p0) need constituents "
                          "I_d(W_2(q))");
    }
  }
  FormedBundle fb;
  fb.group = group;
  fb.expr = std::move(expr);

  int n = (int)fb.expr.atoms.size();
  std::vector<bool> used(n, false);
  std::vector<int> selfs;
  for (int i = 0; i < n; ++i) {
    if (used[i]) continue;
    const BundleAtom& a = fb.expr.atoms[i];
    if (is_self_dual(a, group)) {
      selfs.push_back(i);
      used[i] = true;
      continue;
    }
    BundleAtom want = partner_atom(a, group);
    int j = -1;
    for (int k = i + 1; k < n && j < 0; ++k)
      if (!used[k] && fb.expr.atoms[k] == want) j = k;
    if (j < 0)
      throw DomainError(
          "no dual partner for " + print_atom(a),
          "each non-self-dual constituent pairs with its twisted dual");
    used[i] = used[j] = true;
    fb.layout.push_back({Summand::DualPair, {i, j}});
  }

  // group-specific joins among self-dual atoms of one stable class
  std::map<TorsionPoint, std::vector<int>> classes;
  for (int i : selfs) classes[fb.expr.atoms[i].t].push_back(i);
  for (auto& [t, members] : classes) {
    bool joinable;
    switch (group) {
      case GroupKind::Spin: joinable = true; break;
      case GroupKind::SOOdd: joinable = t.is_origin(); break;
      case GroupKind::PSp: joinable = t.is_origin(); break;
      case GroupKind::PSO: joinable = !t.is_origin(); break;
      default: joinable = false; break;
    }
    if (joinable && members.size() >= 2) {
      // join the largest block with a bare constituent
      std::sort(members.begin(), members.end(), [&](int x, int y) {
        return fb.expr.atoms[x].d > fb.expr.atoms[y].d;
      });
      int small = -1;
      for (std::size_t k = members.size(); k-- > 1;)
        if (fb.expr.atoms[members[k]].d == 1) { small = (int)k; break; }
      if (small > 0) {
        fb.layout.push_back(
            {Summand::CombinedPair, {members[0], members[small]}});
        members.erase(members.begin() + small);
        members.erase(members.begin());
      }
    }
    for (int i : members) fb.layout.push_back({Summand::SelfPaired, {i}});
  }
  return fb;
}

namespace {

// parity-gate check for one self-paired atom; empty string when fine
std::string gate_failure(const BundleAtom& a, GroupKind g) {
  FormKind kind = form_kind_of(g);
  if (value_degree_of(g) == 0) {
    if (!form_parity_In(a.d, kind))
      return std::string(kind == FormKind::alternating ? "Thm 7.2(i)"
                                                       : "Thm 7.2(ii)") +
             ": no " +
             (kind == FormKind::alternating ? "alternating" : "symmetric") +
             " self-pairing on " + print_atom(a) +
             " (alternating needs even rank, symmetric odd)";
    return "";
  }
  if (!form_parity_IdW2(a.t, a.d, kind))
    return "Lemma 7.11: no " +
           std::string(kind == FormKind::alternating ? "alternating"
                                                     : "symmetric") +
           " O(p0)-valued self-pairing on " + print_atom(a) +
           " (the q = -q parity table swaps between q = p0 and the other "
           "2-torsion points)";
  return "";
}

std::string summand_label(const FormedBundle& fb, const Summand& s) {
  std::string out;
  for (std::size_t k = 0; k < s.atom_indices.size(); ++k) {
    if (k) out += " | ";
    out += print_atom(fb.expr.atoms[s.atom_indices[k]]);
  }
  switch (s.kind) {
    case Summand::DualPair: return "dual pair " + out;
    case Summand::SelfPaired: return "self-paired " + out;
    case Summand::CombinedPair: return "combined " + out;
  }
  return out;
}

} // namespace

long long group_minimum(GroupKind g, long long rank) {
  switch (g) {
    case GroupKind::Sp: return rank / 2;
    case GroupKind::SOOdd: return (rank - 1) / 2 - 1;
    case GroupKind::SOEven: return rank / 2 - 2;
    case GroupKind::Spin: return rank / 2;
    case GroupKind::PSp: {
      long long n = rank / 2;
      return n % 2 == 1 ? (n - 1) / 2 : n / 2;
    }
    case GroupKind::PSO: {
      long long n = rank / 2;
      return n % 2 == 1 ? (n - 3) / 2 : n / 2;
    }
  }
  return 0;
}

AutQReport autQ_dim(const FormedBundle& fb) {
  AutQReport rep;
  Rat total(0);
  bool combined_at_origin = false;
  for (const Summand& s : fb.layout) {
    Rat c(0);
    if (s.kind == Summand::DualPair) {
      c = Rat(fb.expr.atoms[s.atom_indices[0]].d);
    } else if (s.kind == Summand::SelfPaired) {
      const BundleAtom& a = fb.expr.atoms[s.atom_indices[0]];
      std::string fail = gate_failure(a, fb.group);
      if (!fail.empty()) throw DomainError("parity gate: " + fail, fail);
      c = Rat(a.d / 2);
      // the even-n conformal orthogonal branch counts each eta-shifted
      // summand with an extra half, paired up across the branch
      if (fb.group == GroupKind::PSO && !a.t.is_origin() &&
          (fb.expr.rank() / 2) % 2 == 0)
        c += Rat(1, 2);
    } else {
      const BundleAtom& big = fb.expr.atoms[s.atom_indices[0]];
      const BundleAtom& bare = fb.expr.atoms[s.atom_indices[1]];
      if (fb.group == GroupKind::PSO) {
        // joint symmetric pairing on I_{2e}(W_2(r)) + W_2(r)
        if (big.d % 2 != 0 || bare.d != 1)
          throw DomainError("combined conformal summand needs an even block "
                            "joined with a bare W_2(r)");
        c = Rat(big.d / 2) + Rat(1, 2);
      } else {
        // diagonal forms on I_{2a+1}(eta) + eta (or their W_2 analogues)
        for (int idx : s.atom_indices) {
          std::string fail = gate_failure(fb.expr.atoms[idx], fb.group);
          if (!fail.empty()) throw DomainError("parity gate: " + fail, fail);
        }
        c = Rat(big.d / 2) + Rat(bare.d / 2) + Rat(1);
        if (big.t.is_origin()) combined_at_origin = true;
      }
    }
    total += c;
    rep.ledger.push_back({summand_label(fb, s), c});
  }
  if (!total.is_integer())
    throw DomainError("half-integral total: the combined conformal summands "
                      "must come in pairs");
  rep.dim = total.num();

  RegularCheck rc = validate_regular(fb);
  rep.is_regular =
      rc.valid && rep.dim == group_minimum(fb.group, fb.expr.rank());

  long long n = fb.expr.rank() / 2;
  switch (fb.group) {
    case GroupKind::Sp: rep.abelian = true; break;
    case GroupKind::SOEven: rep.abelian = true; break;
    case GroupKind::SOOdd: {
      bool has_trivial = false;
      for (const BundleAtom& a : fb.expr.atoms)
        if (a.t.is_origin()) has_trivial = true;
      rep.abelian = !has_trivial;
      break;
    }
    case GroupKind::PSp:
      rep.abelian = n % 2 == 1 ? true : !combined_at_origin;
      break;
    case GroupKind::PSO:
      if (n % 2 == 1) rep.abelian = true; // else undecided
      break;
    case GroupKind::Spin: break; // undecided beyond the known special shapes
  }
  return rep;
}

RegularCheck validate_regular(const FormedBundle& fb) {
  RegularCheck rc;
  GroupKind g = fb.group;
  long long rank = fb.expr.rank();

  // rank parity must match the group (Spin covers both parities)
  bool parity_ok = g == GroupKind::Spin ||
                   (g == GroupKind::SOOdd ? rank % 2 == 1 : rank % 2 == 0);
  if (!parity_ok) {
    rc.diagnosis = "rank parity does not match " + group_name(g, rank);
    return rc;
  }

  // Jordan blocks over the nontrivial order-2 classes must share one
  // multiplicity parity (value O)
  if (value_degree_of(g) == 0 && form_kind_of(g) == FormKind::symmetric) {
    bool has_odd = false, has_even = false;
    for (const BundleAtom& a : fb.expr.atoms)
      if (is_self_dual(a, g) && !a.t.is_origin())
        (a.d % 2 ? has_odd : has_even) = true;
    if (has_odd && has_even) {
      rc.diagnosis =
          "Prop 7.1: once one order-2 constituent has odd multiplicity, "
          "every order-2 constituent must";
      return rc;
    }
  }

  // parity gates on self-paired summands
  for (const Summand& s : fb.layout) {
    if (s.kind == Summand::DualPair) continue;
    if (s.kind == Summand::CombinedPair && g == GroupKind::PSO) {
      const BundleAtom& big = fb.expr.atoms[s.atom_indices[0]];
      const BundleAtom& bare = fb.expr.atoms[s.atom_indices[1]];
      if (big.d % 2 != 0 || bare.d != 1) {
        rc.diagnosis = "Thm 7.13(ii): the joined summand must be "
                       "I_{2e}(W2(r)) with a bare W2(r)";
        return rc;
      }
      continue;
    }
    for (int idx : s.atom_indices) {
      std::string fail = gate_failure(fb.expr.atoms[idx], g);
      if (!fail.empty()) {
        rc.diagnosis = fail;
        return rc;
      }
    }
  }

  // distinct stable constituents, except inside a combined summand
  for (std::size_t i = 0; i < fb.expr.atoms.size(); ++i)
    for (std::size_t j = i + 1; j < fb.expr.atoms.size(); ++j) {
      if (!same_stable_part(fb.expr.atoms[i], fb.expr.atoms[j])) continue;
      bool joined = false;
      for (const Summand& s : fb.layout)
        if (s.kind == Summand::CombinedPair &&
            ((s.atom_indices[0] == (int)i && s.atom_indices[1] == (int)j) ||
             (s.atom_indices[0] == (int)j && s.atom_indices[1] == (int)i)))
          joined = true;
      if (!joined) {
        rc.diagnosis = "repeated stable constituent " +
                       print_atom({1, fb.expr.atoms[i].n, fb.expr.atoms[i].a,
                                   fb.expr.atoms[i].t}) +
                       " outside a joined summand forces extra automorphisms";
        return rc;
      }
    }

  // per-group pattern shapes over the self-dual classes
  std::map<TorsionPoint, std::vector<const Summand*>> self_summands;
  for (const Summand& s : fb.layout)
    if (s.kind != Summand::DualPair)
      self_summands[fb.expr.atoms[s.atom_indices[0]].t].push_back(&s);
  auto etas = two_torsion_set();
  long long n = rank / 2;

  auto lone = [&](const TorsionPoint& t) -> const Summand* {
    auto it = self_summands.find(t);
    if (it == self_summands.end() || it->second.size() != 1) return nullptr;
    return it->second[0];
  };

  switch (g) {
    case GroupKind::Sp:
      rc.branch = "Prop 7.5";
      break;
    case GroupKind::SOOdd: {
      rc.branch = "Prop 7.7(ii)";
      for (const TorsionPoint& e : etas) {
        const Summand* s = lone(e);
        if (!s || s->kind != Summand::SelfPaired) {
          rc.diagnosis = "Prop 7.7(ii): each of the three order-2 classes "
                         "must appear exactly once with odd multiplicity";
          return rc;
        }
      }
      if (self_summands.count(TorsionPoint())) {
        const Summand* s = lone(TorsionPoint());
        if (!s || s->kind != Summand::CombinedPair) {
          rc.diagnosis = "Prop 7.7(ii): a trivial-class summand must be the "
                         "joined I_{2a+1} + O block";
          return rc;
        }
        rc.branch = "Prop 7.7(ii) with I_{2a+1} + O";
      }
      break;
    }
    case GroupKind::SOEven: {
      rc.branch = "Prop 7.7(iii)";
      std::vector<TorsionPoint> all = {TorsionPoint(), etas[0], etas[1],
                                       etas[2]};
      for (const TorsionPoint& e : all) {
        const Summand* s = lone(e);
        if (!s || s->kind != Summand::SelfPaired) {
          rc.diagnosis = "Prop 7.7(iii): all four order <= 2 classes must "
                         "appear exactly once with odd multiplicity";
          return rc;
        }
      }
      break;
    }
    case GroupKind::Spin: {
      rc.branch = "Thm 7.8";
      for (auto& [t, list] : self_summands) {
        if (list.size() != 1) {
          rc.diagnosis = "Thm 7.8: at most one summand per order-2 class";
          return rc;
        }
        const Summand* s = list[0];
        if (rank % 2 == 1 && t.is_origin()) {
          if (s->kind != Summand::SelfPaired) {
            rc.diagnosis = "Thm 7.8 (odd rank): the trivial class is a lone "
                           "I_{2a+1}";
            return rc;
          }
        } else if (s->kind != Summand::CombinedPair) {
          rc.diagnosis = "Thm 7.8: order-2 classes enter as joined "
                         "I_{2a+1}(eta) + eta summands";
          return rc;
        }
      }
      if (rank % 2 == 1 && !self_summands.count(TorsionPoint())) {
        rc.diagnosis = "Thm 7.8 (odd rank): the summand I_{2a+1} must be "
                       "present";
        return rc;
      }
      break;
    }
    case GroupKind::PSp: {
      rc.branch = n % 2 == 1 ? "Thm 7.12(i)" : "Thm 7.12(ii)";
      auto it = self_summands.find(TorsionPoint());
      if (n % 2 == 1) {
        if (it == self_summands.end() || it->second.size() != 1 ||
            it->second[0]->kind != Summand::SelfPaired) {
          rc.diagnosis = "Thm 7.12(i): odd n needs the lone summand "
                         "I_{2a+1}(W2)";
          return rc;
        }
      } else if (it != self_summands.end()) {
        if (it->second.size() != 1 ||
            it->second[0]->kind != Summand::CombinedPair) {
          rc.diagnosis = "Thm 7.12(ii): even n allows the p0 class only as "
                         "the joined I_{2a+1}(W2) + W2 summand";
          return rc;
        }
        rc.branch = "Thm 7.12(ii) with I_{2a+1}(W2) + W2";
      }
      break;
    }
    case GroupKind::PSO: {
      rc.branch = n % 2 == 1 ? "Thm 7.13(i)" : "Thm 7.13(ii)";
      if (n % 2 == 1) {
        for (const TorsionPoint& e : etas) {
          const Summand* s = lone(e);
          if (!s || s->kind != Summand::SelfPaired) {
            rc.diagnosis = "Thm 7.13(i): odd n needs all three summands "
                           "I_{2e+1}(W2(r))";
            return rc;
          }
        }
      } else {
        for (const TorsionPoint& e : etas) {
          auto it = self_summands.find(e);
          if (it == self_summands.end()) continue;
          const Summand* s = it->second.size() == 1 ? it->second[0] : nullptr;
          bool bare_ok = s && s->kind == Summand::SelfPaired &&
                         fb.expr.atoms[s->atom_indices[0]].d == 1;
          bool joined_ok = s && s->kind == Summand::CombinedPair;
          if (!bare_ok && !joined_ok) {
            rc.diagnosis = "Thm 7.13(ii): even n allows W2(r) alone or the "
                           "joined I_{2e}(W2(r)) + W2(r)";
            return rc;
          }
        }
      }
      break;
    }
  }
  rc.valid = true;
  return rc;
}

namespace {

std::vector<TorsionPoint> torsion_points_up_to(long long max_order) {
  std::set<TorsionPoint> pts;
  for (long long m = 1; m <= max_order; ++m)
    for (long long a = 0; a < m; ++a)
      for (long long b = 0; b < m; ++b) pts.insert({Rat(a, m), Rat(b, m)});
  return {pts.begin(), pts.end()};
}

struct EnumState {
  GroupKind g;
  long long atom_rank;           // 1 for value O, 2 for conformal
  std::vector<TorsionPoint> dual_reps;
  std::vector<TorsionPoint> self_reps;
  std::vector<std::vector<BundleAtom>> out_atoms;
  std::vector<BundleAtom> current;
};

void enum_duals(EnumState& st, std::size_t idx, long long remaining);

// option lists per self class, as atom multiplicity bundles
void enum_selfs(EnumState& st, std::size_t idx, long long remaining,
                long long target_n) {
  if (idx == st.self_reps.size()) {
    enum_duals(st, 0, remaining);
    return;
  }
  const TorsionPoint& t = st.self_reps[idx];
  bool origin = t.is_origin();
  auto emit = [&](std::vector<long long> mults) {
    long long used = 0;
    for (long long m : mults) used += m * st.atom_rank;
    if (used > remaining) return;
    std::size_t before = st.current.size();
    for (long long m : mults) {
      if (st.atom_rank == 1)
        st.current.push_back({m, 1, 0, t});
      else
        st.current.push_back({m, 2, 1, t});
    }
    enum_selfs(st, idx + 1, remaining - used, target_n);
    st.current.resize(before);
  };
  emit({}); // class absent (validity decided later by validate_regular)
  switch (st.g) {
    case GroupKind::Sp:
      for (long long e = 1; 2 * e * st.atom_rank <= remaining; ++e)
        emit({2 * e});
      break;
    case GroupKind::SOOdd:
      if (origin) {
        for (long long a = 0; (2 * a + 2) <= remaining; ++a)
          emit({2 * a + 1, 1});
      } else {
        for (long long a = 0; (2 * a + 1) <= remaining; ++a) emit({2 * a + 1});
      }
      break;
    case GroupKind::SOEven:
      for (long long a = 0; (2 * a + 1) <= remaining; ++a) emit({2 * a + 1});
      break;
    case GroupKind::Spin:
      if (origin && remaining % 2 == 1) {
        for (long long a = 0; (2 * a + 1) <= remaining; ++a) emit({2 * a + 1});
      } else {
        for (long long a = 0; (2 * a + 2) <= remaining; ++a)
          emit({2 * a + 1, 1});
      }
      break;
    case GroupKind::PSp:
      if (origin) {
        if (target_n % 2 == 1) {
          for (long long a = 0; (2 * a + 1) * 2 <= remaining; ++a)
            emit({2 * a + 1});
        } else {
          for (long long a = 0; (2 * a + 2) * 2 <= remaining; ++a)
            emit({2 * a + 1, 1});
        }
      } else {
        for (long long e = 1; 2 * e * 2 <= remaining; ++e) emit({2 * e});
      }
      break;
    case GroupKind::PSO:
      if (origin) {
        for (long long a = 1; 2 * a * 2 <= remaining; ++a) emit({2 * a});
      } else if (target_n % 2 == 1) {
        for (long long e = 0; (2 * e + 1) * 2 <= remaining; ++e)
          emit({2 * e + 1});
      } else {
        emit({1});
        for (long long e = 1; (2 * e + 1) * 2 <= remaining; ++e)
          emit({2 * e, 1});
      }
      break;
  }
}

void enum_duals(EnumState& st, std::size_t idx, long long remaining) {
  if (remaining == 0) {
    st.out_atoms.push_back(st.current);
    return;
  }
  if (idx == st.dual_reps.size()) return;
  enum_duals(st, idx + 1, remaining); // skip this class
  const TorsionPoint& q = st.dual_reps[idx];
  for (long long d = 1; 2 * d * st.atom_rank <= remaining; ++d) {
    std::size_t before = st.current.size();
    if (st.atom_rank == 1) {
      st.current.push_back({d, 1, 0, q});
      st.current.push_back({d, 1, 0, -q});
    } else {
      st.current.push_back({d, 2, 1, q});
      st.current.push_back({d, 2, 1, -q});
    }
    enum_duals(st, idx + 1, remaining - 2 * d * st.atom_rank);
    st.current.resize(before);
  }
}

} // namespace

std::vector<FormedBundle> enumerate_regular(GroupKind g, long long rank,
                                            long long max_order) {
  if (rank < 1) throw DomainError("rank must be positive");
  if (g != GroupKind::Spin && g != GroupKind::SOOdd && rank % 2 != 0)
    throw DomainError("even rank required for " + group_name(g, rank));
  EnumState st;
  st.g = g;
  st.atom_rank = value_degree_of(g) == 1 ? 2 : 1;
  auto pts = torsion_points_up_to(max_order);
  std::set<TorsionPoint> seen;
  for (const TorsionPoint& p : pts) {
    if (p == -p) {
      st.self_reps.push_back(p);
    } else if (!seen.count(p) && !seen.count(-p)) {
      seen.insert(p);
      st.dual_reps.push_back(p);
    }
  }
  enum_selfs(st, 0, rank, rank / 2);

  std::vector<FormedBundle> out;
  for (auto& atoms : st.out_atoms) {
    FormedBundle fb = FormedBundle::make(BundleExpr::of(atoms), g);
    if (validate_regular(fb).valid && autQ_dim(fb).is_regular)
      out.push_back(std::move(fb));
  }
  std::sort(out.begin(), out.end(), [](const FormedBundle& a,
                                       const FormedBundle& b) {
    return print_bundle(a.expr) < print_bundle(b.expr);
  });
  return out;
}

} // namespace ebc
