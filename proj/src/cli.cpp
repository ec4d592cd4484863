#include "ebc/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>

#include "ebc/bundle_parse.hpp"
#include "ebc/classical.hpp"
#include "ebc/errors.hpp"
#include "ebc/flat_pairs.hpp"
#include "ebc/moduli.hpp"

namespace ebc {

namespace {

using json = nlohmann::ordered_json;

json rat_json(const Rat& r) { return r.str(); }

json point_json(const TorsionPoint& p) {
  return json::array({p.u().str(), p.v().str()});
}

json atoms_json(const BundleExpr& v) {
  json arr = json::array();
  for (const BundleAtom& a : v.atoms)
    arr.push_back(json{{"d", a.d}, {"n", a.n}, {"a", a.a}, {"t", point_json(a.t)}});
  return json{{"atoms", arr}};
}

long long max_rank_guard() {
  const char* env = std::getenv("EBC_MAX_RANK");
  if (!env) return 8;
  return std::atoll(env);
}

RootSystem group_of(const std::string& name) {
  if (name.empty() || !std::isalpha((unsigned char)name[0]))
    throw DomainError("group spelling is letter + rank, e.g. A2, E8");
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit((unsigned char)name[i]))
      throw DomainError("group spelling is letter + rank, e.g. A2, E8");
  char t = (char)std::toupper((unsigned char)name[0]);
  int rank = std::atoi(name.c_str() + 1);
  if (rank > max_rank_guard())
    throw DomainError("rank exceeds EBC_MAX_RANK (" +
                      std::to_string(max_rank_guard()) + ")");
  return RootSystem::build(t, rank);
}

CenterElement center_of(const RootSystem& rs, long long label) {
  auto all = rs.center_elements();
  for (const CenterElement& c : all)
    if (c.label == label) return c;
  throw DomainError("no center element with label " + std::to_string(label) +
                    " in " + rs.name() + " (see `group info`)");
}

json group_info(const RootSystem& rs) {
  json j;
  j["group"] = rs.name();
  j["rank"] = rs.rank();
  j["roots"] = rs.num_roots();
  j["marks"] = rs.marks();
  j["comarks"] = rs.extended_comarks();
  j["exponents"] = rs.exponents();
  j["casimir_weights"] = rs.casimir_weights();
  j["weyl_order"] = rs.weyl_order();
  json centers = json::array();
  for (const CenterElement& c : rs.center_elements()) {
    json cj{{"label", c.label}, {"order", c.order}};
    if (c.node >= 0) cj["node"] = c.node + 1;
    centers.push_back(cj);
  }
  j["center"] = centers;
  return j;
}

json descriptor_json(const ModuliDescriptor& md) {
  json j;
  j["weights"] = md.weights;
  j["dim"] = md.dim;
  j["weights_sorted"] = md.weights_sorted;
  j["point"] = md.is_point;
  j["straight_projective"] = md.is_straight_projective;
  return j;
}

json run_verb(const std::string& verb, const std::vector<std::string>& rest);

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out) {
  bool pretty = false;
  std::vector<std::string> rest;
  for (const std::string& a : args) {
    if (a == "--pretty")
      pretty = true;
    else
      rest.push_back(a);
  }
  json result;
  int code = 0;
  try {
    if (rest.empty())
      throw DomainError(
          "usage: ebc <group|moduli|strata|bundle|pair|classical> ...");
    std::string verb = rest.front();
    result = run_verb(verb, {rest.begin() + 1, rest.end()});
  } catch (const ParseError& e) {
    result = json{{"error", e.what()}, {"pos", e.pos()}};
    code = 2;
  } catch (const DomainError& e) {
    result = json{{"error", e.what()}};
    if (!e.clause().empty()) result["clause"] = e.clause();
    code = 1;
  }
  out << (pretty ? result.dump(2) : result.dump()) << "\n";
  return code;
}

namespace {

json run_verb(const std::string& verb, const std::vector<std::string>& rest) {
  auto need = [&](std::size_t k, const std::string& usage) {
    if (rest.size() < k) throw DomainError("usage: " + usage);
  };

  if (verb == "group") {
    need(2, "ebc group info <G>");
    if (rest[0] != "info") throw DomainError("usage: ebc group info <G>");
    return group_info(group_of(rest[1]));
  }

  if (verb == "moduli" || verb == "strata") {
    CLI::App app{"ebc " + verb};
    std::string gname;
    long long center = -1, order = 1;
    app.add_option("group", gname)->required();
    app.add_option("--center", center);
    if (verb == "strata") app.add_option("--order", order)->required();
    std::vector<std::string> argv(rest.rbegin(), rest.rend());
    try {
      app.parse(argv);
    } catch (const CLI::ParseError& e) {
      throw ParseError(e.what(), 0);
    }
    RootSystem rs = group_of(gname);
    std::optional<CenterElement> c;
    if (center >= 0) c = center_of(rs, center);
    if (verb == "moduli") {
      ModuliDescriptor md =
          c && c->node >= 0 ? moduli_weights_c(rs, *c) : moduli_weights(rs);
      json j = descriptor_json(md);
      j["group"] = rs.name();
      if (c) j["center"] = c->label;
      return j;
    }
    StratumRecord rec = strata(rs, c, order);
    json phases = json::array();
    for (const Rat& p : rec.phases) phases.push_back(rat_json(p));
    json j;
    j["group"] = rs.name();
    if (c) j["center"] = c->label;
    j["order"] = rec.d;
    j["dim"] = rec.locus_dim;
    j["phases"] = phases;
    return j;
  }

  if (verb == "bundle") {
    need(2, "ebc bundle hn|sclass|regular|autdim|cohom \"<expr>\"");
    const std::string& sub = rest[0];
    BundleExpr v = parse_bundle(rest[1]);
    if (sub == "hn") {
      json blocks = json::array();
      for (const auto& [slope, block] : hn_filtration(v)) {
        json b;
        b["slope"] = rat_json(slope);
        b["expr"] = print_bundle(block);
        b.update(atoms_json(block));
        blocks.push_back(b);
      }
      return json{{"blocks", blocks}};
    }
    if (sub == "sclass") {
      BundleExpr g = s_equiv_graded(v);
      json j = atoms_json(g);
      j["expr"] = print_bundle(g);
      return j;
    }
    if (sub == "regular") {
      BundleExpr g = regular_representative(v);
      json j = atoms_json(g);
      j["expr"] = print_bundle(g);
      return j;
    }
    if (sub == "autdim")
      return json{{"autdim", aut_dim(v)}, {"regular", is_regular(v)}};
    if (sub == "cohom") {
      auto [h0, h1] = cohomology(v);
      return json{{"h0", h0}, {"h1", h1}};
    }
    throw DomainError("unknown bundle subcommand: " + sub);
  }

  if (verb == "pair") {
    need(1, "ebc pair centralizer|cohom --group <G> --x <vec> --y <vec>");
    const std::string& sub = rest[0];
    CLI::App app{"ebc pair"};
    std::string gname, xs, ys, nilpotent = "all";
    app.add_option("--group", gname)->required();
    app.add_option("--x", xs)->required();
    app.add_option("--y", ys)->required();
    app.add_option("--nilpotent", nilpotent);
    std::vector<std::string> argv(rest.rbegin(), rest.rend() - 1);
    try {
      app.parse(argv);
    } catch (const CLI::ParseError& e) {
      throw ParseError(e.what(), 0);
    }
    RootSystem rs = group_of(gname);
    FlatPair rho = FlatPair::of(rs, parse_rat_vector(xs), parse_rat_vector(ys));
    CentralizerInfo info = centralizer(rs, rho);
    if (sub == "centralizer") {
      json comps = json::array();
      for (const SubsystemComponent& c : info.components)
        comps.push_back(json{{"type", std::string(1, c.type) +
                                          std::to_string(c.rank)},
                             {"casimir_weights", c.casimir_weights}});
      json simple = json::array();
      for (int k : info.canonical_simple)
        simple.push_back(rs.positive_roots()[k]);
      return json{{"group", rs.name()},
                  {"roots", 2 * info.positive_roots.size()},
                  {"components", comps},
                  {"center_dim", info.center_dim},
                  {"rank", info.rank()},
                  {"simple_system", simple}};
    }
    if (sub == "cohom") {
      NilpotentDatum X;
      if (nilpotent == "all") {
        X = regular_nilpotent_for(rs, rho);
      } else {
        for (const Rat& r : parse_rat_vector(nilpotent)) {
          if (!r.is_integer())
            throw DomainError("--nilpotent wants indices or 'all'");
          X.simple_subset.push_back((int)r.num());
        }
      }
      ChevalleyAlgebra alg = ChevalleyAlgebra::build(rs);
      auto [h0, h1] = pair_cohomology(alg, rho, X);
      return json{{"h0", h0}, {"h1", h1}};
    }
    throw DomainError("unknown pair subcommand: " + sub);
  }

  if (verb == "classical") {
    need(1, "ebc classical validate|enumerate --group <name> [\"<expr>\"]");
    const std::string& sub = rest[0];
    CLI::App app{"ebc classical"};
    std::string gname, expr;
    long long max_order = 2;
    app.add_option("--group", gname)->required();
    app.add_option("--max-order", max_order);
    app.add_option("expr", expr);
    std::vector<std::string> argv(rest.rbegin(), rest.rend() - 1);
    try {
      app.parse(argv);
    } catch (const CLI::ParseError& e) {
      throw ParseError(e.what(), 0);
    }
    auto [g, rank] = parse_group_name(gname);
    if (sub == "validate") {
      if (expr.empty()) throw DomainError("classical validate needs an expression");
      FormedBundle fb = FormedBundle::make(parse_bundle(expr), g);
      if (fb.expr.rank() != rank)
        throw DomainError("expression rank " + std::to_string(fb.expr.rank()) +
                          " does not match " + gname);
      RegularCheck rc = validate_regular(fb);
      json j;
      j["valid"] = rc.valid;
      if (rc.valid) {
        AutQReport rep = autQ_dim(fb);
        j["autQ_dim"] = rep.dim;
        j["regular"] = rep.is_regular;
        j["abelian"] = rep.abelian ? json(*rep.abelian) : json(nullptr);
        j["branch"] = rc.branch;
      } else {
        j["diagnosis"] = rc.diagnosis;
      }
      return j;
    }
    if (sub == "enumerate") {
      auto found = enumerate_regular(g, rank, max_order);
      json arr = json::array();
      for (const FormedBundle& fb : found) arr.push_back(print_bundle(fb.expr));
      return json{{"group", gname}, {"count", found.size()}, {"bundles", arr}};
    }
    throw DomainError("unknown classical subcommand: " + sub);
  }

  throw DomainError("unknown verb: " + verb);
}

} // namespace

} // namespace ebc
