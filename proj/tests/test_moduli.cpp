#include <doctest.h>

#include <algorithm>
#include <set>

#include "ebc/errors.hpp"
#include "ebc/moduli.hpp"

using namespace ebc;

TEST_CASE("simply connected weights") {
  for (int n = 1; n <= 8; ++n) {
    ModuliDescriptor md = moduli_weights(RootSystem::build('A', n));
    CHECK(md.dim == n);
    CHECK(md.is_straight_projective);
    CHECK((int)md.weights.size() == n + 1);
  }
  ModuliDescriptor e8 = moduli_weights(RootSystem::build('E', 8));
  CHECK(e8.weights ==
        std::vector<long long>{1, 2, 3, 4, 5, 6, 4, 3, 2});
  CHECK(e8.dim == 8);
  CHECK(!e8.is_straight_projective);
}

TEST_CASE("exceptional weight multisets") {
  auto sorted = [](char t, int n) {
    return moduli_weights(RootSystem::build(t, n)).weights_sorted;
  };
  CHECK(sorted('G', 2) == std::vector<long long>{1, 1, 2});
  CHECK(sorted('F', 4) == std::vector<long long>{1, 1, 2, 2, 3});
  CHECK(sorted('E', 6) == std::vector<long long>{1, 1, 1, 2, 2, 2, 3});
  CHECK(sorted('E', 7) ==
        std::vector<long long>{1, 1, 2, 2, 2, 3, 3, 4});
  CHECK(sorted('E', 8) ==
        std::vector<long long>{1, 2, 2, 3, 3, 4, 4, 5, 6});
  for (int n = 2; n <= 8; ++n) {
    auto b = sorted('B', n); // one 1, one 2 beyond the affine node? frozen:
    CHECK(std::count(b.begin(), b.end(), 1) == 3);
    CHECK(std::count(b.begin(), b.end(), 2) == n - 2);
  }
}

TEST_CASE("twisted weights") {
  auto a1 = RootSystem::build('A', 1);
  ModuliDescriptor md = moduli_weights_c(a1, a1.center_elements()[1]);
  CHECK(md.weights == std::vector<long long>{2});
  CHECK(md.is_point);

  for (int n = 2; n <= 6; ++n) {
    auto bn = RootSystem::build('B', n);
    ModuliDescriptor mb = moduli_weights_c(bn, bn.center_elements()[1]);
    CHECK(mb.dim == n - 1);
    CHECK(std::count(mb.weights.begin(), mb.weights.end(), 2) == n - 1);
    CHECK(std::count(mb.weights.begin(), mb.weights.end(), 1) == 1);
  }

  for (int n = 4; n <= 7; ++n) {
    auto dn = RootSystem::build('D', n);
    for (const CenterElement& c : dn.center_elements()) {
      if (c.node != 0) continue; // the SO(2n) kernel
      ModuliDescriptor md2 = moduli_weights_c(dn, c);
      for (long long w : md2.weights) CHECK(w == 2);
      CHECK(md2.dim == n - 2);
    }
  }
}

TEST_CASE("strata of the simply connected E8") {
  auto e8 = RootSystem::build('E', 8);
  StratumRecord s1 = strata(e8, std::nullopt, 1);
  CHECK(s1.locus_dim == 8);
  CHECK(s1.phases.empty());

  CHECK(strata(e8, std::nullopt, 2).locus_dim == 4);
  CHECK(strata(e8, std::nullopt, 3).locus_dim == 2);
  CHECK(strata(e8, std::nullopt, 5).locus_dim == 0);
  StratumRecord s5 = strata(e8, std::nullopt, 5);
  CHECK(s5.phases.size() == 8);
  CHECK_THROWS_AS(strata(e8, std::nullopt, 7), DomainError);

  StratumRecord s2 = strata(e8, std::nullopt, 2);
  std::multiset<Rat> expect;
  for (long long g : e8.extended_comarks())
    if (g % 2 != 0) expect.insert(Rat(g, 2).mod1());
  CHECK(std::multiset<Rat>(s2.phases.begin(), s2.phases.end()) == expect);
}

TEST_CASE("strata on G2") {
  auto g2 = RootSystem::build('G', 2);
  StratumRecord s = strata(g2, std::nullopt, 2);
  CHECK(s.locus_dim == 0);
  CHECK(s.phases == std::vector<Rat>{Rat(1, 2), Rat(1, 2)});
  CHECK_THROWS_AS(strata(g2, std::nullopt, 3), DomainError);
}

TEST_CASE("twisted strata admissibility") {
  auto a1 = RootSystem::build('A', 1);
  CenterElement c = a1.center_elements()[1];
  // d_0 = 2 for the A1 twist: d = 1 is inadmissible
  CHECK_THROWS_AS(strata(a1, c, 1), DomainError);
  StratumRecord s = strata(a1, c, 2);
  CHECK(s.locus_dim == 0);
  CHECK(s.phases.empty());
}

TEST_CASE("isogeny table dimensions") {
  // every entry instantiable at rank <= 8: descriptor dim == partner rank
  std::vector<std::pair<char, int>> types = {{'A', 1}, {'A', 2}, {'A', 3},
                                             {'A', 4}, {'A', 5}, {'A', 7},
                                             {'B', 2}, {'B', 4}, {'C', 3},
                                             {'C', 4}, {'D', 4}, {'D', 5},
                                             {'D', 6}, {'E', 6}, {'E', 7}};
  for (auto [t, n] : types) {
    auto rs = RootSystem::build(t, n);
    for (const CenterElement& c : rs.center_elements()) {
      if (c.node < 0) continue;
      IsogenyPartner p = isogeny_partner(rs, c);
      ModuliDescriptor md = moduli_weights_c(rs, c);
      CHECK(md.dim == p.rank);
    }
  }
  auto e7 = RootSystem::build('E', 7);
  IsogenyPartner f4 = isogeny_partner(e7, e7.center_elements()[1]);
  CHECK(f4.type == 'F');
  CHECK(f4.rank == 4);

  auto b4 = RootSystem::build('B', 4);
  IsogenyPartner sp6 = isogeny_partner(b4, b4.center_elements()[1]);
  CHECK(sp6.type == 'C');
  CHECK(sp6.rank == 3);

  auto a3 = RootSystem::build('A', 3);
  for (const CenterElement& c : a3.center_elements()) {
    if (c.order == 4) CHECK(isogeny_partner(a3, c).rank == 0); // SL(1): a point
    if (c.order == 2) CHECK(isogeny_partner(a3, c).rank == 1); // SL(2)
  }
  CHECK_THROWS_AS(isogeny_partner(a3, a3.center_elements()[0]), DomainError);
}

TEST_CASE("products") {
  auto a1 = RootSystem::build('A', 1);
  ProductDescriptor p =
      product_descriptor({{&a1, std::nullopt}, {&a1, std::nullopt}});
  CHECK(p.dim == 2);
  CHECK(p.factors.size() == 2);
  CHECK(p.factors[0].is_straight_projective);

  auto b2 = RootSystem::build('B', 2);
  auto a2 = RootSystem::build('A', 2);
  ProductDescriptor q = product_descriptor(
      {{&b2, b2.center_elements()[1]}, {&a2, std::nullopt}});
  CHECK(q.dim == 1 + 2);
  CHECK(q.factors[0].weights_sorted == std::vector<long long>{1, 2});

  ProductDescriptor torus = product_descriptor({}, 3);
  CHECK(torus.dim == 3);
  CHECK(torus.abelian_dim == 3);
}
