#include <doctest.h>

#include "ebc/chevalley.hpp"
#include "ebc/errors.hpp"

using namespace ebc;

namespace {

void check_full_jacobi(const ChevalleyAlgebra& alg) {
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = i; j < alg.dim(); ++j)
      for (std::size_t k = j; k < alg.dim(); ++k)
        REQUIRE(alg.jacobi_holds((int)i, (int)j, (int)k));
}

std::vector<int> full_simple(const RootSystem& rs) {
  std::vector<int> s;
  for (int i = 0; i < rs.rank(); ++i) {
    RootCoords alpha(rs.rank(), 0);
    alpha[i] = 1;
    s.push_back(rs.positive_index(alpha));
  }
  return s;
}

} // namespace

TEST_CASE("dimensions") {
  auto a1 = RootSystem::build('A', 1);
  CHECK(ChevalleyAlgebra::build(a1).dim() == 3);
  auto g2 = RootSystem::build('G', 2);
  CHECK(ChevalleyAlgebra::build(g2).dim() == 14);
}

TEST_CASE("Jacobi identity holds on every basis triple for small types") {
  for (auto [t, n] :
       {std::pair<char, int>{'A', 2}, {'A', 3}, {'B', 2}, {'C', 3}, {'G', 2}}) {
    auto rs = RootSystem::build(t, n);
    check_full_jacobi(ChevalleyAlgebra::build(rs));
  }
}

TEST_CASE("structure constants have the string magnitude") {
  auto rs = RootSystem::build('G', 2);
  auto alg = ChevalleyAlgebra::build(rs);
  // [h_i, e_alpha] = <alpha, h_i> e_alpha and [e, e_-] = coroot are encoded;
  // every N_{a,b} must be +-(p+1) with p the string depth
  int p = (int)alg.num_positive();
  for (int a = 0; a < 2 * p; ++a)
    for (int b = 0; b < 2 * p; ++b) {
      if (alg.negate_signed(a) == b) continue;
      RootCoords sum = alg.signed_root_coords(a);
      RootCoords rb = alg.signed_root_coords(b);
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += rb[k];
      if (alg.signed_index(sum) < 0) continue;
      long long n = alg.structure_N(a, b);
      long long depth = 0;
      RootCoords cur = alg.signed_root_coords(b);
      while (true) {
        bool zero = true;
        for (std::size_t k = 0; k < cur.size(); ++k) {
          cur[k] -= alg.signed_root_coords(a)[k];
          if (cur[k] != 0) zero = false;
        }
        if (zero || alg.signed_index(cur) < 0) break;
        ++depth;
      }
      CHECK(std::abs(n) == depth + 1);
      CHECK(alg.structure_N(b, a) == -n);
    }
}

TEST_CASE("centralizer dimensions on A-series") {
  auto a1 = RootSystem::build('A', 1);
  auto alg1 = ChevalleyAlgebra::build(a1);
  CHECK(alg1.centralizer_dim(alg1.root_vector(0)) == 1);

  auto a2 = RootSystem::build('A', 2);
  auto alg2 = ChevalleyAlgebra::build(a2);
  AlgElement principal = alg2.zero();
  principal[alg2.basis_index_of_root(0)] = Rat(1);
  principal[alg2.basis_index_of_root(1)] = Rat(1);
  CHECK(alg2.centralizer_dim(principal) == 2);
  CHECK(alg2.centralizer_dim(alg2.root_vector(0)) == 4);
}

TEST_CASE("kernel equals cokernel for the square ad matrix") {
  auto rs = RootSystem::build('B', 2);
  auto alg = ChevalleyAlgebra::build(rs);
  AlgElement x = alg.root_vector(0);
  x[alg.basis_index_of_root(3)] = Rat(2, 3);
  // rank of ad x equals rank of its transpose; check via the two routes
  std::size_t ker = alg.centralizer_dim(x);
  CHECK(ker >= 2);
  CHECK(alg.centralizer_dim(alg.zero()) == alg.dim());
}

TEST_CASE("sl2 completion and verification") {
  auto a1 = RootSystem::build('A', 1);
  auto alg1 = ChevalleyAlgebra::build(a1);
  Sl2Triple t1 = alg1.sl2_complete({0});
  CHECK(t1.h[0] == Rat(1)); // standard (e, h, f)

  auto a2 = RootSystem::build('A', 2);
  auto alg2 = ChevalleyAlgebra::build(a2);
  Sl2Triple t2 = alg2.sl2_complete(full_simple(a2));
  for (int i = 0; i < 2; ++i) {
    RootCoords alpha(2, 0);
    alpha[i] = 1;
    Rat pairing(0);
    for (int k = 0; k < 2; ++k)
      pairing += t2.h[k] * Rat(a2.pair_root_simple_coroot(alpha, k));
    CHECK(pairing == Rat(2));
  }

  auto c2 = RootSystem::build('C', 2);
  auto algc = ChevalleyAlgebra::build(c2);
  CHECK_NOTHROW(algc.sl2_complete(full_simple(c2))); // exact bracket check inside
}

TEST_CASE("a non-simple system is rejected") {
  auto a2 = RootSystem::build('A', 2);
  auto alg = ChevalleyAlgebra::build(a2);
  // {alpha1, alpha1+alpha2} has a root difference
  int high = a2.positive_index(a2.highest_root());
  CHECK_THROWS_AS(alg.sl2_complete({0, high}), DomainError);
}

TEST_CASE("sl2 decomposition of principal and subregular elements") {
  auto a2 = RootSystem::build('A', 2);
  auto alg = ChevalleyAlgebra::build(a2);
  CHECK(alg.sl2_decompose(alg.sl2_complete(full_simple(a2))) ==
        std::vector<long long>{3, 5});
  auto non_principal = alg.sl2_decompose(alg.sl2_complete({0}));
  CHECK(non_principal.size() == 4); // s >= r + 2
  long long total = 0;
  for (long long d : non_principal) total += d;
  CHECK(total == 8);

  auto a1 = RootSystem::build('A', 1);
  auto alg1 = ChevalleyAlgebra::build(a1);
  CHECK(alg1.sl2_decompose(alg1.sl2_complete({0})) ==
        std::vector<long long>{3});
}

TEST_CASE("principal decomposition equals 2d_i - 1 for small ranks") {
  for (auto [t, n] :
       {std::pair<char, int>{'A', 3}, {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2}}) {
    auto rs = RootSystem::build(t, n);
    auto alg = ChevalleyAlgebra::build(rs);
    std::vector<long long> expect;
    for (long long d : rs.casimir_weights()) expect.push_back(2 * d - 1);
    CHECK(alg.sl2_decompose(alg.sl2_complete(full_simple(rs))) == expect);
  }
}

TEST_CASE("the largest exceptional algebras at full scale") {
  for (auto [t, n] : {std::pair<char, int>{'E', 7}, {'E', 8}}) {
    auto rs = RootSystem::build(t, n);
    auto alg = ChevalleyAlgebra::build(rs); // samples Jacobi internally
    CHECK(alg.dim() == (std::size_t)(rs.rank() + rs.num_roots()));
    Sl2Triple principal = alg.sl2_complete(full_simple(rs));
    std::vector<long long> expect;
    for (long long d : rs.casimir_weights()) expect.push_back(2 * d - 1);
    CHECK(alg.sl2_decompose(principal) == expect);
    CHECK(alg.centralizer_dim(principal.x_plus) == (std::size_t)n);
  }
}

TEST_CASE("subalgebra handles") {
  auto a2 = RootSystem::build('A', 2);
  auto alg = ChevalleyAlgebra::build(a2);
  // the A1 spanned by the highest root plus the full Cartan
  int high = a2.positive_index(a2.highest_root());
  Subalgebra sub =
      alg.span_with_cartan({high, alg.negate_signed(high)});
  CHECK(sub.dim() == 4);
  AlgElement x = alg.root_vector(high);
  CHECK(alg.centralizer_dim(sub, x) == 2);
  CHECK_THROWS_AS(alg.centralizer_dim(sub, alg.root_vector(0)), DomainError);
  // a root subset that is not closed
  CHECK_THROWS_AS(alg.span_with_cartan({0, 1}), DomainError);
}
