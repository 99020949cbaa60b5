#include <doctest.h>

#include "cellab/families.hpp"
#include "cellab/representation.hpp"
#include "oracles.hpp"

using namespace cellab;
using Q = Rational;

namespace {

// Independent brute-force Hom: stack the full constraint system over every
// basis element and take one dense nullspace. Used as the oracle for the
// incremental solver.
int hom_dim_bruteforce(const CellDatum<Q>& d, const ModuleRep<Q>& m, const ModuleRep<Q>& n) {
  const int md = m.dim(), nd = n.dim(), vars = nd * md;
  if (vars == 0) return 0;
  Matrix<Q> sys(d.dim() * vars, vars);
  int row = 0;
  for (int a = 0; a < d.dim(); ++a) {
    for (int p = 0; p < nd; ++p)
      for (int q = 0; q < md; ++q) {
        for (int u = 0; u < nd; ++u) sys(row, u * md + q) += n.action[a](p, u);
        for (int v = 0; v < md; ++v) sys(row, p * md + v) -= m.action[a](v, q);
        ++row;
      }
  }
  return nullspace(sys, d.one()).dim();
}

}  // namespace

TEST_CASE("trace-form radical of the quiver algebra is the arrow span, dim 4") {
  auto fam = build_quiver_example<Q>(Q(1));
  const auto& d = *fam.datum;
  auto rad = jacobson_radical(d);
  CHECK(rad.dim() == 4);
  // radical = span{a12a21, a12, a21, a21a12} (basis indices 0, 2, 3, 4)
  for (int idx : {0, 2, 3, 4}) {
    std::vector<Q> v(6);
    v[idx] = Q(1);
    CHECK(rad.contains(v));
  }
  for (int idx : {1, 5}) {
    std::vector<Q> v(6);
    v[idx] = Q(1);
    CHECK(!rad.contains(v));
  }
}

TEST_CASE("trace-form radical of M_n vanishes") {
  for (int n : {1, 2, 3}) {
    auto fam = build_matrix_algebra<Q>(n, Q(1));
    CHECK(jacobson_radical(*fam.datum).dim() == 0);
  }
}

TEST_CASE("radical oracle equivalence on char-0 instances") {
  for (auto datum : {build_quiver_example<Q>(Q(1)).datum, build_matrix_algebra<Q>(3, Q(1)).datum}) {
    CHECK((jacobson_radical(*datum).dim() == 0) == is_semisimple(*datum).semisimple);
  }
}

TEST_CASE("radical computations refuse positive characteristic") {
  Fp one = make_prime_field_one(7);
  auto fam = build_quiver_example<Fp>(one);
  CHECK_THROWS_AS(jacobson_radical(*fam.datum), unsupported_error);
  CHECK_THROWS_AS(decomposition_matrix(*fam.datum), unsupported_error);
}

TEST_CASE("hom spaces on the quiver (against brute force)") {
  auto fam = build_quiver_example<Q>(Q(1));
  const auto& d = *fam.datum;
  auto d0 = cell_module(d, 0), d1 = cell_module(d, 1), d2 = cell_module(d, 2);

  auto h21 = hom_space(d, d2, d1);  // Delta(l2) -> Delta(l1): the radical embedding
  CHECK(h21.dim == 1);
  CHECK(hom_space(d, d1, d2).dim == 0);
  CHECK(hom_space(d, d1, d0).dim == 1);
  CHECK(hom_space(d, d1, d1).dim == 1);  // Schur
  // the nonzero map Delta(l2) -> Delta(l1) lands in the radical
  REQUIRE(h21.basis.size() == 1);
  auto g1 = gram_matrix(d, 1);
  std::vector<Q> image{h21.basis[0](0, 0), h21.basis[0](1, 0)};
  CHECK(g1.radical.contains(image));

  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      auto ma = cell_module(d, a), mb = cell_module(d, b);
      CHECK(hom_space(d, ma, mb).dim == hom_dim_bruteforce(d, ma, mb));
    }
}

TEST_CASE("Schur: Hom(Delta(n), Delta(n)) of the matrix algebra has dim 1") {
  auto fam = build_matrix_algebra<Q>(3, Q(1));
  auto delta = cell_module(*fam.datum, 0);
  CHECK(hom_space(*fam.datum, delta, delta).dim == 1);
  CHECK(hom_dim_bruteforce(*fam.datum, delta, delta) == 1);
}

TEST_CASE("loewy series of the quiver cell modules") {
  auto fam = build_quiver_example<Q>(Q(1));
  const auto& d = *fam.datum;
  auto jac = jacobson_radical(d);
  auto cache = build_simple_cache(d);
  REQUIRE(cache.lambda0 == std::vector<int>{1, 2});

  // Delta(l1): head L(l1), then L(l2) (the radical is Delta(l2))
  auto layers1 = loewy_series(d, cell_module(d, 1), jac, cache);
  REQUIRE(layers1.size() == 2);
  CHECK(layers1[0] == LoewyLayer{{0, 1}});
  CHECK(layers1[1] == LoewyLayer{{1, 1}});

  // Delta(l0) is simple, isomorphic to L(l1)
  auto layers0 = loewy_series(d, cell_module(d, 0), jac, cache);
  REQUIRE(layers0.size() == 1);
  CHECK(layers0[0] == LoewyLayer{{0, 1}});

  // Delta(l2) = L(l2)
  auto layers2 = loewy_series(d, cell_module(d, 2), jac, cache);
  REQUIRE(layers2.size() == 1);
  CHECK(layers2[0] == LoewyLayer{{1, 1}});
}

TEST_CASE("loewy series of a semisimple cell module is a single layer") {
  auto fam = build_matrix_algebra<Q>(3, Q(1));
  auto layers = loewy_series(*fam.datum, cell_module(*fam.datum, 0));
  REQUIRE(layers.size() == 1);
  CHECK(layers[0] == LoewyLayer{{0, 1}});
}

TEST_CASE("decomposition matrix of the quiver, Cartan matrix, triangularity report") {
  auto fam = build_quiver_example<Q>(Q(1));
  auto dec = decomposition_matrix(*fam.datum);
  REQUIRE(dec.lambda0 == std::vector<int>{1, 2});
  CHECK(dec.d_matrix == std::vector<std::vector<long>>{{1, 0}, {1, 1}, {0, 1}});
  CHECK(dec.cartan == std::vector<std::vector<long>>{{2, 1}, {1, 2}});
  // declared order l0 > l1 > l2 puts the nonzero d[l0][l1] on the "mu < lambda"
  // side: the lower convention holds, the upper one is flagged
  CHECK(dec.lower_ok);
  CHECK(!dec.upper_ok);
  // d_{lambda,lambda} = 1 on Lambda^0
  for (size_t k = 0; k < dec.lambda0.size(); ++k) CHECK(dec.d_matrix[dec.lambda0[k]][k] == 1);
}

TEST_CASE("decomposition matrix of M_n is [1]") {
  auto dec = decomposition_matrix(*build_matrix_algebra<Q>(2, Q(1)).datum);
  CHECK(dec.d_matrix == std::vector<std::vector<long>>{{1}});
  CHECK(dec.upper_ok);
  CHECK(dec.lower_ok);
}

TEST_CASE("blocks of the quiver: one cell-block, restricted to {l1, l2}") {
  auto fam = build_quiver_example<Q>(Q(1));
  auto b = blocks(*fam.datum);
  CHECK(b.cell_blocks == std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(b.blocks_on_lambda0 == std::vector<std::vector<int>>{{1, 2}});
}

TEST_CASE("blocks of M_n: a single class") {
  auto b = blocks(*build_matrix_algebra<Q>(3, Q(1)).datum);
  CHECK(b.cell_blocks == std::vector<std::vector<int>>{{0}});
}

TEST_CASE("regular-module multiplicities equal sum |T(lambda)| d_{lambda,mu}") {
  for (auto datum : {build_quiver_example<Q>(Q(1)).datum, build_matrix_algebra<Q>(3, Q(1)).datum}) {
    const auto& d = *datum;
    auto dec = decomposition_matrix(d);
    auto jac = jacobson_radical(d);
    auto cache = build_simple_cache(d);
    auto layers = loewy_series(d, regular_module(d), jac, cache);
    std::vector<long> reg_mult(dec.lambda0.size(), 0);
    for (const auto& layer : layers)
      for (const auto& [k, mult] : layer) reg_mult[k] += mult;
    for (size_t k = 0; k < dec.lambda0.size(); ++k) {
      long expect = 0;
      for (int l = 0; l < d.n_cells(); ++l) expect += static_cast<long>(d.t_size(l)) * dec.d_matrix[l][k];
      CHECK(reg_mult[k] == expect);
    }
  }
}
