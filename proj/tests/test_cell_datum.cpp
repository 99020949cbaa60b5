#include <doctest.h>

#include "cellab/families.hpp"
#include "cellab/modules.hpp"
#include "oracles.hpp"

using namespace cellab;
using Q = Rational;

TEST_CASE("poset construction closes transitively and rejects cycles") {
  CellPoset p({"a", "b", "c"}, {{0, 1}, {1, 2}});
  CHECK(p.less(0, 2));
  CHECK(!p.less(2, 0));
  CHECK_THROWS_AS(CellPoset({"a", "b"}, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(CellPoset({"a"}, {{0, 0}}), std::invalid_argument);
}

TEST_CASE("algebra elements are canonically sparse") {
  auto e = AlgebraElement<Q>::from_terms({{3, Q(1)}, {1, Q(2)}, {3, Q(-1)}});
  CHECK(e.support_size() == 1);
  CHECK(e.coeff(1) == Q(2));
  CHECK(e.coeff(3) == Q(0));
  CHECK((e - e).is_zero_element());
}

TEST_CASE("quiver datum matches the hand-derived table and validates") {
  auto fam = build_quiver_example<Q>(Q(1));
  const auto& d = *fam.datum;
  CHECK(d.dim() == 6);
  CHECK(d.n_cells() == 3);
  CHECK(d.t_size(1) == 2);

  const auto& table = oracle::quiver_table();
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      const auto& p = d.basis_product(a, b);
      if (table[a][b] < 0) {
        CHECK(p.is_zero_element());
      } else {
        CHECK(p == d.basis_element(table[a][b]));
      }
    }

  auto rep = validate_cell_datum(d);
  for (const auto& issue : rep.issues) CAPTURE(issue.check + ": " + issue.detail);
  CHECK(rep.ok());
}

TEST_CASE("matrix algebra datum validates; E12 E21 = E11") {
  auto fam = build_matrix_algebra<Q>(2, Q(1));
  const auto& d = *fam.datum;
  CHECK(d.dim() == 4);
  int e12 = d.triple_index(0, 0, 1), e21 = d.triple_index(0, 1, 0), e11 = d.triple_index(0, 0, 0);
  CHECK(d.multiply(d.basis_element(e12), d.basis_element(e21)) == d.basis_element(e11));
  CHECK(validate_cell_datum(d).ok());
  CHECK_THROWS_AS(build_matrix_algebra<Q>(0, Q(1)), std::invalid_argument);
}

TEST_CASE("quiver multiply: a12 a21 = c^{l0}, a12 (a21 a12) = 0") {
  auto fam = build_quiver_example<Q>(Q(1));
  const auto& d = *fam.datum;
  auto a12 = d.basis_element(d.triple_index(1, 0, 1));
  auto a21 = d.basis_element(d.triple_index(1, 1, 0));
  CHECK(d.multiply(a12, a21) == d.basis_element(d.triple_index(0, 0, 0)));
  CHECK(d.multiply(a12, d.multiply(a21, a12)).is_zero_element());
}

TEST_CASE("broken star table is flagged at the involution axiom") {
  auto fam = build_quiver_example<Q>(Q(1));
  CellDatum<Q> d = *fam.datum;
  std::vector<int> ident(6);
  for (int i = 0; i < 6; ++i) ident[i] = i;
  d.set_star_table(ident);
  auto rep = validate_cell_datum(d);
  CHECK(!rep.ok());
  bool involution_hit = false;
  for (const auto& i : rep.issues)
    if (i.check == "involution") involution_hit = true;
  CHECK(involution_hit);
}

TEST_CASE("action matrices on the quiver") {
  auto fam = build_quiver_example<Q>(Q(1));
  const auto& d = *fam.datum;
  // unit acts as the identity on every cell module
  for (int l = 0; l < 3; ++l) {
    CHECK(action_matrix(d, l, d.unit()) == Matrix<Q>::identity(d.t_size(l), Q(1)));
  }
  // e1 on Delta(l1) = diag(1, 0)
  auto e1 = d.basis_element(d.triple_index(1, 0, 0));
  Matrix<Q> expect(2, 2);
  expect(0, 0) = Q(1);
  CHECK(action_matrix(d, 1, e1) == expect);
  CHECK_THROWS_AS(action_matrix(d, 7, e1), std::invalid_argument);
}

TEST_CASE("quiver Gram matrices, Lambda^0, simple dims, semisimplicity") {
  auto fam = build_quiver_example<Q>(Q(1));
  const auto& d = *fam.datum;
  auto g0 = gram_matrix(d, 0), g1 = gram_matrix(d, 1), g2 = gram_matrix(d, 2);
  CHECK(g0.matrix.is_zero_matrix());
  Matrix<Q> expect1(2, 2);
  expect1(0, 0) = Q(1);
  CHECK(g1.matrix == expect1);
  CHECK(g2.matrix == Matrix<Q>::identity(1, Q(1)));
  CHECK(g1.rank == 1);
  CHECK(g1.radical.dim() == 1);
  CHECK(g1.rank + g1.radical.dim() == d.t_size(1));

  CHECK(lambda_zero(d) == std::vector<int>{1, 2});
  CHECK(simple_dim(d, 1) == 1);
  CHECK(simple_dim(d, 2) == 1);
  CHECK_THROWS_AS(simple_dim(d, 0), std::domain_error);

  auto verdict = is_semisimple(d);
  CHECK(!verdict.semisimple);
  CHECK(verdict.determinants[0] == Q(0));
  CHECK(verdict.determinants[1] == Q(0));
  CHECK(verdict.determinants[2] == Q(1));
}

TEST_CASE("matrix algebra Gram is the identity; semisimple") {
  for (int n : {1, 2, 3}) {
    auto fam = build_matrix_algebra<Q>(n, Q(1));
    auto g = gram_matrix(*fam.datum, 0);
    CHECK(g.matrix == Matrix<Q>::identity(n, Q(1)));
    CHECK(is_semisimple(*fam.datum).semisimple);
    CHECK(lambda_zero(*fam.datum) == std::vector<int>{0});
    CHECK(simple_dim(*fam.datum, 0) == n);
  }
}

TEST_CASE("gram well-definedness: entries agree at 50 random reference pairs per cell") {
  std::mt19937_64 rng(2024);
  auto check_datum = [&](const CellDatum<Q>& d) {
    for (int l = 0; l < d.n_cells(); ++l) {
      Matrix<Q> base = gram_matrix(d, l).matrix;
      std::uniform_int_distribution<int> pick(0, d.t_size(l) - 1);
      for (int k = 0; k < 50; ++k) {
        CHECK(gram_matrix_at(d, l, pick(rng), pick(rng)) == base);
      }
    }
  };
  check_datum(*build_quiver_example<Q>(Q(1)).datum);
  check_datum(*build_matrix_algebra<Q>(3, Q(1)).datum);
}

TEST_CASE("gram symmetry and dim formula on matrix and quiver families") {
  for (auto datum : {build_quiver_example<Q>(Q(1)).datum, build_matrix_algebra<Q>(4, Q(1)).datum}) {
    long total = 0;
    for (int l = 0; l < datum->n_cells(); ++l) {
      auto g = gram_matrix(*datum, l);
      CHECK(g.matrix == g.matrix.transpose());
      total += static_cast<long>(datum->t_size(l)) * datum->t_size(l);
    }
    CHECK(total == datum->dim());
  }
}

TEST_CASE("module axiom: action of products equals products of actions") {
  std::mt19937_64 rng(5);
  auto fam = build_quiver_example<Q>(Q(1));
  const auto& d = *fam.datum;
  std::uniform_int_distribution<int> pick(0, d.dim() - 1);
  for (int l = 0; l < d.n_cells(); ++l) {
    auto mod = cell_module(d, l);
    CHECK(mod.act(d.unit()) == Matrix<Q>::identity(d.t_size(l), Q(1)));
    for (int k = 0; k < 100; ++k) {
      int a = pick(rng), b = pick(rng);
      auto ab = d.basis_product(a, b);
      CHECK(mod.act(ab) == mod.action[a] * mod.action[b]);
    }
  }
}

TEST_CASE("quiver datum over GF(p) validates and has the same Gram ranks") {
  Fp one = make_prime_field_one(101);
  auto fam = build_quiver_example<Fp>(one);
  CHECK(validate_cell_datum(*fam.datum).ok());
  CHECK(lambda_zero(*fam.datum) == std::vector<int>{1, 2});
  CHECK(simple_dim(*fam.datum, 1) == 1);
  CHECK(!is_semisimple(*fam.datum).semisimple);
}
