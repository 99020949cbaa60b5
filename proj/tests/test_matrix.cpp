#include <doctest.h>

#include <random>

#include "cellab/matrix.hpp"

using namespace cellab;

namespace {

Matrix<Rational> rq(std::initializer_list<std::initializer_list<long>> rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows.begin()->size()) : 0;
  Matrix<Rational> m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (long v : row) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("rref of the identity is itself") {
  auto m = Matrix<Rational>::identity(3, Rational(1));
  auto r = rref(m);
  CHECK(r.mat == m);
  CHECK(r.pivots == std::vector<int>{0, 1, 2});
}

TEST_CASE("rref of the rank-1 symmetric matrix") {
  auto r = rref(rq({{1, 1}, {1, 1}}));
  CHECK(r.mat == rq({{1, 1}, {0, 0}}));
  CHECK(r.pivots == std::vector<int>{0});
}

TEST_CASE("rank examples") {
  CHECK(rank(rq({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}})) == 0);
  CHECK(rank(rq({{1, 0}, {0, 0}})) == 1);  // quiver G(l1)
  // bubble T_{2,2} zero-through Gram block at (delta0, delta1) = (0, 1)
  CHECK(rank(rq({{0, 0}, {0, 1}})) == 1);
  // TL_3 one-line Gram at delta = 1
  CHECK(rank(rq({{1, 1}, {1, 1}})) == 1);
}

TEST_CASE("nullspace examples") {
  Rational one(1);
  CHECK(nullspace(Matrix<Rational>::identity(4, one), one).dim() == 0);
  auto ns = nullspace(rq({{1, 1}, {1, 1}}), one);
  CHECK(ns.dim() == 1);
  CHECK(ns.contains({Rational(1), Rational(-1)}));
  CHECK(!ns.contains({Rational(1), Rational(1)}));
  auto ns2 = nullspace(rq({{1, 0}, {0, 0}}), one);
  CHECK(ns2.dim() == 1);
  CHECK(ns2.contains({Rational(0), Rational(1)}));
}

TEST_CASE("solve examples") {
  Rational one(1);
  auto id = Matrix<Rational>::identity(3, one);
  std::vector<Rational> b{Rational(2), Rational(-1), Rational(5)};
  auto x = solve(id, b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  CHECK(!solve(rq({{1, 1}, {1, 1}}), {Rational(1), Rational(0)}).has_value());

  auto y = solve(rq({{2}}), {Rational(1)});
  REQUIRE(y.has_value());
  CHECK((*y)[0] == Rational(1, 2));

  CHECK_THROWS_AS(solve(rq({{1, 2}}), std::vector<Rational>{Rational(1), Rational(2)}),
                  std::invalid_argument);
}

TEST_CASE("determinants") {
  Rational one(1);
  CHECK(det(rq({{1, 1}, {1, 1}}), one) == Rational(0));
  CHECK(det(rq({{2, 1}, {1, 1}}), one) == Rational(1));
  CHECK(det(rq({{0, 1}, {1, 0}}), one) == Rational(-1));
  CHECK(det(Matrix<Rational>(0, 0), one) == one);
}

TEST_CASE("rank-nullity and rref idempotence over both fields, randomized") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> dims(1, 8), val(-4, 4);
  for (int k = 0; k < 500; ++k) {
    int r = dims(rng), c = dims(rng);
    Matrix<Rational> m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = Rational(val(rng));
    CHECK(rank(m) + nullspace(m, Rational(1)).dim() == c);
    auto r1 = rref(m);
    CHECK(rref(r1.mat).mat == r1.mat);
    CHECK(rank(m) == rank(m.transpose()));
  }
  Fp one = make_prime_field_one(13);
  std::uniform_int_distribution<std::uint64_t> fval(0, 12);
  for (int k = 0; k < 500; ++k) {
    int r = dims(rng), c = dims(rng);
    Matrix<Fp> m(r, c, Fp(0, 13));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = Fp(fval(rng), 13);
    CHECK(rank(m) + nullspace(m, one).dim() == c);
    auto r1 = rref(m);
    CHECK(rref(r1.mat).mat == r1.mat);
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("subspace canonical equality") {
  Rational one(1);
  // two spanning sets of the same plane
  Matrix<Rational> a = rq({{1, 1, 0}, {0, 1, 1}});
  Matrix<Rational> b = rq({{1, 2, 1}, {1, 0, -1}});
  CHECK(Subspace<Rational>::from_spanning_rows(a) == Subspace<Rational>::from_spanning_rows(b));
  Matrix<Rational> c = rq({{1, 0, 0}, {0, 1, 1}});
  CHECK(Subspace<Rational>::from_spanning_rows(a) != Subspace<Rational>::from_spanning_rows(c));
}
