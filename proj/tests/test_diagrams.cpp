#include <doctest.h>

#include <random>

#include "cellab/diagrams.hpp"
#include "oracles.hpp"

using namespace cellab;

namespace {

// random set partition of an (n, n) diagram
SetPartition random_partition(std::mt19937_64& rng, int n_top, int n_bot) {
  std::vector<std::vector<int>> blocks;
  std::uniform_int_distribution<int> coin(0, 2);
  for (int x = 0; x < n_top + n_bot; ++x) {
    if (blocks.empty() || coin(rng) == 0) {
      blocks.push_back({x});
    } else {
      std::uniform_int_distribution<size_t> pick(0, blocks.size() - 1);
      blocks[pick(rng)].push_back(x);
    }
  }
  return SetPartition(n_top, n_bot, std::move(blocks));
}

ColouredDiagram random_coloured(std::mt19937_64& rng, int n, int m) {
  SetPartition p = random_partition(rng, n, n);
  std::uniform_int_distribution<int> col(0, m - 1);
  std::vector<int> colours(2 * n, 0);
  for (const auto& blk : p.blocks()) {
    int c = col(rng);
    for (int x : blk) colours[x] = c;
  }
  return ColouredDiagram(m, p, colours);
}

}  // namespace

TEST_CASE("set partition canonical form and validation") {
  SetPartition p(2, 2, {{3, 1}, {0, 2}});
  CHECK(p.blocks() == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
  CHECK(p == SetPartition(2, 2, {{2, 0}, {1, 3}}));
  CHECK_THROWS_AS(SetPartition(2, 2, {{0, 1}}), std::invalid_argument);          // uncovered
  CHECK_THROWS_AS(SetPartition(2, 2, {{0, 1, 2, 3}, {0}}), std::invalid_argument);  // overlap
  CHECK_THROWS_AS(SetPartition(1, 1, {{0, 1}, {}}), std::invalid_argument);      // empty block
}

TEST_CASE("identity composes neutrally on 100 random diagrams") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 100; ++k) {
    int n = 1 + static_cast<int>(rng() % 5);
    SetPartition d = random_partition(rng, n, n);
    auto left = compose_set_partitions(SetPartition::identity(n), d);
    auto right = compose_set_partitions(d, SetPartition::identity(n));
    CHECK(left.partition == d);
    CHECK(left.removed == 0);
    CHECK(right.partition == d);
    CHECK(right.removed == 0);
  }
}

TEST_CASE("P_1 singleton diagram squared removes one middle component") {
  SetPartition e(1, 1, {{0}, {1}});
  auto r = compose_set_partitions(e, e);
  CHECK(r.partition == e);
  CHECK(r.removed == 1);
}

TEST_CASE("TL_2 cup-cap squared removes one loop") {
  SetPartition u(2, 2, {{0, 1}, {2, 3}});
  auto r = compose_set_partitions(u, u);
  CHECK(r.partition == u);
  CHECK(r.removed == 1);
}

TEST_CASE("composition size mismatch is an input error") {
  CHECK_THROWS_AS(compose_set_partitions(SetPartition::identity(2), SetPartition::identity(3)),
                  std::invalid_argument);
}

TEST_CASE("associativity with removed-component bookkeeping, 200 random triples") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 200; ++k) {
    int n = 1 + static_cast<int>(rng() % 4);
    SetPartition a = random_partition(rng, n, n), b = random_partition(rng, n, n),
                 c = random_partition(rng, n, n);
    auto ab = compose_set_partitions(a, b);
    auto ab_c = compose_set_partitions(ab.partition, c);
    auto bc = compose_set_partitions(b, c);
    auto a_bc = compose_set_partitions(a, bc.partition);
    CHECK(ab_c.partition == a_bc.partition);
    CHECK(ab.removed + ab_c.removed == bc.removed + a_bc.removed);
  }
}

TEST_CASE("coloured composition: interface colour mismatch gives zero") {
  ColouredDiagram red(2, SetPartition(1, 1, {{0, 1}}), {0, 0});
  ColouredDiagram blue(2, SetPartition(1, 1, {{0, 1}}), {1, 1});
  CHECK(compose_coloured(red, blue).zero);
  auto rr = compose_coloured(red, red);
  CHECK(!rr.zero);
  CHECK(rr.diagram[0] == red);
  CHECK(rr.removed == std::vector<int>{0, 0});
}

TEST_CASE("red cup-cap squared in T_{2,2} picks up one removed red component") {
  ColouredDiagram u(2, SetPartition(2, 2, {{0, 1}, {2, 3}}), {0, 0, 0, 0});
  auto r = compose_coloured(u, u);
  REQUIRE(!r.zero);
  CHECK(r.diagram[0] == u);
  CHECK(r.removed == std::vector<int>{1, 0});
}

TEST_CASE("coloured composition agrees with the independent pairing oracle") {
  auto halves = enumerate_half_diagrams(2, 2);
  std::vector<ColouredDiagram> diagrams;
  for (const auto& s : halves)
    for (const auto& t : halves)
      if (s.through_counts(2) == t.through_counts(2)) diagrams.push_back(join_half_diagrams(s, t, 2));
  REQUIRE(diagrams.size() == 10);
  for (const auto& a : diagrams)
    for (const auto& b : diagrams) {
      auto r = compose_coloured(a, b);
      if (r.zero) {
        CHECK(a.bot_colours() != b.top_colours());
        continue;
      }
      auto to_mates = [](const ColouredDiagram& d) {
        std::vector<int> mate(2 * d.n_top(), -1);
        for (const auto& blk : d.partition().blocks()) {
          REQUIRE(blk.size() == 2);
          mate[blk[0]] = blk[1];
          mate[blk[1]] = blk[0];
        }
        return mate;
      };
      auto [mates, loops] = oracle::compose_pairings(to_mates(a), to_mates(b), 2);
      CHECK(to_mates(r.diagram[0]) == mates);
      CHECK(r.removed[0] + r.removed[1] == loops);
    }
}

TEST_CASE("render/parse round trip for coloured diagrams") {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 200; ++k) {
    int n = 1 + static_cast<int>(rng() % 4);
    int m = 1 + static_cast<int>(rng() % 3);
    ColouredDiagram d = random_coloured(rng, n, m);
    CHECK(ColouredDiagram::parse(d.render(), n, n, m) == d);
  }
  ColouredDiagram d = ColouredDiagram::parse("r:{1,2'}|b:{2}|b:{1'}", 2, 2, 2);
  CHECK(d.render() == "r:{1,2'}|b:{2}|b:{1'}");
  CHECK(d.colours() == std::vector<int>{0, 1, 1, 0});
}

TEST_CASE("half diagram enumeration counts") {
  CHECK(enumerate_half_diagrams(0, 1).size() == 1);
  CHECK(enumerate_half_diagrams(1, 1).size() == 1);
  CHECK(enumerate_half_diagrams(2, 1).size() == 2);
  CHECK(enumerate_half_diagrams(3, 1).size() == 3);
  CHECK(enumerate_half_diagrams(4, 1).size() == 6);
  CHECK(enumerate_half_diagrams(6, 1).size() == 20);
  CHECK(enumerate_half_diagrams(2, 2).size() == 6);
}

TEST_CASE("joined half diagrams are planar per colour; crossings only across colours") {
  for (int n : {2, 3, 4}) {
    auto halves = enumerate_half_diagrams(n, 2);
    for (const auto& s : halves)
      for (const auto& t : halves) {
        if (s.through_counts(2) != t.through_counts(2)) continue;
        CHECK(pairing_planar_per_colour(join_half_diagrams(s, t, 2)));
      }
  }
  ColouredDiagram crossing(2, SetPartition(2, 2, {{0, 3}, {1, 2}}), {0, 1, 1, 0});
  CHECK(pairing_planar_per_colour(crossing));
  ColouredDiagram bad(1, SetPartition(2, 2, {{0, 3}, {1, 2}}), {0, 0, 0, 0});
  CHECK(!pairing_planar_per_colour(bad));
}

TEST_CASE("set partition enumeration matches Bell numbers") {
  for (int n : {0, 1, 2, 3, 4, 5}) {
    CHECK(enumerate_set_partitions(n).size() == static_cast<size_t>(oracle::bell(n)));
  }
}
