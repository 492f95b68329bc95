#include <random>

#include "doctest.h"
#include "fairgame/bench.hpp"
#include "fairgame/stochastic.hpp"
#include "random_instances.hpp"

using namespace fairgame;

TEST_CASE("derand without random vertices is the identity") {
  StochasticGameGraph sg;
  sg.add_vertex(Owner::P0, "a");
  sg.add_vertex(Owner::P1, "b");
  sg.add_edge(0, 1);
  sg.add_edge(1, 0);
  sg.add_edge(1, 1);
  GameGraph g = derand(sg);
  CHECK(g.size() == 2);
  CHECK(g.owner(0) == Owner::P0);
  CHECK(g.owner(1) == Owner::P1);
  CHECK(g.live_edge_count() == 0);
  CHECK(g.successors(1) == std::vector<int>{0, 1});
}

TEST_CASE("random vertices become P1 with all edges live") {
  StochasticGameGraph sg;
  sg.add_vertex(Owner::Random, "r");
  sg.add_vertex(Owner::P0, "a");
  sg.add_vertex(Owner::P0, "b");
  sg.add_edge(0, 1);
  sg.add_edge(0, 2);
  sg.add_edge(1, 0);
  sg.add_edge(2, 0);
  GameGraph g = derand(sg);
  CHECK(g.owner(0) == Owner::P1);
  CHECK(g.live_successors(0) == std::vector<int>{1, 2});
  CHECK(g.live_edge_count() == 2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto m = random_mdp(seed, 7, 1);
    auto d = derand(m.game);
    CHECK(d.owned_by(Owner::P1).count() ==
          m.game.owned_by(Owner::P1).count() + m.game.owned_by(Owner::Random).count());
  }
}

TEST_CASE("a random vertex feeding a Buchi goal wins almost surely") {
  StochasticGameGraph sg;
  sg.add_vertex(Owner::P0, "s");
  sg.add_vertex(Owner::Random, "c");
  sg.add_vertex(Owner::P0, "goal");
  sg.add_edge(0, 1);
  sg.add_edge(1, 0);
  sg.add_edge(1, 2);
  sg.add_edge(2, 0);
  Buchi b{VertexSet::of(3, {2})};
  auto r = solve_almost_sure(sg, b).region;
  CHECK(r.contains(1));
  CHECK(r == sg.all());
  CHECK(mdp_almost_sure_oracle(sg, GenRabin{{{{b.G}, VertexSet(3)}}}) == sg.all());
}

TEST_CASE("end components") {
  SUBCASE("a strongly connected random arena is one component") {
    StochasticGameGraph sg(4, Owner::Random);
    for (int v = 0; v < 4; ++v) {
      sg.add_edge(v, (v + 1) % 4);
      sg.add_edge(v, (v + 2) % 4);
    }
    auto d = mec_decompose(sg);
    REQUIRE(d.components.size() == 1);
    CHECK(d.components[0] == sg.all());
  }
  SUBCASE("random vertex leaking out splits the arena") {
    // a <-> r, r -> b, b loops: {a, r} is not closed, {b} is
    StochasticGameGraph sg;
    sg.add_vertex(Owner::P0, "a");
    sg.add_vertex(Owner::Random, "r");
    sg.add_vertex(Owner::P0, "b");
    sg.add_edge(0, 1);
    sg.add_edge(1, 0);
    sg.add_edge(1, 2);
    sg.add_edge(2, 2);
    auto d = mec_decompose(sg);
    REQUIRE(d.components.size() == 1);
    CHECK(d.components[0] == VertexSet::of(3, {2}));
  }
  SUBCASE("goodness of components") {
    GenRabin c{{{{VertexSet::of(4, {0}), VertexSet::of(4, {1})}, VertexSet::of(4, {3})}}};
    CHECK(good_end_component(VertexSet::of(4, {0, 1}), c));
    CHECK_FALSE(good_end_component(VertexSet::of(4, {0, 2}), c));
    CHECK_FALSE(good_end_component(VertexSet::of(4, {0, 1, 3}), c));
  }
  SUBCASE("decomposing the union of components is a fixpoint") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      auto m = random_mdp(seed, 8, 1);
      auto d = mec_decompose(m.game);
      VertexSet all_c(8);
      for (auto& c : d.components) all_c |= c;
      CHECK(mec_decompose(m.game, all_c).components == d.components);
      for (std::size_t i = 0; i < d.components.size(); ++i)
        for (std::size_t j = i + 1; j < d.components.size(); ++j)
          CHECK_FALSE(d.components[i].intersects(d.components[j]));
    }
  }
  SUBCASE("player 1 choices are rejected") {
    StochasticGameGraph sg;
    sg.add_vertex(Owner::P1, "x");
    sg.add_vertex(Owner::P0, "y");
    sg.add_edge(0, 0);
    sg.add_edge(0, 1);
    sg.add_edge(1, 0);
    CHECK_THROWS_AS(mec_decompose(sg), std::invalid_argument);
  }
}

TEST_CASE("almost-sure solver equals the MDP oracle") {
  std::mt19937_64 rng(20);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    int n = rnd::uniform(rng, 2, 8);
    auto m = random_mdp(seed + 5000, n, rnd::uniform(rng, 1, 2));
    CHECK_MESSAGE(solve_almost_sure(m.game, m.cond).region == mdp_almost_sure_oracle(m.game, to_gen_rabin(m.cond)),
                  "seed " << seed);
  }
  // generalized pairs go through the counter product
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    int n = rnd::uniform(rng, 2, 5);
    auto m = random_mdp(seed + 6000, n, 1);
    auto c = rnd::gen_rabin(rng, n, rnd::uniform(rng, 1, 2), 2);
    CHECK_MESSAGE(solve_almost_sure(m.game, c).region == mdp_almost_sure_oracle(m.game, c), "seed " << seed);
  }
}
