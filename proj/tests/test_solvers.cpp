#include <random>

#include "doctest.h"
#include "fairgame/oracle.hpp"
#include "fairgame/solvers.hpp"
#include "fairgame/transforms.hpp"
#include "fixtures.hpp"
#include "random_instances.hpp"

using namespace fairgame;

TEST_CASE("reach example: reachability and safe Buchi") {
  auto g = fixtures::reach_arena();
  VertexSet T = fixtures::reach_set({6, 9});
  VertexSet Q = fixtures::reach_set({1}).complement();
  CHECK(solve_safe_reach(g, T, Q).region == fixtures::reach_set({1, 2, 3}).complement());
  CHECK(solve_reach_classic(g, T, Q).region == fixtures::reach_set({6, 8, 9}));
  CHECK(solve_dual_reach(g, T, Q).region == fixtures::reach_set({1, 2, 3}));
  CHECK(solve_safe_buchi(g, T, Q).region == fixtures::reach_set({4, 5, 6, 8}));
  CHECK(solve_safe_gen_buchi(g, {T}, Q).region == fixtures::reach_set({4, 5, 6, 8}));
}

TEST_CASE("trivial inputs") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = rnd::arena(seed, 2 + static_cast<int>(seed % 8), 0.3);
    const VertexSet V = g.all(), E = g.none();
    CHECK(solve_safe_reach(g, V, E).region == V);
    CHECK(solve_dual_reach(g, V, E).region == E);
    CHECK(solve_reach_classic(g, E, V).region == E);
    CHECK(solve_safety(g, V).region == V);
    CHECK(solve_safety(g, E).region == E);
    CHECK(solve_safe_buchi(g, E, V).region == E);
    CHECK(solve_safe_gen_buchi(g, {V, E}, V).region == E);
    CHECK(solve_rabin(g, Rabin{{{V, E}}}).region == V);
    CHECK(solve_parity(g, Parity{{E, V}}).region == V);
    CHECK(solve_parity_classic(g, Parity{{E, V}}).region == V);
    CHECK(solve_gen_cobuchi(g, GenCoBuchi{{V}}).region == V);
    CHECK(solve_gr1(g, GR1{{E}, {VertexSet::of(static_cast<std::size_t>(g.size()), {0})}}).region == V);
  }
}

TEST_CASE("two-pair Rabin game with and without its live edge") {
  CHECK(solve_rabin(fixtures::two_pair_arena(true), fixtures::two_pair_rabin()).region == fixtures::q({1, 2, 3, 4, 5, 6, 7}));
  CHECK(solve_rabin(fixtures::two_pair_arena(false), fixtures::two_pair_rabin()).region == fixtures::q({3, 4, 5, 6, 7}));
}

TEST_CASE("recorded frames reproduce the intermediate fixpoint values") {
  SolveOptions o;
  o.record = true;
  auto res = solve_rabin(fixtures::two_pair_arena(true), fixtures::two_pair_rabin(), o);
  REQUIRE(res.frames);
  REQUIRE(res.frames->traces.size() == 1);
  const auto& nu = res.frames->traces[0].nu_values;
  auto find = [&](std::vector<int> key) -> const VertexSet* {
    for (auto& [k, v] : nu)
      if (k == key) return &v;
    return nullptr;
  };
  // keys are p0 i0 p1: the converged level-1 ν value in the first X0 round
  const VertexSet* y1 = find({0, 1, 1});
  const VertexSet* y2 = find({0, 1, 2});
  REQUIRE(y1);
  REQUIRE(y2);
  CHECK(*y1 == fixtures::q({3, 4, 6, 7}));
  CHECK(*y2 == fixtures::q({2, 3, 5, 6}));
}

TEST_CASE("live-loop gadget and parity example") {
  for (bool live : {true, false}) {
    auto g = fixtures::live_loop_gadget(live);
    auto r = solve(g, Buchi{fixtures::set(g, {1})}).region;
    CHECK(r.contains(0) == live);
  }
  auto g6 = fixtures::parity_arena(true);
  CHECK(solve_parity(g6, fixtures::parity_colors()).region == g6.all());
  auto g6n = fixtures::parity_arena(false);
  auto enc = encode_as_rabin(g6n, fixtures::parity_colors());
  CHECK(solve_parity_classic(g6n, fixtures::parity_colors()).region == brute_force_region(enc.game, enc.cond));
}

TEST_CASE("Muller condition F = V on a P0 cycle") {
  GameGraph g(3, Owner::P0);
  for (int v = 0; v < 3; ++v) g.add_edge(v, (v + 1) % 3);
  CHECK(solve(g, Muller{{g.all()}}).region == g.all());
  CHECK(solve_gen_rabin(g, muller_to_gen_rabin(Muller{{g.all()}}, 3)).region == g.all());
}

TEST_CASE("GR(1) with an unreachable guarantee matches the counter-product oracle") {
  std::mt19937_64 rng(8);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    int n = rnd::uniform(rng, 2, 5);
    auto g = rnd::arena(seed, n, 0.3);
    GR1 c{{g.all()}, {g.none()}};
    CHECK(solve_gr1(g, c).region == brute_force_region_generalized(g, c));
  }
}

TEST_CASE("no live edges: fair solvers equal their classic counterparts") {
  std::mt19937_64 rng(31);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    int n = rnd::uniform(rng, 2, 9);
    auto g = rnd::arena(seed, n, 0.0);
    VertexSet T = rnd::random_set(rng, n, 0.3), Q = rnd::random_set(rng, n, 0.8);
    CHECK(solve_safe_reach(g, T, Q).region == solve_reach_classic(g, T, Q).region);
    auto p = rnd::parity(rng, n, 2 * rnd::uniform(rng, 1, 3));
    CHECK(solve_parity(g, p).region == solve_parity_classic(g, p).region);
  }
}

TEST_CASE("dispatch agrees with the direct solvers") {
  std::mt19937_64 rng(2);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    int n = rnd::uniform(rng, 2, 8);
    auto g = rnd::arena(seed, n, 0.3);
    VertexSet G = rnd::random_set(rng, n, 0.4);
    CHECK(solve(g, Buchi{G}).region == solve_safe_buchi(g, G, g.all()).region);
    VertexSet A = rnd::random_set(rng, n, 0.5);
    CHECK(solve(g, CoBuchi{A}).region == solve_gen_cobuchi(g, GenCoBuchi{{A}}).region);
    auto m = rnd::muller(rng, n, 2);
    CHECK(solve(g, m).region == solve_gen_rabin(g, muller_to_gen_rabin(m, n)).region);
  }
}

TEST_CASE("results and step counts are reproducible") {
  std::mt19937_64 rng(17);
  for (const auto& cls : rnd::memoryless_classes()) {
    auto g = rnd::arena(99, 8, 0.3);
    auto cond = rnd::condition(cls, rng, 8, 2);
    auto a = solve(g, cond), b = solve(g, cond);
    CHECK(a.region == b.region);
    CHECK(a.steps.by_op == b.steps.by_op);
    CHECK(a.iterations == b.iterations);
  }
}

TEST_CASE("every fixpoint variable converges within n + 1 iterations per run") {
  // monotonicity itself is asserted inside the solvers, which throw on violation
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    int n = rnd::uniform(rng, 2, 8);
    auto g = rnd::arena(seed, n, 0.3);
    auto res = solve_safe_reach(g, rnd::random_set(rng, n, 0.3), rnd::random_set(rng, n, 0.8));
    CHECK(res.iterations.at("Y") <= static_cast<std::uint64_t>(n + 1));
    CHECK(res.iterations.at("X") <= static_cast<std::uint64_t>((n + 1) * (n + 1)));
  }
}

TEST_CASE("acceleration never changes a region") {
  std::mt19937_64 rng(55);
  std::vector<std::string> classes = rnd::memoryless_classes();
  for (const auto& c : rnd::memory_classes()) classes.push_back(c);
  for (const auto& cls : classes)
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      int n = rnd::uniform(rng, 2, 9);
      auto g = rnd::arena(seed + 500, n, rnd::kLiveFractions[seed % 5]);
      auto cond = rnd::condition(cls, rng, n, rnd::uniform(rng, 1, 3));
      auto base = solve(g, cond).region;
      for (int M : {2, 4, 16}) {
        SolveOptions o;
        o.accel = M;
        CHECK_MESSAGE(solve(g, cond, o).region == base, cls << " seed " << seed << " M " << M);
      }
    }
}

TEST_CASE("more live edges never shrink a region") {
  std::mt19937_64 rng(71);
  std::vector<std::string> classes = rnd::memoryless_classes();
  for (const auto& c : rnd::memory_classes()) classes.push_back(c);
  for (const auto& cls : classes)
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      int n = rnd::uniform(rng, 2, 8);
      auto g = rnd::arena(seed + 900, n, 0.0);
      auto cond = rnd::condition(cls, rng, n, rnd::uniform(rng, 1, 2));
      auto before = solve(g, cond).region;
      GameGraph more = g;
      for (int v = 0; v < n; ++v)
        if (g.owner(v) == Owner::P1)
          for (int w : g.successors(v))
            if (rng() % 2) more.set_live(v, w, true);
      CHECK_MESSAGE(before.subset_of(solve(more, cond).region), cls << " seed " << seed);
    }
}

TEST_CASE("cross-checks between solvers") {
  std::mt19937_64 rng(404);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    int n = rnd::uniform(rng, 2, 7);
    auto g = rnd::arena(seed + 3000, n, rnd::kLiveFractions[seed % 5]);
    auto r = rnd::rabin(rng, n, rnd::uniform(rng, 1, 2));
    CHECK(solve_gen_rabin(g, to_gen_rabin(r)).region == solve_rabin(g, r).region);
    auto c = rnd::chain(rng, n, rnd::uniform(rng, 1, 3));
    CHECK(solve_rabin_chain(g, c).region == solve_rabin(g, to_rabin(c)).region);
    VertexSet G = rnd::random_set(rng, n, 0.4);
    CHECK(solve_safe_buchi(g, G, g.all()).region == solve_rabin(g, Rabin{{{G, g.none()}}}).region);
    auto gr = rnd::gr1(rng, n, 2, 2);
    CHECK(solve_gr1(g, gr).region == solve_gen_rabin(g, gr1_to_gen_rabin(gr, n)).region);
    auto gc = rnd::gen_cobuchi(rng, n, 2);
    CHECK(solve_gen_cobuchi(g, gc).region == solve_rabin(g, gen_cobuchi_to_rabin(gc, n)).region);
  }
}

TEST_CASE("generalized Buchi agrees with the counter-product oracle") {
  std::mt19937_64 rng(606);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    int n = rnd::uniform(rng, 2, 5);
    auto g = rnd::arena(seed + 4000, n, rnd::kLiveFractions[seed % 5]);
    auto c = rnd::gen_buchi(rng, n, 2);
    auto prod = gen_buchi_counter_product(g, c);
    auto enc = encode_as_rabin(prod.game, prod.cond);
    auto truth = project_starts(brute_force_region(enc.game, enc.cond), prod.map, n);
    CHECK_MESSAGE(solve(g, c).region == truth, "seed " << seed);
  }
}

TEST_CASE("invalid input is refused") {
  GameGraph g;
  g.add_vertex(Owner::P0, "a");
  g.add_vertex(Owner::P1, "b");
  g.add_edge(0, 1, true);
  g.add_edge(1, 0);
  CHECK_THROWS_AS(solve(g, Buchi{g.all()}), std::invalid_argument);
  CHECK_THROWS_AS(solve_rabin(fixtures::two_pair_arena(), Rabin{}), std::invalid_argument);
}
