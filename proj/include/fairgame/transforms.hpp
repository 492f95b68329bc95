#pragma once

#include <vector>

#include "fairgame/condition.hpp"
#include "fairgame/game.hpp"

namespace fairgame {

GenRabin muller_to_gen_rabin(const Muller& m, int n);
GenRabin gr1_to_gen_rabin(const GR1& c, int n);
RabinChain parity_to_rabin_chain(const Parity& p, int n);
Rabin gen_cobuchi_to_rabin(const GenCoBuchi& c, int n);

// A derived arena whose vertices project onto an original one.
// embed[v] is the product vertex that starts a play from original v;
// projection[x] is the original vertex of product vertex x.
struct Embedding {
  std::vector<int> embed;
  std::vector<int> projection;
};

struct StreettReduction {
  GameGraph game;
  Rabin cond;
  Embedding map;
};
// Every live edge (v,v') becomes v -> vv' -> v' through a fresh P0 vertex,
// with an extra pair ({v},{vv'}). The result has no live edges.
StreettReduction naive_streett_reduction(const GameGraph& g, const Rabin& cond);

struct GenBuchiProduct {
  GameGraph game;
  SafeBuchi cond;
  Embedding map;
};
// Vertices (v,b), id b*n+v. Leaving v with counter b advances b when v ∈ F_b.
// The goal is the last counter value combined with its own goal set.
GenBuchiProduct gen_buchi_counter_product(const GameGraph& g, const GenBuchi& c);

struct GenRabinProduct {
  GameGraph game;
  Rabin cond;
  Embedding map;
  std::vector<int> radix;  // m_i per pair
};
// Same construction with one goal counter per pair (mixed radix, id c*n+v).
GenRabinProduct gen_rabin_counter_product(const GameGraph& g, const GenRabin& c);

// Lifts a set over the original vertices to a derived arena.
VertexSet lift(const VertexSet& s, const Embedding& map);
// Original vertices whose embedded start vertex lies in s.
VertexSet project_starts(const VertexSet& s, const Embedding& map, int n);

}  // namespace fairgame
