#pragma once

// Small hand-built arenas used across the tests.
// Vertex ids follow the order of the add_vertex calls.

#include "fairgame/condition.hpp"
#include "fairgame/game.hpp"

namespace fixtures {

using fairgame::GameGraph;
using fairgame::Owner;
using fairgame::VertexSet;

inline VertexSet set(const GameGraph& g, std::initializer_list<int> ids) {
  return VertexSet::of(static_cast<std::size_t>(g.size()), ids);
}

// Live self-loop gadget: p (P1) loops on itself and has a live edge to q (P0); q -> p.
// Ids: p = 0, q = 1. Goal {q}.
inline GameGraph live_loop_gadget(bool live = true) {
  GameGraph g;
  g.add_vertex(Owner::P1, "p");
  g.add_vertex(Owner::P0, "q");
  g.add_edge(0, 0);
  g.add_edge(0, 1, live);
  g.add_edge(1, 0);
  return g;
}

// Reach example: vertices 1..9 at ids 0..8. Vertex 9 has no successor.
inline GameGraph reach_arena() {
  GameGraph g;
  const Owner owners[] = {Owner::P0, Owner::P1, Owner::P1, Owner::P0, Owner::P1,
                          Owner::P0, Owner::P1, Owner::P0, Owner::P0};
  for (int v = 0; v < 9; ++v) g.add_vertex(owners[v], std::to_string(v + 1));
  auto e = [&](int u, int v, bool live = false) { g.add_edge(u - 1, v - 1, live); };
  e(1, 1);
  e(2, 1);
  e(2, 3, true);
  e(3, 2);
  e(3, 6, true);
  e(4, 5);
  e(5, 4, true);
  e(5, 6, true);
  e(6, 5);
  e(7, 5);
  e(7, 9, true);
  e(8, 6);
  e(8, 9);
  return g;
}

// Vertex labels 1..9 converted to ids.
inline VertexSet reach_set(std::initializer_list<int> labels) {
  VertexSet s(9);
  for (int l : labels) s.insert(l - 1);
  return s;
}

// Two-pair Rabin example: q1..q7 at ids 0..6, live edge q2 -> q3.
inline GameGraph two_pair_arena(bool live = true) {
  GameGraph g;
  const Owner owners[] = {Owner::P0, Owner::P1, Owner::P1, Owner::P1, Owner::P0, Owner::P0, Owner::P0};
  for (int v = 0; v < 7; ++v) g.add_vertex(owners[v], "q" + std::to_string(v + 1));
  auto e = [&](int u, int v, bool l = false) { g.add_edge(u - 1, v - 1, l); };
  e(1, 2);
  e(2, 2);
  e(2, 3, live);
  e(2, 5);
  e(3, 3);
  e(3, 6);
  e(4, 3);
  e(4, 4);
  e(5, 1);
  e(5, 3);
  e(6, 2);
  e(6, 7);
  e(7, 4);
  return g;
}

inline VertexSet q(std::initializer_list<int> labels) {
  VertexSet s(7);
  for (int l : labels) s.insert(l - 1);
  return s;
}

// G1 = {q1,q4}, R1 = {q2,q5}, G2 = {q3}, R2 = {q1,q4,q7}
inline fairgame::Rabin two_pair_rabin() {
  return fairgame::Rabin{{{q({1, 4}), q({2, 5})}, {q({3}), q({1, 4, 7})}}};
}

// Parity example: vertices named by their colors. Ids: "4" = 0 (P0), "1" = 1 (P1),
// "3" = 2 (P0). Live edge 1 -> 4.
inline GameGraph parity_arena(bool live = true) {
  GameGraph g;
  g.add_vertex(Owner::P0, "4");
  g.add_vertex(Owner::P1, "1");
  g.add_vertex(Owner::P0, "3");
  g.add_edge(0, 1);
  g.add_edge(1, 0, live);
  g.add_edge(1, 2);
  g.add_edge(2, 1);
  return g;
}

// colors 1..4; color 2 is empty
inline fairgame::Parity parity_colors() {
  VertexSet none(3);
  return fairgame::Parity{{VertexSet::of(3, {1}), none, VertexSet::of(3, {2}), VertexSet::of(3, {0})}};
}

}  // namespace fixtures
