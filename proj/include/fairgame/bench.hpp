#pragma once

#include <cstdint>

#include "fairgame/condition.hpp"
#include "fairgame/game.hpp"

namespace fairgame {

struct RandomGame {
  GameGraph game;
  Rabin cond;
};

// Each vertex gets 1-4 distinct successors; a vertex is P0 with probability
// owner_frac; each P1 edge is live with probability live_frac; each vertex
// joins each G_i and each R_i with probability member_frac. Same seed, same
// instance. Throws std::invalid_argument on fractions outside [0,1], n < 2
// or k < 1.
RandomGame random_fair_game(std::uint64_t seed, int n, int k, double owner_frac = 0.5, double live_frac = 0.05,
                            double member_frac = 0.05);

struct RandomStochasticGame {
  StochasticGameGraph game;
  Rabin cond;
};

// 1.5-player arena: vertices are P0 or random (random with probability
// random_frac), 1-4 successors each.
RandomStochasticGame random_mdp(std::uint64_t seed, int n, int k, double random_frac = 0.5,
                                double member_frac = 0.3);

struct GadgetChain {
  GameGraph game;
  Buchi cond;
};

// m copies of the two-vertex live-edge gadget in a ring: p_i (P1) loops on
// itself and has a live edge to q_i (P0), which moves on to p_{i+1}. The
// goal is the last q.
GadgetChain gadget_chain(int m);

}  // namespace fairgame
