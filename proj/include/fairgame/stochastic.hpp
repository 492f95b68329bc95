#pragma once

#include <vector>

#include "fairgame/condition.hpp"
#include "fairgame/game.hpp"
#include "fairgame/solvers.hpp"

namespace fairgame {

// Random vertices become P1 vertices whose edges are all live.
GameGraph derand(const StochasticGameGraph& sg);

// Almost-sure winning region of P0, computed on the derandomized game.
SolveResult solve_almost_sure(const StochasticGameGraph& sg, const WinningCondition& cond, const SolveOptions& o = {});

struct MecDecomposition {
  std::vector<VertexSet> components;  // ascending by smallest member
};

// Input must be a 1.5-player arena: every P1 vertex has exactly one successor.
// Throws std::invalid_argument otherwise.
MecDecomposition mec_decompose(const StochasticGameGraph& mdp);
// Same, restricted to the sub-arena on `within`.
MecDecomposition mec_decompose(const StochasticGameGraph& mdp, const VertexSet& within);

// An end component is good for the condition when, for some pair j, it
// misses R_j and meets every goal set of pair j.
bool good_end_component(const VertexSet& U, const GenRabin& cond);

// Enumerates memoryless P0 strategies (on the goal-counter product when some
// pair has several goal sets); a start wins iff every reachable end component
// of the induced chain is good and no dead end is reachable.
VertexSet mdp_almost_sure_oracle(const StochasticGameGraph& mdp, const GenRabin& cond, std::uint64_t budget = 1000000);

}  // namespace fairgame
