#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fairgame/condition.hpp"
#include "fairgame/game.hpp"
#include "fairgame/operators.hpp"

namespace fairgame {

struct SolveOptions {
  // Acceleration bound; 0 disables the warm-start cache.
  int accel = 0;
  // Keep the frames that strategy extraction needs. They always come from an
  // unaccelerated pass.
  bool record = false;
};

// One rank-assignment pass of the Rabin recursion for a fixed goal vector.
struct RabinTrace {
  std::vector<int> goals;  // goal index per pair (0-based), empty for plain Rabin
  // Rank word p0 i0 p1 i1 ... pk ik per vertex, absent outside the region.
  std::vector<std::optional<std::vector<int>>> words;
  // Converged ν-value for each visited prefix p0 i0 ... p_{j-1} i_{j-1} p_j.
  std::vector<std::pair<std::vector<int>, VertexSet>> nu_values;
};

struct Frames {
  enum class Kind { Reach, GenBuchi, Safety, Rabin, DualReach } kind = Kind::Reach;
  // Reach/Safety: X iterates of the last outer pass, layers[i-1] = X^i.
  std::vector<VertexSet> layers;
  // GenBuchi: per goal set b, the X iterates of the last pass.
  std::vector<std::vector<VertexSet>> goal_layers;
  // Rabin: one trace per goal vector, in mixed-radix order.
  std::vector<RabinTrace> traces;
  std::vector<int> radix;  // m_i per pair
  std::vector<std::vector<VertexSet>> goal_sets;  // per pair, for memory updates
};

struct SolveResult {
  VertexSet region;
  StepCounter steps;
  std::map<std::string, std::uint64_t> iterations;
  std::shared_ptr<const Frames> frames;
};

SolveResult solve_safe_reach(const GameGraph& g, const VertexSet& T, const VertexSet& Q, const SolveOptions& o = {});
SolveResult solve_reach_classic(const GameGraph& g, const VertexSet& T, const VertexSet& Q, const SolveOptions& o = {});
// P1's region V \ Z* of the safe reachability game. frames->layers holds the
// Ȳ^m sets (layers[m-1] = Ȳ^m).
SolveResult solve_dual_reach(const GameGraph& g, const VertexSet& T, const VertexSet& Q, const SolveOptions& o = {});
SolveResult solve_safety(const GameGraph& g, const VertexSet& Q, const SolveOptions& o = {});
SolveResult solve_safe_buchi(const GameGraph& g, const VertexSet& G, const VertexSet& Q, const SolveOptions& o = {});
SolveResult solve_safe_gen_buchi(const GameGraph& g, const std::vector<VertexSet>& F, const VertexSet& Q,
                                 const SolveOptions& o = {});
SolveResult solve_rabin(const GameGraph& g, const Rabin& c, const SolveOptions& o = {});
SolveResult solve_gen_rabin(const GameGraph& g, const GenRabin& c, const SolveOptions& o = {});
SolveResult solve_rabin_chain(const GameGraph& g, const RabinChain& c, const SolveOptions& o = {});
SolveResult solve_parity(const GameGraph& g, const Parity& c, const SolveOptions& o = {});
SolveResult solve_parity_classic(const GameGraph& g, const Parity& c, const SolveOptions& o = {});
SolveResult solve_gen_cobuchi(const GameGraph& g, const GenCoBuchi& c, const SolveOptions& o = {});
SolveResult solve_gr1(const GameGraph& g, const GR1& c, const SolveOptions& o = {});

// Dispatch over every condition class. Throws std::invalid_argument when
// validation reports errors.
SolveResult solve(const GameGraph& g, const WinningCondition& c, const SolveOptions& o = {});

}  // namespace fairgame
