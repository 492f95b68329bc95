#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fairgame/condition.hpp"
#include "fairgame/game.hpp"
#include "fairgame/solvers.hpp"

namespace fairgame {

using RankWord = std::vector<int>;

// Per-vertex ranks; absent means ∞. Generalized conditions carry one table
// per goal vector (mixed radix over radix), plain ones a single table.
struct RankTable {
  std::vector<int> radix;
  std::vector<std::vector<std::optional<RankWord>>> tables;

  const std::optional<RankWord>& rank(int v, int memory = 0) const {
    return tables[static_cast<std::size_t>(memory)][static_cast<std::size_t>(v)];
  }
};

// "011220"; falls back to dot separation when a letter exceeds 9.
std::string rank_string(const RankWord& w);
// Counter-snapshot rendering of a rank word: the iteration counters of every
// level at the moment the vertex first appears in the innermost iterate
// (0-based below the last level, 1-based on the last level).
std::string rank_snapshot(const RankWord& w);

// Reach-style ranks: v in X^i \ X^{i-1} has word {i}.
RankTable extract_reach_ranks(const Frames& f, int n);
// Dual reach ranks: v in Ȳ^m \ Ȳ^{m-1} has word {m}.
RankTable extract_dual_ranks(const Frames& f, int n);
RankTable extract_rabin_ranks(const Frames& f);
// One reach-rank table per goal set.
RankTable extract_gen_buchi_ranks(const Frames& f, int n);

struct Strategy {
  Owner player = Owner::P0;
  // One entry per memory state; a single state means memoryless.
  std::vector<std::string> memory_labels{""};
  int initial_memory = 0;
  // update[m][v]: memory after visiting v with memory m (empty if memoryless).
  std::vector<std::vector<int>> update;
  // move[m][v]: successor chosen at v with (updated) memory m, -1 if none.
  std::vector<std::vector<int>> move;

  int memory_size() const { return static_cast<int>(memory_labels.size()); }
  bool memoryless() const { return memory_size() == 1; }
  int next_memory(int m, int v) const {
    return update.empty() ? 0 : update[static_cast<std::size_t>(m)][static_cast<std::size_t>(v)];
  }
  int choose(int v, int m = 0) const { return move[static_cast<std::size_t>(m)][static_cast<std::size_t>(v)]; }

  // Lines "v -> w" or "v -> w @ mem", plus "update v mem -> mem" lines for
  // finite-memory strategies.
  std::string serialize(const GameGraph& g) const;
};

// Winning P0 strategy on the solved region. res must carry frames
// (SolveOptions::record). Throws std::invalid_argument otherwise.
Strategy extract_p0_strategy(const GameGraph& g, const WinningCondition& cond, const SolveResult& res);
RankTable ranks_for(const GameGraph& g, const SolveResult& res);

// Memoryless P1 strategy on V \ Z* of a safe reachability game; res is the
// recorded result of solve_dual_reach.
Strategy extract_p1_spoiler_reach(const GameGraph& g, const VertexSet& T, const VertexSet& Q, const SolveResult& res);

}  // namespace fairgame
