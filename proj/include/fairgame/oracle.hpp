#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fairgame/condition.hpp"
#include "fairgame/game.hpp"
#include "fairgame/strategy.hpp"

namespace fairgame {

// Fair, P1-consistent recurrent set that violates the condition. States are
// (vertex, memory) pairs encoded as memory * n + vertex; for memoryless
// strategies they coincide with vertices. A reachable dead end is reported
// as a witness consisting of that state alone.
struct Witness {
  bool found = false;
  std::vector<int> states;
  std::string reason;
};

// Optional grouping of arena vertices for the fairness check. Derived arenas
// (counter products, memory products) map each vertex to the original one; a
// live edge u -> u' then only needs some copy of it inside the recurrent set.
using FairnessGroups = std::optional<std::vector<int>>;

// P1 violates generalized pair j when the set meets R_j or misses one of its
// goal sets; plain Rabin is the case of one goal set per pair.
Witness fair_violating_witness(const GameGraph& g, const Strategy& s, const GenRabin& pairs, int start,
                               const FairnessGroups& groups = std::nullopt);
Witness fair_violating_witness(const GameGraph& g, const Strategy& s, const Rabin& pairs, int start,
                               const FairnessGroups& groups = std::nullopt);

// The two search procedures behind fair_violating_witness: literal subset
// enumeration (at most 20 reachable states) and SCC refinement.
Witness witness_by_enumeration(const GameGraph& g, const Strategy& s, const GenRabin& pairs, int start,
                               const FairnessGroups& groups = std::nullopt);
Witness witness_by_refinement(const GameGraph& g, const Strategy& s, const GenRabin& pairs, int start,
                              const FairnessGroups& groups = std::nullopt);

// Vertices v whose start state (v, initial memory) reaches a witness.
VertexSet losing_starts(const GameGraph& g, const Strategy& s, const GenRabin& pairs,
                        const FairnessGroups& groups = std::nullopt);

struct VerifyResult {
  bool pass = true;
  int counterexample = -1;
  std::string reason;
};

VerifyResult verify_strategy_sound(const GameGraph& g, const GenRabin& pairs, const VertexSet& region,
                                   const Strategy& s, const FairnessGroups& groups = std::nullopt);
VerifyResult verify_strategy_sound(const GameGraph& g, const Rabin& pairs, const VertexSet& region,
                                   const Strategy& s, const FairnessGroups& groups = std::nullopt);

// Union over all memoryless P0 strategies of their winning starts. Throws
// std::length_error when the product of P0 out-degrees exceeds budget.
VertexSet brute_force_region(const GameGraph& g, const GenRabin& pairs, const FairnessGroups& groups = std::nullopt,
                             std::uint64_t budget = 1000000);
VertexSet brute_force_region(const GameGraph& g, const Rabin& pairs, const FairnessGroups& groups = std::nullopt,
                             std::uint64_t budget = 1000000);

// Plain Rabin arena equivalent to a condition, used for oracle checks.
// Safety-style conditions turn leaving vertices into sinks; strategies for
// the original arena carry over through adapt_strategy.
struct RabinEncoding {
  GameGraph game;
  Rabin cond;
  VertexSet sinks;
};
// Covers every class reducible to plain Rabin without memory: safe reach,
// safety, Buchi, safe Buchi, co-Buchi, generalized co-Buchi, Rabin, Rabin
// chain, parity. Throws std::invalid_argument for the others.
RabinEncoding encode_as_rabin(const GameGraph& g, const WinningCondition& cond);

// Same for every class, with generalized pairs.
struct GenRabinEncoding {
  GameGraph game;
  GenRabin cond;
  VertexSet sinks;
};
GenRabinEncoding encode_for_oracle(const GameGraph& g, const WinningCondition& cond);

// P0 sinks of the encoding loop on themselves.
Strategy adapt_strategy(const GameGraph& encoded, const VertexSet& sinks, const Strategy& s);

// Region of the generalized classes (generalized Buchi, generalized Rabin,
// GR(1), Muller) through the goal-counter product.
VertexSet brute_force_region_generalized(const GameGraph& g, const WinningCondition& cond,
                                         std::uint64_t budget = 1000000);
GenRabin as_gen_rabin(const GameGraph& g, const WinningCondition& cond);

}  // namespace fairgame
