#pragma once

#include <string>
#include <variant>
#include <vector>

#include "fairgame/game.hpp"
#include "fairgame/vertex_set.hpp"

namespace fairgame {

struct SafeReach { VertexSet T, Q; };
struct Safety { VertexSet Q; };
struct Buchi { VertexSet G; };
struct SafeBuchi { VertexSet G, Q; };
struct CoBuchi { VertexSet A; };
struct GenBuchi { std::vector<VertexSet> F; VertexSet Q; };
struct GenCoBuchi { std::vector<VertexSet> A; };

struct RabinPair { VertexSet G, R; };
struct Rabin { std::vector<RabinPair> pairs; };

// All goal sets must be visited infinitely often while R is eventually avoided.
struct GenRabinPair { std::vector<VertexSet> G; VertexSet R; };
struct GenRabin { std::vector<GenRabinPair> pairs; };

// Pairs with R_1 ⊇ ... ⊇ R_k and G_1 ⊇ ... ⊇ G_k.
struct RabinChain { std::vector<RabinPair> pairs; };

// colors[i] holds color i+1; the largest color seen infinitely often must be even.
struct Parity { std::vector<VertexSet> colors; };

// (∧_a □◊A_a) → (∧_b □◊F_b)
struct GR1 { std::vector<VertexSet> A, F; };

// Inf(play) must equal one of the F_i.
struct Muller { std::vector<VertexSet> F; };

using WinningCondition = std::variant<SafeReach, Safety, Buchi, SafeBuchi, CoBuchi, GenBuchi, GenCoBuchi,
                                      Rabin, GenRabin, RabinChain, Parity, GR1, Muller>;

// Keyword used by the file format ("safereach", "rabin", ...).
std::string condition_keyword(const WinningCondition& c);

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  bool ok() const { return errors.empty(); }
};

ValidationReport validate(const GameGraph& g);
ValidationReport validate(const GameGraph& g, const WinningCondition& cond);
ValidationReport validate(const StochasticGameGraph& g);

// Helpers shared by solvers and the oracle.
Rabin to_rabin(const RabinChain& c);
GenRabin to_gen_rabin(const Rabin& r);
bool is_chain(const std::vector<RabinPair>& pairs);

}  // namespace fairgame
