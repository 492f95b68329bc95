#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "accel.hpp"
#include "fairgame/operators.hpp"
#include "fairgame/solvers.hpp"

namespace fairgame::detail {

struct EnginePair {
  std::vector<VertexSet> goals;
  VertexSet notR;
};

// Nested evaluation of the generalized Rabin fixpoint. Level 0 is the
// artificial pair with empty G and R; levels 1..k pick a pair each, either
// over all remaining pairs (ascending) or in the fixed order k..1 for chains.
class RabinEngine {
 public:
  RabinEngine(const Operators& ops, std::vector<EnginePair> pairs, bool chain, int accel,
              std::map<std::string, std::uint64_t>* iterations);

  VertexSet solve();

  // Rank-recording pass for one goal vector (0-based goal index per pair).
  // Requires accel == 0 and full permutations.
  RabinTrace record(const std::vector<int>& goals);

 private:
  struct Level {
    int p, l, m, i;
  };

  VertexSet eval_level(int j, const VertexSet& S, const VertexSet& Q, std::uint32_t used);
  VertexSet nu_mu(int j, int p, const VertexSet& S, const VertexSet& Q, std::uint32_t used);
  VertexSet record_mu(int j, int p, const VertexSet& Ystar, const VertexSet& S, const VertexSet& Q,
                      std::uint32_t used, const std::vector<int>& prefix);
  std::vector<int> remaining(int j, std::uint32_t used) const;
  void bump(const std::string& var);

  const Operators& ops_;
  std::vector<EnginePair> pairs_;  // index 0 is the artificial pair
  int k_;
  bool chain_;
  AccelCache cache_;
  std::map<std::string, std::uint64_t>* iterations_;
  std::vector<Level> stack_;
  std::vector<std::string> ynames_;
  std::vector<std::vector<std::string>> xnames_;
  // recording state
  RabinTrace* trace_ = nullptr;
  const std::vector<int>* goals_ = nullptr;
};

}  // namespace fairgame::detail
