#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "fairgame/game.hpp"
#include "fairgame/vertex_set.hpp"

namespace fairgame {

enum class Op {
  PreExists0,
  PreForall1,
  Cpre,
  LpreExists,
  Apre,
  PreForall0,
  PreExists1,
  PreExists1MinusL,
  PreExistsL,
  LpreForall,
  kCount
};

const char* op_name(Op op);

// One tick per public operator application.
struct StepCounter {
  std::array<std::uint64_t, static_cast<std::size_t>(Op::kCount)> by_op{};
  std::uint64_t total() const;
  std::uint64_t operator[](Op op) const { return by_op[static_cast<std::size_t>(op)]; }
  void tick(Op op) { ++by_op[static_cast<std::size_t>(op)]; }
  StepCounter& operator+=(const StepCounter& o);
};

// Predecessor operators over a fixed graph. A vertex without successors never
// satisfies an existential membership, pre_forall_1 or lpre_forall. The P0
// universal operator keeps its vacuous reading.
class Operators {
 public:
  explicit Operators(const GameGraph& g, StepCounter* steps = nullptr);

  const GameGraph& graph() const { return g_; }

  VertexSet pre_exists_0(const VertexSet& S) const;
  VertexSet pre_forall_1(const VertexSet& S) const;
  VertexSet cpre(const VertexSet& S) const;
  VertexSet lpre_exists(const VertexSet& S) const;
  VertexSet apre(const VertexSet& S, const VertexSet& T) const;

  VertexSet pre_forall_0(const VertexSet& S) const;
  VertexSet pre_exists_1(const VertexSet& S) const;
  VertexSet pre_exists_1_minus_l(const VertexSet& S) const;
  VertexSet pre_exists_l(const VertexSet& S) const;
  VertexSet lpre_forall(const VertexSet& S) const;

  const VertexSet& p0() const { return p0_; }
  const VertexSet& p1() const { return p1_; }
  const VertexSet& live_domain() const { return live_dom_; }

 private:
  void tick(Op op) const {
    if (steps_) steps_->tick(op);
  }
  void check(const VertexSet& S) const;
  VertexSet exists_in(const VertexSet& S, const VertexSet& domain) const;
  VertexSet forall_in(const VertexSet& S, const VertexSet& domain, bool need_succ) const;

  const GameGraph& g_;
  StepCounter* steps_;
  VertexSet p0_, p1_, live_dom_, p1_not_live_;
  std::vector<std::vector<int>> live_succ_;
};

}  // namespace fairgame
