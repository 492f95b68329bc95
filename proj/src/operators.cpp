#include "fairgame/operators.hpp"

#include <stdexcept>

namespace fairgame {

const char* op_name(Op op) {
  switch (op) {
    case Op::PreExists0: return "pre_exists_0";
    case Op::PreForall1: return "pre_forall_1";
    case Op::Cpre: return "cpre";
    case Op::LpreExists: return "lpre_exists";
    case Op::Apre: return "apre";
    case Op::PreForall0: return "pre_forall_0";
    case Op::PreExists1: return "pre_exists_1";
    case Op::PreExists1MinusL: return "pre_exists_1_minus_l";
    case Op::PreExistsL: return "pre_exists_l";
    case Op::LpreForall: return "lpre_forall";
    case Op::kCount: break;
  }
  return "?";
}

std::uint64_t StepCounter::total() const {
  std::uint64_t t = 0;
  for (auto c : by_op) t += c;
  return t;
}

StepCounter& StepCounter::operator+=(const StepCounter& o) {
  for (std::size_t i = 0; i < by_op.size(); ++i) by_op[i] += o.by_op[i];
  return *this;
}

Operators::Operators(const GameGraph& g, StepCounter* steps)
    : g_(g),
      steps_(steps),
      p0_(g.owned_by(Owner::P0)),
      p1_(g.owned_by(Owner::P1)),
      live_dom_(g.live_domain()),
      p1_not_live_(p1_ - live_dom_) {
  live_succ_.resize(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) live_succ_[static_cast<std::size_t>(v)] = g.live_successors(v);
}

void Operators::check(const VertexSet& S) const {
  if (S.universe() != static_cast<std::size_t>(g_.size())) throw std::invalid_argument("vertex set universe mismatch");
}

VertexSet Operators::exists_in(const VertexSet& S, const VertexSet& domain) const {
  check(S);
  VertexSet out(S.universe());
  domain.for_each([&](int v) {
    for (int w : g_.successors(v))
      if (S.contains(w)) {
        out.insert(v);
        return;
      }
  });
  return out;
}

VertexSet Operators::forall_in(const VertexSet& S, const VertexSet& domain, bool need_succ) const {
  check(S);
  VertexSet out(S.universe());
  domain.for_each([&](int v) {
    const auto& succ = g_.successors(v);
    if (need_succ && succ.empty()) return;
    for (int w : succ)
      if (!S.contains(w)) return;
    out.insert(v);
  });
  return out;
}

VertexSet Operators::pre_exists_0(const VertexSet& S) const {
  tick(Op::PreExists0);
  return exists_in(S, p0_);
}

VertexSet Operators::pre_forall_1(const VertexSet& S) const {
  tick(Op::PreForall1);
  return forall_in(S, p1_, true);
}

VertexSet Operators::cpre(const VertexSet& S) const {
  tick(Op::Cpre);
  return exists_in(S, p0_) | forall_in(S, p1_, true);
}

VertexSet Operators::lpre_exists(const VertexSet& S) const {
  tick(Op::LpreExists);
  check(S);
  VertexSet out(S.universe());
  live_dom_.for_each([&](int v) {
    for (int w : live_succ_[static_cast<std::size_t>(v)])
      if (S.contains(w)) {
        out.insert(v);
        return;
      }
  });
  return out;
}

VertexSet Operators::apre(const VertexSet& S, const VertexSet& T) const {
  tick(Op::Apre);
  check(S);
  check(T);
  VertexSet out = exists_in(T, p0_) | forall_in(T, p1_, true);
  // live progress towards T while staying in S
  live_dom_.for_each([&](int v) {
    if (out.contains(v)) return;
    bool live_hit = false;
    for (int w : live_succ_[static_cast<std::size_t>(v)]) live_hit = live_hit || T.contains(w);
    if (!live_hit) return;
    for (int w : g_.successors(v))
      if (!S.contains(w)) return;
    out.insert(v);
  });
  return out;
}

VertexSet Operators::pre_forall_0(const VertexSet& S) const {
  tick(Op::PreForall0);
  return forall_in(S, p0_, false);
}

VertexSet Operators::pre_exists_1(const VertexSet& S) const {
  tick(Op::PreExists1);
  return exists_in(S, p1_);
}

VertexSet Operators::pre_exists_1_minus_l(const VertexSet& S) const {
  tick(Op::PreExists1MinusL);
  return exists_in(S, p1_not_live_);
}

VertexSet Operators::pre_exists_l(const VertexSet& S) const {
  tick(Op::PreExistsL);
  return exists_in(S, live_dom_);
}

VertexSet Operators::lpre_forall(const VertexSet& S) const {
  tick(Op::LpreForall);
  check(S);
  VertexSet out(S.universe());
  live_dom_.for_each([&](int v) {
    for (int w : live_succ_[static_cast<std::size_t>(v)])
      if (!S.contains(w)) return;
    out.insert(v);
  });
  return out;
}

}  // namespace fairgame
