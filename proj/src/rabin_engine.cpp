#include "rabin_engine.hpp"

#include <stdexcept>

namespace fairgame::detail {

RabinEngine::RabinEngine(const Operators& ops, std::vector<EnginePair> pairs, bool chain, int accel,
                         std::map<std::string, std::uint64_t>* iterations)
    : ops_(ops),
      pairs_(std::move(pairs)),
      k_(static_cast<int>(pairs_.size()) - 1),
      chain_(chain),
      cache_(accel),
      iterations_(iterations) {
  if (k_ < 1) throw std::invalid_argument("Rabin condition needs at least one pair");
  if (k_ > 30) throw std::invalid_argument("too many Rabin pairs");
  for (int p = 0; p <= k_; ++p) {
    ynames_.push_back("Y" + std::to_string(p));
    std::vector<std::string> xs;
    const auto m = pairs_[static_cast<std::size_t>(p)].goals.size();
    for (std::size_t l = 0; l < m; ++l)
      xs.push_back("X" + std::to_string(p) + (m > 1 ? "." + std::to_string(l + 1) : ""));
    xnames_.push_back(std::move(xs));
  }
}

void RabinEngine::bump(const std::string& var) {
  if (iterations_) ++(*iterations_)[var];
}

std::vector<int> RabinEngine::remaining(int j, std::uint32_t used) const {
  if (chain_) return {k_ - j + 1};
  std::vector<int> out;
  for (int p = 1; p <= k_; ++p)
    if (!(used & (1U << p))) out.push_back(p);
  return out;
}

VertexSet RabinEngine::solve() {
  stack_.clear();
  const VertexSet all = ops_.graph().all();
  return nu_mu(0, 0, ops_.graph().none(), all, 0);
}

VertexSet RabinEngine::eval_level(int j, const VertexSet& S, const VertexSet& Q, std::uint32_t used) {
  VertexSet out = ops_.graph().none();
  for (int p : remaining(j, used)) out |= nu_mu(j, p, S, Q, used);
  return out;
}

VertexSet RabinEngine::nu_mu(int j, int p, const VertexSet& S, const VertexSet& Qouter, std::uint32_t used) {
  const auto& pair = pairs_[static_cast<std::size_t>(p)];
  const VertexSet Q = Qouter & pair.notR;
  const VertexSet all = ops_.graph().all();
  const int mp = static_cast<int>(pair.goals.size());

  // Only µ-variables are warm-started. Their seeds assume that every
  // enclosing ν-variable runs its canonical iterates from V; seeding the ν
  // variables as well breaks that and was seen to overshoot least fixpoints.
  VertexSet Y = all;

  for (int m = 0;; ++m) {
    VertexSet cp = p == 0 ? ops_.graph().none() : ops_.cpre(Y);
    VertexSet nextY = all;
    for (int l = 0; l < mp; ++l) {
      VertexSet gc = p == 0 ? ops_.graph().none() : Q & pair.goals[static_cast<std::size_t>(l)] & cp;

      std::vector<int> xstruct{kMuTag}, xcount;
      for (auto& lv : stack_) xstruct.push_back(lv.p);
      xstruct.push_back(p);
      for (auto& lv : stack_) xstruct.push_back(lv.l);
      xstruct.push_back(l);
      for (auto& lv : stack_) xcount.push_back(lv.m);
      xcount.push_back(m);

      VertexSet X = ops_.graph().none();
      if (auto* hit = cache_.find(xstruct, xcount)) X = *hit;
      for (int i = 0;; ++i) {
        VertexSet Snew = S | gc | (Q & ops_.apre(Y, X));
        stack_.push_back({p, l, m, i});
        VertexSet X2 = j == k_ ? Snew : eval_level(j + 1, Snew, Q, used | (1U << p));
        stack_.pop_back();
        bump(xnames_[static_cast<std::size_t>(p)][static_cast<std::size_t>(l)]);
        if (X2 == X) break;
        if (!X.subset_of(X2)) throw std::logic_error("least fixpoint iterate shrank");
        X = std::move(X2);
      }
      cache_.store(xstruct, xcount, X);
      nextY &= X;
    }
    bump(ynames_[static_cast<std::size_t>(p)]);
    if (nextY == Y) break;
    if (!nextY.subset_of(Y)) throw std::logic_error("greatest fixpoint iterate grew");
    Y = std::move(nextY);
  }
  return Y;
}

RabinTrace RabinEngine::record(const std::vector<int>& goals) {
  if (chain_) throw std::logic_error("rank recording needs full permutations");
  RabinTrace t;
  t.goals = goals;
  t.words.assign(static_cast<std::size_t>(ops_.graph().size()), std::nullopt);
  trace_ = &t;
  goals_ = &goals;
  stack_.clear();
  const VertexSet all = ops_.graph().all();
  VertexSet Y0 = nu_mu(0, 0, ops_.graph().none(), all, 0);
  t.nu_values.push_back({{0}, Y0});
  VertexSet X0 = record_mu(0, 0, Y0, ops_.graph().none(), all, 0, {});
  if (X0 != Y0) throw std::logic_error("recording pass disagrees with the solve");
  trace_ = nullptr;
  goals_ = nullptr;
  return t;
}

VertexSet RabinEngine::record_mu(int j, int p, const VertexSet& Ystar, const VertexSet& S, const VertexSet& Qouter,
                                 std::uint32_t used, const std::vector<int>& prefix) {
  const auto& pair = pairs_[static_cast<std::size_t>(p)];
  const VertexSet Q = Qouter & pair.notR;
  const int l = p == 0 ? 0 : (*goals_)[static_cast<std::size_t>(p - 1)];
  const VertexSet gc =
      p == 0 ? ops_.graph().none() : Q & pair.goals[static_cast<std::size_t>(l)] & ops_.cpre(Ystar);
  const std::uint32_t inner_used = used | (1U << p);
  const auto rest = j == k_ ? std::vector<int>{} : remaining(j + 1, inner_used);

  VertexSet X = ops_.graph().none();
  for (int i = 1;; ++i) {
    VertexSet Snew = S | gc | (Q & ops_.apre(Ystar, X));
    std::vector<int> here = prefix;
    here.push_back(p);
    here.push_back(i);
    std::vector<int> word = here;
    for (int q : rest) {
      word.push_back(q);
      word.push_back(0);
    }
    Snew.for_each([&](int v) {
      auto& w = trace_->words[static_cast<std::size_t>(v)];
      if (!w) w = word;
    });
    stack_.push_back({p, l, 0, i - 1});
    VertexSet X2 = ops_.graph().none();
    if (j == k_) {
      X2 = Snew;
    } else {
      for (int q : rest) {
        VertexSet Yq = nu_mu(j + 1, q, Snew, Q, inner_used);
        std::vector<int> key = here;
        key.push_back(q);
        trace_->nu_values.push_back({key, Yq});
        X2 |= record_mu(j + 1, q, Yq, Snew, Q, inner_used, here);
      }
    }
    stack_.pop_back();
    if (X2 == X) break;
    X = std::move(X2);
  }
  if (X != Ystar) throw std::logic_error("recorded least fixpoint differs from its greatest fixpoint");
  return X;
}

}  // namespace fairgame::detail
