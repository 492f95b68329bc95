#include "fairgame/solvers.hpp"

#include <stdexcept>
#include <variant>

#include "accel.hpp"
#include "fairgame/transforms.hpp"
#include "rabin_engine.hpp"

namespace fairgame {

namespace {

using detail::AccelCache;
using detail::kMuTag;
using detail::kNuTag;

template <class... Ts>
struct overloaded : Ts... { using Ts::operator()...; };

void require_valid(const GameGraph& g) {
  auto r = validate(g);
  if (!r.ok()) throw std::invalid_argument(r.errors.front());
}

void check_set(const GameGraph& g, const VertexSet& s) {
  if (s.universe() != static_cast<std::size_t>(g.size())) throw std::invalid_argument("vertex set universe mismatch");
}

void grow(const VertexSet& X, const VertexSet& X2) {
  if (!X.subset_of(X2)) throw std::logic_error("least fixpoint iterate shrank");
}

void shrink(const VertexSet& Y, const VertexSet& Y2) {
  if (!Y2.subset_of(Y)) throw std::logic_error("greatest fixpoint iterate grew");
}

// νY. µX. body(Y, X), keeping the X iterates of the last outer pass.
template <class Body>
SolveResult nu_mu_2(const GameGraph& g, const SolveOptions& o, Body body, bool keep_layers) {
  SolveResult res;
  Operators ops(g, &res.steps);
  AccelCache cache(o.accel);
  VertexSet Y = g.all();
  std::vector<VertexSet> layers;
  for (int m = 0;; ++m) {
    VertexSet X = g.none();
    if (auto* hit = cache.find({kMuTag}, {m})) X = *hit;
    layers.clear();
    for (;;) {
      VertexSet X2 = body(ops, Y, X);
      ++res.iterations["X"];
      if (keep_layers) layers.push_back(X2);
      if (X2 == X) break;
      grow(X, X2);
      X = std::move(X2);
    }
    if (keep_layers) layers.pop_back();  // repeated final value
    cache.store({kMuTag}, {m}, X);
    ++res.iterations["Y"];
    if (X == Y) break;
    shrink(Y, X);
    Y = std::move(X);
  }
  res.region = Y;
  if (keep_layers) {
    auto f = std::make_shared<Frames>();
    f->kind = Frames::Kind::Reach;
    f->layers = std::move(layers);
    res.frames = f;
  }
  return res;
}

template <class Solver>
SolveResult with_frames(const SolveOptions& o, Solver run) {
  if (!o.record || o.accel == 0) return run(o);
  SolveResult fast = run(SolveOptions{o.accel, false});
  SolveResult slow = run(SolveOptions{0, true});
  if (slow.region != fast.region) throw std::logic_error("accelerated region differs from the plain one");
  fast.frames = slow.frames;
  return fast;
}

std::vector<detail::EnginePair> engine_pairs(const GameGraph& g, const GenRabin& c) {
  std::vector<detail::EnginePair> out;
  out.push_back({{g.none()}, g.all()});
  for (auto& p : c.pairs) {
    if (p.G.empty()) throw std::invalid_argument("generalized pair without goal sets");
    for (auto& s : p.G) check_set(g, s);
    check_set(g, p.R);
    out.push_back({p.G, p.R.complement()});
  }
  return out;
}

std::vector<int> decode(int code, const std::vector<int>& radix) {
  std::vector<int> d(radix.size());
  for (std::size_t i = 0; i < radix.size(); ++i) {
    d[i] = code % radix[i];
    code /= radix[i];
  }
  return d;
}

SolveResult run_engine(const GameGraph& g, const GenRabin& c, bool chain, const SolveOptions& o) {
  require_valid(g);
  SolveResult res;
  Operators ops(g, &res.steps);
  detail::RabinEngine engine(ops, engine_pairs(g, c), chain, o.accel, &res.iterations);
  res.region = engine.solve();
  if (o.record) {
    Operators quiet(g);
    detail::RabinEngine rec(quiet, engine_pairs(g, c), false, 0, nullptr);
    auto f = std::make_shared<Frames>();
    f->kind = Frames::Kind::Rabin;
    int total = 1;
    for (auto& p : c.pairs) {
      f->goal_sets.push_back(p.G);
      f->radix.push_back(static_cast<int>(p.G.size()));
      total *= static_cast<int>(p.G.size());
    }
    for (int code = 0; code < total; ++code) {
      f->traces.push_back(rec.record(decode(code, f->radix)));
      if (f->traces.back().nu_values.front().second != res.region)
        throw std::logic_error("recording pass disagrees with the solve");
    }
    res.frames = f;
  }
  return res;
}

}  // namespace

SolveResult solve_safe_reach(const GameGraph& g, const VertexSet& T, const VertexSet& Q, const SolveOptions& o) {
  require_valid(g);
  check_set(g, T);
  check_set(g, Q);
  return with_frames(o, [&](const SolveOptions& oo) {
    return nu_mu_2(
        g, oo, [&](const Operators& ops, const VertexSet& Y, const VertexSet& X) { return T | (Q & ops.apre(Y, X)); },
        oo.record);
  });
}

SolveResult solve_reach_classic(const GameGraph& g, const VertexSet& T, const VertexSet& Q, const SolveOptions& o) {
  check_set(g, T);
  check_set(g, Q);
  SolveResult res;
  Operators ops(g, &res.steps);
  VertexSet X = g.none();
  std::vector<VertexSet> layers;
  for (;;) {
    VertexSet X2 = T | (Q & ops.cpre(X));
    ++res.iterations["X"];
    if (X2 == X) break;
    grow(X, X2);
    X = std::move(X2);
    layers.push_back(X);
  }
  res.region = X;
  if (o.record) {
    auto f = std::make_shared<Frames>();
    f->kind = Frames::Kind::Reach;
    f->layers = std::move(layers);
    res.frames = f;
  }
  return res;
}

SolveResult solve_dual_reach(const GameGraph& g, const VertexSet& T, const VertexSet& Q, const SolveOptions& o) {
  require_valid(g);
  check_set(g, T);
  check_set(g, Q);
  SolveResult res;
  Operators ops(g, &res.steps);
  AccelCache cache(o.accel);
  const VertexSet notT = T.complement();
  const VertexSet notQ = Q.complement();
  // P1 dead ends outside T are lost for P0 but not covered by the dual operators.
  const VertexSet p1_dead = g.dead_ends() & g.owned_by(Owner::P1);
  std::vector<VertexSet> layers;
  VertexSet Yb = g.none();
  for (int m = 0;; ++m) {
    VertexSet Xb = g.all();
    if (auto* hit = cache.find({kNuTag}, {m})) Xb = *hit;
    VertexSet from_y = ops.pre_exists_l(Yb);
    for (;;) {
      VertexSet X2 = notT & (notQ | p1_dead | ops.pre_forall_0(Xb) | ops.pre_exists_1_minus_l(Xb) |
                             ops.lpre_forall(Xb) | from_y);
      ++res.iterations["Xbar"];
      if (X2 == Xb) break;
      shrink(Xb, X2);
      Xb = std::move(X2);
    }
    cache.store({kNuTag}, {m}, Xb);
    ++res.iterations["Ybar"];
    if (Xb == Yb) break;
    grow(Yb, Xb);
    Yb = std::move(Xb);
    layers.push_back(Yb);
  }
  res.region = Yb;
  if (o.record) {
    auto f = std::make_shared<Frames>();
    f->kind = Frames::Kind::DualReach;
    f->layers = std::move(layers);
    res.frames = f;
  }
  return res;
}

SolveResult solve_safety(const GameGraph& g, const VertexSet& Q, const SolveOptions& o) {
  require_valid(g);
  check_set(g, Q);
  SolveResult res;
  Operators ops(g, &res.steps);
  VertexSet Y = g.all();
  for (;;) {
    VertexSet Y2 = Q & ops.cpre(Y);
    ++res.iterations["Y"];
    if (Y2 == Y) break;
    shrink(Y, Y2);
    Y = std::move(Y2);
  }
  res.region = Y;
  if (o.record) {
    auto f = std::make_shared<Frames>();
    f->kind = Frames::Kind::Safety;
    f->layers = {Y};
    res.frames = f;
  }
  return res;
}

SolveResult solve_safe_buchi(const GameGraph& g, const VertexSet& G, const VertexSet& Q, const SolveOptions& o) {
  require_valid(g);
  check_set(g, G);
  check_set(g, Q);
  return with_frames(o, [&](const SolveOptions& oo) {
    // G ∩ Cpre(Y) is constant during one µ pass
    VertexSet cached_y;
    VertexSet gc;
    return nu_mu_2(
        g, oo,
        [&](const Operators& ops, const VertexSet& Y, const VertexSet& X) {
          if (cached_y.universe() == 0 || cached_y != Y) {
            cached_y = Y;
            gc = G & ops.cpre(Y);
          }
          return Q & (gc | ops.apre(Y, X));
        },
        oo.record);
  });
}

SolveResult solve_safe_gen_buchi(const GameGraph& g, const std::vector<VertexSet>& F, const VertexSet& Q,
                                 const SolveOptions& o) {
  require_valid(g);
  if (F.empty()) throw std::invalid_argument("generalized Buchi needs s >= 1");
  for (auto& f : F) check_set(g, f);
  check_set(g, Q);
  return with_frames(o, [&](const SolveOptions& oo) {
    SolveResult res;
    Operators ops(g, &res.steps);
    AccelCache cache(oo.accel);
    const int s = static_cast<int>(F.size());
    VertexSet Y = g.all();
    std::vector<std::vector<VertexSet>> goal_layers(F.size());
    for (int m = 0;; ++m) {
      VertexSet cp = ops.cpre(Y);
      VertexSet nextY = g.all();
      for (int b = 0; b < s; ++b) {
        VertexSet gc = Q & F[static_cast<std::size_t>(b)] & cp;
        VertexSet X = g.none();
        if (auto* hit = cache.find({kMuTag, b}, {m})) X = *hit;
        auto& layers = goal_layers[static_cast<std::size_t>(b)];
        layers.clear();
        const std::string name = "X" + std::to_string(b + 1);
        for (;;) {
          VertexSet X2 = gc | (Q & ops.apre(Y, X));
          ++res.iterations[name];
          if (X2 == X) break;
          grow(X, X2);
          X = std::move(X2);
          layers.push_back(X);
        }
        cache.store({kMuTag, b}, {m}, X);
        nextY &= X;
      }
      ++res.iterations["Y"];
      if (nextY == Y) break;
      shrink(Y, nextY);
      Y = std::move(nextY);
    }
    res.region = Y;
    if (oo.record) {
      auto f = std::make_shared<Frames>();
      f->kind = Frames::Kind::GenBuchi;
      f->goal_layers = std::move(goal_layers);
      res.frames = f;
    }
    return res;
  });
}

SolveResult solve_rabin(const GameGraph& g, const Rabin& c, const SolveOptions& o) {
  return run_engine(g, to_gen_rabin(c), false, o);
}

SolveResult solve_gen_rabin(const GameGraph& g, const GenRabin& c, const SolveOptions& o) {
  return run_engine(g, c, false, o);
}

SolveResult solve_rabin_chain(const GameGraph& g, const RabinChain& c, const SolveOptions& o) {
  if (!is_chain(c.pairs)) throw std::invalid_argument("pairs are not a chain");
  SolveResult res = run_engine(g, to_gen_rabin(to_rabin(c)), true, SolveOptions{o.accel, false});
  if (o.record) {
    SolveResult full = run_engine(g, to_gen_rabin(to_rabin(c)), false, SolveOptions{0, true});
    if (full.region != res.region) throw std::logic_error("chain and full Rabin recursion disagree");
    res.frames = full.frames;
  }
  return res;
}

namespace {

// Nested parity evaluation: depth 0 is Y_{2k}, depth 1 is X_{2k-1}, ...,
// depth 2k-1 is X_1. vals[d] holds the current value of that variable.
class ParityEval {
 public:
  ParityEval(const GameGraph& g, const Parity& c, bool fair, int accel, SolveResult& res)
      : g_(g), c_(c), fair_(fair), cache_(accel), res_(res), ops_(g, &res.steps) {
    depth_ = static_cast<int>(c.colors.size());
    vals_.assign(static_cast<std::size_t>(depth_), g.none());
    counters_.assign(static_cast<std::size_t>(depth_), 0);
    for (int d = 0; d < depth_; ++d) {
      int color = depth_ - d;
      names_.push_back((color % 2 == 0 ? "Y" : "X") + std::to_string(color));
    }
  }

  VertexSet run() { return eval(0); }

 private:
  VertexSet body() {
    VertexSet out = g_.none();
    VertexSet lower = g_.none();  // C_1 ∪ ... ∪ C_{2i-1}
    for (int i = 1; 2 * i <= depth_; ++i) {
      const VertexSet& Codd = c_.colors[static_cast<std::size_t>(2 * i - 2)];
      const VertexSet& Ceven = c_.colors[static_cast<std::size_t>(2 * i - 1)];
      const VertexSet& Y = val(2 * i);
      const VertexSet& X = val(2 * i - 1);
      lower |= Codd;
      out |= Ceven & ops_.cpre(Y);
      if (fair_)
        out |= lower & ops_.apre(Y, X);
      else
        out |= Codd & ops_.cpre(X);
      lower |= Ceven;
    }
    return out;
  }

  const VertexSet& val(int color) const { return vals_[static_cast<std::size_t>(depth_ - color)]; }

  VertexSet eval(int d) {
    if (d == depth_) return body();
    const bool nu = d % 2 == 0;
    // µ-variables only, keyed by the enclosing ν counters (same reasoning as the Rabin engine)
    std::vector<int> structure{kMuTag, d}, counters;
    for (int e = 0; e < d; e += 2) counters.push_back(counters_[static_cast<std::size_t>(e)]);
    auto& v = vals_[static_cast<std::size_t>(d)];
    v = nu ? g_.all() : g_.none();
    if (!nu)
      if (auto* hit = cache_.find(structure, counters)) v = *hit;
    for (int it = 0;; ++it) {
      counters_[static_cast<std::size_t>(d)] = it;
      VertexSet next = eval(d + 1);
      ++res_.iterations[names_[static_cast<std::size_t>(d)]];
      if (next == v) break;
      if (nu)
        shrink(v, next);
      else
        grow(v, next);
      v = std::move(next);
    }
    if (!nu) cache_.store(structure, counters, v);
    return v;
  }

  const GameGraph& g_;
  const Parity& c_;
  bool fair_;
  AccelCache cache_;
  SolveResult& res_;
  Operators ops_;
  int depth_ = 0;
  std::vector<VertexSet> vals_;
  std::vector<int> counters_;
  std::vector<std::string> names_;
};

SolveResult parity_common(const GameGraph& g, const Parity& c, bool fair, const SolveOptions& o) {
  auto r = validate(g, c);
  if (!r.ok()) throw std::invalid_argument(r.errors.front());
  SolveResult res;
  ParityEval eval(g, c, fair, o.accel, res);
  res.region = eval.run();
  if (o.record) {
    SolveResult full = solve_rabin(g, to_rabin(parity_to_rabin_chain(c, g.size())), SolveOptions{0, true});
    if (fair && full.region != res.region) throw std::logic_error("parity and Rabin recursion disagree");
    res.frames = full.frames;
  }
  return res;
}

}  // namespace

SolveResult solve_parity(const GameGraph& g, const Parity& c, const SolveOptions& o) {
  return parity_common(g, c, true, o);
}

SolveResult solve_parity_classic(const GameGraph& g, const Parity& c, const SolveOptions& o) {
  return parity_common(g, c, false, o);
}

SolveResult solve_gen_cobuchi(const GameGraph& g, const GenCoBuchi& c, const SolveOptions& o) {
  require_valid(g);
  if (c.A.empty()) throw std::invalid_argument("generalized co-Buchi needs r >= 1");
  for (auto& a : c.A) check_set(g, a);
  SolveResult res;
  Operators ops(g, &res.steps);
  AccelCache cache(o.accel);
  const int r = static_cast<int>(c.A.size());
  VertexSet Y0 = g.all();
  for (int m0 = 0;; ++m0) {
    VertexSet X0 = g.none();
    if (auto* hit = cache.find({kMuTag}, {m0})) X0 = *hit;
    for (int i0 = 0;; ++i0) {
      VertexSet base = ops.apre(Y0, X0);
      VertexSet X2 = g.none();
      for (int a = 0; a < r; ++a) {
        const VertexSet& A = c.A[static_cast<std::size_t>(a)];
        VertexSet Ya = g.all();
        if (auto* hit = cache.find({kNuTag, a}, {i0})) Ya = *hit;
        const std::string name = "Y" + std::to_string(a + 1);
        for (;;) {
          VertexSet next = base | (A & ops.cpre(Ya));
          ++res.iterations[name];
          if (next == Ya) break;
          shrink(Ya, next);
          Ya = std::move(next);
        }
        cache.store({kNuTag, a}, {i0}, Ya);
        X2 |= Ya;
      }
      ++res.iterations["X0"];
      if (X2 == X0) break;
      grow(X0, X2);
      X0 = std::move(X2);
    }
    cache.store({kMuTag}, {m0}, X0);
    ++res.iterations["Y0"];
    if (X0 == Y0) break;
    shrink(Y0, X0);
    Y0 = std::move(X0);
  }
  res.region = Y0;
  if (o.record) {
    SolveResult full = solve_rabin(g, gen_cobuchi_to_rabin(c, g.size()), SolveOptions{0, true});
    if (full.region != res.region) throw std::logic_error("co-Buchi and Rabin recursion disagree");
    res.frames = full.frames;
  }
  return res;
}

SolveResult solve_gr1(const GameGraph& g, const GR1& c, const SolveOptions& o) {
  require_valid(g);
  if (c.A.empty() || c.F.empty()) throw std::invalid_argument("GR(1) needs r >= 1 and s >= 1");
  for (auto& a : c.A) check_set(g, a);
  for (auto& f : c.F) check_set(g, f);
  SolveResult res;
  Operators ops(g, &res.steps);
  AccelCache cache(o.accel);
  const int r = static_cast<int>(c.A.size());
  const int s = static_cast<int>(c.F.size());
  std::vector<VertexSet> notA;
  for (auto& a : c.A) notA.push_back(a.complement());
  VertexSet Yk = g.all();
  for (int m = 0;; ++m) {
    VertexSet cp = ops.cpre(Yk);
    VertexSet nextY = g.all();
    for (int b = 0; b < s; ++b) {
      VertexSet fc = c.F[static_cast<std::size_t>(b)] & cp;
      VertexSet X = g.none();
      if (auto* hit = cache.find({kMuTag, b}, {m})) X = *hit;
      const std::string xname = "X" + std::to_string(b + 1);
      for (int i = 0;; ++i) {
        VertexSet base = fc | ops.apre(Yk, X);
        VertexSet X2 = g.none();
        for (int a = 0; a < r; ++a) {
          VertexSet Ya = g.all();
          if (auto* hit = cache.find({kNuTag, b, a}, {i})) Ya = *hit;
          const std::string yname = "Y" + std::to_string(a + 1);
          for (;;) {
            VertexSet next = base | (notA[static_cast<std::size_t>(a)] & ops.cpre(Ya));
            ++res.iterations[yname];
            if (next == Ya) break;
            shrink(Ya, next);
            Ya = std::move(next);
          }
          cache.store({kNuTag, b, a}, {i}, Ya);
          X2 |= Ya;
        }
        ++res.iterations[xname];
        if (X2 == X) break;
        grow(X, X2);
        X = std::move(X2);
      }
      cache.store({kMuTag, b}, {m}, X);
      nextY &= X;
    }
    ++res.iterations["Yk"];
    if (nextY == Yk) break;
    shrink(Yk, nextY);
    Yk = std::move(nextY);
  }
  res.region = Yk;
  if (o.record) {
    SolveResult full = solve_gen_rabin(g, gr1_to_gen_rabin(c, g.size()), SolveOptions{0, true});
    if (full.region != res.region) throw std::logic_error("GR(1) and generalized Rabin recursion disagree");
    res.frames = full.frames;
  }
  return res;
}

SolveResult solve(const GameGraph& g, const WinningCondition& c, const SolveOptions& o) {
  auto report = validate(g, c);
  if (!report.ok()) throw std::invalid_argument(report.errors.front());
  const int n = g.size();
  return std::visit(
      overloaded{
          [&](const SafeReach& x) { return solve_safe_reach(g, x.T, x.Q, o); },
          [&](const Safety& x) { return solve_safety(g, x.Q, o); },
          [&](const Buchi& x) { return solve_safe_buchi(g, x.G, g.all(), o); },
          [&](const SafeBuchi& x) { return solve_safe_buchi(g, x.G, x.Q, o); },
          [&](const CoBuchi& x) { return solve_gen_cobuchi(g, GenCoBuchi{{x.A}}, o); },
          [&](const GenBuchi& x) { return solve_safe_gen_buchi(g, x.F, x.Q, o); },
          [&](const GenCoBuchi& x) { return solve_gen_cobuchi(g, x, o); },
          [&](const Rabin& x) { return solve_rabin(g, x, o); },
          [&](const GenRabin& x) { return solve_gen_rabin(g, x, o); },
          [&](const RabinChain& x) { return solve_rabin_chain(g, x, o); },
          [&](const Parity& x) { return solve_parity(g, x, o); },
          [&](const GR1& x) { return solve_gr1(g, x, o); },
          [&](const Muller& x) { return solve_gen_rabin(g, muller_to_gen_rabin(x, n), o); },
      },
      c);
}

}  // namespace fairgame
