#include "fairgame/stochastic.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace fairgame {

GameGraph derand(const StochasticGameGraph& sg) {
  auto rep = validate(sg);
  if (!rep.ok()) throw std::invalid_argument(rep.errors.front());
  GameGraph g;
  for (int v = 0; v < sg.size(); ++v) g.add_vertex(sg.owner(v) == Owner::P0 ? Owner::P0 : Owner::P1, sg.name(v));
  for (int v = 0; v < sg.size(); ++v)
    for (int w : sg.successors(v)) g.add_edge(v, w, sg.owner(v) == Owner::Random);
  return g;
}

SolveResult solve_almost_sure(const StochasticGameGraph& sg, const WinningCondition& cond, const SolveOptions& o) {
  return solve(derand(sg), cond, o);
}

namespace {

void require_mdp(const StochasticGameGraph& mdp) {
  for (int v = 0; v < mdp.size(); ++v)
    if (mdp.owner(v) == Owner::P1 && mdp.successors(v).size() != 1)
      throw std::invalid_argument("not a 1.5-player arena: P1 vertex " + mdp.name(v) + " has a choice");
}

// SCCs (with an internal edge) of the arena restricted to `within`.
std::vector<VertexSet> components(const StochasticGameGraph& g, const VertexSet& within) {
  const int n = g.size();
  std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0), stack;
  std::vector<bool> on(static_cast<std::size_t>(n), false);
  std::vector<VertexSet> out;
  int counter = 0;
  std::function<void(int)> dfs = [&](int v) {
    index[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = counter++;
    stack.push_back(v);
    on[static_cast<std::size_t>(v)] = true;
    for (int w : g.successors(v)) {
      if (!within.contains(w)) continue;
      if (index[static_cast<std::size_t>(w)] < 0) {
        dfs(w);
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
      } else if (on[static_cast<std::size_t>(w)]) {
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
      }
    }
    if (low[static_cast<std::size_t>(v)] != index[static_cast<std::size_t>(v)]) return;
    VertexSet c(static_cast<std::size_t>(n));
    int w;
    do {
      w = stack.back();
      stack.pop_back();
      on[static_cast<std::size_t>(w)] = false;
      c.insert(w);
    } while (w != v);
    bool edge = c.count() > 1;
    for (int x : g.successors(v)) edge = edge || x == v;
    if (edge) out.push_back(c);
  };
  within.for_each([&](int v) {
    if (index[static_cast<std::size_t>(v)] < 0) dfs(v);
  });
  return out;
}

}  // namespace

MecDecomposition mec_decompose(const StochasticGameGraph& mdp) { return mec_decompose(mdp, mdp.all()); }

MecDecomposition mec_decompose(const StochasticGameGraph& mdp, const VertexSet& within) {
  require_mdp(mdp);
  MecDecomposition out;
  std::vector<VertexSet> work{within};
  while (!work.empty()) {
    VertexSet W = work.back();
    work.pop_back();
    for (auto& C : components(mdp, W)) {
      VertexSet drop(C.universe());
      C.for_each([&](int v) {
        const auto& succ = mdp.successors(v);
        if (mdp.owner(v) == Owner::P0) {
          if (std::none_of(succ.begin(), succ.end(), [&](int w) { return C.contains(w); })) drop.insert(v);
        } else if (std::any_of(succ.begin(), succ.end(), [&](int w) { return !C.contains(w); })) {
          drop.insert(v);
        }
      });
      if (drop.empty())
        out.components.push_back(C);
      else if (C != drop)
        work.push_back(C - drop);
    }
  }
  std::sort(out.components.begin(), out.components.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
  return out;
}

bool good_end_component(const VertexSet& U, const GenRabin& cond) {
  for (auto& p : cond.pairs) {
    if (U.intersects(p.R)) continue;
    bool all = true;
    for (auto& goal : p.G) all = all && U.intersects(goal);
    if (all) return true;
  }
  return false;
}

namespace {

// Goal-counter product of an MDP with plain Rabin pairs on the product.
struct MdpProduct {
  StochasticGameGraph arena;
  GenRabin cond;
  int n = 0;
};

MdpProduct mdp_product(const StochasticGameGraph& g, const GenRabin& c) {
  MdpProduct out;
  const int n = g.size();
  out.n = n;
  std::vector<int> radix;
  int mem = 1;
  for (auto& p : c.pairs) {
    radix.push_back(static_cast<int>(p.G.size()));
    mem *= radix.back();
  }
  const auto N = static_cast<std::size_t>(n * mem);
  for (int m = 0; m < mem; ++m)
    for (int v = 0; v < n; ++v) out.arena.add_vertex(g.owner(v), g.name(v) + "#" + std::to_string(m));
  for (std::size_t i = 0; i < c.pairs.size(); ++i) out.cond.pairs.push_back({{VertexSet(N)}, VertexSet(N)});
  for (int m = 0; m < mem; ++m) {
    std::vector<int> d(radix.size());
    for (std::size_t i = 0, code = static_cast<std::size_t>(m); i < radix.size(); ++i) {
      d[i] = static_cast<int>(code % static_cast<std::size_t>(radix[i]));
      code /= static_cast<std::size_t>(radix[i]);
    }
    for (int v = 0; v < n; ++v) {
      const int x = m * n + v;
      auto nd = d;
      for (std::size_t i = 0; i < radix.size(); ++i) {
        if (c.pairs[i].G[static_cast<std::size_t>(d[i])].contains(v)) {
          nd[i] = (d[i] + 1) % radix[i];
          if (d[i] == radix[i] - 1) out.cond.pairs[i].G[0].insert(x);
        }
        if (c.pairs[i].R.contains(v)) out.cond.pairs[i].R.insert(x);
      }
      int nm = 0;
      for (std::size_t i = radix.size(); i-- > 0;) nm = nm * radix[i] + nd[i];
      for (int w : g.successors(v)) out.arena.add_edge(x, nm * n + w);
    }
  }
  return out;
}

VertexSet memoryless_oracle(const StochasticGameGraph& g, const GenRabin& cond, std::uint64_t budget) {
  const int n = g.size();
  std::vector<int> choosers;
  std::uint64_t count = 1;
  for (int v = 0; v < n; ++v)
    if (g.owner(v) == Owner::P0 && g.successors(v).size() > 1) {
      choosers.push_back(v);
      count *= g.successors(v).size();
      if (count > budget) throw std::length_error("strategy enumeration exceeds the budget");
    }
  std::vector<std::size_t> digit(choosers.size(), 0);
  VertexSet region(static_cast<std::size_t>(n));
  for (;;) {
    // induced chain: P0 vertices keep only the chosen edge
    StochasticGameGraph chain;
    for (int v = 0; v < n; ++v)
      chain.add_vertex(g.owner(v) == Owner::P0 && !g.successors(v).empty() ? Owner::P1 : g.owner(v));
    for (int v = 0; v < n; ++v) {
      const auto& succ = g.successors(v);
      if (g.owner(v) == Owner::P0 && !succ.empty()) {
        auto it = std::find(choosers.begin(), choosers.end(), v);
        std::size_t pick = it == choosers.end() ? 0 : digit[static_cast<std::size_t>(it - choosers.begin())];
        chain.add_edge(v, succ[pick]);
      } else {
        for (int w : succ) chain.add_edge(v, w);
      }
    }
    VertexSet bad(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
      if (chain.successors(v).empty()) bad.insert(v);
    for (auto& U : mec_decompose(chain).components)
      if (!good_end_component(U, cond)) bad |= U;
    // vertices that reach a bad component
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < n; ++v) {
        if (bad.contains(v)) continue;
        for (int w : chain.successors(v))
          if (bad.contains(w)) {
            bad.insert(v);
            changed = true;
            break;
          }
      }
    }
    region |= bad.complement();
    std::size_t i = 0;
    for (; i < choosers.size(); ++i) {
      if (++digit[i] < g.successors(choosers[i]).size()) break;
      digit[i] = 0;
    }
    if (i == choosers.size()) break;
  }
  return region;
}

}  // namespace

VertexSet mdp_almost_sure_oracle(const StochasticGameGraph& mdp, const GenRabin& cond, std::uint64_t budget) {
  require_mdp(mdp);
  bool plain = true;
  for (auto& p : cond.pairs) plain = plain && p.G.size() == 1;
  if (plain) return memoryless_oracle(mdp, cond, budget);
  auto prod = mdp_product(mdp, cond);
  VertexSet r = memoryless_oracle(prod.arena, prod.cond, budget);
  VertexSet out(static_cast<std::size_t>(mdp.size()));
  for (int v = 0; v < mdp.size(); ++v)
    if (r.contains(v)) out.insert(v);
  return out;
}

}  // namespace fairgame
