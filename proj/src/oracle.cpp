#include "fairgame/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "fairgame/transforms.hpp"

namespace fairgame {

namespace {

template <class... Ts>
struct overloaded : Ts... { using Ts::operator()...; };

// Strategy-restricted play graph over (vertex, memory) states.
struct PlayGraph {
  int n = 0;
  int states = 0;
  std::vector<std::vector<int>> succ;
  std::vector<bool> dead;  // reached a vertex without successors
  std::vector<int> vertex;  // state -> arena vertex
};

PlayGraph build(const GameGraph& g, const Strategy& s) {
  PlayGraph h;
  h.n = g.size();
  h.states = h.n * s.memory_size();
  h.succ.resize(static_cast<std::size_t>(h.states));
  h.dead.assign(static_cast<std::size_t>(h.states), false);
  for (int x = 0; x < h.states; ++x) {
    const int v = x % h.n;
    const int m = x / h.n;
    h.vertex.push_back(v);
    const auto& out = g.successors(v);
    if (out.empty()) {
      h.dead[static_cast<std::size_t>(x)] = true;
      continue;
    }
    const int m2 = s.next_memory(m, v);
    if (g.owner(v) == Owner::P0) {
      const int w = s.choose(v, m2);
      if (w < 0) continue;  // undefined; only an error if reachable
      if (!g.has_edge(v, w)) throw std::invalid_argument("strategy uses a missing edge " + g.name(v) + " -> " + g.name(w));
      h.succ[static_cast<std::size_t>(x)].push_back(m2 * h.n + w);
    } else {
      for (int w : out) h.succ[static_cast<std::size_t>(x)].push_back(m2 * h.n + w);
    }
  }
  return h;
}

std::vector<int> reachable(const GameGraph& g, const Strategy& s, const PlayGraph& h, const std::vector<int>& starts) {
  std::vector<bool> seen(static_cast<std::size_t>(h.states), false);
  std::vector<int> stack = starts, out;
  for (int x : starts) seen[static_cast<std::size_t>(x)] = true;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    out.push_back(x);
    const int v = h.vertex[static_cast<std::size_t>(x)];
    if (g.owner(v) == Owner::P0 && !h.dead[static_cast<std::size_t>(x)] && h.succ[static_cast<std::size_t>(x)].empty())
      throw std::invalid_argument("partial strategy: no move at reachable vertex " + g.name(v));
    for (int y : h.succ[static_cast<std::size_t>(x)])
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        stack.push_back(y);
      }
  }
  (void)s;
  std::sort(out.begin(), out.end());
  return out;
}

int group_of(const FairnessGroups& groups, int v) { return groups ? (*groups)[static_cast<std::size_t>(v)] : v; }

// Conditions (iii) and (v) on a strongly connected candidate. Returns the
// states to drop for fairness (empty if fair).
std::vector<int> unfair_states(const GameGraph& g, const PlayGraph& h, const std::vector<int>& C,
                               const std::vector<bool>& inC, const FairnessGroups& groups) {
  std::set<std::pair<int, int>> have, need;
  for (int x : C) {
    const int v = h.vertex[static_cast<std::size_t>(x)];
    for (int y : h.succ[static_cast<std::size_t>(x)])
      if (inC[static_cast<std::size_t>(y)]) have.insert({group_of(groups, v), group_of(groups, h.vertex[static_cast<std::size_t>(y)])});
    for (int w : g.live_successors(v)) need.insert({group_of(groups, v), group_of(groups, w)});
  }
  std::set<int> bad_groups;
  for (auto& e : need)
    if (!have.count(e)) bad_groups.insert(e.first);
  std::vector<int> out;
  for (int x : C)
    if (bad_groups.count(group_of(groups, h.vertex[static_cast<std::size_t>(x)]))) out.push_back(x);
  return out;
}

// First pair P0 satisfies on C (meets every goal set, misses R), or -1.
int satisfied_pair(const GenRabin& pairs, const PlayGraph& h, const std::vector<int>& C) {
  for (std::size_t j = 0; j < pairs.pairs.size(); ++j) {
    const auto& p = pairs.pairs[j];
    bool ok = true;
    for (int x : C)
      if (p.R.contains(h.vertex[static_cast<std::size_t>(x)])) ok = false;
    for (std::size_t l = 0; ok && l < p.G.size(); ++l) {
      bool hit = false;
      for (int x : C) hit = hit || p.G[l].contains(h.vertex[static_cast<std::size_t>(x)]);
      ok = hit;
    }
    if (ok) return static_cast<int>(j);
  }
  return -1;
}

// Tarjan SCCs of h restricted to `within`; only nontrivial components.
std::vector<std::vector<int>> sccs(const PlayGraph& h, const std::vector<int>& within) {
  const auto N = static_cast<std::size_t>(h.states);
  std::vector<bool> in(N, false);
  for (int x : within) in[static_cast<std::size_t>(x)] = true;
  std::vector<int> index(N, -1), low(N, 0), stack;
  std::vector<bool> on(N, false);
  std::vector<std::vector<int>> out;
  int counter = 0;
  // iterative Tarjan
  for (int root : within) {
    if (index[static_cast<std::size_t>(root)] >= 0) continue;
    std::vector<std::pair<int, std::size_t>> call{{root, 0}};
    index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
    stack.push_back(root);
    on[static_cast<std::size_t>(root)] = true;
    while (!call.empty()) {
      auto& [x, it] = call.back();
      const auto& sx = h.succ[static_cast<std::size_t>(x)];
      if (it < sx.size()) {
        int y = sx[it++];
        if (!in[static_cast<std::size_t>(y)]) continue;
        if (index[static_cast<std::size_t>(y)] < 0) {
          index[static_cast<std::size_t>(y)] = low[static_cast<std::size_t>(y)] = counter++;
          stack.push_back(y);
          on[static_cast<std::size_t>(y)] = true;
          call.push_back({y, 0});
        } else if (on[static_cast<std::size_t>(y)]) {
          low[static_cast<std::size_t>(x)] = std::min(low[static_cast<std::size_t>(x)], index[static_cast<std::size_t>(y)]);
        }
        continue;
      }
      const int done = x;
      call.pop_back();
      if (!call.empty())
        low[static_cast<std::size_t>(call.back().first)] =
            std::min(low[static_cast<std::size_t>(call.back().first)], low[static_cast<std::size_t>(done)]);
      if (low[static_cast<std::size_t>(done)] == index[static_cast<std::size_t>(done)]) {
        std::vector<int> comp;
        int y;
        do {
          y = stack.back();
          stack.pop_back();
          on[static_cast<std::size_t>(y)] = false;
          comp.push_back(y);
        } while (y != done);
        bool nontrivial = comp.size() > 1;
        if (!nontrivial) {
          const auto& sd = h.succ[static_cast<std::size_t>(done)];
          nontrivial = std::find(sd.begin(), sd.end(), done) != sd.end();
        }
        if (nontrivial) {
          std::sort(comp.begin(), comp.end());
          out.push_back(std::move(comp));
        }
      }
    }
  }
  return out;
}

// All maximal witnesses found by refinement inside `within`.
std::vector<std::vector<int>> refine(const GameGraph& g, const PlayGraph& h, const GenRabin& pairs,
                                     const std::vector<int>& within, const FairnessGroups& groups, bool first_only) {
  std::vector<std::vector<int>> found;
  std::vector<std::vector<int>> work{within};
  std::vector<bool> inC(static_cast<std::size_t>(h.states), false);
  while (!work.empty()) {
    auto W = std::move(work.back());
    work.pop_back();
    for (auto& C : sccs(h, W)) {
      for (int x : C) inC[static_cast<std::size_t>(x)] = true;
      auto drop = unfair_states(g, h, C, inC, groups);
      for (int x : C) inC[static_cast<std::size_t>(x)] = false;
      if (!drop.empty()) {
        std::vector<int> rest;
        std::set_difference(C.begin(), C.end(), drop.begin(), drop.end(), std::back_inserter(rest));
        if (!rest.empty()) work.push_back(std::move(rest));
        continue;
      }
      const int j = satisfied_pair(pairs, h, C);
      if (j < 0) {
        found.push_back(C);
        if (first_only) return found;
        continue;
      }
      // a witness inside C must avoid one goal set of pair j
      for (const auto& goal : pairs.pairs[static_cast<std::size_t>(j)].G) {
        std::vector<int> rest;
        for (int x : C)
          if (!goal.contains(h.vertex[static_cast<std::size_t>(x)])) rest.push_back(x);
        if (!rest.empty()) work.push_back(std::move(rest));
      }
    }
  }
  return found;
}

int start_state(const Strategy& s, int n, int v) { return s.initial_memory * n + v; }

std::optional<Witness> dead_end_witness(const PlayGraph& h, const std::vector<int>& R) {
  for (int x : R)
    if (h.dead[static_cast<std::size_t>(x)]) return Witness{true, {x}, "dead end reachable"};
  return std::nullopt;
}

void check_start(const GameGraph& g, int start) {
  if (start < 0 || start >= g.size()) throw std::out_of_range("start vertex out of range");
}

}  // namespace

Witness witness_by_enumeration(const GameGraph& g, const Strategy& s, const GenRabin& pairs, int start,
                               const FairnessGroups& groups) {
  check_start(g, start);
  PlayGraph h = build(g, s);
  auto R = reachable(g, s, h, {start_state(s, g.size(), start)});
  if (auto w = dead_end_witness(h, R)) return *w;
  if (R.size() > 20) throw std::length_error("subset enumeration is capped at 20 reachable states");
  const std::uint32_t total = 1U << R.size();
  std::vector<bool> inC(static_cast<std::size_t>(h.states), false);
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    std::vector<int> C;
    for (std::size_t b = 0; b < R.size(); ++b)
      if (mask & (1U << b)) C.push_back(R[b]);
    // strongly connected with at least one internal edge
    auto comps = sccs(h, C);
    if (comps.size() != 1 || comps.front().size() != C.size()) continue;
    for (int x : C) inC[static_cast<std::size_t>(x)] = true;
    bool fair = unfair_states(g, h, C, inC, groups).empty();
    for (int x : C) inC[static_cast<std::size_t>(x)] = false;
    if (!fair) continue;
    if (satisfied_pair(pairs, h, C) < 0) return Witness{true, C, "fair recurrent set violating every pair"};
  }
  return Witness{};
}

Witness witness_by_refinement(const GameGraph& g, const Strategy& s, const GenRabin& pairs, int start,
                              const FairnessGroups& groups) {
  check_start(g, start);
  PlayGraph h = build(g, s);
  auto R = reachable(g, s, h, {start_state(s, g.size(), start)});
  if (auto w = dead_end_witness(h, R)) return *w;
  auto found = refine(g, h, pairs, R, groups, true);
  if (found.empty()) return Witness{};
  return Witness{true, found.front(), "fair recurrent set violating every pair"};
}

Witness fair_violating_witness(const GameGraph& g, const Strategy& s, const GenRabin& pairs, int start,
                               const FairnessGroups& groups) {
  check_start(g, start);
  PlayGraph h = build(g, s);
  auto R = reachable(g, s, h, {start_state(s, g.size(), start)});
  if (R.size() <= 16) return witness_by_enumeration(g, s, pairs, start, groups);
  return witness_by_refinement(g, s, pairs, start, groups);
}

Witness fair_violating_witness(const GameGraph& g, const Strategy& s, const Rabin& pairs, int start,
                               const FairnessGroups& groups) {
  return fair_violating_witness(g, s, to_gen_rabin(pairs), start, groups);
}

VertexSet losing_starts(const GameGraph& g, const Strategy& s, const GenRabin& pairs, const FairnessGroups& groups) {
  PlayGraph h = build(g, s);
  std::vector<int> all(static_cast<std::size_t>(h.states));
  for (int x = 0; x < h.states; ++x) all[static_cast<std::size_t>(x)] = x;
  std::vector<bool> bad(static_cast<std::size_t>(h.states), false);
  for (auto& C : refine(g, h, pairs, all, groups, false))
    for (int x : C) bad[static_cast<std::size_t>(x)] = true;
  for (int x = 0; x < h.states; ++x)
    if (h.dead[static_cast<std::size_t>(x)]) bad[static_cast<std::size_t>(x)] = true;
  // backward closure
  std::vector<std::vector<int>> pred(static_cast<std::size_t>(h.states));
  for (int x = 0; x < h.states; ++x)
    for (int y : h.succ[static_cast<std::size_t>(x)]) pred[static_cast<std::size_t>(y)].push_back(x);
  std::vector<int> stack;
  for (int x = 0; x < h.states; ++x)
    if (bad[static_cast<std::size_t>(x)]) stack.push_back(x);
  while (!stack.empty()) {
    int y = stack.back();
    stack.pop_back();
    for (int x : pred[static_cast<std::size_t>(y)])
      if (!bad[static_cast<std::size_t>(x)]) {
        bad[static_cast<std::size_t>(x)] = true;
        stack.push_back(x);
      }
  }
  VertexSet out = g.none();
  for (int v = 0; v < g.size(); ++v)
    if (bad[static_cast<std::size_t>(start_state(s, g.size(), v))]) out.insert(v);
  return out;
}

VerifyResult verify_strategy_sound(const GameGraph& g, const GenRabin& pairs, const VertexSet& region,
                                   const Strategy& s, const FairnessGroups& groups) {
  VerifyResult r;
  try {
    PlayGraph h = build(g, s);
    std::vector<int> starts;
    region.for_each([&](int v) { starts.push_back(start_state(s, g.size(), v)); });
    reachable(g, s, h, starts);  // throws on partial strategies
    VertexSet bad = losing_starts(g, s, pairs, groups) & region;
    if (!bad.empty()) {
      r.pass = false;
      r.counterexample = bad.first();
      r.reason = "fair violating play from " + g.name(r.counterexample);
    }
  } catch (const std::invalid_argument& e) {
    r.pass = false;
    r.reason = e.what();
  }
  return r;
}

VerifyResult verify_strategy_sound(const GameGraph& g, const Rabin& pairs, const VertexSet& region,
                                   const Strategy& s, const FairnessGroups& groups) {
  return verify_strategy_sound(g, to_gen_rabin(pairs), region, s, groups);
}

VertexSet brute_force_region(const GameGraph& g, const GenRabin& pairs, const FairnessGroups& groups,
                             std::uint64_t budget) {
  std::vector<int> choosers;
  std::uint64_t count = 1;
  for (int v = 0; v < g.size(); ++v)
    if (g.owner(v) == Owner::P0 && g.successors(v).size() > 1) {
      choosers.push_back(v);
      count *= g.successors(v).size();
      if (count > budget) throw std::length_error("strategy enumeration exceeds the budget");
    }
  Strategy s;
  std::vector<int> mv(static_cast<std::size_t>(g.size()), -1);
  for (int v = 0; v < g.size(); ++v)
    if (g.owner(v) == Owner::P0 && !g.successors(v).empty()) mv[static_cast<std::size_t>(v)] = g.successors(v).front();
  std::vector<std::size_t> digit(choosers.size(), 0);
  VertexSet region = g.none();
  for (;;) {
    s.move = {mv};
    region |= losing_starts(g, s, pairs, groups).complement();
    if (region == g.all()) break;
    std::size_t i = 0;
    for (; i < choosers.size(); ++i) {
      const int v = choosers[i];
      const auto& out = g.successors(v);
      if (++digit[i] < out.size()) {
        mv[static_cast<std::size_t>(v)] = out[digit[i]];
        break;
      }
      digit[i] = 0;
      mv[static_cast<std::size_t>(v)] = out[0];
    }
    if (i == choosers.size()) break;
  }
  return region;
}

VertexSet brute_force_region(const GameGraph& g, const Rabin& pairs, const FairnessGroups& groups,
                             std::uint64_t budget) {
  return brute_force_region(g, to_gen_rabin(pairs), groups, budget);
}

namespace {

using GenEncoding = GenRabinEncoding;

GenEncoding encode(const GameGraph& g, const WinningCondition& cond) {
  const int n = g.size();
  const VertexSet all = g.all();
  const VertexSet none = g.none();
  GenEncoding e{g, {}, none};
  auto sink = [&](const VertexSet& s) {
    e.sinks |= s;
    s.for_each([&](int v) {
      auto out = e.game.successors(v);
      for (int w : out) e.game.remove_edge(v, w);
      e.game.add_edge(v, v);
    });
  };
  auto plain = [&](const Rabin& r) { e.cond = to_gen_rabin(r); };
  std::visit(overloaded{
                 [&](const SafeReach& c) {
                   sink(c.T | c.Q.complement());
                   plain(Rabin{{{c.T, none}}});
                 },
                 [&](const Safety& c) {
                   sink(c.Q.complement());
                   plain(Rabin{{{c.Q, c.Q.complement()}}});
                 },
                 [&](const Buchi& c) { plain(Rabin{{{c.G, none}}}); },
                 [&](const SafeBuchi& c) {
                   sink(c.Q.complement());
                   plain(Rabin{{{c.G, c.Q.complement()}}});
                 },
                 [&](const CoBuchi& c) { plain(Rabin{{{all, c.A.complement()}}}); },
                 [&](const GenCoBuchi& c) { plain(gen_cobuchi_to_rabin(c, n)); },
                 [&](const Rabin& c) { plain(c); },
                 [&](const RabinChain& c) { plain(to_rabin(c)); },
                 [&](const Parity& c) { plain(to_rabin(parity_to_rabin_chain(c, n))); },
                 [&](const GenBuchi& c) {
                   sink(c.Q.complement());
                   e.cond.pairs.push_back({c.F, c.Q.complement()});
                 },
                 [&](const GenRabin& c) { e.cond = c; },
                 [&](const GR1& c) { e.cond = gr1_to_gen_rabin(c, n); },
                 [&](const Muller& c) { e.cond = muller_to_gen_rabin(c, n); },
             },
             cond);
  return e;
}

}  // namespace

GenRabin as_gen_rabin(const GameGraph& g, const WinningCondition& cond) { return encode(g, cond).cond; }

RabinEncoding encode_as_rabin(const GameGraph& g, const WinningCondition& cond) {
  if (std::holds_alternative<GenBuchi>(cond) || std::holds_alternative<GenRabin>(cond) ||
      std::holds_alternative<GR1>(cond) || std::holds_alternative<Muller>(cond))
    throw std::invalid_argument("condition needs memory; use the counter-product oracle");
  auto e = encode(g, cond);
  RabinEncoding out{std::move(e.game), {}, e.sinks};
  for (auto& p : e.cond.pairs) out.cond.pairs.push_back({p.G.front(), p.R});
  return out;
}

GenRabinEncoding encode_for_oracle(const GameGraph& g, const WinningCondition& cond) { return encode(g, cond); }

Strategy adapt_strategy(const GameGraph& encoded, const VertexSet& sinks, const Strategy& s) {
  Strategy out = s;
  for (auto& mv : out.move)
    sinks.for_each([&](int v) {
      if (encoded.owner(v) == Owner::P0) mv[static_cast<std::size_t>(v)] = v;
    });
  return out;
}

VertexSet brute_force_region_generalized(const GameGraph& g, const WinningCondition& cond, std::uint64_t budget) {
  auto e = encode(g, cond);
  auto prod = gen_rabin_counter_product(e.game, e.cond);
  VertexSet r = brute_force_region(prod.game, prod.cond, prod.map.projection, budget);
  return project_starts(r, prod.map, g.size());
}

}  // namespace fairgame
