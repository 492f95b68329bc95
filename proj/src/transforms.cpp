#include "fairgame/transforms.hpp"

#include <stdexcept>

namespace fairgame {

GenRabin muller_to_gen_rabin(const Muller& m, int n) {
  GenRabin out;
  for (auto& f : m.F) {
    if (f.empty()) throw std::invalid_argument("empty Muller set");
    GenRabinPair p;
    f.for_each([&](int v) { p.G.push_back(VertexSet::of(static_cast<std::size_t>(n), {v})); });
    p.R = f.complement();
    out.pairs.push_back(std::move(p));
  }
  return out;
}

GenRabin gr1_to_gen_rabin(const GR1& c, int n) {
  if (c.A.empty() || c.F.empty()) throw std::invalid_argument("GR(1) needs r >= 1 and s >= 1");
  VertexSet all(static_cast<std::size_t>(n), true);
  GenRabin out;
  for (auto& a : c.A) out.pairs.push_back({{all}, a});
  out.pairs.push_back({c.F, VertexSet(static_cast<std::size_t>(n))});
  return out;
}

RabinChain parity_to_rabin_chain(const Parity& p, int n) {
  const auto d = p.colors.size();
  if (d == 0 || d % 2) throw std::invalid_argument("parity needs an even, nonzero number of colors");
  // F[i] = union of colors i..2k (1-based), F[2k+1] = empty
  std::vector<VertexSet> F(d + 2, VertexSet(static_cast<std::size_t>(n)));
  for (std::size_t i = d; i >= 1; --i) F[i] = F[i + 1] | p.colors[i - 1];
  RabinChain out;
  for (std::size_t i = 1; 2 * i <= d; ++i) out.pairs.push_back({F[2 * i], F[2 * i + 1]});
  if (!is_chain(out.pairs)) throw std::logic_error("parity transform produced a non-chain");
  return out;
}

Rabin gen_cobuchi_to_rabin(const GenCoBuchi& c, int n) {
  Rabin out;
  VertexSet all(static_cast<std::size_t>(n), true);
  for (auto& a : c.A) out.pairs.push_back({all, a.complement()});
  return out;
}

StreettReduction naive_streett_reduction(const GameGraph& g, const Rabin& cond) {
  const int n = g.size();
  auto live = g.live_edges();
  const int N = n + static_cast<int>(live.size());
  StreettReduction out;
  for (int v = 0; v < n; ++v) out.game.add_vertex(g.owner(v), g.name(v));
  for (auto [u, v] : live) out.game.add_vertex(Owner::P0, g.name(u) + "_" + g.name(v));
  for (int u = 0; u < n; ++u)
    for (int v : g.successors(u))
      if (!g.is_live(u, v)) out.game.add_edge(u, v);
  auto widen = [&](const VertexSet& s) {
    VertexSet w(static_cast<std::size_t>(N));
    s.for_each([&](int v) { w.insert(v); });
    return w;
  };
  for (auto& p : cond.pairs) out.cond.pairs.push_back({widen(p.G), widen(p.R)});
  for (std::size_t i = 0; i < live.size(); ++i) {
    auto [u, v] = live[i];
    int mid = n + static_cast<int>(i);
    out.game.add_edge(u, mid);
    out.game.add_edge(mid, v);
    out.cond.pairs.push_back({VertexSet::of(static_cast<std::size_t>(N), {u}),
                              VertexSet::of(static_cast<std::size_t>(N), {mid})});
  }
  for (int v = 0; v < n; ++v) out.map.embed.push_back(v);
  for (int x = 0; x < N; ++x) out.map.projection.push_back(x < n ? x : live[static_cast<std::size_t>(x - n)].first);
  return out;
}

GenBuchiProduct gen_buchi_counter_product(const GameGraph& g, const GenBuchi& c) {
  const int n = g.size();
  const int s = static_cast<int>(c.F.size());
  if (s < 1) throw std::invalid_argument("generalized Buchi needs s >= 1");
  const auto N = static_cast<std::size_t>(n * s);
  GenBuchiProduct out;
  for (int b = 0; b < s; ++b)
    for (int v = 0; v < n; ++v)
      out.game.add_vertex(g.owner(v), s == 1 ? g.name(v) : g.name(v) + "#" + std::to_string(b + 1));
  out.cond.G = VertexSet(N);
  out.cond.Q = VertexSet(N);
  for (int b = 0; b < s; ++b)
    for (int v = 0; v < n; ++v) {
      const int x = b * n + v;
      const bool hit = c.F[static_cast<std::size_t>(b)].contains(v);
      const int nb = hit ? (b + 1) % s : b;
      for (int w : g.successors(v)) out.game.add_edge(x, nb * n + w, g.is_live(v, w));
      if (hit && b == s - 1) out.cond.G.insert(x);
      if (c.Q.contains(v)) out.cond.Q.insert(x);
      out.map.projection.push_back(v);
    }
  for (int v = 0; v < n; ++v) out.map.embed.push_back(v);
  return out;
}

GenRabinProduct gen_rabin_counter_product(const GameGraph& g, const GenRabin& c) {
  const int n = g.size();
  const std::size_t k = c.pairs.size();
  GenRabinProduct out;
  int mem = 1;
  for (auto& p : c.pairs) {
    if (p.G.empty()) throw std::invalid_argument("generalized pair without goal sets");
    out.radix.push_back(static_cast<int>(p.G.size()));
    mem *= static_cast<int>(p.G.size());
  }
  auto digits = [&](int code) {
    std::vector<int> d(k);
    for (std::size_t i = 0; i < k; ++i) {
      d[i] = code % out.radix[i];
      code /= out.radix[i];
    }
    return d;
  };
  auto encode = [&](const std::vector<int>& d) {
    int code = 0;
    for (std::size_t i = k; i-- > 0;) code = code * out.radix[i] + d[i];
    return code;
  };
  const auto N = static_cast<std::size_t>(n * mem);
  for (int m = 0; m < mem; ++m)
    for (int v = 0; v < n; ++v) out.game.add_vertex(g.owner(v), mem == 1 ? g.name(v) : g.name(v) + "#" + std::to_string(m));
  for (std::size_t i = 0; i < k; ++i) out.cond.pairs.push_back({VertexSet(N), VertexSet(N)});
  for (int m = 0; m < mem; ++m) {
    auto d = digits(m);
    for (int v = 0; v < n; ++v) {
      const int x = m * n + v;
      auto nd = d;
      for (std::size_t i = 0; i < k; ++i) {
        const auto& goal = c.pairs[i].G[static_cast<std::size_t>(d[i])];
        if (goal.contains(v)) {
          nd[i] = (d[i] + 1) % out.radix[i];
          if (d[i] == out.radix[i] - 1) out.cond.pairs[i].G.insert(x);
        }
        if (c.pairs[i].R.contains(v)) out.cond.pairs[i].R.insert(x);
      }
      const int nm = encode(nd);
      for (int w : g.successors(v)) out.game.add_edge(x, nm * n + w, g.is_live(v, w));
      out.map.projection.push_back(v);
    }
  }
  for (int v = 0; v < n; ++v) out.map.embed.push_back(v);
  return out;
}

VertexSet lift(const VertexSet& s, const Embedding& map) {
  VertexSet out(map.projection.size());
  for (std::size_t x = 0; x < map.projection.size(); ++x)
    if (s.contains(map.projection[x])) out.insert(static_cast<int>(x));
  return out;
}

VertexSet project_starts(const VertexSet& s, const Embedding& map, int n) {
  VertexSet out(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    if (s.contains(map.embed[static_cast<std::size_t>(v)])) out.insert(v);
  return out;
}

}  // namespace fairgame
