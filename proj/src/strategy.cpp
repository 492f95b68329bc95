#include "fairgame/strategy.hpp"

#include <stdexcept>

namespace fairgame {

std::string rank_string(const RankWord& w) {
  bool small = true;
  for (int x : w) small = small && x >= 0 && x <= 9;
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!small && i) s += '.';
    s += std::to_string(w[i]);
  }
  return s;
}

std::string rank_snapshot(const RankWord& w) {
  RankWord out;
  const std::size_t levels = w.size() / 2;
  for (std::size_t a = 0; a < levels; ++a) {
    const int i = w[2 * a + 1];
    out.push_back(w[2 * a]);
    if (a + 1 < levels)
      out.push_back(i > 0 ? i - 1 : 0);
    else
      out.push_back(i > 0 ? i : 1);
  }
  return rank_string(out);
}

namespace {

std::vector<std::optional<RankWord>> layer_ranks(const std::vector<VertexSet>& layers, int n) {
  std::vector<std::optional<RankWord>> t(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < layers.size(); ++i)
    layers[i].for_each([&](int v) {
      auto& r = t[static_cast<std::size_t>(v)];
      if (!r) r = RankWord{static_cast<int>(i + 1)};
    });
  return t;
}

bool rank_less(const std::optional<RankWord>& a, const std::optional<RankWord>& b) {
  if (!a) return false;
  if (!b) return true;
  return *a < *b;
}

// Rank-minimal successor, lowest id on ties; lowest successor if all are ∞.
int argmin_successor(const GameGraph& g, int v, const std::vector<std::optional<RankWord>>& t) {
  int best = -1;
  for (int w : g.successors(v))
    if (best < 0 || rank_less(t[static_cast<std::size_t>(w)], t[static_cast<std::size_t>(best)])) best = w;
  return best;
}

std::vector<int> memoryless_moves(const GameGraph& g, const VertexSet& region, Owner who,
                                  const std::vector<std::optional<RankWord>>& t) {
  std::vector<int> mv(static_cast<std::size_t>(g.size()), -1);
  region.for_each([&](int v) {
    if (g.owner(v) == who) mv[static_cast<std::size_t>(v)] = argmin_successor(g, v, t);
  });
  return mv;
}

std::vector<int> decode(int code, const std::vector<int>& radix) {
  std::vector<int> d(radix.size());
  for (std::size_t i = 0; i < radix.size(); ++i) {
    d[i] = code % radix[i];
    code /= radix[i];
  }
  return d;
}

int encode(const std::vector<int>& d, const std::vector<int>& radix) {
  int code = 0;
  for (std::size_t i = radix.size(); i-- > 0;) code = code * radix[i] + d[i];
  return code;
}

}  // namespace

RankTable extract_reach_ranks(const Frames& f, int n) {
  RankTable t;
  t.tables.push_back(layer_ranks(f.layers, n));
  return t;
}

RankTable extract_dual_ranks(const Frames& f, int n) { return extract_reach_ranks(f, n); }

RankTable extract_rabin_ranks(const Frames& f) {
  if (f.kind != Frames::Kind::Rabin) throw std::invalid_argument("frames do not come from a Rabin recursion");
  RankTable t;
  t.radix = f.radix;
  for (auto& tr : f.traces) t.tables.push_back(tr.words);
  return t;
}

RankTable extract_gen_buchi_ranks(const Frames& f, int n) {
  RankTable t;
  t.radix = {static_cast<int>(f.goal_layers.size())};
  for (auto& layers : f.goal_layers) t.tables.push_back(layer_ranks(layers, n));
  return t;
}

RankTable ranks_for(const GameGraph& g, const SolveResult& res) {
  if (!res.frames) throw std::invalid_argument("solve result carries no frames");
  const Frames& f = *res.frames;
  switch (f.kind) {
    case Frames::Kind::Rabin: return extract_rabin_ranks(f);
    case Frames::Kind::GenBuchi: return extract_gen_buchi_ranks(f, g.size());
    default: return extract_reach_ranks(f, g.size());
  }
}

Strategy extract_p0_strategy(const GameGraph& g, const WinningCondition& cond, const SolveResult& res) {
  if (!res.frames) throw std::invalid_argument("solve result carries no frames");
  const Frames& f = *res.frames;
  const int n = g.size();
  Strategy s;
  s.player = Owner::P0;
  switch (f.kind) {
    case Frames::Kind::Safety: {
      std::vector<int> mv(static_cast<std::size_t>(n), -1);
      res.region.for_each([&](int v) {
        if (g.owner(v) != Owner::P0) return;
        for (int w : g.successors(v))
          if (res.region.contains(w)) {
            mv[static_cast<std::size_t>(v)] = w;
            break;
          }
      });
      s.move = {mv};
      return s;
    }
    case Frames::Kind::Reach:
      s.move = {memoryless_moves(g, res.region, Owner::P0, layer_ranks(f.layers, n))};
      return s;
    case Frames::Kind::DualReach: throw std::invalid_argument("dual frames describe P1's region");
    case Frames::Kind::GenBuchi: {
      const auto* gb = std::get_if<GenBuchi>(&cond);
      if (!gb) throw std::invalid_argument("generalized Buchi frames need a generalized Buchi condition");
      const int sz = static_cast<int>(gb->F.size());
      RankTable t = extract_gen_buchi_ranks(f, n);
      s.memory_labels.clear();
      for (int b = 0; b < sz; ++b) {
        s.memory_labels.push_back(std::to_string(b + 1));
        std::vector<int> up(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) up[static_cast<std::size_t>(v)] = gb->F[static_cast<std::size_t>(b)].contains(v) ? (b + 1) % sz : b;
        s.update.push_back(std::move(up));
        s.move.push_back(memoryless_moves(g, res.region, Owner::P0, t.tables[static_cast<std::size_t>(b)]));
      }
      if (sz == 1) s.update.clear();
      return s;
    }
    case Frames::Kind::Rabin: {
      RankTable t = extract_rabin_ranks(f);
      const int total = static_cast<int>(t.tables.size());
      if (total == 1) {
        s.move = {memoryless_moves(g, res.region, Owner::P0, t.tables[0])};
        return s;
      }
      s.memory_labels.clear();
      for (int code = 0; code < total; ++code) {
        auto d = decode(code, t.radix);
        std::string label;
        for (std::size_t i = 0; i < d.size(); ++i) label += (i ? "." : "") + std::to_string(d[i] + 1);
        s.memory_labels.push_back(label);
        const auto& table = t.tables[static_cast<std::size_t>(code)];
        std::vector<int> up(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
          auto nd = d;
          const auto& w = table[static_cast<std::size_t>(v)];
          if (w) {
            // advance the goal of the pair at the vertex's deepest active level
            int p = 0;
            for (std::size_t a = 0; 2 * a + 1 < w->size(); ++a)
              if ((*w)[2 * a + 1] > 0) p = (*w)[2 * a];
            if (p > 0) {
              const auto pi = static_cast<std::size_t>(p - 1);
              if (f.goal_sets[pi][static_cast<std::size_t>(d[pi])].contains(v)) nd[pi] = (d[pi] + 1) % t.radix[pi];
            }
          }
          up[static_cast<std::size_t>(v)] = encode(nd, t.radix);
        }
        s.update.push_back(std::move(up));
        s.move.push_back(memoryless_moves(g, res.region, Owner::P0, table));
      }
      return s;
    }
  }
  throw std::logic_error("unknown frame kind");
}

Strategy extract_p1_spoiler_reach(const GameGraph& g, const VertexSet& T, const VertexSet& Q, const SolveResult& res) {
  if (!res.frames || res.frames->kind != Frames::Kind::DualReach)
    throw std::invalid_argument("spoiler extraction needs recorded dual reach frames");
  const int n = g.size();
  auto t = layer_ranks(res.frames->layers, n);
  Strategy s;
  s.player = Owner::P1;
  std::vector<int> mv(static_cast<std::size_t>(n), -1);
  res.region.for_each([&](int v) {
    if (g.owner(v) != Owner::P1 || g.successors(v).empty()) return;
    if (!Q.contains(v) && !T.contains(v))
      mv[static_cast<std::size_t>(v)] = g.successors(v).front();
    else
      mv[static_cast<std::size_t>(v)] = argmin_successor(g, v, t);
  });
  s.move = {mv};
  return s;
}

std::string Strategy::serialize(const GameGraph& g) const {
  std::string out;
  for (int m = 0; m < memory_size(); ++m)
    for (int v = 0; v < g.size(); ++v) {
      int w = choose(v, m);
      if (w < 0) continue;
      out += g.name(v) + " -> " + g.name(w);
      if (!memoryless()) out += " @ " + memory_labels[static_cast<std::size_t>(m)];
      out += '\n';
    }
  if (!update.empty())
    for (int m = 0; m < memory_size(); ++m)
      for (int v = 0; v < g.size(); ++v) {
        int nm = next_memory(m, v);
        if (nm != m)
          out += "update " + g.name(v) + " " + memory_labels[static_cast<std::size_t>(m)] + " -> " +
                 memory_labels[static_cast<std::size_t>(nm)] + '\n';
      }
  return out;
}

}  // namespace fairgame
