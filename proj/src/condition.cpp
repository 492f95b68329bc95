#include "fairgame/condition.hpp"

namespace fairgame {

namespace {

template <class... Ts>
struct overloaded : Ts... { using Ts::operator()...; };

void check_universe(const GameGraph& g, const VertexSet& s, const std::string& what, ValidationReport& r) {
  if (s.universe() != static_cast<std::size_t>(g.size()))
    r.errors.push_back(what + ": universe size " + std::to_string(s.universe()) + " != " + std::to_string(g.size()));
}

}  // namespace

std::string condition_keyword(const WinningCondition& c) {
  return std::visit(overloaded{
                        [](const SafeReach&) { return "safereach"; },
                        [](const Safety&) { return "safety"; },
                        [](const Buchi&) { return "buchi"; },
                        [](const SafeBuchi&) { return "safebuchi"; },
                        [](const CoBuchi&) { return "cobuchi"; },
                        [](const GenBuchi&) { return "genbuchi"; },
                        [](const GenCoBuchi&) { return "gencobuchi"; },
                        [](const Rabin&) { return "rabin"; },
                        [](const GenRabin&) { return "genrabin"; },
                        [](const RabinChain&) { return "rabinchain"; },
                        [](const Parity&) { return "parity"; },
                        [](const GR1&) { return "gr1"; },
                        [](const Muller&) { return "muller"; },
                    },
                    c);
}

ValidationReport validate(const GameGraph& g) {
  ValidationReport r;
  for (int v = 0; v < g.size(); ++v) {
    if (g.successors(v).empty()) r.warnings.push_back("dead end at vertex " + g.name(v));
    for (int w : g.live_successors(v))
      if (g.owner(v) != Owner::P1)
        r.errors.push_back("live edge from P0 vertex " + g.name(v) + " -> " + g.name(w));
  }
  return r;
}

ValidationReport validate(const StochasticGameGraph& g) {
  ValidationReport r;
  for (int v = 0; v < g.size(); ++v) {
    if (!g.successors(v).empty()) continue;
    if (g.owner(v) == Owner::Random)
      r.errors.push_back("random vertex " + g.name(v) + " has no successor");
    else
      r.warnings.push_back("dead end at vertex " + g.name(v));
  }
  return r;
}

bool is_chain(const std::vector<RabinPair>& pairs) {
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    if (!pairs[i].R.subset_of(pairs[i - 1].R)) return false;
    if (!pairs[i].G.subset_of(pairs[i - 1].G)) return false;
  }
  return true;
}

ValidationReport validate(const GameGraph& g, const WinningCondition& cond) {
  ValidationReport r = validate(g);
  auto U = [&](const VertexSet& s, const std::string& what) { check_universe(g, s, what, r); };
  auto nonempty_list = [&](std::size_t n, const char* what) {
    if (n == 0) r.errors.push_back(std::string(what) + " needs at least one set");
  };
  std::visit(overloaded{
                 [&](const SafeReach& c) { U(c.T, "T"); U(c.Q, "Q"); },
                 [&](const Safety& c) { U(c.Q, "Q"); },
                 [&](const Buchi& c) { U(c.G, "G"); },
                 [&](const SafeBuchi& c) { U(c.G, "G"); U(c.Q, "Q"); },
                 [&](const CoBuchi& c) { U(c.A, "A"); },
                 [&](const GenBuchi& c) {
                   nonempty_list(c.F.size(), "generalized Buchi");
                   for (auto& f : c.F) U(f, "F");
                   U(c.Q, "Q");
                 },
                 [&](const GenCoBuchi& c) {
                   nonempty_list(c.A.size(), "generalized co-Buchi");
                   for (auto& a : c.A) U(a, "A");
                 },
                 [&](const Rabin& c) {
                   nonempty_list(c.pairs.size(), "Rabin");
                   for (auto& p : c.pairs) { U(p.G, "G"); U(p.R, "R"); }
                 },
                 [&](const GenRabin& c) {
                   nonempty_list(c.pairs.size(), "generalized Rabin");
                   for (std::size_t i = 0; i < c.pairs.size(); ++i) {
                     if (c.pairs[i].G.empty())
                       r.errors.push_back("generalized pair " + std::to_string(i + 1) + " has no goal sets");
                     for (auto& s : c.pairs[i].G) U(s, "G");
                     U(c.pairs[i].R, "R");
                   }
                 },
                 [&](const RabinChain& c) {
                   nonempty_list(c.pairs.size(), "Rabin chain");
                   for (auto& p : c.pairs) { U(p.G, "G"); U(p.R, "R"); }
                   if (r.ok() && !is_chain(c.pairs)) r.errors.push_back("pairs are not a chain");
                 },
                 [&](const Parity& c) {
                   if (c.colors.empty() || c.colors.size() % 2 != 0)
                     r.errors.push_back("parity needs an even, nonzero number of colors");
                   for (auto& s : c.colors) U(s, "color");
                   if (!r.ok()) return;
                   VertexSet seen = g.none();
                   for (auto& s : c.colors) {
                     if (seen.intersects(s)) r.errors.push_back("colors overlap");
                     seen |= s;
                   }
                   if (seen != g.all()) r.errors.push_back("colors do not cover every vertex");
                 },
                 [&](const GR1& c) {
                   nonempty_list(c.A.size(), "GR(1) assumption");
                   nonempty_list(c.F.size(), "GR(1) guarantee");
                   for (auto& s : c.A) U(s, "A");
                   for (auto& s : c.F) U(s, "F");
                 },
                 [&](const Muller& c) {
                   nonempty_list(c.F.size(), "Muller");
                   for (auto& s : c.F) {
                     U(s, "F");
                     if (s.empty()) r.errors.push_back("empty Muller set");
                   }
                 },
             },
             cond);
  return r;
}

Rabin to_rabin(const RabinChain& c) { return Rabin{c.pairs}; }

GenRabin to_gen_rabin(const Rabin& r) {
  GenRabin g;
  for (auto& p : r.pairs) g.pairs.push_back({{p.G}, p.R});
  return g;
}

}  // namespace fairgame
