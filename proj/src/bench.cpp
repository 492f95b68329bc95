#include "fairgame/bench.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace fairgame {

namespace {

void check_fraction(double f, const char* what) {
  if (!(f >= 0.0 && f <= 1.0)) throw std::invalid_argument(std::string(what) + " must lie in [0,1]");
}

std::vector<int> pick_successors(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> deg(1, std::min(4, n));
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(deg(rng)));
  std::sort(all.begin(), all.end());
  return all;
}

VertexSet random_subset(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution in(p);
  VertexSet s(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    if (in(rng)) s.insert(v);
  return s;
}

}  // namespace

RandomGame random_fair_game(std::uint64_t seed, int n, int k, double owner_frac, double live_frac,
                            double member_frac) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  if (k < 1) throw std::invalid_argument("need k >= 1");
  check_fraction(owner_frac, "owner_frac");
  check_fraction(live_frac, "live_frac");
  check_fraction(member_frac, "member_frac");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution is_p0(owner_frac), is_live(live_frac);
  RandomGame out;
  for (int v = 0; v < n; ++v) out.game.add_vertex(is_p0(rng) ? Owner::P0 : Owner::P1);
  for (int v = 0; v < n; ++v)
    for (int w : pick_successors(rng, n)) {
      bool live = out.game.owner(v) == Owner::P1 && is_live(rng);
      out.game.add_edge(v, w, live);
    }
  for (int i = 0; i < k; ++i) {
    VertexSet G = random_subset(rng, n, member_frac);
    VertexSet R = random_subset(rng, n, member_frac);
    out.cond.pairs.push_back({G, R});
  }
  return out;
}

RandomStochasticGame random_mdp(std::uint64_t seed, int n, int k, double random_frac, double member_frac) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  if (k < 1) throw std::invalid_argument("need k >= 1");
  check_fraction(random_frac, "random_frac");
  check_fraction(member_frac, "member_frac");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution is_random(random_frac);
  RandomStochasticGame out;
  for (int v = 0; v < n; ++v) out.game.add_vertex(is_random(rng) ? Owner::Random : Owner::P0);
  for (int v = 0; v < n; ++v)
    for (int w : pick_successors(rng, n)) out.game.add_edge(v, w);
  for (int i = 0; i < k; ++i) {
    VertexSet G = random_subset(rng, n, member_frac);
    VertexSet R = random_subset(rng, n, member_frac);
    out.cond.pairs.push_back({G, R});
  }
  return out;
}

GadgetChain gadget_chain(int m) {
  if (m < 1) throw std::invalid_argument("need m >= 1");
  GadgetChain out;
  for (int i = 0; i < m; ++i) {
    out.game.add_vertex(Owner::P1, "p" + std::to_string(i + 1));
    out.game.add_vertex(Owner::P0, "q" + std::to_string(i + 1));
  }
  for (int i = 0; i < m; ++i) {
    const int p = 2 * i, q = 2 * i + 1;
    out.game.add_edge(p, p);
    out.game.add_edge(p, q, true);
    out.game.add_edge(q, (2 * (i + 1)) % (2 * m));
  }
  out.cond.G = VertexSet::of(static_cast<std::size_t>(2 * m), {2 * m - 1});
  return out;
}

}  // namespace fairgame
