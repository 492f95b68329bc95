#include "fairgame/game.hpp"

#include <algorithm>
#include <stdexcept>

namespace fairgame {

const char* owner_name(Owner o) {
  switch (o) {
    case Owner::P0: return "p0";
    case Owner::P1: return "p1";
    case Owner::Random: return "random";
  }
  return "?";
}

GameGraph::GameGraph(int n, Owner owner) {
  for (int i = 0; i < n; ++i) add_vertex(owner);
}

int GameGraph::add_vertex(Owner owner, std::string name) {
  if (owner == Owner::Random) throw std::invalid_argument("random vertex in a two-player arena");
  int id = size();
  owner_.push_back(owner);
  names_.push_back(name.empty() ? std::to_string(id) : std::move(name));
  succ_.emplace_back();
  pred_.emplace_back();
  live_.emplace_back();
  return id;
}

void GameGraph::add_edge(int u, int v, bool live) {
  if (u < 0 || u >= size() || v < 0 || v >= size()) throw std::out_of_range("edge endpoint out of range");
  auto& s = succ_[u];
  auto it = std::lower_bound(s.begin(), s.end(), v);
  auto idx = static_cast<std::size_t>(it - s.begin());
  if (it != s.end() && *it == v) {
    if (live) live_[u][idx] = true;
    return;
  }
  s.insert(it, v);
  live_[u].insert(live_[u].begin() + static_cast<std::ptrdiff_t>(idx), live);
  auto& p = pred_[v];
  p.insert(std::lower_bound(p.begin(), p.end(), u), u);
}

void GameGraph::remove_edge(int u, int v) {
  auto& s = succ_.at(u);
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it == s.end() || *it != v) return;
  live_[u].erase(live_[u].begin() + (it - s.begin()));
  s.erase(it);
  auto& p = pred_[v];
  p.erase(std::lower_bound(p.begin(), p.end(), u));
}

void GameGraph::set_live(int u, int v, bool live) {
  auto& s = succ_.at(u);
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it == s.end() || *it != v) throw std::invalid_argument("set_live on a missing edge");
  live_[u][static_cast<std::size_t>(it - s.begin())] = live;
}

std::vector<int> GameGraph::live_successors(int v) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < succ_[v].size(); ++i)
    if (live_[v][i]) out.push_back(succ_[v][i]);
  return out;
}

bool GameGraph::has_edge(int u, int v) const {
  return std::binary_search(succ_[u].begin(), succ_[u].end(), v);
}

bool GameGraph::is_live(int u, int v) const {
  auto& s = succ_[u];
  auto it = std::lower_bound(s.begin(), s.end(), v);
  return it != s.end() && *it == v && live_[u][static_cast<std::size_t>(it - s.begin())];
}

std::size_t GameGraph::edge_count() const {
  std::size_t c = 0;
  for (auto& s : succ_) c += s.size();
  return c;
}

std::size_t GameGraph::live_edge_count() const { return live_edges().size(); }

std::vector<std::pair<int, int>> GameGraph::live_edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u)
    for (std::size_t i = 0; i < succ_[u].size(); ++i)
      if (live_[u][i]) out.emplace_back(u, succ_[u][i]);
  return out;
}

VertexSet GameGraph::owned_by(Owner o) const {
  VertexSet s(owner_.size());
  for (int v = 0; v < size(); ++v)
    if (owner_[v] == o) s.insert(v);
  return s;
}

VertexSet GameGraph::live_domain() const {
  VertexSet s(owner_.size());
  for (int v = 0; v < size(); ++v)
    if (std::find(live_[v].begin(), live_[v].end(), true) != live_[v].end()) s.insert(v);
  return s;
}

VertexSet GameGraph::dead_ends() const {
  VertexSet s(owner_.size());
  for (int v = 0; v < size(); ++v)
    if (succ_[v].empty()) s.insert(v);
  return s;
}

int GameGraph::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

StochasticGameGraph::StochasticGameGraph(int n, Owner owner) {
  for (int i = 0; i < n; ++i) add_vertex(owner);
}

int StochasticGameGraph::add_vertex(Owner owner, std::string name) {
  int id = size();
  owner_.push_back(owner);
  names_.push_back(name.empty() ? std::to_string(id) : std::move(name));
  succ_.emplace_back();
  return id;
}

void StochasticGameGraph::add_edge(int u, int v) {
  if (u < 0 || u >= size() || v < 0 || v >= size()) throw std::out_of_range("edge endpoint out of range");
  auto& s = succ_[u];
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it == s.end() || *it != v) s.insert(it, v);
}

VertexSet StochasticGameGraph::owned_by(Owner o) const {
  VertexSet s(owner_.size());
  for (int v = 0; v < size(); ++v)
    if (owner_[v] == o) s.insert(v);
  return s;
}

GameGraph StochasticGameGraph::as_game() const {
  GameGraph g;
  for (int v = 0; v < size(); ++v) g.add_vertex(owner_[v] == Owner::P0 ? Owner::P0 : Owner::P1, names_[v]);
  for (int v = 0; v < size(); ++v)
    for (int w : succ_[v]) g.add_edge(v, w);
  return g;
}

}  // namespace fairgame
