#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fairgame/vertex_set.hpp"

namespace fairgame {

enum class Owner { P0, P1, Random };

const char* owner_name(Owner o);

// Two-player arena with a set of live edges (all with P1 source).
// Successor lists are kept sorted by target id.
class GameGraph {
 public:
  GameGraph() = default;
  explicit GameGraph(int n, Owner owner = Owner::P0);

  int add_vertex(Owner owner, std::string name = {});
  // Adding an existing edge only updates its live flag (live wins).
  void add_edge(int u, int v, bool live = false);
  void remove_edge(int u, int v);
  void set_live(int u, int v, bool live);
  void set_owner(int v, Owner o) { owner_.at(v) = o; }
  void set_name(int v, std::string name) { names_.at(v) = std::move(name); }

  int size() const { return static_cast<int>(owner_.size()); }
  Owner owner(int v) const { return owner_[v]; }
  const std::vector<int>& successors(int v) const { return succ_[v]; }
  const std::vector<int>& predecessors(int v) const { return pred_[v]; }
  // Live successors of v, ascending.
  std::vector<int> live_successors(int v) const;
  bool has_edge(int u, int v) const;
  bool is_live(int u, int v) const;
  std::size_t edge_count() const;
  std::size_t live_edge_count() const;
  std::vector<std::pair<int, int>> live_edges() const;

  VertexSet all() const { return VertexSet(owner_.size(), true); }
  VertexSet none() const { return VertexSet(owner_.size()); }
  VertexSet owned_by(Owner o) const;
  // V^l, the sources of live edges; derived on demand.
  VertexSet live_domain() const;
  VertexSet dead_ends() const;

  const std::string& name(int v) const { return names_[v]; }
  int find(const std::string& name) const;  // -1 if absent

 private:
  std::vector<Owner> owner_;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> succ_;
  std::vector<std::vector<int>> pred_;
  // live_[v][i] refers to succ_[v][i]
  std::vector<std::vector<bool>> live_;
};

// 2.5-player arena: random vertices pick a successor with full support.
// Probabilities are deliberately not represented.
class StochasticGameGraph {
 public:
  StochasticGameGraph() = default;
  explicit StochasticGameGraph(int n, Owner owner = Owner::P0);

  int add_vertex(Owner owner, std::string name = {});
  void add_edge(int u, int v);
  void set_owner(int v, Owner o) { owner_.at(v) = o; }

  int size() const { return static_cast<int>(owner_.size()); }
  Owner owner(int v) const { return owner_[v]; }
  const std::vector<int>& successors(int v) const { return succ_[v]; }
  const std::string& name(int v) const { return names_[v]; }
  VertexSet owned_by(Owner o) const;
  VertexSet all() const { return VertexSet(owner_.size(), true); }

  // Forgets the random/player distinction of random vertices; used for
  // plain arena utilities. Random vertices become P1 with no live edges.
  GameGraph as_game() const;

 private:
  std::vector<Owner> owner_;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> succ_;
};

}  // namespace fairgame
