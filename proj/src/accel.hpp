#pragma once

#include <map>
#include <utility>
#include <vector>

#include "fairgame/vertex_set.hpp"

namespace fairgame::detail {

// Warm-start cache for nested fixpoints. A key is a structural part (variable
// tag, permutation and goal prefixes) plus a counter part. Only the most
// recent value per key is kept, and any counter >= M bypasses the cache.
class AccelCache {
 public:
  explicit AccelCache(int bound) : bound_(bound) {}

  bool usable(const std::vector<int>& counters) const {
    if (bound_ <= 0) return false;
    for (int c : counters)
      if (c >= bound_) return false;
    return true;
  }

  const VertexSet* find(const std::vector<int>& structure, const std::vector<int>& counters) const {
    if (!usable(counters)) return nullptr;
    auto it = map_.find({structure, counters});
    return it == map_.end() ? nullptr : &it->second;
  }

  void store(std::vector<int> structure, std::vector<int> counters, const VertexSet& value) {
    if (!usable(counters)) return;
    map_[{std::move(structure), std::move(counters)}] = value;
  }

 private:
  int bound_;
  std::map<std::pair<std::vector<int>, std::vector<int>>, VertexSet> map_;
};

// Structural tags keep Y and X keys apart.
inline constexpr int kNuTag = -1;
inline constexpr int kMuTag = -2;

}  // namespace fairgame::detail
