#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace fairgame {

// Fixed-universe bitset over dense vertex ids. Binary operations on sets with
// different universes throw std::invalid_argument.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n, bool full = false);

  static VertexSet of(std::size_t n, std::initializer_list<int> ids);
  static VertexSet of(std::size_t n, const std::vector<int>& ids);

  std::size_t universe() const { return n_; }
  bool contains(int v) const {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
  }
  void insert(int v);
  void erase(int v);
  std::size_t count() const;
  bool empty() const;
  bool subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet complement() const;
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet& o) const = default;
  // Arbitrary but total order, for use as a map key.
  bool operator<(const VertexSet& o) const;

  std::vector<int> members() const;
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        f(static_cast<int>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }
  int first() const;  // -1 when empty

  // "{0,3,5}"
  std::string str() const;
  std::size_t hash() const;

 private:
  void check(const VertexSet& o) const;
  void trim();
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace fairgame

template <>
struct std::hash<fairgame::VertexSet> {
  std::size_t operator()(const fairgame::VertexSet& s) const { return s.hash(); }
};
