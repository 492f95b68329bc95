#include "fairgame/vertex_set.hpp"

#include <stdexcept>

namespace fairgame {

VertexSet::VertexSet(std::size_t n, bool full) : n_(n), words_((n + 63) / 64, full ? ~0ULL : 0ULL) {
  trim();
}

VertexSet VertexSet::of(std::size_t n, std::initializer_list<int> ids) {
  VertexSet s(n);
  for (int v : ids) s.insert(v);
  return s;
}

VertexSet VertexSet::of(std::size_t n, const std::vector<int>& ids) {
  VertexSet s(n);
  for (int v : ids) s.insert(v);
  return s;
}

void VertexSet::trim() {
  if (n_ % 64 != 0 && !words_.empty()) words_.back() &= (1ULL << (n_ % 64)) - 1;
}

void VertexSet::check(const VertexSet& o) const {
  if (o.n_ != n_) throw std::invalid_argument("vertex set universe mismatch");
}

void VertexSet::insert(int v) {
  if (v < 0 || static_cast<std::size_t>(v) >= n_) throw std::out_of_range("vertex id out of range");
  words_[static_cast<std::size_t>(v) >> 6] |= 1ULL << (v & 63);
}

void VertexSet::erase(int v) {
  if (v < 0 || static_cast<std::size_t>(v) >= n_) throw std::out_of_range("vertex id out of range");
  words_[static_cast<std::size_t>(v) >> 6] &= ~(1ULL << (v & 63));
}

std::size_t VertexSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

bool VertexSet::empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

bool VertexSet::subset_of(const VertexSet& o) const {
  check(o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
  check(o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

VertexSet VertexSet::complement() const {
  VertexSet r = *this;
  for (auto& w : r.words_) w = ~w;
  r.trim();
  return r;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  check(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  check(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  check(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

bool VertexSet::operator<(const VertexSet& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  return words_ < o.words_;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  for_each([&](int v) { out.push_back(v); });
  return out;
}

int VertexSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return static_cast<int>(w * 64 + __builtin_ctzll(words_[w]));
  return -1;
}

std::string VertexSet::str() const {
  std::string s = "{";
  bool sep = false;
  for_each([&](int v) {
    if (sep) s += ',';
    s += std::to_string(v);
    sep = true;
  });
  return s + "}";
}

std::size_t VertexSet::hash() const {
  std::size_t h = n_;
  for (auto w : words_) h = h * 1000003U ^ std::hash<std::uint64_t>{}(w);
  return h;
}

}  // namespace fairgame
