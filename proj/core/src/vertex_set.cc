#include "pmctw/vertex_set.h"

#include <cassert>

namespace pmctw {

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~uint64_t{0};
  if (universe % 64 != 0) {
    s.words_.back() = (uint64_t{1} << (universe % 64)) - 1;
  }
  return s;
}

VertexSet VertexSet::from_vector(int universe,
                                 const std::vector<Vertex>& members) {
  VertexSet s(universe);
  for (Vertex v : members) s.insert(v);
  return s;
}

void VertexSet::clear() {
  for (auto& w : words_) w = 0;
}

int VertexSet::size() const {
  int count = 0;
  for (uint64_t w : words_) count += std::popcount(w);
  return count;
}

bool VertexSet::empty() const {
  for (uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

Vertex VertexSet::first() const {
  for (size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) {
      return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
    }
  }
  return -1;
}

Vertex VertexSet::next(Vertex v) const {
  size_t start = static_cast<size_t>(v) + 1;
  size_t i = start >> 6;
  if (i >= words_.size()) return -1;
  uint64_t w = words_[i] & (~uint64_t{0} << (start & 63));
  while (true) {
    if (w != 0) return static_cast<Vertex>(i * 64 + std::countr_zero(w));
    if (++i == words_.size()) return -1;
    w = words_[i];
  }
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  assert(universe_ == other.universe_);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  assert(universe_ == other.universe_);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  assert(universe_ == other.universe_);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  assert(universe_ == other.universe_);
  for (size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  assert(universe_ == other.universe_);
  for (size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

int VertexSet::intersection_size(const VertexSet& other) const {
  assert(universe_ == other.universe_);
  int count = 0;
  for (size_t i = 0; i < words_.size(); ++i) {
    count += std::popcount(words_[i] & other.words_[i]);
  }
  return count;
}

VertexSet VertexSet::complement() const {
  return full(universe_) - *this;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<size_t>(size()));
  for (Vertex v : *this) out.push_back(v);
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first_member = true;
  for (Vertex v : *this) {
    if (!first_member) out += ",";
    out += std::to_string(v);
    first_member = false;
  }
  return out + "}";
}

bool VertexSet::lex_less(const VertexSet& other) const {
  assert(universe_ == other.universe_);
  for (size_t i = 0; i < words_.size(); ++i) {
    uint64_t diff = words_[i] ^ other.words_[i];
    if (diff == 0) continue;
    Vertex d = static_cast<Vertex>(i * 64 + std::countr_zero(diff));
    // The set holding d is smaller unless the other list ends before d.
    if (contains(d)) return other.next(d) != -1;
    return next(d) == -1;
  }
  return false;
}

size_t VertexSet::hash() const {
  // splitmix-style mixing per word
  uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<uint64_t>(universe_);
  for (uint64_t w : words_) {
    uint64_t z = w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h ^= z ^ (z >> 31);
  }
  return static_cast<size_t>(h);
}

}  // namespace pmctw
