#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace pmctw {

using Vertex = int;

// Fixed-universe bitset over vertex ids 0..universe-1. Iteration is always
// in ascending id order.
class VertexSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* set, Vertex v) : set_(set), v_(v) {}

    Vertex operator*() const { return v_; }
    const_iterator& operator++() {
      v_ = set_->next(v_);
      return *this;
    }
    const_iterator operator++(int) {
      const_iterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) {
      return a.v_ == b.v_;
    }

   private:
    const VertexSet* set_ = nullptr;
    Vertex v_ = -1;
  };

  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_(word_count(universe), 0) {}
  VertexSet(int universe, std::initializer_list<Vertex> members);

  static VertexSet full(int universe);
  static VertexSet from_vector(int universe, const std::vector<Vertex>& members);

  int universe() const { return universe_; }

  bool contains(Vertex v) const {
    return (words_[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1U;
  }
  void insert(Vertex v) { words_[static_cast<size_t>(v) >> 6] |= bit(v); }
  void erase(Vertex v) { words_[static_cast<size_t>(v) >> 6] &= ~bit(v); }
  void clear();

  int size() const;
  bool empty() const;

  // Smallest member, or -1 when empty.
  Vertex first() const;
  // Smallest member strictly greater than `v`, or -1.
  Vertex next(Vertex v) const;

  const_iterator begin() const { return const_iterator(this, first()); }
  const_iterator end() const { return const_iterator(this, -1); }

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  int intersection_size(const VertexSet& other) const;
  VertexSet complement() const;

  std::vector<Vertex> to_vector() const;
  std::string to_string() const;

  // Order of the ascending member lists, compared lexicographically.
  bool lex_less(const VertexSet& other) const;

  size_t hash() const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

 private:
  static size_t word_count(int universe) {
    return (static_cast<size_t>(universe) + 63) / 64;
  }
  static uint64_t bit(Vertex v) { return uint64_t{1} << (v & 63); }

  int universe_ = 0;
  std::vector<uint64_t> words_;
};

struct VertexSetHash {
  size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace pmctw
