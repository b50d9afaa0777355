#pragma once

#include <compare>
#include <string>

namespace pmctw {

// Refined width: k is the largest bag size minus one, f the number of bags
// of that size. Ordered lexicographically.
struct Width {
  int k = 0;
  int f = 0;

  friend auto operator<=>(const Width&, const Width&) = default;

  // The larger k absorbs the smaller; equal k adds the counts.
  friend Width operator+(const Width& a, const Width& b) {
    if (a.k == b.k) return {a.k, a.f + b.f};
    return a.k > b.k ? a : b;
  }
  Width& operator+=(const Width& other) { return *this = *this + other; }

  std::string to_string() const {
    return "(" + std::to_string(k) + "," + std::to_string(f) + ")";
  }
};

inline Width bag_width(int bag_size) { return {bag_size - 1, 1}; }

}  // namespace pmctw
