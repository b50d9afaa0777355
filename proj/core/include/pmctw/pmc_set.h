#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "pmctw/graph.h"

namespace pmctw {

// Deduplicated, insertion-ordered collection of potential maximal cliques
// of one graph. The graph must outlive the set. Block lists (components of
// g - X with their neighborhoods) are computed on first use and cached.
class PmcSet {
 public:
  explicit PmcSet(const Graph& g) : g_(&g) {}
  PmcSet(Graph&&) = delete;

  const Graph& graph() const { return *g_; }
  int size() const { return static_cast<int>(sets_.size()); }
  bool empty() const { return sets_.empty(); }
  const VertexSet& operator[](int i) const { return sets_[i]; }

  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }

  bool contains(const VertexSet& x) const { return index_.count(x) != 0; }
  std::optional<int> index_of(const VertexSet& x) const;

  // Returns false if x was already present. Membership in Pi(G) is the
  // caller's responsibility.
  bool insert(const VertexSet& x);

  const std::vector<Block>& blocks(int i) const;

  PmcSet subset(const std::vector<int>& indices) const;

 private:
  const Graph* g_;
  std::vector<VertexSet> sets_;
  mutable std::vector<std::optional<std::vector<Block>>> blocks_;
  std::unordered_map<VertexSet, int, VertexSetHash> index_;
};

}  // namespace pmctw
