#include "pmctw/tree_decomposition.h"

#include <numeric>
#include <unordered_set>

namespace pmctw {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

Width td_width(const TreeDecomposition& td) {
  Width w{-1, 0};
  for (const auto& bag : td.bags) w += bag_width(bag.size());
  return w;
}

Width validate_td(const Graph& g, const TreeDecomposition& td) {
  const int n = g.num_vertices();
  const int num_bags = static_cast<int>(td.bags.size());

  for (int i = 0; i < num_bags; ++i) {
    if (td.bags[i].universe() != n) {
      throw DecompositionError(TdViolation::kBagOutOfRange,
                               "bag " + std::to_string(i + 1) +
                                   " is not over the graph's vertex set");
    }
  }

  if (num_bags == 0) {
    if (n > 0) {
      throw DecompositionError(TdViolation::kVertexNotCovered,
                               "vertex not covered: no bags");
    }
    return {-1, 0};
  }
  if (static_cast<int>(td.edges.size()) != num_bags - 1) {
    throw DecompositionError(TdViolation::kNotATree,
                             "not a tree: " + std::to_string(td.edges.size()) +
                                 " edges for " + std::to_string(num_bags) +
                                 " bags");
  }
  std::vector<int> parent(num_bags);
  std::iota(parent.begin(), parent.end(), 0);
  for (auto [a, b] : td.edges) {
    if (a < 0 || b < 0 || a >= num_bags || b >= num_bags || a == b) {
      throw DecompositionError(TdViolation::kNotATree,
                               "not a tree: invalid tree edge");
    }
    int ra = find_root(parent, a);
    int rb = find_root(parent, b);
    if (ra == rb) {
      throw DecompositionError(TdViolation::kNotATree,
                               "not a tree: cycle through bag " +
                                   std::to_string(a + 1));
    }
    parent[ra] = rb;
  }

  std::unordered_set<VertexSet, VertexSetHash> distinct;
  for (int i = 0; i < num_bags; ++i) {
    if (!distinct.insert(td.bags[i]).second) {
      throw DecompositionError(TdViolation::kDuplicateBag,
                               "duplicate bag " + std::to_string(i + 1));
    }
  }

  std::vector<std::vector<int>> occupancy(n);
  for (int i = 0; i < num_bags; ++i) {
    for (Vertex v : td.bags[i]) occupancy[v].push_back(i);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (occupancy[v].empty()) {
      throw DecompositionError(
          TdViolation::kVertexNotCovered,
          "vertex not covered: " + std::to_string(v + 1));
    }
  }

  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.adjacency(u)) {
      if (v < u) continue;
      const auto& shorter =
          occupancy[u].size() <= occupancy[v].size() ? occupancy[u]
                                                     : occupancy[v];
      Vertex other = occupancy[u].size() <= occupancy[v].size() ? v : u;
      bool covered = false;
      for (int b : shorter) {
        if (td.bags[b].contains(other)) {
          covered = true;
          break;
        }
      }
      if (!covered) {
        throw DecompositionError(TdViolation::kEdgeNotCovered,
                                 "edge not covered: " + std::to_string(u + 1) +
                                     " " + std::to_string(v + 1));
      }
    }
  }

  // In a tree, the nodes holding v induce a subtree iff they span exactly
  // (count - 1) tree edges.
  std::vector<int> inner_edges(n, 0);
  for (auto [a, b] : td.edges) {
    const VertexSet& small =
        td.bags[a].size() <= td.bags[b].size() ? td.bags[a] : td.bags[b];
    const VertexSet& large = &small == &td.bags[a] ? td.bags[b] : td.bags[a];
    for (Vertex v : small) {
      if (large.contains(v)) ++inner_edges[v];
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (inner_edges[v] != static_cast<int>(occupancy[v].size()) - 1) {
      throw DecompositionError(
          TdViolation::kDisconnectedOccupancy,
          "bags containing vertex " + std::to_string(v + 1) +
              " are not connected");
    }
  }

  return td_width(td);
}

TreeDecomposition join_components(
    int n, const std::vector<SubgraphView>& component_views,
    const std::vector<TreeDecomposition>& parts) {
  TreeDecomposition out;
  int first_bag_of_previous = -1;
  for (size_t c = 0; c < parts.size(); ++c) {
    const int offset = static_cast<int>(out.bags.size());
    for (const auto& bag : parts[c].bags) {
      out.bags.push_back(component_views[c].lift(bag, n));
    }
    for (auto [a, b] : parts[c].edges) {
      out.edges.emplace_back(a + offset, b + offset);
    }
    if (parts[c].bags.empty()) continue;
    if (first_bag_of_previous >= 0) {
      out.edges.emplace_back(first_bag_of_previous, offset);
    }
    first_bag_of_previous = offset;
  }
  return out;
}

}  // namespace pmctw
