#pragma once

#include <span>
#include <utility>
#include <vector>

#include "pmctw/vertex_set.h"

namespace pmctw {

using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on vertices 0..n-1. Keeps both a bitset
// row and a sorted adjacency list per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  // Self-loops and repeated edges are dropped.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_rows(std::vector<VertexSet> rows);

  int num_vertices() const { return n_; }
  int num_edges() const { return m_; }

  const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
  std::span<const Vertex> adjacency(Vertex v) const { return lists_[v]; }
  int degree(Vertex v) const { return static_cast<int>(lists_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }

  VertexSet all_vertices() const { return VertexSet::full(n_); }
  VertexSet empty_set() const { return VertexSet(n_); }
  std::vector<Edge> edges() const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> rows_;
  std::vector<std::vector<Vertex>> lists_;
};

// Accumulates edges for a graph under construction.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  explicit GraphBuilder(const Graph& g);

  int num_vertices() const { return static_cast<int>(rows_.size()); }
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }
  void add_edge(Vertex u, Vertex v);
  void make_clique(const VertexSet& s);
  Graph build() &&;

 private:
  std::vector<VertexSet> rows_;
};

// A graph on a subset of a parent graph's vertices, relabeled densely in
// ascending parent order.
struct SubgraphView {
  Graph graph;
  std::vector<Vertex> to_parent;
  std::vector<Vertex> from_parent;  // -1 for vertices outside the subgraph

  VertexSet lift(const VertexSet& local, int parent_universe) const;
  VertexSet lower(const VertexSet& parent) const;
};

SubgraphView induced_subgraph(const Graph& g, const VertexSet& vertices);

// A connected vertex set together with its open neighborhood.
struct Block {
  VertexSet component;
  VertexSet separator;

  friend bool operator==(const Block&, const Block&) = default;
};

// Components of g minus `removed`, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed);
// Same, each paired with its neighborhood in g.
std::vector<Block> components_with_neighborhoods(const Graph& g,
                                                 const VertexSet& removed);
// Components of the subgraph induced by `region`.
std::vector<VertexSet> components_within(const Graph& g,
                                         const VertexSet& region);

VertexSet neighborhood(const Graph& g, const VertexSet& u);
VertexSet closed_neighborhood(const Graph& g, const VertexSet& u);
bool is_clique(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g);

}  // namespace pmctw
