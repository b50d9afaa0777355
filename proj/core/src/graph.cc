#include "pmctw/graph.h"

#include <algorithm>
#include <cassert>

namespace pmctw {

Graph::Graph(int n) : n_(n), rows_(n, VertexSet(n)), lists_(n) {}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder builder(n);
  for (auto [u, v] : edges) {
    if (u != v) builder.add_edge(u, v);
  }
  return std::move(builder).build();
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
  Graph g;
  g.n_ = static_cast<int>(rows.size());
  g.rows_ = std::move(rows);
  g.lists_.resize(g.n_);
  long twice_m = 0;
  for (Vertex v = 0; v < g.n_; ++v) {
    assert(!g.rows_[v].contains(v));
    g.lists_[v] = g.rows_[v].to_vector();
    twice_m += static_cast<long>(g.lists_[v].size());
  }
  g.m_ = static_cast<int>(twice_m / 2);
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<size_t>(m_));
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : lists_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

GraphBuilder::GraphBuilder(int n) : rows_(n, VertexSet(n)) {}

GraphBuilder::GraphBuilder(const Graph& g) {
  rows_.reserve(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) rows_.push_back(g.neighbors(v));
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u == v) return;
  rows_[u].insert(v);
  rows_[v].insert(u);
}

void GraphBuilder::make_clique(const VertexSet& s) {
  for (Vertex v : s) {
    rows_[v] |= s;
    rows_[v].erase(v);
  }
}

Graph GraphBuilder::build() && { return Graph::from_rows(std::move(rows_)); }

VertexSet SubgraphView::lift(const VertexSet& local,
                             int parent_universe) const {
  VertexSet out(parent_universe);
  for (Vertex v : local) out.insert(to_parent[v]);
  return out;
}

VertexSet SubgraphView::lower(const VertexSet& parent) const {
  VertexSet out(graph.num_vertices());
  for (Vertex v : parent) {
    if (from_parent[v] >= 0) out.insert(from_parent[v]);
  }
  return out;
}

SubgraphView induced_subgraph(const Graph& g, const VertexSet& vertices) {
  SubgraphView view;
  view.to_parent = vertices.to_vector();
  view.from_parent.assign(g.num_vertices(), -1);
  const int size = static_cast<int>(view.to_parent.size());
  for (int i = 0; i < size; ++i) view.from_parent[view.to_parent[i]] = i;

  std::vector<VertexSet> rows(size, VertexSet(size));
  for (int i = 0; i < size; ++i) {
    for (Vertex w : g.adjacency(view.to_parent[i])) {
      int j = view.from_parent[w];
      if (j >= 0) rows[i].insert(j);
    }
  }
  view.graph = Graph::from_rows(std::move(rows));
  return view;
}

namespace {

// Depth-first sweep over g minus `removed`; calls emit(component, boundary)
// per component in order of smallest member.
template <typename Emit>
void sweep_components(const Graph& g, const VertexSet& removed,
                      bool want_boundary, Emit&& emit) {
  const int n = g.num_vertices();
  VertexSet seen = removed;
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < n; ++start) {
    if (seen.contains(start)) continue;
    VertexSet comp(n);
    VertexSet boundary(want_boundary ? n : 0);
    seen.insert(start);
    comp.insert(start);
    stack.push_back(start);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.adjacency(v)) {
        if (!seen.contains(w)) {
          seen.insert(w);
          comp.insert(w);
          stack.push_back(w);
        } else if (want_boundary && removed.contains(w)) {
          boundary.insert(w);
        }
      }
    }
    emit(std::move(comp), std::move(boundary));
  }
}

}  // namespace

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
  std::vector<VertexSet> out;
  sweep_components(g, removed, false, [&](VertexSet c, VertexSet) {
    out.push_back(std::move(c));
  });
  return out;
}

std::vector<Block> components_with_neighborhoods(const Graph& g,
                                                 const VertexSet& removed) {
  std::vector<Block> out;
  sweep_components(g, removed, true, [&](VertexSet c, VertexSet b) {
    out.push_back(Block{std::move(c), std::move(b)});
  });
  return out;
}

std::vector<VertexSet> components_within(const Graph& g,
                                         const VertexSet& region) {
  return components(g, region.complement());
}

VertexSet neighborhood(const Graph& g, const VertexSet& u) {
  VertexSet out(g.num_vertices());
  for (Vertex v : u) out |= g.neighbors(v);
  return out -= u;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& u) {
  VertexSet out = u;
  for (Vertex v : u) out |= g.neighbors(v);
  return out;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  const int size = s.size();
  for (Vertex v : s) {
    if (s.intersection_size(g.neighbors(v)) != size - 1) return false;
  }
  return true;
}

bool is_connected(const Graph& g) {
  return components(g, g.empty_set()).size() <= 1;
}

}  // namespace pmctw
