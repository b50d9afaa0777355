#include "pmctw/pmc.h"

#include <unordered_set>

namespace pmctw {

bool is_minimal_separator(const Graph& g, const VertexSet& s) {
  int full = 0;
  for (const Block& b : components_with_neighborhoods(g, s)) {
    if (b.separator == s && ++full >= 2) return true;
  }
  return false;
}

std::vector<VertexSet> full_components(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> out;
  for (Block& b : components_with_neighborhoods(g, s)) {
    if (b.separator == s) out.push_back(std::move(b.component));
  }
  return out;
}

bool crosses(const Graph& g, const VertexSet& s, const VertexSet& u) {
  int meeting = 0;
  for (const VertexSet& c : components(g, s)) {
    if (c.intersects(u) && ++meeting >= 2) return true;
  }
  return false;
}

SubgraphView local_graph(const Graph& g, const VertexSet& s) {
  SubgraphView view = induced_subgraph(g, s);
  std::vector<Block> outside = components_with_neighborhoods(g, s);
  if (outside.empty()) return view;
  GraphBuilder builder(view.graph);
  for (const Block& b : outside) builder.make_clique(view.lower(b.separator));
  view.graph = std::move(builder).build();
  return view;
}

bool is_pmc(const Graph& g, const VertexSet& x) {
  if (x.empty()) return false;
  std::vector<Block> outside = components_with_neighborhoods(g, x);
  for (const Block& b : outside) {
    if (b.separator == x) return false;
  }
  const int size = x.size();
  for (Vertex v : x) {
    VertexSet reach = g.neighbors(v) & x;
    for (const Block& b : outside) {
      if (b.separator.contains(v)) reach |= b.separator;
    }
    reach.insert(v);
    if (reach.intersection_size(x) != size) return false;
  }
  return true;
}

std::vector<Block> blocks_of_pmc(const Graph& g, const VertexSet& x) {
  return components_with_neighborhoods(g, x);
}

bool is_cap(const Graph& g, const VertexSet& x, const Block& block) {
  return block.separator.is_subset_of(x) &&
         x.is_subset_of(closed_neighborhood(g, block.component));
}

std::vector<VertexSet> crossing_minimal_separators(const Graph& g,
                                                   const VertexSet& x0,
                                                   int limit) {
  std::vector<VertexSet> out;
  std::unordered_set<VertexSet, VertexSetHash> seen;
  for (Vertex v : x0) {
    VertexSet closed = g.neighbors(v);
    closed.insert(v);
    for (const Block& b : components_with_neighborhoods(g, closed)) {
      // N(C) for a component C of g - N[v] is a minimal separator with C
      // and the component holding v as full components.
      if (b.separator.empty() || !seen.insert(b.separator).second) continue;
      if (!crosses(g, b.separator, x0)) continue;
      out.push_back(b.separator);
      if (static_cast<int>(out.size()) >= limit) return out;
    }
  }
  return out;
}

}  // namespace pmctw
