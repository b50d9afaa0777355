#include "pmctw/triangulation.h"

#include <algorithm>
#include <cstdint>

namespace pmctw {

std::vector<Vertex> mcs_order(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> label(n, 0);
  std::vector<char> visited(n, 0);
  std::vector<std::vector<Vertex>> buckets(n + 1);
  for (Vertex v = n - 1; v >= 0; --v) buckets[0].push_back(v);
  int top = 0;

  std::vector<Vertex> order;
  order.reserve(n);
  for (int i = 0; i < n; ++i) {
    Vertex v = -1;
    while (v < 0) {
      while (buckets[top].empty()) --top;
      Vertex candidate = buckets[top].back();
      buckets[top].pop_back();
      // stale entries are left behind when a label grows
      if (!visited[candidate] && label[candidate] == top) v = candidate;
    }
    visited[v] = 1;
    order.push_back(v);
    for (Vertex w : g.adjacency(v)) {
      if (visited[w]) continue;
      int l = ++label[w];
      buckets[l].push_back(w);
      top = std::max(top, l);
    }
  }
  return order;
}

std::optional<std::vector<Vertex>> perfect_elimination_order(const Graph& g) {
  std::vector<Vertex> order = mcs_order(g);
  std::reverse(order.begin(), order.end());
  const int n = g.num_vertices();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  for (Vertex v : order) {
    Vertex parent = -1;
    for (Vertex w : g.adjacency(v)) {
      if (pos[w] > pos[v] && (parent < 0 || pos[w] < pos[parent])) parent = w;
    }
    if (parent < 0) continue;
    for (Vertex w : g.adjacency(v)) {
      if (pos[w] > pos[v] && w != parent && !g.adjacent(parent, w)) {
        return std::nullopt;
      }
    }
  }
  return order;
}

bool is_chordal(const Graph& g) {
  return perfect_elimination_order(g).has_value();
}

namespace {

struct EliminationKey {
  int64_t fill = 0;
  int64_t degree = 0;

  // fill / degree, with isolated vertices scoring zero
  int64_t num() const { return degree == 0 ? 0 : fill; }
  int64_t den() const { return degree == 0 ? 1 : degree; }
};

// -1, 0, 1 for a before, tied with, after b (id excluded)
int compare_keys(const EliminationKey& a, const EliminationKey& b) {
  int64_t lhs = a.num() * b.den();
  int64_t rhs = b.num() * a.den();
  if (lhs != rhs) return lhs < rhs ? -1 : 1;
  if (a.fill != b.fill) return a.fill < b.fill ? -1 : 1;
  if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
  return 0;
}

EliminationKey key_of(const std::vector<VertexSet>& rows, Vertex v) {
  const VertexSet& nb = rows[v];
  const int64_t degree = nb.size();
  int64_t missing = 0;
  for (Vertex u : nb) missing += degree - 1 - nb.intersection_size(rows[u]);
  return {missing / 2, degree};
}

bool rows_clique(const std::vector<VertexSet>& rows, const VertexSet& s) {
  const int size = s.size();
  for (Vertex v : s) {
    if (s.intersection_size(rows[v]) != size - 1) return false;
  }
  return true;
}

}  // namespace

Triangulation maf_triangulate(const Graph& g, Rng* rng) {
  const int n = g.num_vertices();
  std::vector<VertexSet> rows;
  rows.reserve(n);
  for (Vertex v = 0; v < n; ++v) rows.push_back(g.neighbors(v));

  std::vector<EliminationKey> keys(n);
  for (Vertex v = 0; v < n; ++v) keys[v] = key_of(rows, v);

  GraphBuilder result(g);
  std::vector<Edge> fill_edges;
  VertexSet alive = VertexSet::full(n);
  std::vector<Vertex> ties;

  for (int step = 0; step < n; ++step) {
    ties.clear();
    for (Vertex v : alive) {
      if (ties.empty()) {
        ties.push_back(v);
        continue;
      }
      int c = compare_keys(keys[v], keys[ties.front()]);
      if (c < 0) {
        ties.clear();
        ties.push_back(v);
      } else if (c == 0 && rng != nullptr) {
        ties.push_back(v);
      }
    }
    Vertex v = ties.front();
    if (rng != nullptr && ties.size() > 1) {
      std::uniform_int_distribution<size_t> pick(0, ties.size() - 1);
      v = ties[pick(*rng)];
    }

    const VertexSet nb = rows[v];
    for (Vertex a : nb) {
      VertexSet missing = nb - rows[a];
      for (Vertex b = missing.next(a); b >= 0; b = missing.next(b)) {
        fill_edges.emplace_back(a, b);
        result.add_edge(a, b);
        rows[a].insert(b);
        rows[b].insert(a);
      }
    }
    for (Vertex a : nb) rows[a].erase(v);
    rows[v].clear();
    alive.erase(v);

    VertexSet dirty = nb;
    for (Vertex a : nb) dirty |= rows[a];
    for (Vertex u : dirty) keys[u] = key_of(rows, u);
  }

  return Triangulation{g, std::move(fill_edges), std::move(result).build()};
}

Triangulation minimalize(const Triangulation& h) {
  const int n = h.result.num_vertices();
  std::vector<VertexSet> rows;
  rows.reserve(n);
  for (Vertex v = 0; v < n; ++v) rows.push_back(h.result.neighbors(v));

  // A chordal graph stays chordal after losing uv iff the common
  // neighborhood of u and v is a clique.
  std::vector<char> present(h.fill_edges.size(), 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = h.fill_edges.size(); i-- > 0;) {
      if (!present[i]) continue;
      auto [u, v] = h.fill_edges[i];
      VertexSet common = rows[u] & rows[v];
      if (rows_clique(rows, common)) {
        rows[u].erase(v);
        rows[v].erase(u);
        present[i] = 0;
        changed = true;
      }
    }
  }

  std::vector<Edge> kept;
  for (size_t i = 0; i < h.fill_edges.size(); ++i) {
    if (present[i]) kept.push_back(h.fill_edges[i]);
  }
  return Triangulation{h.base, std::move(kept), Graph::from_rows(std::move(rows))};
}

Triangulation mmaf(const Graph& g, Rng* rng) {
  return minimalize(maf_triangulate(g, rng));
}

TreeDecomposition clique_tree(const Graph& chordal) {
  if (!is_chordal(chordal)) {
    throw NotChordalError("clique tree requested for a non-chordal graph");
  }
  const int n = chordal.num_vertices();
  std::vector<Vertex> order = mcs_order(chordal);
  std::vector<int> visit_index(n, -1);

  TreeDecomposition td;
  std::vector<int> clique_of(n, -1);
  std::vector<int> roots;
  int previous_card = -1;
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    int card = 0;
    Vertex latest = -1;
    for (Vertex w : chordal.adjacency(v)) {
      if (visit_index[w] < 0) continue;
      ++card;
      if (latest < 0 || visit_index[w] > visit_index[latest]) latest = w;
    }
    if (card <= previous_card || td.bags.empty()) {
      VertexSet clique(n);
      for (Vertex w : chordal.adjacency(v)) {
        if (visit_index[w] >= 0) clique.insert(w);
      }
      const int id = static_cast<int>(td.bags.size());
      td.bags.push_back(std::move(clique));
      if (latest >= 0) {
        td.edges.emplace_back(clique_of[latest], id);
      } else {
        roots.push_back(id);
      }
    }
    const int current = static_cast<int>(td.bags.size()) - 1;
    td.bags[current].insert(v);
    clique_of[v] = current;
    visit_index[v] = i;
    previous_card = card;
  }
  for (size_t r = 1; r < roots.size(); ++r) {
    td.edges.emplace_back(roots[0], roots[r]);
  }
  return td;
}

std::vector<VertexSet> maximal_cliques(const Graph& chordal) {
  return clique_tree(chordal).bags;
}

}  // namespace pmctw
