#include "oracle.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace oracle {

int SmallGraph::num_edges() const {
  int twice = 0;
  for (Mask row : adj) twice += popcount(row);
  return twice / 2;
}

SmallGraph from_graph(const pmctw::Graph& g) {
  if (g.num_vertices() > 32) throw std::invalid_argument("graph too large");
  SmallGraph out(g.num_vertices());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  return out;
}

pmctw::Graph to_graph(const SmallGraph& g) {
  std::vector<pmctw::Edge> edges;
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      if (g.edge(u, v)) edges.emplace_back(u, v);
    }
  }
  return pmctw::Graph::from_edges(g.n, edges);
}

pmctw::VertexSet to_set(Mask m, int n) {
  pmctw::VertexSet s(n);
  for (int v = 0; v < n; ++v) {
    if ((m >> v) & 1) s.insert(v);
  }
  return s;
}

Mask to_mask(const pmctw::VertexSet& s) {
  Mask m = 0;
  for (pmctw::Vertex v : s) m |= Mask{1} << v;
  return m;
}

namespace {

int lowest(Mask m) { return __builtin_ctz(m); }

// Vertices reachable from `from` using only vertices in `within`.
Mask reach(const SmallGraph& g, Mask from, Mask within) {
  Mask seen = from;
  Mask frontier = from;
  while (frontier) {
    int v = lowest(frontier);
    frontier &= frontier - 1;
    Mask fresh = g.adj[v] & within & ~seen;
    seen |= fresh;
    frontier |= fresh;
  }
  return seen;
}

}  // namespace

std::vector<Mask> components(const SmallGraph& g, Mask removed) {
  std::vector<Mask> out;
  Mask left = g.all() & ~removed;
  while (left) {
    Mask comp = reach(g, Mask{1} << lowest(left), left);
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

Mask neighborhood(const SmallGraph& g, Mask s) {
  Mask out = 0;
  for (int v = 0; v < g.n; ++v) {
    if ((s >> v) & 1) out |= g.adj[v];
  }
  return out & ~s;
}

bool is_clique(const SmallGraph& g, Mask s) {
  for (int v = 0; v < g.n; ++v) {
    if (((s >> v) & 1) && (s & ~g.adj[v] & ~(Mask{1} << v))) return false;
  }
  return true;
}

bool is_connected(const SmallGraph& g) {
  return g.n == 0 || components(g, 0).size() == 1;
}

int exact_treewidth(const SmallGraph& g) {
  if (g.n == 0) return -1;
  const Mask full = g.all();
  // best[S]: cheapest way to eliminate S first, measured by the largest
  // number of later neighbors any eliminated vertex had.
  std::vector<int> best(size_t{1} << g.n, g.n);
  best[0] = -1;
  for (Mask s = 1; s <= full; ++s) {
    int value = g.n;
    for (Mask rest = s; rest; rest &= rest - 1) {
      int v = lowest(rest);
      Mask before = s & ~(Mask{1} << v);
      // Vertices outside s adjacent to v's component within `before`.
      Mask region = reach(g, Mask{1} << v, before | (Mask{1} << v));
      int q = popcount(neighborhood(g, region) & ~s);
      value = std::min(value, std::max(best[before], q));
    }
    best[s] = value;
    if (s == full) break;
  }
  return best[full];
}

bool is_chordal(const SmallGraph& g) {
  Mask left = g.all();
  while (left) {
    bool found = false;
    for (Mask rest = left; rest; rest &= rest - 1) {
      int v = lowest(rest);
      if (is_clique(g, g.adj[v] & left)) {
        left &= ~(Mask{1} << v);
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<Mask> maximal_cliques(const SmallGraph& g) {
  std::vector<Mask> out;
  const Mask full = g.all();
  for (Mask s = 1; s != 0 && s <= full; ++s) {
    if (!is_clique(g, s)) continue;
    bool maximal = true;
    for (int v = 0; v < g.n && maximal; ++v) {
      if (!((s >> v) & 1) && (s & ~g.adj[v]) == 0) maximal = false;
    }
    if (maximal) out.push_back(s);
    if (s == full) break;
  }
  return out;
}

pmctw::Width clique_width(const SmallGraph& chordal) {
  pmctw::Width w{-1, 0};
  for (Mask c : maximal_cliques(chordal)) w += pmctw::bag_width(popcount(c));
  return w;
}

bool is_minimal_separator(const SmallGraph& g, Mask s) {
  int full = 0;
  for (Mask c : components(g, s)) {
    if (neighborhood(g, c) == s) ++full;
  }
  return full >= 2;
}

std::vector<Mask> minimal_separators(const SmallGraph& g) {
  std::vector<Mask> out;
  const Mask full = g.all();
  for (Mask s = 0;; ++s) {
    if (is_minimal_separator(g, s)) out.push_back(s);
    if (s == full) break;
  }
  return out;
}

namespace {

std::vector<std::pair<int, int>> non_edges(const SmallGraph& g) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      if (!g.edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

bool contained_in(const SmallGraph& a, const SmallGraph& b) {
  for (int v = 0; v < a.n; ++v) {
    if (a.adj[v] & ~b.adj[v]) return false;
  }
  return true;
}

}  // namespace

std::vector<SmallGraph> minimal_triangulations_by_chords(const SmallGraph& g) {
  auto chords = non_edges(g);
  if (chords.size() > 20) throw std::invalid_argument("too many non-edges");
  const size_t count = size_t{1} << chords.size();
  auto build = [&](size_t mask) {
    SmallGraph h = g;
    for (size_t i = 0; i < chords.size(); ++i) {
      if ((mask >> i) & 1) h.add_edge(chords[i].first, chords[i].second);
    }
    return h;
  };
  std::vector<char> chordal(count), below(count);
  for (size_t m = 0; m < count; ++m) {
    chordal[m] = is_chordal(build(m));
    // below[m]: some chord subset of m (including m) is chordal.
    below[m] = chordal[m];
    for (size_t i = 0; i < chords.size() && !below[m]; ++i) {
      if ((m >> i) & 1) below[m] = below[m ^ (size_t{1} << i)];
    }
  }
  std::vector<SmallGraph> out;
  for (size_t m = 0; m < count; ++m) {
    if (!chordal[m]) continue;
    bool minimal = true;
    for (size_t i = 0; i < chords.size() && minimal; ++i) {
      if (((m >> i) & 1) && below[m ^ (size_t{1} << i)]) minimal = false;
    }
    if (minimal) out.push_back(build(m));
  }
  return out;
}

std::vector<SmallGraph> minimal_triangulations_by_orderings(
    const SmallGraph& g) {
  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  std::set<std::vector<Mask>> results;
  do {
    SmallGraph work = g;
    SmallGraph h = g;
    Mask left = g.all();
    for (int v : order) {
      Mask later = work.adj[v] & left & ~(Mask{1} << v);
      for (Mask a = later; a; a &= a - 1) {
        for (Mask b = a & (a - 1); b; b &= b - 1) {
          work.add_edge(lowest(a), lowest(b));
          h.add_edge(lowest(a), lowest(b));
        }
      }
      left &= ~(Mask{1} << v);
    }
    results.insert(h.adj);
  } while (std::next_permutation(order.begin(), order.end()));

  std::vector<SmallGraph> all;
  for (const auto& adj : results) {
    SmallGraph h(g.n);
    h.adj = adj;
    all.push_back(h);
  }
  std::vector<SmallGraph> out;
  for (size_t i = 0; i < all.size(); ++i) {
    bool minimal = true;
    for (size_t j = 0; j < all.size() && minimal; ++j) {
      if (j != i && contained_in(all[j], all[i])) minimal = false;
    }
    if (minimal) out.push_back(all[i]);
  }
  return out;
}

std::vector<SmallGraph> minimal_triangulations_by_separators(
    const SmallGraph& g) {
  const std::vector<Mask> seps = minimal_separators(g);
  const int s = static_cast<int>(seps.size());
  auto crosses = [&](Mask a, Mask b) {
    int hit = 0;
    for (Mask c : components(g, a)) {
      if (c & b) ++hit;
    }
    return hit >= 2;
  };
  std::vector<std::vector<char>> parallel(s, std::vector<char>(s, 0));
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      parallel[i][j] = i != j && !crosses(seps[i], seps[j]);
    }
  }

  std::vector<SmallGraph> out;
  std::vector<int> chosen;
  // Bron-Kerbosch over the "does not cross" relation.
  std::function<void(std::vector<int>, std::vector<int>)> expand =
      [&](std::vector<int> candidates, std::vector<int> excluded) {
        if (candidates.empty() && excluded.empty()) {
          SmallGraph h = g;
          for (int i : chosen) {
            for (Mask a = seps[i]; a; a &= a - 1) {
              for (Mask b = a & (a - 1); b; b &= b - 1) {
                h.add_edge(lowest(a), lowest(b));
              }
            }
          }
          out.push_back(h);
          return;
        }
        int pivot = candidates.empty() ? excluded[0] : candidates[0];
        std::vector<int> todo;
        for (int c : candidates) {
          if (!parallel[pivot][c]) todo.push_back(c);
        }
        for (int c : todo) {
          std::vector<int> next_candidates, next_excluded;
          for (int x : candidates) {
            if (parallel[c][x]) next_candidates.push_back(x);
          }
          for (int x : excluded) {
            if (parallel[c][x]) next_excluded.push_back(x);
          }
          chosen.push_back(c);
          expand(next_candidates, next_excluded);
          chosen.pop_back();
          candidates.erase(std::find(candidates.begin(), candidates.end(), c));
          excluded.push_back(c);
        }
      };
  std::vector<int> all(s);
  std::iota(all.begin(), all.end(), 0);
  if (s == 0) {
    out.push_back(g);
  } else {
    expand(all, {});
  }
  return out;
}

std::set<Mask> cliques_of(const std::vector<SmallGraph>& triangulations) {
  std::set<Mask> out;
  for (const SmallGraph& h : triangulations) {
    for (Mask c : maximal_cliques(h)) out.insert(c);
  }
  return out;
}

std::set<Mask> all_pmcs(const SmallGraph& g) {
  return cliques_of(minimal_triangulations_by_separators(g));
}

OverPi width_over(const SmallGraph& g, const std::set<Mask>& pi) {
  OverPi out;
  for (const SmallGraph& h : minimal_triangulations_by_separators(g)) {
    std::vector<Mask> cliques = maximal_cliques(h);
    bool inside = std::all_of(cliques.begin(), cliques.end(),
                              [&](Mask c) { return pi.count(c) > 0; });
    if (!inside) continue;
    pmctw::Width w = clique_width(h);
    if (!out.defined || w < out.width) {
      out.defined = true;
      out.width = w;
      out.optimal_bags.clear();
    }
    if (w == out.width) out.optimal_bags.insert(cliques.begin(), cliques.end());
  }
  return out;
}

SmallGraph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  SmallGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

SmallGraph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 50; ++attempt) {
    SmallGraph g = random_graph(n, p, rng);
    if (is_connected(g)) return g;
  }
  SmallGraph g = random_graph(n, p, rng);
  std::vector<Mask> comps = components(g, 0);
  std::uniform_int_distribution<int> pick(0, 31);
  for (size_t i = 1; i < comps.size(); ++i) {
    auto member = [&](Mask c) {
      std::vector<int> vs;
      for (int v = 0; v < n; ++v) {
        if ((c >> v) & 1) vs.push_back(v);
      }
      return vs[pick(rng) % vs.size()];
    };
    g.add_edge(member(comps[i - 1]), member(comps[i]));
  }
  return g;
}

SmallGraph cycle(int n) {
  SmallGraph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

SmallGraph path(int n) {
  SmallGraph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

SmallGraph complete(int n) {
  SmallGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

SmallGraph grid(int rows, int cols) {
  SmallGraph g(rows * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      int v = r * cols + c;
      if (c + 1 < cols) g.add_edge(v, v + 1);
      if (r + 1 < rows) g.add_edge(v, v + cols);
    }
  }
  return g;
}

pmctw::Graph random_large_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<pmctw::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return pmctw::Graph::from_edges(n, edges);
}

pmctw::Graph random_partial_ktree(int n, int k, double keep,
                                  std::mt19937_64& rng) {
  std::vector<pmctw::Edge> edges;
  std::vector<std::vector<int>> cliques;
  const int base = std::min(n, k + 1);
  for (int u = 0; u < base; ++u) {
    for (int v = u + 1; v < base; ++v) edges.emplace_back(u, v);
  }
  if (base == k + 1) {
    for (int drop = 0; drop < base; ++drop) {
      std::vector<int> c;
      for (int v = 0; v < base; ++v) {
        if (v != drop) c.push_back(v);
      }
      cliques.push_back(c);
    }
  }
  for (int v = base; v < n; ++v) {
    std::uniform_int_distribution<size_t> pick(0, cliques.size() - 1);
    std::vector<int> host = cliques[pick(rng)];
    for (int u : host) edges.emplace_back(u, v);
    for (size_t i = 0; i < host.size(); ++i) {
      std::vector<int> c = host;
      c[i] = v;
      cliques.push_back(c);
    }
  }
  std::vector<int> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::shuffle(relabel.begin(), relabel.end(), rng);
  std::bernoulli_distribution coin(keep);
  std::vector<pmctw::Edge> kept;
  for (auto [u, v] : edges) {
    if (coin(rng)) kept.emplace_back(relabel[u], relabel[v]);
  }
  return pmctw::Graph::from_edges(n, kept);
}

pmctw::Graph grid_graph(int rows, int cols) {
  std::vector<pmctw::Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      int v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return pmctw::Graph::from_edges(rows * cols, edges);
}

}  // namespace oracle
