#pragma once

#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "pmctw/graph.h"
#include "pmctw/tree_decomposition.h"

namespace pmctw {

using Rng = std::mt19937_64;

// A chordal supergraph `result` of `base` on the same vertices.
struct Triangulation {
  Graph base;
  std::vector<Edge> fill_edges;  // in the order they were introduced
  Graph result;
};

class NotChordalError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Maximum-cardinality search visit order (first visited first).
std::vector<Vertex> mcs_order(const Graph& g);

// A perfect elimination ordering when g is chordal.
std::optional<std::vector<Vertex>> perfect_elimination_order(const Graph& g);
bool is_chordal(const Graph& g);

// Greedy elimination by minimum average fill: fill(v) / deg(v), ties by
// fill, then degree, then id. With an rng, exact ties on all three keys are
// broken uniformly at random instead of by id.
Triangulation maf_triangulate(const Graph& g, Rng* rng = nullptr);

// Drops fill edges (most recent first, repeated until stable) while the
// graph stays chordal. The result is an inclusion-minimal triangulation.
Triangulation minimalize(const Triangulation& h);

// Minimal triangulation: MAF elimination followed by minimalization.
Triangulation mmaf(const Graph& g, Rng* rng = nullptr);

// Maximal cliques of a chordal graph, one per clique-tree node.
std::vector<VertexSet> maximal_cliques(const Graph& chordal);

// Clique tree of a chordal graph; disconnected inputs get their trees
// joined through empty intersections. Throws NotChordalError.
TreeDecomposition clique_tree(const Graph& chordal);

}  // namespace pmctw
