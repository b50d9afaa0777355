#pragma once

#include <vector>

#include "pmctw/graph.h"

namespace pmctw {

// Separators, local graphs, and potential maximal cliques.

bool is_minimal_separator(const Graph& g, const VertexSet& s);

// Components C of g - s with N(C) = s.
std::vector<VertexSet> full_components(const Graph& g, const VertexSet& s);

// True when at least two components of g - s meet u.
bool crosses(const Graph& g, const VertexSet& s, const VertexSet& u);

// G[s] with the neighborhood of every component of g - s made a clique.
// Local vertex i is s.to_vector()[i].
SubgraphView local_graph(const Graph& g, const VertexSet& s);

// x is a potential maximal clique: no component of g - x is full, and
// every nonadjacent pair in x shares some component's neighborhood.
bool is_pmc(const Graph& g, const VertexSet& x);

// One block (C, N(C)) per component C of g - x.
std::vector<Block> blocks_of_pmc(const Graph& g, const VertexSet& x);

// N(C) <= x <= N[C].
bool is_cap(const Graph& g, const VertexSet& x, const Block& block);

// Up to `limit` distinct minimal separators crossing x0, found as the
// neighborhoods of components of g - N[v] for v in x0.
std::vector<VertexSet> crossing_minimal_separators(const Graph& g,
                                                   const VertexSet& x0,
                                                   int limit = 32);

}  // namespace pmctw
