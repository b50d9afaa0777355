#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pmctw/graph.h"
#include "pmctw/width.h"

namespace pmctw {

struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> edges;  // indices into bags
};

enum class TdViolation {
  kBagOutOfRange,
  kNotATree,
  kDuplicateBag,
  kVertexNotCovered,
  kEdgeNotCovered,
  kDisconnectedOccupancy,
};

class DecompositionError : public std::runtime_error {
 public:
  DecompositionError(TdViolation violation, const std::string& what)
      : std::runtime_error(what), violation_(violation) {}
  TdViolation violation() const { return violation_; }

 private:
  TdViolation violation_;
};

// Checks every tree-decomposition condition plus bag distinctness and
// returns the refined width. Throws DecompositionError naming the first
// violated condition.
Width validate_td(const Graph& g, const TreeDecomposition& td);

// Width computed from bag sizes only. An empty decomposition is (-1,0).
Width td_width(const TreeDecomposition& td);

// Decomposition of a whole graph from decompositions of its connected
// components; `parts[i]` is over component_views[i].graph.
TreeDecomposition join_components(
    int n, const std::vector<SubgraphView>& component_views,
    const std::vector<TreeDecomposition>& parts);

}  // namespace pmctw
