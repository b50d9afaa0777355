#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "pmctw/pmc_set.h"
#include "pmctw/tree_decomposition.h"
#include "pmctw/triangulation.h"
#include "pmctw/width.h"

namespace pmctw {

struct DpBlock {
  Block block;
  std::vector<int> caps;  // indices into the PmcSet
  std::optional<Width> ctw;
  int best_cap = -1;
};

// Blocks of a PMC set, sorted by component size (root last), with their
// caps and component treewidths.
class DpTable {
 public:
  const std::vector<DpBlock>& blocks() const { return blocks_; }
  const DpBlock& operator[](int i) const { return blocks_[i]; }
  int size() const { return static_cast<int>(blocks_.size()); }
  int root() const { return size() - 1; }
  std::optional<Width> width() const { return blocks_.back().ctw; }

  std::optional<int> find(const VertexSet& component) const;

  // Block ids of all components of g - X, for the PMC at `pmc`.
  const std::vector<int>& children_of(int pmc) const {
    return pmc_children_[pmc];
  }
  // Those components of g - X that lie inside `block`.
  std::vector<int> sub_blocks(int pmc, int block) const;

 private:
  friend DpTable collect_blocks(const PmcSet& pi);
  friend void index_caps(const PmcSet& pi, DpTable& table);
  friend void evaluate_blocks(const PmcSet& pi, DpTable& table);

  std::vector<DpBlock> blocks_;
  std::unordered_map<VertexSet, int, VertexSetHash> index_;
  std::vector<std::vector<int>> pmc_children_;
};

// The root block (V, {}) plus every component of g - X over X in pi,
// deduplicated by component and sorted ascending by size.
DpTable collect_blocks(const PmcSet& pi);

// Fills caps(C) = caps_G(C) restricted to pi for every collected block.
void index_caps(const PmcSet& pi, DpTable& table);

// Component treewidths in ascending block order.
void evaluate_blocks(const PmcSet& pi, DpTable& table);

struct DpResult {
  std::optional<Width> width;  // absent when no decomposition over pi exists
  DpTable table;
};

// Requires a connected graph.
DpResult run_dp(const PmcSet& pi);

// A decomposition over pi realizing the table's root width. Without an rng
// the traceback follows the tie-broken minimizing caps; with one, it picks
// uniformly among caps that keep the total width optimal.
TreeDecomposition extract_td(const PmcSet& pi, const DpTable& table,
                             Rng* rng = nullptr);

// Indices of every PMC that is a bag of some decomposition over pi with
// the optimal width. Ascending.
std::vector<int> extract_core(const PmcSet& pi, const DpTable& table);

}  // namespace pmctw
