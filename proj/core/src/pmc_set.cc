#include "pmctw/pmc_set.h"

#include "pmctw/pmc.h"

namespace pmctw {

std::optional<int> PmcSet::index_of(const VertexSet& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool PmcSet::insert(const VertexSet& x) {
  auto [it, inserted] = index_.emplace(x, size());
  if (!inserted) return false;
  sets_.push_back(x);
  blocks_.emplace_back();
  return true;
}

const std::vector<Block>& PmcSet::blocks(int i) const {
  auto& slot = blocks_[i];
  if (!slot) slot = blocks_of_pmc(*g_, sets_[i]);
  return *slot;
}

PmcSet PmcSet::subset(const std::vector<int>& indices) const {
  PmcSet out(*g_);
  for (int i : indices) {
    if (out.insert(sets_[i]) && blocks_[i]) out.blocks_.back() = blocks_[i];
  }
  return out;
}

}  // namespace pmctw
