#include "pmctw/bt_dp.h"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>

namespace pmctw {

std::optional<int> DpTable::find(const VertexSet& component) const {
  auto it = index_.find(component);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> DpTable::sub_blocks(int pmc, int block) const {
  std::vector<int> out;
  const VertexSet& region = blocks_[block].block.component;
  for (int child : pmc_children_[pmc]) {
    // components of g - X either lie inside a capped block or miss it
    if (region.contains(blocks_[child].block.component.first())) {
      out.push_back(child);
    }
  }
  return out;
}

DpTable collect_blocks(const PmcSet& pi) {
  const Graph& g = pi.graph();
  std::vector<Block> found;
  std::unordered_map<VertexSet, int, VertexSetHash> seen;
  for (int x = 0; x < pi.size(); ++x) {
    for (const Block& b : pi.blocks(x)) {
      if (seen.emplace(b.component, static_cast<int>(found.size())).second) {
        found.push_back(b);
      }
    }
  }
  found.push_back(Block{g.all_vertices(), g.empty_set()});

  std::vector<int> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> sizes(found.size());
  for (size_t i = 0; i < found.size(); ++i) sizes[i] = found[i].component.size();
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return sizes[a] < sizes[b]; });

  DpTable table;
  table.blocks_.reserve(found.size());
  for (int i : order) {
    table.index_.emplace(found[i].component,
                         static_cast<int>(table.blocks_.size()));
    table.blocks_.push_back(DpBlock{std::move(found[i]), {}, std::nullopt, -1});
  }

  table.pmc_children_.resize(pi.size());
  for (int x = 0; x < pi.size(); ++x) {
    for (const Block& b : pi.blocks(x)) {
      table.pmc_children_[x].push_back(table.index_.at(b.component));
    }
  }
  return table;
}

void index_caps(const PmcSet& pi, DpTable& table) {
  const int root = table.root();
  for (int x = 0; x < pi.size(); ++x) {
    const VertexSet& pmc = pi[x];
    const std::vector<Block>& parts = pi.blocks(x);
    std::vector<int> registered;
    for (const Block& b : parts) {
      const VertexSet& sep = b.separator;
      if (sep.empty()) continue;
      // The full component of sep holding X - sep: X - sep together with
      // every component of g - X that reaches outside sep.
      VertexSet capped = pmc - sep;
      for (const Block& other : parts) {
        if (!other.separator.is_subset_of(sep)) capped |= other.component;
      }
      auto id = table.find(capped);
      if (!id || *id == root) continue;
      if (std::find(registered.begin(), registered.end(), *id) !=
          registered.end()) {
        continue;
      }
      registered.push_back(*id);
      table.blocks_[*id].caps.push_back(x);
    }
    table.blocks_[root].caps.push_back(x);
  }
}

void evaluate_blocks(const PmcSet& pi, DpTable& table) {
  for (int c = 0; c < table.size(); ++c) {
    DpBlock& entry = table.blocks_[c];
    entry.ctw.reset();
    entry.best_cap = -1;
    const VertexSet& region = entry.block.component;
    for (int x : entry.caps) {
      Width w = bag_width(pi[x].size());
      bool defined = true;
      for (int child : table.pmc_children_[x]) {
        const DpBlock& sub = table.blocks_[child];
        if (!region.contains(sub.block.component.first())) continue;
        if (!sub.ctw) {
          defined = false;
          break;
        }
        w += *sub.ctw;
      }
      if (!defined) continue;
      bool better = !entry.ctw || w < *entry.ctw;
      if (!better && w == *entry.ctw) {
        const VertexSet& incumbent = pi[entry.best_cap];
        const int size = pi[x].size();
        const int incumbent_size = incumbent.size();
        better = size < incumbent_size ||
                 (size == incumbent_size && pi[x].lex_less(incumbent));
      }
      if (better) {
        entry.ctw = w;
        entry.best_cap = x;
      }
    }
  }
}

DpResult run_dp(const PmcSet& pi) {
  DpTable table = collect_blocks(pi);
  index_caps(pi, table);
  evaluate_blocks(pi, table);
  std::optional<Width> width = table.width();
  return DpResult{width, std::move(table)};
}

namespace {

constexpr int kUnusable = std::numeric_limits<int>::max() / 4;

// Bags of size k+1 that a block's subtree must spend, at minimum, to stay
// within global width k.
int min_spend(const DpBlock& b, int k) {
  if (!b.ctw || b.ctw->k > k) return kUnusable;
  return b.ctw->k == k ? b.ctw->f : 0;
}

int cap_cost(const PmcSet& pi, const DpTable& table, int x, int block,
             int k) {
  const int size = pi[x].size();
  if (size > k + 1) return kUnusable;
  int cost = size == k + 1 ? 1 : 0;
  for (int child : table.sub_blocks(x, block)) {
    int spend = min_spend(table[child], k);
    if (spend >= kUnusable) return kUnusable;
    cost += spend;
  }
  return cost;
}

}  // namespace

TreeDecomposition extract_td(const PmcSet& pi, const DpTable& table,
                             Rng* rng) {
  if (!table.width()) {
    throw std::logic_error("no decomposition over this PMC set");
  }
  const int k = table.width()->k;
  TreeDecomposition td;

  struct Frame {
    int block;
    int allowance;
    int parent_bag;
  };
  std::vector<Frame> stack{{table.root(), table.width()->f, -1}};
  while (!stack.empty()) {
    Frame frame = stack.back();
    stack.pop_back();
    const DpBlock& entry = table[frame.block];

    int chosen = entry.best_cap;
    int slack = 0;
    if (rng != nullptr) {
      std::vector<int> valid;
      std::vector<int> costs;
      for (int x : entry.caps) {
        int cost = cap_cost(pi, table, x, frame.block, k);
        if (cost <= frame.allowance) {
          valid.push_back(x);
          costs.push_back(cost);
        }
      }
      assert(!valid.empty());
      std::uniform_int_distribution<size_t> pick(0, valid.size() - 1);
      size_t i = pick(*rng);
      chosen = valid[i];
      slack = frame.allowance - costs[i];
    }

    const int bag = static_cast<int>(td.bags.size());
    td.bags.push_back(pi[chosen]);
    if (frame.parent_bag >= 0) td.edges.emplace_back(frame.parent_bag, bag);

    std::vector<int> children = table.sub_blocks(chosen, frame.block);
    size_t lucky = 0;
    if (rng != nullptr && !children.empty()) {
      std::uniform_int_distribution<size_t> pick(0, children.size() - 1);
      lucky = pick(*rng);
    }
    for (size_t i = 0; i < children.size(); ++i) {
      int allowance = min_spend(table[children[i]], k);
      if (i == lucky) allowance += slack;
      stack.push_back({children[i], allowance, bag});
    }
  }
  return td;
}

std::vector<int> extract_core(const PmcSet& pi, const DpTable& table) {
  if (!table.width()) return {};
  const int k = table.width()->k;
  std::vector<int> allowance(table.size(), -1);
  allowance[table.root()] = table.width()->f;
  std::vector<char> in_core(pi.size(), 0);

  // Children are strictly smaller than their parent, so a descending sweep
  // sees every block after all of its parents.
  for (int c = table.root(); c >= 0; --c) {
    const int budget = allowance[c];
    if (budget < 0) continue;
    for (int x : table[c].caps) {
      const int cost = cap_cost(pi, table, x, c, k);
      if (cost > budget) continue;
      in_core[x] = 1;
      const int slack = budget - cost;
      for (int child : table.sub_blocks(x, c)) {
        allowance[child] =
            std::max(allowance[child], min_spend(table[child], k) + slack);
      }
    }
  }

  std::vector<int> core;
  for (int x = 0; x < pi.size(); ++x) {
    if (in_core[x]) core.push_back(x);
  }
  return core;
}

}  // namespace pmctw
