#include "pmctw/improver.h"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "pmctw/pmc.h"

namespace pmctw {

namespace {

constexpr Width kNoWidth{-1, 0};

template <typename T>
const T& pick_one(const std::vector<T>& items, Rng& rng) {
  std::uniform_int_distribution<size_t> dist(0, items.size() - 1);
  return items[dist(rng)];
}

}  // namespace

Improver::Improver(const Graph& g, uint64_t seed, ImproverOptions options)
    : g_(&g), options_(options), rng_(seed), pi_(g) {
  Triangulation h = mmaf(g, &rng_);
  known_optimal_ = h.fill_edges.empty();
  best_td_ = clique_tree(h.result);
  for (const VertexSet& clique : best_td_.bags) insert_verified(clique);
  width_ = td_width(best_td_);
  trace_.push_back(width_);
}

Improver::Improver(const Graph& g, const PmcSet& initial, uint64_t seed,
                   ImproverOptions options)
    : g_(&g), options_(options), rng_(seed), pi_(g) {
  for (const VertexSet& x : initial) insert_verified(x);
  const DpResult& result = dp();
  if (!result.width) {
    throw std::invalid_argument("PMC set supports no tree decomposition");
  }
  width_ = *result.width;
  best_td_ = extract_td(pi_, result.table);
  known_optimal_ = is_chordal(g);
  trace_.push_back(width_);
}

const DpResult& Improver::dp() {
  if (!dp_) dp_ = run_dp(pi_);
  return *dp_;
}

void Improver::insert_verified(const VertexSet& x) {
  if (options_.verify_insertions && !is_pmc(*g_, x)) {
    throw std::logic_error("non-PMC inserted: " + x.to_string());
  }
  if (pi_.insert(x)) dp_.reset();
}

bool Improver::add_candidate(const VertexSet& x) {
  if (pi_.contains(x) || !is_pmc(*g_, x)) return false;
  pi_.insert(x);
  dp_.reset();
  return true;
}

int Improver::add_cliques(const SubgraphView& view, const Graph& chordal,
                          int max_size) {
  int added = 0;
  for (const VertexSet& clique : maximal_cliques(chordal)) {
    if (clique.size() > max_size) continue;
    if (add_candidate(view.lift(clique, g_->num_vertices()))) ++added;
  }
  return added;
}

bool Improver::try_commit() {
  const DpResult& result = dp();
  if (!result.width || !(*result.width < width_)) return false;
  width_ = *result.width;
  take_core();
  const DpResult& trimmed = dp();
  if (!trimmed.width || *trimmed.width != width_) {
    throw std::logic_error("core changed the optimal width");
  }
  best_td_ = extract_td(pi_, trimmed.table);
  trace_.push_back(width_);
  return true;
}

void Improver::take_core() {
  const DpResult& result = dp();
  PmcSet core = pi_.subset(extract_core(pi_, result.table));
  pi_ = std::move(core);
  dp_.reset();
}

int Improver::reseed() {
  Triangulation h = mmaf(*g_, &rng_);
  int added = 0;
  for (const VertexSet& clique : maximal_cliques(h.result)) {
    if (pi_.contains(clique)) continue;
    insert_verified(clique);
    ++added;
  }
  return added;
}

bool Improver::improve_once(const Budget& budget) {
  ++iterations_;
  if (known_optimal_) return false;
  if (consecutive_failures_ >= options_.stagnation_restart) {
    reseed();
    consecutive_failures_ = 0;
    if (try_commit()) return true;
  }

  const int start_size = std::max(pi_.size(), 1);
  int idle_rounds = 0;
  while (!budget.expired()) {
    int added = 0;
    for (const PromisingPair& pair :
         enumerate_promising(options_.promising_limit)) {
      if (budget.expired()) break;
      ConnectResult path = path_connect(pair);
      added += path.added;
      if (path.success) break;
      ConnectResult remote = greedy_remote_connect(pair);
      added += remote.added;
      if (remote.success) break;
      added += direct_connect(pair);
    }
    if (added > 0 && try_commit()) {
      consecutive_failures_ = 0;
      return true;
    }
    if (budget.expired()) break;

    int diversified = diversify();
    added += diversified;
    if (diversified > 0 && try_commit()) {
      consecutive_failures_ = 0;
      return true;
    }

    if (pi_.size() >= options_.growth_factor * start_size) {
      take_core();
      break;
    }
    if (added == 0 && ++idle_rounds >= options_.idle_round_limit) break;
  }
  ++consecutive_failures_;
  return false;
}

int Improver::diversify() {
  const DpResult& current = dp();
  if (!current.width) return 0;
  PmcSet core = pi_.subset(extract_core(pi_, current.table));
  DpResult core_dp = run_dp(core);
  if (!core_dp.width) return 0;
  const int k = core_dp.width->k;

  TreeDecomposition td = extract_td(core, core_dp.table, &rng_);
  std::vector<int> largest;
  for (int i = 0; i < static_cast<int>(td.bags.size()); ++i) {
    if (td.bags[i].size() == k + 1) largest.push_back(i);
  }
  const int start = pick_one(largest, rng_);

  std::vector<std::vector<int>> tree(td.bags.size());
  for (auto [a, b] : td.edges) {
    tree[a].push_back(b);
    tree[b].push_back(a);
  }
  std::vector<char> taken(td.bags.size(), 0);
  std::vector<int> frontier{start};
  taken[start] = 1;
  VertexSet region(g_->num_vertices());
  int grown = 0;
  while (!frontier.empty() && grown < options_.subtree_bag_limit) {
    std::uniform_int_distribution<size_t> dist(0, frontier.size() - 1);
    size_t i = dist(rng_);
    int node = frontier[i];
    frontier[i] = frontier.back();
    frontier.pop_back();
    region |= td.bags[node];
    ++grown;
    for (int next : tree[node]) {
      if (!taken[next]) {
        taken[next] = 1;
        frontier.push_back(next);
      }
    }
  }

  SubgraphView local = local_graph(*g_, region);
  const VertexSet x0 = local.lower(td.bags[start]);
  int added = 0;
  for (const VertexSet& sep : crossing_minimal_separators(
           local.graph, x0, options_.crossing_separator_limit)) {
    GraphBuilder filled(local.graph);
    filled.make_clique(sep);
    Triangulation h = mmaf(std::move(filled).build(), &rng_);
    added += add_cliques(local, h.result, g_->num_vertices());
  }
  return added;
}

std::vector<PromisingPair> Improver::enumerate_promising(int limit) {
  limit = std::max(limit, 0);
  const DpResult& current = dp();
  const DpTable& table = current.table;
  const Width w = width_;

  struct Candidate {
    int outer;
    int inner;
    Width xtw;
    int gap;
  };
  std::vector<Candidate> found;
  for (int c = 0; c < table.root(); ++c) {
    const DpBlock& outer = table[c];
    if (!outer.ctw) continue;
    Width rest = kNoWidth;
    bool defined = true;
    for (const VertexSet& other : components(*g_, outer.block.separator)) {
      if (other == outer.block.component) continue;
      auto id = table.find(other);
      if (!id || !table[*id].ctw) {
        defined = false;
        break;
      }
      rest += *table[*id].ctw;
    }
    if (!defined || !(rest < w)) continue;

    const VertexSet& region = outer.block.component;
    const int outer_size = region.size();
    for (int d = 0; d < c; ++d) {
      const DpBlock& inner = table[d];
      if (!inner.ctw) continue;
      const VertexSet& part = inner.block.component;
      if (!region.contains(part.first())) continue;
      const int inner_size = part.size();
      if (inner_size >= outer_size || !part.is_subset_of(region)) continue;
      Width xtw = rest + *inner.ctw;
      if (xtw < w) found.push_back({c, d, xtw, outer_size - inner_size});
    }
  }

  auto order = [](const Candidate& a, const Candidate& b) {
    if (a.xtw != b.xtw) return a.xtw < b.xtw;
    if (a.gap != b.gap) return a.gap < b.gap;
    if (a.outer != b.outer) return a.outer < b.outer;
    return a.inner < b.inner;
  };
  if (static_cast<int>(found.size()) > limit) {
    std::nth_element(found.begin(), found.begin() + limit, found.end(), order);
    found.resize(limit);
  }
  std::sort(found.begin(), found.end(), order);

  std::vector<PromisingPair> out;
  out.reserve(found.size());
  for (const Candidate& c : found) {
    out.push_back({table[c.outer].block, table[c.inner].block, c.xtw});
  }
  return out;
}

int Improver::direct_connect(const PromisingPair& pair) {
  const int k = width_.k;
  VertexSet s = pair.outer.separator | pair.inner.separator;
  for (const Block& b : components_with_neighborhoods(*g_, s)) {
    if (b.separator == s) return 0;
  }
  SubgraphView local = local_graph(*g_, s);
  if (is_clique(local.graph, local.graph.all_vertices())) {
    return s.size() <= k && add_candidate(s) ? 1 : 0;
  }
  Triangulation h = mmaf(local.graph, &rng_);
  return add_cliques(local, h.result, k);
}

ConnectResult Improver::greedy_remote_connect(const PromisingPair& pair) {
  const int k = width_.k;
  VertexSet gap =
      closed_neighborhood(*g_, pair.outer.component) - pair.inner.component;
  SubgraphView local = local_graph(*g_, gap);
  Triangulation h = mmaf(local.graph, &rng_);
  ConnectResult result;
  int largest = 0;
  for (const VertexSet& clique : maximal_cliques(h.result)) {
    largest = std::max(largest, clique.size());
  }
  result.success = largest <= k;
  result.added = add_cliques(local, h.result, k + 1);
  return result;
}

ConnectResult Improver::path_connect(const PromisingPair& pair) {
  const int k = width_.k;
  const VertexSet& target = pair.inner.component;
  const Vertex anchor = target.first();

  struct Step {
    VertexSet cap;
    VertexSet next;
  };
  std::vector<Step> path;
  std::vector<Step> longest;
  std::unordered_set<VertexSet, VertexSetHash> visited;
  int budget = options_.path_candidate_limit;
  bool connected = false;

  // Caps X of `block` with |X| <= k whose only component inside the block
  // contains the target: X = N[C] - C', C' the part of C - v holding the
  // target, for v next to the separator.
  auto candidates = [&](const Block& block) {
    std::vector<Step> out;
    const VertexSet closed = block.component | block.separator;
    VertexSet frontier = neighborhood(*g_, block.separator) & block.component;
    if (block.separator.empty()) frontier = block.component;
    frontier -= target;
    std::unordered_set<VertexSet, VertexSetHash> seen;
    for (Vertex v : frontier) {
      if (budget-- <= 0) break;
      if (block.separator.size() + 1 > k) break;
      VertexSet rest = block.component;
      rest.erase(v);
      VertexSet next(g_->num_vertices());
      for (VertexSet& comp : components_within(*g_, rest)) {
        if (comp.contains(anchor)) {
          next = std::move(comp);
          break;
        }
      }
      if (!seen.insert(next).second) continue;
      VertexSet cap = closed - next;
      if (cap.size() > k || !is_pmc(*g_, cap)) continue;
      out.push_back({std::move(cap), std::move(next)});
    }
    std::sort(out.begin(), out.end(), [](const Step& a, const Step& b) {
      int sa = a.cap.size(), sb = b.cap.size();
      if (sa != sb) return sa < sb;
      return a.next.size() > b.next.size();
    });
    return out;
  };

  auto search = [&](auto&& self, const Block& block, int depth) -> bool {
    for (Step& step : candidates(block)) {
      path.push_back(step);
      if (step.next == target) {
        connected = true;
        longest = path;
        return true;
      }
      if (path.size() > longest.size()) longest = path;
      if (depth + 1 <= options_.path_depth_limit &&
          visited.insert(step.next).second) {
        Block deeper{step.next, neighborhood(*g_, step.next)};
        if (self(self, deeper, depth + 1)) return true;
      }
      path.pop_back();
      if (budget <= 0) break;
    }
    return false;
  };
  search(search, pair.outer, 0);

  ConnectResult result;
  result.success = connected;
  for (const Step& step : longest) {
    if (!pi_.contains(step.cap)) {
      pi_.insert(step.cap);
      dp_.reset();
      ++result.added;
    }
  }
  return result;
}

}  // namespace pmctw
