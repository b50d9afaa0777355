#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pmctw/budget.h"
#include "pmctw/bt_dp.h"
#include "pmctw/graph.h"
#include "pmctw/pmc_set.h"
#include "pmctw/tree_decomposition.h"
#include "pmctw/triangulation.h"
#include "pmctw/width.h"

namespace pmctw {

struct ImproverOptions {
  int promising_limit = 64;
  int crossing_separator_limit = 32;
  int subtree_bag_limit = 24;
  int path_depth_limit = 20;
  // Cap on candidate caps examined by one path search.
  int path_candidate_limit = 4000;
  // An iteration gives up once the PMC set reaches this multiple of the
  // core it started from.
  int growth_factor = 4;
  int idle_round_limit = 3;
  int stagnation_restart = 8;
  // Re-check is_pmc on every insertion and throw std::logic_error on failure.
  bool verify_insertions = false;
};

// Nested blocks (C, D), D inside C, whose external width is below the
// current width.
struct PromisingPair {
  Block outer;
  Block inner;
  Width xtw;
};

struct ConnectResult {
  bool success = false;
  int added = 0;
};

// Iterative improvement over a set of potential maximal cliques of a
// connected graph. The committed width only ever decreases, and the PMC
// set always supports a decomposition of at most that width.
class Improver {
 public:
  // Starts from the maximal cliques of a minimal triangulation of g. The
  // graph is not copied and must outlive the improver.
  Improver(const Graph& g, uint64_t seed, ImproverOptions options = {});
  Improver(Graph&&, uint64_t, ImproverOptions = {}) = delete;
  // Starts from a caller-supplied PMC set; throws std::invalid_argument if
  // it supports no decomposition.
  Improver(const Graph& g, const PmcSet& initial, uint64_t seed,
           ImproverOptions options = {});

  const Graph& graph() const { return *g_; }
  const PmcSet& pmcs() const { return pi_; }
  Width width() const { return width_; }
  const TreeDecomposition& best_td() const { return best_td_; }
  const std::vector<Width>& trace() const { return trace_; }
  long iterations() const { return iterations_; }
  // True when the starting triangulation is already optimal (g chordal).
  bool known_optimal() const { return known_optimal_; }

  // Accumulates PMCs until the width drops (returns true, the PMC set is
  // replaced by its core) or this iteration's budget runs out.
  bool improve_once(const Budget& budget = {});

  int diversify();
  std::vector<PromisingPair> enumerate_promising(int limit);
  int direct_connect(const PromisingPair& pair);
  ConnectResult greedy_remote_connect(const PromisingPair& pair);
  ConnectResult path_connect(const PromisingPair& pair);

  // Merges the cliques of a fresh randomized triangulation of g.
  int reseed();
  // Shrinks the PMC set to its core at the current width.
  void take_core();
  // Re-runs the DP; commits and returns true if the width dropped.
  bool try_commit();

  const DpResult& dp();

 private:
  bool add_candidate(const VertexSet& x);
  void insert_verified(const VertexSet& x);
  int add_cliques(const SubgraphView& view, const Graph& chordal,
                  int max_size);

  const Graph* g_;
  ImproverOptions options_;
  Rng rng_;
  PmcSet pi_;
  std::optional<DpResult> dp_;
  Width width_;
  TreeDecomposition best_td_;
  std::vector<Width> trace_;
  long iterations_ = 0;
  int consecutive_failures_ = 0;
  bool known_optimal_ = false;
};

}  // namespace pmctw
