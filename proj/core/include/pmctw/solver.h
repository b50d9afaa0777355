#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pmctw/graph.h"
#include "pmctw/improver.h"
#include "pmctw/tree_decomposition.h"
#include "pmctw/width.h"

namespace pmctw {

struct SolveOptions {
  uint64_t seed = 1;
  std::optional<std::chrono::steady_clock::duration> time_limit;
  // Limit on improve_once calls across all components. Runs limited only
  // by this are reproducible bit for bit.
  std::optional<long> max_iterations;
  const std::atomic<bool>* cancel = nullptr;
  ImproverOptions improver;
  // Called with the initial solution and after every committed improvement.
  std::function<void(const Width&, const TreeDecomposition&)> on_improvement;
};

struct SolveResult {
  Width width{-1, 0};
  TreeDecomposition td;
  std::vector<Width> trace;
  long iterations = 0;
};

// Upper bound on treewidth with a witnessing decomposition. Disconnected
// graphs are solved per component and the decompositions joined. The search
// ends early only on chordal inputs; otherwise it runs until the time limit,
// the iteration limit or the cancel flag stops it.
SolveResult solve(const Graph& g, const SolveOptions& options = {});

}  // namespace pmctw
