#include "pmctw/solver.h"

#include <memory>

namespace pmctw {

SolveResult solve(const Graph& g, const SolveOptions& options) {
  SolveResult result;
  const int n = g.num_vertices();
  if (n == 0) {
    result.trace.push_back(result.width);
    return result;
  }

  Budget budget = options.time_limit ? Budget(*options.time_limit) : Budget();
  budget.set_cancel_flag(options.cancel);

  std::vector<SubgraphView> views;
  for (const VertexSet& comp : components(g, g.empty_set())) {
    views.push_back(induced_subgraph(g, comp));
  }

  Rng seeds(options.seed);
  std::vector<std::unique_ptr<Improver>> parts;
  parts.reserve(views.size());
  for (const SubgraphView& view : views) {
    parts.push_back(
        std::make_unique<Improver>(view.graph, seeds(), options.improver));
  }

  auto publish = [&] {
    Width total{-1, 0};
    std::vector<TreeDecomposition> tds;
    tds.reserve(parts.size());
    for (const auto& part : parts) {
      total += part->width();
      tds.push_back(part->best_td());
    }
    result.width = total;
    result.td = join_components(n, views, tds);
    result.trace.push_back(total);
    if (options.on_improvement) options.on_improvement(total, result.td);
  };
  publish();

  size_t turn = 0;
  while (!budget.expired()) {
    if (options.max_iterations && result.iterations >= *options.max_iterations) {
      break;
    }
    // Only components attaining the overall k can lower the overall width.
    std::vector<size_t> open;
    for (size_t i = 0; i < parts.size(); ++i) {
      if (parts[i]->width().k == result.width.k && !parts[i]->known_optimal()) {
        open.push_back(i);
      }
    }
    if (open.empty()) break;
    Improver& part = *parts[open[turn++ % open.size()]];
    ++result.iterations;
    if (part.improve_once(budget)) publish();
  }
  return result;
}

}  // namespace pmctw
