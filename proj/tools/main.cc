// pmctw: treewidth upper bounds for PACE 2017 .gr files.
//
//   pmctw solve [graph.gr] [--timeout S] [--seed N] [--trace]
//   pmctw validate graph.gr decomposition.td

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "pmctw/pace_format.h"
#include "pmctw/solver.h"
#include "pmctw/tree_decomposition.h"

namespace {

std::atomic<bool> g_stop{false};

extern "C" void on_signal(int) { g_stop.store(true); }

std::string read_all(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool read_file(const std::string& path, std::string* out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  *out = read_all(in);
  return true;
}

// Sets the stop flag once the deadline passes unless released first.
class Watchdog {
 public:
  explicit Watchdog(std::chrono::duration<double> limit)
      : thread_([this, limit] {
          std::unique_lock lock(mutex_);
          if (!cv_.wait_for(lock, limit, [this] { return done_; })) {
            g_stop.store(true);
          }
        }) {}
  ~Watchdog() {
    {
      std::lock_guard lock(mutex_);
      done_ = true;
    }
    cv_.notify_one();
    thread_.join();
  }

 private:
  std::mutex mutex_;
  std::condition_variable cv_;
  bool done_ = false;
  std::thread thread_;
};

int run_solve(const std::string& input, double timeout, uint64_t seed,
              bool trace, long det_iters) {
  std::string text;
  if (input.empty() || input == "-") {
    text = read_all(std::cin);
  } else if (!read_file(input, &text)) {
    std::cerr << "cannot read " << input << "\n";
    return 1;
  }

  pmctw::GrFile file;
  try {
    file = pmctw::parse_gr(text);
  } catch (const pmctw::ParseError& e) {
    std::cerr << (input.empty() ? "<stdin>" : input) << ": " << e.what()
              << "\n";
    return 1;
  }

  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);

  const auto start = std::chrono::steady_clock::now();
  pmctw::SolveOptions options;
  options.seed = seed;
  options.cancel = &g_stop;
  if (det_iters >= 0) options.max_iterations = det_iters;
  if (trace) {
    options.on_improvement = [&](const pmctw::Width& w,
                                 const pmctw::TreeDecomposition&) {
      std::chrono::duration<double> t = std::chrono::steady_clock::now() - start;
      std::fprintf(stderr, "c %9.3fs width %s\n", t.count(),
                   w.to_string().c_str());
    };
  }

  pmctw::SolveResult result;
  try {
    std::optional<Watchdog> watchdog;
    if (det_iters < 0) watchdog.emplace(std::chrono::duration<double>(timeout));
    result = pmctw::solve(file.graph, options);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }

  const int n = file.graph.num_vertices();
  std::cout << pmctw::emit_td(result.td, file.labels, n) << std::flush;
  if (trace) {
    std::fprintf(stderr, "c final width %s after %ld iterations\n",
                 result.width.to_string().c_str(), result.iterations);
  }
  return 0;
}

int run_validate(const std::string& graph_path, const std::string& td_path) {
  std::string graph_text, td_text;
  if (!read_file(graph_path, &graph_text)) {
    std::cerr << "cannot read " << graph_path << "\n";
    return 1;
  }
  if (!read_file(td_path, &td_text)) {
    std::cerr << "cannot read " << td_path << "\n";
    return 1;
  }
  try {
    pmctw::GrFile file = pmctw::parse_gr(graph_text);
    pmctw::TreeDecomposition td =
        pmctw::parse_td(td_text, file.graph.num_vertices());
    pmctw::Width w = pmctw::validate_td(file.graph, td);
    std::cout << "valid, width " << w.to_string() << "\n";
    return 0;
  } catch (const pmctw::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const pmctw::DecompositionError& e) {
    std::cout << "invalid: " << e.what() << "\n";
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Treewidth upper bounds via potential maximal cliques"};
  app.require_subcommand(1);

  CLI::App* solve = app.add_subcommand("solve", "Write a tree decomposition");
  std::string input;
  double timeout = 1800;
  uint64_t seed = 1;
  bool trace = false;
  long det_iters = -1;
  solve->add_option("input", input, ".gr file (standard input if omitted)");
  solve->add_option("--timeout", timeout, "Budget in seconds")
      ->check(CLI::NonNegativeNumber);
  solve->add_option("--seed", seed, "Random seed");
  solve->add_flag("--trace", trace, "Report improvements on standard error");
  // Budget in improvement iterations instead of seconds; output is then
  // reproducible byte for byte.
  solve->add_option("--det-iters", det_iters)->group("");

  CLI::App* validate =
      app.add_subcommand("validate", "Check a .td against its .gr");
  std::string graph_path, td_path;
  validate->add_option("graph", graph_path)->required();
  validate->add_option("td", td_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (*solve) return run_solve(input, timeout, seed, trace, det_iters);
  return run_validate(graph_path, td_path);
}
