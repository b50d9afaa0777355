#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pmctw/graph.h"
#include "pmctw/tree_decomposition.h"

namespace pmctw {

// PACE 2017 treewidth formats.
//
//   .gr   c <comment>
//         p tw <n> <m>
//         <u> <v>            (1-based, one edge per line)
//
//   .td   s td <bags> <max bag size> <n>
//         b <i> <v>...       (1-based bag index and vertices)
//         <i> <j>            (tree edges between bag indices)

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct GrFile {
  Graph graph;
  // labels[v] is the 1-based vertex number from the file.
  std::vector<int> labels;
  int declared_edges = 0;
};

// Self-loops and repeated edges are dropped silently.
GrFile parse_gr(std::string_view text);

// Bags are written with ascending labels. `labels` maps internal ids to
// output labels.
std::string emit_td(const TreeDecomposition& td, const std::vector<int>& labels,
                    int n);

// Decodes a .td for a graph on n vertices with labels 1..n.
TreeDecomposition parse_td(std::string_view text, int n);

}  // namespace pmctw
