#include "pmctw/pace_format.h"

#include <algorithm>
#include <charconv>

namespace pmctw {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long to_number(std::string_view token, int line) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(),
                                   value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) +
                               "'");
  }
  return value;
}

}  // namespace

GrFile parse_gr(std::string_view text) {
  GrFile out;
  bool have_header = false;
  int n = 0;
  std::vector<Edge> edges;
  int line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    auto t = tokens(line);
    if (t.empty() || t[0] == "c") continue;
    if (t[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (t.size() != 4 || t[1] != "tw") {
        throw ParseError(line_no, "malformed header, expected 'p tw <n> <m>'");
      }
      long nv = to_number(t[2], line_no);
      long ne = to_number(t[3], line_no);
      if (nv < 0 || ne < 0) throw ParseError(line_no, "negative size in header");
      n = static_cast<int>(nv);
      out.declared_edges = static_cast<int>(ne);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "edge before 'p tw' header");
    if (t.size() != 2) throw ParseError(line_no, "expected an edge 'u v'");
    long u = to_number(t[0], line_no);
    long v = to_number(t[1], line_no);
    for (long x : {u, v}) {
      if (x < 1 || x > n) {
        throw ParseError(line_no, "vertex " + std::to_string(x) +
                                      " out of range 1.." + std::to_string(n));
      }
    }
    edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
  }
  if (!have_header) throw ParseError(line_no, "missing 'p tw' header");
  out.graph = Graph::from_edges(n, edges);
  out.labels.resize(n);
  for (int v = 0; v < n; ++v) out.labels[v] = v + 1;
  return out;
}

std::string emit_td(const TreeDecomposition& td, const std::vector<int>& labels,
                    int n) {
  int max_bag = 0;
  for (const auto& bag : td.bags) max_bag = std::max(max_bag, bag.size());
  std::string out = "s td " + std::to_string(td.bags.size()) + " " +
                    std::to_string(max_bag) + " " + std::to_string(n) + "\n";
  std::vector<int> row;
  for (size_t i = 0; i < td.bags.size(); ++i) {
    row.clear();
    for (Vertex v : td.bags[i]) row.push_back(labels[v]);
    std::sort(row.begin(), row.end());
    out += "b " + std::to_string(i + 1);
    for (int label : row) out += " " + std::to_string(label);
    out += "\n";
  }
  for (auto [a, b] : td.edges) {
    out += std::to_string(a + 1) + " " + std::to_string(b + 1) + "\n";
  }
  return out;
}

TreeDecomposition parse_td(std::string_view text, int n) {
  TreeDecomposition td;
  bool have_header = false;
  int declared_bags = 0;
  std::vector<char> bag_seen;
  int line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    auto t = tokens(line);
    if (t.empty() || t[0] == "c") continue;
    if (t[0] == "s") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (t.size() != 5 || t[1] != "td") {
        throw ParseError(line_no,
                         "malformed header, expected 's td <bags> <width> <n>'");
      }
      declared_bags = static_cast<int>(to_number(t[2], line_no));
      long nv = to_number(t[4], line_no);
      if (declared_bags < 0) throw ParseError(line_no, "negative bag count");
      if (nv != n) {
        throw ParseError(line_no, "decomposition is for " + std::to_string(nv) +
                                      " vertices, graph has " +
                                      std::to_string(n));
      }
      td.bags.assign(declared_bags, VertexSet(n));
      bag_seen.assign(declared_bags, 0);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "content before 's td' header");
    if (t[0] == "b") {
      if (t.size() < 2) throw ParseError(line_no, "bag line without index");
      long index = to_number(t[1], line_no);
      if (index < 1 || index > declared_bags) {
        throw ParseError(line_no, "bag index " + std::to_string(index) +
                                      " out of range");
      }
      if (bag_seen[index - 1]) {
        throw ParseError(line_no, "bag " + std::to_string(index) +
                                      " listed twice");
      }
      bag_seen[index - 1] = 1;
      for (size_t i = 2; i < t.size(); ++i) {
        long v = to_number(t[i], line_no);
        if (v < 1 || v > n) {
          throw ParseError(line_no, "vertex " + std::to_string(v) +
                                        " out of range");
        }
        td.bags[index - 1].insert(static_cast<Vertex>(v - 1));
      }
      continue;
    }
    if (t.size() != 2) throw ParseError(line_no, "expected a tree edge 'i j'");
    long a = to_number(t[0], line_no);
    long b = to_number(t[1], line_no);
    if (a < 1 || b < 1 || a > declared_bags || b > declared_bags) {
      throw ParseError(line_no, "tree edge refers to a missing bag");
    }
    td.edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
  }
  if (!have_header) throw ParseError(line_no, "missing 's td' header");
  for (int i = 0; i < declared_bags; ++i) {
    if (!bag_seen[i]) {
      throw ParseError(line_no, "bag " + std::to_string(i + 1) + " never listed");
    }
  }
  return td;
}

}  // namespace pmctw
