#pragma once

#include "sepchi/graph.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace sepchi {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Edge-list text format: first line "n m", then m lines "u v" with
// 0 <= u < v < n. Duplicate edges, loops and out-of-range indices are
// rejected with the offending line number.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

// graph6 (the de facto small-graph interchange format): one printable line
// per graph, supporting orders up to 258047. An optional ">>graph6<<" header
// is accepted on input; output never carries one.
Graph read_graph6(const std::string& line);
std::string write_graph6(const Graph& g);

// Dispatch on extension: ".g6" means graph6, anything else edge-list text.
Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace sepchi
