#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "hamlab/graph.hpp"

namespace hamlab {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line_no)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
  int line;
};

/// Edge-list text format: first line "n m", then m lines "u v" with
/// 0-based endpoints and u < v. Duplicate edges and self-loops are rejected.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

/// Standard graph6 line (short or long order form).
Graph parse_graph6(const std::string& line);

/// Dispatches on contents: a leading digit means edge-list, otherwise the
/// first non-comment line is treated as graph6.
Graph read_graph_file(const std::string& path);

}  // namespace hamlab
