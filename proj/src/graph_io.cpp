#include "hamlab/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace hamlab {

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_content_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      size_t pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos) continue;
      if (line[pos] == '#') continue;
      return true;
    }
    return false;
  };

  if (!next_content_line()) throw ParseError("missing header \"n m\"", line_no ? line_no : 1);
  int n = -1;
  long m = -1;
  {
    std::istringstream ss(line);
    if (!(ss >> n >> m) || n < 0 || m < 0) throw ParseError("expected header \"n m\"", line_no);
    std::string extra;
    if (ss >> extra) throw ParseError("trailing junk after header", line_no);
  }
  if (n > kMaxVertices) throw ParseError("graph order exceeds limit of " + std::to_string(kMaxVertices), line_no);

  Graph g(n);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(m));
  for (long i = 0; i < m; ++i) {
    if (!next_content_line()) throw ParseError("expected " + std::to_string(m) + " edges, got " + std::to_string(i), line_no ? line_no : 1);
    std::istringstream ss(line);
    int u = -1, v = -1;
    if (!(ss >> u >> v)) throw ParseError("expected edge \"u v\"", line_no);
    std::string extra;
    if (ss >> extra) throw ParseError("trailing junk after edge", line_no);
    if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("endpoint out of range", line_no);
    if (u == v) throw ParseError("self-loop rejected", line_no);
    if (u > v) throw ParseError("edges must be written with u < v", line_no);
    for (auto [a, b] : edges)
      if (a == u && b == v) throw ParseError("duplicate edge", line_no);
    edges.emplace_back(u, v);
  }
  return g.with_edges(edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_edge_list(out, g);
}

Graph parse_graph6(const std::string& raw) {
  std::string line = raw;
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
  if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
  if (line.empty()) throw ParseError("empty graph6 line", 1);

  size_t pos = 0;
  auto take = [&]() -> int {
    if (pos >= line.size()) throw ParseError("truncated graph6 data", 1);
    int c = static_cast<unsigned char>(line[pos++]);
    if (c < 63 || c > 126) throw ParseError("invalid graph6 byte", 1);
    return c - 63;
  };

  long n;
  int c0 = take();
  if (c0 < 63) {
    n = c0;
  } else if (c0 == 63) {  // '~'
    long a = take(), b = take(), c = take();
    n = (a << 12) | (b << 6) | c;
  } else {
    n = c0;
  }
  if (n > kMaxVertices) throw ParseError("graph6 order exceeds limit of " + std::to_string(kMaxVertices), 1);

  Graph g(static_cast<int>(n));
  std::vector<std::pair<int, int>> edges;
  int bits = 0, have = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (have == 0) {
        bits = take();
        have = 6;
      }
      --have;
      if ((bits >> have) & 1) edges.emplace_back(i, j);
    }
  return g.with_edges(edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos || line[p] == '#') continue;
    if (std::isdigit(static_cast<unsigned char>(line[p]))) {
      in.clear();
      in.seekg(0);
      return read_edge_list(in);
    }
    return parse_graph6(line.substr(p));
  }
  throw ParseError("no graph data found", line_no ? line_no : 1);
}

}  // namespace hamlab
