#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hamlab {

inline constexpr int kMaxVertices = 512;

/// Dense bitset over a fixed vertex universe 0..n-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);

  int universe() const { return universe_; }
  bool test(int v) const;
  void set(int v);
  void reset(int v);
  void clear();
  int count() const;
  bool empty() const { return count() == 0; }
  bool contains_all(const VertexSet& other) const;  // other subset of this
  bool intersects(const VertexSet& other) const;
  int first() const;       // lowest member, -1 if empty
  int next(int v) const;   // lowest member > v, -1 if none
  std::vector<int> to_vector() const;

  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  bool operator==(const VertexSet& o) const { return universe_ == o.universe_ && words_ == o.words_; }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  template <class F>
  void for_each(F f) const {
    for (int v = first(); v >= 0; v = next(v)) f(v);
  }

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Simple undirected graph, vertices 0..n-1, no loops, immutable after
/// construction. Mutating operations return new graphs.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  int m() const { return m_; }
  bool has_edge(int u, int v) const;
  int degree(int v) const { return degrees_[static_cast<size_t>(v)]; }
  const VertexSet& neighbors(int v) const { return rows_[static_cast<size_t>(v)]; }
  std::vector<std::pair<int, int>> edges() const;  // u < v, sorted

  Graph with_edge(int u, int v) const;
  Graph with_edges(const std::vector<std::pair<int, int>>& es) const;
  Graph induced_subgraph(const VertexSet& s, std::vector<int>* index_map = nullptr) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }
  bool operator!=(const Graph& o) const { return !(*this == o); }

 private:
  void add_edge_internal(int u, int v);
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> rows_;
  std::vector<int> degrees_;
};

/// Injective map of a pattern's vertices into a host graph. map[i] is the
/// host vertex carrying pattern vertex i.
struct Embedding {
  std::vector<int> map;

  Embedding reversed() const { return Embedding{std::vector<int>(map.rbegin(), map.rend())}; }
  bool operator==(const Embedding& o) const { return map == o.map; }
};

bool is_connected(const Graph& g);
bool has_cut_vertex(const Graph& g);

/// True iff g has at least 3 vertices, is connected and has no cut vertex.
bool is_two_connected(const Graph& g);

/// Connected and no cut vertex; order 1 and 2 graphs qualify.
bool is_nonseparable(const Graph& g);

/// 2*d(v) >= n, integer arithmetic throughout.
bool is_heavy_vertex(const Graph& g, int v);

/// d(u)+d(v) >= n. Adjacency of u,v is not examined; callers that need a
/// nonadjacent pair impose that themselves.
bool is_heavy_pair(const Graph& g, int u, int v);

/// Enumerates every injective map whose image induces `pattern` exactly
/// (edges and non-edges both match). Copies are repeated once per pattern
/// automorphism; callers deduplicate when they need unlabeled copies.
/// The visitor returns false to stop early.
void enumerate_induced(const Graph& g, const Graph& pattern,
                       const std::function<bool(const Embedding&)>& visit);

std::vector<Embedding> collect_induced(const Graph& g, const Graph& pattern);
bool has_induced(const Graph& g, const Graph& pattern);

/// Checks that e maps `pattern` into g with edges and non-edges matching.
bool is_induced_embedding(const Graph& g, const Graph& pattern, const Embedding& e);

/// Line graph: one vertex per edge of h, adjacent when the edges share an end.
Graph line_graph(const Graph& h, std::vector<std::pair<int, int>>* edge_of_vertex = nullptr);

/// Connected components of g restricted to `within`.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within);

}  // namespace hamlab
