#include "hamlab/conditions.hpp"

#include <array>
#include <stdexcept>

namespace hamlab {

namespace {

Graph path_graph(int k) {
  Graph g(k);
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < k; ++i) es.emplace_back(i, i + 1);
  return g.with_edges(es);
}

PatternLibrary build_patterns() {
  PatternLibrary lib;
  lib.claw = Graph(4, {{0, 1}, {0, 2}, {0, 3}});
  lib.p3 = path_graph(3);
  lib.p4 = path_graph(4);
  lib.p5 = path_graph(5);
  lib.p6 = path_graph(6);
  lib.c3 = Graph(3, {{0, 1}, {1, 2}, {0, 2}});
  lib.z1 = Graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  lib.z2 = Graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
  lib.bull = Graph(5, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 4}});
  lib.net = Graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
  // Wounded, transcribed from its drawing: triangle {0,1,2}, pendant vertex 3
  // at 1, pendant path 2-4-5. Degree sequence [1,1,2,2,3,3].
  lib.wounded = Graph(6, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 4}, {4, 5}});
  lib.diamond = Graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}});
  return lib;
}

void check_pattern_pre(const Graph& h) {
  if (h.n() < 2) throw std::invalid_argument("pattern must have at least 2 vertices");
  if (!is_connected(h)) throw std::invalid_argument("pattern must be connected");
}

}  // namespace

const PatternLibrary& patterns() {
  static const PatternLibrary lib = build_patterns();
  return lib;
}

bool is_H_free(const Graph& g, const Graph& h) {
  check_pattern_pre(h);
  return !has_induced(g, h);
}

bool is_H_o_heavy(const Graph& g, const Graph& h) {
  check_pattern_pre(h);
  bool ok = true;
  enumerate_induced(g, h, [&](const Embedding& e) {
    int k = static_cast<int>(e.map.size());
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        if (h.has_edge(i, j)) continue;
        if (g.degree(e.map[static_cast<size_t>(i)]) + g.degree(e.map[static_cast<size_t>(j)]) >= g.n())
          return true;  // this copy is fine, keep scanning
      }
    ok = false;
    return false;
  });
  return ok;
}

bool is_H_f_heavy(const Graph& g, const Graph& h) {
  check_pattern_pre(h);
  // Distances are taken inside the pattern, which equals distance inside the
  // induced copy under the positional correspondence.
  int k = h.n();
  std::vector<std::vector<int>> dist(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(k), -1));
  for (int s = 0; s < k; ++s) {
    std::vector<int> queue{s};
    dist[static_cast<size_t>(s)][static_cast<size_t>(s)] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      h.neighbors(v).for_each([&](int u) {
        if (dist[static_cast<size_t>(s)][static_cast<size_t>(u)] < 0) {
          dist[static_cast<size_t>(s)][static_cast<size_t>(u)] = dist[static_cast<size_t>(s)][static_cast<size_t>(v)] + 1;
          queue.push_back(u);
        }
      });
    }
  }
  bool ok = true;
  enumerate_induced(g, h, [&](const Embedding& e) {
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        if (dist[static_cast<size_t>(i)][static_cast<size_t>(j)] != 2) continue;
        int du = g.degree(e.map[static_cast<size_t>(i)]);
        int dv = g.degree(e.map[static_cast<size_t>(j)]);
        if (2 * std::max(du, dv) < g.n()) {
          ok = false;
          return false;
        }
      }
    return true;
  });
  return ok;
}

bool dirac_holds(const Graph& g) {
  for (int v = 0; v < g.n(); ++v)
    if (!is_heavy_vertex(g, v)) return false;
  return true;
}

bool ore_holds(const Graph& g) {
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v) && !is_heavy_pair(g, u, v)) return false;
  return true;
}

}  // namespace hamlab
