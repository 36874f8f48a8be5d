#include "hamlab/graph.hpp"

#include <algorithm>
#include <bit>

namespace hamlab {

VertexSet::VertexSet(int universe) : universe_(universe) {
  if (universe < 0 || universe > kMaxVertices)
    throw std::invalid_argument("VertexSet universe out of range: " + std::to_string(universe));
  words_.assign(static_cast<size_t>((universe + 63) / 64), 0);
}

bool VertexSet::test(int v) const {
  return (words_[static_cast<size_t>(v >> 6)] >> (v & 63)) & 1u;
}

void VertexSet::set(int v) {
  words_[static_cast<size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::reset(int v) {
  words_[static_cast<size_t>(v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
}

void VertexSet::clear() { std::fill(words_.begin(), words_.end(), 0); }

int VertexSet::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::contains_all(const VertexSet& other) const {
  for (size_t i = 0; i < words_.size(); ++i)
    if (other.words_[i] & ~words_[i]) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  for (size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

int VertexSet::first() const { return next(-1); }

int VertexSet::next(int v) const {
  int start = v + 1;
  if (start >= universe_) return -1;
  size_t wi = static_cast<size_t>(start >> 6);
  std::uint64_t w = words_[wi] >> (start & 63);
  if (w) return start + std::countr_zero(w);
  for (++wi; wi < words_.size(); ++wi)
    if (words_[wi]) return static_cast<int>(wi * 64) + std::countr_zero(words_[wi]);
  return -1;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  for_each([&](int v) { out.push_back(v); });
  return out;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("graph order out of range: " + std::to_string(n));
  rows_.assign(static_cast<size_t>(n), VertexSet(n));
  degrees_.assign(static_cast<size_t>(n), 0);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge_internal(u, v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range: " + std::to_string(v));
}

void Graph::add_edge_internal(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(u));
  if (has_edge(u, v)) return;
  rows_[static_cast<size_t>(u)].set(v);
  rows_[static_cast<size_t>(v)].set(u);
  ++degrees_[static_cast<size_t>(u)];
  ++degrees_[static_cast<size_t>(v)];
  ++m_;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return rows_[static_cast<size_t>(u)].test(v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v = rows_[static_cast<size_t>(u)].next(u); v >= 0; v = rows_[static_cast<size_t>(u)].next(v))
      out.emplace_back(u, v);
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  Graph g = *this;
  g.add_edge_internal(u, v);
  return g;
}

Graph Graph::with_edges(const std::vector<std::pair<int, int>>& es) const {
  Graph g = *this;
  for (auto [u, v] : es) g.add_edge_internal(u, v);
  return g;
}

Graph Graph::induced_subgraph(const VertexSet& s, std::vector<int>* index_map) const {
  std::vector<int> verts = s.to_vector();
  Graph g(static_cast<int>(verts.size()));
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (has_edge(verts[i], verts[j])) g.add_edge_internal(static_cast<int>(i), static_cast<int>(j));
  if (index_map) *index_map = std::move(verts);
  return g;
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  VertexSet seen(g.n());
  std::vector<int> stack{0};
  seen.set(0);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    g.neighbors(v).for_each([&](int u) {
      if (!seen.test(u)) {
        seen.set(u);
        stack.push_back(u);
      }
    });
  }
  return seen.count() == g.n();
}

namespace {

// DFS lowpoint articulation scan.
struct ArticulationScan {
  const Graph& g;
  std::vector<int> disc, low;
  int timer = 0;
  bool found = false;

  explicit ArticulationScan(const Graph& gg)
      : g(gg), disc(static_cast<size_t>(gg.n()), -1), low(static_cast<size_t>(gg.n()), 0) {}

  void dfs(int v, int parent) {
    disc[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = timer++;
    int children = 0;
    g.neighbors(v).for_each([&](int u) {
      if (found) return;
      if (disc[static_cast<size_t>(u)] < 0) {
        ++children;
        dfs(u, v);
        low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], low[static_cast<size_t>(u)]);
        if (parent >= 0 && low[static_cast<size_t>(u)] >= disc[static_cast<size_t>(v)]) found = true;
      } else if (u != parent) {
        low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], disc[static_cast<size_t>(u)]);
      }
    });
    if (parent < 0 && children > 1) found = true;
  }
};

}  // namespace

bool has_cut_vertex(const Graph& g) {
  if (g.n() < 3) return false;
  ArticulationScan scan(g);
  scan.dfs(0, -1);
  return scan.found;
}

bool is_two_connected(const Graph& g) {
  return g.n() >= 3 && is_connected(g) && !has_cut_vertex(g);
}

bool is_nonseparable(const Graph& g) {
  if (!is_connected(g)) return false;
  if (g.n() <= 2) return true;
  return !has_cut_vertex(g);
}

bool is_heavy_vertex(const Graph& g, int v) { return 2 * g.degree(v) >= g.n(); }

bool is_heavy_pair(const Graph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("heavy pair requires two distinct vertices");
  return g.degree(u) + g.degree(v) >= g.n();
}

namespace {

// Positional backtracking over an adjacency-aware ordering of the pattern
// vertices. Candidate sets come from intersecting host rows of the already
// placed pattern neighbors and excluding rows of placed non-neighbors.
struct InducedSearch {
  const Graph& g;
  const Graph& p;
  const std::function<bool(const Embedding&)>& visit;
  std::vector<int> order;          // pattern vertices in placement order
  std::vector<int> placed_at;      // pattern vertex -> order position
  std::vector<int> map;            // pattern vertex -> host vertex (-1 unset)
  VertexSet used;
  bool stopped = false;

  InducedSearch(const Graph& gg, const Graph& pp, const std::function<bool(const Embedding&)>& vv)
      : g(gg), p(pp), visit(vv), used(gg.n()) {
    int k = p.n();
    placed_at.assign(static_cast<size_t>(k), -1);
    map.assign(static_cast<size_t>(k), -1);
    std::vector<bool> chosen(static_cast<size_t>(k), false);
    for (int step = 0; step < k; ++step) {
      int best = -1, best_links = -1, best_deg = -1;
      for (int v = 0; v < k; ++v) {
        if (chosen[static_cast<size_t>(v)]) continue;
        int links = 0;
        for (int u = 0; u < k; ++u)
          if (chosen[static_cast<size_t>(u)] && p.has_edge(u, v)) ++links;
        if (links > best_links || (links == best_links && p.degree(v) > best_deg)) {
          best = v;
          best_links = links;
          best_deg = p.degree(v);
        }
      }
      chosen[static_cast<size_t>(best)] = true;
      order.push_back(best);
      placed_at[static_cast<size_t>(best)] = step;
    }
  }

  void run(int step) {
    if (stopped) return;
    if (step == p.n()) {
      Embedding e{map};
      if (!visit(e)) stopped = true;
      return;
    }
    int pv = order[static_cast<size_t>(step)];
    VertexSet cand(g.n());
    bool have_anchor = false;
    for (int prev = 0; prev < step; ++prev) {
      int pu = order[static_cast<size_t>(prev)];
      if (p.has_edge(pu, pv)) {
        const VertexSet& row = g.neighbors(map[static_cast<size_t>(pu)]);
        if (!have_anchor) {
          cand = row;
          have_anchor = true;
        } else {
          cand &= row;
        }
      }
    }
    if (!have_anchor) {
      for (int v = 0; v < g.n(); ++v) cand.set(v);
    }
    cand -= used;
    for (int prev = 0; prev < step; ++prev) {
      int pu = order[static_cast<size_t>(prev)];
      if (!p.has_edge(pu, pv)) cand -= g.neighbors(map[static_cast<size_t>(pu)]);
    }
    int need = p.degree(pv);
    for (int v = cand.first(); v >= 0 && !stopped; v = cand.next(v)) {
      if (g.degree(v) < need) continue;
      map[static_cast<size_t>(pv)] = v;
      used.set(v);
      run(step + 1);
      used.reset(v);
      map[static_cast<size_t>(pv)] = -1;
    }
  }
};

}  // namespace

void enumerate_induced(const Graph& g, const Graph& pattern,
                       const std::function<bool(const Embedding&)>& visit) {
  if (pattern.n() == 0 || pattern.n() > g.n()) return;
  InducedSearch search(g, pattern, visit);
  search.run(0);
}

std::vector<Embedding> collect_induced(const Graph& g, const Graph& pattern) {
  std::vector<Embedding> out;
  enumerate_induced(g, pattern, [&](const Embedding& e) {
    out.push_back(e);
    return true;
  });
  return out;
}

bool has_induced(const Graph& g, const Graph& pattern) {
  bool found = false;
  enumerate_induced(g, pattern, [&](const Embedding&) {
    found = true;
    return false;
  });
  return found;
}

bool is_induced_embedding(const Graph& g, const Graph& pattern, const Embedding& e) {
  if (static_cast<int>(e.map.size()) != pattern.n()) return false;
  for (size_t i = 0; i < e.map.size(); ++i) {
    if (e.map[i] < 0 || e.map[i] >= g.n()) return false;
    for (size_t j = i + 1; j < e.map.size(); ++j) {
      if (e.map[i] == e.map[j]) return false;
      if (g.has_edge(e.map[i], e.map[j]) != pattern.has_edge(static_cast<int>(i), static_cast<int>(j)))
        return false;
    }
  }
  return true;
}

Graph line_graph(const Graph& h, std::vector<std::pair<int, int>>* edge_of_vertex) {
  auto es = h.edges();
  Graph l(static_cast<int>(es.size()));
  std::vector<std::pair<int, int>> result_edges;
  for (size_t i = 0; i < es.size(); ++i)
    for (size_t j = i + 1; j < es.size(); ++j) {
      auto [a, b] = es[i];
      auto [c, d] = es[j];
      if (a == c || a == d || b == c || b == d)
        result_edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  l = l.with_edges(result_edges);
  if (edge_of_vertex) *edge_of_vertex = std::move(es);
  return l;
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> comps;
  VertexSet seen(g.n());
  for (int s = within.first(); s >= 0; s = within.next(s)) {
    if (seen.test(s)) continue;
    VertexSet comp(g.n());
    std::vector<int> stack{s};
    seen.set(s);
    comp.set(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      VertexSet nb = g.neighbors(v) & within;
      nb.for_each([&](int u) {
        if (!seen.test(u)) {
          seen.set(u);
          comp.set(u);
          stack.push_back(u);
        }
      });
    }
    comps.push_back(comp);
  }
  return comps;
}

}  // namespace hamlab
