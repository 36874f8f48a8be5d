#include "hamlab/closure.hpp"

#include <algorithm>
#include <random>

#include "hamlab/conditions.hpp"

namespace hamlab {

namespace {

bool is_clique_in(const Graph& g, const VertexSet& s) {
  for (int u = s.first(); u >= 0; u = s.next(u)) {
    VertexSet rest = s;
    rest.reset(u);
    if (!g.neighbors(u).contains_all(rest)) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> missing_edges_in(const Graph& g, const VertexSet& s) {
  std::vector<std::pair<int, int>> out;
  for (int u = s.first(); u >= 0; u = s.next(u))
    for (int v = s.next(u); v >= 0; v = s.next(v))
      if (!g.has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

}  // namespace

Graph local_completion(const Graph& g, int x) {
  return g.with_edges(missing_edges_in(g, g.neighbors(x)));
}

std::vector<std::pair<int, int>> heavy_neighborhood_edges(const Graph& g, int x) {
  std::vector<std::pair<int, int>> out;
  const VertexSet& nb = g.neighbors(x);
  for (int u = nb.first(); u >= 0; u = nb.next(u))
    for (int v = nb.next(u); v >= 0; v = nb.next(v))
      if (g.degree(u) + g.degree(v) >= g.n()) out.emplace_back(u, v);
  return out;
}

EligibilityResult o_eligibility(const Graph& g, int x) {
  const VertexSet& nb = g.neighbors(x);
  if (is_clique_in(g, nb)) return {false, EligibilityDiagnostic::kNotApplicable};

  // Heavy-augmented graph restricted to N(x).
  Graph aug = g.with_edges(heavy_neighborhood_edges(g, x));
  auto comps = components_within(aug, nb);
  if (comps.size() == 1) return {true, EligibilityDiagnostic::kConnected};
  if (comps.size() != 2 || !is_clique_in(aug, comps[0]) || !is_clique_in(aug, comps[1]))
    return {false, EligibilityDiagnostic::kNotApplicable};

  // Join vertex: outside {x} and N(x), heavy with x, with a plain edge of g
  // into each of the two cliques.
  for (int z = 0; z < g.n(); ++z) {
    if (z == x || nb.test(z)) continue;
    if (g.degree(x) + g.degree(z) < g.n()) continue;
    if (g.neighbors(z).intersects(comps[0]) && g.neighbors(z).intersects(comps[1]))
      return {true, EligibilityDiagnostic::kTwoCliquesWithJoin};
  }
  return {false, EligibilityDiagnostic::kTwoCliquesNoJoin};
}

bool is_o_eligible(const Graph& g, int x) { return o_eligibility(g, x).eligible; }

namespace {

ClosureTrace run_closure(const Graph& g, const std::function<int(const Graph&, const std::vector<int>&)>& pick) {
  if (!is_H_o_heavy(g, patterns().claw))
    throw std::invalid_argument("closure requires a claw-o-heavy input graph");
  ClosureTrace trace;
  Graph cur = g;
  for (;;) {
    std::vector<int> eligible;
    for (int x = 0; x < cur.n(); ++x)
      if (is_o_eligible(cur, x)) eligible.push_back(x);
    if (eligible.empty()) break;
    int x = pick(cur, eligible);
    auto added = missing_edges_in(cur, cur.neighbors(x));
    cur = cur.with_edges(added);
    trace.steps.push_back({x, std::move(added)});
  }
  trace.result = cur;
  return trace;
}

}  // namespace

ClosureTrace compute_closure(const Graph& g) {
  return run_closure(g, [](const Graph&, const std::vector<int>& eligible) { return eligible.front(); });
}

ClosureTrace compute_closure_random_order(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return run_closure(g, [&rng](const Graph&, const std::vector<int>& eligible) {
    return eligible[static_cast<size_t>(rng() % eligible.size())];
  });
}

namespace {

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  // Pivot on the vertex covering most of p.
  int pivot = -1, best = -1;
  VertexSet px = p | x;
  for (int v = px.first(); v >= 0; v = px.next(v)) {
    int c = (g.neighbors(v) & p).count();
    if (c > best) {
      best = c;
      pivot = v;
    }
  }
  VertexSet cand = p - g.neighbors(pivot);
  for (int v = cand.first(); v >= 0; v = cand.next(v)) {
    VertexSet r2 = r;
    r2.set(v);
    bron_kerbosch(g, r2, p & g.neighbors(v), x & g.neighbors(v), out);
    p.reset(v);
    x.set(v);
  }
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet p(g.n()), r(g.n()), x(g.n());
  for (int v = 0; v < g.n(); ++v) p.set(v);
  if (g.n() == 0) return out;
  bron_kerbosch(g, r, p, x, out);
  return out;
}

VertexSet RegionDecomposition::interior_of(int region) const {
  VertexSet out(regions[static_cast<size_t>(region)].universe());
  regions[static_cast<size_t>(region)].for_each([&](int v) {
    if (is_interior(v)) out.set(v);
  });
  return out;
}

VertexSet RegionDecomposition::frontier_of(int region) const {
  VertexSet out(regions[static_cast<size_t>(region)].universe());
  regions[static_cast<size_t>(region)].for_each([&](int v) {
    if (is_frontier(v)) out.set(v);
  });
  return out;
}

std::optional<int> RegionDecomposition::shared_region(int u, int v) const {
  for (int ru : vertex_regions[static_cast<size_t>(u)])
    for (int rv : vertex_regions[static_cast<size_t>(v)])
      if (ru == rv) return ru;
  return std::nullopt;
}

RegionDecomposition regions(const ClosureTrace& trace, const Graph& g) {
  RegionDecomposition dec;
  dec.regions = maximal_cliques(trace.result);
  dec.vertex_regions.assign(static_cast<size_t>(g.n()), {});
  for (size_t r = 0; r < dec.regions.size(); ++r)
    dec.regions[r].for_each([&](int v) { dec.vertex_regions[static_cast<size_t>(v)].push_back(static_cast<int>(r)); });
  for (int v = 0; v < g.n(); ++v) {
    size_t cnt = dec.vertex_regions[static_cast<size_t>(v)].size();
    if (cnt == 0 || cnt > 2)
      throw StructuralViolation("vertex " + std::to_string(v) + " lies in " + std::to_string(cnt) +
                                " maximal cliques of the closure");
  }
  return dec;
}

bool dissociated(const RegionDecomposition& dec, int u, int v) {
  return !dec.shared_region(u, v).has_value();
}

std::vector<int> interior_path(const RegionDecomposition& dec, const Graph& g, int u, int v) {
  auto region = dec.shared_region(u, v);
  if (!region) throw std::invalid_argument("vertices are dissociated; no interior path exists");
  if (u == v) return {u};

  VertexSet allowed = dec.interior_of(*region);
  allowed.set(u);
  allowed.set(v);
  std::vector<int> parent(static_cast<size_t>(g.n()), -1);
  std::vector<int> queue{u};
  parent[static_cast<size_t>(u)] = u;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int w = queue[qi];
    if (w == v) break;
    VertexSet nb = g.neighbors(w) & allowed;
    nb.for_each([&](int t) {
      if (parent[static_cast<size_t>(t)] < 0) {
        parent[static_cast<size_t>(t)] = w;
        queue.push_back(t);
      }
    });
  }
  if (parent[static_cast<size_t>(v)] < 0)
    throw StructuralViolation("no interior path between associated vertices " + std::to_string(u) + "," +
                              std::to_string(v));
  std::vector<int> path;
  for (int w = v; w != u; w = parent[static_cast<size_t>(w)]) path.push_back(w);
  path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

LemmaReport check_region_lemmas(const Graph& g, const ClosureTrace& trace, const RegionDecomposition& dec) {
  LemmaReport rep;
  const Graph& cl = trace.result;
  auto fail = [&](const std::string& s) { rep.violations.push_back(s); };

  for (int v = 0; v < g.n(); ++v) {
    size_t cnt = dec.vertex_regions[static_cast<size_t>(v)].size();
    if (cnt != 1 && cnt != 2)
      fail("vertex " + std::to_string(v) + " owned by " + std::to_string(cnt) + " regions");
  }
  for (size_t a = 0; a < dec.regions.size(); ++a)
    for (size_t b = a + 1; b < dec.regions.size(); ++b)
      if ((dec.regions[a] & dec.regions[b]).count() > 1)
        fail("regions " + std::to_string(a) + "," + std::to_string(b) + " share more than one vertex");

  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (dissociated(dec, u, v)) {
        if (cl.degree(u) + cl.degree(v) >= cl.n())
          fail("dissociated pair " + std::to_string(u) + "," + std::to_string(v) + " heavy in the closure");
        if (g.degree(u) + g.degree(v) >= g.n())
          fail("dissociated pair " + std::to_string(u) + "," + std::to_string(v) + " heavy in g");
      }

  for (size_t r = 0; r < dec.regions.size(); ++r) {
    Graph sub = g.induced_subgraph(dec.regions[r]);
    if (!is_nonseparable(sub)) fail("region " + std::to_string(r) + " is separable");

    VertexSet interior = dec.interior_of(static_cast<int>(r));
    VertexSet frontier = dec.frontier_of(static_cast<int>(r));
    for (int v = frontier.first(); v >= 0; v = frontier.next(v)) {
      if (g.neighbors(v).intersects(interior)) continue;
      if (!interior.empty() || !is_clique_in(g, frontier))
        fail("frontier vertex " + std::to_string(v) + " of region " + std::to_string(r) +
             " has no interior neighbor and the frontier is not a clique");
    }

    // Interior paths for every associated pair, plus lightness of path
    // vertices at distance >= 3 along the path.
    auto verts = dec.regions[r].to_vector();
    for (size_t i = 0; i < verts.size(); ++i)
      for (size_t j = i + 1; j < verts.size(); ++j) {
        int u = verts[i], v = verts[j];
        std::vector<int> path;
        try {
          path = interior_path(dec, g, u, v);
        } catch (const StructuralViolation& e) {
          fail(e.what());
          continue;
        }
        for (size_t a = 0; a < path.size(); ++a)
          for (size_t b = a + 3; b < path.size(); ++b)
            if (g.degree(path[a]) + g.degree(path[b]) >= g.n())
              fail("interior path " + std::to_string(u) + ".." + std::to_string(v) +
                   " carries a heavy pair at distance >= 3");
        if (!g.has_edge(u, v) && g.degree(u) + g.degree(v) >= g.n()) {
          ++rep.heavy_pair_cases;
          if ((g.neighbors(u) & g.neighbors(v) & interior).count() < 2)
            fail("heavy nonadjacent pair " + std::to_string(u) + "," + std::to_string(v) +
                 " lacks two common interior neighbors in region " + std::to_string(r));
        }
      }
  }

  if (!is_H_free(cl, patterns().claw)) fail("closure contains an induced claw");
  if (!is_H_free(cl, patterns().diamond))
    rep.warnings.push_back("closure contains an induced diamond");
  return rep;
}

}  // namespace hamlab
