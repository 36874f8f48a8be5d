#include "hamlab/hamilton.hpp"

#include <algorithm>

namespace hamlab {

namespace {

struct CycleSearch {
  const Graph& g;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool overran = false;
  VertexSet unused;
  std::vector<int> path;
  std::vector<int> found;

  CycleSearch(const Graph& gg, std::uint64_t b) : g(gg), budget(b), unused(gg.n()) {}

  bool region_ok(int end) {
    // Every unvisited vertex needs two usable connections; the unvisited
    // region must be connected and reachable from both path ends.
    int start = path.front();
    for (int v = unused.first(); v >= 0; v = unused.next(v)) {
      int avail = (g.neighbors(v) & unused).count();
      if (g.has_edge(v, end)) ++avail;
      if (g.has_edge(v, start)) ++avail;
      if (avail < 2) return false;
    }
    if (!unused.empty()) {
      if (!g.neighbors(end).intersects(unused)) return false;
      if (!g.neighbors(start).intersects(unused)) return false;
      if (components_within(g, unused).size() != 1) return false;
    }
    return true;
  }

  bool extend(int end) {
    if (++nodes > budget) {
      overran = true;
      return false;
    }
    if (unused.empty()) {
      if (g.has_edge(end, path.front())) {
        found = path;
        return true;
      }
      return false;
    }
    VertexSet cand = g.neighbors(end) & unused;
    std::vector<int> order = cand.to_vector();
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      int da = (g.neighbors(a) & unused).count();
      int db = (g.neighbors(b) & unused).count();
      return da != db ? da < db : a < b;
    });
    for (int v : order) {
      path.push_back(v);
      unused.reset(v);
      if (region_ok(v) && extend(v)) return true;
      if (overran) return false;
      unused.set(v);
      path.pop_back();
    }
    return false;
  }
};

// Edges forced by degree-2 vertices. Returns false when they already rule a
// Hamilton cycle out (a vertex with three forced edges, or a forced cycle
// shorter than n).
bool forced_edges_consistent(const Graph& g) {
  std::vector<int> forced_deg(static_cast<size_t>(g.n()), 0);
  std::vector<std::pair<int, int>> forced;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == 2)
      g.neighbors(v).for_each([&](int u) {
        if (u > v || g.degree(u) != 2) forced.emplace_back(std::min(u, v), std::max(u, v));
      });
  std::sort(forced.begin(), forced.end());
  forced.erase(std::unique(forced.begin(), forced.end()), forced.end());
  std::vector<int> parent(static_cast<size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) parent[static_cast<size_t>(v)] = v;
  std::function<int(int)> find = [&](int v) {
    while (parent[static_cast<size_t>(v)] != v) v = parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
    return v;
  };
  int used = 0;
  for (auto [u, v] : forced) {
    if (++forced_deg[static_cast<size_t>(u)] > 2 || ++forced_deg[static_cast<size_t>(v)] > 2) return false;
    int ru = find(u), rv = find(v);
    if (ru == rv) {
      // Forced edges close a cycle; only acceptable if it spans everything.
      if (used + 1 != g.n()) return false;
    } else {
      parent[static_cast<size_t>(ru)] = rv;
    }
    ++used;
  }
  return true;
}

int component_count(const Graph& g, const VertexSet& removed) {
  VertexSet keep(g.n());
  for (int v = 0; v < g.n(); ++v)
    if (!removed.test(v)) keep.set(v);
  return static_cast<int>(components_within(g, keep).size());
}

}  // namespace

CycleSearchResult find_hamiltonian_cycle(const Graph& g, std::uint64_t budget) {
  CycleSearchResult res;
  if (g.n() < 3) {
    res.stats.exhausted = true;
    return res;
  }
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) < 2) {
      res.stats.exhausted = true;
      return res;
    }
  if (!is_connected(g) || !forced_edges_consistent(g)) {
    res.stats.exhausted = true;
    return res;
  }

  CycleSearch search(g, budget);
  for (int v = 1; v < g.n(); ++v) search.unused.set(v);
  search.path.push_back(0);
  bool ok = search.extend(0);
  res.stats.nodes = search.nodes;
  res.stats.exhausted = !search.overran;
  if (ok) res.cycle = search.found;
  return res;
}

VerifyResult verify_certificate(const Graph& g, const Certificate& cert) {
  if (const auto* cyc = std::get_if<HamiltonCycle>(&cert)) {
    const auto& o = cyc->order;
    if (static_cast<int>(o.size()) != g.n()) return {false, "cycle has wrong length"};
    if (g.n() < 3) return {false, "cycles need at least 3 vertices"};
    VertexSet seen(g.n());
    for (int v : o) {
      if (v < 0 || v >= g.n() || seen.test(v)) return {false, "cycle is not a permutation of the vertices"};
      seen.set(v);
    }
    for (size_t i = 0; i < o.size(); ++i)
      if (!g.has_edge(o[i], o[(i + 1) % o.size()])) return {false, "consecutive cycle vertices not adjacent"};
    return {true, ""};
  }
  if (const auto* cut = std::get_if<CutWitness>(&cert)) {
    int s = cut->cut.count();
    int comps = component_count(g, cut->cut);
    if (comps > std::max(s, 1)) return {true, ""};
    return {false, "removing the cut leaves " + std::to_string(comps) + " components, need > " +
                       std::to_string(std::max(s, 1))};
  }
  if (const auto* tc = std::get_if<ThreeChannelWitness>(&cert)) {
    if (certify_three_channel(g, tc->roles)) return {true, ""};
    return {false, "three-channel hypotheses do not hold in this graph"};
  }
  // An exhausted search attests a completed enumeration; nothing further is
  // checkable from the certificate alone.
  return {true, ""};
}

std::optional<CutWitness> find_cut_witness(const Graph& g, int max_size) {
  if (max_size > 5) throw std::invalid_argument("cut witness search capped at size 5");
  VertexSet none(g.n());
  if (component_count(g, none) > 1) return CutWitness{none};

  std::vector<int> pick;
  std::function<std::optional<CutWitness>(int, int)> rec = [&](int start, int remaining) -> std::optional<CutWitness> {
    if (remaining == 0) {
      VertexSet s(g.n());
      for (int v : pick) s.set(v);
      if (component_count(g, s) > static_cast<int>(pick.size())) return CutWitness{s};
      return std::nullopt;
    }
    for (int v = start; v < g.n(); ++v) {
      pick.push_back(v);
      if (auto w = rec(v + 1, remaining - 1)) return w;
      pick.pop_back();
    }
    return std::nullopt;
  };
  for (int size = 1; size <= max_size && size < g.n(); ++size) {
    pick.clear();
    if (auto w = rec(0, size)) return w;
  }
  return std::nullopt;
}

std::optional<ThreeChannelWitness> certify_three_channel(const Graph& g, const ThreeChannelRoles& roles) {
  auto bad = [&]() { return std::nullopt; };
  std::array<int, 3> apex{};
  for (int i = 0; i < 3; ++i) {
    apex[static_cast<size_t>(i)] = roles.channels[static_cast<size_t>(i)].apex;
    if (apex[static_cast<size_t>(i)] < 0 || apex[static_cast<size_t>(i)] >= g.n()) return bad();
  }
  if (apex[0] == apex[1] || apex[0] == apex[2] || apex[1] == apex[2]) return bad();
  if (!g.has_edge(apex[0], apex[1]) || !g.has_edge(apex[0], apex[2]) || !g.has_edge(apex[1], apex[2]))
    return bad();

  VertexSet apex_set(g.n());
  for (int a : apex) apex_set.set(a);

  VertexSet all_islands(g.n());
  for (const Channel& ch : roles.channels) {
    if (ch.gateway < 0 || ch.gateway >= g.n() || ch.gateway == ch.apex) return bad();
    if (apex_set.test(ch.gateway)) return bad();
    if (ch.island.empty()) return bad();
    if (ch.island.test(ch.apex) || ch.island.test(ch.gateway)) return bad();
    if (ch.island.intersects(apex_set) || ch.island.intersects(all_islands)) return bad();
    all_islands |= ch.island;
  }

  for (const Channel& ch : roles.channels) {
    // Island exits lead only to this channel's apex vertex or gateway.
    VertexSet closed = ch.island;
    closed.set(ch.apex);
    closed.set(ch.gateway);
    for (int s = ch.island.first(); s >= 0; s = ch.island.next(s))
      if (!closed.contains_all(g.neighbors(s))) return bad();
    // The apex vertex sees only its island, its gateway, and the apex triangle.
    VertexSet apex_allowed = ch.island | apex_set;
    apex_allowed.set(ch.gateway);
    if (!apex_allowed.contains_all(g.neighbors(ch.apex))) return bad();
    // A Hamilton cycle confined to island + doors would miss the rest.
    if (ch.island.count() + 2 >= g.n()) return bad();
  }
  return ThreeChannelWitness{roles};
}

HamDecision is_hamiltonian(const Graph& g, std::uint64_t budget, const std::optional<ThreeChannelRoles>& roles) {
  HamDecision d;
  if (g.n() < 3) {
    d.status = HamStatus::kNonHamiltonian;
    d.certificate = ExhaustedSearch{0};
    d.stats.exhausted = true;
    return d;
  }
  if (auto cut = find_cut_witness(g, std::min(2, g.n() - 1))) {
    d.status = HamStatus::kNonHamiltonian;
    d.certificate = *cut;
    d.stats.exhausted = true;
    return d;
  }
  if (roles) {
    if (auto w = certify_three_channel(g, *roles)) {
      d.status = HamStatus::kNonHamiltonian;
      d.certificate = *w;
      d.stats.exhausted = true;
      return d;
    }
  }
  auto res = find_hamiltonian_cycle(g, budget);
  d.stats = res.stats;
  if (res.cycle) {
    d.status = HamStatus::kHamiltonian;
    d.certificate = HamiltonCycle{*res.cycle};
  } else if (res.stats.exhausted) {
    d.status = HamStatus::kNonHamiltonian;
    d.certificate = ExhaustedSearch{res.stats.nodes};
  } else {
    d.status = HamStatus::kInconclusive;
    d.certificate = ExhaustedSearch{res.stats.nodes};
  }
  return d;
}

}  // namespace hamlab
