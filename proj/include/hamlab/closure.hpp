#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamlab/graph.hpp"

namespace hamlab {

struct StructuralViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Adds every missing edge inside N(x). Nothing else changes.
Graph local_completion(const Graph& g, int x);

/// All pairs {u,v} inside N(x) with d(u)+d(v) >= n, adjacent ones included.
std::vector<std::pair<int, int>> heavy_neighborhood_edges(const Graph& g, int x);

enum class EligibilityDiagnostic {
  kConnected,          // N(x) not a clique, heavy-augmented neighborhood connected
  kTwoCliquesWithJoin, // two disjoint cliques bridged by a join vertex
  kTwoCliquesNoJoin,   // two disjoint cliques, no join vertex exists
  kNotApplicable,      // N(x) a clique, or >=3 components, or a non-clique component
};

struct EligibilityResult {
  bool eligible = false;
  EligibilityDiagnostic diagnostic = EligibilityDiagnostic::kNotApplicable;
};

EligibilityResult o_eligibility(const Graph& g, int x);
bool is_o_eligible(const Graph& g, int x);

struct ClosureStep {
  int vertex;
  std::vector<std::pair<int, int>> added;
};

struct ClosureTrace {
  std::vector<ClosureStep> steps;
  Graph result;
};

/// Fixed point of local completion at o-eligible vertices, lowest index
/// first. Requires a claw-o-heavy input; the heavy sets are re-read from the
/// current graph at every step. The result does not depend on the order of
/// eligible vertices (a property the tests verify rather than assume).
ClosureTrace compute_closure(const Graph& g);

/// Same fixed point with the eligible vertex drawn uniformly per step.
ClosureTrace compute_closure_random_order(const Graph& g, std::uint64_t seed);

struct RegionDecomposition {
  std::vector<VertexSet> regions;              // maximal cliques of the closure
  std::vector<std::vector<int>> vertex_regions; // vertex -> owning region ids
  bool is_interior(int v) const { return vertex_regions[static_cast<size_t>(v)].size() == 1; }
  bool is_frontier(int v) const { return vertex_regions[static_cast<size_t>(v)].size() == 2; }
  VertexSet interior_of(int region) const;     // members owned by this region only
  VertexSet frontier_of(int region) const;
  std::optional<int> shared_region(int u, int v) const;
};

/// Maximal cliques of the closure plus the interior/frontier classification.
/// A vertex in three or more maximal cliques is a structural violation.
RegionDecomposition regions(const ClosureTrace& trace, const Graph& g);

/// True iff u and v share no region.
bool dissociated(const RegionDecomposition& dec, int u, int v);

/// Shortest path from u to v in g whose internal vertices are all interior
/// to the shared region. Errors when u,v are dissociated.
std::vector<int> interior_path(const RegionDecomposition& dec, const Graph& g, int u, int v);

/// Structural checks on a decomposition: vertex region counts, pairwise
/// region intersections, dissociated pairs light, nonseparable regions,
/// frontier/interior structure, interior paths and their lightness, common
/// interior neighbors of heavy nonadjacent in-region pairs, and closure
/// claw-freeness. Diamond-freeness of the closure is reported as a warning.
struct LemmaReport {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
  int heavy_pair_cases = 0;  // lemma cases that actually fired
  bool ok() const { return violations.empty(); }
};

LemmaReport check_region_lemmas(const Graph& g, const ClosureTrace& trace, const RegionDecomposition& dec);

std::vector<VertexSet> maximal_cliques(const Graph& g);

}  // namespace hamlab
