#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamlab/gamma.hpp"
#include "hamlab/graph.hpp"
#include "hamlab/hamilton.hpp"

namespace hamlab {

/// One channel between the two base triangles: either a path on k >= 3
/// vertices (sharing its ends with the triangles) or a triangle through one
/// extra vertex.
struct Connector {
  bool triangle = false;
  int k = 0;  // path order when !triangle

  static Connector path(int k) { return {false, k}; }
  static Connector tri() { return {true, 0}; }
  bool operator==(const Connector& o) const { return triangle == o.triangle && (triangle || k == o.k); }
};

struct BrousekSpec {
  std::array<Connector, 3> connectors;

  int order() const;
  std::string to_string() const;            // e.g. "3,3,3" or "T,3,4"
  static BrousekSpec parse(const std::string& text);
};

struct FamilyWitness {
  Graph graph;
  std::map<std::string, int> labels;        // role -> vertex, covers all vertices
  std::map<std::string, int> params;
  std::vector<std::string> warnings;

  int vertex(const std::string& role) const;
};

struct ValidationReport {
  bool two_connected = false;
  bool claw_o_heavy = false;
  bool non_hamiltonian = false;
  std::optional<bool> p6_gamma_heavy;
  std::optional<bool> named_paths_ok;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  bool passed() const { return failures.empty(); }
};

struct ValidationError : std::runtime_error {
  ValidationError(const std::string& msg, ValidationReport rep)
      : std::runtime_error(msg), report(std::move(rep)) {}
  ValidationReport report;
};

/// Two disjoint triangles a1a2a3, b1b2b3 joined per connector; nothing else.
FamilyWitness brousek(const BrousekSpec& spec);

/// Complete core K_r with a distinguished member w; three gateway vertices
/// x'',y'',z'' each adjacent to the whole core; rows x''x'x, y''y'y, z''z'z
/// forming triangles; apex triangle xyz. r below 7 carries a warning.
FamilyWitness g1(int r);

/// Core K_r plus three independent k-vertex groups X,Y,Z, every group vertex
/// adjacent to the whole core; gateway x'' adjacent to all of X (likewise
/// y'',z''); rows and apex as in g1. Bounds k >= 8, r >= 3k+7 warned below.
FamilyWitness g3(int k, int r);

struct G2Options {
  bool gateway_sees_all_groups = true;  // y'' adjacent to X and Z, not just Y
  bool apex_sees_clique = true;         // y adjacent to all of the middle clique
  bool gateway_sees_clique = true;      // y'' adjacent to all of the middle clique
};

/// Groups X (r), Y (s), Z (t) with X+Y and Y+Z complete and X,Z nonadjacent;
/// gateways x'' over X, z'' over Z, y'' over all groups; a middle clique of q
/// vertices joined completely to both y and y''; row triangles xx'x'' and
/// zz'z''; apex triangle xyz. At paper bounds the generator validates itself
/// and throws on failure; below the bounds it only warns.
FamilyWitness g2(int q, int r, int s, int t, const G2Options& options = {});

/// 2-connected, claw-o-heavy, non-hamiltonian with a verifiable certificate;
/// P6-gamma-heavy when a pattern is given; for g1/g3 also that the cataloged
/// induced P6s exist, are induced, and carry the expected heavy positions.
ValidationReport validate_counterexample(const FamilyWitness& w,
                                         const std::optional<GammaPattern>& gamma = std::nullopt);

/// Channel roles for the non-hamiltonicity template, read off the labels.
ThreeChannelRoles three_channel_roles(const FamilyWitness& w);

enum class SampleStrategy { kRejection, kLineGraph };

struct SamplingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Seed-deterministic 2-connected claw-o-heavy graph on n vertices.
/// Rejection filters dense random graphs; the line-graph strategy returns a
/// (claw-free) line graph of a random triangle-free graph, optionally
/// densified while the predicates still hold.
Graph random_claw_o_heavy(int n, std::uint64_t seed, SampleStrategy strategy);

/// Canonical connector multisets whose total order is within the bound.
std::vector<BrousekSpec> brousek_specs_up_to(int max_order);

/// Some member of the two-triangle family appears as an induced subgraph.
bool contains_brousek_member(const Graph& g);

}  // namespace hamlab
