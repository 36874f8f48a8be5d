#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hamlab/graph.hpp"

namespace hamlab {

struct SearchStats {
  std::uint64_t nodes = 0;
  bool exhausted = false;  // the whole space was covered within budget
};

struct HamiltonCycle {
  std::vector<int> order;  // visits every vertex once; consecutive and wrap-around pairs adjacent
};

struct ExhaustedSearch {
  std::uint64_t nodes = 0;
};

struct CutWitness {
  VertexSet cut;  // components(G - cut) > max(|cut|, 1)
};

/// One channel of the three-channel non-hamiltonicity template. The island's
/// only exits lead to its apex vertex and its gateway, and the apex vertex
/// has no neighbors beyond the island, the gateway and the other two apex
/// vertices. In any Hamilton cycle the island is traversed as a single arc
/// from apex to gateway, so the apex vertex spends exactly one of its two
/// cycle edges inside the apex triangle; three channels give the triangle an
/// odd number of edge endpoints.
struct Channel {
  VertexSet island;
  int apex = -1;
  int gateway = -1;
};

struct ThreeChannelRoles {
  std::array<Channel, 3> channels;
};

struct ThreeChannelWitness {
  ThreeChannelRoles roles;
};

using Certificate = std::variant<HamiltonCycle, ExhaustedSearch, CutWitness, ThreeChannelWitness>;

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct CycleSearchResult {
  std::optional<std::vector<int>> cycle;
  SearchStats stats;
};

/// Backtracking search with forced degree-2 edges, a connectivity test on the
/// unvisited region, and a dead-end vertex test. A definitive "none" is
/// reported only when the space was exhausted within budget.
CycleSearchResult find_hamiltonian_cycle(const Graph& g, std::uint64_t budget = kDefaultBudget);

struct VerifyResult {
  bool ok = false;
  std::string reason;
};

VerifyResult verify_certificate(const Graph& g, const Certificate& cert);

/// Smallest vertex set (by size, then lexicographically) whose removal
/// leaves more components than max(|S|, 1), searched up to max_size <= 5.
std::optional<CutWitness> find_cut_witness(const Graph& g, int max_size);

/// Validates every template hypothesis against g; never assumes the roles fit.
std::optional<ThreeChannelWitness> certify_three_channel(const Graph& g, const ThreeChannelRoles& roles);

enum class HamStatus { kHamiltonian, kNonHamiltonian, kInconclusive };

struct HamDecision {
  HamStatus status = HamStatus::kInconclusive;
  Certificate certificate = ExhaustedSearch{};
  SearchStats stats;
};

/// Orchestration: cheap cut witness, then the three-channel template when
/// roles are supplied, then exhaustive search. Budget exhaustion yields an
/// explicit inconclusive decision, never a silent "no".
HamDecision is_hamiltonian(const Graph& g, std::uint64_t budget = kDefaultBudget,
                           const std::optional<ThreeChannelRoles>& roles = std::nullopt);

}  // namespace hamlab
