#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hamlab/families.hpp"
#include "hamlab/gamma.hpp"
#include "hamlab/graph.hpp"

namespace hamlab {

/// Structured result document shared by the CLI commands. Reruns with the
/// same configuration serialize byte-identically except for generated_at.
struct Report {
  std::string command;
  nlohmann::json config = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  std::vector<std::string> failures;
  bool inconclusive = false;

  int exit_code() const { return failures.empty() && !inconclusive ? 0 : 1; }
  nlohmann::json to_json(bool with_timestamp = true) const;
  std::string summary_text() const;
};

/// Deterministic corpus graph for property campaigns: claw-o-heavy,
/// 2-connected, order drawn from [n_min, n_max], strategy mixed per index.
Graph corpus_graph(std::uint64_t seed, int index, int n_min, int n_max);

Report cmd_check(const Graph& g, const std::vector<GammaPattern>& gammas);

/// Samples 2-connected claw-o-heavy graphs and asserts that each one passing
/// a prescription filter (the three constants, the empty pattern, or the
/// f-heavy condition) is hamiltonian.
Report cmd_verify_theorem9_if(std::uint64_t seed, int trials, int n_max, int jobs);

/// Enumerates the 4096 symmetrical patterns, routes every non-guaranteed one
/// to a counterexample family, and asserts the routed witness defeats it.
Report cmd_verify_theorem9_onlyif();

/// Closure and region-structure property campaign over the random corpus.
Report cmd_verify_lemmas(std::uint64_t seed, int trials, int n_max, int order_trials, int jobs);

void parallel_for(int jobs, int count, const std::function<void(int)>& fn);

}  // namespace hamlab
