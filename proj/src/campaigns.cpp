#include "hamlab/campaigns.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "hamlab/closure.hpp"
#include "hamlab/conditions.hpp"
#include "hamlab/hamilton.hpp"

namespace hamlab {

using nlohmann::json;

json Report::to_json(bool with_timestamp) const {
  json j;
  j["schema_version"] = 1;
  j["command"] = command;
  j["config"] = config;
  j["results"] = results;
  j["failures"] = failures;
  j["inconclusive"] = inconclusive;
  if (with_timestamp) {
    auto now = std::chrono::system_clock::now().time_since_epoch();
    j["generated_at"] = std::chrono::duration_cast<std::chrono::milliseconds>(now).count();
  }
  return j;
}

std::string Report::summary_text() const {
  std::string out = command + ": " + (failures.empty() ? "ok" : std::to_string(failures.size()) + " failure(s)");
  if (inconclusive) out += " (inconclusive results present)";
  out += "\n";
  for (const auto& f : failures) out += "  failure: " + f + "\n";
  return out;
}

void parallel_for(int jobs, int count, const std::function<void(int)>& fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> threads;
  threads.reserve(static_cast<size_t>(jobs));
  for (int t = 0; t < jobs; ++t)
    threads.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& th : threads) th.join();
}

Graph corpus_graph(std::uint64_t seed, int index, int n_min, int n_max) {
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(index + 1)));
  int n = n_min + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max - n_min + 1));
  SampleStrategy strategy = (rng() % 4 == 0) ? SampleStrategy::kLineGraph : SampleStrategy::kRejection;
  if (strategy == SampleStrategy::kRejection && (n < 4 || n > 16)) strategy = SampleStrategy::kLineGraph;
  return random_claw_o_heavy(n, rng(), strategy);
}

Report cmd_check(const Graph& g, const std::vector<GammaPattern>& gammas) {
  Report rep;
  rep.command = "check";
  rep.results["n"] = g.n();
  rep.results["m"] = g.m();
  rep.results["connected"] = is_connected(g);
  rep.results["two_connected"] = is_two_connected(g);
  const auto& lib = patterns();
  rep.results["claw_free"] = is_H_free(g, lib.claw);
  rep.results["claw_o_heavy"] = is_H_o_heavy(g, lib.claw);
  rep.results["claw_f_heavy"] = is_H_f_heavy(g, lib.claw);
  rep.results["p6_free"] = is_H_free(g, lib.p6);
  rep.results["p6_o_heavy"] = is_H_o_heavy(g, lib.p6);
  rep.results["p6_f_heavy"] = is_H_f_heavy(g, lib.p6);
  rep.results["dirac"] = dirac_holds(g);
  rep.results["ore"] = ore_holds(g);
  json per_gamma = json::object();
  for (const auto& gp : gammas) per_gamma[gp.to_string()] = is_p6_gamma_heavy(g, gp);
  rep.results["p6_gamma_heavy"] = per_gamma;
  return rep;
}

Report cmd_verify_theorem9_if(std::uint64_t seed, int trials, int n_max, int jobs) {
  Report rep;
  rep.command = "verify-theorem9-if";
  rep.config = {{"seed", seed}, {"trials", trials}, {"nmax", n_max}, {"jobs", jobs}};
  if (n_max > 14) throw std::invalid_argument("campaign supports nmax <= 14");

  const auto& consts = gamma_constants();
  struct Filter {
    std::string name;
    std::optional<GammaPattern> gamma;  // nullopt for the f-heavy filter
  };
  std::vector<Filter> filters = {{"gamma1", consts.gamma1},
                                 {"gamma2", consts.gamma2},
                                 {"gamma3", consts.gamma3},
                                 {"epsilon", GammaPattern::empty()},
                                 {"f_heavy", std::nullopt}};

  std::vector<std::array<int, 2>> counts(filters.size(), {0, 0});  // {hits, ham-confirmed}
  std::mutex mu;
  std::vector<std::string> failures;
  std::atomic<bool> any_inconclusive{false};

  parallel_for(jobs, trials, [&](int i) {
    Graph g = corpus_graph(seed, i, 6, n_max);
    auto sigs = signature_classes(g);
    auto gamma_heavy = [&](const GammaPattern& gp) {
      GammaPattern either = GammaPattern::from_mask(gp.mask() | gp.symmetric_image().mask());
      for (const auto& s : sigs)
        if (!s.intersects(either)) return false;
      return true;
    };
    std::vector<bool> hit(filters.size(), false);
    bool any = false;
    for (size_t f = 0; f < filters.size(); ++f) {
      hit[f] = filters[f].gamma ? gamma_heavy(*filters[f].gamma) : is_H_f_heavy(g, patterns().p6);
      any = any || hit[f];
    }
    if (!any) return;
    HamDecision d = is_hamiltonian(g);
    std::lock_guard<std::mutex> lock(mu);
    for (size_t f = 0; f < filters.size(); ++f) {
      if (!hit[f]) continue;
      ++counts[f][0];
      if (d.status == HamStatus::kHamiltonian) ++counts[f][1];
    }
    if (d.status == HamStatus::kInconclusive) {
      any_inconclusive = true;
      failures.push_back("trial " + std::to_string(i) + ": solver inconclusive");
    } else if (d.status == HamStatus::kNonHamiltonian) {
      std::string names;
      for (size_t f = 0; f < filters.size(); ++f)
        if (hit[f]) names += (names.empty() ? "" : ",") + filters[f].name;
      failures.push_back("trial " + std::to_string(i) + ": graph passes filter(s) " + names +
                         " but is not hamiltonian (n=" + std::to_string(g.n()) + ")");
    }
  });

  json stats = json::object();
  for (size_t f = 0; f < filters.size(); ++f)
    stats[filters[f].name] = {{"filtered", counts[f][0]}, {"hamiltonian", counts[f][1]}};
  rep.results["filters"] = stats;
  rep.results["trials"] = trials;
  rep.failures = std::move(failures);
  rep.inconclusive = any_inconclusive.load();
  std::sort(rep.failures.begin(), rep.failures.end());
  return rep;
}

Report cmd_verify_theorem9_onlyif() {
  Report rep;
  rep.command = "verify-theorem9-onlyif";
  rep.config = json::object();

  FamilyWitness w1 = g1(7);
  FamilyWitness w3 = g3(8, 31);
  FamilyWitness w2 = g2(6, 12, 12, 23);  // validates itself at these bounds

  for (auto* w : {&w1, &w3}) {
    ValidationReport v = validate_counterexample(*w);
    if (!v.passed())
      for (const auto& f : v.failures) rep.failures.push_back("witness validation: " + f);
  }

  std::array<std::vector<P6HeavySignature>, 3> sigs = {
      signature_classes(w1.graph), signature_classes(w2.graph), signature_classes(w3.graph)};
  auto defeated_by = [&](int widx, const GammaPattern& gp) {
    for (const auto& s : sigs[static_cast<size_t>(widx)])
      if (!s.intersects(gp)) return false;  // symmetrical gp equals its mirror closure
    return true;
  };

  GammaPattern inner = GammaPattern::parse("22,23,24,33,34,35,44,45,55");
  GammaPattern ends = GammaPattern::parse("11,16,66");
  GammaPattern residual = GammaPattern::parse("12,13,46,56");

  int guaranteed = 0;
  std::array<int, 3> used{0, 0, 0};
  std::vector<std::string> uncovered;
  enumerate_symmetrical([&](const GammaPattern& gp) {
    if (guarantees_hamiltonicity(gp)) {
      ++guaranteed;
      return true;
    }
    int widx;
    if (gp.intersects(inner)) {
      widx = 0;
    } else if (gp.intersects(ends)) {
      widx = 2;
      if (!gp.contains(1, 3) || !gp.contains(4, 6))
        uncovered.push_back("routing invariant broken for {" + gp.to_string() + "}: 13,46 expected");
    } else {
      widx = 1;
      if (!residual.is_subset_of(gp))
        uncovered.push_back("routing invariant broken for {" + gp.to_string() + "}: 12,13,46,56 expected");
    }
    ++used[static_cast<size_t>(widx)];
    if (!defeated_by(widx, gp)) {
      const char* names[3] = {"g1", "g2", "g3"};
      uncovered.push_back("pattern {" + gp.to_string() + "} not covered by routed witness " +
                          names[static_cast<size_t>(widx)]);
    }
    return true;
  });

  rep.results["guaranteed"] = guaranteed;
  rep.results["non_guaranteed"] = 4096 - guaranteed;
  rep.results["witness_usage"] = {{"g1", used[0]}, {"g2", used[1]}, {"g3", used[2]}};
  for (auto& u : uncovered) rep.failures.push_back(u);
  return rep;
}

Report cmd_verify_lemmas(std::uint64_t seed, int trials, int n_max, int order_trials, int jobs) {
  Report rep;
  rep.command = "verify-lemmas";
  rep.config = {{"seed", seed}, {"trials", trials}, {"nmax", n_max}, {"order_trials", order_trials}, {"jobs", jobs}};

  std::mutex mu;
  std::vector<std::string> failures;
  std::atomic<bool> any_inconclusive{false};
  std::atomic<int> warning_count{0}, heavy_cases{0};

  parallel_for(jobs, trials, [&](int i) {
    Graph g = corpus_graph(seed, i, 6, n_max);
    std::vector<std::string> local;
    auto fail = [&](const std::string& s) { local.push_back("trial " + std::to_string(i) + ": " + s); };

    ClosureTrace trace = compute_closure(g);
    const Graph& cl = trace.result;

    for (auto [u, v] : g.edges())
      if (!cl.has_edge(u, v)) fail("closure lost an edge");
    if (compute_closure(cl).result != cl) fail("closure is not idempotent");
    for (int k = 0; k < order_trials; ++k)
      if (compute_closure_random_order(g, seed ^ (static_cast<std::uint64_t>(i) << 20) ^ static_cast<std::uint64_t>(k)).result != cl) {
        fail("closure depends on the eligible-vertex order");
        break;
      }

    HamDecision dg = is_hamiltonian(g);
    HamDecision dc = is_hamiltonian(cl);
    if (dg.status == HamStatus::kInconclusive || dc.status == HamStatus::kInconclusive) {
      any_inconclusive = true;
      fail("solver inconclusive");
    } else if (dg.status != dc.status) {
      fail("hamiltonicity changed under the closure");
    }

    try {
      RegionDecomposition dec = regions(trace, g);
      LemmaReport lr = check_region_lemmas(g, trace, dec);
      for (const auto& v : lr.violations) fail(v);
      warning_count += static_cast<int>(lr.warnings.size());
      heavy_cases += lr.heavy_pair_cases;
    } catch (const StructuralViolation& e) {
      fail(e.what());
    }

    if (!local.empty()) {
      std::lock_guard<std::mutex> lock(mu);
      for (auto& s : local) failures.push_back(std::move(s));
    }
  });

  rep.results["trials"] = trials;
  rep.results["diamond_warnings"] = warning_count.load();
  rep.results["heavy_pair_lemma_cases"] = heavy_cases.load();
  rep.failures = std::move(failures);
  std::sort(rep.failures.begin(), rep.failures.end());
  rep.inconclusive = any_inconclusive.load();
  return rep;
}

}  // namespace hamlab
