#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hamlab/campaigns.hpp"
#include "hamlab/closure.hpp"
#include "hamlab/conditions.hpp"
#include "hamlab/families.hpp"
#include "hamlab/gamma.hpp"
#include "hamlab/graph_io.hpp"
#include "hamlab/hamilton.hpp"

namespace {

using hamlab::GammaPattern;
using hamlab::Graph;
using hamlab::Report;
using nlohmann::json;

void emit(const Report& rep, const std::string& out_path) {
  std::cout << rep.summary_text();
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
    out << rep.to_json().dump(2) << '\n';
  }
}

json certificate_json(const Graph& g, const hamlab::HamDecision& d) {
  json j;
  j["nodes"] = d.stats.nodes;
  switch (d.status) {
    case hamlab::HamStatus::kHamiltonian: {
      j["decision"] = "hamiltonian";
      j["certificate"] = {{"kind", "cycle"},
                          {"order", std::get<hamlab::HamiltonCycle>(d.certificate).order}};
      break;
    }
    case hamlab::HamStatus::kNonHamiltonian: {
      j["decision"] = "non-hamiltonian";
      if (const auto* cut = std::get_if<hamlab::CutWitness>(&d.certificate)) {
        j["certificate"] = {{"kind", "cut"}, {"cut", cut->cut.to_vector()}};
      } else if (const auto* tc = std::get_if<hamlab::ThreeChannelWitness>(&d.certificate)) {
        json channels = json::array();
        for (const auto& ch : tc->roles.channels)
          channels.push_back({{"island", ch.island.to_vector()}, {"apex", ch.apex}, {"gateway", ch.gateway}});
        j["certificate"] = {{"kind", "three-channel"}, {"channels", channels}};
      } else {
        j["certificate"] = {{"kind", "exhausted-search"},
                            {"nodes", std::get<hamlab::ExhaustedSearch>(d.certificate).nodes}};
      }
      break;
    }
    case hamlab::HamStatus::kInconclusive:
      j["decision"] = "inconclusive";
      break;
  }
  j["certificate_verified"] = hamlab::verify_certificate(g, d.certificate).ok;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph predicates, closure structure and hamiltonicity campaigns"};
  app.require_subcommand(1);

  std::string file, out_path, gamma_text, family, params_text;
  std::uint64_t seed = 1, budget = hamlab::kDefaultBudget;
  int trials = 1000, nmax = 12, jobs = 1;
  bool has_gamma = false;

  auto add_common = [&](CLI::App* cmd, bool with_gamma) {
    cmd->add_option("--out", out_path, "write the full JSON report here");
    if (with_gamma) cmd->add_option("--gamma", gamma_text, "pattern as sorted two-digit tokens, e.g. 13,46")
                        ->each([&](const std::string&) { has_gamma = true; });
  };

  auto* c_check = app.add_subcommand("check", "predicate table for a graph file");
  c_check->add_option("file", file)->required();
  add_common(c_check, true);

  auto* c_closure = app.add_subcommand("closure", "closure trace and region table");
  c_closure->add_option("file", file)->required();
  add_common(c_closure, false);

  auto* c_regions = app.add_subcommand("regions", "region decomposition of the closure");
  c_regions->add_option("file", file)->required();
  add_common(c_regions, false);

  auto* c_ham = app.add_subcommand("ham", "hamiltonicity decision with certificate");
  c_ham->add_option("file", file)->required();
  c_ham->add_option("--budget", budget, "search node budget");
  add_common(c_ham, false);

  auto* c_gen = app.add_subcommand("generate", "write a family member as edge list + label sidecar");
  c_gen->add_option("family", family, "brousek|g1|g2|g3")->required();
  c_gen->add_option("--params", params_text, "comma-separated family parameters")->required();
  c_gen->add_option("--out", out_path, "output edge-list path (labels go to <out>.json)")->required();

  auto* c_classify = app.add_subcommand("classify-gamma", "guaranteed or not, for a symmetrical pattern");
  c_classify->add_option("--gamma", gamma_text)->required();
  c_classify->add_option("--out", out_path);

  auto* c_enum = app.add_subcommand("enumerate-gamma", "count symmetrical patterns and the guaranteed split");
  add_common(c_enum, false);

  auto* c_bad = app.add_subcommand("find-bad-p6", "search for an induced P6 defeating a pattern");
  c_bad->add_option("file", file)->required();
  c_bad->add_option("--gamma", gamma_text)->required();
  c_bad->add_option("--out", out_path);

  auto* c_if = app.add_subcommand("verify-theorem9-if", "sampled sufficiency campaign");
  c_if->add_option("--seed", seed);
  c_if->add_option("--trials", trials);
  c_if->add_option("--nmax", nmax);
  c_if->add_option("--jobs", jobs);
  c_if->add_option("--out", out_path);

  auto* c_onlyif = app.add_subcommand("verify-theorem9-onlyif", "necessity coverage over all symmetrical patterns");
  c_onlyif->add_option("--out", out_path);

  auto* c_lemmas = app.add_subcommand("verify-lemmas", "closure and region structure campaign");
  c_lemmas->add_option("--seed", seed);
  c_lemmas->add_option("--trials", trials);
  c_lemmas->add_option("--nmax", nmax);
  c_lemmas->add_option("--jobs", jobs);
  c_lemmas->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_check->parsed()) {
      Graph g = hamlab::read_graph_file(file);
      std::vector<GammaPattern> gammas;
      if (has_gamma) gammas.push_back(GammaPattern::parse(gamma_text));
      Report rep = hamlab::cmd_check(g, gammas);
      rep.config["file"] = file;
      emit(rep, out_path);
      return rep.exit_code();
    }

    if (c_closure->parsed() || c_regions->parsed()) {
      Graph g = hamlab::read_graph_file(file);
      hamlab::ClosureTrace trace = hamlab::compute_closure(g);
      hamlab::RegionDecomposition dec = hamlab::regions(trace, g);
      Report rep;
      rep.command = c_closure->parsed() ? "closure" : "regions";
      rep.config["file"] = file;
      json steps = json::array();
      for (const auto& st : trace.steps) {
        json edges = json::array();
        for (auto [u, v] : st.added) edges.push_back({u, v});
        steps.push_back({{"vertex", st.vertex}, {"added", edges}});
      }
      rep.results["steps"] = steps;
      rep.results["closure_edges"] = trace.result.m();
      json regs = json::array();
      for (size_t r = 0; r < dec.regions.size(); ++r)
        regs.push_back({{"id", r},
                        {"vertices", dec.regions[r].to_vector()},
                        {"interior", dec.interior_of(static_cast<int>(r)).to_vector()},
                        {"frontier", dec.frontier_of(static_cast<int>(r)).to_vector()}});
      rep.results["regions"] = regs;
      std::cout << rep.to_json(false)["results"].dump(2) << '\n';
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << rep.to_json().dump(2) << '\n';
      }
      return 0;
    }

    if (c_ham->parsed()) {
      Graph g = hamlab::read_graph_file(file);
      hamlab::HamDecision d = hamlab::is_hamiltonian(g, budget);
      Report rep;
      rep.command = "ham";
      rep.config = {{"file", file}, {"budget", budget}};
      rep.results = certificate_json(g, d);
      if (d.status == hamlab::HamStatus::kInconclusive) rep.inconclusive = true;
      std::cout << rep.results.dump(2) << '\n';
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << rep.to_json().dump(2) << '\n';
      }
      return rep.exit_code();
    }

    if (c_gen->parsed()) {
      hamlab::FamilyWitness w;
      if (family == "brousek") {
        w = hamlab::brousek(hamlab::BrousekSpec::parse(params_text));
      } else {
        std::vector<int> p;
        std::stringstream ss(params_text);
        std::string tok;
        while (std::getline(ss, tok, ',')) p.push_back(std::stoi(tok));
        if (family == "g1" && p.size() == 1) {
          w = hamlab::g1(p[0]);
        } else if (family == "g3" && p.size() == 2) {
          w = hamlab::g3(p[0], p[1]);
        } else if (family == "g2" && p.size() == 4) {
          w = hamlab::g2(p[0], p[1], p[2], p[3]);
        } else {
          throw std::invalid_argument("bad family/params combination");
        }
      }
      hamlab::write_edge_list_file(out_path, w.graph);
      json side;
      side["family"] = family;
      side["params"] = w.params;
      side["labels"] = w.labels;
      side["warnings"] = w.warnings;
      std::ofstream side_out(out_path + ".json");
      side_out << side.dump(2) << '\n';
      std::cout << "wrote " << out_path << " (n=" << w.graph.n() << ", m=" << w.graph.m() << ")\n";
      for (const auto& warn : w.warnings) std::cout << "warning: " << warn << '\n';
      return 0;
    }

    if (c_classify->parsed()) {
      GammaPattern gp = GammaPattern::parse(gamma_text);
      if (!gp.is_symmetrical()) {
        std::cerr << "error: pattern not symmetrical\n";
        return 2;
      }
      const auto& c = hamlab::gamma_constants();
      Report rep;
      rep.command = "classify-gamma";
      rep.config["gamma"] = gp.to_string();
      bool ok = hamlab::guarantees_hamiltonicity(gp);
      rep.results["guaranteed"] = ok;
      std::string detail;
      if (gp.is_subset_of(c.gamma1)) detail += detail.empty() ? "gamma1" : ",gamma1";
      if (gp.is_subset_of(c.gamma2)) detail += detail.empty() ? "gamma2" : ",gamma2";
      if (gp.is_subset_of(c.gamma3)) detail += detail.empty() ? "gamma3" : ",gamma3";
      rep.results["subgraph_of"] = detail;
      std::cout << (ok ? "guaranteed (subgraph of " + detail + ")" : "not guaranteed") << '\n';
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << rep.to_json().dump(2) << '\n';
      }
      return 0;
    }

    if (c_enum->parsed()) {
      int guaranteed = 0, total = 0;
      hamlab::enumerate_symmetrical([&](const GammaPattern& gp) {
        ++total;
        if (hamlab::guarantees_hamiltonicity(gp)) ++guaranteed;
        return true;
      });
      Report rep;
      rep.command = "enumerate-gamma";
      rep.results = {{"total", total}, {"guaranteed", guaranteed}, {"non_guaranteed", total - guaranteed}};
      std::cout << "symmetrical patterns: " << total << ", guaranteed: " << guaranteed
                << ", non-guaranteed: " << total - guaranteed << '\n';
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << rep.to_json().dump(2) << '\n';
      }
      return 0;
    }

    if (c_bad->parsed()) {
      Graph g = hamlab::read_graph_file(file);
      GammaPattern gp = GammaPattern::parse(gamma_text);
      auto bad = hamlab::find_bad_p6(g, gp);
      Report rep;
      rep.command = "find-bad-p6";
      rep.config = {{"file", file}, {"gamma", gp.to_string()}};
      if (bad) {
        rep.results["bad_p6"] = bad->map;
        rep.results["signature"] = hamlab::heavy_signature(g, *bad).to_string();
        std::cout << "bad P6 found: ";
        for (int v : bad->map) std::cout << v << ' ';
        std::cout << '\n';
      } else {
        rep.results["bad_p6"] = nullptr;
        std::cout << "none: the graph is P6-gamma-heavy for {" << gp.to_string() << "}\n";
      }
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << rep.to_json().dump(2) << '\n';
      }
      return 0;
    }

    if (c_if->parsed()) {
      Report rep = hamlab::cmd_verify_theorem9_if(seed, trials, nmax, jobs);
      emit(rep, out_path);
      return rep.exit_code();
    }
    if (c_onlyif->parsed()) {
      Report rep = hamlab::cmd_verify_theorem9_onlyif();
      emit(rep, out_path);
      return rep.exit_code();
    }
    if (c_lemmas->parsed()) {
      Report rep = hamlab::cmd_verify_lemmas(seed, trials, nmax, 5, jobs);
      emit(rep, out_path);
      return rep.exit_code();
    }
  } catch (const hamlab::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
