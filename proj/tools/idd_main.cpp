// Command-line front door: graph statistics, instance generation, exact and
// learning-based equilibrium computation, verification, and the sweep/report
// experiment harness. Machine output goes to files or stdout; diagnostics to
// stderr. Exit codes: 0 ok, 1 usage, 2 validation failure, 3 size cap.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "idd/analysis.hpp"
#include "idd/brgd.hpp"
#include "idd/exact.hpp"
#include "idd/gen.hpp"
#include "idd/json_io.hpp"
#include "idd/oracle.hpp"

namespace {

using idd::io::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitSizeCap = 3;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void write_output(const json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

void write_text(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

idd::DirectedGraph load_graph(const std::string& path) {
  return idd::load_edge_list_file(path).graph;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"interdependent-defense equilibrium engine"};
  app.require_subcommand(1);

  std::string graph_path, game_path, spec_path, strategies_path, eqset_path, out_path;
  int diameter_cap = 5000;

  auto* cmd_stats = app.add_subcommand("stats", "graph summary statistics");
  cmd_stats->add_option("graph", graph_path, "edge-list file")->required();
  cmd_stats->add_option("--diameter-cap", diameter_cap, "skip diameter above this node count");
  cmd_stats->add_option("-o,--out", out_path, "output JSON file (default stdout)");

  std::string synth_kind = "preferential_attachment";
  int synth_n = 1000, synth_m = 2;
  double synth_p = 0.01;
  std::uint64_t seed = 0;
  auto* cmd_synth = app.add_subcommand("synth", "generate a synthetic graph edge list");
  cmd_synth->add_option("kind", synth_kind, "erdos_renyi_directed | preferential_attachment")
      ->required();
  cmd_synth->add_option("-n", synth_n, "node count")->required();
  cmd_synth->add_option("-m", synth_m, "out-degree budget (preferential attachment)");
  cmd_synth->add_option("-p", synth_p, "edge probability (Erdos-Renyi)");
  cmd_synth->add_option("--seed", seed, "RNG seed")->required();
  cmd_synth->add_option("-o,--out", out_path, "output edge-list file (default stdout)");

  auto* cmd_gen = app.add_subcommand("gen", "generate a game over a graph");
  cmd_gen->add_option("graph", graph_path, "edge-list file")->required();
  cmd_gen->add_option("spec", spec_path, "generator spec JSON")->required();
  cmd_gen->add_option("--seed", seed, "overrides the spec seed");
  cmd_gen->add_option("-o,--out", out_path, "output game JSON (default stdout)");

  auto* cmd_validate = app.add_subcommand("validate", "check a game against the assumptions");
  cmd_validate->add_option("game", game_path, "game JSON")->required();
  cmd_validate->add_option("-o,--out", out_path, "output report JSON (default stdout)");

  auto* cmd_solve = app.add_subcommand("solve", "exact all-MSNE solver (transfer-vulnerable)");
  cmd_solve->add_option("game", game_path, "game JSON")->required();
  cmd_solve->add_option("-o,--out", out_path, "output equilibrium-set JSON (default stdout)");

  double eps = 1e-3, eta = 0.1, tol = 1e-9, threshold = 1e-6;
  int max_iter = 2000;
  std::string mode = "per-player-range";
  auto* cmd_brgd = app.add_subcommand("brgd", "best-response learning dynamics");
  cmd_brgd->add_option("game", game_path, "game JSON")->required();
  cmd_brgd->add_option("--eps", eps, "target normalized regret");
  cmd_brgd->add_option("--seed", seed, "init seed")->required();
  cmd_brgd->add_option("--eta", eta, "step size in (0,1]");
  cmd_brgd->add_option("--max-iter", max_iter, "iteration cap");
  cmd_brgd->add_option("--mode", mode, "per-player-range | absolute");
  cmd_brgd->add_option("-o,--out", out_path, "output result JSON (default stdout)");

  auto* cmd_verify = app.add_subcommand("verify", "regret + first-principles equilibrium check");
  cmd_verify->add_option("game", game_path, "game JSON")->required();
  cmd_verify->add_option("strategies", strategies_path, "strategies JSON")->required();
  cmd_verify->add_option("--tol", tol, "normalized tolerance");
  cmd_verify->add_option("-o,--out", out_path, "output report JSON (default stdout)");

  auto* cmd_sample = app.add_subcommand("sample", "materialize one point of an equilibrium set");
  cmd_sample->add_option("eqset", eqset_path, "equilibrium-set JSON")->required();
  cmd_sample->add_option("--seed", seed, "random selector seed");
  bool centroid = false;
  cmd_sample->add_flag("--centroid", centroid, "use the centroid selector");
  cmd_sample->add_option("-o,--out", out_path, "output strategies JSON (default stdout)");

  std::vector<double> eps_list;
  int seeds_per_eps = 10;
  std::string fit_out;
  auto* cmd_sweep = app.add_subcommand("sweep", "BRGD runs over an epsilon grid");
  cmd_sweep->add_option("graph", graph_path, "edge-list file")->required();
  cmd_sweep->add_option("spec", spec_path, "generator spec JSON")->required();
  cmd_sweep->add_option("--eps-list", eps_list, "epsilon values")->required();
  cmd_sweep->add_option("--seeds", seeds_per_eps, "seeds per epsilon");
  cmd_sweep->add_option("--seed", seed, "base seed")->required();
  cmd_sweep->add_option("--eta", eta, "step size");
  cmd_sweep->add_option("--max-iter", max_iter, "iteration cap");
  cmd_sweep->add_option("-o,--out", out_path, "output CSV (default stdout)");
  cmd_sweep->add_option("--fit-out", fit_out, "power-law fit JSON file");

  std::string report_prefix;
  auto* cmd_report = app.add_subcommand("report", "equilibrium structure report (CSV)");
  cmd_report->add_option("game", game_path, "game JSON")->required();
  cmd_report->add_option("strategies", strategies_path, "strategies JSON")->required();
  cmd_report->add_option("--threshold", threshold, "y_i > threshold counts as attacked");
  cmd_report->add_option("-o,--out", report_prefix, "output prefix; writes <prefix>_attack.csv, <prefix>_histogram.csv, <prefix>_degree.csv")
      ->required();

  auto* cmd_psne = app.add_subcommand("psne", "exhaustive pure-equilibrium search");
  cmd_psne->add_option("game", game_path, "game JSON")->required();
  cmd_psne->add_option("-o,--out", out_path, "output JSON (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_stats->parsed()) {
      auto r = idd::load_edge_list_file(graph_path);
      write_output(idd::io::stats_to_json(idd::graph_stats(r.graph, diameter_cap)), out_path);
      return kExitOk;
    }
    if (cmd_synth->parsed()) {
      idd::DirectedGraph g;
      if (synth_kind == "erdos_renyi_directed")
        g = idd::gen::erdos_renyi_directed(synth_n, synth_p, seed);
      else if (synth_kind == "preferential_attachment")
        g = idd::gen::preferential_attachment(synth_n, synth_m, seed);
      else {
        std::cerr << "unknown graph kind: " << synth_kind << '\n';
        return kExitUsage;
      }
      std::vector<std::string> ids(g.node_count());
      for (int i = 0; i < g.node_count(); ++i) ids[i] = std::to_string(i);
      std::ostringstream os;
      idd::write_edge_list(g, ids, os);
      write_text(os.str(), out_path);
      return kExitOk;
    }
    if (cmd_gen->parsed()) {
      auto graph = load_graph(graph_path);
      auto spec = idd::io::generator_spec_from_json(read_json_file(spec_path));
      if (cmd_gen->count("--seed")) spec.seed = seed;
      auto game = idd::gen::generate(graph, spec);
      auto report = idd::validate(game);
      if (!report.ok()) {
        std::cerr << "generated game fails validation\n"
                  << idd::io::validation_to_json(report).dump(2) << '\n';
        return kExitValidation;
      }
      json j = idd::io::game_to_json(game);
      j["provenance"] = idd::io::make_provenance(graph, spec);
      write_output(j, out_path);
      return kExitOk;
    }
    if (cmd_validate->parsed()) {
      auto game = idd::io::game_from_json(read_json_file(game_path));
      auto report = idd::validate(game);
      write_output(idd::io::validation_to_json(report), out_path);
      return report.ok() ? kExitOk : kExitValidation;
    }
    if (cmd_solve->parsed()) {
      auto game = idd::io::game_from_json(read_json_file(game_path));
      try {
        auto set = idd::exact::solve_all(game);
        write_output(idd::io::eqset_to_json(set), out_path);
      } catch (const idd::exact::NotTransferVulnerable& e) {
        std::cerr << "NotTransferVulnerable: " << e.what() << '\n';
        return kExitValidation;
      } catch (const idd::exact::AssumptionViolated& e) {
        std::cerr << "AssumptionViolated: " << e.what() << '\n';
        return kExitValidation;
      }
      return kExitOk;
    }
    if (cmd_brgd->parsed()) {
      auto game = idd::io::game_from_json(read_json_file(game_path));
      idd::brgd::BrgdConfig cfg;
      cfg.epsilon = eps;
      cfg.max_iterations = max_iter;
      cfg.step_size = eta;
      cfg.seed = seed;
      cfg.mode = mode == "absolute" ? idd::RegretMode::Absolute : idd::RegretMode::PerPlayerRange;
      auto result = idd::brgd::run(game, cfg);
      write_output(idd::io::brgd_result_to_json(cfg, result), out_path);
      return kExitOk;
    }
    if (cmd_verify->parsed()) {
      auto game = idd::io::game_from_json(read_json_file(game_path));
      auto [x, y] = idd::io::strategies_from_json(read_json_file(strategies_path));
      json j;
      j["regret"] = idd::io::regret_to_json(idd::regret(game, x, y));
      bool enum_feasible = true;
      for (int i = 0; i < game.n(); ++i)
        if (game.graph.parents(i).size() > 20) enum_feasible = false;
      if (enum_feasible && game.n() <= 64)
        j["oracle"] = idd::io::msne_report_to_json(idd::oracle::verify_msne(game, x, y, tol));
      else
        j["oracle"] = nullptr;  // enumeration infeasible at this size
      write_output(j, out_path);
      return kExitOk;
    }
    if (cmd_sample->parsed()) {
      auto set = idd::io::eqset_from_json(read_json_file(eqset_path));
      auto sel = cmd_sample->count("--seed") && !centroid
                     ? idd::exact::Selector::random(seed)
                     : idd::exact::Selector::centroid();
      auto [x, y] = idd::exact::sample(set, sel);
      write_output(idd::io::strategies_to_json(x, y), out_path);
      return kExitOk;
    }
    if (cmd_sweep->parsed()) {
      auto graph = load_graph(graph_path);
      auto spec = idd::io::generator_spec_from_json(read_json_file(spec_path));
      idd::brgd::BrgdConfig cfg;
      cfg.max_iterations = max_iter;
      cfg.step_size = eta;
      cfg.seed = seed;
      auto result = idd::analysis::sweep(graph, spec, eps_list, seeds_per_eps, cfg);
      std::ostringstream csv;
      csv << "epsilon,seed,converged,iterations,wall_ms\n";
      for (const auto& row : result.rows)
        csv << row.epsilon << ',' << row.seed << ',' << (row.converged ? 1 : 0) << ','
            << row.iterations << ',' << row.wall_ms << '\n';
      write_text(csv.str(), out_path);
      if (!fit_out.empty()) write_output(idd::io::sweep_fit_to_json(result), fit_out);
      return kExitOk;
    }
    if (cmd_report->parsed()) {
      auto game = idd::io::game_from_json(read_json_file(game_path));
      auto [x, y] = idd::io::strategies_from_json(read_json_file(strategies_path));
      auto rep = idd::analysis::report_equilibrium(game, x, y, threshold);
      {
        std::ostringstream csv;
        csv << "rank,node_id,y\n";
        for (std::size_t r = 0; r < rep.attack_profile.size(); ++r)
          csv << r + 1 << ',' << game.ids[rep.attack_profile[r].first] << ','
              << rep.attack_profile[r].second << '\n';
        write_text(csv.str(), report_prefix + "_attack.csv");
      }
      {
        std::ostringstream csv;
        csv << "bin_low,bin_high,count\n";
        for (int b = 0; b < 10; ++b)
          csv << b / 10.0 << ',' << (b + 1) / 10.0 << ',' << rep.invest_histogram[b] << '\n';
        write_text(csv.str(), report_prefix + "_histogram.csv");
      }
      {
        std::ostringstream csv;
        csv << "threshold,n_attacked,avg_indeg,avg_outdeg\n";
        csv << rep.threshold << ',' << rep.n_attacked << ',' << rep.avg_indegree_attacked << ','
            << rep.avg_outdegree_attacked << '\n';
        write_text(csv.str(), report_prefix + "_degree.csv");
      }
      std::cerr << "support=" << rep.support_size << " y0=" << rep.y0 << '\n';
      return kExitOk;
    }
    if (cmd_psne->parsed()) {
      auto game = idd::io::game_from_json(read_json_file(game_path));
      auto found = idd::oracle::psne_search(game);
      json j;
      if (found) {
        j["found"] = true;
        j["a"] = found->first;
        j["target"] = found->second.target;
      } else {
        j["found"] = false;
      }
      write_output(j, out_path);
      return kExitOk;
    }
  } catch (const idd::oracle::SizeCapExceeded& e) {
    std::cerr << "size cap exceeded: " << e.what() << '\n';
    return kExitSizeCap;
  } catch (const idd::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
