#include "idd/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

namespace idd {
namespace io {

json game_to_json(const DefenseGame& game) {
  json nodes = json::array();
  for (int i = 0; i < game.n(); ++i) {
    const auto& p = game.nodes[i];
    nodes.push_back({{"id", game.ids[i]},
                     {"C", p.invest_cost},
                     {"L", p.loss},
                     {"p_hat", p.direct_success},
                     {"alpha", p.unblocked_transfer},
                     {"C0", p.attack_cost}});
  }
  json edges = json::array();
  for (int i = 0; i < game.n(); ++i) {
    const auto& ch = game.graph.children(i);
    for (std::size_t k = 0; k < ch.size(); ++k)
      edges.push_back({{"src", i}, {"dst", ch[k]}, {"q_hat", game.transfer_out[i][k]}});
  }
  return {{"nodes", nodes}, {"edges", edges}};
}

DefenseGame game_from_json(const json& j) {
  const auto& jnodes = j.at("nodes");
  const int n = static_cast<int>(jnodes.size());
  std::vector<NodeParams> nodes(n);
  std::vector<std::string> ids(n);
  for (int i = 0; i < n; ++i) {
    const auto& jn = jnodes.at(i);
    ids[i] = jn.contains("id") ? jn.at("id").get<std::string>() : std::to_string(i);
    nodes[i].invest_cost = jn.at("C").get<double>();
    nodes[i].loss = jn.at("L").get<double>();
    nodes[i].direct_success = jn.at("p_hat").get<double>();
    nodes[i].unblocked_transfer = jn.at("alpha").get<double>();
    nodes[i].attack_cost = jn.at("C0").get<double>();
  }
  std::vector<std::tuple<int, int, double>> raw;
  for (const auto& je : j.at("edges"))
    raw.emplace_back(je.at("src").get<int>(), je.at("dst").get<int>(), je.at("q_hat").get<double>());
  std::sort(raw.begin(), raw.end());
  std::vector<std::pair<int, int>> edges;
  std::vector<double> q;
  for (auto& [s, d, qv] : raw) {
    edges.emplace_back(s, d);
    q.push_back(qv);
  }
  return make_game(DirectedGraph(n, edges), std::move(nodes), q, std::move(ids));
}

json strategies_to_json(const DefenderMixedProfile& x, const AttackerMixedStrategy& y) {
  return {{"x", x}, {"y", y.y}};
}

std::pair<DefenderMixedProfile, AttackerMixedStrategy> strategies_from_json(const json& j) {
  AttackerMixedStrategy y;
  y.y = j.at("y").get<std::vector<double>>();
  return {j.at("x").get<std::vector<double>>(), std::move(y)};
}

json stats_to_json(const GraphStats& s) {
  json j = {{"nodes", s.nodes},
            {"edges", s.edges},
            {"isolated_nodes", s.isolated_nodes},
            {"density", s.density},
            {"avg_total_degree", s.avg_total_degree},
            {"frac_zero_indegree", s.frac_zero_indegree},
            {"frac_zero_outdegree", s.frac_zero_outdegree}};
  j["diameter"] = s.diameter ? json(*s.diameter) : json(nullptr);
  return j;
}

namespace {
const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Range: return "range";
    case Rule::RiskBudget: return "risk-budget";
    case Rule::A2: return "A2";
    case Rule::A3: return "A3";
  }
  return "?";
}
}  // namespace

json validation_to_json(const ValidationReport& r) {
  json v = json::array();
  for (const auto& viol : r.violations) {
    json jv = {{"rule", rule_name(viol.rule)},
               {"node", viol.node},
               {"observed", viol.observed},
               {"bound", viol.bound},
               {"detail", viol.detail}};
    if (viol.peer >= 0) jv["peer"] = viol.peer;
    v.push_back(jv);
  }
  return {{"ok", r.ok()}, {"violations", v}};
}

json regret_to_json(const RegretReport& r) {
  return {{"mode", r.mode == RegretMode::PerPlayerRange ? "per-player-range" : "absolute"},
          {"eps", r.epsilon},
          {"defender", r.defender},
          {"attacker", r.attacker}};
}

namespace {
const char* case_name(exact::EqCase c) {
  switch (c) {
    case exact::EqCase::BelowOne: return "BELOW_ONE";
    case exact::EqCase::EqualOne: return "EQUAL_ONE";
    case exact::EqCase::AboveOne: return "ABOVE_ONE";
  }
  return "?";
}
}  // namespace

json eqset_to_json(const exact::EquilibriumSet& set) {
  json fixed = json::array();
  for (int i = 0; i < set.n; ++i) {
    json row = {{"i", i}};
    if (!std::isnan(set.x_fixed[i])) row["x"] = set.x_fixed[i];
    if (!std::isnan(set.y_fixed[i])) row["y"] = set.y_fixed[i];
    fixed.push_back(row);
  }
  json j = {{"case", case_name(set.tag)},
            {"n", set.n},
            {"y0", set.y0},
            {"fixed", fixed},
            {"unique", set.unique},
            {"attack_cost", set.attack_cost},
            {"base_loss", set.base_loss}};
  if (set.tag == exact::EqCase::EqualOne)
    j["family"] = {{"v_min", set.v_min}, {"v_max", set.v_max}};
  else
    j["family"] = nullptr;
  if (set.tag == exact::EqCase::AboveOne) {
    j["simplex"] = {{"indices", set.tied_group},
                    {"upper_bounds", set.tied_upper},
                    {"sum", set.tied_sum}};
    j["support"] = set.support;
    j["value"] = set.support_value;
  } else {
    j["simplex"] = nullptr;
  }
  return j;
}

exact::EquilibriumSet eqset_from_json(const json& j) {
  exact::EquilibriumSet set;
  std::string c = j.at("case").get<std::string>();
  set.tag = c == "BELOW_ONE"   ? exact::EqCase::BelowOne
            : c == "EQUAL_ONE" ? exact::EqCase::EqualOne
                               : exact::EqCase::AboveOne;
  set.n = j.at("n").get<int>();
  set.y0 = j.at("y0").get<double>();
  set.unique = j.at("unique").get<bool>();
  set.attack_cost = j.at("attack_cost").get<std::vector<double>>();
  set.base_loss = j.at("base_loss").get<std::vector<double>>();
  set.x_fixed.assign(set.n, std::numeric_limits<double>::quiet_NaN());
  set.y_fixed.assign(set.n, std::numeric_limits<double>::quiet_NaN());
  for (const auto& row : j.at("fixed")) {
    int i = row.at("i").get<int>();
    if (row.contains("x")) set.x_fixed[i] = row.at("x").get<double>();
    if (row.contains("y")) set.y_fixed[i] = row.at("y").get<double>();
  }
  if (!j.at("family").is_null()) {
    set.v_min = j.at("family").at("v_min").get<double>();
    set.v_max = j.at("family").at("v_max").get<double>();
  }
  if (!j.at("simplex").is_null()) {
    set.tied_group = j.at("simplex").at("indices").get<std::vector<int>>();
    set.tied_upper = j.at("simplex").at("upper_bounds").get<std::vector<double>>();
    set.tied_sum = j.at("simplex").at("sum").get<double>();
    if (j.contains("support")) set.support = j.at("support").get<std::vector<int>>();
    if (j.contains("value")) set.support_value = j.at("value").get<double>();
  }
  return set;
}

json brgd_result_to_json(const brgd::BrgdConfig& config, const brgd::BrgdResult& result) {
  json trace = json::array();
  for (auto [it, eps] : result.trace) trace.push_back({{"iteration", it}, {"epsilon", eps}});
  json j = {{"config",
             {{"epsilon", config.epsilon},
              {"max_iterations", config.max_iterations},
              {"step_size", config.step_size},
              {"mode", config.mode == RegretMode::PerPlayerRange ? "per-player-range" : "absolute"},
              {"seed", config.seed}}},
            {"converged", result.converged},
            {"iterations", result.iterations},
            {"final", strategies_to_json(result.x, result.y)},
            {"final_regret", regret_to_json(result.final_regret)},
            {"trace", trace}};
  return j;
}

json msne_report_to_json(const oracle::MsneReport& r) {
  json v = json::array();
  for (const auto& viol : r.violations)
    v.push_back({{"who", viol.who}, {"what", viol.what}, {"amount", viol.amount}});
  return {{"ok", r.ok}, {"violations", v}};
}

json generator_spec_to_json(const gen::GeneratorSpec& spec) {
  json j = {{"mode", spec.mode == gen::GeneratorSpec::Mode::Fixed ? "fixed" : "random"},
            {"seed", spec.seed},
            {"alpha_scale", spec.alpha_scale},
            {"loss_base", spec.loss_base},
            {"loss_scale", spec.loss_scale},
            {"invest_base", spec.invest_base},
            {"invest_scale", spec.invest_scale},
            {"z_base", spec.z_base},
            {"z_scale", spec.z_scale},
            {"ptilde_base", spec.ptilde_base},
            {"ptilde_scale", spec.ptilde_scale},
            {"attack_cost", spec.attack_cost},
            {"risk_budget", spec.risk_budget}};
  if (spec.homogeneous) {
    const auto& h = *spec.homogeneous;
    j["homogeneous"] = {{"C", h.invest_cost},       {"L", h.loss},
                        {"p_hat", h.direct_success}, {"C0", h.attack_cost},
                        {"delta", h.transfer},       {"alpha", h.unblocked_transfer}};
  }
  return j;
}

gen::GeneratorSpec generator_spec_from_json(const json& j) {
  gen::GeneratorSpec spec;
  if (j.contains("mode"))
    spec.mode = j.at("mode").get<std::string>() == "random" ? gen::GeneratorSpec::Mode::Random
                                                            : gen::GeneratorSpec::Mode::Fixed;
  auto opt = [&](const char* key, double& out) {
    if (j.contains(key)) out = j.at(key).get<double>();
  };
  if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
  opt("alpha_scale", spec.alpha_scale);
  opt("loss_base", spec.loss_base);
  opt("loss_scale", spec.loss_scale);
  opt("invest_base", spec.invest_base);
  opt("invest_scale", spec.invest_scale);
  opt("z_base", spec.z_base);
  opt("z_scale", spec.z_scale);
  opt("ptilde_base", spec.ptilde_base);
  opt("ptilde_scale", spec.ptilde_scale);
  opt("attack_cost", spec.attack_cost);
  opt("risk_budget", spec.risk_budget);
  if (j.contains("homogeneous") && !j.at("homogeneous").is_null()) {
    const auto& jh = j.at("homogeneous");
    gen::HomogeneousParams h;
    h.invest_cost = jh.at("C").get<double>();
    h.loss = jh.at("L").get<double>();
    h.direct_success = jh.at("p_hat").get<double>();
    h.attack_cost = jh.at("C0").get<double>();
    h.transfer = jh.at("delta").get<double>();
    if (jh.contains("alpha")) h.unblocked_transfer = jh.at("alpha").get<double>();
    spec.homogeneous = h;
  }
  return spec;
}

json sweep_fit_to_json(const analysis::SweepResult& r) {
  if (!r.fit) return nullptr;
  return {{"a", r.fit->coefficient}, {"b", r.fit->exponent}, {"r2", r.fit->r_squared}};
}

json make_provenance(const DirectedGraph& graph, const gen::GeneratorSpec& spec) {
  return {{"spec", generator_spec_to_json(spec)},
          {"seed", spec.seed},
          {"graph_fingerprint",
           {{"edges", graph.edge_count()}, {"hash", graph_fingerprint(graph)}}}};
}

}  // namespace io
}  // namespace idd
