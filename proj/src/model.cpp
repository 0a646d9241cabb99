#include "idd/model.hpp"

#include <cmath>
#include <stdexcept>

namespace idd {

DefenseGame make_game(DirectedGraph graph, std::vector<NodeParams> nodes,
                      const std::vector<double>& edge_transfer, std::vector<std::string> ids) {
  DefenseGame g;
  g.graph = std::move(graph);
  g.nodes = std::move(nodes);
  const int n = g.graph.node_count();
  if (static_cast<int>(g.nodes.size()) != n)
    throw std::invalid_argument("node parameter count mismatch");
  auto edges = g.graph.edges();
  if (edge_transfer.size() != edges.size())
    throw std::invalid_argument("edge transfer count mismatch");
  g.transfer_out.assign(n, {});
  g.transfer_in.assign(n, {});
  for (int i = 0; i < n; ++i) {
    g.transfer_out[i].resize(g.graph.children(i).size());
    g.transfer_in[i].resize(g.graph.parents(i).size());
  }
  // edges() is sorted by (src, dst), matching children() order per node.
  std::vector<std::size_t> out_pos(n, 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    int src = edges[e].first;
    g.transfer_out[src][out_pos[src]++] = edge_transfer[e];
  }
  for (int i = 0; i < n; ++i) {
    const auto& pa = g.graph.parents(i);
    for (std::size_t k = 0; k < pa.size(); ++k) {
      int j = pa[k];
      const auto& ch = g.graph.children(j);
      auto it = std::lower_bound(ch.begin(), ch.end(), i);
      g.transfer_in[i][k] = g.transfer_out[j][static_cast<std::size_t>(it - ch.begin())];
    }
  }
  if (ids.empty()) {
    g.ids.resize(n);
    for (int i = 0; i < n; ++i) g.ids[i] = std::to_string(i);
  } else {
    if (static_cast<int>(ids.size()) != n) throw std::invalid_argument("id count mismatch");
    g.ids = std::move(ids);
  }
  return g;
}

DerivedQuantities derived(const DefenseGame& game) {
  const int n = game.n();
  DerivedQuantities d;
  d.cost_to_loss.resize(n);
  d.invest_threshold.resize(n);
  d.base_loss.resize(n);
  d.base_gain.resize(n);
  d.attack_ratio.resize(n);
  for (int i = 0; i < n; ++i) {
    const auto& p = game.nodes[i];
    d.cost_to_loss[i] = p.invest_cost / p.loss;
    d.invest_threshold[i] = p.invest_cost / (p.loss * p.direct_success);
    double lbar = p.direct_success * p.loss;
    const auto& ch = game.graph.children(i);
    for (std::size_t k = 0; k < ch.size(); ++k)
      lbar += game.transfer_out[i][k] * game.nodes[ch[k]].loss;
    d.base_loss[i] = lbar;
    d.base_gain[i] = lbar - p.attack_cost;
    d.attack_ratio[i] = p.attack_cost / lbar;
    d.sum_threshold += d.invest_threshold[i];
  }
  return d;
}

ValidationReport validate(const DefenseGame& game) {
  ValidationReport r;
  auto flag = [&](Rule rule, int node, double observed, double bound, std::string detail,
                  int peer = -1) {
    r.violations.push_back({rule, node, peer, observed, bound, std::move(detail)});
  };
  const int n = game.n();
  for (int i = 0; i < n; ++i) {
    const auto& p = game.nodes[i];
    if (!(p.invest_cost > 0)) flag(Rule::Range, i, p.invest_cost, 0, "C must be > 0");
    if (!(p.loss > 0)) flag(Rule::Range, i, p.loss, 0, "L must be > 0");
    if (!(p.attack_cost > 0)) flag(Rule::Range, i, p.attack_cost, 0, "C0 must be > 0");
    if (!(p.direct_success > 0) || p.direct_success > 1)
      flag(Rule::Range, i, p.direct_success, 1, "p_hat must be in (0,1]");
    if (p.unblocked_transfer < 0 || p.unblocked_transfer > 1)
      flag(Rule::Range, i, p.unblocked_transfer, 1, "alpha must be in [0,1]");
    const auto& ch = game.graph.children(i);
    double qsum = 0;
    for (std::size_t k = 0; k < ch.size(); ++k) {
      double q = game.transfer_out[i][k];
      if (!(q > 0) || q > 1)
        flag(Rule::Range, i, q, 1, "q_hat must be in (0,1]", ch[k]);
      qsum += q;
    }
    // Risk budget; 1e-12 slack absorbs generator round-off.
    if (p.direct_success + qsum > 1.0 + 1e-12)
      flag(Rule::RiskBudget, i, p.direct_success + qsum, 1.0, "p_hat + sum q_hat exceeds 1");
    if (std::isfinite(p.invest_cost) && std::isfinite(p.loss) && std::isfinite(p.direct_success)) {
      double a2_bound = p.direct_success * p.loss;
      if (!(p.invest_cost > 0 && p.invest_cost < a2_bound))
        flag(Rule::A2, i, p.invest_cost, a2_bound, "Assumption 2: 0 < C < p_hat * L");
      double a3_bound = p.direct_success * p.loss;
      for (std::size_t k = 0; k < ch.size(); ++k)
        a3_bound += game.transfer_out[i][k] * game.nodes[ch[k]].unblocked_transfer *
                    game.nodes[ch[k]].loss;
      if (!(p.attack_cost > 0 && p.attack_cost < a3_bound))
        flag(Rule::A3, i, p.attack_cost, a3_bound,
             "Assumption 3: 0 < C0 < p_hat*L + sum q_hat*alpha*L");
    }
  }
  return r;
}

bool is_transfer_vulnerable(const DefenseGame& game) {
  for (const auto& p : game.nodes)
    if (p.unblocked_transfer != 1.0) return false;
  return true;
}

}  // namespace idd
