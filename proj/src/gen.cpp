#include "idd/gen.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <unordered_set>

#include "idd/rng.hpp"

namespace idd {
namespace gen {

DefenseGame generate(const DirectedGraph& graph, const GeneratorSpec& spec) {
  const int n = graph.node_count();
  std::vector<NodeParams> nodes(n);
  std::vector<double> edge_transfer;
  edge_transfer.reserve(graph.edge_count());

  if (spec.homogeneous) {
    const auto& h = *spec.homogeneous;
    for (int i = 0; i < n; ++i) {
      nodes[i].invest_cost = h.invest_cost;
      nodes[i].loss = h.loss;
      nodes[i].direct_success = h.direct_success;
      nodes[i].attack_cost = h.attack_cost;
      nodes[i].unblocked_transfer = h.unblocked_transfer;
    }
    for (int i = 0; i < n; ++i)
      for (std::size_t k = 0; k < graph.children(i).size(); ++k)
        edge_transfer.push_back(h.transfer);
    return make_game(graph, std::move(nodes), edge_transfer);
  }

  CounterRng rng(spec.seed);
  auto draw = [&] { return spec.mode == GeneratorSpec::Mode::Fixed ? 0.5 : rng.uniform(); };

  std::vector<double> z(n), ptilde(n);
  for (int i = 0; i < n; ++i) {
    nodes[i].unblocked_transfer = draw() * spec.alpha_scale;
    nodes[i].loss = spec.loss_base + spec.loss_scale * draw();
    nodes[i].invest_cost = spec.invest_base + spec.invest_scale * draw();
    z[i] = spec.z_base + spec.z_scale * draw();
    ptilde[i] = spec.ptilde_base + spec.ptilde_scale * draw();
    nodes[i].attack_cost = spec.attack_cost;
  }

  auto total_degree = [&](int j) {
    return static_cast<double>(graph.children(j).size() + graph.parents(j).size());
  };
  for (int i = 0; i < n; ++i) {
    const auto& ch = graph.children(i);
    double denom_deg = 0;
    for (int k : ch) denom_deg += total_degree(k);
    // Each child carries at least the edge from i, so denom_deg >= |Ch(i)|.
    assert(ch.empty() || denom_deg >= static_cast<double>(ch.size()));
    double qtilde_sum = ch.empty() ? 0.0 : z[i];
    double scale = spec.risk_budget / (ptilde[i] + qtilde_sum);
    nodes[i].direct_success = scale * ptilde[i];
    for (int k : ch) edge_transfer.push_back(scale * z[i] * total_degree(k) / denom_deg);
  }
  return make_game(graph, std::move(nodes), edge_transfer);
}

DirectedGraph erdos_renyi_directed(int n, double p, std::uint64_t seed) {
  if (n < 0 || p < 0 || p > 1) throw std::invalid_argument("invalid Erdos-Renyi parameters");
  CounterRng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (rng.uniform() < p) edges.emplace_back(i, j);
    }
  return DirectedGraph(n, edges);
}

DirectedGraph preferential_attachment(int n, int m, std::uint64_t seed) {
  if (n < 0 || m < 1) throw std::invalid_argument("invalid preferential-attachment parameters");
  CounterRng rng(seed);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> endpoints;  // degree-weighted urn
  for (int u = 1; u < n; ++u) {
    int quota = std::min(m, u);
    std::unordered_set<int> picked;
    int attempts = 0;
    while (static_cast<int>(picked.size()) < quota && attempts < 50 * quota) {
      ++attempts;
      std::uint64_t r = rng.below(endpoints.size() + static_cast<std::size_t>(u));
      int target = r < endpoints.size() ? endpoints[r]
                                        : static_cast<int>(r - endpoints.size());
      picked.insert(target);
    }
    std::vector<int> targets(picked.begin(), picked.end());
    std::sort(targets.begin(), targets.end());  // keep the urn order reproducible
    for (int target : targets) {
      edges.emplace_back(u, target);
      endpoints.push_back(u);
      endpoints.push_back(target);
    }
  }
  return DirectedGraph(n, edges);
}

}  // namespace gen
}  // namespace idd
