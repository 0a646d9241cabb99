#pragma once

// Shared instance builders for unit and acceptance tests.

#include <cmath>
#include <utility>
#include <vector>

#include "idd/gen.hpp"
#include "idd/payoff.hpp"
#include "idd/model.hpp"
#include "idd/rng.hpp"

namespace idd_test {

// Two defenders, mutual transfer edges. C=1, L=10, p̂=0.5, q̂=0.1, C^0=3,
// α=1. Σ Δ̂ = 0.4 < 1; unique MSNE x* = (0.5, 0.5), y* = (0.2, 0.2).
inline idd::DefenseGame two_node_below() {
  idd::DirectedGraph g(2, {{0, 1}, {1, 0}});
  std::vector<idd::NodeParams> nodes(2);
  for (auto& p : nodes) {
    p.invest_cost = 1;
    p.loss = 10;
    p.direct_success = 0.5;
    p.unblocked_transfer = 1;
    p.attack_cost = 3;
  }
  return idd::make_game(std::move(g), std::move(nodes), {0.1, 0.1});
}

// Ring 0→1→2→0, C=1, L=10, p̂=0.25, q̂=0.2, α=1, C^0 = (0.5, 1.0, 1.5).
// Σ Δ̂ = 1.2 > 1; M̄^0 = (4.0, 3.5, 3.0); unique MSNE x* = (2/9, 1/9, 0),
// y* = (0.4, 0.4, 0.2).
inline idd::DefenseGame three_node_ring() {
  idd::DirectedGraph g(3, {{0, 1}, {1, 2}, {2, 0}});
  std::vector<idd::NodeParams> nodes(3);
  for (int i = 0; i < 3; ++i) {
    nodes[i].invest_cost = 1;
    nodes[i].loss = 10;
    nodes[i].direct_success = 0.25;
    nodes[i].unblocked_transfer = 1;
    nodes[i].attack_cost = 0.5 * (i + 1);
  }
  return idd::make_game(std::move(g), std::move(nodes), {0.2, 0.2, 0.2});
}

// Two defenders with Δ̂ = 0.5 each: C=2.5, L=10, p̂=0.5, q̂=0.1, C^0=3.
// Σ Δ̂ = 1 exactly; L̄^0 = 6, M̄^0 = 3, so the equilibrium family is
// x_i(v) = 1 − (v+3)/6 for v ∈ [0, 3], with y* = (0.5, 0.5).
inline idd::DefenseGame two_node_equal() {
  idd::DirectedGraph g(2, {{0, 1}, {1, 0}});
  std::vector<idd::NodeParams> nodes(2);
  for (auto& p : nodes) {
    p.invest_cost = 2.5;
    p.loss = 10;
    p.direct_success = 0.5;
    p.unblocked_transfer = 1;
    p.attack_cost = 3;
  }
  return idd::make_game(std::move(g), std::move(nodes), {0.1, 0.1});
}

// Random valid game: assumptions 1-3 hold; alpha mixed unless forced to 1.
inline idd::DefenseGame random_game(std::uint64_t seed, int n, bool transfer_vulnerable,
                                    double edge_prob = 0.5) {
  idd::CounterRng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && rng.uniform() < edge_prob) edges.emplace_back(i, j);
  idd::DirectedGraph g(n, edges);

  std::vector<idd::NodeParams> nodes(n);
  std::vector<double> q;
  for (int i = 0; i < n; ++i) {
    nodes[i].loss = rng.uniform(5.0, 50.0);
    nodes[i].direct_success = rng.uniform(0.3, 0.9);
    nodes[i].unblocked_transfer = transfer_vulnerable ? 1.0 : rng.uniform();
    nodes[i].invest_cost =
        rng.uniform(0.05, 0.95) * nodes[i].direct_success * nodes[i].loss;  // A2
  }
  for (int i = 0; i < n; ++i) {
    const auto& ch = g.children(i);
    std::vector<double> raw(ch.size());
    double sum = 0;
    for (auto& v : raw) {
      v = rng.uniform(0.2, 1.0);
      sum += v;
    }
    double budget = 0.9 * (1.0 - nodes[i].direct_success);
    for (double v : raw) q.push_back(budget * v / sum);
  }
  auto game = idd::make_game(std::move(g), std::move(nodes), q);
  for (int i = 0; i < n; ++i) {
    double a3_bound = game.nodes[i].direct_success * game.nodes[i].loss;
    const auto& ch = game.graph.children(i);
    for (std::size_t k = 0; k < ch.size(); ++k)
      a3_bound += game.transfer_out[i][k] * game.nodes[ch[k]].unblocked_transfer *
                  game.nodes[ch[k]].loss;
    game.nodes[i].attack_cost = rng.uniform(0.05, 0.95) * a3_bound;
  }
  return game;
}

enum class ForcedCase { Below, Equal, Above };

// Transfer-vulnerable game with Σ Δ̂ pushed into the requested case by
// choosing C_i = Δ̂_i target · L_i p̂_i.
inline idd::DefenseGame random_tv_game(std::uint64_t seed, int n, ForcedCase fc,
                                       double edge_prob = 0.5) {
  auto game = random_game(seed, n, /*transfer_vulnerable=*/true, edge_prob);
  idd::CounterRng rng(seed ^ 0x5eedULL);
  std::vector<double> target(n);
  if (fc == ForcedCase::Below) {
    for (auto& t : target) t = rng.uniform(0.1, 0.9) * 0.9 / n;
  } else if (fc == ForcedCase::Above) {
    for (auto& t : target) t = rng.uniform(0.4, 0.9);  // n >= 2 ⇒ sum can exceed 1
    if (n >= 2) {
      double sum = 0;
      for (double t : target) sum += t;
      if (sum <= 1.0) target[0] = 0.95;  // nudge over the threshold
    }
  } else {
    double sum = 0;
    for (auto& t : target) {
      t = rng.uniform(0.2, 1.0);
      sum += t;
    }
    for (auto& t : target) t /= sum;
  }
  for (int i = 0; i < n; ++i)
    game.nodes[i].invest_cost = target[i] * game.nodes[i].loss * game.nodes[i].direct_success;
  return game;
}

inline std::pair<idd::DefenderMixedProfile, idd::AttackerMixedStrategy> random_strategies(
    std::uint64_t seed, int n) {
  idd::CounterRng rng(seed);
  idd::DefenderMixedProfile x(n);
  for (auto& v : x) v = rng.uniform();
  idd::AttackerMixedStrategy y;
  y.y.resize(n);
  double sum = 0;
  std::vector<double> e(n + 1);
  for (auto& v : e) {
    v = -std::log(1.0 - rng.uniform());
    sum += v;
  }
  for (int i = 0; i < n; ++i) y.y[i] = e[i + 1] / sum;
  return {std::move(x), std::move(y)};
}

}  // namespace idd_test
