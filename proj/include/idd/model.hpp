#pragma once

#include <string>
#include <vector>

#include "idd/graph.hpp"

namespace idd {

struct NodeParams {
  double invest_cost = 0;        // C_i
  double loss = 0;               // L_i
  double direct_success = 0;     // p̂_i: attack succeeds given targeted, uninvested
  double unblocked_transfer = 1; // α_i: transfer passes i's protection
  double attack_cost = 0;        // C_i^0: attacker's cost to target i
};

// An interdependent-defense game instance: graph topology plus per-node
// economics and per-edge transfer probabilities. Immutable once built.
struct DefenseGame {
  DirectedGraph graph;
  std::vector<NodeParams> nodes;
  // transfer_out[i][k] is q̂_{i,children(i)[k]}; transfer_in mirrors it over
  // parents(i) so q̂_{ji} lookups are O(deg).
  std::vector<std::vector<double>> transfer_out;
  std::vector<std::vector<double>> transfer_in;
  std::vector<std::string> ids;  // optional labels; defaults to indices

  int n() const { return graph.node_count(); }
};

// Builds the in/out transfer tables from an edge->q map aligned with
// graph.edges() order and fills default ids.
DefenseGame make_game(DirectedGraph graph, std::vector<NodeParams> nodes,
                      const std::vector<double>& edge_transfer,
                      std::vector<std::string> ids = {});

struct DerivedQuantities {
  std::vector<double> cost_to_loss;   // ρ_i = C_i / L_i
  std::vector<double> invest_threshold;  // Δ̂_i = C_i / (L_i p̂_i)
  std::vector<double> base_loss;      // L̄_i^0 = p̂_i L_i + Σ_{j∈Ch(i)} q̂_ij L_j
  std::vector<double> base_gain;      // M̄_i^0 = L̄_i^0 − C_i^0
  std::vector<double> attack_ratio;   // η_i^0 = C_i^0 / L̄_i^0
  double sum_threshold = 0;           // Σ_i Δ̂_i
};

DerivedQuantities derived(const DefenseGame& game);

enum class Rule { Range, RiskBudget, A2, A3 };

struct Violation {
  Rule rule;
  int node = -1;  // node index; for edge rules, the edge source
  int peer = -1;  // edge destination, when applicable
  double observed = 0;
  double bound = 0;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks parameter ranges, the risk budget p̂_i + Σ q̂_ij ≤ 1 (slack 1e-12
// for generator round-off), Assumption 2 (0 < C_i < p̂_i L_i) and
// Assumption 3 (0 < C_i^0 < p̂_i L_i + Σ q̂_ij α_j L_j). Never throws.
ValidationReport validate(const DefenseGame& game);

// True iff α_i = 1 exactly for every node (Assumption 4).
bool is_transfer_vulnerable(const DefenseGame& game);

}  // namespace idd
