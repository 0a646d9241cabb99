#pragma once

#include <cstdint>
#include <optional>

#include "idd/model.hpp"

namespace idd {
namespace gen {

// Homogeneous / uniform-transfer instances bypass the table: every node
// shares the same constants and q̂_ij = transfer per source.
struct HomogeneousParams {
  double invest_cost = 1.0;
  double loss = 10.0;
  double direct_success = 0.25;
  double attack_cost = 1.0;
  double transfer = 0.1;  // δ
  double unblocked_transfer = 1.0;
};

struct GeneratorSpec {
  enum class Mode { Fixed, Random } mode = Mode::Fixed;  // Fixed: U = 0.5
  std::uint64_t seed = 0;
  // Table constants, overridable.
  double alpha_scale = 1.0 / 20.0;   // α = U * alpha_scale
  double loss_base = 1e8, loss_scale = 1e9;
  double invest_base = 1e5, invest_scale = 1e6;
  double z_base = 0.2, z_scale = 0.2;       // z = z_base + U * z_scale
  double ptilde_base = 0.8, ptilde_scale = 0.1;
  double attack_cost = 1e6;                 // C^0, constant across nodes
  double risk_budget = 0.9;                 // enforced p̂ + Σ q̂ per node
  std::optional<HomogeneousParams> homogeneous;
};

// Applies the parameter table over the graph. Random mode draws one
// independent U per (node, parameter); draws are ordered by node index then
// table row, so output is a pure function of (graph, spec).
DefenseGame generate(const DirectedGraph& graph, const GeneratorSpec& spec);

DirectedGraph erdos_renyi_directed(int n, double p, std::uint64_t seed);

// Each new node attaches m out-edges to earlier nodes picked proportional to
// total degree (plus one uniform smoothing count), yielding a heavy-tailed
// in-degree profile with most nodes at zero in-degree.
DirectedGraph preferential_attachment(int n, int m, std::uint64_t seed);

}  // namespace gen
}  // namespace idd
