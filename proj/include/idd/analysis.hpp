#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "idd/brgd.hpp"
#include "idd/gen.hpp"

namespace idd {
namespace analysis {

struct PowerLawFit {
  double coefficient = 0;  // a in N ≈ a ε^b
  double exponent = 0;     // b
  double r_squared = 0;    // coefficient of determination in log-log space
};

// Least squares on (log ε, log N). Throws std::invalid_argument on fewer than
// two points or a nonpositive coordinate.
PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points);

struct SweepRow {
  double epsilon = 0;
  std::uint64_t seed = 0;
  bool converged = false;
  int iterations = 0;
  double wall_ms = 0;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // sorted by (epsilon, seed)
  std::optional<PowerLawFit> fit;  // present when >= 3 distinct ε converged
};

// Runs brgd::run per (ε, seed) on a game generated from (graph, spec); the
// instance is regenerated per ε with seed spec.seed + ε index, mirroring a
// fresh random instance per ε value. Runs fan out over a worker pool.
SweepResult sweep(const DirectedGraph& graph, const gen::GeneratorSpec& spec,
                  const std::vector<double>& epsilons, int seeds_per_epsilon,
                  const brgd::BrgdConfig& base_config, int workers = 0);

struct EquilibriumReport {
  std::vector<std::pair<int, double>> attack_profile;  // (node, y_i), y desc
  std::vector<std::size_t> invest_histogram;  // 10 bins: [0,.1],(.1,.2],...,(.9,1]
  std::size_t support_size = 0;
  double y0 = 0;
  double threshold = 0;
  std::size_t n_attacked = 0;  // nodes with y_i > threshold
  double avg_indegree_attacked = 0;
  double avg_outdegree_attacked = 0;
};

EquilibriumReport report_equilibrium(const DefenseGame& game, const DefenderMixedProfile& x,
                                     const AttackerMixedStrategy& y, double threshold = 1e-6);

}  // namespace analysis
}  // namespace idd
