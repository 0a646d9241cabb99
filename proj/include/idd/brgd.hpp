#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "idd/payoff.hpp"

namespace idd {
namespace brgd {

struct BrgdConfig {
  double epsilon = 1e-3;       // target normalized regret
  int max_iterations = 2000;
  // Step η ∈ (0,1] for step(); run() uses a regret-matching update with no
  // tunable step, so this only affects callers driving step() directly.
  double step_size = 0.1;
  RegretMode mode = RegretMode::PerPlayerRange;
  std::uint64_t seed = 0;
  std::optional<int> snapshot_every;
  std::optional<std::pair<DefenderMixedProfile, AttackerMixedStrategy>> init;
};

struct Snapshot {
  int iteration = 0;
  DefenderMixedProfile x;
  AttackerMixedStrategy y;
};

struct BrgdResult {
  bool converged = false;
  int iterations = 0;
  DefenderMixedProfile x;
  AttackerMixedStrategy y;
  RegretReport final_regret;
  std::vector<std::pair<int, double>> trace;  // (iteration, epsilon)
  std::vector<Snapshot> snapshots;
};

// x_i ~ Uniform[0,1] i.i.d.; (y_0, y_1..y_n) uniform on the (n+1)-simplex.
std::pair<DefenderMixedProfile, AttackerMixedStrategy> init_random(std::uint64_t seed, int n);

// One synchronous update: each defender moves x_i by η toward a best response
// (retaining x_i when indifferent); the attacker moves y by η toward the
// uniform mixture over its best-response targets, retaining y when it is
// already a best response. Iterates stay exactly in the box/simplex.
std::pair<DefenderMixedProfile, AttackerMixedStrategy> step(const DefenseGame& game,
                                                            const DefenderMixedProfile& x,
                                                            const AttackerMixedStrategy& y,
                                                            double eta);

// Runs predictive regret matching from init until the weighted-average
// profile reaches config.epsilon normalized regret or max_iterations.
// Deterministic given the seed; final (x, y) is the averaged profile and
// re-running regret() on it reproduces final_regret exactly.
BrgdResult run(const DefenseGame& game, const BrgdConfig& config);

}  // namespace brgd
}  // namespace idd
