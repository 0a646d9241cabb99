#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "idd/payoff.hpp"

namespace idd {
namespace exact {

struct NotTransferVulnerable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AssumptionViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class EqCase { BelowOne, EqualOne, AboveOne };

// Complete description of the MSNE set of a single-attack transfer-vulnerable
// game. BelowOne is a single point; EqualOne is a one-parameter family in v;
// AboveOne fixes everything except the y-coordinates of the tied minimal-gain
// group, which range over a box-constrained simplex slice.
struct EquilibriumSet {
  EqCase tag = EqCase::BelowOne;
  int n = 0;
  double y0 = 0;
  // NaN marks a coordinate the case leaves free (x in EqualOne, y over the
  // tied group in AboveOne).
  std::vector<double> x_fixed;
  std::vector<double> y_fixed;

  // Per-node data needed to materialize family members without the game.
  std::vector<double> attack_cost;  // C_i^0
  std::vector<double> base_loss;    // L̄_i^0

  // EqualOne: x_i(v) = 1 - (v + C_i^0)/L̄_i^0 for v in [v_min, v_max].
  double v_min = 0, v_max = 0;

  // AboveOne.
  std::vector<int> support;       // I, sorted
  std::vector<int> tied_group;    // J ⊆ I, sorted
  std::vector<double> tied_upper; // Δ̂_i for i ∈ J
  double tied_sum = 0;            // required Σ_{i∈J} y_i
  double support_value = 0;       // Val(t) = min_{i∈I} M̄_i^0

  bool unique = false;
};

// Computes the full MSNE set (three-case characterization, sort-based
// algorithm for the Σ Δ̂ > 1 case). Throws NotTransferVulnerable when some
// α_i != 1 and AssumptionViolated when validate() reports violations.
EquilibriumSet solve_all(const DefenseGame& game);

// Selector for one point of the set. EqualOne uses v (clamped check, error if
// out of range); AboveOne distributes tied_sum over the tied group from the
// given nonnegative weights (proportional to Δ̂ when absent), with overflow
// past a node's Δ̂ bound redistributed.
struct Selector {
  std::optional<double> v;
  std::optional<std::vector<double>> weights;
  static Selector centroid() { return {}; }
  static Selector family(double v) { return {v, std::nullopt}; }
  static Selector random(std::uint64_t seed);  // materialized per-set at sample time
  std::optional<std::uint64_t> seed;
};

std::pair<DefenderMixedProfile, AttackerMixedStrategy> sample(const EquilibriumSet& set,
                                                              const Selector& sel = {});

// Vertices of the AboveOne tied-group polytope: greedy fill of the Δ̂ bounds
// starting at rotation r. For other cases returns the unique point / v range
// endpoint selected by r % 2.
std::pair<DefenderMixedProfile, AttackerMixedStrategy> sample_vertex(const EquilibriumSet& set,
                                                                     int rotation);

// L∞ distance from (x, y, y0) to the set.
double distance(const EquilibriumSet& set, const DefenderMixedProfile& x,
                const AttackerMixedStrategy& y);

bool contains(const EquilibriumSet& set, const DefenderMixedProfile& x,
              const AttackerMixedStrategy& y, double tol);

bool is_unique(const EquilibriumSet& set);

}  // namespace exact
}  // namespace idd
