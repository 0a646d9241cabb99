#pragma once

#include <vector>

#include "idd/model.hpp"

namespace idd {

// target < 0 means no attack; Assumption 1 allows at most one target.
struct PureAttack {
  int target = -1;
  static PureAttack none() { return {}; }
  static PureAttack at(int i) { return {i}; }
};

using PureDefenseProfile = std::vector<int>;       // bits, a_i ∈ {0,1}
using DefenderMixedProfile = std::vector<double>;  // x_i ∈ [0,1]

// Attack marginals over n+1 mutually exclusive events; y_0 = 1 - Σ y_i.
struct AttackerMixedStrategy {
  std::vector<double> y;
  double y0() const;
  bool valid(double tol = 1e-12) const;
};

enum class RegretMode { PerPlayerRange, Absolute };

struct RegretReport {
  RegretMode mode = RegretMode::PerPlayerRange;
  std::vector<double> defender;  // normalized unilateral gains, >= 0
  double attacker = 0;
  double epsilon = 0;  // max over all players
};

// Cost M_i of a pure joint action, with the single-attack restriction baked
// into PureAttack.
double pure_cost(const DefenseGame& game, const PureDefenseProfile& a, PureAttack b, int i);

// U(a,b) = Σ_i [M_i - a_i C_i - b_i C_i^0].
double pure_attacker_utility(const DefenseGame& game, const PureDefenseProfile& a, PureAttack b);

// Expected transfer risk r̄_i = Σ_{j∈Pa(i)} y_j (1-x_j) q̂_ji.
double transfer_risk(const DefenseGame& game, const DefenderMixedProfile& x,
                     const AttackerMixedStrategy& y, int i);

// Closed-form expected cost under independent defender mixing and the
// single-attack marginal y; matches the enumeration oracle.
double mixed_cost(const DefenseGame& game, const DefenderMixedProfile& x,
                  const AttackerMixedStrategy& y, int i);

// Attacker's marginal gain from moving mass to target i relative to no-attack:
// (1-x_i)[p̂_i L_i + Σ_{j∈Ch(i)} q̂_ij (α_j x_j + 1 - x_j) L_j] - C_i^0.
// With all α = 1 this is M_i^0(x_i) = (1-x_i) L̄_i^0 - C_i^0.
double attack_gain(const DefenseGame& game, const DefenderMixedProfile& x, int i);

// U(x,y) = Σ_i y_i · attack_gain(i, x).
double mixed_attacker_utility(const DefenseGame& game, const DefenderMixedProfile& x,
                              const AttackerMixedStrategy& y);

// Effective attack exposure ŝ_i = y_i + ((1-α_i)/p̂_i) r̄_i; defender i
// prefers to invest iff ŝ_i > Δ̂_i.
double s_hat(const DefenseGame& game, const DefenderMixedProfile& x,
             const AttackerMixedStrategy& y, int i);

enum class BestResponse { NotInvest, Invest, Any };

// Indifference tolerance 1e-9 relative to Δ̂_i.
BestResponse defender_best_response(const DefenseGame& game, const DefenderMixedProfile& x,
                                    const AttackerMixedStrategy& y, int i);

struct AttackerBestResponse {
  std::vector<int> targets;  // maximal-gain targets
  bool no_attack = false;    // no-attack is tied with the max gain
  double best_gain = 0;      // g* = max(0, max_i gain)
};

AttackerBestResponse attacker_best_response(const DefenseGame& game,
                                            const DefenderMixedProfile& x);

// Normalized unilateral-deviation gains. PerPlayerRange divides defender i's
// regret by L_i and the attacker's by max_i L̄_i^0.
RegretReport regret(const DefenseGame& game, const DefenderMixedProfile& x,
                    const AttackerMixedStrategy& y, RegretMode mode = RegretMode::PerPlayerRange);

}  // namespace idd
