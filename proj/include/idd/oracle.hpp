#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idd/payoff.hpp"

namespace idd {
namespace oracle {

struct SizeCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact expectation of pure_cost for node i under independent defender
// randomization x and single-attack marginal y, by full enumeration of
// attack targets and parent-family investment outcomes. Ground truth for
// payoff::mixed_cost. Requires |Pa(i)| <= 20.
double expected_cost_enum(const DefenseGame& game, const DefenderMixedProfile& x,
                          const AttackerMixedStrategy& y, int i);

// Expected attacker utility with x mixed and a fixed pure attack, by the same
// enumeration.
double expected_attacker_utility_enum(const DefenseGame& game, const DefenderMixedProfile& x,
                                      PureAttack b);

// Expected attacker utility by enumeration over all pure attacks weighted by y.
double expected_attacker_utility_enum(const DefenseGame& game, const DefenderMixedProfile& x,
                                      const AttackerMixedStrategy& y);

// Exhaustive scan over all 2^n defender profiles and n+1 attacks. Returns a
// pure profile from which no player can strictly gain by unilateral deviation,
// or nullopt. Requires n <= 20.
std::optional<std::pair<PureDefenseProfile, PureAttack>> psne_search(const DefenseGame& game);

struct MsneViolation {
  std::string who;  // "defender <i>" or "attacker"
  std::string what;
  double amount = 0;
};

struct MsneReport {
  bool ok = true;
  std::vector<MsneViolation> violations;
};

// First-principles equilibrium check (Definition 1) using enumeration-based
// expected values: mixing defenders must be indifferent, endpoint defenders
// weakly optimal, attacked targets maximal-gain, and positive y_0 requires
// max gain <= 0. tol is normalized (per L_i for defenders, per max L̄^0 for
// the attacker).
MsneReport verify_msne(const DefenseGame& game, const DefenderMixedProfile& x,
                       const AttackerMixedStrategy& y, double tol = 1e-9);

}  // namespace oracle
}  // namespace idd
