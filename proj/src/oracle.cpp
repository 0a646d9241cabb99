#include "idd/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace idd {
namespace oracle {

namespace {

// E_a[M_i(a, b)] over the 2^{|PF(i)|} investment outcomes of i's parent family.
double expected_cost_given_attack(const DefenseGame& game, const DefenderMixedProfile& x,
                                  PureAttack b, int i) {
  const auto& pa = game.graph.parents(i);
  if (pa.size() > 20) throw SizeCapExceeded("parent family too large to enumerate");
  std::vector<int> family(pa);
  family.push_back(i);
  PureDefenseProfile a(game.n(), 0);
  const std::size_t count = std::size_t{1} << family.size();
  double total = 0;
  for (std::size_t mask = 0; mask < count; ++mask) {
    double weight = 1;
    for (std::size_t k = 0; k < family.size(); ++k) {
      bool invests = (mask >> k) & 1;
      a[family[k]] = invests ? 1 : 0;
      weight *= invests ? x[family[k]] : 1.0 - x[family[k]];
    }
    if (weight == 0) continue;
    total += weight * pure_cost(game, a, b, i);
  }
  return total;
}

}  // namespace

double expected_cost_enum(const DefenseGame& game, const DefenderMixedProfile& x,
                          const AttackerMixedStrategy& y, int i) {
  double total = y.y0() * expected_cost_given_attack(game, x, PureAttack::none(), i);
  for (int t = 0; t < game.n(); ++t)
    if (y.y[t] != 0) total += y.y[t] * expected_cost_given_attack(game, x, PureAttack::at(t), i);
  return total;
}

double expected_attacker_utility_enum(const DefenseGame& game, const DefenderMixedProfile& x,
                                      PureAttack b) {
  double u = 0;
  for (int i = 0; i < game.n(); ++i)
    u += expected_cost_given_attack(game, x, b, i) - x[i] * game.nodes[i].invest_cost;
  if (b.target >= 0) u -= game.nodes[b.target].attack_cost;
  return u;
}

double expected_attacker_utility_enum(const DefenseGame& game, const DefenderMixedProfile& x,
                                      const AttackerMixedStrategy& y) {
  double u = y.y0() * expected_attacker_utility_enum(game, x, PureAttack::none());
  for (int t = 0; t < game.n(); ++t)
    if (y.y[t] != 0) u += y.y[t] * expected_attacker_utility_enum(game, x, PureAttack::at(t));
  return u;
}

std::optional<std::pair<PureDefenseProfile, PureAttack>> psne_search(const DefenseGame& game) {
  const int n = game.n();
  if (n > 20) throw SizeCapExceeded("psne_search supports n <= 20");
  PureDefenseProfile a(n, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (int i = 0; i < n; ++i) a[i] = (mask >> i) & 1;
    for (int t = -1; t < n; ++t) {
      PureAttack b{t};
      double u = pure_attacker_utility(game, a, b);
      bool stable = true;
      for (int alt = -1; alt < n && stable; ++alt)
        if (alt != t && pure_attacker_utility(game, a, PureAttack{alt}) > u) stable = false;
      for (int i = 0; i < n && stable; ++i) {
        double cur = pure_cost(game, a, b, i);
        a[i] ^= 1;
        if (pure_cost(game, a, b, i) < cur) stable = false;
        a[i] ^= 1;
      }
      if (stable) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

MsneReport verify_msne(const DefenseGame& game, const DefenderMixedProfile& x,
                       const AttackerMixedStrategy& y, double tol) {
  const int n = game.n();
  MsneReport report;
  auto flag = [&](std::string who, std::string what, double amount) {
    report.ok = false;
    report.violations.push_back({std::move(who), std::move(what), amount});
  };
  for (int i = 0; i < n; ++i) {
    DefenderMixedProfile xi = x;
    xi[i] = 0;
    double cost_out = expected_cost_enum(game, xi, y, i);
    xi[i] = 1;
    double cost_in = expected_cost_enum(game, xi, y, i);
    double scale = game.nodes[i].loss;
    if (x[i] > 0 && x[i] < 1) {
      if (std::fabs(cost_in - cost_out) > tol * scale)
        flag("defender " + std::to_string(i), "mixing but not indifferent",
             (cost_in - cost_out) / scale);
    } else if (x[i] == 1) {
      if (cost_in > cost_out + tol * scale)
        flag("defender " + std::to_string(i), "invests but not-investing is cheaper",
             (cost_in - cost_out) / scale);
    } else {
      if (cost_out > cost_in + tol * scale)
        flag("defender " + std::to_string(i), "does not invest but investing is cheaper",
             (cost_out - cost_in) / scale);
    }
  }
  std::vector<double> gains(n);
  double max_gain = 0, scale = 1;
  for (int i = 0; i < n; ++i) {
    gains[i] = expected_attacker_utility_enum(game, x, PureAttack::at(i));
    max_gain = std::max(max_gain, gains[i]);
  }
  if (n > 0) {
    auto d = derived(game);
    scale = std::max(1.0, *std::max_element(d.base_loss.begin(), d.base_loss.end()));
  }
  for (int i = 0; i < n; ++i)
    if (y.y[i] > tol && gains[i] < max_gain - tol * scale)
      flag("attacker", "mass on non-maximal target " + std::to_string(i),
           (max_gain - gains[i]) / scale);
  if (y.y0() > tol && max_gain > tol * scale)
    flag("attacker", "positive no-attack mass while a target has positive gain",
         max_gain / scale);
  if (!y.valid()) flag("attacker", "strategy off the simplex", 0);
  return report;
}

}  // namespace oracle
}  // namespace idd
