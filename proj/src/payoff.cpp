#include "idd/payoff.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace idd {

double AttackerMixedStrategy::y0() const {
  return 1.0 - std::accumulate(y.begin(), y.end(), 0.0);
}

bool AttackerMixedStrategy::valid(double tol) const {
  double sum = 0;
  for (double v : y) {
    if (v < -tol) return false;
    sum += v;
  }
  return sum <= 1.0 + tol;
}

double pure_cost(const DefenseGame& game, const PureDefenseProfile& a, PureAttack b, int i) {
  if (static_cast<int>(a.size()) != game.n()) throw std::invalid_argument("profile length");
  const auto& p = game.nodes[i];
  // Single attack: at most one factor of the safety product differs from 1.
  double risk = 0;
  if (b.target >= 0 && b.target != i && a[b.target] == 0) {
    const auto& pa = game.graph.parents(i);
    auto it = std::lower_bound(pa.begin(), pa.end(), b.target);
    if (it != pa.end() && *it == b.target)
      risk = game.transfer_in[i][static_cast<std::size_t>(it - pa.begin())];
  }
  int bi = b.target == i ? 1 : 0;
  if (a[i])
    return p.invest_cost + p.unblocked_transfer * risk * p.loss;
  double direct = bi * p.direct_success;
  return (direct + (1.0 - direct) * risk) * p.loss;
}

double pure_attacker_utility(const DefenseGame& game, const PureDefenseProfile& a, PureAttack b) {
  double u = 0;
  for (int i = 0; i < game.n(); ++i) {
    u += pure_cost(game, a, b, i) - a[i] * game.nodes[i].invest_cost;
    if (b.target == i) u -= game.nodes[i].attack_cost;
  }
  return u;
}

double transfer_risk(const DefenseGame& game, const DefenderMixedProfile& x,
                     const AttackerMixedStrategy& y, int i) {
  const auto& pa = game.graph.parents(i);
  double risk = 0;
  for (std::size_t k = 0; k < pa.size(); ++k) {
    int j = pa[k];
    risk += y.y[j] * (1.0 - x[j]) * game.transfer_in[i][k];
  }
  return risk;
}

double mixed_cost(const DefenseGame& game, const DefenderMixedProfile& x,
                  const AttackerMixedStrategy& y, int i) {
  const auto& p = game.nodes[i];
  double risk = transfer_risk(game, x, y, i);
  return x[i] * (p.invest_cost + p.unblocked_transfer * risk * p.loss) +
         (1.0 - x[i]) * (p.direct_success * y.y[i] + risk) * p.loss;
}

double attack_gain(const DefenseGame& game, const DefenderMixedProfile& x, int i) {
  const auto& p = game.nodes[i];
  double loss = p.direct_success * p.loss;
  const auto& ch = game.graph.children(i);
  for (std::size_t k = 0; k < ch.size(); ++k) {
    const auto& c = game.nodes[ch[k]];
    loss += game.transfer_out[i][k] * (c.unblocked_transfer * x[ch[k]] + 1.0 - x[ch[k]]) * c.loss;
  }
  return (1.0 - x[i]) * loss - p.attack_cost;
}

double mixed_attacker_utility(const DefenseGame& game, const DefenderMixedProfile& x,
                              const AttackerMixedStrategy& y) {
  double u = 0;
  for (int i = 0; i < game.n(); ++i) u += y.y[i] * attack_gain(game, x, i);
  return u;
}

double s_hat(const DefenseGame& game, const DefenderMixedProfile& x,
             const AttackerMixedStrategy& y, int i) {
  const auto& p = game.nodes[i];
  return y.y[i] + (1.0 - p.unblocked_transfer) / p.direct_success * transfer_risk(game, x, y, i);
}

BestResponse defender_best_response(const DefenseGame& game, const DefenderMixedProfile& x,
                                    const AttackerMixedStrategy& y, int i) {
  const auto& p = game.nodes[i];
  double threshold = p.invest_cost / (p.loss * p.direct_success);
  double exposure = s_hat(game, x, y, i);
  double tol = 1e-9 * threshold;
  if (exposure > threshold + tol) return BestResponse::Invest;
  if (exposure < threshold - tol) return BestResponse::NotInvest;
  return BestResponse::Any;
}

AttackerBestResponse attacker_best_response(const DefenseGame& game,
                                            const DefenderMixedProfile& x) {
  const int n = game.n();
  std::vector<double> gains(n);
  double max_gain = 0, max_attack_cost = 0;
  for (int i = 0; i < n; ++i) {
    gains[i] = attack_gain(game, x, i);
    max_gain = std::max(max_gain, gains[i]);
    max_attack_cost = std::max(max_attack_cost, game.nodes[i].attack_cost);
  }
  AttackerBestResponse br;
  br.best_gain = max_gain;
  double tol = 1e-9 * (std::fabs(max_gain) + max_attack_cost);
  for (int i = 0; i < n; ++i)
    if (gains[i] >= max_gain - tol) br.targets.push_back(i);
  br.no_attack = max_gain <= tol;
  return br;
}

RegretReport regret(const DefenseGame& game, const DefenderMixedProfile& x,
                    const AttackerMixedStrategy& y, RegretMode mode) {
  const int n = game.n();
  RegretReport r;
  r.mode = mode;
  r.defender.resize(n);
  double attacker_scale = 1.0;
  if (mode == RegretMode::PerPlayerRange) {
    double max_base_loss = 0;
    for (int i = 0; i < n; ++i) {
      const auto& p = game.nodes[i];
      double lbar = p.direct_success * p.loss;
      const auto& ch = game.graph.children(i);
      for (std::size_t k = 0; k < ch.size(); ++k)
        lbar += game.transfer_out[i][k] * game.nodes[ch[k]].loss;
      max_base_loss = std::max(max_base_loss, lbar);
    }
    if (max_base_loss > 0) attacker_scale = max_base_loss;
  }
  for (int i = 0; i < n; ++i) {
    const auto& p = game.nodes[i];
    double risk = transfer_risk(game, x, y, i);
    double invest_cost = p.invest_cost + p.unblocked_transfer * risk * p.loss;
    double expose_cost = (p.direct_success * y.y[i] + risk) * p.loss;
    double current = x[i] * invest_cost + (1.0 - x[i]) * expose_cost;
    double gap = current - std::min(invest_cost, expose_cost);
    r.defender[i] = gap / (mode == RegretMode::PerPlayerRange ? p.loss : 1.0);
    r.epsilon = std::max(r.epsilon, r.defender[i]);
  }
  double best = 0, played = 0;
  for (int i = 0; i < n; ++i) {
    double g = attack_gain(game, x, i);
    best = std::max(best, g);
    played += y.y[i] * g;
  }
  r.attacker = (best - played) / attacker_scale;
  r.attacker = std::max(r.attacker, 0.0);
  r.epsilon = std::max(r.epsilon, r.attacker);
  return r;
}

}  // namespace idd
