#include "idd/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "idd/rng.hpp"

namespace idd {
namespace exact {

namespace {
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kEqualOneTol = 1e-12;
constexpr double kClampTol = 1e-9;

double clamp_unit(double v, const char* what) {
  if (v < -kClampTol || v > 1.0 + kClampTol)
    throw std::logic_error(std::string("internal consistency: ") + what + " outside [0,1]");
  return std::clamp(v, 0.0, 1.0);
}
}  // namespace

Selector Selector::random(std::uint64_t seed) {
  Selector s;
  s.seed = seed;
  return s;
}

EquilibriumSet solve_all(const DefenseGame& game) {
  auto report = validate(game);
  if (!report.ok())
    throw AssumptionViolated("game fails validation (" +
                             std::to_string(report.violations.size()) + " violations)");
  if (!is_transfer_vulnerable(game))
    throw NotTransferVulnerable("exact solver requires alpha_i = 1 for all nodes");

  const int n = game.n();
  auto d = derived(game);
  EquilibriumSet set;
  set.n = n;
  set.attack_cost.resize(n);
  for (int i = 0; i < n; ++i) set.attack_cost[i] = game.nodes[i].attack_cost;
  set.base_loss = d.base_loss;
  set.x_fixed.assign(n, kNan);
  set.y_fixed.assign(n, kNan);

  const double sum = d.sum_threshold;
  if (std::fabs(sum - 1.0) <= kEqualOneTol) {
    set.tag = EqCase::EqualOne;
    set.y0 = 0;
    for (int i = 0; i < n; ++i) set.y_fixed[i] = d.invest_threshold[i];
    set.v_min = 0;
    set.v_max = n > 0 ? *std::min_element(d.base_gain.begin(), d.base_gain.end()) : 0;
    set.unique = set.v_max <= 0;
    return set;
  }
  if (sum < 1.0) {
    set.tag = EqCase::BelowOne;
    set.y0 = 1.0 - sum;
    for (int i = 0; i < n; ++i) {
      set.y_fixed[i] = d.invest_threshold[i];
      set.x_fixed[i] = clamp_unit(1.0 - d.attack_ratio[i], "x* (below-one)");
    }
    set.unique = true;
    return set;
  }

  // Σ Δ̂ > 1: sort by M̄^0 descending, stable on node index.
  set.tag = EqCase::AboveOne;
  set.y0 = 0;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return d.base_gain[a] > d.base_gain[b]; });
  std::vector<double> prefix(n + 1, 0.0);  // prefix[t] = Σ_{l<=t} Δ̂_Idx(l)
  for (int t = 0; t < n; ++t) prefix[t + 1] = prefix[t] + d.invest_threshold[order[t]];

  int t = 0;  // 0-based position of the pivot
  while (t < n && prefix[t] + d.invest_threshold[order[t]] < 1.0) ++t;
  if (t >= n) throw std::logic_error("internal consistency: pivot not found with sum > 1");

  double max_abs = 0;
  for (int i = 0; i < n; ++i) max_abs = std::max(max_abs, std::fabs(d.base_gain[i]));
  const double tie_tol = 1e-9 * max_abs;
  // Tied values move in or out of the support as one block.
  int group_lo = t, group_hi = t;
  while (group_lo > 0 && d.base_gain[order[group_lo - 1]] - d.base_gain[order[t]] <= tie_tol)
    --group_lo;
  while (group_hi + 1 < n && d.base_gain[order[t]] - d.base_gain[order[group_hi + 1]] <= tie_tol)
    ++group_hi;

  set.support_value = d.base_gain[order[t]];
  for (int pos = 0; pos <= group_hi; ++pos) set.support.push_back(order[pos]);
  for (int pos = group_lo; pos <= group_hi; ++pos) set.tied_group.push_back(order[pos]);
  std::sort(set.support.begin(), set.support.end());
  std::sort(set.tied_group.begin(), set.tied_group.end());
  for (int i : set.tied_group) set.tied_upper.push_back(d.invest_threshold[i]);
  set.tied_sum = 1.0 - prefix[group_lo];

  for (int pos = 0; pos < group_lo; ++pos) {
    int i = order[pos];
    set.y_fixed[i] = d.invest_threshold[i];
    set.x_fixed[i] = clamp_unit(1.0 - (set.support_value + game.nodes[i].attack_cost) /
                                          d.base_loss[i],
                                "x* (above-one)");
  }
  for (int pos = group_lo; pos <= group_hi; ++pos) set.x_fixed[order[pos]] = 0.0;
  for (int pos = group_hi + 1; pos < n; ++pos) {
    set.x_fixed[order[pos]] = 0.0;
    set.y_fixed[order[pos]] = 0.0;
  }

  double upper = std::accumulate(set.tied_upper.begin(), set.tied_upper.end(), 0.0);
  if (set.tied_sum < -kClampTol || set.tied_sum > upper + kClampTol)
    throw std::logic_error("internal consistency: tied-group simplex empty");
  set.tied_sum = std::clamp(set.tied_sum, 0.0, upper);
  set.unique = set.tied_group.size() == 1;
  if (set.unique) set.y_fixed[set.tied_group[0]] = set.tied_sum;
  return set;
}

namespace {

std::vector<double> distribute(const std::vector<double>& upper, double target,
                               std::vector<double> weights) {
  const std::size_t m = upper.size();
  std::vector<double> out(m, 0.0);
  std::vector<bool> capped(m, false);
  double remaining = target;
  for (int round = 0; round < static_cast<int>(m) + 1; ++round) {
    double wsum = 0;
    for (std::size_t k = 0; k < m; ++k)
      if (!capped[k]) wsum += weights[k];
    if (remaining <= 0 || wsum <= 0) break;
    bool newly_capped = false;
    for (std::size_t k = 0; k < m; ++k) {
      if (capped[k]) continue;
      double share = remaining * weights[k] / wsum;
      if (out[k] + share >= upper[k]) {
        remaining -= upper[k] - out[k];
        out[k] = upper[k];
        capped[k] = true;
        newly_capped = true;
      }
    }
    if (newly_capped) continue;
    for (std::size_t k = 0; k < m; ++k)
      if (!capped[k]) out[k] += remaining * weights[k] / wsum;
    remaining = 0;
  }
  return out;
}

}  // namespace

std::pair<DefenderMixedProfile, AttackerMixedStrategy> sample(const EquilibriumSet& set,
                                                              const Selector& sel) {
  DefenderMixedProfile x(set.n, 0.0);
  AttackerMixedStrategy y;
  y.y.assign(set.n, 0.0);
  for (int i = 0; i < set.n; ++i) {
    if (!std::isnan(set.x_fixed[i])) x[i] = set.x_fixed[i];
    if (!std::isnan(set.y_fixed[i])) y.y[i] = set.y_fixed[i];
  }
  if (set.tag == EqCase::EqualOne) {
    double v;
    if (sel.v) {
      v = *sel.v;
      if (v < set.v_min - 1e-12 || v > set.v_max + 1e-12)
        throw std::out_of_range("family parameter v outside range");
      v = std::clamp(v, set.v_min, set.v_max);
    } else if (sel.seed) {
      v = CounterRng(*sel.seed).uniform(set.v_min, set.v_max);
    } else {
      v = 0.5 * (set.v_min + set.v_max);
    }
    for (int i = 0; i < set.n; ++i)
      x[i] = std::clamp(1.0 - (v + set.attack_cost[i]) / set.base_loss[i], 0.0, 1.0);
  } else if (set.tag == EqCase::AboveOne && !set.unique) {
    const std::size_t m = set.tied_group.size();
    std::vector<double> weights;
    if (sel.weights) {
      weights = *sel.weights;
      if (weights.size() != m) throw std::out_of_range("selector weight count mismatch");
      for (double w : weights)
        if (w < 0) throw std::out_of_range("selector weights must be nonnegative");
    } else if (sel.seed) {
      CounterRng rng(*sel.seed);
      weights.resize(m);
      for (auto& w : weights) w = rng.uniform();
    } else {
      weights = set.tied_upper;  // proportional split, always interior-feasible
    }
    auto alloc = distribute(set.tied_upper, set.tied_sum, weights);
    for (std::size_t k = 0; k < m; ++k) y.y[set.tied_group[k]] = alloc[k];
  }
  return {std::move(x), std::move(y)};
}

std::pair<DefenderMixedProfile, AttackerMixedStrategy> sample_vertex(const EquilibriumSet& set,
                                                                     int rotation) {
  if (set.tag == EqCase::EqualOne) {
    return sample(set, Selector::family(rotation % 2 == 0 ? set.v_min : set.v_max));
  }
  if (set.tag == EqCase::AboveOne && !set.unique) {
    const int m = static_cast<int>(set.tied_group.size());
    auto pt = sample(set);
    double remaining = set.tied_sum;
    for (int k = 0; k < m; ++k) {
      int idx = (rotation % m + m + k) % m;
      double take = std::min(set.tied_upper[idx], remaining);
      pt.second.y[set.tied_group[idx]] = take;
      remaining -= take;
    }
    return pt;
  }
  return sample(set);
}

namespace {

double polytope_distance(const std::vector<double>& point, const std::vector<double>& upper,
                         double target_sum) {
  auto feasible = [&](double r) {
    double lo = 0, hi = 0;
    for (std::size_t k = 0; k < point.size(); ++k) {
      double l = std::max(0.0, point[k] - r);
      double h = std::min(upper[k], point[k] + r);
      if (l > h) return false;
      lo += l;
      hi += h;
    }
    return lo <= target_sum && target_sum <= hi;
  };
  double lo = 0, hi = 2.0 + target_sum;
  for (const double p : point) hi = std::max(hi, std::fabs(p) + 1.0);
  if (feasible(0)) return 0;
  for (int it = 0; it < 100; ++it) {
    double mid = 0.5 * (lo + hi);
    (feasible(mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace

double distance(const EquilibriumSet& set, const DefenderMixedProfile& x,
                const AttackerMixedStrategy& y) {
  double dist = std::fabs(y.y0() - set.y0);
  for (int i = 0; i < set.n; ++i) {
    if (!std::isnan(set.x_fixed[i])) dist = std::max(dist, std::fabs(x[i] - set.x_fixed[i]));
    if (!std::isnan(set.y_fixed[i])) dist = std::max(dist, std::fabs(y.y[i] - set.y_fixed[i]));
  }
  if (set.tag == EqCase::EqualOne) {
    // max_i |x_i - x_i(v)| is quasi-convex in v; golden-section search.
    auto dev = [&](double v) {
      double m = 0;
      for (int i = 0; i < set.n; ++i)
        m = std::max(m, std::fabs(x[i] - (1.0 - (v + set.attack_cost[i]) / set.base_loss[i])));
      return m;
    };
    double a = set.v_min, b = set.v_max;
    for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::fabs(b)); ++it) {
      double m1 = a + (b - a) / 3, m2 = b - (b - a) / 3;
      if (dev(m1) < dev(m2))
        b = m2;
      else
        a = m1;
    }
    dist = std::max(dist, dev(0.5 * (a + b)));
  } else if (set.tag == EqCase::AboveOne && !set.unique) {
    std::vector<double> point;
    point.reserve(set.tied_group.size());
    for (int i : set.tied_group) point.push_back(y.y[i]);
    dist = std::max(dist, polytope_distance(point, set.tied_upper, set.tied_sum));
  }
  return dist;
}

bool contains(const EquilibriumSet& set, const DefenderMixedProfile& x,
              const AttackerMixedStrategy& y, double tol) {
  return distance(set, x, y) <= tol;
}

bool is_unique(const EquilibriumSet& set) {
  switch (set.tag) {
    case EqCase::BelowOne:
      return true;
    case EqCase::EqualOne:
      return set.v_max - set.v_min <= 0;
    case EqCase::AboveOne:
      return set.tied_group.size() == 1;
  }
  return false;
}

}  // namespace exact
}  // namespace idd
