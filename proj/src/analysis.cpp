#include "idd/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <set>
#include <stdexcept>
#include <thread>

namespace idd {
namespace analysis {

PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) throw std::invalid_argument("power-law fit needs at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(points.size());
  std::vector<std::pair<double, double>> logs;
  logs.reserve(points.size());
  for (auto [eps, count] : points) {
    if (eps <= 0 || count <= 0)
      throw std::invalid_argument("power-law fit requires positive coordinates");
    logs.emplace_back(std::log(eps), std::log(count));
  }
  for (auto [lx, ly] : logs) {
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  double denom = m * sxx - sx * sx;
  if (denom == 0) throw std::invalid_argument("degenerate abscissae");
  PowerLawFit fit;
  fit.exponent = (m * sxy - sx * sy) / denom;
  double intercept = (sy - fit.exponent * sx) / m;
  fit.coefficient = std::exp(intercept);
  double ss_res = 0, ss_tot = 0, mean_y = sy / m;
  for (auto [lx, ly] : logs) {
    double pred = intercept + fit.exponent * lx;
    ss_res += (ly - pred) * (ly - pred);
    ss_tot += (ly - mean_y) * (ly - mean_y);
  }
  fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

SweepResult sweep(const DirectedGraph& graph, const gen::GeneratorSpec& spec,
                  const std::vector<double>& epsilons, int seeds_per_epsilon,
                  const brgd::BrgdConfig& base_config, int workers) {
  struct Task {
    double epsilon;
    std::uint64_t seed;
    const DefenseGame* game;
  };
  // One instance per ε value, as in the per-ε random-instance experiments.
  std::vector<DefenseGame> games;
  games.reserve(epsilons.size());
  for (std::size_t e = 0; e < epsilons.size(); ++e) {
    gen::GeneratorSpec s = spec;
    s.seed = spec.seed + e;
    games.push_back(gen::generate(graph, s));
  }
  std::vector<Task> tasks;
  for (std::size_t e = 0; e < epsilons.size(); ++e)
    for (int s = 0; s < seeds_per_epsilon; ++s)
      tasks.push_back({epsilons[e], base_config.seed + static_cast<std::uint64_t>(s), &games[e]});

  SweepResult result;
  result.rows.resize(tasks.size());
  if (workers <= 0)
    workers = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= tasks.size()) return;
      const Task& t = tasks[k];
      brgd::BrgdConfig cfg = base_config;
      cfg.epsilon = t.epsilon;
      cfg.seed = t.seed;
      auto start = std::chrono::steady_clock::now();
      auto run = brgd::run(*t.game, cfg);
      auto end = std::chrono::steady_clock::now();
      result.rows[k] = {t.epsilon, t.seed, run.converged, run.iterations,
                        std::chrono::duration<double, std::milli>(end - start).count()};
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  std::sort(result.rows.begin(), result.rows.end(), [](const SweepRow& a, const SweepRow& b) {
    return a.epsilon != b.epsilon ? a.epsilon < b.epsilon : a.seed < b.seed;
  });
  std::set<double> converged_eps;
  std::vector<std::pair<double, double>> pts;
  for (const auto& row : result.rows)
    if (row.converged && row.iterations > 0) {
      converged_eps.insert(row.epsilon);
      pts.emplace_back(row.epsilon, static_cast<double>(row.iterations));
    }
  if (converged_eps.size() >= 3) result.fit = fit_power_law(pts);
  return result;
}

EquilibriumReport report_equilibrium(const DefenseGame& game, const DefenderMixedProfile& x,
                                     const AttackerMixedStrategy& y, double threshold) {
  EquilibriumReport rep;
  rep.threshold = threshold;
  rep.y0 = y.y0();
  const int n = game.n();
  for (int i = 0; i < n; ++i)
    if (y.y[i] > 0) rep.attack_profile.emplace_back(i, y.y[i]);
  std::sort(rep.attack_profile.begin(), rep.attack_profile.end(),
            [](const auto& a, const auto& b) {
              return a.second != b.second ? a.second > b.second : a.first < b.first;
            });
  rep.support_size = rep.attack_profile.size();

  rep.invest_histogram.assign(10, 0);
  for (int i = 0; i < n; ++i) {
    // Bins [0, 0.1], (0.1, 0.2], ..., (0.9, 1]: the first bin is closed.
    int bin = x[i] <= 0.1 ? 0 : std::min(9, static_cast<int>(std::ceil(x[i] * 10.0)) - 1);
    ++rep.invest_histogram[bin];
  }

  double in_sum = 0, out_sum = 0;
  for (int i = 0; i < n; ++i)
    if (y.y[i] > threshold) {
      ++rep.n_attacked;
      in_sum += static_cast<double>(game.graph.parents(i).size());
      out_sum += static_cast<double>(game.graph.children(i).size());
    }
  if (rep.n_attacked > 0) {
    rep.avg_indegree_attacked = in_sum / static_cast<double>(rep.n_attacked);
    rep.avg_outdegree_attacked = out_sum / static_cast<double>(rep.n_attacked);
  }
  return rep;
}

}  // namespace analysis
}  // namespace idd
