#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "seplab/congestion.hpp"
#include "seplab/shortest_paths.hpp"

namespace seplab {

namespace {

// Distinct paths a demand has been routed on, with the number of phases each
// was used in.
struct PathTally {
  std::vector<std::pair<Path, int>> paths;
  std::size_t last = 0;

  void record(const Path& p) {
    if (last < paths.size() && paths[last].first == p) {
      ++paths[last].second;
      return;
    }
    for (std::size_t i = 0; i < paths.size(); ++i) {
      if (paths[i].first == p) {
        ++paths[i].second;
        last = i;
        return;
      }
    }
    paths.emplace_back(p, 1);
    last = paths.size() - 1;
  }
};

int default_phase_cap(int n, double eps) {
  return static_cast<int>(std::ceil(16.0 * std::log(n + 1.0) / (eps * eps))) + 50;
}

}  // namespace

MwuResult vcong_mwu(const Graph& g, double eps, std::uint64_t seed, MwuOptions options) {
  if (!(eps > 0.0 && eps <= 0.5)) {
    throw InputError("vcong_mwu: eps must lie in (0, 0.5], got " + std::to_string(eps));
  }
  if (!is_connected(g)) throw InputError("vcong_mwu: graph is disconnected, no all-pair flow exists");
  const int n = g.n();
  MwuResult res;
  res.flow.n = n;
  if (n < 2) {
    res.converged = true;
    res.weighting.s.assign(n, 0.0);
    res.profile.per_vertex.assign(n, 0.0);
    res.profile.argmax = n == 1 ? 0 : -1;
    return res;
  }

  const double rate = eps / 2.0;
  const int cap = options.max_phases > 0 ? options.max_phases : default_phase_cap(n, eps);

  // Small seeded jitter on the initial lengths breaks the id-order bias of
  // the shortest-path tie rule on symmetric graphs.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(0.0, 0.01);
  std::vector<double> len(n);
  for (double& l : len) l = 1.0 + jitter(rng);

  std::vector<double> avg_len(n, 0.0);
  std::vector<double> total_load(n, 0.0);
  std::vector<double> step_load(n, 0.0);
  std::vector<PathTally> tallies(options.keep_flow ? pair_count(n) : 0);

  double best_lower = 0.0;
  std::vector<double> best_len;
  double upper = 0.0;
  int next_check = 1;
  int phase = 0;
  ShortestPathTree tree;
  WeightMatrix weights(g, len);

  auto try_dual = [&](const std::vector<double>& cand) {
    const DualObjective obj = dual_objective(g, cand);
    if (!(obj.weight_sum > 0.0)) return;
    const double lb = obj.pair_sum / obj.weight_sum;
    if (best_len.empty() || lb > best_lower) {
      best_lower = lb;
      best_len = cand;
    }
  };
  // Unit weights put every distance at >= 1, certifying vcong >= (n - 1) / 2.
  try_dual(std::vector<double>(n, 1.0));

  while (phase < cap) {
    ++phase;
    const double scale = best_lower;
    for (Vertex u = 0; u + 1 < n; ++u) {
      weights.reweight(g, len);
      shortest_path_tree(weights, u, tree);
      std::fill(step_load.begin(), step_load.end(), 0.0);
      for (Vertex v = u + 1; v < n; ++v) {
        const Path p = tree.path_to(v);
        step_load[p.front()] += 0.5;
        step_load[p.back()] += 0.5;
        for (std::size_t i = 1; i + 1 < p.size(); ++i) step_load[p[i]] += 1.0;
        if (options.keep_flow) tallies[pair_index(n, u, v)].record(p);
      }
      for (Vertex w = 0; w < n; ++w) {
        if (step_load[w] == 0.0) continue;
        total_load[w] += step_load[w];
        len[w] *= std::exp(rate * step_load[w] / scale);
      }
    }
    const double top = *std::max_element(len.begin(), len.end());
    double len_sum = 0.0;
    for (double& l : len) {
      l /= top;
      len_sum += l;
    }
    for (Vertex w = 0; w < n; ++w) avg_len[w] += len[w] / len_sum;
    upper = *std::max_element(total_load.begin(), total_load.end()) / phase;

    if (phase >= next_check) {
      try_dual(len);
      try_dual(avg_len);
      next_check = phase + std::max(1, phase / 8);
      if (upper <= (1.0 + eps) * best_lower) {
        res.converged = true;
        break;
      }
    }
  }
  if (!res.converged) {
    try_dual(len);
    try_dual(avg_len);
    res.converged = upper <= (1.0 + eps) * best_lower;
  }

  res.phases = phase;
  res.upper = upper;
  res.lower = best_lower;
  const DualObjective obj = dual_objective(g, best_len);
  res.weighting.s = best_len;
  for (double& x : res.weighting.s) x /= obj.pair_sum;

  res.profile.per_vertex.resize(n);
  for (Vertex w = 0; w < n; ++w) res.profile.per_vertex[w] = total_load[w] / phase;
  for (Vertex w = 0; w < n; ++w) {
    if (res.profile.argmax < 0 || res.profile.per_vertex[w] > res.profile.max_congestion) {
      res.profile.max_congestion = res.profile.per_vertex[w];
      res.profile.argmax = w;
    }
  }
  if (options.keep_flow) {
    res.flow.pairs.reserve(pair_count(n));
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        Flow::Demand d{u, v, {}};
        for (auto& [p, count] : tallies[pair_index(n, u, v)].paths) {
          d.paths.push_back({std::move(p), static_cast<double>(count) / phase});
        }
        res.flow.pairs.push_back(std::move(d));
      }
    }
  }

  if (!res.converged) {
    throw MwuConvergenceError("vcong_mwu: no (1+eps) bracket after " + std::to_string(phase) +
                                  " phases; best bracket [" + std::to_string(res.lower) + ", " +
                                  std::to_string(res.upper) + "]",
                              std::move(res));
  }
  return res;
}

}  // namespace seplab
