#include "seplab/congestion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "seplab/kernels.hpp"
#include "seplab/lp.hpp"
#include "seplab/shortest_paths.hpp"

namespace seplab {

namespace {

std::string pair_name(Vertex u, Vertex v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

void check_connected(const Graph& g, const char* who) {
  if (!is_connected(g)) {
    throw InputError(std::string(who) + ": graph is disconnected, no all-pair flow exists");
  }
}

// Adds path weight to per-vertex congestion: full on internal vertices, half
// on the two endpoints.
void add_path_load(std::span<const Vertex> path, double weight, std::vector<double>& load) {
  load[path.front()] += 0.5 * weight;
  load[path.back()] += 0.5 * weight;
  for (std::size_t i = 1; i + 1 < path.size(); ++i) load[path[i]] += weight;
}

void enumerate_simple_paths(const Graph& g, Vertex target, std::vector<Vertex>& stack,
                            std::vector<char>& on_path, std::vector<Path>& out) {
  const Vertex tail = stack.back();
  if (tail == target) {
    out.push_back(stack);
    return;
  }
  for (Vertex w : g.neighbors(tail)) {
    if (on_path[w]) continue;
    on_path[w] = 1;
    stack.push_back(w);
    enumerate_simple_paths(g, target, stack, on_path, out);
    stack.pop_back();
    on_path[w] = 0;
  }
}

}  // namespace

void validate_flow(const Graph& g, const Flow& f, double tol) {
  const int n = g.n();
  if (f.n != n) throw InputError("flow is for a graph with a different vertex count");
  if (f.pairs.size() != pair_count(n)) throw InputError("flow does not list every demand");
  std::vector<char> seen(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const auto& d = f.pairs[pair_index(n, u, v)];
      if (d.u != u || d.v != v) throw InputError("flow demand out of order at " + pair_name(u, v));
      double total = 0.0;
      for (const auto& wp : d.paths) {
        const Path& p = wp.path;
        if (wp.weight < 0.0 || wp.weight > 1.0 + tol) {
          throw InputError("path weight outside [0,1] for demand " + pair_name(u, v));
        }
        if (p.size() < 2 || p.front() != u || p.back() != v) {
          throw InputError("path does not join the endpoints of demand " + pair_name(u, v));
        }
        bool simple = true;
        for (std::size_t i = 0; i < p.size(); ++i) {
          if (p[i] < 0 || p[i] >= n) throw InputError("path vertex out of range in " + pair_name(u, v));
          if (seen[p[i]]) simple = false;
          seen[p[i]] = 1;
          if (i > 0 && !g.adjacent(p[i - 1], p[i])) {
            for (Vertex x : p) seen[x] = 0;
            throw InputError("path for demand " + pair_name(u, v) + " uses non-edge " +
                             pair_name(std::min(p[i - 1], p[i]), std::max(p[i - 1], p[i])));
          }
        }
        for (Vertex x : p) seen[x] = 0;
        if (!simple) throw InputError("path for demand " + pair_name(u, v) + " is not simple");
        total += wp.weight;
      }
      if (std::fabs(total - 1.0) > tol) {
        throw InputError("weights of demand " + pair_name(u, v) + " sum to " +
                         std::to_string(total) + ", not 1");
      }
    }
  }
}

CongestionProfile congestion_of(const Graph& g, const Flow& f) {
  validate_flow(g, f);
  CongestionProfile prof;
  prof.per_vertex.assign(g.n(), 0.0);
  for (const auto& d : f.pairs) {
    for (const auto& wp : d.paths) add_path_load(wp.path, wp.weight, prof.per_vertex);
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (prof.argmax < 0 || prof.per_vertex[v] > prof.max_congestion) {
      prof.max_congestion = prof.per_vertex[v];
      prof.argmax = v;
    }
  }
  return prof;
}

Flow single_path_flow(int n, const std::vector<Path>& paths_by_pair) {
  if (paths_by_pair.size() != pair_count(n)) throw InputError("one path per demand required");
  Flow f;
  f.n = n;
  f.pairs.reserve(pair_count(n));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      f.pairs.push_back({u, v, {WeightedPath{paths_by_pair[pair_index(n, u, v)], 1.0}}});
    }
  }
  return f;
}

Flow bfs_flow(const Graph& g) {
  check_connected(g, "bfs_flow");
  const int n = g.n();
  std::vector<Path> paths(pair_count(n));
  std::vector<int> pred(n);
  std::vector<Vertex> queue;
  for (Vertex u = 0; u < n; ++u) {
    std::fill(pred.begin(), pred.end(), -2);
    pred[u] = -1;
    queue.assign(1, u);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : g.neighbors(queue[head])) {
        if (pred[w] == -2) {
          pred[w] = queue[head];
          queue.push_back(w);
        }
      }
    }
    for (Vertex v = u + 1; v < n; ++v) {
      Path p;
      for (Vertex x = v; x != -1; x = pred[x]) p.push_back(x);
      std::reverse(p.begin(), p.end());
      paths[pair_index(n, u, v)] = std::move(p);
    }
  }
  return single_path_flow(n, paths);
}

ExactCongestion vcong_exact(const Graph& g, int max_n) {
  const int n = g.n();
  if (n > max_n) {
    throw InputError("vcong_exact refuses n = " + std::to_string(n) + " > max_n = " +
                     std::to_string(max_n));
  }
  check_connected(g, "vcong_exact");
  ExactCongestion result;
  result.flow.n = n;
  if (n < 2) return result;

  // Columns: one per simple path, then t, then one slack per vertex.
  // Rows: one per demand (sum of its paths = 1), one per vertex
  // (load(w) - t + slack_w = 0). Objective: minimize t.
  std::vector<std::vector<Path>> by_pair(pair_count(n));
  std::size_t path_total = 0;
  {
    std::vector<Vertex> stack;
    std::vector<char> on_path(n, 0);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        auto& out = by_pair[pair_index(n, u, v)];
        stack.assign(1, u);
        on_path[u] = 1;
        enumerate_simple_paths(g, v, stack, on_path, out);
        on_path[u] = 0;
        path_total += out.size();
      }
    }
  }
  const std::size_t pairs = pair_count(n);
  const std::size_t t_col = path_total;
  lp::StandardForm lpf;
  lpf.rows = pairs + static_cast<std::size_t>(n);
  lpf.cols = path_total + 1 + static_cast<std::size_t>(n);
  lpf.a.assign(lpf.rows * lpf.cols, 0.0);
  lpf.b.assign(lpf.rows, 0.0);
  lpf.c.assign(lpf.cols, 0.0);
  lpf.c[t_col] = 1.0;
  std::size_t col = 0;
  for (std::size_t pi = 0; pi < pairs; ++pi) {
    lpf.b[pi] = 1.0;
    for (const Path& p : by_pair[pi]) {
      lpf.at(pi, col) = 1.0;
      lpf.at(pairs + p.front(), col) += 0.5;
      lpf.at(pairs + p.back(), col) += 0.5;
      for (std::size_t i = 1; i + 1 < p.size(); ++i) lpf.at(pairs + p[i], col) += 1.0;
      ++col;
    }
  }
  for (int w = 0; w < n; ++w) {
    lpf.at(pairs + w, t_col) = -1.0;
    lpf.at(pairs + w, t_col + 1 + w) = 1.0;
  }

  const lp::Solution sol = lp::solve(lpf);
  if (sol.status != lp::Status::kOptimal) {
    throw ConvergenceError("vcong_exact: simplex did not reach an optimum");
  }
  result.value = sol.objective;
  col = 0;
  result.flow.pairs.reserve(pairs);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      Flow::Demand d{u, v, {}};
      double total = 0.0;
      for (const Path& p : by_pair[pair_index(n, u, v)]) {
        const double x = sol.x[col++];
        if (x > 1e-12) {
          d.paths.push_back({p, x});
          total += x;
        }
      }
      for (auto& wp : d.paths) wp.weight /= total;
      result.flow.pairs.push_back(std::move(d));
    }
  }
  return result;
}

double DualObjective::rescaled_weight_sum() const {
  if (!(pair_sum > 0.0)) {
    throw InputError("degenerate weighting: all pairwise distances are zero, cannot rescale");
  }
  return weight_sum / pair_sum;
}

DualObjective dual_objective(const Graph& g, std::span<const double> s) {
  if (static_cast<int>(s.size()) != g.n()) throw InputError("weighting size does not match graph");
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!(s[v] >= 0.0) || !std::isfinite(s[v])) {
      throw InputError("negative or non-finite weight at vertex " + std::to_string(v));
    }
  }
  check_connected(g, "dual_objective");
  const auto& k = kernels::active();
  const int n = g.n();
  const std::vector<double> d = all_pairs_distances(g, s);
  DualObjective obj;
  obj.weight_sum = k.sum(s.data(), s.size());
  for (int u = 0; u + 1 < n; ++u) {
    obj.pair_sum += k.sum(d.data() + static_cast<std::size_t>(u) * n + u + 1,
                          static_cast<std::size_t>(n - u - 1));
  }
  return obj;
}

}  // namespace seplab
