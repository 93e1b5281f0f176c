#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "seplab/errors.hpp"
#include "seplab/graph.hpp"

namespace seplab {

using Path = std::vector<Vertex>;

struct WeightedPath {
  Path path;
  double weight = 0.0;
};

// All-pair unit-demand multicommodity flow. pairs[pair_index(n, u, v)] holds
// the paths of the demand {u, v}, u < v; weights of each demand sum to 1.
struct Flow {
  struct Demand {
    Vertex u = 0;
    Vertex v = 0;
    std::vector<WeightedPath> paths;
  };
  int n = 0;
  std::vector<Demand> pairs;
};

inline std::size_t pair_count(int n) {
  return static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
}

// Position of {u, v}, u < v, in lexicographic pair order.
inline std::size_t pair_index(int n, Vertex u, Vertex v) {
  const std::size_t uu = static_cast<std::size_t>(u);
  return uu * (2 * static_cast<std::size_t>(n) - uu - 1) / 2 + static_cast<std::size_t>(v - u - 1);
}

struct CongestionProfile {
  std::vector<double> per_vertex;
  double max_congestion = 0.0;
  Vertex argmax = -1;  // smallest vertex attaining the maximum
};

// Vertex weights s >= 0; the induced edge weight of {u, v} is (s(u) + s(v)) / 2.
struct VertexWeighting {
  std::vector<double> s;
};

// Throws InputError if some stored path is not a simple u-v path of g or a
// demand's weights do not sum to 1 within tol.
void validate_flow(const Graph& g, const Flow& f, double tol = 1e-9);

// Internal vertices carry the full path weight, endpoints half of it.
CongestionProfile congestion_of(const Graph& g, const Flow& f);

// The flow routing every demand along a single path (for trees, or tests).
Flow single_path_flow(int n, const std::vector<Path>& paths_by_pair);

// Each demand {u, v} routed along the BFS-tree path from u (neighbors scanned
// in ascending order).
Flow bfs_flow(const Graph& g);

struct ExactCongestion {
  double value = 0.0;
  Flow flow;
};

// Solves min_flow max_w cong(w) exactly by enumerating every simple path and
// running the simplex method. Throws InputError when g is disconnected or
// n > max_n.
ExactCongestion vcong_exact(const Graph& g, int max_n = 8);

struct DualObjective {
  double weight_sum = 0.0;  // sum_v s(v)
  double pair_sum = 0.0;    // sum over unordered pairs of d_s(u, v)

  // weight_sum / pair_sum, i.e. sum_v s(v) after rescaling s so the pair sum
  // is 1. Always >= 1 / vcong(g). Throws InputError when pair_sum is 0.
  double rescaled_weight_sum() const;
};

// Throws InputError for negative weights or a disconnected graph.
DualObjective dual_objective(const Graph& g, std::span<const double> s);

struct MwuOptions {
  bool keep_flow = true;  // store the path decomposition of the averaged flow
  int max_phases = 0;     // 0 = derived from n and eps
};

struct MwuResult {
  double lower = 0.0;  // certified: vcong >= lower
  double upper = 0.0;  // certified: max congestion of `flow`
  Flow flow;           // empty pairs when keep_flow is false
  CongestionProfile profile;
  VertexWeighting weighting;  // normalized so the pair sum of d_s is 1
  int phases = 0;
  bool converged = false;
};

class MwuConvergenceError : public ConvergenceError {
 public:
  MwuConvergenceError(const std::string& what, MwuResult best)
      : ConvergenceError(what), best_(std::move(best)) {}
  const MwuResult& best() const { return best_; }

 private:
  MwuResult best_;
};

// Multiplicative-weights concurrent flow on vertex lengths. Stops once
// upper <= (1 + eps) * lower; throws MwuConvergenceError (carrying the best
// bracket found) when the phase cap is hit first. Requires 0 < eps <= 0.5
// and a connected graph.
MwuResult vcong_mwu(const Graph& g, double eps, std::uint64_t seed, MwuOptions options = {});

}  // namespace seplab
