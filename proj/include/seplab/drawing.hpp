#pragma once

#include <cstdint>
#include <vector>

#include "seplab/congestion.hpp"
#include "seplab/graph.hpp"

namespace seplab {

// One path per demand, drawn independently with probability equal to its
// flow weight. paths[pair_index(n, u, v)] joins u to v.
struct PathSample {
  int n = 0;
  std::vector<Path> paths;
  std::uint64_t seed = 0;
};

PathSample sample_paths(const Graph& g, const Flow& f, std::uint64_t seed);

// Number of unordered pairs of distinct demands {P, P'} such that some w in P
// and w' in P' are equal or adjacent in g.
std::uint64_t count_conflicts(const Graph& g, const PathSample& sample);

struct ConflictBoundReport {
  double mean_conflicts = 0.0;
  double bound = 0.0;       // 4 (m + n) C^2
  double congestion = 0.0;  // C, the max congestion of the sampled flow
  int trials = 0;
  double margin = 0.0;      // bound - mean_conflicts
  std::vector<std::uint64_t> counts;  // per trial, trial t seeded with seed + t
};

// Samples `trials` path systems from f and compares the mean conflict count
// with 4 (m + n) C^2, C = max congestion of f.
ConflictBoundReport conflict_bound_for_flow(const Graph& g, const Flow& f, int trials,
                                            std::uint64_t seed);

// Same, for the near-optimal flow from vcong_mwu(g, eps, seed).
ConflictBoundReport verify_conflict_bound(const Graph& g, double eps, int trials,
                                          std::uint64_t seed);

struct LowerBoundReport {
  int n = 0;
  std::size_t m = 0;
  double vcong_lb = 0.0;
  double vcong_ub = 0.0;
  double ratio = 0.0;  // vcong_lb * sqrt(m) / n^2
};

// Certified congestion lower bound of a connected string graph relative to
// n^2 / sqrt(m). Refuses (InputError) unless is_string is set.
LowerBoundReport verify_lower_bound(const Graph& g, bool is_string, double eps,
                                    std::uint64_t seed = 0);

}  // namespace seplab
