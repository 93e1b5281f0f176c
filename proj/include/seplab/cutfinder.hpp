#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "seplab/congestion.hpp"
#include "seplab/graph.hpp"

namespace seplab {

// A map f: V -> R that is 1-Lipschitz with respect to a shortest-path
// pseudometric d_s.
struct LineEmbedding {
  std::vector<double> f;
  // max over edges {u,v} of |f(u) - f(v)| / d_s(u, v), with 0/0 read as 0.
  double lipschitz_certificate = 0.0;
  // sum over unordered pairs of |f(u) - f(v)|.
  double spread = 0.0;
};

// sum over unordered pairs of |f(u) - f(v)|, computed from the sorted values.
double pairwise_spread(std::span<const double> f);

// max over pairs {u,v} drawn from `pairs` of |f(u) - f(v)| / d(u, v), where
// `dist` is a row-major n x n matrix.
double lipschitz_ratio(std::span<const double> f, std::span<const double> dist,
                       std::span<const Edge> pairs);

// f(v) = min over t in T of dist(v, t).
std::vector<double> distance_to_set(std::span<const double> dist, int n,
                                    std::span<const Vertex> subset);

// Random-subset (Frechet) embedding: ceil(log2 n) + 1 subset sizes 2^i, each
// drawn max(4, ceil(2 log2 n)) times; returns the candidate with the largest
// pairwise spread. Every candidate is a distance-to-set map, hence 1-Lipschitz.
LineEmbedding bourgain_line(const Graph& g, const VertexWeighting& s, std::uint64_t seed);

struct SparsityReport {
  Partition partition;
  double sparsity = 0.0;   // |S| / (|A u S| * |B u S|)
  double threshold = 0.0;  // the f value the winning cut was taken at
};

// Sweeps the n - 1 positional gaps of the (f, id) order. At each gap with left
// side L and right side R it considers both extreme minimum vertex covers of
// the L-R crossing edges (bipartite matching / min cut), the one-sided
// endpoint covers, and a cover forced to keep the two extreme vertices out of
// S. Returns the candidate of least sparsity with A and B nonempty.
// Throws InputError if all f values coincide and NoValidPartition if no gap
// yields a valid candidate.
SparsityReport sweep_round(const Graph& g, std::span<const double> f);

// Reference rounding: S = the left-side endpoints of crossing edges, best gap.
// Throws like sweep_round.
SparsityReport naive_sweep_round(const Graph& g, std::span<const double> f);

struct SparseCut {
  SparsityReport report;
  LineEmbedding embedding;
  double vcong_lb = 0.0;
  double vcong_ub = 0.0;
  bool mwu_converged = false;
  // sparsity * vcong_lb / log2(n): the constant the cut achieves in
  // sparsity <= kappa * log2(n) / vcong_lb.
  double kappa = 0.0;
};

// Dual weighting (vcong_mwu) -> line embedding -> sweep rounding.
// Requires a connected graph with n >= 2. A dual solve that stops at its phase
// cap is not fatal here: its best bracket is used and mwu_converged is false.
SparseCut best_sparse_cut(const Graph& g, double eps, std::uint64_t seed);

}  // namespace seplab
