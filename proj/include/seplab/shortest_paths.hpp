#pragma once

#include <span>
#include <vector>

#include "seplab/graph.hpp"

namespace seplab {

// Dense edge-weight matrix for vertex weights s: entry (u, v) is
// (s(u) + s(v)) / 2 when {u, v} is an edge and +inf otherwise.
class WeightMatrix {
 public:
  WeightMatrix(const Graph& g, std::span<const double> s);

  // Rewrites the edge entries for new vertex weights on the same graph.
  void reweight(const Graph& g, std::span<const double> s);

  int n() const { return n_; }
  const double* row(int u) const { return w_.data() + static_cast<std::size_t>(u) * n_; }

 private:
  int n_;
  std::vector<double> w_;
};

struct ShortestPathTree {
  int source = -1;
  std::vector<double> dist;  // +inf when unreachable
  std::vector<int> pred;     // -1 for the source and unreachable vertices

  // source -> ... -> target, empty when unreachable.
  std::vector<Vertex> path_to(Vertex target) const;
};

// Dijkstra over the dense matrix. Vertices settle in (distance, id) order and a
// predecessor is replaced only on strict improvement, so the tree is fully
// determined by the weights.
void shortest_path_tree(const WeightMatrix& w, Vertex source, ShortestPathTree& out);

// Row-major n x n matrix of d_s.
std::vector<double> all_pairs_distances(const Graph& g, std::span<const double> s);

}  // namespace seplab
