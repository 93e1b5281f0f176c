#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace seplab {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // sorted ascending, no duplicates
using Edge = std::pair<Vertex, Vertex>;  // u < v

// Parts of G \ S must have at most floor(kBalanceNum * n / kBalanceDen) vertices.
inline constexpr int kBalanceNum = 2;
inline constexpr int kBalanceDen = 3;

inline constexpr int balance_limit(int n) { return kBalanceNum * n / kBalanceDen; }

// Undirected simple graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Throws InputError on self-loops, duplicate edges or ids out of range.
  // Edges may be given in any order and orientation.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int n() const { return n_; }
  std::size_t m() const { return edges_.size(); }

  // Normalized (u < v), sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }
  // Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Vertex> adj_;
};

// Common small graphs.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);  // center is vertex 0
Graph petersen_graph();

struct Partition {
  VertexSet A;
  VertexSet B;
  VertexSet S;
};

struct Separator {
  VertexSet S;
  std::vector<VertexSet> parts;  // components of G \ S
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Connected components, each sorted; ordered by decreasing size, ties by
// smallest member.
std::vector<VertexSet> components(const Graph& g);

// Components of the subgraph induced on V \ removed.
std::vector<VertexSet> components_without(const Graph& g, std::span<const Vertex> removed);

// Throws InputError if any vertex id is out of range.
ValidationReport validate_partition(const Graph& g, const Partition& p);

ValidationReport validate_separator(const Graph& g, const Separator& s);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // new id -> old id
  std::vector<Vertex> to_child;   // old id -> new id, -1 when dropped
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

bool is_connected(const Graph& g);

// Sparsity |S| / (|A u S| * |B u S|); requires A and B nonempty.
double sparsity(const Partition& p);

VertexSet normalized(VertexSet s);

}  // namespace seplab
