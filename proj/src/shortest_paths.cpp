#include "seplab/shortest_paths.hpp"

#include <algorithm>
#include <limits>

#include "seplab/errors.hpp"
#include "seplab/kernels.hpp"

namespace seplab {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

WeightMatrix::WeightMatrix(const Graph& g, std::span<const double> s)
    : n_(g.n()), w_(static_cast<std::size_t>(g.n()) * g.n(), kInf) {
  reweight(g, s);
}

void WeightMatrix::reweight(const Graph& g, std::span<const double> s) {
  if (g.n() != n_ || static_cast<int>(s.size()) != n_) {
    throw InputError("weighting size does not match graph");
  }
  for (auto [u, v] : g.edges()) {
    const double w = (s[u] + s[v]) / 2.0;
    w_[static_cast<std::size_t>(u) * n_ + v] = w;
    w_[static_cast<std::size_t>(v) * n_ + u] = w;
  }
}

std::vector<Vertex> ShortestPathTree::path_to(Vertex target) const {
  std::vector<Vertex> path;
  if (dist[target] == kInf) return path;
  for (Vertex v = target; v != -1; v = pred[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

void shortest_path_tree(const WeightMatrix& w, Vertex source, ShortestPathTree& out) {
  const auto& k = kernels::active();
  const std::size_t n = static_cast<std::size_t>(w.n());
  out.source = source;
  out.dist.assign(n, kInf);
  out.pred.assign(n, -1);
  std::vector<double> key(n, kInf);
  out.dist[source] = 0.0;
  key[source] = 0.0;
  for (std::size_t round = 0; round < n; ++round) {
    const std::size_t u = k.argmin(key.data(), n);
    if (key[u] == kInf) break;
    key[u] = kInf;
    // Settled vertices have dist <= dist[u] and are never strictly improved.
    k.relax_row(out.dist.data(), key.data(), out.pred.data(), w.row(static_cast<int>(u)),
                out.dist[u], static_cast<int>(u), n);
  }
}

std::vector<double> all_pairs_distances(const Graph& g, std::span<const double> s) {
  const int n = g.n();
  WeightMatrix w(g, s);
  std::vector<double> d(static_cast<std::size_t>(n) * n);
  ShortestPathTree tree;
  for (int u = 0; u < n; ++u) {
    shortest_path_tree(w, u, tree);
    std::copy(tree.dist.begin(), tree.dist.end(), d.begin() + static_cast<std::size_t>(u) * n);
  }
  // Symmetrize so d(u, v) and d(v, u) agree bit-for-bit.
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double m = std::min(d[static_cast<std::size_t>(u) * n + v],
                                d[static_cast<std::size_t>(v) * n + u]);
      d[static_cast<std::size_t>(u) * n + v] = m;
      d[static_cast<std::size_t>(v) * n + u] = m;
    }
  }
  return d;
}

}  // namespace seplab
