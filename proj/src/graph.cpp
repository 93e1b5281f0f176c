#include "seplab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "seplab/errors.hpp"

namespace seplab {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw InputError("negative vertex count");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edge [" + std::to_string(u) + "," + std::to_string(v) +
                       "] references a vertex outside 0.." + std::to_string(n - 1));
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw InputError("duplicate edge [" + std::to_string(dup->first) + "," +
                     std::to_string(dup->second) + "]");
  }

  std::vector<int> deg(n, 0);
  for (auto [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adj_.resize(offsets_[n]);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (auto [u, v] : edges_) {
    adj_[fill[u]++] = v;
    adj_[fill[v]++] = u;
  }
  for (int v = 0; v < n; ++v) {
    std::sort(adj_.begin() + offsets_[v], adj_.begin() + offsets_[v + 1]);
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer cycle
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph(10, e);
}

namespace {

std::vector<VertexSet> collect_components(const Graph& g, const std::vector<char>& removed) {
  const int n = g.n();
  std::vector<char> seen(removed);
  std::vector<VertexSet> comps;
  std::vector<Vertex> stack;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::stable_sort(comps.begin(), comps.end(),
                   [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
  return comps;
}

}  // namespace

std::vector<VertexSet> components(const Graph& g) {
  return collect_components(g, std::vector<char>(g.n(), 0));
}

std::vector<VertexSet> components_without(const Graph& g, std::span<const Vertex> removed) {
  std::vector<char> mask(g.n(), 0);
  for (Vertex v : removed) {
    if (v < 0 || v >= g.n()) throw InputError("vertex " + std::to_string(v) + " out of range");
    mask[v] = 1;
  }
  return collect_components(g, mask);
}

ValidationReport validate_partition(const Graph& g, const Partition& p) {
  const int n = g.n();
  // 0 = unassigned, 1 = A, 2 = B, 3 = S
  std::vector<int> side(n, 0);
  ValidationReport report;
  auto fail = [&report](std::string msg) {
    report.ok = false;
    report.violations.push_back(std::move(msg));
  };
  auto assign = [&](const VertexSet& set, int label, const char* name) {
    for (Vertex v : set) {
      if (v < 0 || v >= n) {
        throw InputError(std::string("partition set ") + name + " contains vertex " +
                         std::to_string(v) + " outside 0.." + std::to_string(n - 1));
      }
      if (side[v] != 0) {
        fail("vertex " + std::to_string(v) + " appears in more than one set");
      } else {
        side[v] = label;
      }
    }
  };
  assign(p.A, 1, "A");
  assign(p.B, 2, "B");
  assign(p.S, 3, "S");
  for (int v = 0; v < n; ++v) {
    if (side[v] == 0) fail("vertex " + std::to_string(v) + " is not covered");
  }
  for (auto [u, v] : g.edges()) {
    if ((side[u] == 1 && side[v] == 2) || (side[u] == 2 && side[v] == 1)) {
      fail("edge [" + std::to_string(u) + "," + std::to_string(v) + "] joins A and B");
    }
  }
  return report;
}

ValidationReport validate_separator(const Graph& g, const Separator& s) {
  ValidationReport report;
  const int limit = balance_limit(g.n());
  for (Vertex v : s.S) {
    if (v < 0 || v >= g.n()) {
      report.ok = false;
      report.violations.push_back("separator vertex " + std::to_string(v) + " out of range");
      return report;
    }
  }
  for (const auto& comp : components_without(g, s.S)) {
    if (static_cast<int>(comp.size()) > limit) {
      report.ok = false;
      report.violations.push_back("component containing vertex " + std::to_string(comp.front()) +
                                  " has " + std::to_string(comp.size()) + " > " +
                                  std::to_string(limit) + " vertices");
    }
  }
  // The recorded parts must not be joined by any edge.
  std::vector<int> part_of(g.n(), -1);
  for (std::size_t i = 0; i < s.parts.size(); ++i) {
    for (Vertex v : s.parts[i]) {
      if (v >= 0 && v < g.n()) part_of[v] = static_cast<int>(i);
    }
  }
  for (auto [u, v] : g.edges()) {
    if (part_of[u] >= 0 && part_of[v] >= 0 && part_of[u] != part_of[v]) {
      report.ok = false;
      report.violations.push_back("edge [" + std::to_string(u) + "," + std::to_string(v) +
                                  "] joins two parts");
    }
  }
  return report;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  InducedSubgraph sub;
  sub.to_child.assign(g.n(), -1);
  VertexSet sorted = normalized(VertexSet(keep.begin(), keep.end()));
  for (Vertex v : sorted) {
    if (v < 0 || v >= g.n()) throw InputError("vertex " + std::to_string(v) + " out of range");
    sub.to_child[v] = static_cast<int>(sub.to_parent.size());
    sub.to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (sub.to_child[u] >= 0 && sub.to_child[v] >= 0) {
      edges.emplace_back(sub.to_child[u], sub.to_child[v]);
    }
  }
  sub.graph = Graph(static_cast<int>(sorted.size()), edges);
  return sub;
}

bool is_connected(const Graph& g) { return g.n() <= 1 || components(g).size() == 1; }

double sparsity(const Partition& p) {
  const double s = static_cast<double>(p.S.size());
  return s / ((static_cast<double>(p.A.size()) + s) * (static_cast<double>(p.B.size()) + s));
}

VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace seplab
