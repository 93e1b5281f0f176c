#include "seplab/cutfinder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "seplab/kernels.hpp"
#include "seplab/shortest_paths.hpp"

namespace seplab {

namespace {

// Minimum vertex covers of the bipartite graph formed by the edges of g that
// join a `left` vertex to a right vertex, ignoring `removed` vertices. By
// Konig's theorem a maximum matching yields two extreme minimum covers: the
// one closest to the left side and the one closest to the right side. They
// are the two extreme minimum cuts of the unit-capacity network
// source -> L -> R -> sink.
class CrossingCover {
 public:
  CrossingCover(const Graph& g, const std::vector<char>& left, const std::vector<char>& removed)
      : g_(g), left_(left), removed_(removed), match_(g.n(), -1), stamp_(g.n(), 0) {
    for (Vertex x = 0; x < g.n(); ++x) {
      if (!left_[x] || removed_[x]) continue;
      ++round_;
      augment(x);
    }
  }

  // Left cover: (L \ Z) u (R n Z), Z reachable from unmatched left vertices by
  // alternating paths.
  VertexSet cover_near_left() const { return cover(true); }
  // Right cover: (R \ Z') u (L n Z'), Z' reachable from unmatched right vertices.
  VertexSet cover_near_right() const { return cover(false); }

 private:
  bool crossing(Vertex a, Vertex b) const {
    return left_[a] != left_[b] && !removed_[a] && !removed_[b];
  }

  bool augment(Vertex x) {
    for (Vertex y : g_.neighbors(x)) {
      if (!crossing(x, y) || stamp_[y] == round_) continue;
      stamp_[y] = round_;
      if (match_[y] < 0 || augment(match_[y])) {
        match_[y] = x;
        match_[x] = y;
        return true;
      }
    }
    return false;
  }

  VertexSet cover(bool from_left) const {
    const int n = g_.n();
    std::vector<char> reach(n, 0);
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < n; ++v) {
      const bool start_side = from_left ? left_[v] : !left_[v];
      if (start_side && !removed_[v] && match_[v] < 0) {
        reach[v] = 1;
        queue.push_back(v);
      }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex a = queue[head];
      const bool on_start_side = from_left ? left_[a] : !left_[a];
      if (on_start_side) {
        for (Vertex b : g_.neighbors(a)) {
          if (crossing(a, b) && match_[a] != b && !reach[b]) {
            reach[b] = 1;
            queue.push_back(b);
          }
        }
      } else if (match_[a] >= 0 && !reach[match_[a]]) {
        reach[match_[a]] = 1;
        queue.push_back(match_[a]);
      }
    }
    VertexSet out;
    for (Vertex v = 0; v < n; ++v) {
      if (removed_[v]) continue;
      const bool on_start_side = from_left ? left_[v] : !left_[v];
      if (on_start_side ? !reach[v] : reach[v]) out.push_back(v);
    }
    return out;
  }

  const Graph& g_;
  const std::vector<char>& left_;
  const std::vector<char>& removed_;
  std::vector<int> match_;
  std::vector<int> stamp_;
  int round_ = 0;
};

struct Candidate {
  bool valid = false;
  double sparsity = std::numeric_limits<double>::infinity();
  Partition partition;
};

Candidate evaluate(const std::vector<char>& left, const VertexSet& cut) {
  Candidate c;
  const int n = static_cast<int>(left.size());
  std::vector<char> in_cut(n, 0);
  for (Vertex v : cut) in_cut[v] = 1;
  for (Vertex v = 0; v < n; ++v) {
    if (in_cut[v]) continue;
    (left[v] ? c.partition.A : c.partition.B).push_back(v);
  }
  c.partition.S = cut;
  c.valid = !c.partition.A.empty() && !c.partition.B.empty();
  if (c.valid) c.sparsity = sparsity(c.partition);
  return c;
}

std::vector<Vertex> sweep_order(std::span<const double> f) {
  std::vector<Vertex> order(f.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return f[a] < f[b]; });
  return order;
}

void check_spread(std::span<const double> f) {
  if (f.size() < 2 || std::all_of(f.begin(), f.end(), [&](double x) { return x == f[0]; })) {
    throw InputError("embedding has no spread");
  }
}

VertexSet side_endpoints(const Graph& g, const std::vector<char>& left, bool want_left) {
  VertexSet out;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (static_cast<bool>(left[v]) != want_left) continue;
    for (Vertex w : g.neighbors(v)) {
      if (left[w] != left[v]) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

template <typename CandidateFn>
SparsityReport sweep(const Graph& g, std::span<const double> f, CandidateFn&& candidates) {
  if (static_cast<int>(f.size()) != g.n()) throw InputError("embedding size does not match graph");
  check_spread(f);
  const int n = g.n();
  const std::vector<Vertex> order = sweep_order(f);
  std::vector<char> left(n, 0);
  Candidate best;
  double best_threshold = 0.0;
  for (int i = 0; i + 1 < n; ++i) {
    left[order[i]] = 1;
    for (Candidate& c : candidates(left, order)) {
      if (c.valid && c.sparsity < best.sparsity) {
        best = std::move(c);
        best_threshold = f[order[i]];
      }
    }
  }
  if (!best.valid) throw NoValidPartition("no threshold yields a partition with A and B nonempty");
  return {std::move(best.partition), best.sparsity, best_threshold};
}

}  // namespace

double pairwise_spread(std::span<const double> f) {
  std::vector<double> sorted(f.begin(), f.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double total = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    total += sorted[i] * (2.0 * static_cast<double>(i) - n + 1.0);
  }
  return total;
}

double lipschitz_ratio(std::span<const double> f, std::span<const double> dist,
                       std::span<const Edge> pairs) {
  const std::size_t n = f.size();
  double worst = 0.0;
  for (auto [u, v] : pairs) {
    const double diff = std::fabs(f[u] - f[v]);
    const double d = dist[static_cast<std::size_t>(u) * n + v];
    if (diff == 0.0) continue;
    worst = std::max(worst, d > 0.0 ? diff / d : std::numeric_limits<double>::infinity());
  }
  return worst;
}

std::vector<double> distance_to_set(std::span<const double> dist, int n,
                                    std::span<const Vertex> subset) {
  const auto& k = kernels::active();
  std::vector<double> f(n, std::numeric_limits<double>::infinity());
  for (Vertex t : subset) k.min_into(f.data(), dist.data() + static_cast<std::size_t>(t) * n, n);
  return f;
}

LineEmbedding bourgain_line(const Graph& g, const VertexWeighting& s, std::uint64_t seed) {
  const int n = g.n();
  LineEmbedding best;
  best.f.assign(n, 0.0);
  if (n < 2) return best;
  const std::vector<double> dist = all_pairs_distances(g, s.s);

  const int log_n = static_cast<int>(std::ceil(std::log2(static_cast<double>(n))));
  const int draws = std::max(4, 2 * log_n);
  std::mt19937_64 rng(seed);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  bool have = false;
  for (int scale = 0; scale <= log_n; ++scale) {
    const int size = std::min(n, 1 << scale);
    for (int d = 0; d < draws; ++d) {
      // Partial Fisher-Yates: perm[0..size) becomes a uniform size-subset.
      for (int i = 0; i < size; ++i) {
        std::uniform_int_distribution<int> pick(i, n - 1);
        std::swap(perm[i], perm[pick(rng)]);
      }
      std::vector<double> f = distance_to_set(dist, n, std::span<const Vertex>(perm.data(), size));
      const double spread = pairwise_spread(f);
      if (!have || spread > best.spread) {
        best.f = std::move(f);
        best.spread = spread;
        have = true;
      }
    }
  }
  best.lipschitz_certificate = lipschitz_ratio(best.f, dist, g.edges());
  return best;
}

SparsityReport sweep_round(const Graph& g, std::span<const double> f) {
  const int n = g.n();
  const std::vector<char> none(n, 0);
  std::vector<char> removed(n, 0);
  return sweep(g, f, [&](const std::vector<char>& left, const std::vector<Vertex>& order) {
    std::vector<Candidate> out;
    {
      CrossingCover cc(g, left, none);
      out.push_back(evaluate(left, cc.cover_near_left()));
      out.push_back(evaluate(left, cc.cover_near_right()));
    }
    out.push_back(evaluate(left, side_endpoints(g, left, true)));
    out.push_back(evaluate(left, side_endpoints(g, left, false)));

    // Keep the two extreme vertices out of S: their crossing neighbours are
    // forced into the cut, the rest is covered minimally.
    const Vertex lo = order.front();
    const Vertex hi = order.back();
    if (!g.adjacent(lo, hi)) {
      VertexSet forced;
      for (Vertex w : g.neighbors(lo)) if (!left[w]) forced.push_back(w);
      for (Vertex w : g.neighbors(hi)) if (left[w]) forced.push_back(w);
      std::fill(removed.begin(), removed.end(), 0);
      for (Vertex w : forced) removed[w] = 1;
      CrossingCover cc(g, left, removed);
      VertexSet cut = cc.cover_near_left();
      cut.insert(cut.end(), forced.begin(), forced.end());
      out.push_back(evaluate(left, normalized(std::move(cut))));
    }
    return out;
  });
}

SparsityReport naive_sweep_round(const Graph& g, std::span<const double> f) {
  return sweep(g, f, [&](const std::vector<char>& left, const std::vector<Vertex>&) {
    return std::vector<Candidate>{evaluate(left, side_endpoints(g, left, true))};
  });
}

SparseCut best_sparse_cut(const Graph& g, double eps, std::uint64_t seed) {
  if (g.n() < 2) throw InputError("best_sparse_cut needs at least 2 vertices");
  MwuOptions opts;
  opts.keep_flow = false;
  MwuResult dual;
  try {
    dual = vcong_mwu(g, eps, seed, opts);
  } catch (const MwuConvergenceError& e) {
    dual = e.best();
  }
  SparseCut cut;
  cut.vcong_lb = dual.lower;
  cut.vcong_ub = dual.upper;
  cut.mwu_converged = dual.converged;
  cut.embedding = bourgain_line(g, dual.weighting, seed);
  cut.report = sweep_round(g, cut.embedding.f);
  cut.kappa = cut.report.sparsity * cut.vcong_lb / std::log2(static_cast<double>(g.n()));
  return cut;
}

}  // namespace seplab
