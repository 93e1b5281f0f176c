#include "seplab/drawing.hpp"

#include <cmath>
#include <random>

#include "seplab/errors.hpp"
#include "seplab/kernels.hpp"
#include "seplab/parallel.hpp"

namespace seplab {

PathSample sample_paths(const Graph& g, const Flow& f, std::uint64_t seed) {
  if (f.n != g.n() || f.pairs.size() != pair_count(g.n())) {
    throw InputError("flow does not match graph");
  }
  PathSample sample;
  sample.n = g.n();
  sample.seed = seed;
  sample.paths.reserve(f.pairs.size());
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (const auto& d : f.pairs) {
    if (d.paths.empty()) throw InputError("demand without paths");
    double total = 0.0;
    for (const auto& wp : d.paths) total += wp.weight;
    const double target = unit(rng) * total;
    std::size_t chosen = d.paths.size() - 1;
    double acc = 0.0;
    for (std::size_t i = 0; i < d.paths.size(); ++i) {
      acc += d.paths[i].weight;
      if (target < acc) {
        chosen = i;
        break;
      }
    }
    sample.paths.push_back(d.paths[chosen].path);
  }
  return sample;
}

std::uint64_t count_conflicts(const Graph& g, const PathSample& sample) {
  const std::size_t k = sample.paths.size();
  // Bitsets padded to a multiple of 256 bits.
  const std::size_t words = (static_cast<std::size_t>(g.n()) + 255) / 256 * 4;
  std::vector<std::uint64_t> on_path(k * words, 0);
  std::vector<std::uint64_t> touched(k * words, 0);
  auto set = [words](std::vector<std::uint64_t>& bits, std::size_t row, Vertex v) {
    bits[row * words + static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
  };
  for (std::size_t i = 0; i < k; ++i) {
    for (Vertex w : sample.paths[i]) {
      set(on_path, i, w);
      set(touched, i, w);
      for (Vertex x : g.neighbors(w)) set(touched, i, x);
    }
  }
  const auto& kern = kernels::active();
  std::uint64_t conflicts = 0;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    conflicts += kern.count_intersecting(touched.data() + i * words, on_path.data() + (i + 1) * words,
                                         k - i - 1, words);
  }
  return conflicts;
}

ConflictBoundReport conflict_bound_for_flow(const Graph& g, const Flow& f, int trials,
                                            std::uint64_t seed) {
  if (trials < 1) throw InputError("need at least one trial");
  const CongestionProfile prof = congestion_of(g, f);
  ConflictBoundReport rep;
  rep.trials = trials;
  rep.congestion = prof.max_congestion;
  rep.bound = 4.0 * static_cast<double>(g.m() + static_cast<std::size_t>(g.n())) *
              rep.congestion * rep.congestion;
  rep.counts.assign(trials, 0);
  parallel_for(static_cast<std::size_t>(trials), [&](std::size_t t) {
    rep.counts[t] = count_conflicts(g, sample_paths(g, f, seed + t));
  });
  std::uint64_t total = 0;
  for (std::uint64_t c : rep.counts) total += c;
  rep.mean_conflicts = static_cast<double>(total) / trials;
  rep.margin = rep.bound - rep.mean_conflicts;
  return rep;
}

ConflictBoundReport verify_conflict_bound(const Graph& g, double eps, int trials,
                                          std::uint64_t seed) {
  MwuResult res;
  try {
    res = vcong_mwu(g, eps, seed);
  } catch (const MwuConvergenceError& e) {
    res = e.best();
  }
  return conflict_bound_for_flow(g, res.flow, trials, seed);
}

LowerBoundReport verify_lower_bound(const Graph& g, bool is_string, double eps,
                                    std::uint64_t seed) {
  if (!is_string) {
    throw InputError("verify_lower_bound refused: the bound is claimed only for string graphs");
  }
  MwuOptions opts;
  opts.keep_flow = false;
  MwuResult res;
  try {
    res = vcong_mwu(g, eps, seed, opts);
  } catch (const MwuConvergenceError& e) {
    res = e.best();
  }
  LowerBoundReport rep;
  rep.n = g.n();
  rep.m = g.m();
  rep.vcong_lb = res.lower;
  rep.vcong_ub = res.upper;
  const double n = static_cast<double>(g.n());
  rep.ratio = g.m() == 0 ? 0.0 : res.lower * std::sqrt(static_cast<double>(g.m())) / (n * n);
  return rep;
}

}  // namespace seplab
