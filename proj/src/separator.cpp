#include "seplab/separator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>

#include "seplab/congestion.hpp"
#include "seplab/cutfinder.hpp"
#include "seplab/errors.hpp"
#include "seplab/geometry.hpp"
#include "seplab/parallel.hpp"

namespace seplab {

namespace {

bool is_complete(const Graph& g) {
  const std::size_t n = static_cast<std::size_t>(g.n());
  return g.m() == n * (n - 1) / 2;
}

VertexSet to_parent(const InducedSubgraph& sub, const VertexSet& local) {
  VertexSet out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(sub.to_parent[v]);
  return normalized(std::move(out));
}

}  // namespace

SeparatorRun build_separator(const Graph& g, double eps, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  const int limit = balance_limit(g.n());
  SeparatorRun run;
  std::vector<VertexSet> active = components(g);
  VertexSet sep;

  for (std::uint64_t round = 0;; ++round) {
    // Largest oversized component; ties go to the one with the smallest vertex.
    auto pick = active.end();
    for (auto it = active.begin(); it != active.end(); ++it) {
      if (static_cast<int>(it->size()) <= limit) continue;
      if (pick == active.end() || it->size() > pick->size() ||
          (it->size() == pick->size() && it->front() < pick->front())) {
        pick = it;
      }
    }
    if (pick == active.end()) break;

    VertexSet comp = std::move(*pick);
    active.erase(pick);
    const InducedSubgraph sub = induced_subgraph(g, comp);

    SeparatorRound rec;
    rec.component = comp;
    VertexSet local_cut;
    bool peel = is_complete(sub.graph);
    if (!peel) {
      try {
        SparseCut cut = best_sparse_cut(sub.graph, eps, seed + round);
        local_cut = cut.report.partition.S;
        rec.sparsity = cut.report.sparsity;
        rec.vcong_lb = cut.vcong_lb;
        rec.vcong_ub = cut.vcong_ub;
        rec.mwu_converged = cut.mwu_converged;
      } catch (const NoValidPartition&) {
        peel = true;
      }
    }
    if (peel) {
      local_cut = {0};
      rec.clique_peel = true;
      rec.sparsity = std::numeric_limits<double>::quiet_NaN();
    }
    rec.added = to_parent(sub, local_cut);
    sep.insert(sep.end(), rec.added.begin(), rec.added.end());

    for (const VertexSet& part : components_without(sub.graph, local_cut)) {
      active.push_back(to_parent(sub, part));
    }
    run.rounds.push_back(std::move(rec));
  }

  run.separator.S = normalized(std::move(sep));
  run.separator.parts = components_without(g, run.separator.S);
  run.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return run;
}

Family parse_family(const std::string& name) {
  if (name == "segments") return Family::kSegments;
  if (name == "grid") return Family::kGrid;
  throw InputError("unknown family '" + name + "' (expected segments or grid)");
}

const char* family_name(Family f) { return f == Family::kSegments ? "segments" : "grid"; }

double separator_ratio(std::size_t sep_size, std::size_t m) {
  if (m == 0) return 0.0;
  const double md = static_cast<double>(m);
  return static_cast<double>(sep_size) / (std::sqrt(md) * std::log2(md + 2.0));
}

std::vector<ExperimentRow> separator_experiment(Family family, const std::vector<int>& sizes,
                                                const std::vector<std::uint64_t>& seeds,
                                                double eps) {
  if (sizes.empty()) throw InputError("experiment needs at least one size");
  if (seeds.empty()) throw InputError("experiment needs at least one seed");
  std::vector<ExperimentRow> rows(sizes.size() * seeds.size());
  parallel_for(rows.size(), [&](std::size_t cell) {
    const int size = sizes[cell / seeds.size()];
    const std::uint64_t seed = seeds[cell % seeds.size()];
    const auto start = std::chrono::steady_clock::now();
    const GeneratedInstance inst = family == Family::kSegments
                                       ? gen_random_segments(size, kSegmentCoordRange, seed)
                                       : gen_grid_strings(size);
    const SeparatorRun run = build_separator(inst.graph, eps, seed);
    ExperimentRow& row = rows[cell];
    row.size = size;
    row.n = inst.graph.n();
    row.m = inst.graph.m();
    row.sep_size = run.separator.S.size();
    row.ratio = separator_ratio(row.sep_size, row.m);
    row.rounds = run.rounds.size();
    row.seed = seed;
    row.valid = validate_separator(inst.graph, run.separator).ok;
    if (!run.rounds.empty() && !run.rounds.front().clique_peel) {
      row.vcong_lb = run.rounds.front().vcong_lb;
      row.vcong_ub = run.rounds.front().vcong_ub;
    } else {
      const VertexSet largest = components(inst.graph).front();
      const InducedSubgraph sub = induced_subgraph(inst.graph, largest);
      if (sub.graph.m() > 0) {
        MwuOptions opts;
        opts.keep_flow = false;
        MwuResult res;
        try {
          res = vcong_mwu(sub.graph, eps, seed, opts);
        } catch (const MwuConvergenceError& e) {
          res = e.best();
        }
        row.vcong_lb = res.lower;
        row.vcong_ub = res.upper;
      }
    }
    row.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  });
  return rows;
}

std::string experiment_csv(const std::vector<ExperimentRow>& rows) {
  std::string out = kExperimentCsvHeader;
  out += '\n';
  char buf[512];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%d,%zu,%zu,%.10g,%.10g,%.10g,%zu,%.3f,%llu\n", r.n, r.m,
                  r.sep_size, r.ratio, r.vcong_lb, r.vcong_ub, r.rounds, r.runtime_ms,
                  static_cast<unsigned long long>(r.seed));
    out += buf;
  }
  return out;
}

}  // namespace seplab
