#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seplab/graph.hpp"

namespace seplab {

struct SeparatorRound {
  VertexSet component;      // original ids of the component that was cut
  double sparsity = 0.0;    // of the cut found inside it; NaN for a clique peel
  VertexSet added;          // vertices moved into S this round
  double vcong_lb = 0.0;    // dual bracket of the component (0 for a clique peel)
  double vcong_ub = 0.0;
  bool clique_peel = false;  // component was complete, one vertex removed
  bool mwu_converged = true;
};

struct SeparatorRun {
  Separator separator;
  std::vector<SeparatorRound> rounds;
  double runtime_ms = 0.0;
};

// Repeatedly cuts the largest component with more than floor(2n/3) vertices
// (n = the original vertex count) by best_sparse_cut, moving the cut into S.
// Round r uses seed + r. A complete component admits no sparse cut; it loses
// its smallest vertex instead.
SeparatorRun build_separator(const Graph& g, double eps, std::uint64_t seed);

enum class Family { kSegments, kGrid };

Family parse_family(const std::string& name);
const char* family_name(Family f);

struct ExperimentRow {
  int size = 0;  // generator parameter (segment count or grid k)
  int n = 0;
  std::size_t m = 0;
  std::size_t sep_size = 0;
  double ratio = 0.0;  // sep_size / (sqrt(m) * log2(m + 2))
  double vcong_lb = 0.0;
  double vcong_ub = 0.0;
  std::size_t rounds = 0;
  double runtime_ms = 0.0;
  std::uint64_t seed = 0;
  bool valid = false;
};

inline constexpr std::int64_t kSegmentCoordRange = 1000;

// sep_size / (sqrt(m) * log2(m + 2)); 0 for edgeless graphs.
double separator_ratio(std::size_t sep_size, std::size_t m);

// One row per (size, seed) in that order. The vcong bracket is taken from the
// first round (the whole graph's largest component); graphs that need no round
// get the bracket of their largest component when it has an edge, else 0.
std::vector<ExperimentRow> separator_experiment(Family family, const std::vector<int>& sizes,
                                                const std::vector<std::uint64_t>& seeds,
                                                double eps);

inline constexpr const char* kExperimentCsvHeader =
    "n,m,sep_size,ratio,vcong_lb,vcong_ub,rounds,runtime_ms,seed";

std::string experiment_csv(const std::vector<ExperimentRow>& rows);

}  // namespace seplab
