// Acceptance suite: prints one PASS/FAIL line per criterion and exits nonzero
// if any fails. `--fit` prints the measured calibration constants instead of
// asserting them.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "calibration.hpp"
#include "seplab/congestion.hpp"
#include "seplab/cutfinder.hpp"
#include "seplab/drawing.hpp"
#include "seplab/errors.hpp"
#include "seplab/geometry.hpp"
#include "seplab/separator.hpp"
#include "seplab/shortest_paths.hpp"
#include "test_graphs.hpp"

#ifndef SEPLAB_CLI
#error "SEPLAB_CLI must name the command-line binary"
#endif

using namespace seplab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

constexpr double kEps = 0.1;
const int kSegmentSizes[] = {20, 40, 80, 160};
constexpr std::uint64_t kSeeds = 10;

struct Instance {
  std::string label;
  Graph graph;     // the generated string graph
  Graph largest;   // its largest connected component
};

Graph largest_component(const Graph& g) {
  const auto comps = components(g);
  return induced_subgraph(g, comps.front()).graph;
}

std::vector<Instance> segment_suite() {
  std::vector<Instance> out;
  for (int n : kSegmentSizes) {
    for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
      Graph g = gen_random_segments(n, kSegmentCoordRange, seed).graph;
      Graph big = largest_component(g);
      out.push_back({"segments n=" + std::to_string(n) + " seed=" + std::to_string(seed),
                     std::move(g), std::move(big)});
    }
  }
  return out;
}

std::vector<Instance> grid_suite() {
  std::vector<Instance> out;
  for (int k = 3; k <= 12; ++k) {
    Graph g = gen_grid_strings(k).graph;
    Graph copy = g;
    out.push_back({"grid k=" + std::to_string(k), std::move(g), std::move(copy)});
  }
  return out;
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Fitted {
  double kappa = 0.0;
  double kappa_sep = 0.0;
  double c_fit = std::numeric_limits<double>::infinity();
  double c_spread = std::numeric_limits<double>::infinity();
};

// Embeddings seen anywhere in the run, for the Lipschitz criterion.
struct EmbeddingLog {
  double max_certificate = 0.0;
  std::size_t count = 0;
  void add(const LineEmbedding& e) {
    max_certificate = std::max(max_certificate, e.lipschitz_certificate);
    ++count;
  }
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

Outcome criterion1() {
  struct Case {
    const char* name;
    Graph g;
    double value;
  };
  const Case cases[] = {{"P3", path_graph(3), 2.0},        {"K3", complete_graph(3), 1.0},
                        {"K4", complete_graph(4), 1.5},    {"K13", star_graph(3), 4.5},
                        {"C4", cycle_graph(4), 2.0}};
  Outcome o;
  double worst_time = 0.0, worst_err = 0.0;
  for (const auto& c : cases) {
    const auto t0 = Clock::now();
    const double v = vcong_exact(c.g).value;
    const double dt = seconds_since(t0);
    worst_time = std::max(worst_time, dt);
    worst_err = std::max(worst_err, std::fabs(v - c.value));
    if (std::fabs(v - c.value) > 1e-7 || dt >= 5.0) {
      o.pass = false;
      o.detail += std::string(c.name) + "=" + fmt("%.12g", v) + " ";
    }
  }
  o.detail += "max |err| " + fmt("%.2e", worst_err) + ", slowest " + fmt("%.3f", worst_time) + " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto t0 = Clock::now();
  double worst_lo = std::numeric_limits<double>::infinity(), worst_hi = 0.0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    std::mt19937_64 local(seed);
    const int n = 2 + static_cast<int>(local() % 7);
    const Graph g = testing::random_connected_graph(n, 0.35, local);
    const double exact = vcong_exact(g).value;
    MwuResult b;
    try {
      b = vcong_mwu(g, kEps, seed);
    } catch (const MwuConvergenceError& e) {
      o.pass = false;
      o.detail += "seed " + std::to_string(seed) + " hit phase cap; ";
      b = e.best();
    }
    worst_lo = std::min(worst_lo, b.lower / exact);
    worst_hi = std::max(worst_hi, b.upper / exact);
    const bool ok = b.lower <= exact + 1e-7 && exact <= b.upper + 1e-7 &&
                    b.lower >= (1.0 - kEps) * exact && b.upper <= (1.0 + kEps) * exact;
    if (!ok) {
      o.pass = false;
      o.detail += "seed " + std::to_string(seed) + " bracket [" + fmt("%.6g", b.lower) + ", " +
                  fmt("%.6g", b.upper) + "] vs " + fmt("%.6g", exact) + "; ";
    }
  }
  const double dt = seconds_since(t0);
  if (dt >= 30.0) o.pass = false;
  o.detail += "lb/exact >= " + fmt("%.4f", worst_lo) + ", ub/exact <= " + fmt("%.4f", worst_hi) +
              ", " + fmt("%.2f", dt) + " s total";
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> w(0.0, 1.0);
  double min_slack = std::numeric_limits<double>::infinity();
  int violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const Graph g = testing::random_connected_graph(n, 0.3, rng);
    const Flow f = testing::random_flow(g, rng);
    std::vector<double> s(n);
    for (auto& x : s) x = w(rng);
    // Sparse weightings as well as dense ones.
    if (trial % 3 == 0)
      for (auto& x : s) x = (rng() % 3 == 0) ? x : 0.0;
    if (std::all_of(s.begin(), s.end(), [](double x) { return x == 0.0; })) s[0] = 1.0;
    const auto dual = dual_objective(g, s);
    if (dual.pair_sum == 0.0) continue;
    const double cong = congestion_of(g, f).max_congestion;
    const double slack = cong - dual.pair_sum / dual.weight_sum;
    min_slack = std::min(min_slack, slack);
    if (slack < -1e-9) ++violations;
  }
  o.pass = violations == 0;
  o.detail = std::to_string(violations) + " violations, min slack " + fmt("%.3e", min_slack);
  return o;
}

struct CutStats {
  std::vector<SparseCut> cuts;  // one per segment instance
  double seconds_max = 0.0;
};

Outcome criterion5(const std::vector<Instance>& suite, bool fit, Fitted& fitted, EmbeddingLog& log,
                   CutStats& stats) {
  Outcome o;
  int checked = 0;
  for (const auto& inst : suite) {
    const Graph& g = inst.largest;
    if (g.n() < 2) continue;
    const auto t0 = Clock::now();
    SparseCut cut = best_sparse_cut(g, kEps, 0);
    const double dt = seconds_since(t0);
    stats.seconds_max = std::max(stats.seconds_max, dt);
    log.add(cut.embedding);
    fitted.c_spread = std::min(fitted.c_spread, cut.embedding.spread * std::log2(g.n()));
    fitted.kappa = std::max(fitted.kappa, cut.kappa);
    ++checked;
    const bool ok = validate_partition(g, cut.report.partition).ok && dt < 60.0 &&
                    (fit || cut.kappa <= calibration::kKappa);
    if (!ok) {
      o.pass = false;
      o.detail += inst.label + " kappa " + fmt("%.4f", cut.kappa) + " in " + fmt("%.1f", dt) + " s; ";
    }
    stats.cuts.push_back(std::move(cut));
  }
  o.detail += std::to_string(checked) + " instances, max kappa " + fmt("%.4f", fitted.kappa) +
              (fit ? "" : " (frozen " + fmt("%.4g", calibration::kKappa) + ")") + ", slowest " +
              fmt("%.2f", stats.seconds_max) + " s";
  return o;
}

Outcome criterion6(const std::vector<Instance>& suite, bool fit, Fitted& fitted) {
  Outcome o;
  const auto t0 = Clock::now();
  int invalid = 0;
  for (const auto& inst : suite) {
    const SeparatorRun run = build_separator(inst.graph, kEps, 0);
    const auto rep = validate_separator(inst.graph, run.separator);
    const double ratio = separator_ratio(run.separator.S.size(), inst.graph.m());
    fitted.kappa_sep = std::max(fitted.kappa_sep, ratio);
    if (!rep.ok) ++invalid;
    if (!rep.ok || (!fit && ratio > calibration::kKappaSep)) {
      o.pass = false;
      o.detail += inst.label + " |S|=" + std::to_string(run.separator.S.size()) +
                  (rep.ok ? "" : " invalid") + "; ";
    }
  }
  const double dt = seconds_since(t0);
  if (dt >= 600.0) o.pass = false;
  o.detail += std::to_string(suite.size()) + " runs, " + std::to_string(invalid) +
              " invalid, max ratio " + fmt("%.4f", fitted.kappa_sep) +
              (fit ? "" : " (frozen " + fmt("%.4g", calibration::kKappaSep) + ")") + ", " +
              fmt("%.1f", dt) + " s total";
  return o;
}

Outcome criterion7(const std::vector<Instance>& suite) {
  Outcome o;
  const auto t0 = Clock::now();
  // Deterministic fixtures.
  const Graph p3 = path_graph(3);
  const auto fp3 = single_path_flow(3, {{0, 1}, {0, 1, 2}, {1, 2}});
  const std::uint64_t c_p3 = count_conflicts(p3, sample_paths(p3, fp3, 0));
  std::vector<Path> direct;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) direct.push_back({u, v});
  const Graph k4 = complete_graph(4);
  const std::uint64_t c_k4 = count_conflicts(k4, sample_paths(k4, single_path_flow(4, direct), 0));
  if (c_p3 != 3 || c_k4 != 15) {
    o.pass = false;
    o.detail += "fixtures P3=" + std::to_string(c_p3) + " K4=" + std::to_string(c_k4) + "; ";
  }
  double min_rel = std::numeric_limits<double>::infinity();
  int checked = 0;
  for (const auto& inst : suite) {
    const Graph& g = inst.largest;
    if (g.n() < 2) continue;
    const auto rep = verify_conflict_bound(g, kEps, 200, 0);
    ++checked;
    min_rel = std::min(min_rel, rep.margin / rep.bound);
    if (rep.margin < 0.0) {
      o.pass = false;
      o.detail += inst.label + " mean " + fmt("%.1f", rep.mean_conflicts) + " > bound " +
                  fmt("%.1f", rep.bound) + "; ";
    }
  }
  o.detail += "fixtures P3=" + std::to_string(c_p3) + " K4=" + std::to_string(c_k4) + ", " +
              std::to_string(checked) + " instances, min margin/bound " + fmt("%.4f", min_rel) +
              ", " + fmt("%.1f", seconds_since(t0)) + " s";
  return o;
}

Outcome criterion8(const std::vector<Instance>& suite, const CutStats& cuts, bool fit,
                   Fitted& fitted) {
  Outcome o;
  std::size_t cut_idx = 0;
  int checked = 0;
  for (const auto& inst : suite) {
    const Graph& g = inst.largest;
    if (g.n() < 2) continue;
    double ratio;
    if (inst.label.rfind("segments", 0) == 0) {
      // Same certified lower bound the cut finder computed.
      const double lb = cuts.cuts.at(cut_idx++).vcong_lb;
      ratio = lb * std::sqrt(static_cast<double>(g.m())) / (static_cast<double>(g.n()) * g.n());
    } else {
      ratio = verify_lower_bound(g, true, kEps, 0).ratio;
    }
    ++checked;
    fitted.c_fit = std::min(fitted.c_fit, ratio);
    if (!(ratio > 0.0) || (!fit && ratio < calibration::kCFit)) {
      o.pass = false;
      o.detail += inst.label + " ratio " + fmt("%.5f", ratio) + "; ";
    }
  }
  o.detail += std::to_string(checked) + " string graphs, min ratio " + fmt("%.5f", fitted.c_fit) +
              (fit ? "" : " (frozen " + fmt("%.4g", calibration::kCFit) + ")");
  return o;
}

Outcome criterion4(EmbeddingLog& log, bool fit, const Fitted& fitted) {
  // Small random graphs with random weightings, on top of every cut run so far.
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> w(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 30);
    const Graph g = testing::random_connected_graph(n, 0.15, rng);
    VertexWeighting s{std::vector<double>(n)};
    for (auto& x : s.s) x = w(rng);
    const auto emb = bourgain_line(g, s, trial);
    // Recheck the certificate over all pairs, not just edges.
    const auto d = all_pairs_distances(g, s.s);
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    LineEmbedding all = emb;
    all.lipschitz_certificate = std::max(emb.lipschitz_certificate, lipschitz_ratio(emb.f, d, pairs));
    log.add(all);
  }
  Outcome o;
  o.pass = log.max_certificate <= 1.0 + 1e-9 && (fit || fitted.c_spread >= calibration::kCSpread);
  o.detail = std::to_string(log.count) + " embeddings, max certificate " +
             fmt("%.12f", log.max_certificate) + ", min spread*log2(n) " +
             fmt("%.4f", fitted.c_spread) +
             (fit ? "" : " (frozen " + fmt("%.4g", calibration::kCSpread) + ")");
  return o;
}

// ---- criterion 9 ----

int run_cli(const std::string& args) {
  const std::string cmd = std::string(SEPLAB_CLI) + " " + args + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string drop_runtime_column(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) {
    std::istringstream cells(line);
    std::string cell;
    for (int col = 0; std::getline(cells, cell, ','); ++col)
      if (col != 7) out += cell + ",";
    out += "\n";
  }
  return out;
}

Outcome criterion9() {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("seplab_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto p = [&dir](const std::string& name) { return (dir / name).string(); };
  struct Cmd {
    std::string name;
    std::string args;  // without --out
    bool csv = false;
  };
  run_cli("gen --family segments --n 60 --seed 5 --out " + p("seg.json"));
  run_cli("gen --family grid --k 6 --out " + p("grid.json"));
  const std::vector<Cmd> cmds = {
      {"gen-segments", "gen --family segments --n 60 --seed 5"},
      {"gen-grid", "gen --family grid --k 6"},
      {"vcong", "vcong --eps 0.1 --seed 2 --in " + p("grid.json")},
      {"cut", "cut --eps 0.1 --seed 2 --in " + p("grid.json")},
      {"separate", "separate --eps 0.1 --seed 2 --in " + p("seg.json")},
      {"verify-lemma1", "verify-lemma1 --trials 50 --seed 2 --in " + p("grid.json")},
      {"experiment", "experiment --family segments --sizes 20,40 --seeds 1..3", true}};
  int same = 0;
  for (const auto& c : cmds) {
    const int r1 = run_cli(c.args + " --out " + p("out1"));
    const int r2 = run_cli(c.args + " --out " + p("out2"));
    std::string a = slurp(p("out1")), b = slurp(p("out2"));
    if (c.csv) {
      a = drop_runtime_column(a);
      b = drop_runtime_column(b);
    }
    if (r1 != 0 || r2 != 0 || a.empty() || a != b) {
      o.pass = false;
      o.detail += c.name + " differs (exit " + std::to_string(r1) + "/" + std::to_string(r2) + "); ";
    } else {
      ++same;
    }
    fs::remove(p("out1"));
    fs::remove(p("out2"));
  }
  fs::remove_all(dir);
  o.detail += std::to_string(same) + "/" + std::to_string(cmds.size()) +
              " subcommands byte-identical (experiment without runtime_ms)";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const bool fit = argc > 1 && std::string(argv[1]) == "--fit";
  const auto t0 = Clock::now();
  const std::vector<Instance> segments = segment_suite();
  std::vector<Instance> full = segments;
  for (auto& g : grid_suite()) full.push_back(std::move(g));

  Fitted fitted;
  EmbeddingLog log;
  CutStats cuts;
  std::vector<std::pair<int, Outcome>> results;
  auto record = [&results](int id, Outcome o) {
    std::printf("criterion %d: %s  %s\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
    results.emplace_back(id, std::move(o));
  };

  record(1, criterion1());
  record(2, criterion2());
  record(3, criterion3());
  const Outcome c5 = criterion5(segments, fit, fitted, log, cuts);
  // Grid embeddings feed the Lipschitz and spread checks too.
  for (const auto& inst : grid_suite()) {
    const SparseCut cut = best_sparse_cut(inst.graph, kEps, 0);
    log.add(cut.embedding);
    fitted.c_spread = std::min(fitted.c_spread, cut.embedding.spread * std::log2(inst.graph.n()));
  }
  record(4, criterion4(log, fit, fitted));
  record(5, c5);
  record(6, criterion6(full, fit, fitted));
  record(7, criterion7(full));
  record(8, criterion8(full, cuts, fit, fitted));
  record(9, criterion9());

  if (fit) {
    std::printf("fitted: kKappa=%.6g kKappaSep=%.6g kCFit=%.6g kCSpread=%.6g\n", fitted.kappa,
                fitted.kappa_sep, fitted.c_fit, fitted.c_spread);
  }
  const bool all = std::all_of(results.begin(), results.end(),
                               [](const auto& r) { return r.second.pass; });
  std::printf("acceptance: %s in %.1f s\n", all ? "PASS" : "FAIL", seconds_since(t0));
  return all ? 0 : 1;
}
