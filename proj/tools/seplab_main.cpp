// seplab: generate string graphs, compute congestion brackets, sparse cuts and
// balanced separators, and run the scaling experiment.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seplab/congestion.hpp"
#include "seplab/cutfinder.hpp"
#include "seplab/drawing.hpp"
#include "seplab/errors.hpp"
#include "seplab/geometry.hpp"
#include "seplab/io.hpp"
#include "seplab/separator.hpp"

namespace {

using seplab::io::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;

std::uint64_t parse_u64(const std::string& s) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || s[0] == '-') {
    throw seplab::InputError("not a nonnegative integer: '" + s + "'");
  }
  return v;
}

// "1..10", "3,5,8" or a mix such as "1..3,7". Ranges are inclusive.
std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    const std::size_t dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_u64(item));
    } else {
      const std::uint64_t a = parse_u64(item.substr(0, dots));
      const std::uint64_t b = parse_u64(item.substr(dots + 2));
      if (b < a) throw seplab::InputError("empty range '" + item + "'");
      for (std::uint64_t s = a; s <= b; ++s) out.push_back(s);
    }
    pos = comma + 1;
  }
  if (out.empty()) throw seplab::InputError("empty list");
  return out;
}

std::vector<int> parse_size_list(const std::string& text) {
  std::vector<int> out;
  for (std::uint64_t v : parse_seed_list(text)) {
    if (v < 1 || v > 100000) throw seplab::InputError("size out of range: " + std::to_string(v));
    out.push_back(static_cast<int>(v));
  }
  return out;
}

void check_eps(double eps) {
  if (!(eps > 0.0 && eps <= 0.5)) throw seplab::InputError("--eps must lie in (0, 0.5]");
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    seplab::io::write_text_file(out_path, text);
  }
}

json vertex_list(const seplab::VertexSet& s) { return json(s); }

struct Options {
  std::string family = "segments";
  int n = 50;
  int k = 3;
  std::int64_t coord_range = seplab::kSegmentCoordRange;
  std::uint64_t seed = 0;
  std::string in;
  std::string out;
  double eps = 0.1;
  int trials = 200;
  std::string sizes;
  std::string seeds = "0";
};

int run_gen(const Options& o) {
  const seplab::Family fam = seplab::parse_family(o.family);
  seplab::GeneratedInstance inst = fam == seplab::Family::kSegments
                                       ? seplab::gen_random_segments(o.n, o.coord_range, o.seed)
                                       : seplab::gen_grid_strings(o.k);
  seplab::io::Instance out{std::move(inst.graph), std::move(inst.rep)};
  emit(o.out, seplab::io::instance_to_json(out).dump() + "\n");
  return kExitOk;
}

int run_vcong(const Options& o) {
  check_eps(o.eps);
  const seplab::Graph g = seplab::io::load_graph(o.in);
  seplab::MwuOptions opts;
  opts.keep_flow = false;
  const seplab::MwuResult res = seplab::vcong_mwu(g, o.eps, o.seed, opts);
  json doc{{"vcong_lb", res.lower},
           {"vcong_ub", res.upper},
           {"s", res.weighting.s},
           {"max_congestion_vertex", res.profile.argmax}};
  emit(o.out, doc.dump() + "\n");
  return kExitOk;
}

int run_cut(const Options& o) {
  check_eps(o.eps);
  const seplab::Graph g = seplab::io::load_graph(o.in);
  const seplab::SparseCut cut = seplab::best_sparse_cut(g, o.eps, o.seed);
  const auto& p = cut.report.partition;
  json doc{{"A", vertex_list(p.A)},
           {"B", vertex_list(p.B)},
           {"S", vertex_list(p.S)},
           {"sparsity", cut.report.sparsity}};
  emit(o.out, doc.dump() + "\n");
  return kExitOk;
}

int run_separate(const Options& o) {
  check_eps(o.eps);
  const seplab::Graph g = seplab::io::load_graph(o.in);
  const seplab::SeparatorRun run = seplab::build_separator(g, o.eps, o.seed);
  const seplab::ValidationReport check = seplab::validate_separator(g, run.separator);
  json parts = json::array();
  for (const auto& part : run.separator.parts) parts.push_back(vertex_list(part));
  json doc{{"S", vertex_list(run.separator.S)},
           {"parts", std::move(parts)},
           {"rounds", run.rounds.size()},
           {"valid", check.ok}};
  emit(o.out, doc.dump() + "\n");
  std::cerr << "runtime_ms " << run.runtime_ms << "\n";
  return check.ok ? kExitOk : kExitInternal;
}

int run_verify(const Options& o) {
  check_eps(o.eps);
  if (o.trials < 1) throw seplab::InputError("--trials must be >= 1");
  const seplab::io::Instance inst = seplab::io::load_instance(o.in);
  const seplab::ConflictBoundReport rep =
      seplab::verify_conflict_bound(inst.graph, o.eps, o.trials, o.seed);
  json doc{{"mean_conflicts", rep.mean_conflicts},
           {"bound", rep.bound},
           {"congestion", rep.congestion},
           {"trials", rep.trials}};
  if (inst.rep) {
    const seplab::LowerBoundReport lb =
        seplab::verify_lower_bound(inst.graph, true, o.eps, o.seed);
    doc["lower_bound"] = {{"vcong_lb", lb.vcong_lb}, {"ratio", lb.ratio}};
  }
  emit(o.out, doc.dump() + "\n");
  return rep.margin >= 0.0 ? kExitOk : kExitInternal;
}

int run_experiment(const Options& o) {
  check_eps(o.eps);
  const seplab::Family fam = seplab::parse_family(o.family);
  const std::vector<int> sizes = parse_size_list(o.sizes);
  const std::vector<std::uint64_t> seeds = parse_seed_list(o.seeds);
  const auto rows = seplab::separator_experiment(fam, sizes, seeds, o.eps);
  emit(o.out, seplab::experiment_csv(rows));
  for (const auto& r : rows) {
    if (!r.valid) {
      std::cerr << "invalid separator for size " << r.size << " seed " << r.seed << "\n";
      return kExitInternal;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Balanced vertex separators for string graphs via congestion duality"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub, bool needs_input) {
    if (needs_input) sub->add_option("--in", o.in, "Input instance JSON")->required();
    sub->add_option("--out", o.out, "Output path (stdout when omitted)");
    sub->add_option("--seed", o.seed, "Random seed");
  };

  CLI::App* gen = app.add_subcommand("gen", "Generate a string graph instance");
  gen->add_option("--family", o.family, "segments | grid")->check(CLI::IsMember({"segments", "grid"}));
  gen->add_option("--n", o.n, "Number of random segments")->check(CLI::Range(1, 100000));
  gen->add_option("--k", o.k, "Grid size (K_{k,k})")->check(CLI::Range(1, 100000));
  gen->add_option("--coord-range", o.coord_range, "Segment endpoint grid size")
      ->check(CLI::Range(std::int64_t{4}, seplab::kCoordLimit));
  add_common(gen, false);

  CLI::App* vcong = app.add_subcommand("vcong", "Certified vertex-congestion bracket");
  vcong->add_option("--eps", o.eps, "Relative accuracy in (0, 0.5]");
  add_common(vcong, true);

  CLI::App* cut = app.add_subcommand("cut", "Sparse vertex cut");
  cut->add_option("--eps", o.eps, "Relative accuracy in (0, 0.5]");
  add_common(cut, true);

  CLI::App* separate = app.add_subcommand("separate", "Balanced vertex separator");
  separate->add_option("--eps", o.eps, "Relative accuracy in (0, 0.5]");
  add_common(separate, true);

  CLI::App* verify = app.add_subcommand("verify-lemma1", "Conflict-count and congestion bounds");
  verify->add_option("--eps", o.eps, "Relative accuracy in (0, 0.5]");
  verify->add_option("--trials", o.trials, "Number of path samples");
  add_common(verify, true);

  CLI::App* experiment = app.add_subcommand("experiment", "Separator scaling experiment (CSV)");
  experiment->add_option("--family", o.family, "segments | grid")
      ->check(CLI::IsMember({"segments", "grid"}));
  experiment->add_option("--sizes", o.sizes, "Comma list or a..b range of sizes")->required();
  experiment->add_option("--seeds", o.seeds, "Comma list or a..b range of seeds");
  experiment->add_option("--eps", o.eps, "Relative accuracy in (0, 0.5]");
  experiment->add_option("--out", o.out, "CSV output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*gen) return run_gen(o);
    if (*vcong) return run_vcong(o);
    if (*cut) return run_cut(o);
    if (*separate) return run_separate(o);
    if (*verify) return run_verify(o);
    if (*experiment) return run_experiment(o);
  } catch (const seplab::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}
