// Command line front end: solve / verify / gen / bench over .lstc files.
//
// Exit codes: 0 success, 1 usage or input errors, 2 verification rejected,
// 3 solver failure.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "labelcut/labelcut.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitSolverFailure = 3;

struct SolveArgs {
  std::string algo;
  std::optional<int> guess_opt;
  bool emit_stats = false;
  std::string input;
  std::string output;
};

void emit_output(const std::string& path, const std::string& content) {
  if (path.empty())
    std::cout << content;
  else
    labelcut::write_file(path, content);
}

int run_solve(const SolveArgs& args) {
  labelcut::LabeledGraph g;
  try {
    g = labelcut::parse_instance(labelcut::read_file(args.input));
  } catch (const labelcut::Error& e) {
    std::cerr << args.input << ": " << e.what() << "\n";
    return kExitUsage;
  }

  if (args.guess_opt && args.algo != "unweighted") {
    std::cerr << "--guess-opt only applies to --algo unweighted\n";
    return kExitUsage;
  }

  labelcut::CutSolution solution;
  json stats;
  auto started = std::chrono::steady_clock::now();
  try {
    if (args.algo == "exact") {
      labelcut::OracleResult r =
          labelcut::exact_min_label_cut(g, labelcut::OracleMode::weight);
      solution.labels = r.labels;
      solution.weight = r.weight;
      solution.feasible = true;
      stats["nodes_explored"] = r.nodes_explored;
    } else if (args.algo == "unweighted") {
      if (!g.unit_weights()) {
        std::cerr << "solver failure: --algo unweighted requires every label "
                     "weight to be 1 (use --algo weighted instead)\n";
        return kExitSolverFailure;
      }
      labelcut::UnweightedSolveOptions options;
      options.forced_guess = args.guess_opt;
      labelcut::UnweightedSolveResult r = labelcut::solve_unweighted(g, options);
      solution = r.solution;
      stats["paths_found"] = solution.paths_found;
      stats["guess"] = solution.guess_used.solution_size;
      stats["guesses_run"] = r.stats.guesses.size();
      stats["label_overlap_violations"] = r.stats.label_overlap_violations;
    } else {
      labelcut::WeightedSolveResult r = labelcut::solve_weighted(g);
      solution = r.solution;
      stats["paths_found"] = solution.paths_found;
      stats["guess"] = {{"size", solution.guess_used.solution_size},
                        {"cap", solution.guess_used.weight_cap}};
      stats["guesses_run"] = r.stats.guesses.size();
      stats["guess_failures"] = r.stats.failures;
      stats["label_overlap_violations"] = r.stats.label_overlap_violations;
      stats["forbidden_cut_violations"] = r.stats.forbidden_cut_violations;
    }
  } catch (const labelcut::Error& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return kExitSolverFailure;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitSolverFailure;
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();

  if (args.emit_stats) {
    stats["algo"] = args.algo;
    stats["n"] = g.node_count;
    stats["m"] = g.edge_count();
    stats["q"] = g.label_count();
    stats["weight"] = solution.weight;
    stats["labels"] = solution.labels.size();
    stats["runtime_ms"] = elapsed;
    std::cerr << stats.dump() << "\n";
  }

  emit_output(args.output,
              labelcut::write_solution(labelcut::to_solution_file(solution)));
  return kExitOk;
}

int run_verify(const std::string& instance_path,
               const std::string& solution_path) {
  labelcut::LabeledGraph g;
  labelcut::SolutionFile sol;
  try {
    g = labelcut::parse_instance(labelcut::read_file(instance_path));
  } catch (const labelcut::Error& e) {
    std::cerr << instance_path << ": " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    sol = labelcut::parse_solution(labelcut::read_file(solution_path));
  } catch (const labelcut::Error& e) {
    std::cerr << solution_path << ": " << e.what() << "\n";
    return kExitUsage;
  }
  labelcut::VerifyReport rep = labelcut::verify(g, sol);
  std::cout << rep.message << "\n";
  return rep.ok ? kExitOk : kExitVerifyFailed;
}

struct GenArgs {
  std::string model;
  int n = 0, m = 0, q = 0;
  labelcut::Weight wmax = 1;
  bool directed = false;
  std::uint64_t seed = 0;
  std::string output;
};

labelcut::GenModel parse_model(const std::string& name) {
  if (name == "gnm") return labelcut::GenModel::gnm;
  if (name == "layered") return labelcut::GenModel::layered;
  return labelcut::GenModel::grid;
}

int run_gen(const GenArgs& args) {
  labelcut::GenSpec spec;
  spec.model = parse_model(args.model);
  spec.n = args.n;
  spec.m = args.m;
  spec.q = args.q;
  spec.weight_max = args.wmax;
  spec.directed = args.directed;
  spec.seed = args.seed;
  try {
    labelcut::LabeledGraph g = labelcut::generate(spec);
    emit_output(args.output, labelcut::write_instance(g));
  } catch (const labelcut::Error& e) {
    std::cerr << "gen: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

struct BenchArgs {
  std::string dir;
  std::string sweep;
  std::string algos = "exact,unweighted,weighted";
  int oracle_cap = 22;
  std::string output;
};

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    if (end > start) parts.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return parts;
}

// Sweep grammar: comma separated key=value pairs. Keys: model, count, seed,
// directed (0/1) and the ranged keys n, m, q, wmax which accept either a
// single value or lo..hi (inclusive, drawn uniformly per instance).
struct SweepRange {
  std::int64_t lo = 0, hi = 0;
};

SweepRange parse_range(const std::string& text) {
  std::size_t dots = text.find("..");
  SweepRange r;
  if (dots == std::string::npos) {
    r.lo = r.hi = std::stoll(text);
  } else {
    r.lo = std::stoll(text.substr(0, dots));
    r.hi = std::stoll(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw labelcut::Error("empty range " + text);
  return r;
}

std::vector<std::pair<std::string, labelcut::LabeledGraph>> sweep_instances(
    const std::string& sweep) {
  std::map<std::string, std::string> kv;
  for (const std::string& part : split_csv(sweep)) {
    std::size_t eq = part.find('=');
    if (eq == std::string::npos)
      throw labelcut::Error("sweep entry '" + part + "' is not key=value");
    kv[part.substr(0, eq)] = part.substr(eq + 1);
  }
  for (const auto& [key, value] : kv) {
    static const std::vector<std::string> known{
        "model", "count", "seed", "directed", "n", "m", "q", "wmax"};
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw labelcut::Error("unknown sweep key '" + key + "'");
  }
  auto get = [&](const char* key, const char* fallback) {
    auto it = kv.find(key);
    return it == kv.end() ? std::string(fallback) : it->second;
  };

  labelcut::GenModel model = parse_model(get("model", "gnm"));
  if (get("model", "gnm") != "gnm" && get("model", "gnm") != "layered" &&
      get("model", "gnm") != "grid")
    throw labelcut::Error("unknown sweep model");
  int count = static_cast<int>(std::stoll(get("count", "20")));
  std::uint64_t seed = std::stoull(get("seed", "0"));
  bool directed = get("directed", "0") == "1";
  SweepRange n = parse_range(get("n", "12"));
  SweepRange m = parse_range(get("m", "24"));
  SweepRange q = parse_range(get("q", "6"));
  SweepRange wmax = parse_range(get("wmax", "1"));

  labelcut::detail::GenRng rng(seed);
  std::vector<std::pair<std::string, labelcut::LabeledGraph>> instances;
  for (int i = 0; i < count; ++i) {
    labelcut::GenSpec spec;
    spec.model = model;
    spec.directed = directed;
    spec.n = static_cast<int>(rng.uniform(n.lo, n.hi));
    spec.m = static_cast<int>(rng.uniform(m.lo, m.hi));
    spec.q = static_cast<int>(rng.uniform(q.lo, q.hi));
    spec.weight_max = rng.uniform(wmax.lo, wmax.hi);
    spec.seed = static_cast<std::uint64_t>(
        rng.uniform(0, std::numeric_limits<std::int64_t>::max() - 1));
    // keep the draw inside what the model can host
    std::int64_t cap = labelcut::max_edge_count(spec.model, spec.n, directed);
    spec.m = static_cast<int>(std::clamp<std::int64_t>(spec.m, 1, cap));

    char id[32];
    std::snprintf(id, sizeof(id), "sweep-%04d", i);
    instances.push_back({id, labelcut::generate(spec)});
  }
  return instances;
}

int run_bench(const BenchArgs& args) {
  std::vector<std::pair<std::string, labelcut::LabeledGraph>> instances;
  std::vector<labelcut::BenchRecord> broken;  // unreadable instance files
  try {
    if (!args.dir.empty()) {
      std::vector<std::filesystem::path> files;
      for (const auto& entry : std::filesystem::directory_iterator(args.dir))
        if (entry.is_regular_file() && entry.path().extension() == ".lstc")
          files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      for (const auto& path : files) {
        try {
          instances.push_back({path.filename().string(),
                               labelcut::parse_instance(
                                   labelcut::read_file(path.string()))});
        } catch (const labelcut::Error& e) {
          labelcut::BenchRecord rec;
          rec.instance_id = path.filename().string();
          rec.algo = "-";
          rec.error = e.what();
          broken.push_back(std::move(rec));
        }
      }
    } else {
      instances = sweep_instances(args.sweep);
    }
  } catch (const labelcut::Error& e) {
    std::cerr << "bench: " << e.what() << "\n";
    return kExitUsage;
  }

  labelcut::BenchOptions options;
  options.algos = split_csv(args.algos);
  options.oracle_cap = args.oracle_cap;
  for (const std::string& algo : options.algos)
    if (algo != "exact" && algo != "unweighted" && algo != "weighted") {
      std::cerr << "bench: unknown algorithm '" << algo << "'\n";
      return kExitUsage;
    }

  labelcut::BenchResult result = labelcut::run_bench(instances, options);
  result.records.insert(result.records.end(), broken.begin(), broken.end());
  emit_output(args.output, labelcut::bench_csv(result));

  for (const labelcut::BenchSummary& s : result.summaries) {
    std::cerr << "algo " << s.algo << ": " << s.instances << " runs, "
              << s.errors << " errors";
    if (s.ratios > 0)
      std::cerr << ", max ratio " << s.max_ratio << ", mean ratio "
                << s.mean_ratio;
    std::cerr << "\n";
  }

  const labelcut::BenchCounters& c = result.counters;
  if (c.infeasible_outputs || c.ratio_below_one ||
      c.label_overlap_violations || c.forbidden_cut_violations ||
      c.lift_failures) {
    std::cerr << "bench: solver invariants violated (infeasible="
              << c.infeasible_outputs << ", ratio<1=" << c.ratio_below_one
              << ", overlaps=" << c.label_overlap_violations
              << ", forbidden=" << c.forbidden_cut_violations
              << ", lift=" << c.lift_failures << ")\n";
    return kExitSolverFailure;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum label cut solver toolkit"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "solve one instance");
  solve->add_option("--algo", solve_args.algo, "algorithm to run")
      ->required()
      ->check(CLI::IsMember({"exact", "unweighted", "weighted"}));
  int guess_opt_value = 0;
  CLI::Option* guess_opt =
      solve->add_option("--guess-opt", guess_opt_value,
                        "run only this guessed optimum size (unweighted)");
  solve->add_flag("--emit-stats", solve_args.emit_stats,
                  "print run statistics as JSON on stderr");
  solve->add_option("input", solve_args.input, "instance file")->required();
  solve->add_option("-o,--output", solve_args.output,
                    "solution file (stdout when omitted)");

  std::string verify_instance, verify_solution;
  CLI::App* verify = app.add_subcommand("verify", "check a solution file");
  verify->add_option("instance", verify_instance, "instance file")->required();
  verify->add_option("solution", verify_solution, "solution file")->required();

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--model", gen_args.model, "graph model")
      ->required()
      ->check(CLI::IsMember({"gnm", "layered", "grid"}));
  gen->add_option("--n", gen_args.n, "vertex count")->required();
  gen->add_option("--m", gen_args.m, "edge count")->required();
  gen->add_option("--q", gen_args.q, "label count")->required();
  gen->add_option("--wmax", gen_args.wmax, "maximum label weight")->required();
  gen->add_flag("--directed", gen_args.directed, "directed edges");
  gen->add_option("--seed", gen_args.seed, "random seed")->required();
  gen->add_option("-o,--output", gen_args.output, "instance file")->required();

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "run the benchmark harness");
  CLI::Option* dir_opt =
      bench->add_option("--dir", bench_args.dir, "directory of .lstc files");
  CLI::Option* sweep_opt =
      bench->add_option("--sweep", bench_args.sweep,
                        "generate instances, e.g. "
                        "model=gnm,count=50,n=10..30,m=20..60,q=8,seed=7");
  dir_opt->excludes(sweep_opt);
  bench->add_option("--algos", bench_args.algos,
                    "comma list of exact,unweighted,weighted")
      ->required();
  bench->add_option("--oracle-cap", bench_args.oracle_cap,
                    "largest label count the exact oracle accepts");
  bench->add_option("-o,--output", bench_args.output, "results CSV")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (solve->parsed()) {
    if (*guess_opt) solve_args.guess_opt = guess_opt_value;
    return run_solve(solve_args);
  }
  if (verify->parsed()) return run_verify(verify_instance, verify_solution);
  if (gen->parsed()) return run_gen(gen_args);
  if (bench->parsed()) {
    if (bench_args.dir.empty() && bench_args.sweep.empty()) {
      std::cerr << "bench: one of --dir or --sweep is required\n";
      return kExitUsage;
    }
    return run_bench(bench_args);
  }
  return kExitUsage;
}
