#pragma once

#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "labelcut/graph.hpp"
#include "labelcut/oracle.hpp"
#include "labelcut/solve_unweighted.hpp"
#include "labelcut/solve_weighted.hpp"
#include "labelcut/types.hpp"

namespace labelcut {

struct BenchRecord {
  std::string instance_id;
  int n = 0, m = 0, q = 0;
  std::string algo;
  std::optional<Weight> opt_weight;  // exact optimum when the oracle ran
  std::optional<Weight> sol_weight;
  std::optional<double> ratio;       // sol / opt
  std::int64_t runtime_ms = 0;
  std::string guess_used;            // winning guess, empty for exact runs
  std::string error;                 // empty on success
};

struct BenchSummary {
  std::string algo;
  int instances = 0;
  int errors = 0;
  int ratios = 0;         // rows contributing to the ratio aggregates
  double max_ratio = 0.0;
  double mean_ratio = 0.0;
};

// Solver invariants aggregated across the whole run; all must stay 0.
struct BenchCounters {
  std::int64_t infeasible_outputs = 0;
  std::int64_t ratio_below_one = 0;
  std::int64_t label_overlap_violations = 0;
  std::int64_t forbidden_cut_violations = 0;
  std::int64_t lift_failures = 0;
};

struct BenchOptions {
  std::vector<std::string> algos;  // of: exact, unweighted, weighted
  int oracle_cap = 22;
};

struct BenchResult {
  std::vector<BenchRecord> records;
  std::vector<BenchSummary> summaries;
  BenchCounters counters;
};

// Runs the requested algorithms over the instances. The exact optimum is
// computed once per instance when the label count fits under the oracle
// cap; approximation rows then carry sol/opt ratios. Per-row errors (cap
// exceeded, wrong weight regime) are recorded and the run continues.
inline BenchResult run_bench(
    const std::vector<std::pair<std::string, LabeledGraph>>& instances,
    const BenchOptions& options) {
  BenchResult out;
  std::map<std::string, std::vector<double>> ratios_by_algo;
  std::map<std::string, std::pair<int, int>> counts_by_algo;  // rows, errors

  for (const auto& [id, g] : instances) {
    std::optional<Weight> opt;
    std::optional<std::string> oracle_error;
    if (g.label_count() <= options.oracle_cap) {
      OracleOptions oo;
      oo.label_cap = options.oracle_cap;
      opt = exact_min_label_cut(g, OracleMode::weight, oo).weight;
    } else {
      oracle_error = "oracle cap exceeded (" + std::to_string(g.label_count()) +
                     " labels > " + std::to_string(options.oracle_cap) + ")";
    }

    for (const std::string& algo : options.algos) {
      BenchRecord rec;
      rec.instance_id = id;
      rec.n = g.node_count;
      rec.m = g.edge_count();
      rec.q = g.label_count();
      rec.algo = algo;

      auto started = std::chrono::steady_clock::now();
      try {
        if (algo == "exact") {
          if (oracle_error) throw OracleCapExceeded(*oracle_error);
          rec.sol_weight = opt;
          rec.opt_weight = opt;
          rec.ratio = 1.0;
        } else if (algo == "unweighted") {
          UnweightedSolveResult r = solve_unweighted(g);
          rec.sol_weight = r.solution.weight;
          rec.guess_used = "opt=" + std::to_string(r.solution.guess_used.solution_size);
          out.counters.label_overlap_violations +=
              r.stats.label_overlap_violations;
          if (!r.solution.feasible) ++out.counters.infeasible_outputs;
        } else if (algo == "weighted") {
          WeightedSolveResult r = solve_weighted(g);
          rec.sol_weight = r.solution.weight;
          rec.guess_used =
              "size=" + std::to_string(r.solution.guess_used.solution_size) +
              " cap=" + std::to_string(r.solution.guess_used.weight_cap);
          out.counters.label_overlap_violations +=
              r.stats.label_overlap_violations;
          out.counters.forbidden_cut_violations +=
              r.stats.forbidden_cut_violations;
          if (!r.solution.feasible) ++out.counters.infeasible_outputs;
        } else {
          throw Error("unknown algorithm '" + algo + "'");
        }
      } catch (const std::logic_error& e) {
        ++out.counters.lift_failures;
        rec.error = e.what();
      } catch (const Error& e) {
        rec.error = e.what();
      }
      rec.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();

      auto& [rows, errors] = counts_by_algo[algo];
      ++rows;
      if (!rec.error.empty()) ++errors;
      if (rec.error.empty() && algo != "exact") {
        rec.opt_weight = opt;
        if (opt && rec.sol_weight) {
          // opt == 0 only for already-disconnected inputs, where the
          // solvers return the empty cut
          double ratio = (*opt == 0)
                             ? 1.0
                             : static_cast<double>(*rec.sol_weight) /
                                   static_cast<double>(*opt);
          rec.ratio = ratio;
          if (*rec.sol_weight < *opt) ++out.counters.ratio_below_one;
        }
      }
      if (rec.ratio) ratios_by_algo[algo].push_back(*rec.ratio);
      out.records.push_back(std::move(rec));
    }
  }

  for (const std::string& algo : options.algos) {
    BenchSummary s;
    s.algo = algo;
    s.instances = counts_by_algo[algo].first;
    s.errors = counts_by_algo[algo].second;
    const std::vector<double>& ratios = ratios_by_algo[algo];
    s.ratios = static_cast<int>(ratios.size());
    double sum = 0.0;
    for (double r : ratios) {
      s.max_ratio = std::max(s.max_ratio, r);
      sum += r;
    }
    s.mean_ratio = ratios.empty() ? 0.0 : sum / static_cast<double>(ratios.size());
    out.summaries.push_back(s);
  }
  return out;
}

inline std::string bench_csv(const BenchResult& result) {
  std::ostringstream out;
  out << "instance,n,m,q,algo,opt_weight,sol_weight,ratio,runtime_ms,"
         "guess_used,error\n";
  auto opt_str = [](const std::optional<Weight>& w) {
    return w ? std::to_string(*w) : std::string();
  };
  for (const BenchRecord& r : result.records) {
    out << r.instance_id << ',' << r.n << ',' << r.m << ',' << r.q << ','
        << r.algo << ',' << opt_str(r.opt_weight) << ','
        << opt_str(r.sol_weight) << ',';
    if (r.ratio) out << std::fixed << std::setprecision(6) << *r.ratio;
    out << ',' << r.runtime_ms << ',' << r.guess_used << ',';
    // errors may contain commas; quote them
    if (!r.error.empty()) {
      std::string quoted = r.error;
      for (std::size_t i = 0; i < quoted.size(); ++i)
        if (quoted[i] == '"') quoted.insert(i++, 1, '"');
      out << '"' << quoted << '"';
    }
    out << '\n';
  }
  if (result.records.empty()) return out.str();  // header-only for empty runs
  for (const BenchSummary& s : result.summaries) {
    out << "# summary algo=" << s.algo << " instances=" << s.instances
        << " errors=" << s.errors << " ratios=" << s.ratios;
    if (s.ratios > 0)
      out << std::fixed << std::setprecision(6) << " max_ratio=" << s.max_ratio
          << " mean_ratio=" << s.mean_ratio;
    out << '\n';
  }
  return out.str();
}

}  // namespace labelcut
