#pragma once

#include <optional>
#include <set>
#include <vector>

#include "labelcut/discretize.hpp"
#include "labelcut/graph.hpp"
#include "labelcut/multigraph.hpp"
#include "labelcut/solution.hpp"
#include "labelcut/solve_multigraph.hpp"
#include "labelcut/types.hpp"

namespace labelcut {

// Diagnostics for one (solution_size, weight_cap) guess of the weighted
// solver.
struct WeightedGuessRecord {
  GuessParams guess;
  bool failure = false;  // forbidden edges alone connected source and sink
  std::int64_t copy_label_count = 0;
  int max_multiplicity = 1;
  int copy_solution_size = 0;  // admissible copy labels picked
  int lifted_label_count = 0;
  Weight lifted_weight = 0;
  int paths_found = 0;
  int label_overlap_violations = 0;
  int forbidden_cut_violations = 0;
};

struct WeightedSolveStats {
  std::vector<WeightedGuessRecord> guesses;
  int failures = 0;
  int label_overlap_violations = 0;
  int forbidden_cut_violations = 0;
};

struct WeightedSolveOptions {
  std::optional<GuessParams> forced_guess;  // run only this guess pair
};

struct WeightedSolveResult {
  CutSolution solution;
  WeightedSolveStats stats;
};

// Weighted solver: guess the size of an optimal solution and the largest
// label weight it uses, scale-and-round the admissible weights into small
// parallel-copy counts, cut the resulting multigraph, and keep only labels
// whose copies were all picked. Guesses whose forbidden edges already span
// source to sink are skipped. Lightest lifted solution wins; ties prefer
// fewer labels, then the lexicographically smaller set.
inline WeightedSolveResult solve_weighted(
    const LabeledGraph& g, const WeightedSolveOptions& options = {}) {
  WeightedSolveResult out;
  WeightedSolveStats& stats = out.stats;
  CutSolution& sol = out.solution;

  std::vector<GuessParams> guesses;
  if (options.forced_guess) {
    if (options.forced_guess->solution_size < 1 ||
        options.forced_guess->weight_cap < 1)
      throw Error("guess parameters must be at least 1");
    guesses.push_back(*options.forced_guess);
  } else {
    std::set<Weight> caps;
    for (LabelId l = 1; l <= g.label_count(); ++l)
      caps.insert(g.label_weights[l]);
    for (int size = 1; size <= g.label_count(); ++size)
      for (Weight cap : caps) guesses.push_back({size, cap});
  }

  bool have = false;
  for (const GuessParams& guess : guesses) {
    LabeledMultiGraph mg = discretize(g, guess);
    MultiSolveOptions inner;
    inner.record_paths = false;
    MultiSolveResult r = solve_multigraph_forbidden(mg, inner);

    WeightedGuessRecord rec;
    rec.guess = guess;
    rec.failure = r.failure;
    rec.copy_label_count = mg.copy_label_count();
    rec.max_multiplicity = r.stats.max_multiplicity;
    rec.label_overlap_violations = r.stats.label_overlap_violations;
    rec.forbidden_cut_violations = r.stats.forbidden_cut_violations;
    stats.label_overlap_violations += r.stats.label_overlap_violations;
    stats.forbidden_cut_violations += r.stats.forbidden_cut_violations;

    if (r.failure) {
      ++stats.failures;
      stats.guesses.push_back(rec);
      continue;
    }

    std::set<LabelId> lifted = lift_solution(r.labels, mg.groups);
    if (!is_cut(g, lifted))
      throw std::logic_error(
          "lifted label set fails to cut the original graph");

    rec.copy_solution_size = static_cast<int>(r.labels.size());
    rec.lifted_label_count = static_cast<int>(lifted.size());
    rec.lifted_weight = total_weight(g, lifted);
    rec.paths_found = r.paths_found;
    stats.guesses.push_back(rec);

    if (!have || better_solution(rec.lifted_weight, lifted, sol.weight,
                                 sol.labels)) {
      have = true;
      sol.labels = lifted;
      sol.weight = rec.lifted_weight;
      sol.paths_found = r.paths_found;
      sol.guess_used = guess;
      sol.stage1_labels.clear();
      sol.stage2_labels.clear();
      for (LabelId l : lifted) {
        for (const CopyLabel& c : mg.groups.at(l)) {
          if (r.stage1_labels.count(c)) sol.stage1_labels.insert(l);
          if (r.stage2_labels.count(c)) sol.stage2_labels.insert(l);
        }
      }
    }
  }

  // The guess pairing the full label count with the largest weight never
  // fails on a valid instance, so a candidate always exists (an instance
  // with no labels is only valid when already disconnected).
  sol.feasible = is_cut(g, sol.labels);
  return out;
}

}  // namespace labelcut
