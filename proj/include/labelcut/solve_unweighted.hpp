#pragma once

#include <optional>
#include <set>
#include <vector>

#include "labelcut/detail/residual.hpp"
#include "labelcut/graph.hpp"
#include "labelcut/max_flow.hpp"
#include "labelcut/solution.hpp"
#include "labelcut/types.hpp"

namespace labelcut::detail {

// One entry per distinct distance cap, covering every guess that shares it.
// guess is the smallest guess of the group.
template <typename GuessT>
struct GuessGroup {
  GuessT guess = 1;
  std::int64_t distance_cap = 0;
};

// Distance caps are max{d : d^3 * guess <= n^2 * mu}; consecutive guesses
// often share one. Groups come out in ascending guess order, i.e. with
// strictly decreasing caps.
template <typename GuessT>
std::vector<GuessGroup<GuessT>> group_guesses(GuessT max_guess, std::int64_t n,
                                              std::int64_t mu) {
  std::vector<GuessGroup<GuessT>> groups;
  GuessT g = 1;
  while (g <= max_guess) {
    std::int64_t cap = max_distance_under_cube_bound(g, n, mu);
    groups.push_back({g, cap});
    if (cap == 0) break;  // larger guesses only shrink the cap further
    unsigned __int128 cube = static_cast<unsigned __int128>(cap) * cap * cap;
    unsigned __int128 bound =
        static_cast<unsigned __int128>(n) * static_cast<unsigned __int128>(n) * mu;
    unsigned __int128 last = bound / cube;  // largest guess with this cap
    if (last >= static_cast<unsigned __int128>(max_guess)) break;
    g = static_cast<GuessT>(last) + 1;
  }
  return groups;
}

}  // namespace labelcut::detail

namespace labelcut {

// Diagnostics for one executed guess group of the unweighted solver.
struct UnweightedGuessRecord {
  int guess = 0;
  std::int64_t distance_cap = 0;
  int paths_used = 0;       // stage-one paths active under this guess
  int stage1_size = 0;      // labels removed by those paths
  int cut_edge_count = 0;   // edges in the stage-two minimum cut
  int stage2_size = 0;      // labels of those edges
  int result_size = 0;
};

struct UnweightedSolveStats {
  // Master sequence of stage-one paths; every guess uses a prefix of it.
  std::vector<std::vector<LabelId>> path_labels;
  std::vector<int> path_lengths;  // s-t distance when each path was taken
  std::vector<UnweightedGuessRecord> guesses;
  // Stage-one paths must never share a label; any overlap counts here.
  int label_overlap_violations = 0;
};

struct UnweightedSolveOptions {
  std::optional<int> forced_guess;  // run only this guess
  bool record_paths = true;
};

struct UnweightedSolveResult {
  CutSolution solution;
  UnweightedSolveStats stats;
};

// Two-stage approximation for unit label weights: per guessed optimum size,
// stage one repeatedly deletes every edge sharing a label with a shortest
// path while the s-t distance stays within the guess's cap; stage two takes
// the labels of a minimum edge cut of what remains. Smallest combined label
// set over all guesses wins.
//
// Distances only grow as edges disappear, so all stage-one runs are
// prefixes of one master removal sequence; each distinct cap is processed
// once, which is observably equivalent to looping per guess.
inline UnweightedSolveResult solve_unweighted(
    const LabeledGraph& g, const UnweightedSolveOptions& options = {}) {
  if (!g.unit_weights())
    throw Error("unweighted solver requires unit label weights");

  UnweightedSolveResult out;
  UnweightedSolveStats& stats = out.stats;

  const int q = g.label_count();
  std::vector<detail::GuessGroup<int>> groups;
  if (options.forced_guess) {
    int forced = *options.forced_guess;
    if (forced < 1) throw Error("guess must be at least 1");
    groups.push_back(
        {forced, max_distance_under_cube_bound(forced, g.node_count, 1)});
  } else {
    groups = detail::group_guesses<int>(std::max(q, 1), g.node_count, 1);
  }
  // ascending cap order so the master prefix only ever extends
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.distance_cap < b.distance_cap; });

  detail::Residual residual = detail::Residual::from_graph(g);
  std::vector<char> removed(q + 1, 0);
  std::vector<LabelId> removal_order;  // master stage-one label sequence
  int paths_taken = 0;

  struct Candidate {
    std::set<LabelId> labels;
    std::size_t stage1_count = 0;
    std::vector<LabelId> stage2;
    int paths = 0;
    int guess = 0;
  };
  std::optional<Candidate> best;

  for (const auto& group : groups) {
    // Stage one: extend the master sequence up to this group's cap.
    while (true) {
      detail::Residual::PathTree tree = residual.shortest_path_tree(g.source);
      int d = tree.dist[g.sink];
      if (d == kUnreachable || d > group.distance_cap) break;
      std::vector<int> slots = residual.extract_path(tree, g.sink);
      std::vector<LabelId> labels;
      for (int s : slots) {
        LabelId l = residual.slot_key[s];
        if (std::find(labels.begin(), labels.end(), l) == labels.end())
          labels.push_back(l);
      }
      for (LabelId l : labels) {
        if (removed[l]) {
          ++stats.label_overlap_violations;  // cannot happen: edges are gone
          continue;
        }
        removed[l] = 1;
        removal_order.push_back(l);
        residual.remove_key(l);
      }
      ++paths_taken;
      if (options.record_paths) {
        stats.path_labels.push_back(std::move(labels));
        stats.path_lengths.push_back(d);
      }
    }

    // Stage two: labels of a minimum edge cut of what survived stage one.
    std::vector<int> cut_slots =
        detail::min_cut_slots(residual, g.source, g.sink);
    std::vector<LabelId> stage2;
    for (int s : cut_slots) {
      LabelId l = residual.slot_key[s];
      if (std::find(stage2.begin(), stage2.end(), l) == stage2.end())
        stage2.push_back(l);
    }

    Candidate cand;
    cand.labels.insert(removal_order.begin(), removal_order.end());
    cand.labels.insert(stage2.begin(), stage2.end());
    cand.stage1_count = removal_order.size();
    cand.stage2 = stage2;
    cand.paths = paths_taken;
    cand.guess = group.guess;

    UnweightedGuessRecord rec;
    rec.guess = group.guess;
    rec.distance_cap = group.distance_cap;
    rec.paths_used = paths_taken;
    rec.stage1_size = static_cast<int>(removal_order.size());
    rec.cut_edge_count = static_cast<int>(cut_slots.size());
    rec.stage2_size = static_cast<int>(stage2.size());
    rec.result_size = static_cast<int>(cand.labels.size());
    stats.guesses.push_back(rec);

    if (!best || better_solution(static_cast<Weight>(cand.labels.size()),
                                 cand.labels,
                                 static_cast<Weight>(best->labels.size()),
                                 best->labels))
      best = std::move(cand);
  }
  std::sort(stats.guesses.begin(), stats.guesses.end(),
            [](const auto& a, const auto& b) { return a.guess < b.guess; });

  CutSolution& sol = out.solution;
  if (best) {
    sol.labels = best->labels;
    sol.stage1_labels.insert(removal_order.begin(),
                             removal_order.begin() +
                                 static_cast<std::ptrdiff_t>(best->stage1_count));
    sol.stage2_labels.insert(best->stage2.begin(), best->stage2.end());
    sol.paths_found = best->paths;
    sol.guess_used = {best->guess, 1};
  }
  sol.weight = static_cast<Weight>(sol.labels.size());
  sol.feasible = is_cut(g, sol.labels);
  return out;
}

}  // namespace labelcut
