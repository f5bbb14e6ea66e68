#pragma once

#include <optional>
#include <set>
#include <vector>

#include "labelcut/detail/residual.hpp"
#include "labelcut/layering.hpp"
#include "labelcut/multigraph.hpp"
#include "labelcut/solution.hpp"
#include "labelcut/solve_unweighted.hpp"
#include "labelcut/types.hpp"

namespace labelcut {

// Diagnostics for one executed guess group of the multigraph solver.
struct MultiGuessRecord {
  std::int64_t guess = 0;
  std::int64_t distance_cap = 0;
  int paths_used = 0;
  int stage1_size = 0;           // admissible copy labels from stage one
  bool stage_two_ran = false;    // false when the sink was already cut off
  int chosen_cut_layer = -1;
  int chosen_cut_edge_count = 0;
  int forbidden_in_chosen_cut = 0;  // must stay 0
  int stage2_size = 0;
  int result_size = 0;
};

struct MultiSolveStats {
  std::vector<std::vector<CopyLabel>> path_labels;  // admissible labels per path
  std::vector<int> path_lengths;
  std::vector<MultiGuessRecord> guesses;
  int label_overlap_violations = 0;
  int forbidden_cut_violations = 0;  // weight-0 edges across all chosen cuts
  int max_multiplicity = 1;
};

struct MultiSolveOptions {
  std::optional<std::int64_t> forced_guess;
  bool record_paths = true;
};

struct MultiSolveResult {
  // True when source and sink are joined by forbidden edges alone; no
  // removal can separate them and the label sets below stay empty.
  bool failure = false;
  std::set<CopyLabel> labels;
  std::set<CopyLabel> stage1_labels;
  std::set<CopyLabel> stage2_labels;
  int paths_found = 0;
  std::int64_t guess = 0;  // guess that produced the returned set
  MultiSolveStats stats;
};

// Two-stage approximation on a multigraph whose forbidden edges cannot be
// removed (admissible copies weigh 1, forbidden edges 0). Stage one removes
// shortest-path labels while the weighted s-t distance stays within the
// guess's cap (which now also scales with the maximum edge multiplicity);
// stage two replaces the minimum cut with the smallest candidate layer cut,
// which by construction contains no forbidden edge. Smallest combined
// admissible label set over all guesses wins.
//
// Shares the master-prefix scheme of solve_unweighted: one stage-one
// sequence, one stage two per distinct distance cap.
inline MultiSolveResult solve_multigraph_forbidden(
    const LabeledMultiGraph& g, const MultiSolveOptions& options = {}) {
  MultiSolveResult out;
  MultiSolveStats& stats = out.stats;
  stats.max_multiplicity = max_multiplicity(g);
  const int mu = stats.max_multiplicity;
  const std::int64_t n = g.node_count;

  detail::Residual residual = detail::Residual::from_multigraph(g);

  {
    std::vector<int> dist = residual.distances_from(g.source);
    if (dist[g.sink] == 0) {  // a fully forbidden path survives everything
      out.failure = true;
      return out;
    }
    if (dist[g.sink] == kUnreachable) return out;  // nothing left to cut
  }

  std::vector<detail::GuessGroup<std::int64_t>> groups;
  if (options.forced_guess) {
    std::int64_t forced = *options.forced_guess;
    if (forced < 1) throw Error("guess must be at least 1");
    groups.push_back({forced, max_distance_under_cube_bound(forced, n, mu)});
  } else {
    std::int64_t max_guess = std::max<std::int64_t>(g.copy_label_count(), 1);
    groups = detail::group_guesses<std::int64_t>(max_guess, n, mu);
  }
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.distance_cap < b.distance_cap; });

  std::vector<char> removed(residual.key_count() + 1, 0);
  std::vector<int> removal_order;  // master sequence of removed keys
  int paths_taken = 0;

  struct Candidate {
    std::size_t size = 0;
    std::vector<CopyLabel> labels;  // sorted
    std::size_t stage1_count = 0;
    std::vector<int> stage2_keys;
    int paths = 0;
    std::int64_t guess = 0;
  };
  std::optional<Candidate> best;

  for (const auto& group : groups) {
    while (true) {
      detail::Residual::PathTree tree = residual.shortest_path_tree(g.source);
      int d = tree.dist[g.sink];
      if (d == kUnreachable || d > group.distance_cap) break;
      assert(d >= 1);  // a zero-distance path would have meant failure
      std::vector<int> slots = residual.extract_path(tree, g.sink);
      std::vector<int> keys;
      for (int s : slots) {
        int k = residual.slot_key[s];
        if (k > 0 && std::find(keys.begin(), keys.end(), k) == keys.end())
          keys.push_back(k);
      }
      for (int k : keys) {
        if (removed[k]) {
          ++stats.label_overlap_violations;  // cannot happen: slots are dead
          continue;
        }
        removed[k] = 1;
        removal_order.push_back(k);
        residual.remove_key(k);
      }
      ++paths_taken;
      if (options.record_paths) {
        std::vector<CopyLabel> labels;
        labels.reserve(keys.size());
        for (int k : keys) labels.push_back(residual.key_copy_labels[k]);
        stats.path_labels.push_back(std::move(labels));
        stats.path_lengths.push_back(d);
      }
    }

    detail::LayerInfo layers =
        detail::build_layers(residual, g.source, g.sink);

    MultiGuessRecord rec;
    rec.guess = group.guess;
    rec.distance_cap = group.distance_cap;
    rec.paths_used = paths_taken;
    rec.stage1_size = static_cast<int>(removal_order.size());

    std::vector<int> stage2_keys;
    if (layers.sink_layer) {
      rec.stage_two_ran = true;
      rec.chosen_cut_layer = layers.chosen_index;
      rec.chosen_cut_edge_count = static_cast<int>(layers.chosen_slots.size());
      rec.forbidden_in_chosen_cut = layers.forbidden_in_chosen;
      stats.forbidden_cut_violations += layers.forbidden_in_chosen;
      for (int s : layers.chosen_slots) {
        int k = residual.slot_key[s];
        if (k > 0 &&
            std::find(stage2_keys.begin(), stage2_keys.end(), k) ==
                stage2_keys.end())
          stage2_keys.push_back(k);
      }
    }

    Candidate cand;
    cand.stage1_count = removal_order.size();
    cand.stage2_keys = stage2_keys;
    cand.paths = paths_taken;
    cand.guess = group.guess;
    for (int k : removal_order) cand.labels.push_back(residual.key_copy_labels[k]);
    for (int k : stage2_keys) cand.labels.push_back(residual.key_copy_labels[k]);
    std::sort(cand.labels.begin(), cand.labels.end());
    cand.size = cand.labels.size();

    rec.stage2_size = static_cast<int>(stage2_keys.size());
    rec.result_size = static_cast<int>(cand.size);
    stats.guesses.push_back(rec);

    bool take = false;
    if (!best)
      take = true;
    else if (cand.size != best->size)
      take = cand.size < best->size;
    else
      take = cand.labels < best->labels;
    if (take) best = std::move(cand);
  }
  std::sort(stats.guesses.begin(), stats.guesses.end(),
            [](const auto& a, const auto& b) { return a.guess < b.guess; });

  if (best) {
    out.labels.insert(best->labels.begin(), best->labels.end());
    for (std::size_t i = 0; i < best->stage1_count; ++i)
      out.stage1_labels.insert(residual.key_copy_labels[removal_order[i]]);
    for (int k : best->stage2_keys)
      out.stage2_labels.insert(residual.key_copy_labels[k]);
    out.paths_found = best->paths;
    out.guess = best->guess;
  }
  return out;
}

}  // namespace labelcut
