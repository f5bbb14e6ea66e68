#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "labelcut/detail/residual.hpp"
#include "labelcut/graph.hpp"
#include "labelcut/multigraph.hpp"
#include "labelcut/types.hpp"

namespace labelcut::detail {

struct KeyCutResult {
  std::vector<int> keys;  // sorted
  Weight weight = 0;
  std::uint64_t nodes_explored = 0;
};

// Exact minimum-weight key cut by path hitting: as long as a path survives,
// some key on it must join the cut, so branch over those keys (cheapest
// first), excluding earlier choices on later branches to keep subtrees
// disjoint. Candidates prune on weight only, so every optimal-weight set is
// still visited and the (weight, size, lexicographic) order picks the
// canonical one. Assumes some key set separates s from t.
class KeyCutSearch {
 public:
  KeyCutSearch(Residual& r, NodeId s, NodeId t, std::vector<Weight> key_cost)
      : r_(r), s_(s), t_(t), cost_(std::move(key_cost)) {}

  KeyCutResult run() {
    int keys = r_.key_count();
    selected_.assign(keys + 1, 0);
    excluded_.assign(keys + 1, 0);

    best_.keys.clear();
    best_.weight = 0;
    for (int k = 1; k <= keys; ++k) {
      best_.keys.push_back(k);
      best_.weight += cost_[k];
    }
    for (int k = 1; k <= keys; ++k) r_.remove_key(k);
    assert(!path_keys());  // caller must rule the all-keys cut feasible
    for (int k = 1; k <= keys; ++k) r_.restore_key(k);

    explore(0);
    best_.nodes_explored = nodes_;
    return best_;
  }

 private:
  // Keys of a shortest surviving s-t path, or nothing when s and t are
  // already separated. Unremovable edges contribute no key.
  std::optional<std::vector<int>> path_keys() {
    Residual::PathTree tree = r_.shortest_path_tree(s_);
    if (tree.dist[t_] == kUnreachable) return std::nullopt;
    std::vector<int> keys;
    for (int slot : r_.extract_path(tree, t_)) {
      int k = r_.slot_key[slot];
      if (k > 0 && std::find(keys.begin(), keys.end(), k) == keys.end())
        keys.push_back(k);
    }
    return keys;
  }

  void explore(Weight current) {
    ++nodes_;
    std::optional<std::vector<int>> keys = path_keys();
    if (!keys) {
      std::vector<int> chosen;
      for (int k = 1; k <= r_.key_count(); ++k)
        if (selected_[k]) chosen.push_back(k);
      if (current < best_.weight ||
          (current == best_.weight &&
           (chosen.size() < best_.keys.size() ||
            (chosen.size() == best_.keys.size() && chosen < best_.keys)))) {
        best_.keys = std::move(chosen);
        best_.weight = current;
      }
      return;
    }

    std::vector<int> branch;
    for (int k : *keys)
      if (!excluded_[k]) branch.push_back(k);
    std::sort(branch.begin(), branch.end(), [&](int a, int b) {
      if (cost_[a] != cost_[b]) return cost_[a] < cost_[b];
      return a < b;
    });

    std::vector<int> newly_excluded;
    for (int k : branch) {
      if (current + cost_[k] > best_.weight) break;  // costs ascend
      selected_[k] = 1;
      r_.remove_key(k);
      explore(current + cost_[k]);
      r_.restore_key(k);
      selected_[k] = 0;
      excluded_[k] = 1;
      newly_excluded.push_back(k);
    }
    for (int k : newly_excluded) excluded_[k] = 0;
  }

  Residual& r_;
  NodeId s_, t_;
  std::vector<Weight> cost_;
  std::vector<char> selected_, excluded_;
  KeyCutResult best_;
  std::uint64_t nodes_ = 0;
};

}  // namespace labelcut::detail

namespace labelcut {

enum class OracleMode { size, weight };

struct OracleOptions {
  int label_cap = 22;  // refuse instances with more labels than this
};

struct OracleResult {
  std::set<LabelId> labels;
  Weight weight = 0;  // label count in size mode
  std::uint64_t nodes_explored = 0;
};

// Exact minimum label cut. Minimises label count in size mode and total
// label weight in weight mode; ties prefer fewer labels, then the
// lexicographically smallest label set.
inline OracleResult exact_min_label_cut(const LabeledGraph& g, OracleMode mode,
                                        const OracleOptions& options = {}) {
  if (g.label_count() > options.label_cap)
    throw OracleCapExceeded("instance has " + std::to_string(g.label_count()) +
                            " labels, oracle cap is " +
                            std::to_string(options.label_cap));
  std::vector<Weight> cost(g.label_count() + 1, 1);
  if (mode == OracleMode::weight)
    for (LabelId l = 1; l <= g.label_count(); ++l) cost[l] = g.label_weights[l];

  detail::Residual r = detail::Residual::from_graph(g);
  detail::KeyCutResult res =
      detail::KeyCutSearch(r, g.source, g.sink, cost).run();

  OracleResult out;
  out.labels.insert(res.keys.begin(), res.keys.end());
  out.weight = res.weight;
  out.nodes_explored = res.nodes_explored;
  return out;
}

struct MultiOracleResult {
  // True when even removing every admissible copy label leaves the source
  // connected to the sink.
  bool failure = false;
  std::set<CopyLabel> labels;
  std::uint64_t nodes_explored = 0;
};

// Exact minimum-cardinality admissible copy-label cut of a multigraph with
// forbidden edges. Ties prefer the lexicographically smallest set.
inline MultiOracleResult exact_min_copy_label_cut(
    const LabeledMultiGraph& g, const OracleOptions& options = {}) {
  if (g.copy_label_count() > options.label_cap)
    throw OracleCapExceeded(
        "instance has " + std::to_string(g.copy_label_count()) +
        " copy labels, oracle cap is " + std::to_string(options.label_cap));

  detail::Residual r = detail::Residual::from_multigraph(g);
  MultiOracleResult out;

  for (int k = 1; k <= r.key_count(); ++k) r.remove_key(k);
  std::vector<int> dist = r.distances_from(g.source);
  for (int k = 1; k <= r.key_count(); ++k) r.restore_key(k);
  if (dist[g.sink] != kUnreachable) {
    out.failure = true;
    return out;
  }

  std::vector<Weight> cost(r.key_count() + 1, 1);
  detail::KeyCutResult res =
      detail::KeyCutSearch(r, g.source, g.sink, cost).run();
  for (int k : res.keys) out.labels.insert(r.key_copy_labels[k]);
  out.nodes_explored = res.nodes_explored;
  return out;
}

}  // namespace labelcut
