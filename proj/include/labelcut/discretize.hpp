#pragma once

#include <map>
#include <set>
#include <vector>

#include "labelcut/graph.hpp"
#include "labelcut/multigraph.hpp"
#include "labelcut/solution.hpp"
#include "labelcut/types.hpp"

namespace labelcut {

// Rounded copy count for a label of weight w under a guess: the weight is
// scaled by solution_size / weight_cap and rounded up. Weights in
// (0, weight_cap] land in 1..solution_size; weight == weight_cap maps to
// exactly solution_size.
inline int discretized_weight(Weight w, const GuessParams& guess) {
  assert(w >= 1 && guess.solution_size >= 1 && guess.weight_cap >= 1);
  using wide = unsigned __int128;
  wide scaled = (wide(w) * wide(guess.solution_size) + wide(guess.weight_cap) - 1) /
                wide(guess.weight_cap);
  return static_cast<int>(scaled);
}

// Weight discretization: labels no heavier than the guessed cap become
// admissible and each of their edges expands into discretized_weight
// parallel copies (copy label i shared across all edges of the same
// label); heavier labels become forbidden and their edges carry over
// unchanged.
inline LabeledMultiGraph discretize(const LabeledGraph& g,
                                    const GuessParams& guess) {
  LabeledMultiGraph mg;
  mg.directed = g.directed;
  mg.node_count = g.node_count;
  mg.source = g.source;
  mg.sink = g.sink;

  std::vector<int> copies(g.label_count() + 1, 0);
  for (LabelId l = 1; l <= g.label_count(); ++l) {
    if (g.label_weights[l] > guess.weight_cap) continue;  // forbidden
    copies[l] = discretized_weight(g.label_weights[l], guess);
    std::vector<CopyLabel> group;
    group.reserve(copies[l]);
    for (int i = 1; i <= copies[l]; ++i) group.push_back({l, i});
    mg.groups.emplace(l, std::move(group));
  }

  for (const LabeledEdge& e : g.edges) {
    if (copies[e.label] > 0)
      mg.bundles.push_back({e.tail, e.head, e.label, copies[e.label]});
    else
      mg.forbidden_edges.push_back({e.tail, e.head, e.label});
  }
  return mg;
}

// Labels whose copy labels were all selected. Partially covered labels are
// dropped: the removal rules only charge a label once every copy is gone.
inline std::set<LabelId> lift_solution(
    const std::set<CopyLabel>& selected,
    const std::map<LabelId, std::vector<CopyLabel>>& groups) {
  std::set<LabelId> lifted;
  for (const auto& [label, group] : groups) {
    bool all = !group.empty();
    for (const CopyLabel& c : group)
      if (!selected.count(c)) {
        all = false;
        break;
      }
    if (all) lifted.insert(label);
  }
  return lifted;
}

}  // namespace labelcut
