#pragma once

#include <compare>
#include <set>

#include "labelcut/types.hpp"

namespace labelcut {

// One point of the guess grid the solvers search over.
struct GuessParams {
  // Guessed number of labels in an optimal solution.
  int solution_size = 1;
  // Guessed largest label weight an optimal solution uses.
  Weight weight_cap = 1;

  auto operator<=>(const GuessParams&) const = default;
};

// A label cut plus how it was found. labels is always the union of the
// stage sets; weight is the sum of the labels' weights.
struct CutSolution {
  std::set<LabelId> labels;
  Weight weight = 0;
  bool feasible = false;
  std::set<LabelId> stage1_labels;  // collected from shortest-path removals
  std::set<LabelId> stage2_labels;  // collected from the final cut
  int paths_found = 0;              // shortest paths removed in stage one
  GuessParams guess_used;
};

// Orders candidate solutions: lighter first, then fewer labels, then
// lexicographically smaller label set.
inline bool better_solution(Weight weight_a, const std::set<LabelId>& a,
                            Weight weight_b, const std::set<LabelId>& b) {
  if (weight_a != weight_b) return weight_a < weight_b;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace labelcut
