#pragma once

#include <vector>

#include "labelcut/detail/residual.hpp"
#include "labelcut/graph.hpp"
#include "labelcut/multigraph.hpp"
#include "labelcut/types.hpp"

namespace labelcut {

// Hop distances from `from` (every edge weighs 1). Index 0 is unused;
// kUnreachable marks vertices with no path.
inline std::vector<int> zero_one_distances(const LabeledGraph& g, NodeId from) {
  return detail::Residual::from_graph(g).distances_from(from);
}

// Distances from `from` where admissible copies weigh 1 and forbidden edges
// weigh 0.
inline std::vector<int> zero_one_distances(const LabeledMultiGraph& g,
                                           NodeId from) {
  return detail::Residual::from_multigraph(g).distances_from(from);
}

// Shortest path as 0-based edge indices. Deterministic: among shortest
// paths the lexicographically smallest edge-index sequence wins. Throws
// when no path exists.
inline std::vector<int> shortest_st_path(const LabeledGraph& g, NodeId from,
                                         NodeId to) {
  detail::Residual r = detail::Residual::from_graph(g);
  detail::Residual::PathTree tree = r.shortest_path_tree(from);
  if (tree.dist[to] == kUnreachable)
    throw Error("no path from " + std::to_string(from) + " to " +
                std::to_string(to));
  return r.extract_path(tree, to);
}

inline std::vector<int> shortest_st_path(const LabeledGraph& g) {
  return shortest_st_path(g, g.source, g.sink);
}

// Shortest path under 0/1 weights, as concrete edge references. Ties prefer
// earlier bundles and lower copy indices. Throws when no path exists (note
// a zero-weight path still has edges).
inline std::vector<MultiEdgeRef> shortest_st_path(const LabeledMultiGraph& g,
                                                  NodeId from, NodeId to) {
  detail::Residual r = detail::Residual::from_multigraph(g);
  detail::Residual::PathTree tree = r.shortest_path_tree(from);
  if (tree.dist[to] == kUnreachable)
    throw Error("no path from " + std::to_string(from) + " to " +
                std::to_string(to));
  std::vector<int> slots = r.extract_path(tree, to);
  std::vector<MultiEdgeRef> path;
  path.reserve(slots.size());
  for (int s : slots) path.push_back(r.slot_refs[s]);
  return path;
}

inline std::vector<MultiEdgeRef> shortest_st_path(const LabeledMultiGraph& g) {
  return shortest_st_path(g, g.source, g.sink);
}

}  // namespace labelcut
