#pragma once

#include <compare>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "labelcut/types.hpp"

namespace labelcut {

// Label of one parallel copy of an edge: the originating label plus a
// 1-based copy index. Copy labels with the same base and index are the same
// label even when they sit on different edges.
struct CopyLabel {
  LabelId base = 0;
  int index = 0;

  auto operator<=>(const CopyLabel&) const = default;
};

inline std::string to_string(const CopyLabel& c) {
  return std::to_string(c.base) + "#" + std::to_string(c.index);
}

// All parallel copies of one original edge whose label is admissible.
// Copy i carries copy label {origin_label, i}; copies run 1..copy_count.
struct MultiEdgeBundle {
  NodeId tail = 0;
  NodeId head = 0;
  LabelId origin_label = 0;
  int copy_count = 0;
};

// An edge whose label is forbidden: it can never be removed.
struct ForbiddenEdge {
  NodeId tail = 0;
  NodeId head = 0;
  LabelId origin_label = 0;
};

// Multigraph in which only admissible copy labels may be removed. Bundles
// store parallel copies compactly; observable behaviour matches a fully
// materialised edge list.
struct LabeledMultiGraph {
  bool directed = false;
  int node_count = 0;
  std::vector<MultiEdgeBundle> bundles;
  std::vector<ForbiddenEdge> forbidden_edges;
  NodeId source = 0;
  NodeId sink = 0;
  // Admissible label -> its copy labels, ascending index. Keys double as the
  // admissible label set.
  std::map<LabelId, std::vector<CopyLabel>> groups;

  std::int64_t copy_label_count() const {
    std::int64_t total = 0;
    for (const auto& [label, copies] : groups)
      total += static_cast<std::int64_t>(copies.size());
    return total;
  }

  std::int64_t edge_count() const {
    std::int64_t total = static_cast<std::int64_t>(forbidden_edges.size());
    for (const MultiEdgeBundle& b : bundles) total += b.copy_count;
    return total;
  }
};

// Identifies one concrete parallel edge: either copy `copy` of bundle
// `bundle`, or forbidden edge `forbidden`.
struct MultiEdgeRef {
  int bundle = -1;     // index into bundles when >= 0
  int copy = 0;        // 1-based copy index, meaningful when bundle >= 0
  int forbidden = -1;  // index into forbidden_edges when >= 0

  bool is_forbidden() const { return forbidden >= 0; }
  auto operator<=>(const MultiEdgeRef&) const = default;
};

inline std::pair<NodeId, NodeId> endpoints(const LabeledMultiGraph& g,
                                           const MultiEdgeRef& ref) {
  if (ref.is_forbidden()) {
    const ForbiddenEdge& e = g.forbidden_edges[ref.forbidden];
    return {e.tail, e.head};
  }
  const MultiEdgeBundle& b = g.bundles[ref.bundle];
  return {b.tail, b.head};
}

// Copy label carried by ref; {0,0} for forbidden edges.
inline CopyLabel copy_label_of(const LabeledMultiGraph& g,
                               const MultiEdgeRef& ref) {
  if (ref.is_forbidden()) return {};
  return {g.bundles[ref.bundle].origin_label, ref.copy};
}

// Largest number of parallel edges (copies plus forbidden) between any
// vertex pair; at least 1 so it can sit in products.
inline int max_multiplicity(const LabeledMultiGraph& g) {
  std::map<std::pair<NodeId, NodeId>, std::int64_t> count;
  auto key = [&](NodeId u, NodeId v) {
    if (!g.directed && u > v) std::swap(u, v);
    return std::pair<NodeId, NodeId>(u, v);
  };
  for (const MultiEdgeBundle& b : g.bundles) count[key(b.tail, b.head)] += b.copy_count;
  for (const ForbiddenEdge& e : g.forbidden_edges) count[key(e.tail, e.head)] += 1;
  std::int64_t best = 1;
  for (const auto& [pair, c] : count) best = std::max(best, c);
  return static_cast<int>(best);
}

// Edge weights for the removal rules: admissible copies weigh 1, forbidden
// edges weigh 0. Order: bundle copies (bundle order, ascending copy index),
// then forbidden edges.
inline std::vector<int> zero_one_weights(const LabeledMultiGraph& g) {
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(g.edge_count()));
  for (const MultiEdgeBundle& b : g.bundles)
    for (int i = 0; i < b.copy_count; ++i) w.push_back(1);
  for (std::size_t i = 0; i < g.forbidden_edges.size(); ++i) w.push_back(0);
  return w;
}

// True when deleting every edge copy whose copy label is in removed leaves
// no source-to-sink path. Forbidden edges always survive.
inline bool is_cut(const LabeledMultiGraph& g,
                   const std::set<CopyLabel>& removed) {
  std::vector<std::vector<NodeId>> adj(g.node_count + 1);
  auto add = [&](NodeId u, NodeId v) {
    adj[u].push_back(v);
    if (!g.directed) adj[v].push_back(u);
  };
  for (const MultiEdgeBundle& b : g.bundles) {
    bool survives = false;
    for (int i = 1; i <= b.copy_count && !survives; ++i)
      if (!removed.count({b.origin_label, i})) survives = true;
    if (survives) add(b.tail, b.head);
  }
  for (const ForbiddenEdge& e : g.forbidden_edges) add(e.tail, e.head);

  std::vector<char> reached(g.node_count + 1, 0);
  std::queue<NodeId> bfs;
  reached[g.source] = 1;
  bfs.push(g.source);
  while (!bfs.empty()) {
    NodeId u = bfs.front();
    bfs.pop();
    if (u == g.sink) return false;
    for (NodeId v : adj[u])
      if (!reached[v]) {
        reached[v] = 1;
        bfs.push(v);
      }
  }
  return true;
}

}  // namespace labelcut
