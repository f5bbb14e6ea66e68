#pragma once

#include <algorithm>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "labelcut/types.hpp"

namespace labelcut {

struct LabeledEdge {
  NodeId tail = 0;
  NodeId head = 0;
  LabelId label = 0;

  friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

// Simple graph whose edges carry labels; labels carry positive weights.
// For undirected graphs tail/head order is storage only.
struct LabeledGraph {
  bool directed = false;
  int node_count = 0;
  std::vector<LabeledEdge> edges;
  // Indexed by label id; slot 0 is unused padding.
  std::vector<Weight> label_weights;
  NodeId source = 0;
  NodeId sink = 0;

  int edge_count() const { return static_cast<int>(edges.size()); }
  int label_count() const {
    return label_weights.empty() ? 0 : static_cast<int>(label_weights.size()) - 1;
  }
  Weight weight_of(LabelId label) const { return label_weights[label]; }
  bool unit_weights() const {
    for (int l = 1; l <= label_count(); ++l)
      if (label_weights[l] != 1) return false;
    return true;
  }
};

// weights[i] is the weight of label i+1.
inline LabeledGraph make_graph(bool directed, int node_count,
                               std::vector<LabeledEdge> edges,
                               std::vector<Weight> weights, NodeId source,
                               NodeId sink) {
  LabeledGraph g;
  g.directed = directed;
  g.node_count = node_count;
  g.edges = std::move(edges);
  g.label_weights.assign(1, 0);
  g.label_weights.insert(g.label_weights.end(), weights.begin(), weights.end());
  g.source = source;
  g.sink = sink;
  return g;
}

// One structural defect and where it sits: on the graph header, on the
// source/sink choice, on a label (label_id set), or on an edge (1-based
// edge_index set).
struct Violation {
  enum class Site { header, endpoints, label, edge };

  Site site = Site::header;
  std::string message;
  int edge_index = -1;
  LabelId label_id = -1;
};

// Every invariant violation, in a stable order. Empty result == valid.
inline std::vector<Violation> validate(const LabeledGraph& g) {
  std::vector<Violation> out;

  if (g.node_count < 1)
    out.push_back({Violation::Site::header, "node count must be at least 1"});
  auto node_ok = [&](NodeId v) { return v >= 1 && v <= g.node_count; };
  if (!node_ok(g.source))
    out.push_back({Violation::Site::endpoints, "source vertex out of range"});
  if (!node_ok(g.sink))
    out.push_back({Violation::Site::endpoints, "sink vertex out of range"});
  if (g.source == g.sink)
    out.push_back({Violation::Site::endpoints, "source and sink must differ"});

  for (LabelId l = 1; l <= g.label_count(); ++l)
    if (g.label_weights[l] < 1)
      out.push_back({Violation::Site::label,
                     "label " + std::to_string(l) +
                         ": weight must be a positive integer",
                     -1, l});

  std::set<std::pair<NodeId, NodeId>> seen;
  for (int i = 0; i < g.edge_count(); ++i) {
    const LabeledEdge& e = g.edges[i];
    int idx = i + 1;
    std::string where = "edge " + std::to_string(idx) + ": ";
    auto edge_flaw = [&](std::string msg) {
      out.push_back({Violation::Site::edge, where + std::move(msg), idx, -1});
    };
    if (!node_ok(e.tail) || !node_ok(e.head)) {
      edge_flaw("endpoint out of range");
      continue;
    }
    if (e.tail == e.head) edge_flaw("self-loop");
    if (e.label < 1 || e.label > g.label_count())
      edge_flaw("unknown label " + std::to_string(e.label));
    std::pair<NodeId, NodeId> key(e.tail, e.head);
    if (!g.directed && key.first > key.second) std::swap(key.first, key.second);
    if (!seen.insert(key).second)
      edge_flaw("parallel edge between " + std::to_string(e.tail) + " and " +
                std::to_string(e.head));
  }
  return out;
}

inline std::vector<std::string> violation_messages(const LabeledGraph& g) {
  std::vector<std::string> msgs;
  for (const Violation& v : validate(g)) msgs.push_back(v.message);
  return msgs;
}

// True when deleting every edge whose label is in removed_labels leaves no
// source-to-sink path. Label ids outside the graph are ignored.
inline bool is_cut(const LabeledGraph& g, const std::set<LabelId>& removed_labels) {
  std::vector<char> removed(g.label_count() + 1, 0);
  for (LabelId l : removed_labels)
    if (l >= 1 && l <= g.label_count()) removed[l] = 1;

  std::vector<std::vector<NodeId>> adj(g.node_count + 1);
  for (const LabeledEdge& e : g.edges) {
    if (removed[e.label]) continue;
    adj[e.tail].push_back(e.head);
    if (!g.directed) adj[e.head].push_back(e.tail);
  }
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

inline Weight total_weight(const LabeledGraph& g,
                           const std::set<LabelId>& labels) {
  Weight sum = 0;
  for (LabelId l : labels) sum += g.label_weights[l];
  return sum;
}

}  // namespace labelcut
