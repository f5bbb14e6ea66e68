#pragma once

#include <deque>
#include <vector>

#include "labelcut/graph.hpp"
#include "labelcut/multigraph.hpp"
#include "labelcut/types.hpp"

namespace labelcut::detail {

// Mutable view of a graph used by the solvers: a flat list of "slots" (one
// per concrete parallel edge) that can be switched off in groups sharing a
// removal key. Keys are label ids for simple graphs and dense copy-label
// ids for multigraphs; key 0 marks an edge that can never be removed.
struct Residual {
  int node_count = 0;
  bool directed = false;

  std::vector<NodeId> slot_tail, slot_head;
  std::vector<signed char> slot_weight;  // 0 or 1
  std::vector<int> slot_key;
  std::vector<char> slot_alive;
  std::vector<std::vector<int>> key_slots;  // key -> its slots; [0] unused

  // Filled only by from_multigraph.
  std::vector<CopyLabel> key_copy_labels;  // key -> copy label; [0] unused
  std::vector<MultiEdgeRef> slot_refs;

  // CSR arcs; undirected slots appear once per direction.
  std::vector<int> adj_start;
  std::vector<int> arc_head, arc_slot;

  int slot_count() const { return static_cast<int>(slot_tail.size()); }
  int key_count() const { return static_cast<int>(key_slots.size()) - 1; }

  void add_slot(NodeId tail, NodeId head, int weight, int key) {
    slot_tail.push_back(tail);
    slot_head.push_back(head);
    slot_weight.push_back(static_cast<signed char>(weight));
    slot_key.push_back(key);
    slot_alive.push_back(1);
  }

  // Build the CSR arc lists; call once after the last add_slot. Arcs of a
  // vertex come out in ascending slot order, which fixes every tie-break.
  void finalize() {
    int arcs = 0;
    std::vector<int> degree(node_count + 2, 0);
    for (int s = 0; s < slot_count(); ++s) {
      ++degree[slot_tail[s]];
      ++arcs;
      if (!directed) {
        ++degree[slot_head[s]];
        ++arcs;
      }
    }
    adj_start.assign(node_count + 2, 0);
    for (int v = 1; v <= node_count; ++v)
      adj_start[v + 1] = adj_start[v] + degree[v];
    arc_head.assign(arcs, 0);
    arc_slot.assign(arcs, 0);
    std::vector<int> cursor(adj_start.begin(), adj_start.end());
    for (int s = 0; s < slot_count(); ++s) {
      int a = cursor[slot_tail[s]]++;
      arc_head[a] = slot_head[s];
      arc_slot[a] = s;
      if (!directed) {
        int b = cursor[slot_head[s]]++;
        arc_head[b] = slot_tail[s];
        arc_slot[b] = s;
      }
    }
    for (auto& slots : key_slots) slots.clear();
    for (int s = 0; s < slot_count(); ++s)
      if (slot_key[s] > 0) key_slots[slot_key[s]].push_back(s);
  }

  static Residual from_graph(const LabeledGraph& g) {
    Residual r;
    r.node_count = g.node_count;
    r.directed = g.directed;
    r.key_slots.resize(g.label_count() + 1);
    for (const LabeledEdge& e : g.edges) r.add_slot(e.tail, e.head, 1, e.label);
    r.finalize();
    return r;
  }

  // Slot order matches zero_one_weights(): bundle copies, then forbidden
  // edges. Copy-label keys are dense ids in group order (ascending label,
  // ascending copy index).
  static Residual from_multigraph(const LabeledMultiGraph& g) {
    Residual r;
    r.node_count = g.node_count;
    r.directed = g.directed;
    std::map<CopyLabel, int> key_of;
    r.key_copy_labels.assign(1, {});
    for (const auto& [label, copies] : g.groups)
      for (const CopyLabel& c : copies) {
        key_of[c] = static_cast<int>(r.key_copy_labels.size());
        r.key_copy_labels.push_back(c);
      }
    r.key_slots.resize(r.key_copy_labels.size());
    for (int bi = 0; bi < static_cast<int>(g.bundles.size()); ++bi) {
      const MultiEdgeBundle& b = g.bundles[bi];
      for (int i = 1; i <= b.copy_count; ++i) {
        r.add_slot(b.tail, b.head, 1, key_of.at({b.origin_label, i}));
        r.slot_refs.push_back({bi, i, -1});
      }
    }
    for (int fi = 0; fi < static_cast<int>(g.forbidden_edges.size()); ++fi) {
      const ForbiddenEdge& e = g.forbidden_edges[fi];
      r.add_slot(e.tail, e.head, 0, 0);
      r.slot_refs.push_back({-1, 0, fi});
    }
    r.finalize();
    return r;
  }

  void remove_key(int key) {
    for (int s : key_slots[key]) slot_alive[s] = 0;
  }
  void restore_key(int key) {
    for (int s : key_slots[key]) slot_alive[s] = 1;
  }

  // 0/1 BFS over alive slots; kUnreachable where no path exists.
  std::vector<int> distances_from(NodeId src) const {
    std::vector<int> dist(node_count + 1, kUnreachable);
    std::deque<NodeId> dq;
    dist[src] = 0;
    dq.push_back(src);
    while (!dq.empty()) {
      NodeId u = dq.front();
      dq.pop_front();
      for (int a = adj_start[u]; a < adj_start[u + 1]; ++a) {
        int s = arc_slot[a];
        if (!slot_alive[s]) continue;
        NodeId v = arc_head[a];
        int nd = dist[u] + slot_weight[s];
        if (dist[v] == kUnreachable || nd < dist[v]) {
          dist[v] = nd;
          if (slot_weight[s])
            dq.push_back(v);
          else
            dq.push_front(v);
        }
      }
    }
    return dist;
  }

  struct PathTree {
    std::vector<int> dist;
    std::vector<int> parent_slot;  // -1 at src / unreachable
    std::vector<NodeId> parent_node;
  };

  // Shortest-path tree from src under 0/1 weights. Parents are assigned on
  // strict improvement while scanning arcs in slot order, so among equally
  // short paths the tree picks the one preferring earlier edges (for unit
  // weights: the lexicographically smallest edge-index sequence).
  PathTree shortest_path_tree(NodeId src) const {
    PathTree t;
    t.dist.assign(node_count + 1, kUnreachable);
    t.parent_slot.assign(node_count + 1, -1);
    t.parent_node.assign(node_count + 1, 0);
    std::deque<NodeId> dq;
    t.dist[src] = 0;
    dq.push_back(src);
    while (!dq.empty()) {
      NodeId u = dq.front();
      dq.pop_front();
      for (int a = adj_start[u]; a < adj_start[u + 1]; ++a) {
        int s = arc_slot[a];
        if (!slot_alive[s]) continue;
        NodeId v = arc_head[a];
        int nd = t.dist[u] + slot_weight[s];
        if (t.dist[v] == kUnreachable || nd < t.dist[v]) {
          t.dist[v] = nd;
          t.parent_slot[v] = s;
          t.parent_node[v] = u;
          if (slot_weight[s])
            dq.push_back(v);
          else
            dq.push_front(v);
        }
      }
    }
    return t;
  }

  // Slot sequence from src (implied by the tree) to dst; empty when dst is
  // unreachable or equals the root.
  std::vector<int> extract_path(const PathTree& t, NodeId dst) const {
    std::vector<int> path;
    if (t.dist[dst] == kUnreachable) return path;
    NodeId v = dst;
    while (t.parent_slot[v] != -1) {
      path.push_back(t.parent_slot[v]);
      v = t.parent_node[v];
      assert(static_cast<int>(path.size()) <= slot_count());
    }
    std::reverse(path.begin(), path.end());
    return path;
  }
};

}  // namespace labelcut::detail
