#pragma once

#include <algorithm>
#include <vector>

#include "labelcut/detail/residual.hpp"
#include "labelcut/graph.hpp"
#include "labelcut/types.hpp"

namespace labelcut::detail {

// Unit-capacity max-flow (blocking-flow phases). Undirected edges become a
// mutually-reverse arc pair sharing one unit of capacity.
class UnitFlowNetwork {
 public:
  UnitFlowNetwork(int node_count, bool directed)
      : directed_(directed), head_(node_count + 1) {}

  void add_edge(NodeId u, NodeId v, int slot) {
    int a = add_arc(u, v, 1);
    int b = add_arc(v, u, directed_ ? 0 : 1);
    arcs_[a].rev = b;
    arcs_[b].rev = a;
    edges_.push_back({u, v, slot});
  }

  int max_flow(NodeId s, NodeId t) {
    last_source_ = s;
    int flow = 0;
    while (bfs_levels(s, t)) {
      cursor_.assign(head_.size(), 0);
      while (dfs_augment(s, t)) ++flow;
    }
    return flow;
  }

  // Edges crossing out of the residual-reachable source side after
  // max_flow; by max-flow/min-cut these form a minimum cut. For directed
  // graphs only source-side-to-sink-side edges qualify; undirected edges
  // qualify when their endpoints sit on opposite sides.
  std::vector<int> min_cut_slots() const {
    std::vector<char> in_s(head_.size(), 0);
    std::vector<NodeId> stack{last_source_};
    in_s[last_source_] = 1;
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (int a : head_[u])
        if (arcs_[a].cap > 0 && !in_s[arcs_[a].to]) {
          in_s[arcs_[a].to] = 1;
          stack.push_back(arcs_[a].to);
        }
    }
    std::vector<int> cut;
    for (const Edge& e : edges_) {
      bool crossing = directed_ ? (in_s[e.tail] && !in_s[e.head])
                                : (in_s[e.tail] != in_s[e.head]);
      if (crossing) cut.push_back(e.slot);
    }
    return cut;
  }

 private:
  struct Arc {
    NodeId to = 0;
    int cap = 0;
    int rev = 0;
  };
  struct Edge {
    NodeId tail = 0, head = 0;
    int slot = -1;
  };

  int add_arc(NodeId u, NodeId v, int cap) {
    head_[u].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({v, cap, 0});
    return static_cast<int>(arcs_.size()) - 1;
  }

  bool bfs_levels(NodeId s, NodeId t) {
    level_.assign(head_.size(), -1);
    std::vector<NodeId> queue{s};
    level_[s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      NodeId u = queue[i];
      for (int a : head_[u])
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] == -1) {
          level_[arcs_[a].to] = level_[u] + 1;
          queue.push_back(arcs_[a].to);
        }
    }
    return level_[t] != -1;
  }

  bool dfs_augment(NodeId u, NodeId t) {
    if (u == t) return true;
    for (std::size_t& i = cursor_[u]; i < head_[u].size(); ++i) {
      Arc& arc = arcs_[head_[u][i]];
      if (arc.cap > 0 && level_[arc.to] == level_[u] + 1 &&
          dfs_augment(arc.to, t)) {
        --arc.cap;
        ++arcs_[arc.rev].cap;
        return true;
      }
    }
    return false;
  }

  bool directed_;
  std::vector<std::vector<int>> head_;
  std::vector<Arc> arcs_;
  std::vector<Edge> edges_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
  NodeId last_source_ = 0;
};

// Minimum cut (as slot list) separating s from t over the alive slots of a
// residual. Deterministic for fixed input.
inline std::vector<int> min_cut_slots(const Residual& r, NodeId s, NodeId t) {
  UnitFlowNetwork net(r.node_count, r.directed);
  for (int slot = 0; slot < r.slot_count(); ++slot)
    if (r.slot_alive[slot])
      net.add_edge(r.slot_tail[slot], r.slot_head[slot], slot);
  net.max_flow(s, t);
  std::vector<int> cut = net.min_cut_slots();
  std::sort(cut.begin(), cut.end());
  return cut;
}

}  // namespace labelcut::detail

namespace labelcut {

// Edges (0-based indices) of a minimum-cardinality edge cut separating the
// source from the sink; empty when they are already disconnected.
inline std::vector<int> min_st_cut_unit(const LabeledGraph& g) {
  detail::Residual r = detail::Residual::from_graph(g);
  return detail::min_cut_slots(r, g.source, g.sink);
}

}  // namespace labelcut
