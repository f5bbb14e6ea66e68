#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "labelcut/detail/residual.hpp"
#include "labelcut/multigraph.hpp"
#include "labelcut/types.hpp"

namespace labelcut::detail {

// Distance layers of a residual under 0/1 weights plus the candidate edge
// sets crossing consecutive layers below the sink layer. E_i holds the
// alive slots with one endpoint at distance i and the other at i+1 (the
// tail at i for directed graphs), for 0 <= i < sink layer. Each E_i
// separates source from sink; the smallest one (lowest index on ties) is
// chosen.
struct LayerInfo {
  std::vector<std::vector<NodeId>> layers;  // index = distance from source
  std::optional<int> sink_layer;
  std::vector<std::int64_t> cut_sizes;        // |E_i|
  std::vector<std::vector<int>> candidate_slots;  // filled on request
  std::vector<int> chosen_slots;
  int chosen_index = -1;
  int forbidden_in_chosen = 0;  // weight-0 slots in the chosen set
};

inline LayerInfo build_layers(const Residual& r, NodeId src, NodeId dst,
                              bool keep_candidates = false) {
  LayerInfo info;
  std::vector<int> dist = r.distances_from(src);

  int max_layer = 0;
  for (NodeId v = 1; v <= r.node_count; ++v)
    if (dist[v] != kUnreachable) max_layer = std::max(max_layer, dist[v]);
  info.layers.assign(max_layer + 1, {});
  for (NodeId v = 1; v <= r.node_count; ++v)
    if (dist[v] != kUnreachable) info.layers[dist[v]].push_back(v);

  if (dist[dst] == kUnreachable) return info;
  int tau = dist[dst];
  info.sink_layer = tau;
  if (tau == 0) return info;  // source layer holds the sink; nothing to cut

  auto candidate_index = [&](int slot) -> int {
    int du = dist[r.slot_tail[slot]];
    int dv = dist[r.slot_head[slot]];
    if (du == kUnreachable || dv == kUnreachable) return -1;
    if (!r.directed && du > dv) std::swap(du, dv);
    if (dv != du + 1) return -1;
    return du < tau ? du : -1;
  };

  info.cut_sizes.assign(tau, 0);
  if (keep_candidates) info.candidate_slots.assign(tau, {});
  for (int slot = 0; slot < r.slot_count(); ++slot) {
    if (!r.slot_alive[slot]) continue;
    int i = candidate_index(slot);
    if (i < 0) continue;
    ++info.cut_sizes[i];
    if (keep_candidates) info.candidate_slots[i].push_back(slot);
  }
  info.chosen_index = 0;
  for (int i = 1; i < tau; ++i)
    if (info.cut_sizes[i] < info.cut_sizes[info.chosen_index])
      info.chosen_index = i;

  for (int slot = 0; slot < r.slot_count(); ++slot) {
    if (!r.slot_alive[slot]) continue;
    if (candidate_index(slot) == info.chosen_index) {
      info.chosen_slots.push_back(slot);
      if (r.slot_weight[slot] == 0) ++info.forbidden_in_chosen;
    }
  }
  return info;
}

}  // namespace labelcut::detail

namespace labelcut {

// Distance layers of a multigraph under 0/1 weights, the candidate cuts
// between consecutive layers, and the chosen minimum-size candidate.
// sink_layer is unset when the sink is unreachable (then no candidates
// exist); a sink_layer of 0 means source and sink are joined by forbidden
// edges alone, which no removal can separate.
struct LayerPartition {
  std::vector<std::vector<NodeId>> layers;                // V_0, V_1, ...
  std::optional<int> sink_layer;
  std::vector<std::vector<MultiEdgeRef>> candidate_cuts;  // E_0 .. E_{tau-1}
  std::vector<MultiEdgeRef> chosen_cut;
  int chosen_index = -1;
};

inline LayerPartition layer_partition(const LabeledMultiGraph& g) {
  detail::Residual r = detail::Residual::from_multigraph(g);
  detail::LayerInfo info = detail::build_layers(r, g.source, g.sink, true);

  LayerPartition part;
  part.layers = std::move(info.layers);
  part.sink_layer = info.sink_layer;
  part.chosen_index = info.chosen_index;
  for (int slot : info.chosen_slots) part.chosen_cut.push_back(r.slot_refs[slot]);
  for (const std::vector<int>& slots : info.candidate_slots) {
    std::vector<MultiEdgeRef> refs;
    refs.reserve(slots.size());
    for (int slot : slots) refs.push_back(r.slot_refs[slot]);
    part.candidate_cuts.push_back(std::move(refs));
  }
  return part;
}

}  // namespace labelcut
