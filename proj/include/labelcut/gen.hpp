#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "labelcut/graph.hpp"
#include "labelcut/types.hpp"

namespace labelcut {

enum class GenModel { gnm, layered, grid };

struct GenSpec {
  GenModel model = GenModel::gnm;
  int n = 2;
  int m = 1;
  int q = 1;
  Weight weight_max = 1;
  bool directed = false;
  std::uint64_t seed = 0;
};

namespace detail {

// mt19937_64 has a fixed cross-platform sequence; the distribution adapters
// in <random> do not, so bounded draws use plain modulo (the tiny bias is
// irrelevant here, reproducibility is not).
class GenRng {
 public:
  explicit GenRng(std::uint64_t seed) : eng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, i - 1))]);
  }

 private:
  std::mt19937_64 eng_;
};

using Slot = std::pair<NodeId, NodeId>;

// Largest divisor of x that is at most sqrt(x); pairs a number into the
// most balanced rows-by-columns split.
inline int balanced_divisor(int x) {
  int best = 1;
  for (int d = 1; static_cast<std::int64_t>(d) * d <= x; ++d)
    if (x % d == 0) best = d;
  return best;
}

inline std::vector<Slot> layered_slots(int n) {
  // Layers: {source}, interior layers of uniform width, {sink}. The width
  // is the balanced divisor of n-2, so prime interiors give a single chain
  // (width 1: the instance degenerates to a path).
  std::vector<Slot> slots;
  int interior = n - 2;
  if (interior == 0) {
    slots.push_back({1, n});
    return slots;
  }
  int width = balanced_divisor(interior);
  int depth = interior / width;  // number of interior layers
  auto layer_vertex = [&](int layer, int j) -> NodeId {
    return 2 + (layer - 1) * width + j;
  };
  for (int j = 0; j < width; ++j) slots.push_back({1, layer_vertex(1, j)});
  for (int layer = 1; layer < depth; ++layer)
    for (int a = 0; a < width; ++a)
      for (int b = 0; b < width; ++b)
        slots.push_back({layer_vertex(layer, a), layer_vertex(layer + 1, b)});
  for (int j = 0; j < width; ++j) slots.push_back({layer_vertex(depth, j), n});
  return slots;
}

inline std::vector<Slot> grid_slots(int n) {
  // rows x cols grid, rows <= cols; edges go right and down, so the source
  // (top-left) reaches the sink (bottom-right) even in the directed case.
  int rows = balanced_divisor(n);
  int cols = n / rows;
  auto id = [&](int r, int c) -> NodeId { return r * cols + c + 1; };
  std::vector<Slot> slots;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) slots.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) slots.push_back({id(r, c), id(r + 1, c)});
    }
  return slots;
}

inline std::int64_t pair_count(int n, bool directed) {
  std::int64_t ordered = static_cast<std::int64_t>(n) * (n - 1);
  return directed ? ordered : ordered / 2;
}

// m distinct vertex pairs. Dense requests shuffle the full pair list;
// sparse ones use rejection sampling.
inline std::vector<Slot> sample_pairs(GenRng& rng, int n, int m,
                                      bool directed) {
  std::int64_t total = pair_count(n, directed);
  if (2 * static_cast<std::int64_t>(m) >= total) {
    std::vector<Slot> all;
    all.reserve(static_cast<std::size_t>(total));
    for (NodeId u = 1; u <= n; ++u)
      for (NodeId v = directed ? 1 : u + 1; v <= n; ++v)
        if (u != v) all.push_back({u, v});
    rng.shuffle(all);
    all.resize(m);
    return all;
  }
  std::set<Slot> seen;
  std::vector<Slot> out;
  while (static_cast<int>(out.size()) < m) {
    NodeId u = static_cast<NodeId>(rng.uniform(1, n));
    NodeId v = static_cast<NodeId>(rng.uniform(1, n));
    if (u == v) continue;
    if (!directed && u > v) std::swap(u, v);
    if (seen.insert({u, v}).second) out.push_back({u, v});
  }
  return out;
}

}  // namespace detail

// Most edges a model can host at a given vertex count.
inline std::int64_t max_edge_count(GenModel model, int n, bool directed) {
  if (n < 2) return 0;
  switch (model) {
    case GenModel::gnm:
      return detail::pair_count(n, directed);
    case GenModel::layered:
      return static_cast<std::int64_t>(detail::layered_slots(n).size());
    case GenModel::grid:
      return static_cast<std::int64_t>(detail::grid_slots(n).size());
  }
  return 0;
}

// Deterministic random instance: same spec, same bytes. The source is
// vertex 1 and the sink is vertex n; instances are regenerated (fresh
// randomness, same stream) until the source reaches the sink, up to 100
// attempts.
inline LabeledGraph generate(const GenSpec& spec) {
  if (spec.n < 2) throw InfeasibleSpec("need at least 2 vertices");
  if (spec.m < 1) throw InfeasibleSpec("need at least 1 edge");
  if (spec.q < 1) throw InfeasibleSpec("need at least 1 label");
  if (spec.weight_max < 1) throw InfeasibleSpec("maximum weight must be >= 1");

  std::vector<detail::Slot> all_slots;
  std::int64_t slot_limit = 0;
  switch (spec.model) {
    case GenModel::gnm:
      slot_limit = detail::pair_count(spec.n, spec.directed);
      break;
    case GenModel::layered:
      all_slots = detail::layered_slots(spec.n);
      slot_limit = static_cast<std::int64_t>(all_slots.size());
      break;
    case GenModel::grid:
      all_slots = detail::grid_slots(spec.n);
      slot_limit = static_cast<std::int64_t>(all_slots.size());
      break;
  }
  if (spec.m > slot_limit)
    throw InfeasibleSpec("model supports at most " +
                         std::to_string(slot_limit) + " edges for n = " +
                         std::to_string(spec.n) + ", requested " +
                         std::to_string(spec.m));

  detail::GenRng rng(spec.seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<detail::Slot> chosen;
    if (spec.model == GenModel::gnm) {
      chosen = detail::sample_pairs(rng, spec.n, spec.m, spec.directed);
    } else {
      std::vector<detail::Slot> pool = all_slots;
      rng.shuffle(pool);
      pool.resize(spec.m);
      chosen = std::move(pool);
    }

    LabeledGraph g;
    g.directed = spec.directed;
    g.node_count = spec.n;
    g.source = 1;
    g.sink = spec.n;
    g.edges.reserve(chosen.size());
    for (const detail::Slot& slot : chosen)
      g.edges.push_back({slot.first, slot.second,
                         static_cast<LabelId>(rng.uniform(1, spec.q))});
    g.label_weights.assign(1, 0);
    for (int l = 1; l <= spec.q; ++l)
      g.label_weights.push_back(rng.uniform(1, spec.weight_max));

    if (!is_cut(g, {})) {  // source still reaches sink: keep it
      assert(validate(g).empty());
      return g;
    }
  }
  throw InfeasibleSpec("no connected instance within 100 attempts");
}

}  // namespace labelcut
