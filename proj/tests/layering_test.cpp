// Tests for the distance-layer partition and its candidate cuts.

#include <functional>
#include <random>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "labelcut/layering.hpp"
#include "labelcut/shortest_path.hpp"
#include "support/build.hpp"

namespace {

std::vector<labelcut::MultiEdgeRef> all_refs(const labelcut::LabeledMultiGraph& g) {
  std::vector<labelcut::MultiEdgeRef> refs;
  for (int b = 0; b < static_cast<int>(g.bundles.size()); ++b)
    for (int c = 1; c <= g.bundles[b].copy_count; ++c)
      refs.push_back({b, c, -1});
  for (int f = 0; f < static_cast<int>(g.forbidden_edges.size()); ++f)
    refs.push_back({-1, 0, f});
  return refs;
}

// Reachability after deleting exactly the given parallel edges.
bool reachable_without_refs(const labelcut::LabeledMultiGraph& g,
                            const std::set<labelcut::MultiEdgeRef>& dropped) {
  std::vector<std::vector<labelcut::NodeId>> adj(g.node_count + 1);
  for (const labelcut::MultiEdgeRef& ref : all_refs(g)) {
    if (dropped.count(ref)) continue;
    auto [u, v] = labelcut::endpoints(g, ref);
    adj[u].push_back(v);
    if (!g.directed) adj[v].push_back(u);
  }
  std::vector<char> seen(g.node_count + 1, 0);
  std::function<bool(labelcut::NodeId)> dfs = [&](labelcut::NodeId u) -> bool {
    if (u == g.sink) return true;
    seen[u] = 1;
    for (labelcut::NodeId v : adj[u])
      if (!seen[v] && dfs(v)) return true;
    return false;
  };
  return dfs(g.source);
}

labelcut::LabeledMultiGraph random_multigraph(std::mt19937& rng) {
  int n = 3 + static_cast<int>(rng() % 5);
  testsupport::MultiBuilder b(n, rng() % 2 == 0, 1, n);
  int parts = 3 + static_cast<int>(rng() % 7);
  for (int i = 0; i < parts; ++i) {
    labelcut::NodeId u = 1 + static_cast<int>(rng() % n);
    labelcut::NodeId v = 1 + static_cast<int>(rng() % n);
    if (u == v) continue;
    labelcut::LabelId l = 1 + static_cast<int>(rng() % 4);
    if (rng() % 4 == 0)
      b.forbidden(u, v, l);
    else
      b.bundle(u, v, l, 1 + static_cast<int>(rng() % 2));
  }
  return b.build();
}

}  // namespace

TEST_CASE("chain splits into singleton layers", "[layering]") {
  auto g = testsupport::MultiBuilder(4, true, 1, 4)
               .bundle(1, 2, 1, 1)
               .bundle(2, 3, 2, 1)
               .bundle(3, 4, 3, 1)
               .build();
  auto part = labelcut::layer_partition(g);
  REQUIRE(part.sink_layer.has_value());
  CHECK(*part.sink_layer == 3);
  REQUIRE(part.layers.size() == 4);
  for (int i = 0; i < 4; ++i) {
    REQUIRE(part.layers[i].size() == 1);
    CHECK(part.layers[i][0] == i + 1);
  }
  REQUIRE(part.candidate_cuts.size() == 3);
  for (const auto& cut : part.candidate_cuts) CHECK(cut.size() == 1);
  CHECK(part.chosen_index == 0);  // tie broken toward the smallest index
  REQUIRE(part.chosen_cut.size() == 1);
  CHECK(part.chosen_cut[0].bundle == 0);
}

TEST_CASE("forbidden edge folds its head into layer zero", "[layering]") {
  auto g = testsupport::MultiBuilder(3, true, 1, 3)
               .forbidden(1, 2, 2)
               .bundle(2, 3, 1, 1)
               .build();
  auto part = labelcut::layer_partition(g);
  REQUIRE(part.sink_layer.has_value());
  CHECK(*part.sink_layer == 1);
  REQUIRE(part.layers.size() == 2);
  CHECK(part.layers[0] == std::vector<labelcut::NodeId>{1, 2});
  CHECK(part.layers[1] == std::vector<labelcut::NodeId>{3});
  REQUIRE(part.candidate_cuts.size() == 1);
  REQUIRE(part.candidate_cuts[0].size() == 1);
  CHECK(part.candidate_cuts[0][0].bundle == 0);  // the 2->3 copy
  CHECK(part.chosen_index == 0);
}

TEST_CASE("unreachable sink leaves no candidates", "[layering]") {
  auto g = testsupport::MultiBuilder(3, true, 1, 3).bundle(2, 3, 1, 1).build();
  auto part = labelcut::layer_partition(g);
  CHECK_FALSE(part.sink_layer.has_value());
  CHECK(part.candidate_cuts.empty());
  CHECK(part.chosen_cut.empty());
  CHECK(part.chosen_index == -1);
}

TEST_CASE("forbidden-only connection puts the sink in layer zero",
          "[layering]") {
  auto g = testsupport::MultiBuilder(2, true, 1, 2).forbidden(1, 2, 1).build();
  auto part = labelcut::layer_partition(g);
  REQUIRE(part.sink_layer.has_value());
  CHECK(*part.sink_layer == 0);
  CHECK(part.candidate_cuts.empty());
  CHECK(part.chosen_cut.empty());
}

TEST_CASE("layers agree with distances and every candidate cut separates",
          "[layering]") {
  std::mt19937 rng(53);
  int separations = 0;
  for (int round = 0; round < 300; ++round) {
    auto g = random_multigraph(rng);
    auto part = labelcut::layer_partition(g);
    auto dist = labelcut::zero_one_distances(g, g.source);

    for (int i = 0; i < static_cast<int>(part.layers.size()); ++i)
      for (labelcut::NodeId v : part.layers[i]) CHECK(dist[v] == i);
    int placed = 0;
    for (const auto& layer : part.layers) placed += static_cast<int>(layer.size());
    int reachable = 0;
    for (labelcut::NodeId v = 1; v <= g.node_count; ++v)
      if (dist[v] != labelcut::kUnreachable) ++reachable;
    CHECK(placed == reachable);

    if (!part.sink_layer.has_value()) {
      CHECK(dist[g.sink] == labelcut::kUnreachable);
      continue;
    }
    CHECK(*part.sink_layer == dist[g.sink]);
    if (*part.sink_layer == 0) continue;

    REQUIRE(static_cast<int>(part.candidate_cuts.size()) == *part.sink_layer);
    std::size_t min_size = part.candidate_cuts[0].size();
    for (const auto& cut : part.candidate_cuts) {
      min_size = std::min(min_size, cut.size());
      for (const labelcut::MultiEdgeRef& ref : cut) CHECK_FALSE(ref.is_forbidden());
      CHECK_FALSE(reachable_without_refs(
          g, std::set<labelcut::MultiEdgeRef>(cut.begin(), cut.end())));
      ++separations;
    }
    REQUIRE(part.chosen_index >= 0);
    CHECK(part.chosen_cut.size() == min_size);
    CHECK(part.candidate_cuts[part.chosen_index].size() == min_size);
    for (int i = 0; i < part.chosen_index; ++i)
      CHECK(part.candidate_cuts[i].size() > min_size);
  }
  CHECK(separations > 120);
}
