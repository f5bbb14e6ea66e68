// Tests for the instance/solution text formats and the verifier.

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "labelcut/gen.hpp"
#include "labelcut/io.hpp"
#include "labelcut/oracle.hpp"
#include "labelcut/solve_unweighted.hpp"
#include "labelcut/solve_weighted.hpp"
#include "support/build.hpp"

namespace {

bool same_graph(const labelcut::LabeledGraph& a,
                const labelcut::LabeledGraph& b) {
  if (a.directed != b.directed || a.node_count != b.node_count ||
      a.source != b.source || a.sink != b.sink)
    return false;
  if (a.label_weights != b.label_weights) return false;
  if (a.edges.size() != b.edges.size()) return false;
  for (std::size_t i = 0; i < a.edges.size(); ++i)
    if (a.edges[i].tail != b.edges[i].tail ||
        a.edges[i].head != b.edges[i].head ||
        a.edges[i].label != b.edges[i].label)
      return false;
  return true;
}

int thrown_line(const std::string& text) {
  try {
    labelcut::parse_instance(text);
  } catch (const labelcut::ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("minimal instance parses", "[io]") {
  auto g = labelcut::parse_instance(
      "p lstc directed 2 1 1\n"
      "s 1\n"
      "t 2\n"
      "l 1 4\n"
      "e 1 2 1\n");
  CHECK(g.directed);
  CHECK(g.node_count == 2);
  CHECK(g.source == 1);
  CHECK(g.sink == 2);
  REQUIRE(g.label_count() == 1);
  CHECK(g.label_weights[1] == 4);
  REQUIRE(g.edge_count() == 1);
  CHECK(g.edges[0].tail == 1);
  CHECK(g.edges[0].head == 2);
  CHECK(g.edges[0].label == 1);
}

TEST_CASE("body lines are order-free", "[io]") {
  auto g = labelcut::parse_instance(
      "c a comment first\n"
      "p lstc undirected 3 2 2\n"
      "e 1 2 2\n"
      "t 3\n"
      "\n"
      "e 2 3 1\n"
      "c comments are fine anywhere\n"
      "l 2 5\n"
      "s 1\n"
      "l 1 1\n");
  CHECK_FALSE(g.directed);
  CHECK(g.label_weights[1] == 1);
  CHECK(g.label_weights[2] == 5);
  CHECK(g.edges[0].label == 2);
}

TEST_CASE("format offenses are rejected with their line", "[io]") {
  const std::string ok =
      "p lstc directed 2 1 1\ns 1\nt 2\nl 1 4\ne 1 2 1\n";

  SECTION("duplicate p line") {
    CHECK(thrown_line("p lstc directed 2 1 1\np lstc directed 2 1 1\n" +
                      std::string("s 1\nt 2\nl 1 4\ne 1 2 1\n")) == 2);
  }
  SECTION("data before the p line") {
    CHECK(thrown_line("s 1\n" + ok) == 1);
  }
  SECTION("unknown tag") {
    CHECK(thrown_line(ok + "x 1 2\n") == 6);
  }
  SECTION("malformed header") {
    CHECK(thrown_line("p lstc sideways 2 1 1\n") == 1);
    CHECK(thrown_line("p lstc directed 2 1\n") == 1);
    CHECK(thrown_line("p wrong directed 2 1 1\n") == 1);
  }
  SECTION("missing sections point past the end") {
    CHECK(thrown_line("p lstc directed 2 1 1\ns 1\nt 2\nl 1 4\n") == 5);
    CHECK(thrown_line("p lstc directed 2 1 1\ns 1\nl 1 4\ne 1 2 1\n") == 5);
  }
  SECTION("count overruns") {
    CHECK(thrown_line(ok + "e 2 1 1\n") == 6);
    CHECK(thrown_line(ok + "l 1 9\n") == 6);
  }
  SECTION("duplicate label") {
    CHECK(thrown_line("p lstc directed 2 1 2\ns 1\nt 2\nl 1 4\nl 1 5\n"
                      "e 1 2 1\n") == 5);
  }
  SECTION("label id beyond the declared count") {
    CHECK(thrown_line("p lstc directed 2 1 1\ns 1\nt 2\nl 2 4\ne 1 2 1\n") ==
          4);
  }
  SECTION("zero weight") {
    CHECK(thrown_line("p lstc directed 2 1 1\ns 1\nt 2\nl 1 0\ne 1 2 1\n") ==
          4);
  }
  SECTION("non-numeric field") {
    CHECK(thrown_line("p lstc directed two 1 1\n") == 1);
  }
}

TEST_CASE("structural defects map to the offending line", "[io]") {
  SECTION("source equals sink") {
    CHECK(thrown_line("p lstc directed 2 1 1\ns 1\nt 1\nl 1 4\ne 1 2 1\n") ==
          3);
  }
  SECTION("edge endpoint out of range") {
    CHECK(thrown_line("p lstc directed 2 1 1\ns 1\nt 2\nl 1 4\ne 1 9 1\n") ==
          5);
  }
  SECTION("self loop") {
    CHECK(thrown_line("p lstc directed 2 1 1\ns 1\nt 2\nl 1 4\ne 2 2 1\n") ==
          5);
  }
  SECTION("unknown label on an edge") {
    CHECK(thrown_line("p lstc directed 2 1 1\ns 1\nt 2\nl 1 4\ne 1 2 7\n") ==
          5);
  }
  SECTION("parallel edge") {
    CHECK(thrown_line("p lstc undirected 3 2 2\ns 1\nt 3\nl 1 4\nl 2 2\n"
                      "e 1 2 1\ne 2 1 2\n") == 7);
  }
}

TEST_CASE("instances round-trip through write and parse", "[io]") {
  std::mt19937 rng(149);
  for (int round = 0; round < 120; ++round) {
    auto g = testsupport::random_graph(rng, 3 + static_cast<int>(rng() % 10),
                                       16, 5, 9, rng() % 2 == 0);
    auto back = labelcut::parse_instance(labelcut::write_instance(g));
    CHECK(same_graph(g, back));
  }
}

TEST_CASE("solution files have the canonical shape", "[io]") {
  SECTION("feasible with one label") {
    labelcut::SolutionFile f;
    f.status = labelcut::SolutionStatus::feasible;
    f.weight = 7;
    f.labels = {2};
    CHECK(labelcut::write_solution(f) ==
          "status feasible\nweight 7\nlabels 1\n2\n");
  }
  SECTION("failure is a bare status line") {
    labelcut::SolutionFile f;
    f.status = labelcut::SolutionStatus::failure;
    CHECK(labelcut::write_solution(f) == "status failure\n");
  }
  SECTION("empty feasible solution") {
    labelcut::SolutionFile f;
    f.status = labelcut::SolutionStatus::feasible;
    CHECK(labelcut::write_solution(f) ==
          "status feasible\nweight 0\nlabels 0\n");
  }
}

TEST_CASE("solutions round-trip through write and parse", "[io]") {
  labelcut::SolutionFile f;
  f.status = labelcut::SolutionStatus::feasible;
  f.weight = 23;
  f.labels = {1, 4, 9};
  auto back = labelcut::parse_solution(labelcut::write_solution(f));
  CHECK(back.status == f.status);
  CHECK(back.weight == f.weight);
  CHECK(back.labels == f.labels);

  f.status = labelcut::SolutionStatus::infeasible;
  back = labelcut::parse_solution(labelcut::write_solution(f));
  CHECK(back.status == labelcut::SolutionStatus::infeasible);
}

TEST_CASE("malformed solutions are rejected", "[io]") {
  CHECK_THROWS_AS(labelcut::parse_solution(""), labelcut::ParseError);
  CHECK_THROWS_AS(labelcut::parse_solution("status maybe\n"),
                  labelcut::ParseError);
  CHECK_THROWS_AS(labelcut::parse_solution("status feasible\nweight 3\n"),
                  labelcut::ParseError);
  CHECK_THROWS_AS(
      labelcut::parse_solution("status feasible\nweight 3\nlabels 2\n1\n"),
      labelcut::ParseError);
  CHECK_THROWS_AS(
      labelcut::parse_solution("status feasible\nweight 3\nlabels 2\n2\n1\n"),
      labelcut::ParseError);
  CHECK_THROWS_AS(
      labelcut::parse_solution(
          "status feasible\nweight 3\nlabels 1\n1\nextra\n"),
      labelcut::ParseError);
  CHECK_THROWS_AS(labelcut::parse_solution("status failure\njunk\n"),
                  labelcut::ParseError);
}

TEST_CASE("verifier reports match the outcome", "[io]") {
  auto g = labelcut::parse_instance(
      "p lstc directed 2 1 1\ns 1\nt 2\nl 1 7\ne 1 2 1\n");

  SECTION("correct solution") {
    auto rep = labelcut::verify(
        g, labelcut::parse_solution("status feasible\nweight 7\nlabels 1\n1\n"));
    CHECK(rep.ok);
    CHECK(rep.message == "OK, weight 7, cut verified");
  }
  SECTION("wrong weight") {
    auto rep = labelcut::verify(
        g, labelcut::parse_solution("status feasible\nweight 5\nlabels 1\n1\n"));
    CHECK_FALSE(rep.ok);
    CHECK(rep.message == "WEIGHT MISMATCH (claimed 5, actual 7)");
  }
  SECTION("unknown label") {
    auto rep = labelcut::verify(
        g, labelcut::parse_solution("status feasible\nweight 7\nlabels 1\n3\n"));
    CHECK_FALSE(rep.ok);
    CHECK(rep.message == "unknown label 3");
  }
  SECTION("non-feasible status never verifies") {
    auto rep = labelcut::verify(g, labelcut::parse_solution("status failure\n"));
    CHECK_FALSE(rep.ok);
  }
}

TEST_CASE("failed cuts come with a surviving witness path", "[io]") {
  auto g = labelcut::parse_instance(
      "p lstc directed 3 3 3\ns 1\nt 3\n"
      "l 1 1\nl 2 1\nl 3 1\n"
      "e 1 2 1\ne 2 3 2\ne 1 3 3\n");
  auto rep = labelcut::verify(
      g, labelcut::parse_solution("status feasible\nweight 1\nlabels 1\n1\n"));
  CHECK_FALSE(rep.ok);
  CHECK(rep.message == "NOT A CUT: surviving path 1 -> 3");
  REQUIRE(rep.witness_path.size() == 2);
  CHECK(rep.witness_path.front() == g.source);
  CHECK(rep.witness_path.back() == g.sink);
}

TEST_CASE("every solver output verifies", "[io]") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    labelcut::GenSpec spec;
    spec.model = seed % 3 == 0   ? labelcut::GenModel::grid
                 : seed % 3 == 1 ? labelcut::GenModel::gnm
                                 : labelcut::GenModel::layered;
    spec.n = 8 + static_cast<int>(seed % 5);
    spec.m = static_cast<int>(std::min<std::int64_t>(
        spec.model == labelcut::GenModel::gnm ? 2 * spec.n : spec.n + 2,
        labelcut::max_edge_count(spec.model, spec.n, spec.directed)));
    spec.q = 5;
    spec.weight_max = seed % 2 == 0 ? 1 : 9;
    spec.directed = seed % 2 == 0;
    spec.seed = seed;
    auto g = labelcut::generate(spec);

    std::vector<labelcut::CutSolution> sols;
    if (g.unit_weights())
      sols.push_back(labelcut::solve_unweighted(g).solution);
    sols.push_back(labelcut::solve_weighted(g).solution);
    {
      auto oracle = labelcut::exact_min_label_cut(
          g, labelcut::OracleMode::weight);
      labelcut::CutSolution sol;
      sol.labels = oracle.labels;
      sol.weight = oracle.weight;
      sol.feasible = true;
      sols.push_back(sol);
    }
    for (const labelcut::CutSolution& sol : sols) {
      auto text = labelcut::write_solution(labelcut::to_solution_file(sol));
      auto rep = labelcut::verify(g, labelcut::parse_solution(text));
      CHECK(rep.ok);
    }
  }
}
