#pragma once

#include <charconv>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "labelcut/detail/residual.hpp"
#include "labelcut/graph.hpp"
#include "labelcut/solution.hpp"
#include "labelcut/types.hpp"

namespace labelcut::detail {

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

inline std::int64_t parse_int(std::string_view token, int line,
                              std::int64_t lo, std::int64_t hi,
                              const char* what) {
  std::int64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line, std::string("expected an integer for ") + what +
                               ", got '" + std::string(token) + "'");
  if (value < lo || value > hi)
    throw ParseError(line, std::string(what) + " " + std::to_string(value) +
                               " out of range");
  return value;
}

// Lines of text, split on '\n', tolerating a trailing '\r' per line.
inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

}  // namespace labelcut::detail

namespace labelcut {

// Instance text format, line oriented:
//   c <comment>                          anywhere
//   p lstc <directed|undirected> n m q   exactly once, first non-comment
//   s <vertex>   /   t <vertex>          exactly once each
//   l <label-id> <weight>                exactly q, distinct ids in 1..q
//   e <tail> <head> <label-id>           exactly m
// Unknown tags are errors; blank lines are ignored. The parsed graph is
// validated and the first structural defect is reported with its line.
inline LabeledGraph parse_instance(std::string_view text) {
  constexpr std::int64_t kMaxCount = 100'000'000;
  constexpr Weight kMaxWeight = 1'000'000'000'000'000'000LL;

  std::vector<std::string_view> lines = detail::split_lines(text);
  LabeledGraph g;
  bool have_p = false, have_s = false, have_t = false;
  int declared_m = 0, declared_q = 0;
  int p_line = 0, s_line = 0, t_line = 0;
  std::vector<int> label_lines, edge_lines;
  std::vector<char> label_seen;

  for (int li = 0; li < static_cast<int>(lines.size()); ++li) {
    int line_no = li + 1;
    std::vector<std::string_view> tok = detail::split_tokens(lines[li]);
    if (tok.empty()) continue;
    std::string_view tag = tok[0];
    if (tag == "c") continue;

    if (!have_p && tag != "p")
      throw ParseError(line_no, "expected the p line before any other data");

    if (tag == "p") {
      if (have_p) throw ParseError(line_no, "duplicate p line");
      if (tok.size() != 6 || tok[1] != "lstc")
        throw ParseError(line_no,
                         "malformed header, expected 'p lstc <directed|"
                         "undirected> <n> <m> <q>'");
      if (tok[2] == "directed")
        g.directed = true;
      else if (tok[2] == "undirected")
        g.directed = false;
      else
        throw ParseError(line_no, "direction must be 'directed' or "
                                  "'undirected', got '" +
                                      std::string(tok[2]) + "'");
      g.node_count = static_cast<int>(
          detail::parse_int(tok[3], line_no, 1, kMaxCount, "vertex count"));
      declared_m = static_cast<int>(
          detail::parse_int(tok[4], line_no, 0, kMaxCount, "edge count"));
      declared_q = static_cast<int>(
          detail::parse_int(tok[5], line_no, 0, kMaxCount, "label count"));
      g.label_weights.assign(declared_q + 1, 0);
      label_seen.assign(declared_q + 1, 0);
      have_p = true;
      p_line = line_no;
    } else if (tag == "s") {
      if (have_s) throw ParseError(line_no, "duplicate s line");
      if (tok.size() != 2) throw ParseError(line_no, "malformed s line");
      g.source = static_cast<NodeId>(
          detail::parse_int(tok[1], line_no, 1, kMaxCount, "source vertex"));
      have_s = true;
      s_line = line_no;
    } else if (tag == "t") {
      if (have_t) throw ParseError(line_no, "duplicate t line");
      if (tok.size() != 2) throw ParseError(line_no, "malformed t line");
      g.sink = static_cast<NodeId>(
          detail::parse_int(tok[1], line_no, 1, kMaxCount, "sink vertex"));
      have_t = true;
      t_line = line_no;
    } else if (tag == "l") {
      if (tok.size() != 3) throw ParseError(line_no, "malformed l line");
      if (static_cast<int>(label_lines.size()) >= declared_q)
        throw ParseError(line_no, "more label lines than the declared " +
                                      std::to_string(declared_q));
      LabelId id = static_cast<LabelId>(
          detail::parse_int(tok[1], line_no, 1, declared_q, "label id"));
      Weight w =
          detail::parse_int(tok[2], line_no, 1, kMaxWeight, "label weight");
      if (label_seen[id])
        throw ParseError(line_no, "duplicate label " + std::to_string(id));
      label_seen[id] = 1;
      g.label_weights[id] = w;
      label_lines.push_back(line_no);
    } else if (tag == "e") {
      if (tok.size() != 4) throw ParseError(line_no, "malformed e line");
      if (static_cast<int>(edge_lines.size()) >= declared_m)
        throw ParseError(line_no, "more edge lines than the declared " +
                                      std::to_string(declared_m));
      LabeledEdge e;
      e.tail = static_cast<NodeId>(
          detail::parse_int(tok[1], line_no, 1, kMaxCount, "tail vertex"));
      e.head = static_cast<NodeId>(
          detail::parse_int(tok[2], line_no, 1, kMaxCount, "head vertex"));
      e.label = static_cast<LabelId>(
          detail::parse_int(tok[3], line_no, 1, kMaxCount, "label id"));
      g.edges.push_back(e);
      edge_lines.push_back(line_no);
    } else {
      throw ParseError(line_no, "unknown line tag '" + std::string(tag) + "'");
    }
  }

  int eof_line = static_cast<int>(lines.size()) + 1;
  if (!have_p) throw ParseError(eof_line, "missing p line");
  if (!have_s) throw ParseError(eof_line, "missing s line");
  if (!have_t) throw ParseError(eof_line, "missing t line");
  if (static_cast<int>(label_lines.size()) != declared_q)
    throw ParseError(eof_line, "expected " + std::to_string(declared_q) +
                                   " label lines, found " +
                                   std::to_string(label_lines.size()));
  if (static_cast<int>(edge_lines.size()) != declared_m)
    throw ParseError(eof_line, "expected " + std::to_string(declared_m) +
                                   " edge lines, found " +
                                   std::to_string(edge_lines.size()));

  std::vector<Violation> flaws = validate(g);
  if (!flaws.empty()) {
    const Violation& v = flaws.front();
    int line_no = p_line;
    switch (v.site) {
      case Violation::Site::header:
        line_no = p_line;
        break;
      case Violation::Site::endpoints:
        line_no = v.message.starts_with("source") ? s_line : t_line;
        if (v.message.starts_with("source and sink")) line_no = t_line;
        break;
      case Violation::Site::label:
        line_no = v.label_id >= 1 &&
                          v.label_id <= static_cast<int>(label_lines.size())
                      ? label_lines[v.label_id - 1]
                      : p_line;
        break;
      case Violation::Site::edge:
        line_no = edge_lines[v.edge_index - 1];
        break;
    }
    throw ParseError(line_no, v.message);
  }
  return g;
}

inline std::string write_instance(const LabeledGraph& g) {
  std::ostringstream out;
  out << "p lstc " << (g.directed ? "directed" : "undirected") << ' '
      << g.node_count << ' ' << g.edge_count() << ' ' << g.label_count()
      << '\n';
  out << "s " << g.source << '\n';
  out << "t " << g.sink << '\n';
  for (LabelId l = 1; l <= g.label_count(); ++l)
    out << "l " << l << ' ' << g.label_weights[l] << '\n';
  for (const LabeledEdge& e : g.edges)
    out << "e " << e.tail << ' ' << e.head << ' ' << e.label << '\n';
  return out.str();
}

enum class SolutionStatus { feasible, infeasible, failure };

// Solution text format: a status line; for feasible solutions a weight
// line, a labels count line, then that many label-id lines in ascending
// order. Other statuses are the bare status line.
struct SolutionFile {
  SolutionStatus status = SolutionStatus::feasible;
  Weight weight = 0;
  std::vector<LabelId> labels;
};

inline SolutionFile to_solution_file(const CutSolution& sol) {
  SolutionFile f;
  f.status =
      sol.feasible ? SolutionStatus::feasible : SolutionStatus::infeasible;
  if (sol.feasible) {
    f.weight = sol.weight;
    f.labels.assign(sol.labels.begin(), sol.labels.end());
  }
  return f;
}

inline std::string write_solution(const SolutionFile& f) {
  std::ostringstream out;
  switch (f.status) {
    case SolutionStatus::feasible:
      out << "status feasible\n";
      out << "weight " << f.weight << '\n';
      out << "labels " << f.labels.size() << '\n';
      for (LabelId l : f.labels) out << l << '\n';
      break;
    case SolutionStatus::infeasible:
      out << "status infeasible\n";
      break;
    case SolutionStatus::failure:
      out << "status failure\n";
      break;
  }
  return out.str();
}

inline SolutionFile parse_solution(std::string_view text) {
  std::vector<std::string_view> lines = detail::split_lines(text);
  SolutionFile f;
  // collect non-blank lines with their numbers
  std::vector<std::pair<int, std::vector<std::string_view>>> rows;
  for (int li = 0; li < static_cast<int>(lines.size()); ++li) {
    std::vector<std::string_view> tok = detail::split_tokens(lines[li]);
    if (!tok.empty()) rows.push_back({li + 1, std::move(tok)});
  }
  int eof_line = static_cast<int>(lines.size()) + 1;
  std::size_t at = 0;
  auto need = [&](const char* what) -> const std::pair<int, std::vector<std::string_view>>& {
    if (at >= rows.size())
      throw ParseError(eof_line, std::string("missing ") + what);
    return rows[at++];
  };

  {
    const auto& [line_no, tok] = need("status line");
    if (tok.size() != 2 || tok[0] != "status")
      throw ParseError(line_no, "expected 'status <feasible|infeasible|failure>'");
    if (tok[1] == "feasible")
      f.status = SolutionStatus::feasible;
    else if (tok[1] == "infeasible")
      f.status = SolutionStatus::infeasible;
    else if (tok[1] == "failure")
      f.status = SolutionStatus::failure;
    else
      throw ParseError(line_no,
                       "unknown status '" + std::string(tok[1]) + "'");
  }
  if (f.status != SolutionStatus::feasible) {
    if (at != rows.size())
      throw ParseError(rows[at].first, "unexpected data after the status line");
    return f;
  }
  {
    const auto& [line_no, tok] = need("weight line");
    if (tok.size() != 2 || tok[0] != "weight")
      throw ParseError(line_no, "expected 'weight <total>'");
    f.weight = detail::parse_int(tok[1], line_no, 0,
                                 std::numeric_limits<Weight>::max(), "weight");
  }
  std::int64_t count = 0;
  {
    const auto& [line_no, tok] = need("labels line");
    if (tok.size() != 2 || tok[0] != "labels")
      throw ParseError(line_no, "expected 'labels <count>'");
    count = detail::parse_int(tok[1], line_no, 0, 100'000'000, "label count");
  }
  for (std::int64_t i = 0; i < count; ++i) {
    const auto& [line_no, tok] = need("label id line");
    if (tok.size() != 1)
      throw ParseError(line_no, "expected a bare label id");
    LabelId id = static_cast<LabelId>(
        detail::parse_int(tok[0], line_no, 1, 100'000'000, "label id"));
    if (!f.labels.empty() && id <= f.labels.back())
      throw ParseError(line_no, "label ids must be strictly ascending");
    f.labels.push_back(id);
  }
  if (at != rows.size())
    throw ParseError(rows[at].first, "unexpected data after the label list");
  return f;
}

struct VerifyReport {
  bool ok = false;
  std::string message;
  Weight claimed_weight = 0;
  Weight actual_weight = 0;
  std::vector<NodeId> witness_path;  // surviving path when the cut fails
};

// Checks a claimed solution against an instance: the status must be
// feasible (removing every label always cuts a valid instance, so other
// statuses are never right), label ids must exist, the weight must add up
// and the removal must disconnect source from sink.
inline VerifyReport verify(const LabeledGraph& g, const SolutionFile& sol) {
  VerifyReport rep;
  if (sol.status != SolutionStatus::feasible) {
    rep.message =
        "status rejected: every instance admits a cut (remove all labels), "
        "so only feasible solutions are accepted";
    return rep;
  }
  for (LabelId l : sol.labels)
    if (l < 1 || l > g.label_count()) {
      rep.message = "unknown label " + std::to_string(l);
      return rep;
    }

  std::set<LabelId> removed(sol.labels.begin(), sol.labels.end());
  rep.claimed_weight = sol.weight;
  rep.actual_weight = total_weight(g, removed);
  if (rep.actual_weight != rep.claimed_weight) {
    rep.message = "WEIGHT MISMATCH (claimed " + std::to_string(sol.weight) +
                  ", actual " + std::to_string(rep.actual_weight) + ")";
    return rep;
  }

  if (!is_cut(g, removed)) {
    detail::Residual r = detail::Residual::from_graph(g);
    for (LabelId l : removed) r.remove_key(l);
    detail::Residual::PathTree tree = r.shortest_path_tree(g.source);
    rep.witness_path.push_back(g.source);
    NodeId v = g.source;
    for (int slot : r.extract_path(tree, g.sink)) {
      v = (r.slot_tail[slot] == v) ? r.slot_head[slot] : r.slot_tail[slot];
      rep.witness_path.push_back(v);
    }
    std::string path;
    for (NodeId u : rep.witness_path) {
      if (!path.empty()) path += " -> ";
      path += std::to_string(u);
    }
    rep.message = "NOT A CUT: surviving path " + path;
    return rep;
  }

  rep.ok = true;
  rep.message =
      "OK, weight " + std::to_string(rep.actual_weight) + ", cut verified";
  return rep;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

}  // namespace labelcut
