#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "lattice_loom/completion.hpp"
#include "lattice_loom/digraph.hpp"
#include "lattice_loom/errors.hpp"
#include "lattice_loom/graph.hpp"
#include "lattice_loom/poset.hpp"

namespace loom {

using Structure = std::variant<Poset, BipartiteGraph, Digraph>;

namespace detail {

using ordered_json = nlohmann::ordered_json;

inline ordered_json edges_json(const std::vector<std::pair<int, int>>& edges) {
  ordered_json a = ordered_json::array();
  for (auto [x, y] : edges) a.push_back(ordered_json::array({x, y}));
  return a;
}

inline ordered_json base_json(const char* kind, int n,
                              const std::vector<std::pair<int, int>>& edges,
                              const std::vector<std::string>& labels) {
  ordered_json j;
  j["kind"] = kind;
  j["n"] = n;
  j["edges"] = edges_json(edges);
  if (!labels.empty()) j["labels"] = labels;
  return j;
}

}  // namespace detail

inline std::string to_text(const Structure& s) {
  detail::ordered_json j;
  if (const Poset* p = std::get_if<Poset>(&s)) {
    j = detail::base_json("poset", p->n, p->covers, p->labels);
  } else if (const BipartiteGraph* g = std::get_if<BipartiteGraph>(&s)) {
    j = detail::base_json("bipartite", g->n, g->edges, g->labels);
    j["bipartition"] = std::vector<int>(g->side.begin(), g->side.end());
  } else {
    const Digraph& d = std::get<Digraph>(s);
    j = detail::base_json("digraph", d.n, d.arcs, d.labels);
    if (d.has_levels()) j["levels"] = d.level;
    std::vector<int> bd;
    for (int v = d.boundary.first(); v >= 0; v = d.boundary.next(v)) bd.push_back(v);
    if (!bd.empty()) j["boundary"] = bd;
  }
  j["meta"] = detail::ordered_json::object();
  return j.dump(1) + "\n";
}

namespace detail {

inline const ordered_json& field(const ordered_json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field ") + name);
  return *it;
}

inline std::vector<std::pair<int, int>> parse_edges(const ordered_json& j) {
  std::vector<std::pair<int, int>> out;
  if (!j.is_array()) throw ParseError("field edges must be an array");
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw ParseError("field edges must hold integer pairs");
    out.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return out;
}

inline std::vector<std::string> parse_labels(const ordered_json& j, int n) {
  if (!j.contains("labels")) return {};
  std::vector<std::string> out;
  for (const auto& l : field(j, "labels")) {
    if (!l.is_string()) throw ParseError("field labels must hold strings");
    out.push_back(l.get<std::string>());
  }
  if (int(out.size()) != n) throw ParseError("field labels has wrong length");
  return out;
}

}  // namespace detail

inline Structure parse_structure(const std::string& text) {
  detail::ordered_json j;
  try {
    j = detail::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!j.is_object()) throw ParseError("top level must be one object");
  std::string kind = detail::field(j, "kind").is_string()
                         ? detail::field(j, "kind").get<std::string>()
                         : throw ParseError("field kind must be a string");
  if (!detail::field(j, "n").is_number_integer()) throw ParseError("field n must be an integer");
  int n = detail::field(j, "n").get<int>();
  auto edges = detail::parse_edges(detail::field(j, "edges"));
  auto labels = detail::parse_labels(j, n);

  if (kind == "poset") {
    try {
      return build_poset(n, edges, PairMode::Covers, labels);
    } catch (const CycleError& e) {
      throw ValidationError(std::string("acyclic: ") + e.what());
    }
  }
  if (kind == "bipartite") {
    const auto& bj = detail::field(j, "bipartition");
    if (!bj.is_array() || int(bj.size()) != n)
      throw ParseError("field bipartition must list one part per vertex");
    std::vector<char> side;
    for (const auto& b : bj) {
      if (!b.is_number_integer() || (b.get<int>() != 0 && b.get<int>() != 1))
        throw ParseError("field bipartition entries must be 0 or 1");
      side.push_back(char(b.get<int>()));
    }
    try {
      return build_bipartite(n, std::move(side), edges, labels);
    } catch (const ValidationError& e) {
      throw ValidationError(std::string("bipartition: ") + e.what());
    }
  }
  if (kind == "digraph") {
    for (auto [a, b] : edges)
      for (auto [c, d] : edges)
        if (a == d && b == c)
          throw ValidationError("asymmetry between " + std::to_string(a) + " and " +
                                std::to_string(b));
    std::vector<int> level, boundary;
    if (j.contains("levels"))
      for (const auto& l : j["levels"]) level.push_back(l.get<int>());
    if (j.contains("boundary"))
      for (const auto& b : j["boundary"]) boundary.push_back(b.get<int>());
    return build_digraph(n, std::move(edges), std::move(level), std::move(boundary), labels);
  }
  throw ParseError("unknown kind " + kind);
}

inline void save_structure(const Structure& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << to_text(s);
}

inline Structure load_structure(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_structure(buf.str());
}

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline void dot_ranks(std::ostringstream& os, const std::vector<std::vector<int>>& groups) {
  for (const auto& g : groups) {
    if (g.empty()) continue;
    os << "  { rank=same;";
    for (int v : g) os << " " << v << ";";
    os << " }\n";
  }
}

}  // namespace detail

/// Hasse diagram, rank-grouped by height, covers drawn upward.
inline std::string export_dot(const Poset& p, const std::vector<int>& added = {}) {
  std::vector<char> open(p.n, 0);
  for (int v : added) open[v] = 1;
  std::ostringstream os;
  os << "digraph H {\n";
  if (p.n > 0) {
    os << "  rankdir=BT;\n  node [shape=circle, style=filled, fillcolor=black, "
          "fontcolor=white];\n";
    for (int v = 0; v < p.n; ++v) {
      os << "  " << v << " [label=" << detail::dot_quote(p.label(v));
      if (open[v]) os << ", fillcolor=white, fontcolor=black";
      os << "];\n";
    }
    auto h = p.heights();
    std::vector<std::vector<int>> groups(*std::max_element(h.begin(), h.end()) + 1);
    for (int v = 0; v < p.n; ++v) groups[h[v]].push_back(v);
    detail::dot_ranks(os, groups);
    for (auto [a, b] : p.covers) os << "  " << a << " -> " << b << ";\n";
  }
  os << "}\n";
  return os.str();
}

/// Completion drawing: vertices the completion added appear as open circles.
inline std::string export_dot(const CompletedPoset& c) {
  return export_dot(c.completion, c.added);
}

inline std::string export_dot(const BipartiteGraph& g) {
  std::ostringstream os;
  os << "graph H {\n";
  if (g.n > 0) {
    os << "  rankdir=BT;\n  node [shape=circle];\n";
    for (int v = 0; v < g.n; ++v)
      os << "  " << v << " [label=" << detail::dot_quote(g.label(v)) << "];\n";
    detail::dot_ranks(os, {g.part(0), g.part(1)});
    for (auto [a, b] : g.edges) os << "  " << a << " -- " << b << ";\n";
  }
  os << "}\n";
  return os.str();
}

/// Arcs drawn downward; ranks follow the level map when present; boundary
/// vertices dashed.
inline std::string export_dot(const Digraph& d) {
  std::ostringstream os;
  os << "digraph H {\n";
  if (d.n > 0) {
    os << "  rankdir=TB;\n  node [shape=circle];\n";
    for (int v = 0; v < d.n; ++v) {
      os << "  " << v << " [label=" << detail::dot_quote(d.label(v));
      if (d.is_boundary(v)) os << ", style=dashed";
      os << "];\n";
    }
    if (d.has_levels()) {
      int top = *std::max_element(d.level.begin(), d.level.end());
      std::vector<std::vector<int>> groups(top + 1);
      for (int v = 0; v < d.n; ++v) groups[top - d.level[v]].push_back(v);
      detail::dot_ranks(os, groups);
    }
    for (auto [a, b] : d.arcs) os << "  " << a << " -> " << b << ";\n";
  }
  os << "}\n";
  return os.str();
}

inline std::string export_dot(const Structure& s) {
  if (const Poset* p = std::get_if<Poset>(&s)) return export_dot(*p);
  if (const BipartiteGraph* g = std::get_if<BipartiteGraph>(&s)) return export_dot(*g);
  return export_dot(std::get<Digraph>(s));
}

}  // namespace loom
