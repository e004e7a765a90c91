#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lattice_loom/bits.hpp"
#include "lattice_loom/digraph.hpp"
#include "lattice_loom/errors.hpp"
#include "lattice_loom/graph.hpp"
#include "lattice_loom/morphisms.hpp"
#include "lattice_loom/transitivity.hpp"

namespace loom {

/// One alternation class: arcs mutually reachable by walks whose consecutive
/// arcs alternately share tails and heads. Walks may revisit vertices and
/// reuse arcs, so a same-kind share can be padded through a repeated arc;
/// the class is therefore the closure under "share tail" and "share head".
struct AltClass {
  std::vector<int> arcs;  // arc ids, ascending
  Bitset tails, heads;    // endpoint vertex sets
  bool touches_boundary = false;
};

namespace detail {

struct ArcIndex {
  std::vector<std::vector<int>> by_tail, by_head;
  explicit ArcIndex(const Digraph& d) : by_tail(d.n), by_head(d.n) {
    for (int e = 0; e < int(d.arcs.size()); ++e) {
      by_tail[d.arcs[e].first].push_back(e);
      by_head[d.arcs[e].second].push_back(e);
    }
  }
};

inline AltClass grow_class(const Digraph& d, const ArcIndex& ix, int seed_arc,
                           std::vector<char>& seen_arc) {
  AltClass c;
  c.tails = Bitset(d.n);
  c.heads = Bitset(d.n);
  std::vector<int> queue = {seed_arc};
  seen_arc[seed_arc] = 1;
  std::vector<char> tail_done(d.n, 0), head_done(d.n, 0);
  while (!queue.empty()) {
    int e = queue.back();
    queue.pop_back();
    c.arcs.push_back(e);
    auto [t, h] = d.arcs[e];
    c.tails.set(t);
    c.heads.set(h);
    if (d.is_boundary(t) || d.is_boundary(h)) c.touches_boundary = true;
    if (!tail_done[t]) {
      tail_done[t] = 1;
      for (int f : ix.by_tail[t])
        if (!seen_arc[f]) seen_arc[f] = 1, queue.push_back(f);
    }
    if (!head_done[h]) {
      head_done[h] = 1;
      for (int f : ix.by_head[h])
        if (!seen_arc[f]) seen_arc[f] = 1, queue.push_back(f);
    }
  }
  std::sort(c.arcs.begin(), c.arcs.end());
  return c;
}

}  // namespace detail

inline AltClass alternating_class(const Digraph& d, int x, int y) {
  int e = d.arc_id(x, y);
  if (e < 0)
    throw MissingArc("alternating_class: no arc " + std::to_string(x) + " -> " +
                     std::to_string(y));
  detail::ArcIndex ix(d);
  std::vector<char> seen(d.arcs.size(), 0);
  return detail::grow_class(d, ix, e, seen);
}

inline std::vector<AltClass> alternation_classes(const Digraph& d) {
  detail::ArcIndex ix(d);
  std::vector<char> seen(d.arcs.size(), 0);
  std::vector<AltClass> out;
  for (int e = 0; e < int(d.arcs.size()); ++e)
    if (!seen[e]) out.push_back(detail::grow_class(d, ix, e, seen));
  return out;
}

/// Bipartite reading of a class: heads below, tails above, one edge per arc.
/// Impossible when some vertex is both a tail and a head in the class.
inline std::optional<BipartiteGraph> class_graph(const Digraph& d, const AltClass& c) {
  if (c.tails.intersects(c.heads)) return std::nullopt;
  std::vector<int> id(d.n, -1), heads, tails;
  for (int v = c.heads.first(); v >= 0; v = c.heads.next(v)) id[v] = int(heads.size()), heads.push_back(v);
  int nx = int(heads.size());
  for (int v = c.tails.first(); v >= 0; v = c.tails.next(v)) id[v] = nx + int(tails.size()), tails.push_back(v);
  std::vector<char> side(nx + tails.size(), 0);
  for (std::size_t i = nx; i < side.size(); ++i) side[i] = 1;
  std::vector<std::string> labels;
  for (int v : heads) labels.push_back(d.label(v));
  for (int v : tails) labels.push_back(d.label(v));
  std::vector<std::pair<int, int>> edges;
  for (int e : c.arcs) edges.emplace_back(id[d.arcs[e].second], id[d.arcs[e].first]);
  int nv = int(side.size());
  return build_bipartite(nv, std::move(side), edges, std::move(labels));
}

/// Alternation structure of a connected digraph: either one universal class,
/// or every class separates tails from heads. With arc-transitivity all
/// classes look alike and a representative bipartite graph is extracted.
struct ReachabilityReport {
  std::vector<AltClass> classes;
  bool arc_transitive = false;
  bool universal = false;
  bool all_bipartite = false;
  std::optional<BipartiteGraph> delta;
};

inline ReachabilityReport reachability_graph(const Digraph& d) {
  if (d.arcs.empty()) throw NoArcs("reachability_graph: no arcs");
  if (!is_connected_underlying(d)) throw NotConnected("reachability_graph: digraph disconnected");
  ReachabilityReport r;
  r.classes = alternation_classes(d);
  r.universal = r.classes.size() == 1;
  r.all_bipartite = true;
  for (const AltClass& c : r.classes)
    if (c.tails.intersects(c.heads)) r.all_bipartite = false;
  r.arc_transitive = is_one_arc_transitive(d);
  if (r.arc_transitive && r.all_bipartite) r.delta = class_graph(d, r.classes[0]);
  return r;
}

/// Pairwise descendant-set intersections are again descendant sets. Sources
/// range over non-boundary vertices; the witness may be any vertex.
struct IntersectionReport {
  bool holds = true;
  std::pair<int, int> witness{-1, -1};  // violating pair when !holds
  long long checked = 0;
};

inline IntersectionReport intersection_property(const Digraph& d) {
  std::vector<Bitset> desc;
  desc.reserve(d.n);
  for (int v = 0; v < d.n; ++v) desc.push_back(descendants(d, v, Direction::Down));
  IntersectionReport r;
  for (int x = 0; x < d.n; ++x) {
    if (d.is_boundary(x)) continue;
    for (int y = x + 1; y < d.n; ++y) {
      if (d.is_boundary(y)) continue;
      Bitset common = desc[x];
      common &= desc[y];
      if (common.none()) continue;
      ++r.checked;
      bool found = false;
      for (int z = common.first(); z >= 0 && !found; z = common.next(z))
        if (desc[z] == common) found = true;
      if (!found) {
        r.holds = false;
        r.witness = {x, y};
        return r;
      }
    }
  }
  return r;
}

/// Two in-branches of the given depth meeting only at a junction that opens
/// into an out-trunk of the same depth; the dual form flips every arc. All
/// vertices distinct and non-boundary.
struct YShape {
  int junction = -1;
  std::array<std::vector<int>, 2> branches;  // from the junction outward
  std::vector<int> trunk;                    // from the junction outward
  bool dual = false;
};

namespace detail {

// Simple directed paths of exactly `len` vertices beyond `start`, following
// in-arcs (up) or out-arcs (down), never touching boundary vertices.
inline std::vector<std::vector<int>> rays(const Digraph& d, int start, int len, bool up) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  auto step = [&](auto&& self, int v) -> void {
    if (int(path.size()) == len) {
      out.push_back(path);
      return;
    }
    const Bitset& nb = up ? d.in[v] : d.out[v];
    for (int w = nb.first(); w >= 0; w = nb.next(w)) {
      if (d.is_boundary(w) || w == start) continue;
      bool used = false;
      for (int p : path)
        if (p == w) used = true;
      if (used) continue;
      path.push_back(w);
      self(self, w);
      path.pop_back();
    }
  };
  step(step, start);
  return out;
}

inline bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  for (int x : a)
    for (int y : b)
      if (x == y) return false;
  return true;
}

}  // namespace detail

inline std::vector<YShape> y_shapes(const Digraph& d, int depth) {
  if (depth < 1) throw BadParams("y_shapes: need depth >= 1");
  std::vector<YShape> out;
  for (int j = 0; j < d.n; ++j) {
    if (d.is_boundary(j)) continue;
    auto ups = detail::rays(d, j, depth, true);
    auto downs = detail::rays(d, j, depth, false);
    for (int dual = 0; dual < 2; ++dual) {
      const auto& branches = dual ? downs : ups;
      const auto& trunks = dual ? ups : downs;
      for (std::size_t a = 0; a < branches.size(); ++a)
        for (std::size_t b = a + 1; b < branches.size(); ++b) {
          if (!detail::disjoint(branches[a], branches[b])) continue;
          for (const auto& t : trunks) {
            if (!detail::disjoint(branches[a], t) || !detail::disjoint(branches[b], t))
              continue;
            YShape s;
            s.junction = j;
            s.branches = {branches[a], branches[b]};
            s.trunk = t;
            s.dual = dual == 1;
            out.push_back(s);
          }
        }
    }
  }
  return out;
}

namespace detail {

// Role-colored 1-neighbourhood of a shape with boundary vertices clipped:
// junction 0, branch 1, trunk 2, surrounding context 3.
inline CDigraph shape_context(const Digraph& d, const YShape& s) {
  std::vector<int> role(d.n, -1);
  std::vector<int> verts;
  auto put = [&](int v, int r) {
    if (role[v] == -1) verts.push_back(v);
    role[v] = r;
  };
  put(s.junction, 0);
  for (const auto& br : s.branches)
    for (int v : br) put(v, 1);
  for (int v : s.trunk) put(v, 2);
  std::size_t core = verts.size();
  for (std::size_t i = 0; i < core; ++i) {
    int v = verts[i];
    Bitset nb = d.out[v];
    nb |= d.in[v];
    for (int w = nb.first(); w >= 0; w = nb.next(w))
      if (!d.is_boundary(w) && role[w] == -1) put(w, 3);
  }
  std::sort(verts.begin(), verts.end());
  std::vector<int> id(d.n, -1);
  for (std::size_t i = 0; i < verts.size(); ++i) id[verts[i]] = int(i);
  CDigraph g;
  g.n = int(verts.size());
  g.out.assign(g.n, Bitset(g.n));
  g.in.assign(g.n, Bitset(g.n));
  g.color.resize(g.n);
  for (std::size_t i = 0; i < verts.size(); ++i) g.color[i] = role[verts[i]];
  for (auto [a, b] : d.arcs)
    if (id[a] >= 0 && id[b] >= 0) g.add_arc(id[a], id[b]);
  for (int v : verts) role[v] = -1;
  return g;
}

}  // namespace detail

/// Shapes are compared through role-respecting isomorphism of their clipped
/// 1-neighbourhood contexts; the verdict asks for at most one class per
/// orientation. Vacuously true without shapes.
struct YReport {
  long long y_count = 0, ybar_count = 0;
  int y_classes = 0, ybar_classes = 0;
  bool verdict = true;
};

inline YReport y_transitive(const Digraph& d, int depth) {
  YReport r;
  std::array<std::vector<CDigraph>, 2> reps;
  for (const YShape& s : y_shapes(d, depth)) {
    (s.dual ? r.ybar_count : r.y_count)++;
    CDigraph ctx = detail::shape_context(d, s);
    auto& family = reps[s.dual ? 1 : 0];
    bool known = false;
    for (const CDigraph& rep : family)
      if (find_isomorphism(ctx, rep)) {
        known = true;
        break;
      }
    if (!known) family.push_back(std::move(ctx));
  }
  r.y_classes = int(reps[0].size());
  r.ybar_classes = int(reps[1].size());
  r.verdict = r.y_classes <= 1 && r.ybar_classes <= 1;
  return r;
}

namespace detail {

// Simple cycles of the underlying graph through non-boundary vertices only,
// up to `cap` vertices. Each cycle reported once, smallest vertex first.
inline std::vector<std::vector<int>> bounded_cycles(const Digraph& d, int cap) {
  std::vector<Bitset> und(d.n, Bitset(d.n));
  for (auto [a, b] : d.arcs) {
    if (d.is_boundary(a) || d.is_boundary(b)) continue;
    und[a].set(b);
    und[b].set(a);
  }
  std::vector<std::vector<int>> cycles;
  std::vector<int> path;
  std::vector<char> on(d.n, 0);
  auto dfs = [&](auto&& self, int v) -> void {
    for (int w = und[v].first(); w >= 0; w = und[v].next(w)) {
      if (w == path[0]) {
        if (path.size() >= 3 && path[1] < path.back()) cycles.push_back(path);
        continue;
      }
      if (w < path[0] || on[w] || int(path.size()) >= cap) continue;
      on[w] = 1;
      path.push_back(w);
      self(self, w);
      path.pop_back();
      on[w] = 0;
    }
  };
  for (int s = 0; s < d.n; ++s) {
    if (d.is_boundary(s)) continue;
    path = {s};
    on[s] = 1;
    dfs(dfs, s);
    on[s] = 0;
  }
  return cycles;
}

}  // namespace detail

/// Local structure report against a reference bipartite graph delta.
/// p2: every bounded cycle alternates, each vertex on it a local source or
///     sink. p3: every bounded cycle stays inside one alternation class and
///     that class reads as delta. p4: at each interior vertex both stars
///     extend to classes reading as delta. p5: each interior arc's class
///     reads as delta and the arc lies in exactly one embedded copy.
struct PReport {
  bool p2 = true, p3 = true, p4 = true, p5 = true;
  long long cycles = 0;       // bounded interior cycles inspected
  bool p3_vacuous = false;    // no cycles to inspect
  std::pair<int, int> p2_witness{-1, -1};  // cycle vertex and its position
};

namespace detail {

// Embedded copies of delta containing the arc `anchor`: level-respecting
// injective maps sending edges to arcs, counted by distinct arc images.
inline int copies_through(const Digraph& d, const BipartiteGraph& delta, int anchor) {
  auto [t, h] = d.arcs[anchor];
  std::set<std::vector<std::pair<int, int>>> images;
  int n = delta.n;
  std::vector<int> img(n, -1);
  std::vector<char> used(d.n, 0);
  std::vector<int> order;  // pattern vertices, each adjacent to an earlier one
  auto run = [&](auto&& self, std::size_t k) -> void {
    if (k == order.size()) {
      std::vector<std::pair<int, int>> arcs;
      for (auto [x, y] : delta.edges) arcs.emplace_back(img[y], img[x]);
      std::sort(arcs.begin(), arcs.end());
      images.insert(arcs);
      return;
    }
    int pv = order[k];
    bool top = delta.side[pv] == 1;  // tops map to tails
    for (int cand = 0; cand < d.n; ++cand) {
      if (used[cand]) continue;
      if (d.has_levels() && d.level[cand] != (top ? d.level[t] : d.level[h])) continue;
      bool ok = true;
      for (int q = delta.adj[pv].first(); q >= 0 && ok; q = delta.adj[pv].next(q)) {
        if (img[q] == -1) continue;
        int a = top ? cand : img[q], b = top ? img[q] : cand;
        if (!d.has_arc(a, b)) ok = false;
      }
      if (!ok) continue;
      img[pv] = cand;
      used[cand] = 1;
      self(self, k + 1);
      used[cand] = 0;
      img[pv] = -1;
    }
  };
  for (auto [x0, y0] : delta.edges) {
    img.assign(n, -1);
    std::fill(used.begin(), used.end(), 0);
    img[x0] = h;
    img[y0] = t;
    used[h] = used[t] = 1;
    order.clear();
    std::vector<char> seen(n, 0);
    seen[x0] = seen[y0] = 1;
    std::vector<int> queue = {x0, y0};
    while (!queue.empty()) {
      int v = queue.front();
      queue.erase(queue.begin());
      for (int w = delta.adj[v].first(); w >= 0; w = delta.adj[v].next(w))
        if (!seen[w]) seen[w] = 1, order.push_back(w), queue.push_back(w);
    }
    run(run, 0);
  }
  return int(images.size());
}

}  // namespace detail

inline PReport check_p_properties(const Digraph& d, const BipartiteGraph& delta,
                                  int cycle_cap = 16) {
  if (!d.has_levels()) throw MissingLevels("check_p_properties: digraph has no level map");
  PReport r;

  std::vector<int> cls(d.arcs.size(), -1);
  auto classes = alternation_classes(d);
  for (int c = 0; c < int(classes.size()); ++c)
    for (int e : classes[c].arcs) cls[e] = c;
  std::vector<char> iso_cache(classes.size(), 2);  // 2 unknown, then 0/1
  auto class_is_delta = [&](int c) -> bool {
    if (iso_cache[c] == 2) {
      auto g = class_graph(d, classes[c]);
      iso_cache[c] = g && bipartite_isomorphic(*g, delta, true) ? 1 : 0;
    }
    return iso_cache[c] == 1;
  };

  auto cycles = detail::bounded_cycles(d, cycle_cap);
  r.cycles = (long long)(cycles.size());
  r.p3_vacuous = cycles.empty();
  for (const auto& cy : cycles) {
    int k = int(cy.size());
    for (int i = 0; i < k && r.p2; ++i) {
      int prev = cy[(i + k - 1) % k], next = cy[(i + 1) % k];
      bool out_prev = d.has_arc(cy[i], prev), out_next = d.has_arc(cy[i], next);
      if (out_prev != out_next) {
        r.p2 = false;
        r.p2_witness = {cy[i], i};
      }
    }
    if (r.p3) {
      int c0 = -1;
      bool one = true;
      for (int i = 0; i < k; ++i) {
        int a = cy[i], b = cy[(i + 1) % k];
        int e = d.has_arc(a, b) ? d.arc_id(a, b) : d.arc_id(b, a);
        if (c0 == -1) c0 = cls[e];
        if (cls[e] != c0) one = false;
      }
      if (!one || !class_is_delta(c0)) r.p3 = false;
    }
  }

  for (int v = 0; v < d.n && r.p4; ++v) {
    if (d.is_boundary(v)) continue;
    int e_out = d.out[v].first() >= 0 ? d.arc_id(v, d.out[v].first()) : -1;
    int e_in = d.in[v].first() >= 0 ? d.arc_id(d.in[v].first(), v) : -1;
    if (e_out >= 0 && !class_is_delta(cls[e_out])) r.p4 = false;
    if (e_in >= 0 && !class_is_delta(cls[e_in])) r.p4 = false;
  }

  for (int e = 0; e < int(d.arcs.size()) && r.p5; ++e) {
    auto [t, h] = d.arcs[e];
    if (d.is_boundary(t) || d.is_boundary(h)) continue;
    if (!class_is_delta(cls[e]) || detail::copies_through(d, delta, e) != 1) r.p5 = false;
  }
  return r;
}

}  // namespace loom
