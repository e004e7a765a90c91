#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lattice_loom/digraph.hpp"
#include "lattice_loom/errors.hpp"
#include "lattice_loom/families.hpp"
#include "lattice_loom/graph.hpp"
#include "lattice_loom/transitivity.hpp"

namespace loom {

/// Local bijection policy. Sorted pairs tree neighbours with delta vertices
/// in ascending order everywhere; Rotated offsets the pairing by the tree
/// vertex id. The resulting digraphs must be isomorphic; tests lean on that.
enum class DlPolicy { Sorted, Rotated };

struct DlResult {
  Digraph dl;
  Digraph tree;
  std::vector<std::pair<int, int>> vertex_arc;  // tree arc behind each dl vertex
};

namespace detail {

inline bool path_shaped(const BipartiteGraph& g) {
  if (!is_connected(g)) return false;
  if (int(g.edges.size()) != g.n - 1) return false;  // connected and acyclic
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

}  // namespace detail

/// Window of the arc digraph of the (|Y|,|X|)-valent directed tree: vertices
/// are tree arcs, with an arc (a,b) -> (b,d) when the local pairings at b
/// send d and a to adjacent vertices of delta. Levels descend along the
/// tree; a vertex is boundary when either tree endpoint is. Path-shaped
/// deltas degenerate: for those the construction is the (2,2) tree window
/// itself.
inline DlResult dl_construction(const BipartiteGraph& delta, int radius,
                                DlPolicy policy = DlPolicy::Sorted) {
  if (delta.n < 2 || delta.edges.empty())
    throw BadParams("dl_construction: delta needs at least one edge");
  if (radius < 1 || radius > 8) throw BadParams("dl_construction: need 1 <= radius <= 8");
  if (!is_connected(delta)) throw BadParams("dl_construction: delta must be connected");
  if (detail::path_shaped(delta)) {
    DlResult r;
    r.tree = directed_tree(2, 2, radius);
    r.dl = r.tree;
    return r;
  }
  if (!is_s_arc_transitive(delta, 1).verdict)
    throw NotOneArcTransitive("dl_construction: delta is not arc-transitive");

  std::vector<int> X = delta.part(0), Y = delta.part(1);
  int u = int(X.size()), v = int(Y.size());
  Digraph tree = directed_tree(v, u, radius);

  int nv = int(tree.arcs.size());
  std::vector<int> level(nv), boundary;
  std::vector<std::string> labels(nv);
  for (int i = 0; i < nv; ++i) {
    auto [a, b] = tree.arcs[i];
    level[i] = tree.level[a];
    if (tree.is_boundary(a) || tree.is_boundary(b)) boundary.push_back(i);
    labels[i] = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  int lo = *std::min_element(level.begin(), level.end());
  for (int& l : level) l -= lo;

  std::vector<std::pair<int, int>> arcs;
  for (int b = 0; b < tree.n; ++b) {
    std::vector<int> ins, outs;
    for (int a = tree.in[b].first(); a >= 0; a = tree.in[b].next(a)) ins.push_back(a);
    for (int d = tree.out[b].first(); d >= 0; d = tree.out[b].next(d)) outs.push_back(d);
    int off = policy == DlPolicy::Rotated ? b : 0;
    for (std::size_t i = 0; i < ins.size(); ++i) {
      int ya = Y[(int(i) + off) % v];
      for (std::size_t j = 0; j < outs.size(); ++j) {
        int xd = X[(int(j) + off) % u];
        if (delta.adj[xd].test(ya))
          arcs.emplace_back(tree.arc_id(ins[i], b), tree.arc_id(b, outs[j]));
      }
    }
  }

  DlResult r;
  r.tree = std::move(tree);
  r.dl = build_digraph(nv, std::move(arcs), std::move(level), std::move(boundary),
                       std::move(labels));
  r.vertex_arc = r.tree.arcs;
  return r;
}

}  // namespace loom
