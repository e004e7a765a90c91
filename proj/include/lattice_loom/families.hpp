#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lattice_loom/digraph.hpp"
#include "lattice_loom/errors.hpp"
#include "lattice_loom/fields.hpp"
#include "lattice_loom/graph.hpp"

namespace loom {

namespace detail {

inline std::vector<char> two_sides(int nx, int ny) {
  std::vector<char> side(nx + ny, 0);
  for (int i = nx; i < nx + ny; ++i) side[i] = 1;
  return side;
}

inline std::vector<std::string> xy_labels(int nx, int ny) {
  std::vector<std::string> l;
  for (int i = 0; i < nx; ++i) l.push_back("x" + std::to_string(i));
  for (int j = 0; j < ny; ++j) l.push_back("y" + std::to_string(j));
  return l;
}

}  // namespace detail

/// Incidence graph of the n-gon: y_i joined to x_i and x_{i+1 mod n}.
/// Isomorphic to the 2n-cycle.
inline BipartiteGraph crown(int n) {
  if (n < 2) throw BadParams("crown: need n >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, n + i);
    edges.emplace_back((i + 1) % n, n + i);
  }
  return build_bipartite(2 * n, detail::two_sides(n, n), edges, detail::xy_labels(n, n));
}

inline BipartiteGraph complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw BadParams("complete_bipartite: need m,n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
  return build_bipartite(m + n, detail::two_sides(m, n), edges, detail::xy_labels(m, n));
}

/// Complement of a perfect matching: x_i joined to every y_j with j != i.
inline BipartiteGraph complement_matching(int n) {
  if (n < 2) throw BadParams("complement_matching: need n >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) edges.emplace_back(i, n + j);
  return build_bipartite(2 * n, detail::two_sides(n, n), edges, detail::xy_labels(n, n));
}

/// Middle-free hypercube layer graph: vertices are all length-n bit strings
/// split by parity, edges join strings at Hamming distance 1.
inline BipartiteGraph cube(int n) {
  if (n < 2 || n > 20) throw BadParams("cube: need 2 <= n <= 20");
  std::vector<int> even, odd;
  for (int m = 0; m < (1 << n); ++m)
    (__builtin_popcount(unsigned(m)) % 2 == 0 ? even : odd).push_back(m);
  int nx = int(even.size());
  std::vector<int> id(1 << n, -1);
  std::vector<std::string> labels(even.size() + odd.size());
  auto bits = [n](int m) {
    std::string s(n, '0');
    for (int b = 0; b < n; ++b)
      if (m >> b & 1) s[b] = '1';
    return s;
  };
  for (int i = 0; i < nx; ++i) id[even[i]] = i, labels[i] = bits(even[i]);
  for (std::size_t j = 0; j < odd.size(); ++j)
    id[odd[j]] = nx + int(j), labels[nx + j] = bits(odd[j]);
  std::vector<std::pair<int, int>> edges;
  for (int m : even)
    for (int b = 0; b < n; ++b) edges.emplace_back(id[m], id[m ^ (1 << b)]);
  return build_bipartite(int(labels.size()), detail::two_sides(nx, int(odd.size())), edges,
                         labels);
}

/// Points vs hyperplanes of the projective space over F_q in dimension n,
/// incident when the defining forms are orthogonal.
inline BipartiteGraph subspace_incidence(int n, int q, bool incident = true) {
  if (n < 3) throw BadParams("subspace_incidence: need n >= 3");
  if (q < 2) throw BadParams("subspace_incidence: need q >= 2");
  if (!is_prime(q)) throw NonPrimeField("subspace_incidence: q = " + std::to_string(q));
  auto pts = detail::projective_points(n, q);
  int k = int(pts.size());
  std::vector<std::string> labels;
  for (auto& v : pts) labels.push_back(detail::coord_label("p", v));
  for (auto& v : pts) labels.push_back(detail::coord_label("h", v));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if ((detail::dot_mod(pts[i], pts[j], q) == 0) == incident) edges.emplace_back(i, k + j);
  return build_bipartite(2 * k, detail::two_sides(k, k), edges, labels);
}

inline BipartiteGraph non_incidence(int n, int q) { return subspace_incidence(n, q, false); }

inline BipartiteGraph fano_incidence() { return subspace_incidence(3, 2); }
inline BipartiteGraph fano_complement() { return non_incidence(3, 2); }

/// Each edge present independently with the given percentage; deterministic
/// in the seed.
inline BipartiteGraph random_bipartite(int nx, int ny, int percent, unsigned seed) {
  if (nx < 1 || ny < 1) throw BadParams("random_bipartite: need nx,ny >= 1");
  if (percent < 0 || percent > 100) throw BadParams("random_bipartite: bad percentage");
  std::mt19937 gen(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      if (int(gen() % 100) < percent) edges.emplace_back(i, nx + j);
  return build_bipartite(nx + ny, detail::two_sides(nx, ny), edges, detail::xy_labels(nx, ny));
}

/// Alternating one-point extension tower: starting from an edgeless base,
/// each round adds, on one side, a fresh witness vertex for every subset of
/// the other side, adjacent to exactly that subset. Rounds alternate sides,
/// the top side first. Deterministic; the seed parameter is unused and kept
/// for interface uniformity with the random generators.
inline BipartiteGraph generic_bipartite(int rounds, [[maybe_unused]] unsigned seed = 0,
                                        int base_x = 1, int base_y = 1) {
  if (rounds < 0 || base_x < 1 || base_y < 0)
    throw BadParams("generic_bipartite: bad parameters");
  std::vector<std::vector<int>> xs, ys;  // adjacency by the opposite side's index
  std::vector<std::string> xl, yl;
  for (int i = 0; i < base_x; ++i) xs.emplace_back(), xl.push_back("x" + std::to_string(i));
  for (int j = 0; j < base_y; ++j) ys.emplace_back(), yl.push_back("y" + std::to_string(j));
  for (int r = 0; r < rounds; ++r) {
    bool extend_top = r % 2 == 0;
    std::size_t k = extend_top ? xs.size() : ys.size();
    if (k > 24) throw SizeLimit("generic_bipartite: side too large to extend");
    auto& grow = extend_top ? ys : xs;
    auto& gl = extend_top ? yl : xl;
    std::size_t before = grow.size();
    for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
      std::vector<int> adj;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1) adj.push_back(int(i));
      grow.push_back(adj);
      gl.push_back((extend_top ? "y" : "x") + std::to_string(before + (mask)));
    }
  }
  int nx = int(xs.size()), ny = int(ys.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < nx; ++i)
    for (int j : xs[i]) edges.emplace_back(i, nx + j);
  for (int j = 0; j < ny; ++j)
    for (int i : ys[j]) edges.emplace_back(i, nx + j);
  std::vector<std::string> labels = xl;
  labels.insert(labels.end(), yl.begin(), yl.end());
  return build_bipartite(nx + ny, detail::two_sides(nx, ny), edges, labels);
}

/// Finite window of the directed tree with constant in-valency m and
/// out-valency n: grow from one arc, complete every vertex within the given
/// arc-distance of the base, flag the rim as boundary. Arcs descend one
/// level, the base arc running from level radius to radius - 1 after the
/// shift to a 0-based window.
inline Digraph directed_tree(int m, int n, int radius) {
  if (m < 2 || n < 2) throw BadParams("directed_tree: need m,n >= 2");
  if (radius < 1 || radius > 8) throw BadParams("directed_tree: need 1 <= radius <= 8");
  std::vector<int> level = {1, 0}, dist = {0, 0};
  std::vector<std::pair<int, int>> arcs = {{0, 1}};
  std::vector<int> indeg = {0, 1}, outdeg = {1, 0};
  for (std::size_t x = 0; x < level.size(); ++x) {
    if (dist[x] >= radius) continue;
    while (indeg[x] < m) {
      int w = int(level.size());
      level.push_back(level[x] + 1);
      dist.push_back(dist[x] + 1);
      indeg.push_back(0);
      outdeg.push_back(1);
      arcs.emplace_back(w, int(x));
      ++indeg[x];
    }
    while (outdeg[x] < n) {
      int w = int(level.size());
      level.push_back(level[x] - 1);
      dist.push_back(dist[x] + 1);
      indeg.push_back(1);
      outdeg.push_back(0);
      arcs.emplace_back(int(x), w);
      ++outdeg[x];
    }
  }
  int lo = *std::min_element(level.begin(), level.end());
  for (int& l : level) l -= lo;
  int nv = int(level.size());
  std::vector<int> boundary;
  std::vector<std::string> labels;
  for (int v = 0; v < nv; ++v) {
    if (dist[v] >= radius) boundary.push_back(v);
    labels.push_back("t" + std::to_string(v));
  }
  return build_digraph(nv, std::move(arcs), std::move(level), std::move(boundary),
                       std::move(labels));
}

}  // namespace loom
