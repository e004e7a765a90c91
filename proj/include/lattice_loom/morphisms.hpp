#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "bits.hpp"
#include "digraph.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "perm.hpp"
#include "poset.hpp"

namespace loom {

/// Vertex-colored digraph, the common input of the isomorphism and
/// automorphism searches. Undirected graphs store each edge as two arcs.
struct CDigraph {
    int n = 0;
    std::vector<Bitset> out, in;
    std::vector<int> color;

    explicit CDigraph(int size = 0)
        : n(size), out(size, Bitset(size)), in(size, Bitset(size)), color(size, 0) {}

    void add_arc(int a, int b) {
        out[a].set(b);
        in[b].set(a);
    }
    void add_edge(int a, int b) {
        add_arc(a, b);
        add_arc(b, a);
    }

    static CDigraph of(const Poset& p) {
        CDigraph g(p.n);
        for (auto& [a, b] : p.covers) g.add_arc(a, b);
        return g;
    }
    static CDigraph comparability(const Poset& p) {
        CDigraph g(p.n);
        for (int a = 0; a < p.n; ++a)
            for (int b = p.up[a].first(); b >= 0; b = p.up[a].next(b)) g.add_edge(a, b);
        return g;
    }
    static CDigraph of(const BipartiteGraph& b, bool color_sides) {
        CDigraph g(b.n);
        for (auto& [x, y] : b.edges) g.add_edge(x, y);
        if (color_sides)
            for (int v = 0; v < b.n; ++v) g.color[v] = b.side[v];
        return g;
    }
    static CDigraph of(const Digraph& d) {
        CDigraph g(d.n);
        for (auto& [a, b] : d.arcs) g.add_arc(a, b);
        return g;
    }
};

namespace detail {

/// One pass of joint color refinement across the listed graphs. Signatures
/// pair each vertex's color with the sorted color multisets of its out- and
/// in-neighborhoods; fresh ids come from one global signature sort, so equal
/// signatures in different graphs get equal ids. Returns true if the joint
/// partition got strictly finer.
inline bool refine_pass(const std::vector<const CDigraph*>& gs,
                        std::vector<std::vector<int>>& cols) {
    struct Row {
        std::vector<int> sig;
        int g, v;
    };
    std::vector<Row> rows;
    std::vector<int> old_ids;
    for (size_t gi = 0; gi < gs.size(); ++gi) {
        const CDigraph& g = *gs[gi];
        for (int v = 0; v < g.n; ++v) {
            old_ids.push_back(cols[gi][v]);
            Row r;
            r.g = int(gi);
            r.v = v;
            r.sig.push_back(cols[gi][v]);
            std::vector<int> nb;
            for (int w = g.out[v].first(); w >= 0; w = g.out[v].next(w)) nb.push_back(cols[gi][w]);
            std::sort(nb.begin(), nb.end());
            r.sig.push_back(int(nb.size()));
            r.sig.insert(r.sig.end(), nb.begin(), nb.end());
            nb.clear();
            for (int w = g.in[v].first(); w >= 0; w = g.in[v].next(w)) nb.push_back(cols[gi][w]);
            std::sort(nb.begin(), nb.end());
            r.sig.insert(r.sig.end(), nb.begin(), nb.end());
            rows.push_back(std::move(r));
        }
    }
    std::sort(old_ids.begin(), old_ids.end());
    old_ids.erase(std::unique(old_ids.begin(), old_ids.end()), old_ids.end());
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.sig < b.sig; });
    int next = -1;
    const std::vector<int>* prev = nullptr;
    for (const Row& r : rows) {
        if (!prev || *prev != r.sig) {
            ++next;
            prev = &r.sig;
        }
        cols[r.g][r.v] = next;
    }
    return next + 1 > int(old_ids.size()); // refinement only ever splits classes
}

inline void refine(const std::vector<const CDigraph*>& gs, std::vector<std::vector<int>>& cols) {
    while (refine_pass(gs, cols)) {}
}

inline int max_color(const std::vector<std::vector<int>>& cols) {
    int m = -1;
    for (const auto& c : cols)
        for (int x : c) m = std::max(m, x);
    return m;
}

/// Exact arc-and-color check of a candidate bijection g -> h.
inline bool verify_map(const CDigraph& g, const CDigraph& h, const Perm& map) {
    for (int v = 0; v < g.n; ++v) {
        if (g.color[v] != h.color[map[v]]) return false;
        Bitset img(h.n);
        for (int w = g.out[v].first(); w >= 0; w = g.out[v].next(w)) img.set(map[w]);
        if (img != h.out[map[v]]) return false;
    }
    return true;
}

/// Backtracking color-respecting isomorphism search between gs[0] and gs[1]
/// (which may alias the same graph). cols must already be refined.
inline std::optional<Perm> iso_search(const std::vector<const CDigraph*>& gs,
                                      std::vector<std::vector<int>> cols) {
    const CDigraph& g = *gs[0];
    const CDigraph& h = *gs[1];
    // per-color counts must agree
    int colors = max_color(cols) + 1;
    std::vector<int> cg(colors, 0), ch(colors, 0);
    for (int v = 0; v < g.n; ++v) ++cg[cols[0][v]];
    for (int v = 0; v < h.n; ++v) ++ch[cols[1][v]];
    if (cg != ch) return std::nullopt;

    int cell = -1;
    for (int c = 0; c < colors; ++c)
        if (cg[c] > 1 && (cell < 0 || cg[c] < cg[cell])) cell = c;
    if (cell < 0) {
        // discrete: match singleton colors
        Perm map(g.n, -1);
        std::vector<int> where(colors, -1);
        for (int v = 0; v < h.n; ++v) where[cols[1][v]] = v;
        for (int v = 0; v < g.n; ++v) map[v] = where[cols[0][v]];
        if (verify_map(g, h, map)) return map;
        return std::nullopt;
    }
    int u = -1;
    for (int v = 0; v < g.n && u < 0; ++v)
        if (cols[0][v] == cell) u = v;
    int fresh = colors;
    for (int w = 0; w < h.n; ++w) {
        if (cols[1][w] != cell) continue;
        auto cols2 = cols;
        cols2[0][u] = fresh;
        cols2[1][w] = fresh;
        refine(gs, cols2);
        if (auto r = iso_search(gs, std::move(cols2))) return r;
    }
    return std::nullopt;
}

struct GroupAccum {
    std::vector<Perm> gens;
    BigUint order = BigUint(1);
};

inline void orbit_closure(Bitset& orbit, std::vector<int>& queue, const std::vector<Perm>& gens) {
    for (size_t q = 0; q < queue.size(); ++q)
        for (const Perm& p : gens) {
            int w = p[queue[q]];
            if (!orbit.test(w)) {
                orbit.set(w);
                queue.push_back(w);
            }
        }
}

/// Orbit-stabilizer recursion: pick the smallest non-singleton color class,
/// recurse on the stabilizer of its first vertex, then certify the orbit of
/// that vertex by explicit isomorphism searches. Every returned generator
/// passed verify_map, so the computed order is exact.
inline GroupAccum group_search(const CDigraph& g, std::vector<int> col) {
    std::vector<const CDigraph*> single = {&g};
    std::vector<std::vector<int>> cols = {std::move(col)};
    refine(single, cols);

    int colors = max_color(cols) + 1;
    std::vector<int> count(colors, 0);
    for (int v = 0; v < g.n; ++v) ++count[cols[0][v]];
    int cell = -1;
    for (int c = 0; c < colors; ++c)
        if (count[c] > 1 && (cell < 0 || count[c] < count[cell])) cell = c;
    GroupAccum acc;
    if (cell < 0) return acc; // discrete coloring: trivial group

    std::vector<int> members;
    for (int v = 0; v < g.n; ++v)
        if (cols[0][v] == cell) members.push_back(v);
    int v0 = members[0];
    int fresh = colors;

    auto stab_col = cols[0];
    stab_col[v0] = fresh;
    acc = group_search(g, std::move(stab_col));

    Bitset orbit(g.n);
    orbit.set(v0);
    std::vector<int> queue = {v0};
    orbit_closure(orbit, queue, acc.gens);
    std::vector<const CDigraph*> pair = {&g, &g};
    for (size_t i = 1; i < members.size(); ++i) {
        int vi = members[i];
        if (orbit.test(vi)) continue;
        std::vector<std::vector<int>> cols2 = {cols[0], cols[0]};
        cols2[0][v0] = fresh;
        cols2[1][vi] = fresh;
        refine(pair, cols2);
        if (auto sigma = iso_search(pair, std::move(cols2))) {
            acc.gens.push_back(*sigma);
            orbit_closure(orbit, queue, acc.gens);
        }
    }
    acc.order *= std::uint64_t(orbit.count());
    return acc;
}

} // namespace detail

/// Color-respecting isomorphism between two colored digraphs.
inline std::optional<Perm> find_isomorphism(const CDigraph& g, const CDigraph& h) {
    if (g.n != h.n) return std::nullopt;
    if (g.n == 0) return Perm{};
    std::vector<const CDigraph*> gs = {&g, &h};
    std::vector<std::vector<int>> cols = {g.color, h.color};
    detail::refine(gs, cols);
    return detail::iso_search(gs, std::move(cols));
}

/// Full automorphism group of a colored digraph; `pins` are fixed pointwise
/// (each pinned vertex gets its own fresh color), giving pointwise
/// stabilizers.
inline PermGroup automorphism_group(const CDigraph& g, const std::vector<int>& pins = {}) {
    PermGroup out;
    out.degree = g.n;
    if (g.n == 0) return out;
    std::vector<int> col = g.color;
    int fresh = *std::max_element(col.begin(), col.end()) + 1;
    for (int v : pins) col[v] = fresh++;
    detail::GroupAccum acc = detail::group_search(g, std::move(col));
    out.generators = std::move(acc.gens);
    out.order = std::move(acc.order);
    return out;
}

enum class AutMode { OrderPreserving, Graph };

/// Automorphisms of a poset. OrderPreserving acts on the cover digraph
/// (equivalently the order); Graph forgets orientation and acts on the
/// comparability graph, so the levels of a 2-level poset may swap.
inline PermGroup automorphism_group(const Poset& p, AutMode mode = AutMode::OrderPreserving,
                                    const std::vector<int>& pins = {}) {
    CDigraph g = mode == AutMode::OrderPreserving ? CDigraph::of(p) : CDigraph::comparability(p);
    return automorphism_group(g, pins);
}

inline PermGroup automorphism_group(const BipartiteGraph& b, const std::vector<int>& pins = {}) {
    return automorphism_group(CDigraph::of(b, /*color_sides=*/false), pins);
}

inline PermGroup automorphism_group(const Digraph& d, const std::vector<int>& pins = {}) {
    return automorphism_group(CDigraph::of(d), pins);
}

inline bool poset_isomorphic(const Poset& a, const Poset& b) {
    if (a.n != b.n || a.covers.size() != b.covers.size()) return false;
    return find_isomorphism(CDigraph::of(a), CDigraph::of(b)).has_value();
}

/// Bipartite-graph isomorphism; respect_sides pins each part to its role.
inline bool bipartite_isomorphic(const BipartiteGraph& a, const BipartiteGraph& b,
                                 bool respect_sides = true) {
    if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
    return find_isomorphism(CDigraph::of(a, respect_sides), CDigraph::of(b, respect_sides))
        .has_value();
}

inline bool digraph_isomorphic(const Digraph& a, const Digraph& b) {
    if (a.n != b.n || a.arcs.size() != b.arcs.size()) return false;
    return find_isomorphism(CDigraph::of(a), CDigraph::of(b)).has_value();
}

} // namespace loom
