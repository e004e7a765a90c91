#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "errors.hpp"
#include "poset.hpp"

namespace loom {

/// Finite asymmetric digraph: no loops, never both (x,y) and (y,x).
/// level, when present, is a homomorphism onto an integer window with every
/// arc going from level i+1 to level i (arcs descend). boundary flags the
/// vertices a truncation left incomplete; predicates that quantify over an
/// infinite object skip witnesses touching flagged vertices.
struct Digraph {
    int n = 0;
    std::vector<std::pair<int, int>> arcs; // sorted, deduplicated
    std::vector<Bitset> out, in;
    std::vector<int> level;  // empty when absent
    Bitset boundary;         // always size n
    std::vector<std::string> labels;

    bool has_levels() const { return !level.empty(); }
    bool is_boundary(int v) const { return boundary.test(v); }
    bool has_arc(int a, int b) const { return out[a].test(b); }
    std::string label(int i) const {
        return labels.empty() ? "v" + std::to_string(i) : labels[i];
    }
    int arc_id(int a, int b) const {
        auto it = std::lower_bound(arcs.begin(), arcs.end(), std::make_pair(a, b));
        if (it == arcs.end() || *it != std::make_pair(a, b)) return -1;
        return int(it - arcs.begin());
    }
};

inline Digraph build_digraph(int n, std::vector<std::pair<int, int>> arcs,
                             std::vector<int> level = {}, std::vector<int> boundary = {},
                             std::vector<std::string> labels = {}) {
    if (n < 0) throw BadParams("build_digraph: negative size");
    Digraph d;
    d.n = n;
    d.out.assign(n, Bitset(n));
    d.in.assign(n, Bitset(n));
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    for (auto& [a, b] : arcs) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw BadParams("build_digraph: arc out of range");
        if (a == b) throw ValidationError("build_digraph: loop at " + std::to_string(a));
        d.out[a].set(b);
        d.in[b].set(a);
    }
    for (auto& [a, b] : arcs)
        if (d.out[b].test(a))
            throw ValidationError("build_digraph: arcs both ways between " + std::to_string(a) +
                                  " and " + std::to_string(b));
    d.arcs = std::move(arcs);
    d.level = std::move(level);
    if (!d.level.empty()) {
        if (int(d.level.size()) != n) throw BadParams("build_digraph: level size mismatch");
        for (auto& [a, b] : d.arcs)
            if (d.level[a] != d.level[b] + 1)
                throw ValidationError("build_digraph: arc does not descend one level");
    }
    d.boundary = Bitset(n);
    for (int v : boundary) {
        if (v < 0 || v >= n) throw BadParams("build_digraph: boundary vertex out of range");
        d.boundary.set(v);
    }
    d.labels = std::move(labels);
    if (!d.labels.empty() && int(d.labels.size()) != n)
        throw BadParams("build_digraph: labels size mismatch");
    return d;
}

/// Hasse digraph of a poset: one arc x -> y per cover pair y -< x (arcs
/// descend). Levels come from the height grading; with require_levels the
/// poset must be graded, otherwise an ungraded poset just omits the map.
inline Digraph digraph_from_poset(const Poset& p, bool require_levels = false) {
    std::vector<std::pair<int, int>> arcs;
    for (auto& [lo, hi] : p.covers) arcs.emplace_back(hi, lo);
    std::vector<int> level;
    if (p.is_graded()) {
        level = p.heights();
    } else if (require_levels) {
        throw NotGraded("digraph_from_poset: covers disagree on rank");
    }
    std::vector<std::string> labels = p.labels;
    return build_digraph(p.n, std::move(arcs), std::move(level), {}, std::move(labels));
}

/// Order with arcs read as x > y; throws CycleError on a directed cycle.
inline Poset poset_of(const Digraph& d) {
    std::vector<std::pair<int, int>> rel;
    for (auto& [a, b] : d.arcs) rel.emplace_back(b, a);
    std::vector<std::string> labels = d.labels;
    return build_poset(d.n, rel, PairMode::Relations, std::move(labels));
}

/// Directed-reachability closure including v itself. Down follows arcs,
/// up follows them backwards (ancestors).
inline Bitset descendants(const Digraph& d, int v, Direction dir = Direction::Down) {
    if (v < 0 || v >= d.n) throw BadParams("descendants: vertex out of range");
    const auto& step = dir == Direction::Down ? d.out : d.in;
    Bitset seen(d.n);
    seen.set(v);
    std::vector<int> stack = {v};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int w = step[x].first(); w >= 0; w = step[x].next(w))
            if (!seen.test(w)) {
                seen.set(w);
                stack.push_back(w);
            }
    }
    return seen;
}

/// The subdigraph induced on descendants(v) is a tree rooted at v: inside
/// the descendant set, v has in-degree 0 and every other vertex in-degree 1.
inline bool is_descendant_tree(const Digraph& d, int v) {
    Bitset desc = descendants(d, v, Direction::Down);
    for (int w = desc.first(); w >= 0; w = desc.next(w)) {
        Bitset inside = d.in[w] & desc;
        if (inside.count() != (w == v ? 0 : 1)) return false;
    }
    return true;
}

inline bool is_connected_underlying(const Digraph& d) {
    if (d.n == 0) return true;
    std::vector<int> seen(d.n, 0), stack = {0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        Bitset adj = d.out[v] | d.in[v];
        for (int w = adj.first(); w >= 0; w = adj.next(w))
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                stack.push_back(w);
            }
    }
    return cnt == d.n;
}

} // namespace loom
