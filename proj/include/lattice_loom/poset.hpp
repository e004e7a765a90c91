#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "errors.hpp"

namespace loom {

enum class PairMode { Covers, Relations };
enum class Direction { Up, Down };

/// Finite strict partial order on elements 0..n-1. `up[i]` / `down[i]` hold
/// the strict transitive closure; `covers` is exactly the transitive
/// reduction, sorted. Construct through build_poset so the invariants hold.
struct Poset {
    int n = 0;
    std::vector<std::pair<int, int>> covers;
    std::vector<Bitset> up, down;
    std::vector<std::string> labels; // empty or size n

    bool less(int a, int b) const { return up[a].test(b); }
    bool leq(int a, int b) const { return a == b || less(a, b); }
    bool comparable(int a, int b) const { return a == b || less(a, b) || less(b, a); }

    /// Strict up/down set of x.
    const Bitset& strict(int x, Direction d) const { return d == Direction::Up ? up[x] : down[x]; }

    std::string label(int i) const {
        return labels.empty() ? "e" + std::to_string(i) : labels[i];
    }

    std::vector<int> minimals() const {
        std::vector<int> out;
        for (int i = 0; i < n; ++i)
            if (down[i].none()) out.push_back(i);
        return out;
    }
    std::vector<int> maximals() const {
        std::vector<int> out;
        for (int i = 0; i < n; ++i)
            if (up[i].none()) out.push_back(i);
        return out;
    }

    bool is_minimal(int i) const { return down[i].none(); }
    bool is_maximal(int i) const { return up[i].none(); }

    /// Every element minimal or maximal. Isolated elements count as both.
    bool is_two_level() const {
        for (int i = 0; i < n; ++i)
            if (!is_minimal(i) && !is_maximal(i)) return false;
        return true;
    }

    /// Longest-chain rank from the minimal elements.
    std::vector<int> heights() const {
        std::vector<int> h(n, 0);
        // covers sorted by closure guarantee no forward reference issues only
        // after a topological pass; iterate until stable (n is small).
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto& [a, b] : covers)
                if (h[b] < h[a] + 1) { h[b] = h[a] + 1; changed = true; }
        }
        return h;
    }

    /// True when every cover step raises height by exactly one.
    bool is_graded() const {
        auto h = heights();
        for (auto& [a, b] : covers)
            if (h[b] != h[a] + 1) return false;
        return true;
    }

    std::vector<int> covers_above(int x) const {
        std::vector<int> out;
        for (auto& [a, b] : covers)
            if (a == x) out.push_back(b);
        return out;
    }
    std::vector<int> covers_below(int x) const {
        std::vector<int> out;
        for (auto& [a, b] : covers)
            if (b == x) out.push_back(a);
        return out;
    }

    bool operator==(const Poset& o) const {
        return n == o.n && covers == o.covers && labels == o.labels;
    }
};

/// Builds a poset from pairs (a, b) meaning a < b. In Relations mode the
/// pairs may be any strict relations; in Covers mode they are intended cover
/// pairs. Either way the stored closure is the transitive closure and the
/// stored covers are its reduction. Duplicate pairs are ignored; a pair (x, x)
/// or a directed cycle raises CycleError.
inline Poset build_poset(int n, const std::vector<std::pair<int, int>>& pairs,
                         PairMode mode = PairMode::Covers,
                         std::vector<std::string> labels = {}) {
    (void)mode; // both modes normalize identically; kept for call-site clarity
    if (n < 0) throw BadParams("build_poset: negative size");
    Poset p;
    p.n = n;
    p.labels = std::move(labels);
    if (!p.labels.empty() && int(p.labels.size()) != n)
        throw BadParams("build_poset: labels size mismatch");
    std::vector<std::vector<int>> succ(n);
    for (auto& [a, b] : pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw BadParams("build_poset: pair out of range");
        if (a == b) throw CycleError("build_poset: reflexive pair " + std::to_string(a));
        succ[a].push_back(b);
    }

    // Topological order (Kahn); a shortfall means a directed cycle.
    p.up.assign(n, Bitset(n));
    p.down.assign(n, Bitset(n));
    std::vector<int> indeg(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : succ[v]) ++indeg[w];
    std::vector<int> topo, queue;
    topo.reserve(n);
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        topo.push_back(v);
        for (int w : succ[v])
            if (--indeg[w] == 0) queue.push_back(w);
    }
    if (int(topo.size()) != n) throw CycleError("build_poset: relation cycle");
    // closure in reverse topological order: successors are already complete
    for (int i = n - 1; i >= 0; --i) {
        int v = topo[i];
        for (int w : succ[v]) {
            p.up[v].set(w);
            p.up[v] |= p.up[w];
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = p.up[a].first(); b >= 0; b = p.up[a].next(b)) p.down[b].set(a);

    // reduction: b covers a iff b in up[a] and no z in up[a] has b in up[z]
    for (int a = 0; a < n; ++a) {
        Bitset reach(n);
        for (int z = p.up[a].first(); z >= 0; z = p.up[a].next(z)) reach |= p.up[z];
        for (int b = p.up[a].first(); b >= 0; b = p.up[a].next(b))
            if (!reach.test(b)) p.covers.emplace_back(a, b);
    }
    std::sort(p.covers.begin(), p.covers.end());
    return p;
}

/// Subposet induced on a subset of elements, with the id map back to the parent.
struct SubPoset {
    Poset poset;
    std::vector<int> ids; // subposet element -> parent element
};

inline SubPoset induced_subposet(const Poset& p, const std::vector<int>& elems) {
    SubPoset out;
    out.ids = elems;
    std::vector<std::pair<int, int>> rel;
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = 0; j < elems.size(); ++j)
            if (i != j && p.less(elems[i], elems[j])) rel.emplace_back(int(i), int(j));
    std::vector<std::string> labels;
    if (!p.labels.empty())
        for (int e : elems) labels.push_back(p.labels[e]);
    out.poset = build_poset(int(elems.size()), rel, PairMode::Relations, std::move(labels));
    return out;
}

/// Closed interval [a, b]. Throws NotComparable unless a <= b.
inline SubPoset interval(const Poset& p, int a, int b) {
    if (a < 0 || a >= p.n || b < 0 || b >= p.n) throw BadParams("interval: element out of range");
    if (!p.leq(a, b))
        throw NotComparable("interval: " + p.label(a) + " is not below " + p.label(b));
    std::vector<int> elems = {a};
    Bitset between = p.up[a] & p.down[b];
    for (int x = between.first(); x >= 0; x = between.next(x)) elems.push_back(x);
    if (b != a) elems.push_back(b);
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return induced_subposet(p, elems);
}

/// Partition of the strict up-set (or down-set) of x into cones: the
/// components of the relation "some strict intermediate bounds both".
struct ConePartition {
    int base = -1;
    Direction dir = Direction::Up;
    std::vector<std::vector<int>> classes; // sorted members, classes sorted by first member
    int ro = 0;                            // ramification order = class count
};

inline ConePartition cones(const Poset& p, int x, Direction dir) {
    if (x < 0 || x >= p.n) throw BadParams("cones: element out of range");
    ConePartition out;
    out.base = x;
    out.dir = dir;
    const Bitset& side = p.strict(x, dir);
    std::vector<int> mem = side.members();
    if (mem.empty()) return out;
    // union-find over the shared-intermediate relation; y in (x, a] cap (x, b]
    std::vector<int> parent(mem.size());
    for (size_t i = 0; i < mem.size(); ++i) parent[i] = int(i);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (size_t i = 0; i < mem.size(); ++i) {
        for (size_t j = i + 1; j < mem.size(); ++j) {
            int a = mem[i], b = mem[j];
            // shared witness: y with x < y, y <= a, y <= b
            Bitset wit = side;
            Bitset da = p.down[a];
            da.set(a);
            Bitset db = p.down[b];
            db.set(b);
            wit &= da;
            wit &= db;
            if (wit.any()) {
                int ri = find(int(i)), rj = find(int(j));
                if (ri != rj) parent[ri] = rj;
            }
        }
    }
    std::vector<std::vector<int>> cls(mem.size());
    for (size_t i = 0; i < mem.size(); ++i) cls[find(int(i))].push_back(mem[i]);
    for (auto& c : cls)
        if (!c.empty()) out.classes.push_back(c);
    std::sort(out.classes.begin(), out.classes.end());
    out.ro = int(out.classes.size());
    return out;
}

/// Connectivity of the comparability graph. Components of a poset and of its
/// completion coincide, so this also answers connectivity of the completion.
/// The empty poset counts as connected.
inline bool is_connected(const Poset& p) {
    if (p.n == 0) return true;
    std::vector<int> seen(p.n, 0), stack = {0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        Bitset adj = p.up[v] | p.down[v];
        for (int w = adj.first(); w >= 0; w = adj.next(w))
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                stack.push_back(w);
            }
    }
    return cnt == p.n;
}

} // namespace loom
