#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "errors.hpp"
#include "poset.hpp"

namespace loom {

/// Finite bipartite graph. side[v] is 0 (lower part, X) or 1 (upper part, Y);
/// every edge joins the two parts. Edges are stored sorted and deduplicated.
struct BipartiteGraph {
    int n = 0;
    std::vector<char> side;
    std::vector<std::pair<int, int>> edges;
    std::vector<Bitset> adj;
    std::vector<std::string> labels; // empty or size n

    std::string label(int i) const {
        return labels.empty() ? "v" + std::to_string(i) : labels[i];
    }
    std::vector<int> part(int s) const {
        std::vector<int> out;
        for (int i = 0; i < n; ++i)
            if (side[i] == s) out.push_back(i);
        return out;
    }
    int degree(int v) const { return adj[v].count(); }
};

inline BipartiteGraph build_bipartite(int n, std::vector<char> side,
                                      const std::vector<std::pair<int, int>>& edges,
                                      std::vector<std::string> labels = {}) {
    if (n < 0) throw BadParams("build_bipartite: negative size");
    if (int(side.size()) != n) throw BadParams("build_bipartite: side size mismatch");
    BipartiteGraph g;
    g.n = n;
    g.side = std::move(side);
    g.labels = std::move(labels);
    if (!g.labels.empty() && int(g.labels.size()) != n)
        throw BadParams("build_bipartite: labels size mismatch");
    g.adj.assign(n, Bitset(n));
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw BadParams("build_bipartite: edge out of range");
        if (g.side[a] == g.side[b])
            throw ValidationError("build_bipartite: edge inside one part");
        if (g.side[a] == 1) std::swap(a, b);
        g.adj[a].set(b);
        g.adj[b].set(a);
        g.edges.emplace_back(a, b);
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

/// 2-level poset with X below Y; the order relation is the edge relation.
inline Poset poset_of(const BipartiteGraph& g) {
    std::vector<std::pair<int, int>> rel;
    for (auto& [x, y] : g.edges) rel.emplace_back(x, y);
    std::vector<std::string> labels = g.labels;
    return build_poset(g.n, rel, PairMode::Relations, std::move(labels));
}

/// The comparability graph of a 2-level poset, sides from minimality.
/// Isolated elements land on side 0.
inline BipartiteGraph graph_of(const Poset& p) {
    if (!p.is_two_level()) throw BadParams("graph_of: poset is not 2-level");
    std::vector<char> side(p.n);
    for (int i = 0; i < p.n; ++i) side[i] = p.is_minimal(i) ? 0 : 1;
    std::vector<std::pair<int, int>> edges;
    for (auto& [a, b] : p.covers) edges.emplace_back(a, b);
    std::vector<std::string> labels = p.labels;
    return build_bipartite(p.n, std::move(side), edges, std::move(labels));
}

inline bool is_connected(const BipartiteGraph& g) {
    if (g.n == 0) return true;
    std::vector<int> seen(g.n, 0), stack = {0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = g.adj[v].first(); w >= 0; w = g.adj[v].next(w))
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                stack.push_back(w);
            }
    }
    return cnt == g.n;
}

} // namespace loom
