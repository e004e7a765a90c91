#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "bits.hpp"
#include "completion.hpp"
#include "digraph.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "morphisms.hpp"
#include "perm.hpp"
#include "poset.hpp"

namespace loom {

/// All s-arcs of g: vertex tuples v0..vs with consecutive vertices adjacent
/// and v[i] != v[i+2]. A 0-arc is a single vertex.
inline std::vector<std::vector<int>> enumerate_s_arcs(const BipartiteGraph& g, int s) {
    if (s < 0) throw BadParams("enumerate_s_arcs: negative s");
    std::vector<std::vector<int>> out;
    std::vector<int> walk;
    auto rec = [&](auto&& self, int last) -> void {
        if (int(walk.size()) == s + 1) {
            out.push_back(walk);
            return;
        }
        int forbidden = walk.size() >= 2 ? walk[walk.size() - 2] : -1;
        for (int w = g.adj[last].first(); w >= 0; w = g.adj[last].next(w)) {
            if (w == forbidden) continue;
            walk.push_back(w);
            self(self, w);
            walk.pop_back();
        }
    };
    for (int v = 0; v < g.n; ++v) {
        walk = {v};
        rec(rec, v);
    }
    return out;
}

/// Orbit data for (local) s-arc-transitivity.
struct ArcOrbitReport {
    int s = 0;
    bool local = false;
    long long arc_count = 0;
    int orbit_count = 0;          // global orbits (local reports: max per-vertex count)
    std::vector<int> per_vertex;  // local only: stabilizer orbit count on s-arcs at v
    bool verdict = false;
};

/// Single Aut(g)-orbit on all s-arcs; the group may swap the two parts.
inline ArcOrbitReport is_s_arc_transitive(const BipartiteGraph& g, int s) {
    ArcOrbitReport rep;
    rep.s = s;
    auto arcs = enumerate_s_arcs(g, s);
    if (arcs.empty()) throw NoArcs("is_s_arc_transitive: no " + std::to_string(s) + "-arc");
    rep.arc_count = (long long)(arcs.size());
    PermGroup grp = automorphism_group(g);
    rep.orbit_count = count_tuple_orbits(arcs, grp.generators);
    rep.verdict = rep.orbit_count == 1;
    return rep;
}

/// Every vertex stabilizer transitive on the s-arcs starting at its vertex.
/// Stabilizer orbit counts are constant along Aut(g)-orbits, so only orbit
/// representatives get a stabilizer computation.
inline ArcOrbitReport is_locally_s_arc_transitive(const BipartiteGraph& g, int s) {
    ArcOrbitReport rep;
    rep.s = s;
    rep.local = true;
    auto arcs = enumerate_s_arcs(g, s);
    if (arcs.empty())
        throw NoArcs("is_locally_s_arc_transitive: no " + std::to_string(s) + "-arc");
    rep.arc_count = (long long)(arcs.size());
    std::vector<std::vector<std::vector<int>>> at(g.n);
    for (auto& a : arcs) at[a[0]].push_back(a);

    PermGroup grp = automorphism_group(g);
    rep.per_vertex.assign(g.n, 0);
    for (const auto& orbit : vertex_orbits(grp)) {
        int rep_v = orbit[0];
        int count = 0;
        if (!at[rep_v].empty()) {
            PermGroup stab = automorphism_group(g, {rep_v});
            count = count_tuple_orbits(at[rep_v], stab.generators);
        }
        for (int v : orbit) rep.per_vertex[v] = count;
    }
    rep.orbit_count = *std::max_element(rep.per_vertex.begin(), rep.per_vertex.end());
    rep.verdict = rep.orbit_count <= 1;
    return rep;
}

/// Connected induced k-element subsets of the comparability graph of p,
/// each sorted ascending.
inline std::vector<std::vector<int>> connected_k_subsets(const Poset& p, int k) {
    if (k < 1) throw BadParams("connected_k_subsets: k must be positive");
    std::vector<Bitset> comp(p.n, Bitset(p.n));
    for (int a = 0; a < p.n; ++a) comp[a] = p.up[a] | p.down[a];
    std::vector<std::vector<int>> out;
    std::vector<int> members;
    // frontier branching: each set with a fixed least vertex appears once
    auto grow = [&](auto&& self, std::vector<int> ext, Bitset visited, int start) -> void {
        if (int(members.size()) == k) {
            std::vector<int> s = members;
            std::sort(s.begin(), s.end());
            out.push_back(std::move(s));
            return;
        }
        while (!ext.empty()) {
            int u = ext.back();
            ext.pop_back();
            members.push_back(u);
            std::vector<int> ext2 = ext;
            Bitset visited2 = visited;
            for (int w = comp[u].first(); w >= 0; w = comp[u].next(w))
                if (w > start && !visited2.test(w)) {
                    visited2.set(w);
                    ext2.push_back(w);
                }
            self(self, std::move(ext2), std::move(visited2), start);
            members.pop_back();
            // u stays visited: sets without u in this branch never re-add it
        }
    };
    for (int v = 0; v < p.n; ++v) {
        members = {v};
        if (k == 1) {
            out.push_back(members);
            continue;
        }
        Bitset visited(p.n);
        std::vector<int> ext;
        for (int w = comp[v].first(); w >= 0; w = comp[v].next(w))
            if (w > v) {
                visited.set(w);
                ext.push_back(w);
            }
        grow(grow, std::move(ext), std::move(visited), v);
    }
    return out;
}

namespace detail {

/// Relation bitmask of an ordered tuple: bit i*k+j set iff t[i] < t[j].
inline std::uint64_t tuple_pattern(const Poset& p, const std::vector<int>& t) {
    int k = int(t.size());
    std::uint64_t bits = 0;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && p.less(t[i], t[j])) bits |= std::uint64_t(1) << (i * k + j);
    return bits;
}

/// Least pattern over all orderings: an isomorphism-type key for subsets.
inline std::uint64_t canonical_pattern(const Poset& p, const std::vector<int>& sorted_set) {
    std::vector<int> t = sorted_set;
    std::sort(t.begin(), t.end());
    std::uint64_t best = ~std::uint64_t(0);
    do {
        best = std::min(best, tuple_pattern(p, t));
    } while (std::next_permutation(t.begin(), t.end()));
    return best;
}

} // namespace detail

/// Any two isomorphic connected k-subposets lie in one orbit of Aut(p)
/// acting on subsets. Vacuously true with no connected k-subsets.
inline bool is_k_cs_transitive(const Poset& p, int k) {
    if (k > 8) throw BadParams("is_k_cs_transitive: k > 8 unsupported");
    auto subsets = connected_k_subsets(p, k);
    if (subsets.empty()) return true;
    PermGroup grp = automorphism_group(p, AutMode::OrderPreserving);
    std::map<std::uint64_t, std::vector<std::vector<int>>> types;
    for (auto& s : subsets) types[detail::canonical_pattern(p, s)].push_back(s);
    for (auto& [pat, family] : types)
        if (count_tuple_orbits(family, grp.generators, /*sorted_sets=*/true) != 1) return false;
    return true;
}

/// Every isomorphism between connected k-subposets extends to an
/// automorphism: each ordered-tuple relation pattern is one orbit of Aut(p)
/// acting coordinatewise.
inline bool is_k_cs_homogeneous(const Poset& p, int k) {
    if (k > 8) throw BadParams("is_k_cs_homogeneous: k > 8 unsupported");
    auto subsets = connected_k_subsets(p, k);
    if (subsets.empty()) return true;
    PermGroup grp = automorphism_group(p, AutMode::OrderPreserving);
    std::map<std::uint64_t, std::vector<std::vector<int>>> patterns;
    for (auto& s : subsets) {
        std::vector<int> t = s;
        do {
            patterns[detail::tuple_pattern(p, t)].push_back(t);
        } while (std::next_permutation(t.begin(), t.end()));
    }
    for (auto& [pat, family] : patterns)
        if (count_tuple_orbits(family, grp.generators) != 1) return false;
    return true;
}

/// Single Aut(d)-orbit on the arc set of a digraph.
inline bool is_one_arc_transitive(const Digraph& d) {
    if (d.arcs.empty()) throw NoArcs("is_one_arc_transitive: no arcs");
    PermGroup grp = automorphism_group(d);
    std::vector<std::vector<int>> tuples;
    tuples.reserve(d.arcs.size());
    for (auto& [a, b] : d.arcs) tuples.push_back({a, b});
    return count_tuple_orbits(tuples, grp.generators) == 1;
}

/// Canonical extension of a base-poset automorphism to the completion:
/// an ideal maps to its pointwise image, which is again an ideal.
inline Perm extend_to_completion(const CompletedPoset& c, const Perm& base) {
    const int n = c.completion.n;
    std::unordered_map<Bitset, int, Bitset::Hash> index;
    for (int i = 0; i < n; ++i) index.emplace(c.member_sets[i], i);
    Perm out(n, -1);
    for (int i = 0; i < n; ++i) {
        Bitset img(c.original_n);
        for (int x = c.member_sets[i].first(); x >= 0; x = c.member_sets[i].next(x))
            img.set(base[x]);
        auto it = index.find(img);
        if (it == index.end())
            throw Error("extend_to_completion: image of an ideal is not an ideal");
        out[i] = it->second;
    }
    return out;
}

/// Faithful extension of Aut(base) to the completion; order carries over.
inline PermGroup extend_group_to_completion(const CompletedPoset& c, const PermGroup& g) {
    PermGroup out;
    out.degree = c.completion.n;
    out.order = g.order;
    for (const Perm& b : g.generators) out.generators.push_back(extend_to_completion(c, b));
    return out;
}

} // namespace loom
