#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "bits.hpp"
#include "errors.hpp"

namespace loom {

using Perm = std::vector<int>; // perm[i] = image of i

inline Perm identity_perm(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}
inline Perm compose(const Perm& f, const Perm& g) { // (f*g)(x) = f(g(x))
    Perm r(f.size());
    for (size_t i = 0; i < g.size(); ++i) r[i] = f[g[i]];
    return r;
}
inline Perm inverse(const Perm& f) {
    Perm r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[f[i]] = int(i);
    return r;
}

/// Permutation group on 0..degree-1 given by generators; order computed by
/// the stabilizer recursion that produced it.
struct PermGroup {
    int degree = 0;
    std::vector<Perm> generators;
    BigUint order = BigUint(1);

    bool is_trivial() const { return generators.empty(); }
};

inline std::vector<int> orbit_of(int v, int degree, const std::vector<Perm>& gens) {
    Bitset seen(degree);
    seen.set(v);
    std::vector<int> queue = {v};
    for (size_t q = 0; q < queue.size(); ++q)
        for (const Perm& g : gens) {
            int w = g[queue[q]];
            if (!seen.test(w)) {
                seen.set(w);
                queue.push_back(w);
            }
        }
    std::sort(queue.begin(), queue.end());
    return queue;
}

/// Orbits on vertices; each orbit sorted, orbits ordered by least member.
inline std::vector<std::vector<int>> vertex_orbits(const PermGroup& g) {
    std::vector<std::vector<int>> out;
    Bitset done(g.degree);
    for (int v = 0; v < g.degree; ++v) {
        if (done.test(v)) continue;
        auto orb = orbit_of(v, g.degree, g.generators);
        for (int w : orb) done.set(w);
        out.push_back(std::move(orb));
    }
    return out;
}

struct TupleHash {
    std::size_t operator()(const std::vector<int>& t) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : t) {
            h ^= std::size_t(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// Count orbits of the group acting coordinatewise on the given tuples.
/// The tuple family must be closed under the action; `sorted_sets` makes the
/// action the set action (images are re-sorted before lookup).
inline int count_tuple_orbits(const std::vector<std::vector<int>>& tuples,
                              const std::vector<Perm>& gens, bool sorted_sets = false) {
    std::unordered_set<std::vector<int>, TupleHash> family(tuples.begin(), tuples.end());
    std::unordered_set<std::vector<int>, TupleHash> done;
    int orbits = 0;
    std::vector<std::vector<int>> queue;
    for (const auto& t : tuples) {
        if (done.count(t)) continue;
        ++orbits;
        queue.clear();
        queue.push_back(t);
        done.insert(t);
        for (size_t q = 0; q < queue.size(); ++q) {
            std::vector<int> cur = queue[q];
            for (const Perm& g : gens) {
                std::vector<int> img(cur.size());
                for (size_t i = 0; i < cur.size(); ++i) img[i] = g[cur[i]];
                if (sorted_sets) std::sort(img.begin(), img.end());
                if (!family.count(img))
                    throw Error("count_tuple_orbits: family not closed under the action");
                if (done.insert(img).second) queue.push_back(img);
            }
        }
    }
    return orbits;
}

} // namespace loom
