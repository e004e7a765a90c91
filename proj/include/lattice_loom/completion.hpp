#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "errors.hpp"
#include "poset.hpp"

namespace loom {

/// Reflexive up-set / down-set as a fresh bitset.
inline Bitset up_closed(const Poset& p, int x) {
    Bitset b = p.up[x];
    b.set(x);
    return b;
}
inline Bitset down_closed(const Poset& p, int x) {
    Bitset b = p.down[x];
    b.set(x);
    return b;
}

/// Common upper bounds of S, using reflexive <=. S = empty gives all of P.
inline Bitset upper_bounds_of(const Poset& p, const Bitset& s) {
    Bitset u(p.n);
    for (int i = 0; i < p.n; ++i) u.set(i);
    for (int x = s.first(); x >= 0; x = s.next(x)) u &= up_closed(p, x);
    return u;
}
inline Bitset lower_bounds_of(const Poset& p, const Bitset& s) {
    Bitset l(p.n);
    for (int i = 0; i < p.n; ++i) l.set(i);
    for (int x = s.first(); x >= 0; x = s.next(x)) l &= down_closed(p, x);
    return l;
}

/// Nonempty bounded-above subset closed under "lower bounds of upper bounds".
struct Ideal {
    Bitset members;
    Bitset upper_bounds;
};

inline Ideal ideal_closure(const Poset& p, const Bitset& s) {
    if (s.none()) throw EmptyInput("ideal_closure: empty set");
    Ideal j;
    j.upper_bounds = upper_bounds_of(p, s);
    if (j.upper_bounds.none()) throw Unbounded("ideal_closure: set has no upper bound");
    j.members = lower_bounds_of(p, j.upper_bounds);
    return j;
}
inline Ideal ideal_closure(const Poset& p, const std::vector<int>& elems) {
    Bitset s(p.n);
    for (int e : elems) {
        if (e < 0 || e >= p.n) throw BadParams("ideal_closure: element out of range");
        s.set(e);
    }
    return ideal_closure(p, s);
}

/// Enumeration cap; override with LATTICE_LOOM_MAX_IDEALS.
inline std::size_t default_ideal_cap() {
    if (const char* env = std::getenv("LATTICE_LOOM_MAX_IDEALS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return std::size_t(v);
    }
    return std::size_t(1) << 20;
}

/// All ideals of p, in lectic enumeration order. Lectic-order closure
/// enumeration visits every closed set of S -> S^ul exactly once; the empty
/// set and an unbounded full set are the only closed sets that are not
/// ideals, and both are dropped here.
inline std::vector<Bitset> enumerate_ideals(const Poset& p, std::size_t cap = default_ideal_cap()) {
    std::vector<Bitset> out;
    if (p.n == 0) return out;
    Bitset full(p.n);
    for (int i = 0; i < p.n; ++i) full.set(i);
    const bool full_is_ideal = upper_bounds_of(p, full).any();

    auto close = [&](const Bitset& s) {
        Bitset u = upper_bounds_of(p, s);
        if (u.none()) return full; // sentinel keeps the operator a closure
        return lower_bounds_of(p, u);
    };
    auto prefix_below = [&](const Bitset& s, int i) {
        Bitset r = s;
        for (int j = i; j < p.n; ++j) r.reset(j);
        return r;
    };
    auto emit = [&](const Bitset& a) {
        if (a.none()) return;
        if (a == full && !full_is_ideal) return;
        out.push_back(a);
        if (out.size() > cap)
            throw SizeLimit("enumerate_ideals: more than " + std::to_string(cap) + " ideals");
    };

    Bitset a = close(Bitset(p.n));
    emit(a);
    while (a != full) {
        bool advanced = false;
        for (int i = p.n - 1; i >= 0; --i) {
            if (a.test(i)) continue;
            Bitset seed = prefix_below(a, i);
            seed.set(i);
            Bitset b = close(seed);
            if (prefix_below(b, i) == prefix_below(a, i)) {
                a = b;
                emit(a);
                advanced = true;
                break;
            }
        }
        if (!advanced) break; // a was the lectically last closed set
    }
    return out;
}

/// A poset together with its completion by ideals, ordered by inclusion.
/// No artificial top or bottom is added: the full set enters only when it is
/// itself a bounded ideal, and the empty set never does.
struct CompletedPoset {
    Poset completion;
    std::vector<int> embed;         // original element -> completion element
    std::vector<int> added;         // completion elements with no preimage, sorted
    std::vector<int> up_ram;        // infs of incomparable original pairs, sorted
    std::vector<int> down_ram;      // sups of incomparable original pairs, sorted
    std::vector<Bitset> member_sets; // completion element -> subset of original
    std::vector<Bitset> upper_sets;  // completion element -> upper bounds in original
    int original_n = 0;

    bool is_embedded(int c) const {
        for (int e : embed)
            if (e == c) return true;
        return false;
    }
    /// up_ram and down_ram merged, sorted, deduplicated.
    std::vector<int> ram() const {
        std::vector<int> r = up_ram;
        r.insert(r.end(), down_ram.begin(), down_ram.end());
        std::sort(r.begin(), r.end());
        r.erase(std::unique(r.begin(), r.end()), r.end());
        return r;
    }
};

inline CompletedPoset dm_completion(const Poset& p, std::size_t cap = default_ideal_cap()) {
    CompletedPoset out;
    out.original_n = p.n;
    std::vector<Bitset> ideals = enumerate_ideals(p, cap);
    // canonical numbering: lexicographic by sorted member list
    std::sort(ideals.begin(), ideals.end(), Bitset::lex_less);
    const int n = int(ideals.size());
    out.member_sets = ideals;
    out.upper_sets.reserve(n);
    for (const Bitset& j : ideals) out.upper_sets.push_back(upper_bounds_of(p, j));

    std::unordered_map<Bitset, int, Bitset::Hash> index;
    for (int i = 0; i < n; ++i) index.emplace(ideals[i], i);

    out.embed.assign(p.n, -1);
    for (int x = 0; x < p.n; ++x) {
        auto it = index.find(down_closed(p, x));
        if (it == index.end()) throw Error("dm_completion: principal ideal missing");
        out.embed[x] = it->second;
    }
    std::vector<char> principal(n, 0);
    for (int e : out.embed) principal[e] = 1;
    for (int i = 0; i < n; ++i)
        if (!principal[i]) out.added.push_back(i);

    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && ideals[i].subset_of(ideals[j])) rel.emplace_back(i, j);
    std::vector<std::string> labels(n);
    for (int x = 0; x < p.n; ++x) labels[out.embed[x]] = p.label(x);
    for (int i : out.added) {
        std::string s = "{";
        for (int x = ideals[i].first(); x >= 0; x = ideals[i].next(x)) {
            if (s.size() > 1) s += ",";
            s += p.label(x);
        }
        labels[i] = s + "}";
    }
    out.completion = build_poset(n, rel, PairMode::Relations, std::move(labels));

    // ramification points from incomparable pairs of original elements
    std::vector<char> in_up(n, 0), in_down(n, 0);
    for (int a = 0; a < p.n; ++a) {
        for (int b = a + 1; b < p.n; ++b) {
            if (p.comparable(a, b)) continue;
            Bitset meet = down_closed(p, a);
            meet &= down_closed(p, b);
            if (meet.any()) {
                auto it = index.find(meet); // intersection of ideals is an ideal
                if (it == index.end()) throw Error("dm_completion: meet ideal missing");
                in_up[it->second] = 1;
            }
            Bitset ub = up_closed(p, a);
            ub &= up_closed(p, b);
            if (ub.any()) {
                auto it = index.find(lower_bounds_of(p, ub));
                if (it == index.end()) throw Error("dm_completion: join ideal missing");
                in_down[it->second] = 1;
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        if (in_up[i]) out.up_ram.push_back(i);
        if (in_down[i]) out.down_ram.push_back(i);
    }
    return out;
}

/// Least upper bound of {a, b} if it exists; empty when the pair has no
/// common upper bound or the common upper bounds have no minimum.
inline std::optional<int> sup_in(const Poset& p, int a, int b) {
    Bitset u = up_closed(p, a);
    u &= up_closed(p, b);
    for (int m = u.first(); m >= 0; m = u.next(m)) {
        Bitset rest = u;
        rest -= p.up[m];
        rest.reset(m);
        if (rest.none()) return m;
    }
    return std::nullopt;
}
inline std::optional<int> inf_in(const Poset& p, int a, int b) {
    Bitset l = down_closed(p, a);
    l &= down_closed(p, b);
    for (int m = l.first(); m >= 0; m = l.next(m)) {
        Bitset rest = l;
        rest -= p.down[m];
        rest.reset(m);
        if (rest.none()) return m;
    }
    return std::nullopt;
}

/// Every bounded-above pair has a sup and every bounded-below pair an inf.
inline bool is_dm_complete(const Poset& p) {
    for (int a = 0; a < p.n; ++a) {
        for (int b = a + 1; b < p.n; ++b) {
            Bitset u = up_closed(p, a);
            u &= up_closed(p, b);
            if (u.any() && !sup_in(p, a, b)) return false;
            Bitset l = down_closed(p, a);
            l &= down_closed(p, b);
            if (l.any() && !inf_in(p, a, b)) return false;
        }
    }
    return true;
}

inline std::pair<std::vector<int>, std::vector<int>> ramification_points(const Poset& p) {
    CompletedPoset c = dm_completion(p);
    return {c.up_ram, c.down_ram};
}

/// Induced subposet of the completion on the embedded copy plus Ram.
inline SubPoset m_plus(const CompletedPoset& c) {
    std::vector<int> keep = c.ram();
    for (int e : c.embed) keep.push_back(e);
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    return induced_subposet(c.completion, keep);
}
inline SubPoset m_plus(const Poset& p) { return m_plus(dm_completion(p)); }

/// Unique paths between points of the completion, read finitely: the
/// undirected Hasse graph of the completion is a forest.
inline bool is_cycle_free(const CompletedPoset& c) {
    const Poset& q = c.completion;
    std::vector<int> parent(q.n);
    for (int i = 0; i < q.n; ++i) parent[i] = i;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto& [a, b] : q.covers) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return false; // cover edge closes a cycle
        parent[ra] = rb;
    }
    return true;
}
inline bool is_cycle_free(const Poset& p) { return is_cycle_free(dm_completion(p)); }

/// True when every closed interval [a, b] is a chain; equivalently no
/// incomparable pair has both a common lower and a common upper bound.
inline bool all_intervals_chains(const Poset& p) {
    for (int a = 0; a < p.n; ++a) {
        for (int b = a + 1; b < p.n; ++b) {
            if (p.comparable(a, b)) continue;
            Bitset u = up_closed(p, a);
            u &= up_closed(p, b);
            if (u.none()) continue;
            Bitset l = down_closed(p, a);
            l &= down_closed(p, b);
            if (l.any()) return false;
        }
    }
    return true;
}

/// Density of the embedded copy and ramification points inside the
/// completion. The conclusion is only asserted under its hypothesis (every
/// interval of the base poset extended by Ram is a chain); `holds` is true
/// when the hypothesis fails, recording a vacuous pass.
struct DensityReport {
    bool hypothesis = false; // all m_plus intervals are chains
    int checked = 0;
    int violations = 0;
    bool holds() const { return !hypothesis || violations == 0; }
};

inline DensityReport density_check(const CompletedPoset& c) {
    DensityReport rep;
    rep.hypothesis = all_intervals_chains(m_plus(c).poset);
    const Poset& q = c.completion;
    Bitset good_up(q.n), good_down(q.n);
    for (int e : c.embed) {
        good_up.set(e);
        good_down.set(e);
    }
    for (int r : c.up_ram) good_up.set(r);
    for (int r : c.down_ram) good_down.set(r);
    for (int a = 0; a < q.n; ++a) {
        for (int b = 0; b < q.n; ++b) {
            if (!q.less(a, b)) continue;
            ++rep.checked;
            Bitset between = q.up[a] & q.down[b];
            Bitset lower = between; // [a, b)
            lower.set(a);
            Bitset upper = between; // (a, b]
            upper.set(b);
            if (!lower.intersects(good_up)) ++rep.violations;
            if (!upper.intersects(good_down)) ++rep.violations;
        }
    }
    return rep;
}
inline DensityReport density_check(const Poset& p) { return density_check(dm_completion(p)); }

/// Incidence structure reading of a 2-level poset: points = minimals, lines =
/// maximals. Semilinear: every line has >= 2 points and two points lie on at
/// most one common line.
inline bool semilinear_check(const Poset& p) {
    if (!p.is_two_level()) throw BadParams("semilinear_check: poset is not 2-level");
    std::vector<int> mins = p.minimals();
    for (int t : p.maximals())
        if (!p.is_minimal(t) && p.down[t].count() < 2) return false;
    for (size_t i = 0; i < mins.size(); ++i)
        for (size_t j = i + 1; j < mins.size(); ++j) {
            Bitset common = p.up[mins[i]] & p.up[mins[j]];
            if (common.count() > 1) return false;
        }
    return true;
}

} // namespace loom
