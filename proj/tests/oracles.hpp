#pragma once
// Reference implementations the tests trust over the library. Everything is
// written the slow, obvious way on plain containers and never calls into
// loom::; a disagreement with these is treated as a library bug.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<char>>;

// Strict order closure of raw (a < b) pairs by Warshall's algorithm.
inline Mat warshall(int n, const std::vector<std::pair<int, int>>& pairs) {
    Mat m(n, std::vector<char>(n, 0));
    for (auto& [a, b] : pairs) m[a][b] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (m[i][k])
                for (int j = 0; j < n; ++j)
                    if (m[k][j]) m[i][j] = 1;
    return m;
}

inline bool has_cycle(const Mat& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i][i]) return true;
    return false;
}

// Transitive reduction: a covers b iff a < b with nothing strictly between.
inline std::vector<std::pair<int, int>> reduction(const Mat& m) {
    int n = int(m.size());
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!m[a][b]) continue;
            bool direct = true;
            for (int c = 0; c < n && direct; ++c)
                if (m[a][c] && m[c][b]) direct = false;
            if (direct) out.emplace_back(a, b);
        }
    std::sort(out.begin(), out.end());
    return out;
}

inline uint32_t upper_bounds(const Mat& m, uint32_t s) {
    int n = int(m.size());
    uint32_t u = (n == 32) ? ~uint32_t(0) : ((uint32_t(1) << n) - 1);
    for (int x = 0; x < n; ++x)
        if (s >> x & 1) {
            uint32_t above = uint32_t(1) << x;
            for (int y = 0; y < n; ++y)
                if (m[x][y]) above |= uint32_t(1) << y;
            u &= above;
        }
    return u;
}

inline uint32_t lower_bounds(const Mat& m, uint32_t s) {
    int n = int(m.size());
    uint32_t l = (n == 32) ? ~uint32_t(0) : ((uint32_t(1) << n) - 1);
    for (int x = 0; x < n; ++x)
        if (s >> x & 1) {
            uint32_t below = uint32_t(1) << x;
            for (int y = 0; y < n; ++y)
                if (m[y][x]) below |= uint32_t(1) << y;
            l &= below;
        }
    return l;
}

// All cuts: nonempty, bounded above, and equal to the lower bounds of their
// upper bounds. Every such set is the closure of some subset, so scanning all
// subsets finds them all. Usable up to n around 20.
inline std::set<uint32_t> closed_sets(const Mat& m) {
    int n = int(m.size());
    std::set<uint32_t> out;
    for (uint32_t s = 0; s < (uint32_t(1) << n); ++s) {
        uint32_t ub = upper_bounds(m, s);
        if (!ub) continue;
        uint32_t c = lower_bounds(m, ub);
        if (c) out.insert(c);
    }
    return out;
}

// Least upper bound, or -1 when none exists.
inline int brute_sup(const Mat& m, int a, int b) {
    uint32_t u = upper_bounds(m, (uint32_t(1) << a) | (uint32_t(1) << b));
    int n = int(m.size());
    for (int c = 0; c < n; ++c) {
        if (!(u >> c & 1)) continue;
        bool least = true;
        for (int d = 0; d < n && least; ++d)
            if ((u >> d & 1) && d != c && !m[c][d]) least = false;
        if (least) return c;
    }
    return -1;
}

inline int brute_inf(const Mat& m, int a, int b) {
    uint32_t l = lower_bounds(m, (uint32_t(1) << a) | (uint32_t(1) << b));
    int n = int(m.size());
    for (int c = 0; c < n; ++c) {
        if (!(l >> c & 1)) continue;
        bool greatest = true;
        for (int d = 0; d < n && greatest; ++d)
            if ((l >> d & 1) && d != c && !m[d][c]) greatest = false;
        if (greatest) return c;
    }
    return -1;
}

inline bool all_comparable(const Mat& m, uint32_t elems) {
    int n = int(m.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if ((elems >> a & 1) && (elems >> b & 1) && !m[a][b] && !m[b][a]) return false;
    return true;
}

// Relation-preserving bijection count by exhaustion; rel may be a digraph,
// an order, or a symmetric edge matrix. Usable up to n around 8.
inline long long aut_count(const Mat& rel) {
    int n = int(rel.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long long count = 0;
    do {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                if (rel[a][b] != rel[perm[a]][perm[b]]) ok = false;
        count += ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// Partition of arcs into alternation classes: repeatedly merge any two arcs
// that share a tail or share a head. Class ids are normalized to first use.
inline std::vector<int> alt_partition(const std::vector<std::pair<int, int>>& arcs) {
    int m = int(arcs.size());
    std::vector<int> root(m);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int v) {
        while (root[v] != v) v = root[v] = root[root[v]];
        return v;
    };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (arcs[i].first == arcs[j].first || arcs[i].second == arcs[j].second)
                root[find(i)] = find(j);
    std::vector<int> id(m, -1), out(m);
    int next = 0;
    for (int i = 0; i < m; ++i) {
        int r = find(i);
        if (id[r] < 0) id[r] = next++;
        out[i] = id[r];
    }
    return out;
}

}  // namespace oracle
