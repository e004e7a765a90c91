#include <catch2/catch_amalgamated.hpp>
#include <lattice_loom/lattice_loom.hpp>

#include <algorithm>
#include <random>

#include "oracles.hpp"

using namespace loom;

namespace {

// Canonical partition shape: sorted blocks of arc ids, blocks sorted.
std::vector<std::vector<int>> blocks_of(const std::vector<AltClass>& classes) {
    std::vector<std::vector<int>> out;
    for (const AltClass& c : classes) out.push_back(c.arcs);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> blocks_of(const std::vector<int>& ids) {
    int k = ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
    std::vector<std::vector<int>> out(k);
    for (int e = 0; e < int(ids.size()); ++e) out[ids[e]].push_back(e);
    std::sort(out.begin(), out.end());
    return out;
}

Digraph hexagon() { return digraph_from_poset(poset_of(crown(3))); }

Digraph oriented_cycle(int n) {
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
    return build_digraph(n, arcs);
}

}  // namespace

TEST_CASE("alternation classes match the endpoint-sharing closure") {
    std::vector<Digraph> zoo;
    zoo.push_back(hexagon());
    zoo.push_back(directed_tree(2, 2, 2));
    zoo.push_back(directed_tree(3, 2, 2));
    zoo.push_back(dl_construction(crown(3), 2).dl);
    zoo.push_back(oriented_cycle(5));
    zoo.push_back(digraph_from_poset(poset_of(cube(3))));
    std::mt19937 gen(23);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + int(gen() % 6);
        std::vector<int> rank(n);
        std::iota(rank.begin(), rank.end(), 0);
        std::shuffle(rank.begin(), rank.end(), gen);
        std::vector<std::pair<int, int>> arcs;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (rank[a] < rank[b] && gen() % 100 < 40) arcs.emplace_back(a, b);
        if (arcs.empty()) continue;
        zoo.push_back(build_digraph(n, arcs));
    }
    for (const Digraph& d : zoo) {
        CAPTURE(d.n, d.arcs.size());
        REQUIRE(blocks_of(alternation_classes(d)) == blocks_of(oracle::alt_partition(d.arcs)));
    }
}

TEST_CASE("seeded classes agree with the full partition") {
    Digraph d = directed_tree(2, 2, 2);
    auto classes = alternation_classes(d);
    for (int e = 0; e < int(d.arcs.size()); e += 3) {
        auto [x, y] = d.arcs[e];
        AltClass c = alternating_class(d, x, y);
        bool found = false;
        for (const AltClass& ref : classes)
            if (ref.arcs == c.arcs) found = true;
        REQUIRE(found);
        REQUIRE(std::count(c.arcs.begin(), c.arcs.end(), e) == 1);
    }
    REQUIRE_THROWS_AS(alternating_class(d, 0, 0), MissingArc);
}

TEST_CASE("a directed cycle splits into singleton classes") {
    for (int n = 3; n <= 6; ++n) {
        Digraph d = oriented_cycle(n);
        ReachabilityReport r = reachability_graph(d);
        REQUIRE(int(r.classes.size()) == n);
        for (const AltClass& c : r.classes) REQUIRE(c.arcs.size() == 1);
        REQUIRE_FALSE(r.universal);
        REQUIRE(r.all_bipartite);
        REQUIRE(r.arc_transitive);
        REQUIRE(r.delta.has_value());
        REQUIRE(r.delta->n == 2);
        REQUIRE(r.delta->edges.size() == 1);
    }
}

TEST_CASE("an oriented complete bipartite graph is one class") {
    for (auto [m, n] : {std::pair{1, 4}, std::pair{2, 3}, std::pair{3, 3}}) {
        Digraph d = digraph_from_poset(poset_of(complete_bipartite(m, n)));
        ReachabilityReport r = reachability_graph(d);
        CAPTURE(m, n);
        REQUIRE(r.universal);
        REQUIRE(r.classes[0].arcs.size() == std::size_t(m) * n);
    }
}

TEST_CASE("the hexagon digraph carries one class shaped like itself") {
    ReachabilityReport r = reachability_graph(hexagon());
    REQUIRE(r.universal);
    REQUIRE(r.all_bipartite);
    REQUIRE(r.arc_transitive);
    REQUIRE(r.delta.has_value());
    REQUIRE(bipartite_isomorphic(*r.delta, crown(3), true));
}

TEST_CASE("a class through a mid vertex has no bipartite reading") {
    Digraph d = build_digraph(3, {{0, 1}, {1, 2}, {0, 2}});
    auto classes = alternation_classes(d);
    REQUIRE(classes.size() == 1);
    REQUIRE_FALSE(class_graph(d, classes[0]).has_value());
    REQUIRE_FALSE(reachability_graph(d).all_bipartite);
}

TEST_CASE("reachability report rejects empty and split inputs") {
    REQUIRE_THROWS_AS(reachability_graph(build_digraph(2, {})), NoArcs);
    REQUIRE_THROWS_AS(reachability_graph(build_digraph(4, {{0, 1}, {2, 3}})), NotConnected);
}

TEST_CASE("descendant sets and the branching-without-merging test") {
    Digraph h = hexagon();
    int top = h.level[0] == 1 ? 0 : 1;  // any top vertex
    for (int v = 0; v < h.n; ++v)
        if (h.level[v] == 1) top = v;
    REQUIRE(descendants(h, top).count() == 3);
    REQUIRE(is_descendant_tree(h, top));

    Digraph diamond = build_digraph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {2, 1, 1, 0});
    REQUIRE_FALSE(is_descendant_tree(diamond, 0));

    // reachability down from v matches reachability up from w
    Digraph t = directed_tree(2, 2, 2);
    for (int v = 0; v < t.n; ++v) {
        Bitset down = descendants(t, v, Direction::Down);
        for (int w = down.first(); w >= 0; w = down.next(w))
            REQUIRE(descendants(t, w, Direction::Up).test(v));
        REQUIRE(is_descendant_tree(t, v));
    }
}

TEST_CASE("descendant intersections close up on trees but not on diamonds") {
    REQUIRE(intersection_property(directed_tree(2, 2, 2)).holds);
    REQUIRE(intersection_property(dl_construction(crown(3), 2).dl).holds);

    Digraph k22 = build_digraph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}, {1, 1, 0, 0});
    IntersectionReport rep = intersection_property(k22);
    REQUIRE_FALSE(rep.holds);
    REQUIRE(rep.witness == std::pair<int, int>{0, 1});
    REQUIRE(rep.checked >= 1);
}

TEST_CASE("Y-configuration census on the tree window") {
    Digraph t = directed_tree(2, 2, 3);
    REQUIRE_THROWS_AS(y_transitive(t, 0), BadParams);

    auto shapes = y_shapes(t, 1);
    long long plain = 0, dual = 0;
    for (const YShape& s : shapes) {
        REQUIRE_FALSE(t.is_boundary(s.junction));
        REQUIRE(s.branches[0].size() == 1);
        REQUIRE(s.branches[1].size() == 1);
        REQUIRE(s.trunk.size() == 1);
        REQUIRE(s.branches[0] != s.branches[1]);
        (s.dual ? dual : plain) += 1;
    }
    YReport r1 = y_transitive(t, 1);
    REQUIRE(r1.y_count == plain);
    REQUIRE(r1.ybar_count == dual);
    REQUIRE(r1.y_count == 16);
    REQUIRE(r1.ybar_count == 16);

    // the clipped window separates junctions at different boundary distances
    REQUIRE_FALSE(r1.verdict);
    YReport r2 = y_transitive(t, 2);
    REQUIRE(r2.y_count == 32);
    REQUIRE_FALSE(r2.verdict);
}

TEST_CASE("the hexagon window is Y-transitive at depth two") {
    auto d = dl_construction(crown(3), 3);
    YReport r = y_transitive(d.dl, 2);
    REQUIRE(r.y_count == 16);
    REQUIRE(r.ybar_count == 16);
    REQUIRE(r.y_classes == 1);
    REQUIRE(r.ybar_classes == 1);
    REQUIRE(r.verdict);
}

TEST_CASE("bounded cycle census") {
    REQUIRE(detail::bounded_cycles(hexagon(), 16).size() == 1);
    REQUIRE(detail::bounded_cycles(hexagon(), 16)[0].size() == 6);
    REQUIRE(detail::bounded_cycles(directed_tree(2, 2, 2), 16).empty());
    REQUIRE(detail::bounded_cycles(dl_construction(crown(3), 2).dl, 16).size() == 2);
}

TEST_CASE("local structure laws hold on the hexagon digraph and its windows") {
    PReport base = check_p_properties(hexagon(), crown(3));
    REQUIRE(base.p2);
    REQUIRE(base.p3);
    REQUIRE(base.p4);
    REQUIRE(base.p5);
    REQUIRE(base.cycles == 1);

    PReport window = check_p_properties(dl_construction(crown(3), 2).dl, crown(3));
    REQUIRE(window.p2);
    REQUIRE(window.p3);
    REQUIRE(window.p4);
    REQUIRE(window.p5);
    REQUIRE(window.cycles == 2);
    REQUIRE_FALSE(window.p3_vacuous);
}

TEST_CASE("an interior diamond breaks the source-sink alternation") {
    Digraph diamond = build_digraph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {2, 1, 1, 0});
    PReport rep = check_p_properties(diamond, complete_bipartite(1, 1));
    REQUIRE_FALSE(rep.p2);
    REQUIRE(rep.cycles == 1);
    REQUIRE(rep.p2_witness.first >= 0);

    REQUIRE_THROWS_AS(check_p_properties(build_digraph(2, {{0, 1}}), complete_bipartite(1, 1)),
                      MissingLevels);
}
