#include <catch2/catch_amalgamated.hpp>
#include <lattice_loom/lattice_loom.hpp>

using namespace loom;

TEST_CASE("complete bipartite intervals are chains of three") {
    for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
        IntervalShape s = classify_interval(poset_of(complete_bipartite(m, n)));
        CAPTURE(m, n);
        REQUIRE(s.kind == ShapeKind::Chain);
        REQUIRE(s.param == 3);
        REQUIRE(s.uniform);
        REQUIRE(s.witness.poset.n == 3);
        REQUIRE(s.counterexample == std::pair<int, int>{-1, -1});
        REQUIRE(shape_str(s) == "Chain(3)");
    }
}

TEST_CASE("cycle intervals are bare edges") {
    IntervalShape s = classify_interval(poset_of(crown(3)));
    REQUIRE(s.kind == ShapeKind::Chain);
    REQUIRE(s.param == 2);
    REQUIRE(s.uniform);
}

TEST_CASE("hypercube layer intervals are diamonds one rank down") {
    for (int n = 3; n <= 4; ++n) {
        IntervalShape s = classify_interval(poset_of(cube(n)));
        CAPTURE(n);
        REQUIRE(s.kind == ShapeKind::KDiamond);
        REQUIRE(s.param == n - 1);
        REQUIRE(s.uniform);
        // witness: bottom, top, and the middles in between
        REQUIRE(s.witness.poset.n == n + 1);
    }
}

TEST_CASE("plane complement intervals are 3-diamonds") {
    IntervalShape s = classify_interval(poset_of(fano_complement()));
    REQUIRE(shape_str(s) == "KDiamond(3)");
    REQUIRE(s.uniform);
}

TEST_CASE("matching complement intervals are 2-diamonds") {
    IntervalShape s = classify_interval(poset_of(complement_matching(4)));
    REQUIRE(shape_str(s) == "KDiamond(2)");
    REQUIRE(s.uniform);
}

TEST_CASE("mixed interval shapes are reported with a counterexample") {
    // one lone edge next to a hypercube layer graph: edge pairs give bare
    // chains, cube pairs give diamonds
    BipartiteGraph q = cube(3);
    int n = q.n + 2;
    std::vector<char> side(n, 0);
    std::vector<std::pair<int, int>> edges = {{0, 1}};
    side[1] = 1;
    for (int v = 0; v < q.n; ++v) side[2 + v] = q.side[v];
    for (auto& [a, b] : q.edges) edges.emplace_back(a + 2, b + 2);
    Poset p = poset_of(build_bipartite(n, side, edges));

    IntervalShape s = classify_interval(p);
    REQUIRE_FALSE(s.uniform);
    REQUIRE(s.counterexample != std::pair<int, int>{-1, -1});
}

TEST_CASE("interval classification guards its input") {
    REQUIRE_THROWS_AS(classify_interval(build_poset(3, {{0, 1}, {1, 2}})), BadParams);
    REQUIRE_THROWS_AS(classify_interval(build_poset(4, {})), NoComparablePair);
}
