#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ordpat/checker.hpp"
#include "ordpat/classes.hpp"
#include "ordpat/search.hpp"
#include "support/gen.hpp"

using namespace ordpat;
using namespace ordpat::testgen;

TEST_CASE("bfs on a path") {
    UndirectedGraph p3 = path_graph(3);
    auto res = run_search(p3, {SearchAlgo::BFS, 0, std::nullopt});
    CHECK(res.ordering.order() == std::vector<int>{0, 1, 2});
    REQUIRE(res.layers.has_value());
    CHECK(*res.layers == std::vector<int>{0, 1, 2});
}

TEST_CASE("bfs restarts at least unvisited vertex") {
    UndirectedGraph g = disjoint_union(path_graph(2), path_graph(2));
    auto res = run_search(g, {SearchAlgo::BFS, 1, std::nullopt});
    CHECK(res.ordering.order() == std::vector<int>{1, 0, 2, 3});
}

TEST_CASE("mds starts at the unique maximum degree vertex") {
    UndirectedGraph k13 = star_graph(3); // center 0
    auto res = run_search(k13, {SearchAlgo::MDS, std::nullopt, std::nullopt});
    CHECK(res.ordering.vertex_at(0) == 0);
    CHECK(res.trace[0].degree == 3);
}

TEST_CASE("lexbfs on a triangle with a pendant") {
    // Triangle a,b,c plus pendant d attached to c.
    UndirectedGraph g = UndirectedGraph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    auto res = run_search(g, {SearchAlgo::LexBFS, 0, std::nullopt});
    CHECK(res.ordering.order() == std::vector<int>{0, 1, 2, 3});
    CHECK(avoids(g, res.ordering, parse_family("4")));
}

TEST_CASE("dfs follows stack discipline with least-id ties") {
    //    0-1, 0-2, 1-3: dfs from 0 goes deep through 1 before visiting 2.
    UndirectedGraph g = UndirectedGraph::from_edges(4, {{0, 1}, {0, 2}, {1, 3}});
    auto res = run_search(g, {SearchAlgo::DFS, 0, std::nullopt});
    CHECK(res.ordering.order() == std::vector<int>{0, 1, 3, 2});
}

TEST_CASE("generic search stays inside a component") {
    UndirectedGraph g = disjoint_union(path_graph(3), path_graph(2));
    auto res = run_search(g, {SearchAlgo::Generic, std::nullopt, std::nullopt});
    CHECK(res.ordering.order() == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("searches are deterministic and produce permutations") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + static_cast<int>(rng() % 7);
        UndirectedGraph g = graph_from_mask(
            n, std::uniform_int_distribution<std::uint64_t>(0, labeled_graph_count(n) - 1)(rng));
        for (SearchAlgo kind : {SearchAlgo::Generic, SearchAlgo::BFS, SearchAlgo::DFS,
                                SearchAlgo::LexBFS, SearchAlgo::MNS, SearchAlgo::MDS}) {
            auto r1 = run_search(g, {kind, std::nullopt, std::nullopt});
            auto r2 = run_search(g, {kind, std::nullopt, std::nullopt});
            CHECK(r1.ordering == r2.ordering);
            CHECK(r1.ordering.size() == n);
            for (std::size_t i = 0; i < r1.trace.size(); ++i)
                CHECK(r1.trace[i].vertex == r2.trace[i].vertex);
        }
    }
}

TEST_CASE("bfs layers are monotone along the ordering within components") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        UndirectedGraph g = graph_from_mask(
            n, std::uniform_int_distribution<std::uint64_t>(0, labeled_graph_count(n) - 1)(rng));
        auto res = run_search(g, {SearchAlgo::BFS, std::nullopt, std::nullopt});
        REQUIRE(res.layers.has_value());
        int prev = -1;
        for (int pos = 0; pos < n; ++pos) {
            int layer = (*res.layers)[static_cast<std::size_t>(res.ordering.vertex_at(pos))];
            if (layer == 0) prev = 0; // component restart
            CHECK(layer >= prev);
            prev = layer;
        }
    }
}

TEST_CASE("lexbfs requires a valid start and lexbfs+ a prior ordering") {
    UndirectedGraph g = path_graph(3);
    CHECK_THROWS_AS(run_search(g, {SearchAlgo::LexBFS, 7, std::nullopt}), std::invalid_argument);
    CHECK_THROWS_AS(run_search(g, {SearchAlgo::LexBFSPlus, std::nullopt, std::nullopt}),
                    std::invalid_argument);
}

TEST_CASE("lexbfs+ breaks ties toward the latest prior vertex") {
    UndirectedGraph g(3); // edgeless: pure tie-breaking
    VertexOrdering prior({1, 2, 0});
    auto res = run_search(g, {SearchAlgo::LexBFSPlus, std::nullopt, prior});
    CHECK(res.ordering.order() == std::vector<int>{0, 2, 1});
}

TEST_CASE("two bfs sweeps give an end-to-end path ordering") {
    UndirectedGraph path = UndirectedGraph::from_edges(3, {{1, 0}, {0, 2}}); // 1-0-2
    auto res = multi_sweep(path, {SearchAlgo::BFS, std::nullopt, std::nullopt}, 2);
    CHECK(avoids(path, res.ordering, parse_family("22")));
    auto one = multi_sweep(path, {SearchAlgo::BFS, std::nullopt, std::nullopt}, 1);
    CHECK(one.ordering == run_search(path, {SearchAlgo::BFS, std::nullopt, std::nullopt}).ordering);
}

TEST_CASE("lexbfs orders chordal graphs without the chordal pattern") {
    std::mt19937 rng(21);
    PatternFamily fam = parse_family("4");
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : nonisomorphic_graphs(n))
            if (is_chordal(g)) {
                auto res = run_search(g, {SearchAlgo::LexBFS, std::nullopt, std::nullopt});
                CHECK(avoids(g, res.ordering, fam));
            }
    for (int trial = 0; trial < 25; ++trial) {
        UndirectedGraph g = random_k_tree(rng, 12 + static_cast<int>(rng() % 20),
                                          1 + static_cast<int>(rng() % 4));
        auto res = run_search(g, {SearchAlgo::LexBFS, std::nullopt, std::nullopt});
        CHECK(find_violation(g, res.ordering, fam) == std::nullopt);
    }
}

TEST_CASE("three lexbfs+ sweeps order proper interval graphs") {
    std::mt19937 rng(33);
    PatternFamily fam = parse_family("1,4");
    for (int trial = 0; trial < 40; ++trial) {
        UndirectedGraph g = random_indifference_graph(rng, 2 + static_cast<int>(rng() % 18));
        auto res = multi_sweep(g, {SearchAlgo::LexBFS, std::nullopt, std::nullopt}, 3);
        CHECK(avoids(g, res.ordering, fam));
    }
}

TEST_CASE("n lexbfs+ sweeps order cocomparability graphs") {
    PatternFamily cocomp = parse_family("5");
    for (int n = 1; n <= 6; ++n) {
        for (const auto& g : nonisomorphic_graphs(n)) {
            if (g.components().size() != 1) continue;
            if (!oracle_member(g, cocomp)) continue;
            auto res = multi_sweep(g, {SearchAlgo::LexBFS, std::nullopt, std::nullopt},
                                   std::max(1, g.n()));
            CHECK(avoids(g, res.ordering, cocomp));
        }
    }
    // Desk-scale check at n = 7, connected cocomparability graphs only.
    for (const auto& g : nonisomorphic_graphs(7)) {
        if (g.components().size() != 1) continue;
        if (!is_comparability(g.complement())) continue;
        auto res = multi_sweep(g, {SearchAlgo::LexBFS, std::nullopt, std::nullopt}, 7);
        CHECK(avoids(g, res.ordering, cocomp));
    }
}

TEST_CASE("mns labels grow by inclusion") {
    UndirectedGraph g = UndirectedGraph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
    auto res = run_search(g, {SearchAlgo::MNS, std::nullopt, std::nullopt});
    CHECK(res.ordering.size() == 5);
    // On a chordal graph an MNS ordering avoids the chordal pattern too.
    CHECK(avoids(g, res.ordering, parse_family("4")));
}
