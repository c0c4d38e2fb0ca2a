#include <doctest.h>

#include "oracles.hpp"
#include "tindep/error.hpp"
#include "tindep/graph.hpp"
#include "tindep/io.hpp"
#include "tindep/weights.hpp"

using namespace tindep;

TEST_CASE("closed neighborhood") {
    Graph c5 = oracle::cycle(5);
    CHECK(closed_neighborhood(c5, {0}) == VertexSet{0, 1, 4});
    CHECK(closed_neighborhood(c5, c5.vertices()) == c5.vertices());
    Graph p = oracle::petersen();
    VertexSet expect{0};
    for (Vertex u = 0; u < 10; ++u)
        if (p.adjacent(0, u)) expect.push_back(u);
    CHECK(closed_neighborhood(p, {0}) == make_set(expect));
    CHECK(closed_neighborhood(p, {0}).size() == 4);
    CHECK_THROWS_AS(closed_neighborhood(p, {10}), InputError);
}

TEST_CASE("components") {
    CHECK(components(oracle::path_graph(3), {1}) == std::vector<VertexSet>{{0}, {2}});
    CHECK(components(oracle::cycle(6), {}) == std::vector<VertexSet>{{0, 1, 2, 3, 4, 5}});
    auto comps = components(oracle::cycle(12), {0, 1, 2, 11});
    REQUIRE(comps.size() == 1);
    CHECK(comps[0] == VertexSet{3, 4, 5, 6, 7, 8, 9, 10});
}

TEST_CASE("components agree with BFS and separates agrees with components") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng.uniform(12));
        Graph g = oracle::random_graph(n, 1, 4, rng);
        VertexSet removed;
        for (Vertex v = 0; v < n; ++v)
            if (rng.chance(1, 4)) removed.push_back(v);
        auto comps = components(g, removed);
        CHECK(comps == oracle::bfs_components(g, removed));
        VertexSet rest = set_difference(g.vertices(), removed);
        if (rest.size() < 2) continue;
        Vertex a = rest.front();
        Vertex b = rest.back();
        bool together = false;
        for (const auto& c : comps) together |= set_contains(c, a) && set_contains(c, b);
        CHECK(separates(g, removed, {a}, {b}) == !together);
    }
}

TEST_CASE("separates") {
    CHECK(separates(oracle::path_graph(3), {1}, {0}, {2}));
    CHECK_FALSE(separates(Graph(2, {{0, 1}}), {}, {0}, {1}));
    CHECK_THROWS_AS(separates(oracle::path_graph(3), {1}, {1}, {2}), InputError);
}

TEST_CASE("max stable set") {
    CHECK(max_stable_bruteforce(oracle::cycle(5), oracle::cycle(5).vertices()).size == 2);
    CHECK(max_stable_bruteforce(oracle::complete(5), oracle::complete(5).vertices()).size == 1);
    Graph p = oracle::petersen();
    auto s = max_stable_bruteforce(p, p.vertices());
    CHECK(s.size == oracle::alpha(p, p.vertices()));
    CHECK(s.size == 4);
    CHECK(is_stable(p, s.witness));
    Graph big = oracle::path_graph(40);
    CHECK_THROWS_AS(max_stable_bruteforce(big, big.vertices()), ResourceError);
}

TEST_CASE("stable number agrees with include/exclude recursion") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 1 + static_cast<int>(rng.uniform(16));
        Graph g = oracle::random_graph(n, static_cast<int>(1 + rng.uniform(3)), 4, rng);
        auto s = max_stable_bruteforce(g, g.vertices());
        CHECK(s.size == oracle::alpha(g, g.vertices()));
        CHECK(is_stable(g, s.witness));
        CHECK(static_cast<int>(s.witness.size()) == s.size);
    }
}

TEST_CASE("induced paths, holes, shortest paths") {
    Graph c6 = oracle::cycle(6);
    CHECK(is_induced_path(c6, std::vector<Vertex>{0, 1, 2, 3}));
    CHECK_FALSE(is_induced_path(c6, std::vector<Vertex>{0, 1, 2, 3, 4, 5}));
    CHECK(is_hole(c6, std::vector<Vertex>{0, 1, 2, 3, 4, 5}));
    CHECK_FALSE(is_hole(oracle::complete(3), std::vector<Vertex>{0, 1, 2}));
    auto p = shortest_path(c6, 0, {3}, c6.vertices());
    REQUIRE(p);
    CHECK(*p == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("blocks and two-core") {
    // Triangle 0-1-2 with a pendant path 2-3-4 and an isolated vertex 5.
    Graph g(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
    auto b = blocks(g);
    CHECK(b == std::vector<VertexSet>{{0, 1, 2}, {2, 3}, {3, 4}, {5}});
    CHECK(two_core(g) == VertexSet{0, 1, 2});
}

TEST_CASE("graph text and JSON formats") {
    Graph g = oracle::cycle(4);
    std::string text = format_graph_text(g);
    CHECK(parse_graph_text(text) == g);
    CHECK_THROWS_AS(parse_graph_text("p 2 1\ne 0 0\n"), InputError);
    CHECK_THROWS_AS(parse_graph_text("p 2 2\ne 0 1\ne 1 0\n"), InputError);
    auto doc = parse_graph_document(R"({"n":3,"edges":[[0,1],[1,2]]})");
    CHECK(doc.graph == oracle::path_graph(3));
    auto labelled = parse_graph_document(R"({"labels":["x","y","z"],"edges":[["x","z"]]})");
    CHECK(labelled.graph.adjacent(0, 2));
}

TEST_CASE("weights are exact") {
    WeightFn w = WeightFn::uniform(3);
    CHECK(w.normal());
    CHECK(w.of({0, 1}) == Rational(2, 3));
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(rational_string(Rational(6, 8)) == "3/4");
    CHECK_THROWS_AS(parse_rational("x"), InputError);
    CHECK_THROWS_AS(WeightFn(std::vector<Rational>{Rational(-1)}), InputError);
}
