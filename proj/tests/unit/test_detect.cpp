#include <doctest.h>

#include "oracles.hpp"
#include "tindep/detect.hpp"
#include "tindep/error.hpp"

using namespace tindep;

namespace {

Graph k23() { return Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }

Graph triangular_prism() { return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}}); }

DetectOptions with(Engine e) {
    DetectOptions o;
    o.engine = e;
    return o;
}

}  // namespace

TEST_CASE("k1t") {
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    auto w = find_k1t(star, 3);
    REQUIRE(w);
    CHECK_FALSE(check_k1t(star, *w, 3));
    CHECK_FALSE(find_k1t(oracle::cycle(6), 3));
    Graph p = oracle::petersen();
    auto pw = find_k1t(p, 3);
    REQUIRE(pw);
    CHECK_FALSE(check_k1t(p, *pw, 3));
    CHECK(pw->vertex_set() == VertexSet{0, 1, 2, 6});
    CHECK_THROWS_AS(find_k1t(p, 0), InputError);
}

TEST_CASE("theta") {
    auto w = find_theta(k23());
    REQUIRE(w.witness);
    CHECK(w.witness->a == 0);
    CHECK(w.witness->b == 1);
    CHECK_FALSE(check_theta(k23(), *w.witness));
    CHECK_FALSE(find_theta(oracle::cycle(7)).witness);
    Graph p = oracle::petersen();
    auto pw = find_theta(p);
    CHECK(pw.witness.has_value() == oracle::contains_pattern(p, oracle::Pattern::Theta));
    if (pw.witness) CHECK_FALSE(check_theta(p, *pw.witness));
}

TEST_CASE("prism") {
    auto w = find_prism(triangular_prism());
    REQUIRE(w.witness);
    CHECK_FALSE(check_prism(triangular_prism(), *w.witness));
    CHECK_FALSE(find_prism(oracle::complete(4)).witness);
    Graph w5 = oracle::wheel_graph(5, {0, 1, 2, 3, 4});
    CHECK(find_prism(w5).witness.has_value() == oracle::contains_pattern(w5, oracle::Pattern::Prism));
    // Two triangles sharing a vertex, joined by paths of length two.
    Graph line_wheel(7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}, {1, 5}, {5, 3}, {2, 6}, {6, 4}});
    auto lw = find_prism(line_wheel);
    REQUIRE(lw.witness);
    CHECK(lw.witness->has_zero_length_path());
    DetectOptions classical;
    classical.classical_prism = true;
    CHECK_FALSE(find_prism(line_wheel, classical).witness);
}

TEST_CASE("pyramid") {
    // Apex 0 adjacent to b3=5; paths 0-1-3 and 0-2-4; base 3,4,5.
    Graph pyr(6, {{0, 1}, {1, 3}, {0, 2}, {2, 4}, {0, 5}, {3, 4}, {3, 5}, {4, 5}});
    auto w = find_pyramid(pyr);
    REQUIRE(w.witness);
    CHECK(w.witness->apex == 0);
    CHECK_FALSE(check_pyramid(pyr, *w.witness));
    CHECK_FALSE(find_pyramid(oracle::path_graph(9)).witness);
}

TEST_CASE("exhaustive engine refuses graphs over the cap") {
    CHECK_THROWS_AS(find_theta(oracle::cycle(17)), ResourceError);
    CHECK_FALSE(find_theta(oracle::cycle(17), with(Engine::Auto)).witness);
}

TEST_CASE("detectors agree with the embedding oracle on small graphs") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 5 + static_cast<int>(rng.uniform(5));
        Graph g = oracle::random_graph(n, 2, 5, rng);
        auto theta = find_theta(g);
        auto prism = find_prism(g);
        auto pyramid = find_pyramid(g);
        CHECK(theta.witness.has_value() == oracle::contains_pattern(g, oracle::Pattern::Theta));
        CHECK(prism.witness.has_value() == oracle::contains_pattern(g, oracle::Pattern::Prism));
        CHECK(pyramid.witness.has_value() == oracle::contains_pattern(g, oracle::Pattern::Pyramid));
        DetectOptions classical;
        classical.classical_prism = true;
        CHECK(find_prism(g, classical).witness.has_value() ==
              oracle::contains_pattern(g, oracle::Pattern::ClassicalPrism));
        if (theta.witness) CHECK_FALSE(check_theta(g, *theta.witness));
        if (prism.witness) CHECK_FALSE(check_prism(g, *prism.witness));
        if (pyramid.witness) CHECK_FALSE(check_pyramid(g, *pyramid.witness));
    }
}

TEST_CASE("subset witness is the lex-least vertex set") {
    SplitMix64 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = oracle::random_graph(8, 2, 5, rng);
        auto theta = find_theta(g);
        if (!theta.witness) continue;
        VertexSet found = theta.witness->vertex_set();
        // No lexicographically smaller subset induces a theta.
        for (std::uint32_t m = 1; m < 256; ++m) {
            VertexSet s;
            for (int v = 0; v < 8; ++v)
                if (m >> v & 1U) s.push_back(v);
            if (!(s < found) || s.size() < 5) continue;
            Graph sub = induced_subgraph(g, s).graph;
            bool is_theta = false;
            for (const Graph& pat : oracle::patterns_of_size(oracle::Pattern::Theta, static_cast<int>(s.size())))
                is_theta |= oracle::isomorphic(sub, pat);
            CHECK_FALSE(is_theta);
        }
    }
}

TEST_CASE("path engine agrees with subset engine") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 6 + static_cast<int>(rng.uniform(9));
        Graph g = oracle::random_graph(n, static_cast<int>(1 + rng.uniform(2)), 6, rng);
        auto a = find_theta(g);
        auto b = find_theta(g, with(Engine::Paths));
        CHECK(a.witness.has_value() == b.witness.has_value());
        if (b.witness) CHECK_FALSE(check_theta(g, *b.witness));
        auto pa = find_prism(g);
        auto pb = find_prism(g, with(Engine::Paths));
        CHECK(pa.witness.has_value() == pb.witness.has_value());
        if (pb.witness) CHECK_FALSE(check_prism(g, *pb.witness));
        auto ya = find_pyramid(g);
        auto yb = find_pyramid(g, with(Engine::Paths));
        CHECK(ya.witness.has_value() == yb.witness.has_value());
        if (yb.witness) CHECK_FALSE(check_pyramid(g, *yb.witness));
    }
}

TEST_CASE("heuristic engine never asserts absence on large graphs") {
    Graph big = oracle::cycle(40);
    DetectOptions o = with(Engine::Heuristic);
    o.restarts = 5;
    auto r = find_theta(big, o);
    CHECK_FALSE(r.witness);
    CHECK_FALSE(r.decided);
}

TEST_CASE("wheels") {
    auto ws = find_wheels(oracle::wheel_graph(8, {0, 2, 4}), 4);
    REQUIRE(ws.size() == 1);
    CHECK_FALSE(is_special(oracle::wheel_graph(8, {0, 2, 4}), ws[0]));
    CHECK(wheel_sectors(oracle::wheel_graph(8, {0, 2, 4}), ws[0]).size() == 3);
    Graph sp = oracle::wheel_graph(8, {0, 1, 4});
    auto ss = find_wheels(sp, 4);
    REQUIRE(ss.size() == 1);
    CHECK(is_special(sp, ss[0]));
    CHECK(find_wheels(oracle::wheel_graph(5, {0, 1, 2, 3, 4}), 6).empty());
}

TEST_CASE("wheel sectors partition the hole edges") {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = oracle::random_graph(9, 1, 3, rng);
        for (const Wheel& w : find_wheels(g, 4)) {
            CHECK_FALSE(check_wheel(g, w));
            auto sectors = wheel_sectors(g, w);
            CHECK(sectors.size() == neighbors_in(g, w.hub, make_set(w.hole)).size());
            std::size_t edges = 0;
            for (const auto& s : sectors) edges += s.length();
            CHECK(edges == w.hole.size());
        }
    }
}

TEST_CASE("class membership") {
    CHECK(in_class_Ct(oracle::cycle(9), 3).member);
    auto r = in_class_Ct(k23(), 5);
    CHECK_FALSE(r.member);
    CHECK(r.violation == "theta");
    auto p = in_class_Ct(triangular_prism(), 5);
    CHECK(p.violation == "prism");
}
