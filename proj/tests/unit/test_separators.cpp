#include <doctest.h>

#include "oracles.hpp"
#include "tindep/error.hpp"
#include "tindep/separators.hpp"

using namespace tindep;

namespace {

Wheel whole_wheel(int len) {
    Wheel w;
    for (int i = 0; i < len; ++i) w.hole.push_back(i);
    w.hub = len;
    return w;
}

PyramidWitness as_witness(const std::array<std::vector<Vertex>, 3>& paths) {
    PyramidWitness p;
    p.apex = 0;
    for (int i = 0; i < 3; ++i) {
        p.base[i] = i + 1;
        p.paths[i].vertices = paths[i];
    }
    return p;
}

// Pairs from distinct groups are separated iff BFS components differ.
bool oracle_separated(const Graph& g, const VertexSet& NZ, Vertex u, Vertex v) {
    for (const auto& c : oracle::bfs_components(g, NZ))
        if (std::count(c.begin(), c.end(), u) && std::count(c.begin(), c.end(), v)) return false;
    return true;
}

}  // namespace

TEST_CASE("wheel Z") {
    CHECK(wheel_Z(oracle::wheel_graph(8, {0, 2, 4}), whole_wheel(8)) == VertexSet{0, 2, 4, 8});
    CHECK(wheel_Z(oracle::wheel_graph(8, {0, 1, 4}), whole_wheel(8)) == VertexSet{0, 1, 3, 4, 5, 8});
    CHECK(wheel_Z(oracle::wheel_graph(12, {0, 4, 8}), whole_wheel(12)) == VertexSet{0, 4, 8, 12});
    Wheel bad = whole_wheel(8);
    bad.hub = 3;
    CHECK_THROWS_AS(wheel_Z(oracle::wheel_graph(8, {0, 2, 4}), bad), InputError);
}

TEST_CASE("pyramid Z") {
    auto [g6, p6] = oracle::pyramid_with_paths({2, 2, 1});
    VertexSet z6 = pyramid_Z(g6, as_witness(p6));
    CHECK(z6.size() == 6);
    CHECK(z6 == g6.vertices());
    auto [g3, p3] = oracle::pyramid_with_paths({3, 3, 3});
    CHECK(pyramid_Z(g3, as_witness(p3)).size() == 7);
    auto [g1, p1] = oracle::pyramid_with_paths({1, 2, 2});
    CHECK(pyramid_Z(g1, as_witness(p1)).size() == 6);
}

TEST_CASE("non-special wheel separation on C12") {
    Graph g = oracle::wheel_graph(12, {0, 4, 8});
    auto r = verify_wheel_separation(g, whole_wheel(12));
    CHECK(r.ok());
    CHECK_FALSE(r.hypotheses_assumed);
    CHECK(std::count(r.separated_pairs.begin(), r.separated_pairs.end(), std::pair<Vertex, Vertex>{2, 6}) == 1);
    for (auto [u, v] : r.separated_pairs) CHECK(oracle_separated(g, r.NZ, u, v));
    CHECK(separates(g, r.NZ, {2}, {6}));
}

TEST_CASE("wheel separation with pendant paths") {
    // Paths 13-14 glued to h3 (id 2) and 15-16 glued to h7 (id 6).
    Graph g = oracle::wheel_graph(12, {0, 4, 8}, {{2, 13}, {13, 14}, {6, 15}, {15, 16}}, 4);
    auto r = verify_wheel_separation(g, whole_wheel(12));
    CHECK(r.ok());
    CHECK(separates(g, r.NZ, {14}, {16}));
}

TEST_CASE("wheel hypotheses") {
    CHECK_THROWS_AS(verify_wheel_separation(oracle::wheel_graph(6, {0, 2, 4}), whole_wheel(6)), ContractError);
    // Special wheel with long sectors 2 and 5.
    CHECK_THROWS_AS(verify_wheel_separation(oracle::wheel_graph(8, {0, 1, 3}), whole_wheel(8)), ContractError);
    auto r = verify_wheel_separation(oracle::wheel_graph(9, {0, 1, 5}), whole_wheel(9));
    CHECK(r.ok());
    CHECK(r.Z.size() == 6);
}

TEST_CASE("a theta in the host graph breaks the contract") {
    // Extra path between two sector interiors avoiding N[Z] creates a theta.
    Graph g = oracle::wheel_graph(12, {0, 4, 8}, {{2, 13}, {13, 6}}, 1);
    CHECK_THROWS_AS(verify_wheel_separation(g, whole_wheel(12)), ContractError);
    SeparationOptions unchecked;
    unchecked.check_class = false;
    auto r = verify_wheel_separation(g, whole_wheel(12), unchecked);
    CHECK_FALSE(r.ok());
}

TEST_CASE("pyramid separation") {
    auto [g, paths] = oracle::pyramid_with_paths({5, 5, 5});
    CHECK(g.size() == 16);
    auto r = verify_pyramid_separation(g, as_witness(paths));
    CHECK(r.ok());
    CHECK_FALSE(r.vacuous);
    for (auto [u, v] : r.separated_pairs) CHECK(oracle_separated(g, r.NZ, u, v));

    auto [small, sp] = oracle::pyramid_with_paths({2, 2, 1});
    auto vac = verify_pyramid_separation(small, as_witness(sp));
    CHECK(vac.vacuous);

    // Pendant vertex on the middle of P1.
    REQUIRE(paths[0] == std::vector<Vertex>{0, 4, 5, 6, 7, 1});
    auto [dec, dp] = oracle::pyramid_with_paths({5, 5, 5}, {{6, 16}}, 1);
    auto rd = verify_pyramid_separation(dec, as_witness(dp));
    CHECK(rd.ok());
    CHECK_FALSE(rd.hypotheses_assumed);
    CHECK(separates(dec, rd.NZ, {16}, {dp[1][3]}));
}
