#include <doctest.h>

#include "oracles.hpp"
#include "tindep/amicable.hpp"
#include "tindep/detect.hpp"
#include "tindep/error.hpp"

using namespace tindep;

namespace {

// d_i and d_j lie in different BFS components of G - N[Z].
bool oracle_separated(const Graph& g, const VertexSet& Z, Vertex a, Vertex b) {
    VertexSet NZ = closed_neighborhood(g, Z);
    if (set_contains(NZ, a) || set_contains(NZ, b)) return false;
    for (const auto& c : oracle::bfs_components(g, NZ))
        if (std::count(c.begin(), c.end(), a) && std::count(c.begin(), c.end(), b)) return false;
    return true;
}

}  // namespace

TEST_CASE("trisection conditions") {
    auto gen = generate_amicable({"caterpillar-pyramid", 1, 2, 0, 1});
    const Graph& g = gen.graph;
    const auto& T = gen.instance.T;
    CHECK_FALSE(check_trisection(g, T, 7));
    CHECK(check_trisection(g, T, 6).has_value());
    // Join two vertices of Y.
    auto edges = g.edges();
    edges.emplace_back(T.Y[0], T.Y[1]);
    CHECK(*check_trisection(Graph(g.size(), edges), T, 7) == "Y is not stable");
    // Detach one y from D2.
    edges = g.edges();
    std::erase_if(edges, [&](Edge e) { return (e.first == T.Y[2] && set_contains(T.D2, e.second)) ||
                                                (e.second == T.Y[2] && set_contains(T.D2, e.first)); });
    CHECK(*check_trisection(Graph(g.size(), edges), T, 7) == "N(D2) differs from Y");
}

TEST_CASE("every amicable case fires on generated instances") {
    for (const auto& tag : amicable_case_tags())
        for (int v = 0; v < 4; ++v) {
            AmicableGenSpec spec{tag, v % 3, 1 + v % 2, v, static_cast<std::uint64_t>(v + 1)};
            auto gen = generate_amicable(spec);
            INFO(tag << " variant " << v);
            auto r = amicable_Z(gen.graph, gen.instance);
            CHECK(r.case_tag == tag);
            for (const auto& c : r.checks) {
                INFO(c.name);
                CHECK(c.ok);
            }
            CHECK(r.verified);
            CHECK(oracle_separated(gen.graph, r.Z, r.D1[r.i - 1], r.D1[r.j - 1]));
            CHECK(static_cast<int>(r.Z.size()) <= std::max(2 * gen.instance.t, 7));
        }
}

TEST_CASE("case-specific core sizes") {
    auto r = amicable_Z(generate_amicable({"caterpillar-pyramid", 0, 1, 0, 1}).graph,
                        generate_amicable({"caterpillar-pyramid", 0, 1, 0, 1}).instance);
    CHECK(r.Z.size() == 7);
    auto gen = generate_amicable({"lineStar-wide-specialwheel", 1, 2, 0, 3});
    r = amicable_Z(gen.graph, gen.instance);
    CHECK(r.Z.size() == 6);
    CHECK(std::holds_alternative<Wheel>(r.witness));
}

TEST_CASE("generated instances lie in the class") {
    DetectOptions opts;
    opts.engine = Engine::Paths;
    for (const auto& tag : amicable_case_tags()) {
        auto gen = generate_amicable({tag, 0, 1, 1, 5});
        INFO(tag);
        CHECK_FALSE(find_theta(gen.graph, opts).witness);
        CHECK_FALSE(find_prism(gen.graph, opts).witness);
    }
}

TEST_CASE("amiability search feeds the amicability construction") {
    for (const auto& tag : amicable_case_tags()) {
        auto gen = generate_amicable({tag, 1, 2, 2, 9});
        INFO(tag);
        auto a = amiability_search(gen.graph, gen.instance.T, 7, gen.instance.t);
        CHECK(a.X.size() == 7);
        CHECK(make_set(a.X) == gen.instance.X);
        CHECK(is_subset(a.H, gen.instance.T.D2));
        CHECK(a.connectifier == (tag.rfind("align", 0) != 0));
        AmicabilityInstance inst = gen.instance;
        inst.X = make_set(a.X);
        inst.H = a.H;
        auto r = amicable_Z(gen.graph, inst);
        CHECK(r.case_tag == tag);
        CHECK(r.verified);
    }
}

TEST_CASE("amiability search with small x") {
    auto gen = generate_amicable({"caterpillar-pyramid", 0, 1, 0, 2});
    auto a = amiability_search(gen.graph, gen.instance.T, 1, gen.instance.t);
    CHECK(a.X.size() == 1);
    a = amiability_search(gen.graph, gen.instance.T, 3, gen.instance.t);
    REQUIRE(a.X.size() == 3);
    REQUIRE(a.shape);
    CHECK_FALSE(check_connectifier(gen.graph, *a.shape, make_set(a.X)));
    CHECK(a.d1_kind == AlignKind::Triangular);
}

TEST_CASE("amicable construction rejects broken hypotheses") {
    auto gen = generate_amicable({"align-specialwheel", 0, 1, 0, 1});
    AmicabilityInstance inst = gen.instance;
    inst.X.pop_back();
    CHECK_THROWS_AS(amicable_Z(gen.graph, inst), ContractError);
    // Both alignments spiky forces a theta.
    auto spiky = generate_amicable({"align-nonspecialwheel", 0, 1, 0, 1});
    (void)spiky;
    std::vector<Edge> e;
    int n = 7;
    std::vector<Vertex> d1, hp;
    for (int side = 0; side < 2; ++side) {
        auto& p = side == 0 ? d1 : hp;
        for (int k = 0; k < 15; ++k) {
            if (!p.empty()) e.emplace_back(p.back(), n);
            p.push_back(n++);
        }
        for (int l = 0; l < 7; ++l) e.emplace_back(l, p[1 + 2 * l]);
    }
    Graph g(n, e);
    AmicabilityInstance bad;
    bad.T.D1.vertices = d1;
    bad.T.Y = {0, 1, 2, 3, 4, 5, 6};
    bad.T.D2 = make_set(hp);
    bad.X = bad.T.Y;
    bad.H = bad.T.D2;
    CHECK_THROWS_WITH_AS(amicable_Z(g, bad), doctest::Contains("class hypothesis violated"), ContractError);
}
