#include <doctest.h>

#include <filesystem>

#include "oracles.hpp"
#include "tindep/amicable.hpp"
#include "tindep/campaign.hpp"
#include "tindep/connect.hpp"
#include "tindep/detect.hpp"
#include "tindep/error.hpp"
#include "tindep/generate.hpp"
#include "tindep/serialize.hpp"

using namespace tindep;

namespace {

GeneratorSpec spec(const std::string& family, std::uint64_t seed = 1) {
    GeneratorSpec s;
    s.family = family;
    s.seed = seed;
    return s;
}

}  // namespace

TEST_CASE("wheel family") {
    GeneratorSpec s = spec("wheel", 7);
    Generated a = generate(s);
    CHECK(a.graph.size() == 13);
    Wheel w = wheel_from_json(a.witness);
    CHECK_FALSE(check_wheel(a.graph, w));
    CHECK_FALSE(is_special(a.graph, w));
    CHECK(w.hole.size() == 12);
    CHECK(a.graph.degree(w.hub) == 3);
    CHECK(generate(s).graph == a.graph);
    CHECK(generated_to_json(generate(s)).dump() == generated_to_json(a).dump());

    s.special = true;
    s.long_sector = 3;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        s.seed = seed;
        Generated g = generate(s);
        Wheel sw = wheel_from_json(g.witness);
        CHECK(is_special(g.graph, sw));
        for (const auto& sec : wheel_sectors(g.graph, sw)) CHECK((sec.length() == 1 || sec.length() >= 3));
    }
    s.long_sector = 1;
    CHECK_THROWS_AS(generate(s), InputError);
    s.long_sector = 6;
    CHECK_THROWS_AS(generate(s), InputError);
}

TEST_CASE("generated wheels and pyramids are theta- and prism-free") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        GeneratorSpec w = spec("wheel", seed);
        w.hole = 7 + static_cast<int>(seed % 3);
        w.hub_degree = 3 + static_cast<int>(seed % 2);
        w.pendants = 1;
        w.max_n = 12;
        Graph g = generate(w).graph;
        CHECK(g.size() <= 12);
        CHECK_FALSE(oracle::contains_pattern(g, oracle::Pattern::Theta));
        CHECK_FALSE(oracle::contains_pattern(g, oracle::Pattern::Prism));
    }
    GeneratorSpec p = spec("pyramid");
    p.lengths = {1, 3, 4};
    p.pendants = 2;
    p.max_n = 12;
    Graph g = generate(p).graph;
    CHECK_FALSE(oracle::contains_pattern(g, oracle::Pattern::Theta));
    CHECK_FALSE(oracle::contains_pattern(g, oracle::Pattern::Prism));
}

TEST_CASE("pattern families carry valid witnesses") {
    GeneratorSpec p = spec("pyramid");
    p.lengths = {5, 5, 5};
    Generated py = generate(p);
    CHECK(py.graph.size() == 16);
    CHECK_FALSE(check_pyramid(py.graph, pyramid_from_json(py.witness)));
    p.lengths = {1, 1, 3};
    CHECK_THROWS_AS(generate(p), InputError);

    GeneratorSpec t = spec("theta");
    t.lengths = {2, 3, 4};
    Generated th = generate(t);
    CHECK_FALSE(check_theta(th.graph, theta_from_json(th.witness)));
    t.lengths = {1, 3, 4};
    CHECK_THROWS_AS(generate(t), InputError);

    GeneratorSpec r = spec("prism");
    r.lengths = {1, 2, 3};
    Generated pr = generate(r);
    CHECK_FALSE(check_prism(pr.graph, prism_from_json(pr.witness)));
    r.lengths = {0, 2, 2};
    Generated pz = generate(r);
    CHECK_FALSE(check_prism(pz.graph, prism_from_json(pz.witness)));
    CHECK(prism_from_json(pz.witness).has_zero_length_path());
    r.lengths = {0, 1, 2};
    CHECK_THROWS_AS(generate(r), InputError);
}

TEST_CASE("connectifier families") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        GeneratorSpec c = spec("caterpillar-connectifier", seed);
        c.branches = 2 + static_cast<int>(seed % 3);
        c.leg = 2;
        Generated g = generate(c);
        VertexSet H = set_from_json(g.witness.at("H"));
        VertexSet X = set_from_json(g.witness.at("X"));
        auto shape = classify_shape(g.graph, H);
        REQUIRE(shape);
        CHECK(shape->kind == ShapeKind::Caterpillar);
        CHECK_FALSE(check_connectifier(g.graph, *shape, X));
        CHECK(X.size() == static_cast<std::size_t>(c.branches + 2));

        GeneratorSpec l = spec("line-star-connectifier", seed);
        l.branches = 3 + static_cast<int>(seed % 3);
        l.leg = 2;
        Generated ls = generate(l);
        auto lshape = classify_shape(ls.graph, set_from_json(ls.witness.at("H")));
        REQUIRE(lshape);
        CHECK(lshape->kind == ShapeKind::LineSubdividedStar);
        CHECK_FALSE(check_connectifier(ls.graph, *lshape, set_from_json(ls.witness.at("X"))));
    }
}

TEST_CASE("trisection family") {
    for (const std::string& tag : amicable_case_tags()) {
        GeneratorSpec s = spec("trisection-instance", 3);
        s.case_tag = tag;
        Generated g = generate(s);
        Json doc = g.witness;
        doc["graph"] = graph_to_json(g.graph);
        AmicableDocument d = amicable_instance_from_json(doc);
        CHECK_FALSE(check_trisection(d.graph, d.instance.T, static_cast<int>(d.instance.T.Y.size())));
        CHECK(amicable_Z(d.graph, d.instance).case_tag == tag);
    }
}

TEST_CASE("random-Ct family") {
    GeneratorSpec s = spec("random-Ct", 1);
    s.n = 10;
    s.t = 4;
    Generated g = generate(s);
    REQUIRE(g.found);
    CHECK(g.graph.size() == 10);
    CHECK_FALSE(oracle::contains_pattern(g.graph, oracle::Pattern::Theta));
    CHECK_FALSE(oracle::contains_pattern(g.graph, oracle::Pattern::Prism));
    CHECK_FALSE(find_k1t(g.graph, 4));
    CHECK(generate(s).graph == g.graph);

    s.n = 12;
    s.density = 100;
    s.t = 1;
    s.attempts = 3;
    Generated none = generate(s);  // every edge is an induced K1,1
    CHECK_FALSE(none.found);
    CHECK(none.attempts == 3);
    CHECK_THROWS_AS(generate(spec("hexagon")), InputError);
}

TEST_CASE("thick strips are valid") {
    SmoothTree claw{4, {{0, 1}, {0, 2}, {0, 3}}};
    StripStructure s = thick_strip(claw, {{2, 0}, {1}, {3, 3}});
    CHECK(validate_strip(s).empty());
    CHECK(rungs(s, 0).rungs.size() == 2);
    CHECK(classify_strip(s).tame);
    StripStructure one = thick_strip(claw, {{0}, {0}, {0}});
    CHECK(validate_strip(one).empty());
    CHECK_FALSE(classify_strip(one).substantial);
}

TEST_CASE("serialization round trips") {
    GeneratorSpec p = spec("pyramid");
    Generated py = generate(p);
    PyramidWitness w = pyramid_from_json(py.witness);
    CHECK(to_json(w) == py.witness);
    GraphDocument d = parse_graph_document(generated_to_json(py).dump());
    CHECK(d.graph == py.graph);
    CHECK(d.witness == py.witness);

    StripStructure s = pyramid_to_strip(py.graph, w);
    StripStructure back = strip_from_json(Json::parse(to_json(s).dump()));
    CHECK(to_json(back) == to_json(s));
    CHECK(validate_strip(back).empty());

    TreeDecomposition td{{{0, 1}, {1, 2}}, {{0, 1}}};
    TreeDecomposition tb = decomposition_from_json(to_json(td));
    CHECK(tb.bags == td.bags);
    CHECK(tb.edges == td.edges);
    CHECK_THROWS_AS(decomposition_from_json(Json::parse(R"({"nodes":[{"id":3,"bag":[0]}],"edges":[]})")), InputError);

    auto ws = parse_weights("[1, \"3/4\", 0]");
    CHECK(ws == std::vector<Rational>{1, Rational(3, 4), 0});
    CHECK(parse_weights("2 1/2\n5") == std::vector<Rational>{2, Rational(1, 2), 5});
    CHECK_THROWS_AS(parse_weights("[-1]"), InputError);
    CHECK_THROWS_AS(wheel_from_json(Json::parse(R"({"hole":[0,1,2]})")), InputError);
}

TEST_CASE("campaigns are deterministic and thread-independent") {
    for (const std::string& name : campaign_names()) {
        CampaignOptions o;
        o.name = name;
        o.trials = 6;
        o.seed = 99;
        o.threads = 1;
        std::string one = run_campaign(o).to_json().dump();
        o.threads = 3;
        CAPTURE(name);
        CHECK(run_campaign(o).to_json().dump() == one);
        CHECK(run_campaign(o).passed());
    }
    CHECK_THROWS_AS(run_campaign(CampaignOptions{"nope", 1, 1, 1, ""}), InputError);
}

TEST_CASE("failure artifacts replay") {
    // A wheel instance whose host graph also holds a theta: the verifier rejects it.
    Graph g = oracle::wheel_graph(12, {0, 4, 8}, {{2, 13}, {13, 6}}, 1);
    std::vector<Vertex> hole(12);
    std::iota(hole.begin(), hole.end(), 0);
    Json inst{{"graph", graph_to_json(g)}, {"witness", to_json(Wheel{hole, 12})}};
    TrialResult direct = run_instance("wheel-sep", inst);
    CHECK(direct.status == std::string(kInvalid));
    Json artifact{{"campaign", "wheel-sep"}, {"trial", 4}, {"seed", 17}, {"instance", inst}};
    TrialResult again = replay_artifact(artifact);
    CHECK(again.status == direct.status);
    CHECK(again.detail == direct.detail);
    CHECK(again.trial == 4);

    // Every trial of a campaign equals its instance re-run on its own.
    CampaignOptions o{"decomp-pipeline", 5, 3, 2, ""};
    CampaignReport r = run_campaign(o);
    for (const TrialResult& t : r.results) {
        TrialResult single = run_instance(o.name, make_instance(o.name, t.trial, t.seed));
        CHECK(single.status == t.status);
        CHECK(single.metrics == t.metrics);
    }
}
