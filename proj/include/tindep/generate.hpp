#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tindep/graph.hpp"
#include "tindep/io.hpp"
#include "tindep/strip.hpp"

namespace tindep {

/// Families: wheel, pyramid, theta, prism, caterpillar-connectifier,
/// line-star-connectifier, trisection-instance, random-Ct.
struct GeneratorSpec {
    std::string family;
    std::uint64_t seed = 1;

    int hole = 12;         // wheel
    int hub_degree = 3;    // wheel
    bool special = false;  // wheel
    int long_sector = 2;   // special wheel: minimum length of the two long sectors

    std::array<int, 3> lengths{3, 3, 3};  // pyramid, theta, prism path lengths

    int branches = 3;  // caterpillar branch vertices, or legs of the star
    int leg = 1;       // connectifier legs have length 1..leg+1; trisection leg extension
    int gap = 2;       // trisection-instance
    std::string case_tag = "caterpillar-pyramid";

    int n = 10;            // random-Ct
    int t = 4;             // random-Ct
    int density = 30;      // random-Ct edge probability in percent
    int attempts = 2000;   // random-Ct rejection budget

    int pendants = 0;  // pendant trees (wheel, pyramid, theta, prism) or pendant vertices (trisection)
    int max_n = 0;     // cap on the vertex count when adding pendant trees, 0 = none
};

struct Generated {
    Graph graph;
    Json witness;        // null when the family has none
    bool found = true;   // false when rejection sampling gave up
    int attempts = 0;
};

/// Deterministic in (spec, seed). InputError on infeasible parameters.
Generated generate(const GeneratorSpec& spec);
const std::vector<std::string>& generator_families();

/// Graph document {"n", "edges", "witness"} readable by parse_graph_json.
Json generated_to_json(const Generated& g);

/// Apex 0 plus, per tree edge, parallel rungs of the given lengths (0 = one vertex).
/// Rung ends at a vertex of degree >= 3 are complete across edges; the apex sees leaf ends.
StripStructure thick_strip(const SmoothTree& tree, const std::vector<std::vector<int>>& rung_lengths);

}  // namespace tindep
