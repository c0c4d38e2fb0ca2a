#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tindep/align.hpp"
#include "tindep/connect.hpp"
#include "tindep/graph.hpp"
#include "tindep/patterns.hpp"
#include "tindep/separators.hpp"

namespace tindep {

struct Trisection {
    PathWitness D1;
    VertexSet Y;
    VertexSet D2;
};

/// nullopt when (D1, Y, D2) is an s-trisection.
std::optional<std::string> check_trisection(const Graph& g, const Trisection& T, int s);

struct AmiabilityOptions {
    ConnectOptions connect;
    int min_h = 0;  // smallest connectifier size tried; 0 means x
};

struct AmiabilityResult {
    std::vector<Vertex> X;  // in the order given by (D1, X)
    VertexSet H;
    bool connectifier = false;  // otherwise (H, X) is a consistent alignment
    std::optional<ShapeH> shape;
    AlignKind d1_kind = AlignKind::Mixed;
    AlignKind h_kind = AlignKind::Mixed;  // alignment case only
};

/// Extraction on D1, connectifier search in D2, then the Erdős–Szekeres step.
/// ResourceError when the search budget runs out, ContractError on failed hypotheses.
AmiabilityResult amiability_search(const Graph& g, const Trisection& T, int x, int t, const AmiabilityOptions& opts = {});

struct AmicabilityInstance {
    Trisection T;
    VertexSet X;  // seven vertices of Y, ordered by (D1, X) internally
    VertexSet H;
    int t = 3;
};

struct AmicableOptions {
    bool check_class = false;  // run theta/prism detection inside the separation verifier
    DetectOptions detect{.engine = Engine::Auto};
};

struct AmicableCheck {
    std::string name;
    bool ok = false;
};

struct AmicableResult {
    std::string case_tag;
    VertexSet Z;
    std::variant<PyramidWitness, Wheel> witness;
    std::vector<Vertex> X;  // x_1..x_7
    std::vector<Vertex> D1;  // d_1..d_k in canonical orientation
    int i = 0, j = 0, i2 = 0, j2 = 0;  // 1-based i, j, i', j'
    std::vector<AmicableCheck> checks;
    SeparatorReport report;
    bool verified = false;
};

/// Builds the pyramid or wheel of the matching case, its core Z, and checks containment,
/// |Z| <= max{2t, 7} and the separation of d_i from d_j. ContractError when no case applies.
AmicableResult amicable_Z(const Graph& g, const AmicabilityInstance& inst, const AmicableOptions& opts = {});

/// Case tags in dispatch order.
const std::vector<std::string>& amicable_case_tags();

struct AmicableGenSpec {
    std::string case_tag;
    int leg = 1;         // extra length of the H-side legs, >= 0
    int gap = 2;         // free D1 vertices between consecutive windows, >= 1
    int decorate = 0;    // pendant vertices hung off D2 \ H
    std::uint64_t seed = 1;
};

struct GeneratedInstance {
    Graph graph;
    AmicabilityInstance instance;
};

/// Instance built so that the named case fires. InputError on an unknown tag.
GeneratedInstance generate_amicable(const AmicableGenSpec& spec);

/// Smallest t with G free of K_{1,t}: max over v of α(N(v)), plus one.
int k1t_threshold(const Graph& g);

}  // namespace tindep
