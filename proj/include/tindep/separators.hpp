#pragma once

#include <utility>
#include <vector>

#include "tindep/detect.hpp"
#include "tindep/graph.hpp"
#include "tindep/patterns.hpp"

namespace tindep {

struct SeparatorReport {
    VertexSet Z;
    VertexSet NZ;
    std::vector<std::pair<Vertex, Vertex>> separated_pairs;
    std::vector<std::pair<Vertex, Vertex>> violations;
    std::vector<int> component_map;  // component of G \ N[Z] per vertex, -1 inside N[Z]
    bool hypotheses_assumed = false;  // class membership not certified within the caps
    bool vacuous = false;             // no pair to test

    bool ok() const { return violations.empty(); }
};

/// Non-special: N_H(c) plus c. Special with length-one sector ab: {a,b,c} ∪ N_H[d].
/// Throws InputError for an invalid wheel.
VertexSet wheel_Z(const Graph& g, const Wheel& w);
/// N_Σ[apex] ∪ base. Throws InputError for an invalid pyramid.
VertexSet pyramid_Z(const Graph& g, const PyramidWitness& p);

struct SeparationOptions {
    bool check_class = true;  // run theta and prism detection on G
    DetectOptions detect{.engine = Engine::Auto};
};

/// Checks every pair of sector-interior vertices outside N[Z(W)].
/// ContractError when a hypothesis fails: short hole (non-special), short long sector
/// (special), or a theta/prism in G.
SeparatorReport verify_wheel_separation(const Graph& g, const Wheel& w, const SeparationOptions& opts = {});
/// Checks every pair from distinct paths of Σ outside N[Z(Σ)].
SeparatorReport verify_pyramid_separation(const Graph& g, const PyramidWitness& p, const SeparationOptions& opts = {});

/// Report for an arbitrary core Z and candidate pairs; shared by the verifiers above.
SeparatorReport check_pairs(const Graph& g, const VertexSet& Z, const std::vector<std::pair<Vertex, Vertex>>& pairs);

/// Throws ContractError when G contains a theta or a prism; returns false when undecided.
bool certify_theta_prism_free(const Graph& g, const DetectOptions& opts);

}  // namespace tindep
