#pragma once

#include <string>
#include <vector>

#include "tindep/graph.hpp"
#include "tindep/patterns.hpp"

namespace tindep {

/// Tree on 0..n-1. Smooth: at least three vertices and no vertex of degree two.
struct SmoothTree {
    int n = 0;
    std::vector<Edge> edges;

    std::vector<int> degrees() const;
    bool is_leaf(int v) const;
    bool incident(int e, int v) const;
};

/// A (T,a)-strip-structure in G. η is stored densely: eta_ev[e][v] for every edge e and tree vertex v.
struct StripStructure {
    Graph graph;
    Vertex apex = -1;
    SmoothTree tree;
    std::vector<VertexSet> eta_v;
    std::vector<VertexSet> eta_e;
    std::vector<std::vector<VertexSet>> eta_ev;

    /// η(T): union of η(v) and η(e).
    VertexSet eta_T() const;
    /// η⁺(T) = η(T) ∪ {a}.
    VertexSet eta_plus() const;
    /// η°(e) = η(e) minus both end sets.
    VertexSet interior(int e) const;
    /// B(v): union of η(e,v) over edges e at v.
    VertexSet boundary(int v) const;
};

struct StripViolation {
    std::string axiom;  // "S1".."S8", "tree" or "domain"
    std::string detail;
};

/// Independent check of every axiom; empty means valid.
std::vector<StripViolation> validate_strip(const StripStructure& s);

struct RungReport {
    std::vector<PathWitness> rungs;  // each listed from the η(e,u) end, u the first end of e
    VertexSet tilde;                 // vertices of η(e) in no rung
    bool has_long = false;
};

inline constexpr std::size_t kDefaultRungCap = 100000;

/// All η(e)-rungs. ContractError on an invalid strip, ResourceError past the cap.
RungReport rungs(const StripStructure& s, int e, std::size_t cap = kDefaultRungCap);

struct StripClass {
    bool tame = false;
    bool substantial = false;
    bool rich = false;
};

StripClass classify_strip(const StripStructure& s);

/// a is trapped in G[H]: N[N[a]] ⊆ H and every neighbor of a has degree two in G[H].
bool is_trapped(const Graph& g, Vertex a, const VertexSet& H);

/// Pointwise containment. InputError unless graph, apex and tree agree.
bool strip_leq(const StripStructure& lo, const StripStructure& hi);

/// The K_{1,3} strip of a pyramid: t0 = 0, e_i = (0, i); η(e_i) = P_i \ a, η(e_i,t0) = {b_i},
/// η(e_i,t_i) = N_{P_i}(a). With strict set, ContractError unless the apex is trapped in Σ.
StripStructure pyramid_to_strip(const Graph& g, const PyramidWitness& p, bool strict = true);

struct TrapReduction {
    InducedSubgraph sub;     // G' = G \ (N(Z') \ Σ) with Z' = N_Σ[a]
    PyramidWitness pyramid;  // Σ in local ids of G'
};

TrapReduction trap_reduction(const Graph& g, const PyramidWitness& p);

/// Apex plus the line graph of T with edge e subdivided into subdivisions[e] + 1 edges.
/// The apex sees the leaf-end of every leaf edge.
StripStructure strip_from_subdivided_tree(const SmoothTree& tree, const std::vector<int>& subdivisions);

}  // namespace tindep
