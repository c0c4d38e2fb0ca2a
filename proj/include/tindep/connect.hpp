#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tindep/graph.hpp"

namespace tindep {

enum class ShapeKind { Singleton, Caterpillar, LineCaterpillar, SubdividedStar, LineSubdividedStar };

std::string to_string(ShapeKind k);

struct ShapeH {
    ShapeKind kind = ShapeKind::Singleton;
    VertexSet H;
    /// Spine in order for the caterpillar kinds (first id < last id), {root} for a
    /// subdivided star, the sorted root clique for its line graph, {v} for a singleton.
    std::vector<Vertex> P;
    std::vector<VertexSet> legs;  // components of H \ P(H)
    VertexSet Z;                  // simplicial vertices of G[H]
    /// Line kinds: preimage tree and, per vertex of H (in H order), its edge.
    int preimage_n = 0;
    std::vector<Edge> preimage_edges;

    bool concentrated() const {
        return kind == ShapeKind::Singleton || kind == ShapeKind::SubdividedStar ||
               kind == ShapeKind::LineSubdividedStar;
    }
    bool is_path() const { return kind == ShapeKind::Caterpillar && legs.empty(); }
    int spine_index(Vertex v) const;  // -1 when v is not in P(H)
};

/// Shape of G[H] among the five kinds, or nullopt. A path is a caterpillar with P(H) = H;
/// a tree with one branch vertex is reported as a subdivided star.
std::optional<ShapeH> classify_shape(const Graph& g, const VertexSet& H);

/// Kind of a tree given as a standalone graph; used for preimages and by the tests.
enum class TreeKind { Path, Star, Caterpillar, Other };
struct TreeShape {
    TreeKind kind = TreeKind::Other;
    std::vector<Vertex> spine;  // path order (Path, Caterpillar); {root} for Star
};
/// `rank(from, to)` orders the choices when a caterpillar spine is extended past its last
/// branch vertex; the default prefers the smaller vertex id.
TreeShape tree_shape(const Graph& tree, const std::function<int(Vertex, Vertex)>& rank = {});

/// nullopt when (shape, X) is a connectifier.
std::optional<std::string> check_connectifier(const Graph& g, const ShapeH& shape, const VertexSet& X);

/// The unique neighbor of x in H; InputError when there is not exactly one.
Vertex attachment(const Graph& g, const ShapeH& shape, Vertex x);

/// Order on X given by (H, X). ContractError when the shape is concentrated.
std::vector<Vertex> connectifier_order(const Graph& g, const ShapeH& shape, const VertexSet& X);

struct ConnectOptions {
    std::int64_t budget = 2'000'000;
    bool allow_singleton = true;
};

struct ConnectFound {
    VertexSet S_prime;
    ShapeH shape;
    bool path_case = false;  // H is a path seen by every vertex of S' (not necessarily a connectifier)
};

struct ConnectResult {
    std::optional<ConnectFound> found;
    bool exhausted = false;
};

/// Bounded search for an h-subset S' of S and H ⊆ G \ S forming a connectifier.
/// Tries a singleton, then shortest paths, then unions of shortest paths between chosen
/// attachments; the best candidate by (kind, |H|) wins. Every output is re-validated.
ConnectResult find_connectifier(const Graph& g, const VertexSet& S, int h, const ConnectOptions& opts = {});

}  // namespace tindep
