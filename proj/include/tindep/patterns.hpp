#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tindep/graph.hpp"

namespace tindep {

/// Ends a, b joined by three paths, each listed from a to b.
struct ThetaWitness {
    Vertex a = -1;
    Vertex b = -1;
    std::array<PathWitness, 3> paths;

    VertexSet vertex_set() const;
};

/// Triangles {a1,a2,a3} and {b1,b2,b3}; paths[i] runs from a[i] to b[i].
/// A zero-length path has a[i] == b[i].
struct PrismWitness {
    std::array<Vertex, 3> a{};
    std::array<Vertex, 3> b{};
    std::array<PathWitness, 3> paths;

    VertexSet vertex_set() const;
    bool has_zero_length_path() const;
};

/// Apex joined to the base triangle; paths[i] runs from the apex to base[i].
struct PyramidWitness {
    Vertex apex = -1;
    std::array<Vertex, 3> base{};
    std::array<PathWitness, 3> paths;

    VertexSet vertex_set() const;
};

struct K1tWitness {
    Vertex center = -1;
    VertexSet leaves;

    VertexSet vertex_set() const;
};

/// Hole in cyclic order plus a hub.
struct Wheel {
    std::vector<Vertex> hole;
    Vertex hub = -1;

    VertexSet vertex_set() const;
};

// Independent checkers. Each returns a description of the first failed
// condition, or nullopt when the witness is an induced copy of its pattern.
std::optional<std::string> check_theta(const Graph& g, const ThetaWitness& w);
std::optional<std::string> check_prism(const Graph& g, const PrismWitness& w, bool classical = false);
std::optional<std::string> check_pyramid(const Graph& g, const PyramidWitness& w);
std::optional<std::string> check_k1t(const Graph& g, const K1tWitness& w, int t);
std::optional<std::string> check_wheel(const Graph& g, const Wheel& w);

/// Sectors in hole order, each a path between consecutive hub neighbors.
std::vector<PathWitness> wheel_sectors(const Graph& g, const Wheel& w);
/// Exactly three sectors, one of length one and two of length at least two.
bool is_special(const Graph& g, const Wheel& w);

/// Cyclic order of a hole given as a vertex set: starts at the smallest
/// vertex and continues toward its smaller hole neighbor.
std::vector<Vertex> canonical_cycle(const Graph& g, const VertexSet& hole);

}  // namespace tindep
