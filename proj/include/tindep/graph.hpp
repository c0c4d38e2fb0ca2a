#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tindep {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

VertexSet make_set(std::vector<Vertex> vertices);
bool set_contains(const VertexSet& set, Vertex v);
bool is_subset(const VertexSet& small, const VertexSet& big);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool disjoint(const VertexSet& a, const VertexSet& b);

/// Immutable simple undirected graph on vertices 0..n-1 with sorted adjacency.
class Graph {
public:
    Graph() = default;

    /// Throws InputError on loops, duplicate edges or ids outside [0, n).
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int size() const { return n_; }
    std::size_t edge_count() const { return m_; }
    const VertexSet& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(Vertex u, Vertex v) const;
    std::vector<Edge> edges() const;
    VertexSet vertices() const;

    bool valid_vertex(Vertex v) const { return v >= 0 && v < n_; }
    void check_vertex(Vertex v) const;
    void check_set(std::span<const Vertex> set) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::uint8_t> matrix_;  // dense adjacency when n is small enough
};

/// N(X): vertices outside X with a neighbor in X.
VertexSet open_neighborhood(const Graph& g, const VertexSet& x);
/// N[X] = N(X) ∪ X.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& x);
/// N_Y(v) = N(v) ∩ Y.
VertexSet neighbors_in(const Graph& g, Vertex v, const VertexSet& y);

/// Components of G minus `removed`, each sorted, ordered by smallest vertex.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed);
/// Components of G[within].
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within);
bool is_connected(const Graph& g, const VertexSet& x);

struct Separation {
    VertexSet left;
    VertexSet middle;
    VertexSet right;
};

bool is_separation(const Graph& g, const Separation& s);

/// A separation (L, M, R) with A ⊆ L and B ⊆ R, if one exists.
std::optional<Separation> find_separation(const Graph& g, const VertexSet& middle, const VertexSet& a,
                                          const VertexSet& b);
bool separates(const Graph& g, const VertexSet& middle, const VertexSet& a, const VertexSet& b);

bool is_stable(const Graph& g, std::span<const Vertex> x);
bool is_clique(const Graph& g, std::span<const Vertex> x);

struct StableSet {
    int size = 0;
    VertexSet witness;  // lexicographically least maximum stable set
};

inline constexpr int kDefaultStableCap = 30;

/// Exact α(G[X]) with witness. Throws ResourceError when |X| > cap.
StableSet max_stable_bruteforce(const Graph& g, const VertexSet& x, int cap = kDefaultStableCap);
int stable_number(const Graph& g, const VertexSet& x, int cap = kDefaultStableCap);

/// Induced path p_1 - ... - p_k (k >= 1).
struct PathWitness {
    std::vector<Vertex> vertices;

    std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }
    VertexSet vertex_set() const { return make_set(vertices); }
    VertexSet interior() const;
    PathWitness reversed() const;
};

bool is_induced_path(const Graph& g, std::span<const Vertex> path);
/// Cyclic sequence that induces a cycle of length >= 4.
bool is_hole(const Graph& g, std::span<const Vertex> cycle);

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;  // local id -> parent id
    std::vector<Vertex> to_local;   // parent id -> local id or -1
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Vertex sets of the blocks (maximal 2-connected subgraphs, bridges, isolated vertices).
std::vector<VertexSet> blocks(const Graph& g);
/// Vertices of the 2-core: repeatedly strip vertices of degree at most one.
VertexSet two_core(const Graph& g);

/// Shortest path from `source` to any vertex of `targets` whose vertices after the
/// first all lie in `allowed` (targets must be allowed too). Ties go to smaller ids.
std::optional<std::vector<Vertex>> shortest_path(const Graph& g, Vertex source, const VertexSet& targets,
                                                 const VertexSet& allowed);

}  // namespace tindep
