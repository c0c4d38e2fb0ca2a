#include "tindep/patterns.hpp"

#include <algorithm>
#include <set>

namespace tindep {

namespace {

using EdgeSet = std::set<Edge>;

void add_path_edges(EdgeSet& edges, const PathWitness& p) {
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
        Vertex u = p.vertices[i];
        Vertex v = p.vertices[i + 1];
        edges.emplace(std::min(u, v), std::max(u, v));
    }
}

void add_triangle(EdgeSet& edges, const std::array<Vertex, 3>& t) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) edges.emplace(std::min(t[i], t[j]), std::max(t[i], t[j]));
}

// Compares the edges of G[vertices] with the expected edge set.
std::optional<std::string> induced_edges_match(const Graph& g, const VertexSet& vertices, const EdgeSet& expected) {
    for (auto [u, v] : expected) {
        if (!g.adjacent(u, v))
            return "missing edge " + std::to_string(u) + "-" + std::to_string(v);
    }
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j]) && !expected.count({vertices[i], vertices[j]}))
                return "extra edge " + std::to_string(vertices[i]) + "-" + std::to_string(vertices[j]);
    return std::nullopt;
}

bool all_valid(const Graph& g, const std::vector<Vertex>& vs) {
    return std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return g.valid_vertex(v); });
}

std::size_t total_size(const std::array<PathWitness, 3>& paths) {
    std::size_t n = 0;
    for (const auto& p : paths) n += p.vertices.size();
    return n;
}

}  // namespace

VertexSet ThetaWitness::vertex_set() const {
    std::vector<Vertex> all;
    for (const auto& p : paths) all.insert(all.end(), p.vertices.begin(), p.vertices.end());
    return make_set(std::move(all));
}

VertexSet PrismWitness::vertex_set() const {
    std::vector<Vertex> all;
    for (const auto& p : paths) all.insert(all.end(), p.vertices.begin(), p.vertices.end());
    return make_set(std::move(all));
}

bool PrismWitness::has_zero_length_path() const {
    return std::any_of(paths.begin(), paths.end(), [](const PathWitness& p) { return p.vertices.size() == 1; });
}

VertexSet PyramidWitness::vertex_set() const {
    std::vector<Vertex> all;
    for (const auto& p : paths) all.insert(all.end(), p.vertices.begin(), p.vertices.end());
    return make_set(std::move(all));
}

VertexSet K1tWitness::vertex_set() const { return set_union(leaves, {center}); }

VertexSet Wheel::vertex_set() const { return set_union(make_set(hole), {hub}); }

std::optional<std::string> check_theta(const Graph& g, const ThetaWitness& w) {
    EdgeSet expected;
    for (const auto& p : w.paths) {
        if (!all_valid(g, p.vertices)) return "vertex out of range";
        if (p.vertices.size() < 3) return "path of length less than two";
        if (p.front() != w.a || p.back() != w.b) return "path does not run from a to b";
        add_path_edges(expected, p);
    }
    VertexSet vs = w.vertex_set();
    if (vs.size() != total_size(w.paths) - 4) return "paths are not internally disjoint";
    return induced_edges_match(g, vs, expected);
}

std::optional<std::string> check_prism(const Graph& g, const PrismWitness& w, bool classical) {
    EdgeSet expected;
    int zero = 0;
    for (int i = 0; i < 3; ++i) {
        const auto& p = w.paths[static_cast<std::size_t>(i)];
        if (p.vertices.empty() || !all_valid(g, p.vertices)) return "bad path";
        if (p.front() != w.a[static_cast<std::size_t>(i)] || p.back() != w.b[static_cast<std::size_t>(i)])
            return "path does not join its triangle vertices";
        if (p.vertices.size() == 1) ++zero;
        add_path_edges(expected, p);
    }
    if (zero > 1) return "more than one zero-length path";
    if (zero == 1) {
        if (classical) return "zero-length path in classical mode";
        for (const auto& p : w.paths)
            if (p.vertices.size() == 2) return "zero-length path beside a path of length one";
    }
    if (w.vertex_set().size() != total_size(w.paths)) return "paths are not disjoint";
    add_triangle(expected, w.a);
    add_triangle(expected, w.b);
    return induced_edges_match(g, w.vertex_set(), expected);
}

std::optional<std::string> check_pyramid(const Graph& g, const PyramidWitness& w) {
    EdgeSet expected;
    int short_paths = 0;
    for (int i = 0; i < 3; ++i) {
        const auto& p = w.paths[static_cast<std::size_t>(i)];
        if (!all_valid(g, p.vertices)) return "vertex out of range";
        if (p.vertices.size() < 2) return "path of length zero";
        if (p.front() != w.apex || p.back() != w.base[static_cast<std::size_t>(i)])
            return "path does not run from the apex to the base";
        if (p.vertices.size() == 2) ++short_paths;
        add_path_edges(expected, p);
    }
    if (short_paths > 1) return "more than one path of length one";
    if (w.vertex_set().size() != total_size(w.paths) - 2) return "paths overlap away from the apex";
    add_triangle(expected, w.base);
    return induced_edges_match(g, w.vertex_set(), expected);
}

std::optional<std::string> check_k1t(const Graph& g, const K1tWitness& w, int t) {
    if (!g.valid_vertex(w.center) || !all_valid(g, w.leaves)) return "vertex out of range";
    if (static_cast<int>(make_set(w.leaves).size()) != t || static_cast<int>(w.leaves.size()) != t)
        return "wrong number of leaves";
    for (Vertex v : w.leaves)
        if (!g.adjacent(w.center, v)) return "leaf not adjacent to the center";
    if (!is_stable(g, w.leaves)) return "leaves are not stable";
    return std::nullopt;
}

std::optional<std::string> check_wheel(const Graph& g, const Wheel& w) {
    if (!g.valid_vertex(w.hub) || !all_valid(g, w.hole)) return "vertex out of range";
    if (!is_hole(g, w.hole)) return "not a hole";
    if (std::find(w.hole.begin(), w.hole.end(), w.hub) != w.hole.end()) return "hub lies on the hole";
    int count = 0;
    for (Vertex v : w.hole)
        if (g.adjacent(v, w.hub)) ++count;
    if (count < 3) return "hub has fewer than three hole neighbors";
    return std::nullopt;
}

std::vector<PathWitness> wheel_sectors(const Graph& g, const Wheel& w) {
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < w.hole.size(); ++i)
        if (g.adjacent(w.hole[i], w.hub)) pos.push_back(i);
    std::vector<PathWitness> out;
    const std::size_t len = w.hole.size();
    for (std::size_t k = 0; k < pos.size(); ++k) {
        std::size_t from = pos[k];
        std::size_t to = pos[(k + 1) % pos.size()];
        PathWitness p;
        for (std::size_t i = from;; i = (i + 1) % len) {
            p.vertices.push_back(w.hole[i]);
            if (i == to && p.vertices.size() > 1) break;
        }
        out.push_back(std::move(p));
    }
    return out;
}

bool is_special(const Graph& g, const Wheel& w) {
    auto sectors = wheel_sectors(g, w);
    if (sectors.size() != 3) return false;
    int ones = 0;
    int longs = 0;
    for (const auto& s : sectors) {
        if (s.length() == 1) ++ones;
        if (s.length() >= 2) ++longs;
    }
    return ones == 1 && longs == 2;
}

std::vector<Vertex> canonical_cycle(const Graph& g, const VertexSet& hole) {
    std::vector<Vertex> out;
    if (hole.empty()) return out;
    Vertex prev = -1;
    Vertex cur = hole.front();
    auto nbrs = neighbors_in(g, cur, hole);
    do {
        out.push_back(cur);
        nbrs = neighbors_in(g, cur, hole);
        Vertex next = -1;
        for (Vertex u : nbrs) {
            if (u != prev) {
                next = u;
                break;
            }
        }
        prev = cur;
        cur = next;
    } while (cur != -1 && cur != hole.front() && out.size() <= hole.size());
    return out;
}

}  // namespace tindep
