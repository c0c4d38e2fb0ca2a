#include "tindep/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

#include "tindep/error.hpp"

namespace tindep {

namespace {

constexpr int kDenseLimit = 4096;

}  // namespace

VertexSet make_set(std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

bool set_contains(const VertexSet& set, Vertex v) { return std::binary_search(set.begin(), set.end(), v); }

bool is_subset(const VertexSet& small, const VertexSet& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool disjoint(const VertexSet& a, const VertexSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return false;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return true;
}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0) throw InputError("negative vertex count");
    for (auto [u, v] : edges) {
        if (!valid_vertex(u) || !valid_vertex(v))
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& row : adj_) {
        std::sort(row.begin(), row.end());
        if (std::adjacent_find(row.begin(), row.end()) != row.end()) throw InputError("duplicate edge");
        m_ += row.size();
    }
    m_ /= 2;
    if (n_ <= kDenseLimit) {
        matrix_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v : adj_[static_cast<std::size_t>(u)])
                matrix_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)] = 1;
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (!matrix_.empty())
        return matrix_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)] != 0;
    return set_contains(neighbors(u), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet Graph::vertices() const {
    VertexSet out(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) out[static_cast<std::size_t>(v)] = v;
    return out;
}

void Graph::check_vertex(Vertex v) const {
    if (!valid_vertex(v)) throw InputError("vertex " + std::to_string(v) + " out of range");
}

void Graph::check_set(std::span<const Vertex> set) const {
    for (Vertex v : set) check_vertex(v);
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& x) {
    g.check_set(x);
    std::vector<char> in_x(static_cast<std::size_t>(g.size()), 0);
    for (Vertex v : x) in_x[static_cast<std::size_t>(v)] = 1;
    std::vector<Vertex> out;
    for (Vertex v : x)
        for (Vertex u : g.neighbors(v))
            if (!in_x[static_cast<std::size_t>(u)]) out.push_back(u);
    return make_set(std::move(out));
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& x) { return set_union(open_neighborhood(g, x), x); }

VertexSet neighbors_in(const Graph& g, Vertex v, const VertexSet& y) { return set_intersection(g.neighbors(v), y); }

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
    g.check_set(removed);
    std::vector<char> blocked(static_cast<std::size_t>(g.size()), 0);
    for (Vertex v : removed) blocked[static_cast<std::size_t>(v)] = 1;
    std::vector<VertexSet> out;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.size(); ++s) {
        if (blocked[static_cast<std::size_t>(s)]) continue;
        VertexSet comp;
        blocked[static_cast<std::size_t>(s)] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex u : g.neighbors(v)) {
                if (!blocked[static_cast<std::size_t>(u)]) {
                    blocked[static_cast<std::size_t>(u)] = 1;
                    stack.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within) {
    return components(g, set_difference(g.vertices(), within));
}

bool is_connected(const Graph& g, const VertexSet& x) {
    if (x.empty()) return false;
    return components_within(g, x).size() == 1;
}

bool is_separation(const Graph& g, const Separation& s) {
    if (s.left.empty() || s.right.empty()) return false;
    if (!disjoint(s.left, s.middle) || !disjoint(s.left, s.right) || !disjoint(s.middle, s.right)) return false;
    if (s.left.size() + s.middle.size() + s.right.size() != static_cast<std::size_t>(g.size())) return false;
    for (Vertex v : s.left)
        for (Vertex u : g.neighbors(v))
            if (set_contains(s.right, u)) return false;
    return true;
}

std::optional<Separation> find_separation(const Graph& g, const VertexSet& middle, const VertexSet& a,
                                          const VertexSet& b) {
    g.check_set(middle);
    g.check_set(a);
    g.check_set(b);
    if (a.empty() || b.empty()) throw InputError("separates: both sides must be nonempty");
    if (!disjoint(a, b) || !disjoint(a, middle) || !disjoint(b, middle))
        throw InputError("separates: sets must be pairwise disjoint");
    Separation sep;
    sep.middle = middle;
    std::vector<Vertex> left;
    std::vector<Vertex> right;
    for (const VertexSet& comp : components(g, middle)) {
        bool meets_a = !disjoint(comp, a);
        bool meets_b = !disjoint(comp, b);
        if (meets_a && meets_b) return std::nullopt;
        auto& side = meets_a ? left : right;
        side.insert(side.end(), comp.begin(), comp.end());
    }
    sep.left = make_set(std::move(left));
    sep.right = make_set(std::move(right));
    return sep;
}

bool separates(const Graph& g, const VertexSet& middle, const VertexSet& a, const VertexSet& b) {
    return find_separation(g, middle, a, b).has_value();
}

bool is_stable(const Graph& g, std::span<const Vertex> x) {
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (g.adjacent(x[i], x[j])) return false;
    return true;
}

bool is_clique(const Graph& g, std::span<const Vertex> x) {
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (x[i] == x[j] || !g.adjacent(x[i], x[j])) return false;
    return true;
}

namespace {

using Mask = std::uint64_t;

struct LocalGraph {
    std::vector<Mask> rows;
};

LocalGraph local_masks(const Graph& g, const VertexSet& x) {
    LocalGraph lg;
    lg.rows.assign(x.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            if (i != j && g.adjacent(x[i], x[j])) lg.rows[i] |= Mask{1} << j;
    return lg;
}

int mis_size(const LocalGraph& lg, Mask mask) {
    if (mask == 0) return 0;
    int best_v = -1;
    int best_deg = -1;
    for (Mask m = mask; m != 0; m &= m - 1) {
        int v = std::countr_zero(m);
        int deg = std::popcount(lg.rows[static_cast<std::size_t>(v)] & mask);
        if (deg > best_deg) {
            best_deg = deg;
            best_v = v;
        }
    }
    if (best_deg == 0) return std::popcount(mask);
    Mask bit = Mask{1} << best_v;
    if (best_deg == 1) {
        // Max degree one: a matching plus isolated vertices.
        int edges = 0;
        for (Mask m = mask; m != 0; m &= m - 1) edges += std::popcount(lg.rows[static_cast<std::size_t>(std::countr_zero(m))] & mask);
        return std::popcount(mask) - edges / 2;
    }
    int without = mis_size(lg, mask & ~bit);
    int with = 1 + mis_size(lg, mask & ~bit & ~lg.rows[static_cast<std::size_t>(best_v)]);
    return std::max(without, with);
}

}  // namespace

StableSet max_stable_bruteforce(const Graph& g, const VertexSet& x, int cap) {
    g.check_set(x);
    if (static_cast<int>(x.size()) > cap || x.size() > 63)
        throw ResourceError("stable set brute force: |X| = " + std::to_string(x.size()) + " exceeds cap " +
                            std::to_string(cap));
    LocalGraph lg = local_masks(g, x);
    Mask all = x.size() == 64 ? ~Mask{0} : (Mask{1} << x.size()) - 1;
    StableSet out;
    out.size = mis_size(lg, all);
    // Greedy lexicographic reconstruction: take the smallest vertex that still allows a maximum set.
    Mask candidates = all;
    int remaining = out.size;
    for (std::size_t i = 0; i < x.size() && remaining > 0; ++i) {
        Mask bit = Mask{1} << i;
        if (!(candidates & bit)) continue;
        Mask later = candidates & ~((bit << 1) - 1);
        Mask after = later & ~lg.rows[i];
        if (1 + mis_size(lg, after) == remaining) {
            out.witness.push_back(x[i]);
            --remaining;
            candidates = after;
        } else {
            candidates &= ~bit;
        }
    }
    return out;
}

int stable_number(const Graph& g, const VertexSet& x, int cap) { return max_stable_bruteforce(g, x, cap).size; }

VertexSet PathWitness::interior() const {
    if (vertices.size() <= 2) return {};
    return make_set(std::vector<Vertex>(vertices.begin() + 1, vertices.end() - 1));
}

PathWitness PathWitness::reversed() const { return PathWitness{std::vector<Vertex>(vertices.rbegin(), vertices.rend())}; }

bool is_induced_path(const Graph& g, std::span<const Vertex> path) {
    if (path.empty()) return false;
    for (Vertex v : path)
        if (!g.valid_vertex(v)) return false;
    for (std::size_t i = 0; i < path.size(); ++i) {
        for (std::size_t j = i + 1; j < path.size(); ++j) {
            if (path[i] == path[j]) return false;
            if (g.adjacent(path[i], path[j]) != (j == i + 1)) return false;
        }
    }
    return true;
}

bool is_hole(const Graph& g, std::span<const Vertex> cycle) {
    std::size_t k = cycle.size();
    if (k < 4) return false;
    for (Vertex v : cycle)
        if (!g.valid_vertex(v)) return false;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            if (cycle[i] == cycle[j]) return false;
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
        }
    }
    return true;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    g.check_set(keep);
    InducedSubgraph out;
    out.to_parent = keep;
    out.to_local.assign(static_cast<std::size_t>(g.size()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) out.to_local[static_cast<std::size_t>(keep[i])] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (Vertex v : keep)
        for (Vertex u : g.neighbors(v))
            if (v < u && out.to_local[static_cast<std::size_t>(u)] >= 0)
                edges.emplace_back(out.to_local[static_cast<std::size_t>(v)], out.to_local[static_cast<std::size_t>(u)]);
    out.graph = Graph(static_cast<int>(keep.size()), edges);
    return out;
}

std::optional<std::vector<Vertex>> shortest_path(const Graph& g, Vertex source, const VertexSet& targets,
                                                 const VertexSet& allowed) {
    g.check_vertex(source);
    if (set_contains(targets, source)) return std::vector<Vertex>{source};
    const auto n = static_cast<std::size_t>(g.size());
    std::vector<char> ok(n, 0);
    for (Vertex v : allowed) ok[static_cast<std::size_t>(v)] = 1;
    // Distances to the target set, then a greedy walk from the source picking the smallest id.
    std::vector<int> dist(n, -1);
    std::deque<Vertex> queue;
    for (Vertex t : targets) {
        if (!ok[static_cast<std::size_t>(t)]) continue;
        dist[static_cast<std::size_t>(t)] = 0;
        queue.push_back(t);
    }
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex u : g.neighbors(v)) {
            if (!ok[static_cast<std::size_t>(u)] || dist[static_cast<std::size_t>(u)] >= 0) continue;
            dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
            queue.push_back(u);
        }
    }
    int best = -1;
    for (Vertex u : g.neighbors(source)) {
        int d = dist[static_cast<std::size_t>(u)];
        if (d >= 0 && (best < 0 || d < best)) best = d;
    }
    if (best < 0) return std::nullopt;
    std::vector<Vertex> path{source};
    Vertex cur = source;
    int want = best;
    while (true) {
        Vertex next = -1;
        for (Vertex u : g.neighbors(cur)) {
            if (dist[static_cast<std::size_t>(u)] == want) {
                next = u;
                break;
            }
        }
        path.push_back(next);
        if (want == 0) break;
        cur = next;
        --want;
    }
    return path;
}

std::vector<VertexSet> blocks(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.size());
    std::vector<int> disc(n, -1);
    std::vector<int> low(n, 0);
    std::vector<Edge> edge_stack;
    std::vector<VertexSet> out;
    int timer = 0;

    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;
    };
    std::vector<Frame> stack;
    for (Vertex root = 0; root < g.size(); ++root) {
        if (disc[static_cast<std::size_t>(root)] >= 0) continue;
        if (g.degree(root) == 0) {
            out.push_back({root});
            disc[static_cast<std::size_t>(root)] = timer++;
            continue;
        }
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        stack.push_back({root, -1, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                Vertex u = nb[f.next++];
                auto ui = static_cast<std::size_t>(u);
                auto vi = static_cast<std::size_t>(f.v);
                if (disc[ui] < 0) {
                    edge_stack.emplace_back(f.v, u);
                    disc[ui] = low[ui] = timer++;
                    stack.push_back({u, f.v, 0});
                } else if (u != f.parent && disc[ui] < disc[vi]) {
                    edge_stack.emplace_back(f.v, u);
                    low[vi] = std::min(low[vi], disc[ui]);
                }
                continue;
            }
            Frame done = f;
            stack.pop_back();
            if (stack.empty()) break;
            auto vi = static_cast<std::size_t>(done.v);
            auto pi = static_cast<std::size_t>(done.parent);
            low[pi] = std::min(low[pi], low[vi]);
            if (low[vi] >= disc[pi]) {
                std::vector<Vertex> block;
                while (!edge_stack.empty()) {
                    Edge e = edge_stack.back();
                    edge_stack.pop_back();
                    block.push_back(e.first);
                    block.push_back(e.second);
                    if (e == Edge{done.parent, done.v}) break;
                }
                out.push_back(make_set(std::move(block)));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet two_core(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.size());
    std::vector<int> deg(n);
    std::vector<char> gone(n, 0);
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < g.size(); ++v) {
        deg[static_cast<std::size_t>(v)] = g.degree(v);
        if (g.degree(v) <= 1) queue.push_back(v);
    }
    while (!queue.empty()) {
        Vertex v = queue.back();
        queue.pop_back();
        if (gone[static_cast<std::size_t>(v)]) continue;
        gone[static_cast<std::size_t>(v)] = 1;
        for (Vertex u : g.neighbors(v)) {
            auto ui = static_cast<std::size_t>(u);
            if (!gone[ui] && --deg[ui] <= 1) queue.push_back(u);
        }
    }
    VertexSet out;
    for (Vertex v = 0; v < g.size(); ++v)
        if (!gone[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

}  // namespace tindep
