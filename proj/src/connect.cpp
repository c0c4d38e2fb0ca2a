#include "tindep/connect.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "tindep/error.hpp"

namespace tindep {

std::string to_string(ShapeKind k) {
    switch (k) {
        case ShapeKind::Singleton: return "singleton";
        case ShapeKind::Caterpillar: return "caterpillar";
        case ShapeKind::LineCaterpillar: return "line-of-caterpillar";
        case ShapeKind::SubdividedStar: return "subdivided-star";
        case ShapeKind::LineSubdividedStar: return "line-of-subdivided-star";
    }
    return "singleton";
}

int ShapeH::spine_index(Vertex v) const {
    auto it = std::find(P.begin(), P.end(), v);
    return it == P.end() ? -1 : static_cast<int>(it - P.begin());
}

namespace {

/// BFS distances and lex-least parents inside a tree.
std::vector<int> tree_parents(const Graph& t, Vertex root, std::vector<int>& dist) {
    std::vector<int> parent(static_cast<std::size_t>(t.size()), -1);
    dist.assign(static_cast<std::size_t>(t.size()), -1);
    std::vector<Vertex> queue{root};
    dist[root] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (Vertex u : t.neighbors(queue[i]))
            if (dist[u] < 0) {
                dist[u] = dist[queue[i]] + 1;
                parent[u] = queue[i];
                queue.push_back(u);
            }
    return parent;
}

std::vector<Vertex> tree_path(const Graph& t, Vertex a, Vertex b) {
    std::vector<int> dist;
    auto parent = tree_parents(t, a, dist);
    std::vector<Vertex> out;
    for (Vertex v = b; v != -1; v = parent[v]) out.push_back(v);
    std::reverse(out.begin(), out.end());
    return out;
}

/// Walks from `from` away from `prev` through vertices of degree 2 until a leaf.
std::vector<Vertex> extend(const Graph& t, Vertex prev, Vertex from) {
    std::vector<Vertex> out;
    Vertex cur = from;
    for (;;) {
        Vertex next = -1;
        for (Vertex u : t.neighbors(cur))
            if (u != prev) {
                next = u;
                break;
            }
        if (next == -1) break;
        out.push_back(next);
        prev = cur;
        cur = next;
    }
    return out;
}

bool is_tree(const Graph& t) {
    return t.size() > 0 && t.edge_count() + 1 == static_cast<std::size_t>(t.size()) && is_connected(t, t.vertices());
}

}  // namespace

TreeShape tree_shape(const Graph& t, const std::function<int(Vertex, Vertex)>& rank) {
    TreeShape out;
    if (!is_tree(t)) return out;
    std::vector<Vertex> branch;
    for (Vertex v = 0; v < t.size(); ++v)
        if (t.degree(v) >= 3) branch.push_back(v);
    if (branch.empty()) {
        Vertex end = 0;
        for (Vertex v = 0; v < t.size(); ++v)
            if (t.degree(v) <= 1) {
                end = v;
                break;
            }
        out.kind = TreeKind::Path;
        out.spine = {end};
        auto rest = extend(t, -1, end);
        out.spine.insert(out.spine.end(), rest.begin(), rest.end());
        return out;
    }
    if (branch.size() == 1) {
        out.kind = TreeKind::Star;
        out.spine = {branch.front()};
        return out;
    }
    for (Vertex b : branch) {
        if (t.degree(b) > 3) return out;
        for (Vertex u : t.neighbors(b))
            if (t.degree(u) >= 3) return out;
    }
    // Ends of the branch-spanning path: farthest branch vertex, twice.
    auto farthest = [&](Vertex from) {
        std::vector<int> dist;
        tree_parents(t, from, dist);
        Vertex best = from;
        for (Vertex b : branch)
            if (dist[b] > dist[best]) best = b;
        return best;
    };
    Vertex b1 = farthest(branch.front());
    Vertex b2 = farthest(b1);
    auto core = tree_path(t, b1, b2);
    for (Vertex b : branch)
        if (std::find(core.begin(), core.end(), b) == core.end()) return out;
    auto grow = [&](Vertex end, Vertex inner) {
        Vertex first = -1;
        for (Vertex u : t.neighbors(end))
            if (u != inner && (first == -1 || (rank ? rank(end, u) < rank(end, first) : u < first))) first = u;
        std::vector<Vertex> ext{first};
        auto rest = extend(t, end, first);
        ext.insert(ext.end(), rest.begin(), rest.end());
        return ext;
    };
    auto left = grow(b1, core[1]);
    auto right = grow(b2, core[core.size() - 2]);
    out.kind = TreeKind::Caterpillar;
    out.spine.assign(left.rbegin(), left.rend());
    out.spine.insert(out.spine.end(), core.begin(), core.end());
    out.spine.insert(out.spine.end(), right.begin(), right.end());
    return out;
}

std::optional<ShapeH> classify_shape(const Graph& g, const VertexSet& Hin) {
    g.check_set(Hin);
    VertexSet H = make_set(Hin);
    if (H.empty() || !is_connected(g, H)) return std::nullopt;
    auto sub = induced_subgraph(g, H);
    const Graph& L = sub.graph;
    const int n = L.size();
    ShapeH out;
    out.H = H;
    auto global = [&](const std::vector<Vertex>& local) {
        std::vector<Vertex> r;
        for (Vertex v : local) r.push_back(sub.to_parent[v]);
        return r;
    };
    auto orient = [](std::vector<Vertex>& p) {
        if (p.size() > 1 && p.back() < p.front()) std::reverse(p.begin(), p.end());
    };
    if (n == 1) {
        out.kind = ShapeKind::Singleton;
        out.P = H;
        out.Z = H;
        return out;
    }
    if (is_tree(L)) {
        auto ts = tree_shape(L);
        switch (ts.kind) {
            case TreeKind::Path: out.kind = ShapeKind::Caterpillar; break;
            case TreeKind::Caterpillar: out.kind = ShapeKind::Caterpillar; break;
            case TreeKind::Star: out.kind = ShapeKind::SubdividedStar; break;
            case TreeKind::Other: return std::nullopt;
        }
        out.P = global(ts.spine);
        if (out.kind == ShapeKind::Caterpillar) orient(out.P);
    } else {
        // Line graph of a tree: blocks are cliques, each vertex in at most two of them.
        auto bl = blocks(L);
        std::vector<std::vector<int>> in_blocks(static_cast<std::size_t>(n));
        for (std::size_t b = 0; b < bl.size(); ++b) {
            if (!is_clique(L, bl[b])) return std::nullopt;
            for (Vertex v : bl[b]) in_blocks[v].push_back(static_cast<int>(b));
        }
        int nodes = static_cast<int>(bl.size());
        std::vector<Edge> pre(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            if (in_blocks[v].size() > 2 || in_blocks[v].empty()) return std::nullopt;
            if (in_blocks[v].size() == 2) pre[v] = {in_blocks[v][0], in_blocks[v][1]};
            else pre[v] = {in_blocks[v][0], nodes++};
        }
        auto sorted = pre;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
        Graph T(nodes, sorted);
        if (!is_tree(T)) return std::nullopt;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) {
                bool share = pre[u].first == pre[v].first || pre[u].first == pre[v].second ||
                             pre[u].second == pre[v].first || pre[u].second == pre[v].second;
                if (share != L.adjacent(u, v)) return std::nullopt;
            }
        auto edge_vertex = [&](Vertex a, Vertex b) {
            for (Vertex v = 0; v < n; ++v)
                if ((pre[v].first == a && pre[v].second == b) || (pre[v].first == b && pre[v].second == a)) return v;
            return -1;
        };
        auto ts = tree_shape(T, [&](Vertex a, Vertex b) { return edge_vertex(a, b); });
        if (ts.kind == TreeKind::Star) {
            out.kind = ShapeKind::LineSubdividedStar;
            for (Vertex v = 0; v < n; ++v)
                if (pre[v].first == ts.spine[0] || pre[v].second == ts.spine[0]) out.P.push_back(sub.to_parent[v]);
            out.P = make_set(out.P);
        } else if (ts.kind == TreeKind::Caterpillar) {
            out.kind = ShapeKind::LineCaterpillar;
            for (std::size_t i = 0; i + 1 < ts.spine.size(); ++i)
                out.P.push_back(sub.to_parent[edge_vertex(ts.spine[i], ts.spine[i + 1])]);
            orient(out.P);
        } else {
            return std::nullopt;
        }
        out.preimage_n = nodes;
        out.preimage_edges = pre;
    }
    out.legs = components_within(g, set_difference(H, make_set(out.P)));
    for (Vertex v = 0; v < n; ++v)
        if (is_clique(L, L.neighbors(v))) out.Z.push_back(sub.to_parent[v]);
    return out;
}

Vertex attachment(const Graph& g, const ShapeH& shape, Vertex x) {
    auto nb = neighbors_in(g, x, shape.H);
    if (nb.size() != 1) throw InputError("vertex " + std::to_string(x) + " has " + std::to_string(nb.size()) + " neighbors in H");
    return nb.front();
}

std::optional<std::string> check_connectifier(const Graph& g, const ShapeH& shape, const VertexSet& Xin) {
    g.check_set(Xin);
    VertexSet X = make_set(Xin);
    if (X.empty()) return "X is empty";
    if (!disjoint(X, shape.H)) return "X meets H";
    if (shape.kind == ShapeKind::Singleton) {
        for (Vertex x : X)
            if (!g.adjacent(x, shape.H.front())) return "vertex " + std::to_string(x) + " misses the singleton H";
        return std::nullopt;
    }
    VertexSet seen;
    for (Vertex x : X) {
        auto nb = neighbors_in(g, x, shape.H);
        if (nb.size() != 1) return "vertex " + std::to_string(x) + " has " + std::to_string(nb.size()) + " neighbors in H";
        seen.push_back(nb.front());
    }
    if (make_set(seen) != shape.Z) return "N_H(X) differs from the simplicial vertices of H";
    return std::nullopt;
}

std::vector<Vertex> connectifier_order(const Graph& g, const ShapeH& shape, const VertexSet& Xin) {
    if (shape.concentrated()) throw ContractError("concentrated connectifier has no order");
    VertexSet X = make_set(Xin);
    std::vector<std::pair<int, Vertex>> keyed;
    for (Vertex x : X) {
        Vertex h = attachment(g, shape, x);
        int idx = shape.spine_index(h);
        int key = 0;
        if (idx >= 0) {
            key = 2 * idx;
        } else {
            const VertexSet* leg = nullptr;
            for (const auto& l : shape.legs)
                if (set_contains(l, h)) leg = &l;
            if (leg == nullptr) throw ContractError("attachment outside H");
            std::vector<int> spots;
            for (Vertex s : *leg)
                for (std::size_t i = 0; i < shape.P.size(); ++i)
                    if (g.adjacent(s, shape.P[i])) spots.push_back(static_cast<int>(i));
            std::sort(spots.begin(), spots.end());
            if (spots.size() == 1) key = 2 * spots[0];
            else if (spots.size() == 2 && spots[1] == spots[0] + 1) key = spots[0] + spots[1];
            else throw ContractError("leg attaches to P(H) irregularly");
        }
        keyed.emplace_back(key, x);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<Vertex> out;
    for (auto [k, x] : keyed) out.push_back(x);
    return out;
}

namespace {

int kind_rank(ShapeKind k) {
    switch (k) {
        case ShapeKind::Singleton: return 0;
        case ShapeKind::Caterpillar: return 1;
        case ShapeKind::LineCaterpillar: return 2;
        case ShapeKind::SubdividedStar: return 3;
        case ShapeKind::LineSubdividedStar: return 4;
    }
    return 5;
}

}  // namespace

ConnectResult find_connectifier(const Graph& g, const VertexSet& Sin, int h, const ConnectOptions& opts) {
    g.check_set(Sin);
    VertexSet S = make_set(Sin);
    if (h < 1) throw InputError("h must be positive");
    VertexSet D = set_difference(g.vertices(), S);
    if (D.empty() || !is_connected(g, D)) throw ContractError("hypothesis failed: G \\ S is not connected");
    for (Vertex s : S)
        if (neighbors_in(g, s, D).empty())
            throw ContractError("hypothesis failed: vertex " + std::to_string(s) + " has no neighbor in G \\ S");
    ConnectResult res;
    if (static_cast<int>(S.size()) < h) return res;
    std::int64_t left = opts.budget;

    for (Vertex v : opts.allow_singleton ? D : VertexSet{}) {
        auto nb = neighbors_in(g, v, S);
        if (static_cast<int>(nb.size()) >= h) {
            ConnectFound f;
            f.S_prime = VertexSet(nb.begin(), nb.begin() + h);
            f.shape = *classify_shape(g, {v});
            res.found = f;
            return res;
        }
    }

    // Shortest paths inside D seen by at least h vertices of S.
    std::optional<std::vector<Vertex>> best_path;
    VertexSet best_seen;
    for (std::size_t a = 0; a < D.size() && left > 0; ++a)
        for (std::size_t b = a + 1; b < D.size() && left > 0; ++b) {
            --left;
            auto p = shortest_path(g, D[a], {D[b]}, D);
            if (!p || (best_path && p->size() >= best_path->size())) continue;
            VertexSet seen;
            for (Vertex s : S)
                if (!neighbors_in(g, s, make_set(*p)).empty()) seen.push_back(s);
            if (static_cast<int>(seen.size()) >= h) {
                best_path = p;
                best_seen = seen;
            }
        }
    if (best_path) {
        ConnectFound f;
        f.S_prime = VertexSet(best_seen.begin(), best_seen.begin() + h);
        f.shape = *classify_shape(g, make_set(*best_path));
        f.path_case = true;
        res.found = f;
        return res;
    }

    // Unions of shortest paths between one attachment per chosen vertex.
    std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>> path_cache;
    auto path_between = [&](Vertex u, Vertex v) -> const std::vector<Vertex>& {
        auto key = std::minmax(u, v);
        auto it = path_cache.find(key);
        if (it == path_cache.end()) it = path_cache.emplace(key, *shortest_path(g, key.first, {key.second}, D)).first;
        return it->second;
    };
    std::optional<ConnectFound> best;
    auto consider = [&](const VertexSet& chosen, const std::vector<Vertex>& att) {
        VertexSet Hs;
        for (std::size_t i = 0; i < att.size(); ++i)
            for (std::size_t j = i; j < att.size(); ++j) {
                const auto& p = path_between(att[i], att[j]);
                Hs.insert(Hs.end(), p.begin(), p.end());
            }
        Hs = make_set(Hs);
        if (best && (Hs.size() > best->shape.H.size() && kind_rank(best->shape.kind) <= 1)) return;
        auto shape = classify_shape(g, Hs);
        if (!shape || shape->kind == ShapeKind::Singleton || check_connectifier(g, *shape, chosen)) return;
        auto rank = std::make_tuple(kind_rank(shape->kind), shape->H.size());
        if (best && rank >= std::make_tuple(kind_rank(best->shape.kind), best->shape.H.size())) return;
        best = ConnectFound{chosen, *shape, false};
    };
    std::vector<int> pick(static_cast<std::size_t>(h));
    std::function<void(std::size_t, std::size_t)> subsets = [&](std::size_t from, std::size_t depth) {
        if (left <= 0) return;
        if (depth == static_cast<std::size_t>(h)) {
            VertexSet chosen;
            for (int i : pick) chosen.push_back(S[i]);
            std::vector<VertexSet> options;
            for (Vertex x : chosen) options.push_back(neighbors_in(g, x, D));
            std::vector<Vertex> att(chosen.size());
            std::function<void(std::size_t)> attach = [&](std::size_t k) {
                if (left <= 0) return;
                if (k == chosen.size()) {
                    --left;
                    consider(chosen, att);
                    return;
                }
                for (Vertex a : options[k]) {
                    att[k] = a;
                    attach(k + 1);
                }
            };
            attach(0);
            return;
        }
        for (std::size_t i = from; i < S.size(); ++i) {
            pick[depth] = static_cast<int>(i);
            subsets(i + 1, depth + 1);
        }
    };
    subsets(0, 0);
    res.exhausted = left <= 0;
    res.found = best;
    return res;
}

}  // namespace tindep
