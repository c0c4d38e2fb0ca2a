#include "tindep/strip.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "tindep/error.hpp"

namespace tindep {

std::vector<int> SmoothTree::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

bool SmoothTree::is_leaf(int v) const { return degrees()[v] == 1; }

bool SmoothTree::incident(int e, int v) const { return edges[e].first == v || edges[e].second == v; }

VertexSet StripStructure::eta_T() const {
    VertexSet out;
    for (const auto& s : eta_v) out = set_union(out, s);
    for (const auto& s : eta_e) out = set_union(out, s);
    return out;
}

VertexSet StripStructure::eta_plus() const { return set_union(eta_T(), {apex}); }

VertexSet StripStructure::interior(int e) const {
    auto [u, v] = tree.edges[e];
    return set_difference(eta_e[e], set_union(eta_ev[e][u], eta_ev[e][v]));
}

VertexSet StripStructure::boundary(int v) const {
    VertexSet out;
    for (std::size_t e = 0; e < tree.edges.size(); ++e)
        if (tree.incident(static_cast<int>(e), v)) out = set_union(out, eta_ev[e][v]);
    return out;
}

namespace {

std::string str(Vertex v) { return std::to_string(v); }

std::string edge_name(const SmoothTree& t, std::size_t e) {
    return "e" + std::to_string(e) + "=" + str(t.edges[e].first) + "-" + str(t.edges[e].second);
}

std::optional<std::string> tree_problem(const SmoothTree& t) {
    if (t.n < 3) return "tree has fewer than three vertices";
    if (t.edges.size() != static_cast<std::size_t>(t.n - 1)) return "tree must have n-1 edges";
    for (auto [u, v] : t.edges)
        if (u < 0 || v < 0 || u >= t.n || v >= t.n || u == v) return "bad tree edge";
    std::vector<Edge> sorted;
    for (auto [u, v] : t.edges) sorted.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return "duplicate tree edge";
    Graph tg(t.n, sorted);
    if (!is_connected(tg, tg.vertices())) return "tree is not connected";
    for (int v = 0; v < t.n; ++v)
        if (tg.degree(v) == 2) return "tree vertex " + str(v) + " has degree two";
    return std::nullopt;
}

// x can reach `targets` by a path whose interior lies in `inner`.
bool reaches(const Graph& g, Vertex x, const VertexSet& targets, const VertexSet& inner) {
    if (set_contains(targets, x)) return true;
    std::vector<Vertex> frontier{x};
    VertexSet seen{x};
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        for (Vertex u : g.neighbors(frontier[i])) {
            if (set_contains(targets, u)) return true;
            if (set_contains(inner, u) && !set_contains(seen, u)) {
                seen = set_union(seen, {u});
                frontier.push_back(u);
            }
        }
    }
    return false;
}

}  // namespace

std::vector<StripViolation> validate_strip(const StripStructure& s) {
    std::vector<StripViolation> out;
    auto add = [&](std::string axiom, std::string detail) { out.push_back({std::move(axiom), std::move(detail)}); };
    const Graph& g = s.graph;
    const SmoothTree& t = s.tree;
    if (auto p = tree_problem(t)) {
        add("tree", *p);
        return out;
    }
    const std::size_t m = t.edges.size();
    if (s.eta_v.size() != static_cast<std::size_t>(t.n) || s.eta_e.size() != m || s.eta_ev.size() != m) {
        add("domain", "η is not defined on every tree vertex and edge");
        return out;
    }
    for (const auto& row : s.eta_ev)
        if (row.size() != static_cast<std::size_t>(t.n)) {
            add("domain", "η(e,v) is not defined for every pair");
            return out;
        }
    if (!g.valid_vertex(s.apex)) {
        add("domain", "apex out of range");
        return out;
    }
    auto check_set = [&](const VertexSet& set, const std::string& name) {
        for (Vertex v : set) {
            if (!g.valid_vertex(v)) {
                add("domain", name + " contains out-of-range vertex " + str(v));
                return false;
            }
            if (v == s.apex) {
                add("domain", name + " contains the apex");
                return false;
            }
        }
        if (make_set(set) != set) {
            add("domain", name + " is not a sorted set");
            return false;
        }
        return true;
    };
    bool domain_ok = true;
    for (int v = 0; v < t.n; ++v) domain_ok &= check_set(s.eta_v[v], "η(t" + str(v) + ")");
    for (std::size_t e = 0; e < m; ++e) {
        domain_ok &= check_set(s.eta_e[e], "η(" + edge_name(t, e) + ")");
        for (int v = 0; v < t.n; ++v) domain_ok &= check_set(s.eta_ev[e][v], "η(" + edge_name(t, e) + ",t" + str(v) + ")");
    }
    if (!domain_ok) return out;

    auto deg = t.degrees();

    // S1
    std::map<Vertex, std::string> owner;
    auto claim = [&](const VertexSet& set, const std::string& name) {
        for (Vertex x : set) {
            auto [it, fresh] = owner.emplace(x, name);
            if (!fresh) add("S1", "vertex " + str(x) + " lies in " + it->second + " and " + name);
        }
    };
    for (int v = 0; v < t.n; ++v) claim(s.eta_v[v], "η(t" + str(v) + ")");
    for (std::size_t e = 0; e < m; ++e) claim(s.eta_e[e], "η(" + edge_name(t, e) + ")");

    // S2
    for (int v = 0; v < t.n; ++v)
        if (deg[v] == 1 && !s.eta_v[v].empty()) add("S2", "leaf t" + str(v) + " has nonempty η");

    // S3
    for (std::size_t e = 0; e < m; ++e)
        for (int v = 0; v < t.n; ++v) {
            const VertexSet& ev = s.eta_ev[e][v];
            if (!is_subset(ev, s.eta_e[e])) add("S3", "η(" + edge_name(t, e) + ",t" + str(v) + ") not inside η(e)");
            bool inc = t.incident(static_cast<int>(e), v);
            if (inc && ev.empty()) add("S3", "η(" + edge_name(t, e) + ",t" + str(v) + ") is empty at an end");
            if (!inc && !ev.empty()) add("S3", "η(" + edge_name(t, e) + ",t" + str(v) + ") is nonempty off the edge");
        }

    // S4
    for (std::size_t e = 0; e < m; ++e)
        for (std::size_t f = e + 1; f < m; ++f) {
            for (int v = 0; v < t.n; ++v)
                for (Vertex x : s.eta_ev[e][v])
                    for (Vertex y : s.eta_ev[f][v])
                        if (x != y && !g.adjacent(x, y))
                            add("S4", "η(" + edge_name(t, e) + ",t" + str(v) + ") and η(" + edge_name(t, f) +
                                          ",t" + str(v) + ") not complete at " + str(x) + "-" + str(y));
            for (Vertex x : s.eta_e[e])
                for (Vertex y : s.eta_e[f]) {
                    if (!g.adjacent(x, y)) continue;
                    bool explained = false;
                    for (int v = 0; v < t.n && !explained; ++v)
                        explained = set_contains(s.eta_ev[e][v], x) && set_contains(s.eta_ev[f][v], y);
                    if (!explained)
                        add("S4", "edge " + str(x) + "-" + str(y) + " between η(" + edge_name(t, e) + ") and η(" +
                                      edge_name(t, f) + ")");
                }
        }

    // S5
    for (std::size_t e = 0; e < m; ++e) {
        auto [u, v] = t.edges[e];
        const VertexSet& eu = s.eta_ev[e][u];
        const VertexSet& ev = s.eta_ev[e][v];
        VertexSet inner = s.interior(static_cast<int>(e));
        VertexSet only_u = set_difference(eu, ev);
        VertexSet only_v = set_difference(ev, eu);
        for (Vertex x : s.eta_e[e]) {
            if (set_contains(eu, x) && set_contains(ev, x)) continue;
            if (!reaches(g, x, only_u, inner) || !reaches(g, x, only_v, inner))
                add("S5", "vertex " + str(x) + " of η(" + edge_name(t, e) + ") does not reach both ends");
        }
    }

    // S6
    for (int v = 0; v < t.n; ++v)
        for (std::size_t e = 0; e < m; ++e) {
            VertexSet rest = set_difference(s.eta_e[e], s.eta_ev[e][v]);
            for (Vertex x : s.eta_v[v])
                for (Vertex y : rest)
                    if (g.adjacent(x, y))
                        add("S6", "η(t" + str(v) + ") vertex " + str(x) + " sees " + str(y) + " in η(" +
                                      edge_name(t, e) + ") outside η(e,t" + str(v) + ")");
        }

    // S7
    for (int v = 0; v < t.n; ++v) {
        VertexSet b = s.boundary(v);
        for (const VertexSet& d : components_within(g, s.eta_v[v])) {
            bool touches = false;
            for (Vertex x : d)
                for (Vertex y : g.neighbors(x)) touches |= set_contains(b, y);
            if (!touches) add("S7", "component of η(t" + str(v) + ") at " + str(d.front()) + " misses B(t" + str(v) + ")");
        }
    }

    // S8
    VertexSet allowed;
    for (std::size_t e = 0; e < m; ++e)
        for (int l : {t.edges[e].first, t.edges[e].second}) {
            if (deg[l] != 1) continue;
            for (Vertex x : s.eta_ev[e][l])
                if (!g.adjacent(s.apex, x)) add("S8", "apex misses " + str(x) + " in η(" + edge_name(t, e) + ",t" + str(l) + ")");
            allowed = set_union(allowed, s.eta_ev[e][l]);
        }
    for (Vertex x : neighbors_in(g, s.apex, s.eta_T()))
        if (!set_contains(allowed, x)) add("S8", "apex has extra neighbor " + str(x) + " in η(T)");
    return out;
}

RungReport rungs(const StripStructure& s, int e, std::size_t cap) {
    if (e < 0 || static_cast<std::size_t>(e) >= s.tree.edges.size()) throw InputError("tree edge out of range");
    auto bad = validate_strip(s);
    if (!bad.empty()) throw ContractError("invalid strip structure: " + bad.front().axiom + " " + bad.front().detail);
    const Graph& g = s.graph;
    auto [u, v] = s.tree.edges[e];
    const VertexSet& eta = s.eta_e[e];
    const VertexSet& eu = s.eta_ev[e][u];
    const VertexSet& ev = s.eta_ev[e][v];
    RungReport r;
    VertexSet covered;
    std::vector<Vertex> path;
    std::function<void()> extend = [&]() {
        Vertex last = path.back();
        for (Vertex y : g.neighbors(last)) {
            if (!set_contains(eta, y) || set_contains(eu, y)) continue;
            bool induced = true;
            for (std::size_t i = 0; i + 1 < path.size() && induced; ++i) induced = !g.adjacent(path[i], y) && path[i] != y;
            if (!induced) continue;
            path.push_back(y);
            if (set_contains(ev, y)) {
                if (r.rungs.size() >= cap) throw ResourceError("rung enumeration cap exceeded");
                r.rungs.push_back(PathWitness{path});
                r.has_long = true;
                covered = set_union(covered, make_set(path));
            } else {
                extend();
            }
            path.pop_back();
        }
    };
    for (Vertex x : eu) {
        if (set_contains(ev, x)) {
            r.rungs.push_back(PathWitness{{x}});
            covered = set_union(covered, {x});
            continue;
        }
        path = {x};
        extend();
    }
    r.tilde = set_difference(eta, covered);
    return r;
}

bool is_trapped(const Graph& g, Vertex a, const VertexSet& H) {
    g.check_vertex(a);
    if (!set_contains(H, a)) return false;
    if (!is_subset(closed_neighborhood(g, closed_neighborhood(g, {a})), H)) return false;
    for (Vertex x : g.neighbors(a))
        if (neighbors_in(g, x, H).size() != 2) return false;
    return true;
}

StripClass classify_strip(const StripStructure& s) {
    auto bad = validate_strip(s);
    if (!bad.empty()) throw ContractError("invalid strip structure: " + bad.front().axiom + " " + bad.front().detail);
    StripClass c;
    c.tame = std::all_of(s.eta_v.begin(), s.eta_v.end(), [](const VertexSet& x) { return x.empty(); });
    c.substantial = true;
    for (std::size_t e = 0; e < s.tree.edges.size(); ++e) {
        RungReport r = rungs(s, static_cast<int>(e));
        if (!r.tilde.empty()) c.tame = false;
        if (!r.has_long) c.substantial = false;
    }
    c.rich = is_trapped(s.graph, s.apex, s.eta_plus());
    auto deg = s.tree.degrees();
    for (std::size_t e = 0; e < s.tree.edges.size(); ++e)
        for (int l : {s.tree.edges[e].first, s.tree.edges[e].second})
            if (deg[l] == 1 && s.eta_ev[e][l].size() != 1) c.rich = false;
    return c;
}

bool strip_leq(const StripStructure& lo, const StripStructure& hi) {
    if (!(lo.graph == hi.graph) || lo.apex != hi.apex || lo.tree.n != hi.tree.n || lo.tree.edges != hi.tree.edges)
        throw InputError("strip structures differ in graph, apex or tree");
    auto within = [](const std::vector<VertexSet>& a, const std::vector<VertexSet>& b) {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!is_subset(a[i], b[i])) return false;
        return true;
    };
    if (!within(lo.eta_v, hi.eta_v) || !within(lo.eta_e, hi.eta_e) || lo.eta_ev.size() != hi.eta_ev.size()) return false;
    for (std::size_t e = 0; e < lo.eta_ev.size(); ++e)
        if (!within(lo.eta_ev[e], hi.eta_ev[e])) return false;
    return true;
}

StripStructure pyramid_to_strip(const Graph& g, const PyramidWitness& p, bool strict) {
    if (auto err = check_pyramid(g, p)) throw InputError("invalid pyramid: " + *err);
    if (strict && !is_trapped(g, p.apex, p.vertex_set()))
        throw ContractError("apex " + std::to_string(p.apex) + " is not trapped in the pyramid");
    StripStructure s;
    s.graph = g;
    s.apex = p.apex;
    s.tree.n = 4;
    s.tree.edges = {{0, 1}, {0, 2}, {0, 3}};
    s.eta_v.assign(4, {});
    s.eta_e.assign(3, {});
    s.eta_ev.assign(3, std::vector<VertexSet>(4));
    for (int i = 0; i < 3; ++i) {
        const auto& path = p.paths[i].vertices;
        s.eta_e[i] = make_set(std::vector<Vertex>(path.begin() + 1, path.end()));
        s.eta_ev[i][0] = {p.base[i]};
        s.eta_ev[i][i + 1] = {path[1]};
    }
    return s;
}

TrapReduction trap_reduction(const Graph& g, const PyramidWitness& p) {
    if (auto err = check_pyramid(g, p)) throw InputError("invalid pyramid: " + *err);
    VertexSet sigma = p.vertex_set();
    VertexSet z1{p.apex};
    for (const auto& path : p.paths) z1.push_back(path.vertices[1]);
    z1 = make_set(z1);
    VertexSet drop = set_difference(open_neighborhood(g, z1), sigma);
    TrapReduction out{induced_subgraph(g, set_difference(g.vertices(), drop)), {}};
    const auto& to = out.sub.to_local;
    out.pyramid.apex = to[p.apex];
    for (int i = 0; i < 3; ++i) {
        out.pyramid.base[i] = to[p.base[i]];
        for (Vertex v : p.paths[i].vertices) out.pyramid.paths[i].vertices.push_back(to[v]);
    }
    return out;
}

StripStructure strip_from_subdivided_tree(const SmoothTree& tree, const std::vector<int>& subdivisions) {
    if (auto p = tree_problem(tree)) throw InputError("not a smooth tree: " + *p);
    if (subdivisions.size() != tree.edges.size()) throw InputError("one subdivision count per tree edge");
    StripStructure s;
    s.apex = 0;
    s.tree = tree;
    const std::size_t m = tree.edges.size();
    s.eta_v.assign(static_cast<std::size_t>(tree.n), {});
    s.eta_e.assign(m, {});
    s.eta_ev.assign(m, std::vector<VertexSet>(static_cast<std::size_t>(tree.n)));
    std::vector<Edge> edges;
    int next = 1;
    std::vector<VertexSet> at(static_cast<std::size_t>(tree.n));
    for (std::size_t e = 0; e < m; ++e) {
        if (subdivisions[e] < 0) throw InputError("negative subdivision count");
        int k = subdivisions[e] + 1;
        std::vector<Vertex> chain;
        for (int i = 0; i < k; ++i) chain.push_back(next++);
        for (int i = 0; i + 1 < k; ++i) edges.emplace_back(chain[i], chain[i + 1]);
        auto [u, v] = tree.edges[e];
        s.eta_e[e] = chain;
        s.eta_ev[e][u] = {chain.front()};
        s.eta_ev[e][v] = {chain.back()};
        at[u].push_back(chain.front());
        at[v].push_back(chain.back());
    }
    auto deg = tree.degrees();
    for (int v = 0; v < tree.n; ++v) {
        if (deg[v] == 1) {
            edges.emplace_back(0, at[v].front());
            continue;
        }
        for (std::size_t i = 0; i < at[v].size(); ++i)
            for (std::size_t j = i + 1; j < at[v].size(); ++j)
                edges.emplace_back(std::min(at[v][i], at[v][j]), std::max(at[v][i], at[v][j]));
    }
    s.graph = Graph(next, edges);
    return s;
}

}  // namespace tindep
