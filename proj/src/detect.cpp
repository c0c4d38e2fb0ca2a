#include "tindep/detect.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <functional>
#include <map>

#include "tindep/error.hpp"
#include "tindep/rng.hpp"

namespace tindep {

namespace {

using Mask = std::uint64_t;

struct Budget {
    std::int64_t left;

    void step() {
        if (--left < 0) throw ResourceError("detection budget exceeded");
    }
};

Mask bit(Vertex v) { return Mask{1} << v; }

// ---- subset engine -------------------------------------------------------

struct MaskGraph {
    int n = 0;
    std::vector<Mask> adj;

    explicit MaskGraph(const Graph& g) : n(g.size()), adj(static_cast<std::size_t>(g.size()), 0) {
        for (Vertex v = 0; v < n; ++v)
            for (Vertex u : g.neighbors(v)) adj[v] |= bit(u);
    }

    int deg_in(Vertex v, Mask m) const { return std::popcount(adj[v] & m); }
    bool adjacent(Vertex u, Vertex v) const { return (adj[u] >> v) & 1U; }
};

std::vector<Vertex> mask_vertices(Mask m) {
    std::vector<Vertex> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

// Follows a chain of degree-two vertices from prev -> cur until reaching a stop vertex.
std::optional<PathWitness> walk(const MaskGraph& mg, Mask m, Vertex prev, Vertex cur, Mask stop) {
    PathWitness p;
    p.vertices.push_back(prev);
    for (int guard = 0; guard <= 64; ++guard) {
        p.vertices.push_back(cur);
        if (stop & bit(cur)) return p;
        Mask rest = mg.adj[cur] & m & ~bit(prev);
        if (mg.deg_in(cur, m) != 2 || std::popcount(rest) != 1) return std::nullopt;
        prev = cur;
        cur = std::countr_zero(rest);
    }
    return std::nullopt;
}

// Pre-order DFS over sorted vertex lists, so the first accepted set is lexicographically least.
// Max induced degree and triangle count only grow with the set, so both prune.
class SubsetSearch {
public:
    using Accept = std::function<bool(Mask, int triangles)>;

    SubsetSearch(const MaskGraph& mg, int max_deg, int max_tri, Budget& budget, Accept accept)
        : mg_(mg), max_deg_(max_deg), max_tri_(max_tri), budget_(budget), accept_(std::move(accept)) {}

    bool run() { return extend(0, 0, 0); }

private:
    bool extend(Mask m, int next, int tri) {
        for (Vertex v = next; v < mg_.n; ++v) {
            budget_.step();
            Mask nb = mg_.adj[v] & m;
            if (std::popcount(nb) > max_deg_) continue;
            bool ok = true;
            int added = 0;
            for (Mask r = nb; r; r &= r - 1) {
                Vertex u = std::countr_zero(r);
                if (mg_.deg_in(u, m) + 1 > max_deg_) {
                    ok = false;
                    break;
                }
                added += std::popcount(mg_.adj[u] & nb);
            }
            added /= 2;
            if (!ok || tri + added > max_tri_) continue;
            Mask m2 = m | bit(v);
            if (accept_(m2, tri + added)) return true;
            if (extend(m2, v + 1, tri + added)) return true;
        }
        return false;
    }

    const MaskGraph& mg_;
    int max_deg_;
    int max_tri_;
    Budget& budget_;
    Accept accept_;
};

struct Profile {
    std::vector<Vertex> deg2, deg3, deg4, other;
};

Profile profile(const MaskGraph& mg, Mask m) {
    Profile p;
    for (Vertex v : mask_vertices(m)) {
        switch (mg.deg_in(v, m)) {
            case 2: p.deg2.push_back(v); break;
            case 3: p.deg3.push_back(v); break;
            case 4: p.deg4.push_back(v); break;
            default: p.other.push_back(v);
        }
    }
    return p;
}

std::optional<ThetaWitness> recognize_theta(const Graph& g, const MaskGraph& mg, Mask m) {
    if (std::popcount(m) < 5) return std::nullopt;
    Profile p = profile(mg, m);
    if (p.deg3.size() != 2 || !p.deg4.empty() || !p.other.empty()) return std::nullopt;
    Vertex a = p.deg3[0];
    Vertex b = p.deg3[1];
    ThetaWitness w{a, b, {}};
    int i = 0;
    for (Vertex u : mask_vertices(mg.adj[a] & m)) {
        auto path = walk(mg, m, a, u, bit(a) | bit(b));
        if (!path || path->back() != b) return std::nullopt;
        w.paths[i++] = std::move(*path);
    }
    if (w.vertex_set().size() != static_cast<std::size_t>(std::popcount(m))) return std::nullopt;
    if (check_theta(g, w)) return std::nullopt;
    return w;
}

std::optional<PyramidWitness> recognize_pyramid(const Graph& g, const MaskGraph& mg, Mask m) {
    if (std::popcount(m) < 6) return std::nullopt;
    Profile p = profile(mg, m);
    if (p.deg3.size() != 4 || !p.deg4.empty() || !p.other.empty()) return std::nullopt;
    for (Vertex apex : p.deg3) {
        std::vector<Vertex> base;
        for (Vertex v : p.deg3)
            if (v != apex) base.push_back(v);
        Mask bm = bit(base[0]) | bit(base[1]) | bit(base[2]);
        bool triangle = true;
        for (Vertex v : base)
            if (std::popcount(mg.adj[v] & bm) != 2) triangle = false;
        if (!triangle) continue;
        PyramidWitness w;
        w.apex = apex;
        int i = 0;
        for (Vertex u : mask_vertices(mg.adj[apex] & m)) {
            auto path = walk(mg, m, apex, u, bm | bit(apex));
            if (!path || !(bm & bit(path->back()))) return std::nullopt;
            w.base[i] = path->back();
            w.paths[i++] = std::move(*path);
        }
        if (w.vertex_set().size() != static_cast<std::size_t>(std::popcount(m))) return std::nullopt;
        if (check_pyramid(g, w)) return std::nullopt;
        return w;
    }
    return std::nullopt;
}

std::vector<std::array<Vertex, 3>> triangles_in(const MaskGraph& mg, Mask m) {
    std::vector<std::array<Vertex, 3>> out;
    for (Vertex a : mask_vertices(m))
        for (Vertex b : mask_vertices(mg.adj[a] & m & ~((bit(a) << 1) - 1)))
            for (Vertex c : mask_vertices(mg.adj[a] & mg.adj[b] & m & ~((bit(b) << 1) - 1))) out.push_back({a, b, c});
    return out;
}

std::optional<PrismWitness> recognize_prism(const Graph& g, const MaskGraph& mg, Mask m, bool classical) {
    if (std::popcount(m) < 5) return std::nullopt;
    Profile p = profile(mg, m);
    if (!p.other.empty()) return std::nullopt;
    bool plain = p.deg3.size() == 6 && p.deg4.empty();
    bool shared = !classical && p.deg3.size() == 4 && p.deg4.size() == 1;
    if (!plain && !shared) return std::nullopt;
    auto tris = triangles_in(mg, m);
    if (tris.size() != 2) return std::nullopt;
    const auto& A = tris[0];
    const auto& B = tris[1];
    Mask am = bit(A[0]) | bit(A[1]) | bit(A[2]);
    Mask bm = bit(B[0]) | bit(B[1]) | bit(B[2]);
    PrismWitness w;
    for (int i = 0; i < 3; ++i) {
        Vertex a = A[i];
        w.a[i] = a;
        if (bm & bit(a)) {
            w.b[i] = a;
            w.paths[i].vertices = {a};
            continue;
        }
        Mask out = mg.adj[a] & m & ~am;
        if (std::popcount(out) != 1) return std::nullopt;
        auto path = walk(mg, m, a, std::countr_zero(out), bm | am);
        if (!path || !(bm & bit(path->back()))) return std::nullopt;
        w.b[i] = path->back();
        w.paths[i] = std::move(*path);
    }
    if (w.vertex_set().size() != static_cast<std::size_t>(std::popcount(m))) return std::nullopt;
    if (check_prism(g, w, classical)) return std::nullopt;
    return w;
}

void require_cap(const Graph& g, const DetectOptions& opts) {
    if (g.size() > opts.cap || g.size() > 64)
        throw ResourceError("graph has " + std::to_string(g.size()) + " vertices, exhaustive cap is " +
                            std::to_string(std::min(opts.cap, 64)));
}

std::optional<ThetaWitness> subset_theta(const Graph& g, Budget& budget) {
    MaskGraph mg(g);
    std::optional<ThetaWitness> found;
    SubsetSearch(mg, 3, 0, budget, [&](Mask m, int) {
        found = recognize_theta(g, mg, m);
        return found.has_value();
    }).run();
    return found;
}

std::optional<PyramidWitness> subset_pyramid(const Graph& g, Budget& budget) {
    MaskGraph mg(g);
    std::optional<PyramidWitness> found;
    SubsetSearch(mg, 3, 1, budget, [&](Mask m, int tri) {
        if (tri != 1) return false;
        found = recognize_pyramid(g, mg, m);
        return found.has_value();
    }).run();
    return found;
}

std::optional<PrismWitness> subset_prism(const Graph& g, Budget& budget, bool classical) {
    MaskGraph mg(g);
    std::optional<PrismWitness> found;
    SubsetSearch(mg, classical ? 3 : 4, 2, budget, [&](Mask m, int tri) {
        if (tri != 2) return false;
        found = recognize_prism(g, mg, m, classical);
        return found.has_value();
    }).run();
    return found;
}

// ---- path engine ---------------------------------------------------------

class Bits {
public:
    explicit Bits(int n = 0) : words_((static_cast<std::size_t>(n) + 63) / 64, 0) {}
    void set(Vertex v) { words_[static_cast<std::size_t>(v) / 64] |= Mask{1} << (v % 64); }
    bool test(Vertex v) const { return (words_[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U; }
    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

private:
    std::vector<Mask> words_;
};

// A path plus its interior and the closed neighborhood of its interior.
struct PathInfo {
    std::vector<Vertex> vertices;
    Bits interior;
    Bits closed;
};

PathInfo make_info(const Graph& g, std::vector<Vertex> vertices, bool keep_front, bool keep_back) {
    PathInfo info{std::move(vertices), Bits(g.size()), Bits(g.size())};
    std::size_t lo = keep_front ? 0 : 1;
    std::size_t hi = info.vertices.size() - (keep_back ? 0 : 1);
    for (std::size_t i = lo; i < hi; ++i) {
        Vertex v = info.vertices[i];
        info.interior.set(v);
        info.closed.set(v);
        for (Vertex u : g.neighbors(v)) info.closed.set(u);
    }
    return info;
}

bool compatible(const PathInfo& p, const PathInfo& q) { return !p.interior.intersects(q.closed); }

enum class Step { Extend, Stop };

// Enumerates induced paths from `start` whose later vertices satisfy `allowed`.
// `visit` sees each path of length >= 1 and decides whether to extend it.
class InducedPaths {
public:
    InducedPaths(const Graph& g, Budget& budget) : g_(g), budget_(budget), cnt_(static_cast<std::size_t>(g.size()), 0) {}

    /// With open_start, neighbors of the start stay reachable (used to close holes).
    void run(Vertex start, const std::function<bool(Vertex)>& allowed,
             const std::function<Step(const std::vector<Vertex>&)>& visit, bool open_start = false) {
        path_ = {start};
        open_start_ = open_start;
        dfs(allowed, visit);
    }

private:
    void bump(Vertex v, int d) {
        cnt_[v] += d;
        for (Vertex u : g_.neighbors(v)) cnt_[u] += d;
    }

    void dfs(const std::function<bool(Vertex)>& allowed, const std::function<Step(const std::vector<Vertex>&)>& visit) {
        Vertex last = path_.back();
        bool counted = !(open_start_ && path_.size() == 1);
        if (counted) bump(last, 1);
        for (Vertex u : g_.neighbors(last)) {
            budget_.step();
            // u is adjacent to last, so cnt[u] >= 1 from last; any other path vertex nearby makes it > 1.
            if (cnt_[u] != (path_.size() == 1 && !counted ? 0 : 1) || !allowed(u)) continue;
            path_.push_back(u);
            if (visit(path_) == Step::Extend) dfs(allowed, visit);
            path_.pop_back();
        }
        if (counted) bump(last, -1);
    }

    const Graph& g_;
    Budget& budget_;
    std::vector<int> cnt_;
    std::vector<Vertex> path_;
    bool open_start_ = false;
};

// Pairwise compatible triple with one path from each list, in lexicographic index order.
// Validation is left to the caller through `accept`.
bool search_triple(const std::array<const std::vector<PathInfo>*, 3>& lists, bool distinct_ordered, Budget& budget,
                   const std::function<bool(const PathInfo&, const PathInfo&, const PathInfo&)>& accept) {
    const auto& l0 = *lists[0];
    const auto& l1 = *lists[1];
    const auto& l2 = *lists[2];
    for (std::size_t i = 0; i < l0.size(); ++i) {
        for (std::size_t j = distinct_ordered ? i + 1 : 0; j < l1.size(); ++j) {
            budget.step();
            if (!compatible(l0[i], l1[j]) || !compatible(l1[j], l0[i])) continue;
            for (std::size_t k = distinct_ordered ? j + 1 : 0; k < l2.size(); ++k) {
                budget.step();
                if (!compatible(l0[i], l2[k]) || !compatible(l2[k], l0[i])) continue;
                if (!compatible(l1[j], l2[k]) || !compatible(l2[k], l1[j])) continue;
                if (accept(l0[i], l1[j], l2[k])) return true;
            }
        }
    }
    return false;
}

PathWitness remap_path(const PathWitness& p, const std::vector<Vertex>& to) {
    PathWitness out;
    for (Vertex v : p.vertices) out.vertices.push_back(to[v]);
    return out;
}

template <std::size_t N>
std::array<Vertex, N> remap_arr(const std::array<Vertex, N>& a, const std::vector<Vertex>& to) {
    std::array<Vertex, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = to[a[i]];
    return out;
}

std::optional<ThetaWitness> remap(const ThetaWitness& w, const std::vector<Vertex>& to) {
    ThetaWitness out{to[w.a], to[w.b], {}};
    for (int i = 0; i < 3; ++i) out.paths[i] = remap_path(w.paths[i], to);
    return out;
}

std::optional<PrismWitness> remap(const PrismWitness& w, const std::vector<Vertex>& to) {
    PrismWitness out{remap_arr(w.a, to), remap_arr(w.b, to), {}};
    for (int i = 0; i < 3; ++i) out.paths[i] = remap_path(w.paths[i], to);
    return out;
}

std::optional<PyramidWitness> remap(const PyramidWitness& w, const std::vector<Vertex>& to) {
    PyramidWitness out{to[w.apex], remap_arr(w.base, to), {}};
    for (int i = 0; i < 3; ++i) out.paths[i] = remap_path(w.paths[i], to);
    return out;
}

template <class Fn>
auto per_block(const Graph& g, Fn fn) -> decltype(fn(g)) {
    for (const VertexSet& block : blocks(g)) {
        if (block.size() < 4) continue;
        InducedSubgraph sub = induced_subgraph(g, block);
        if (auto w = fn(sub.graph)) return remap(*w, sub.to_parent);
    }
    return std::nullopt;
}

std::optional<ThetaWitness> paths_theta_block(const Graph& g, Budget& budget) {
    InducedPaths paths(g, budget);
    for (Vertex a = 0; a < g.size(); ++a) {
        if (g.degree(a) < 3) continue;
        std::map<Vertex, std::vector<PathInfo>> by_end;
        paths.run(
            a, [&](Vertex) { return true; },
            [&](const std::vector<Vertex>& p) {
                Vertex b = p.back();
                if (p.size() >= 3 && b > a && g.degree(b) >= 3) by_end[b].push_back(make_info(g, p, false, false));
                return Step::Extend;
            });
        for (auto& [b, list] : by_end) {
            if (list.size() < 3) continue;
            std::optional<ThetaWitness> found;
            search_triple({&list, &list, &list}, true, budget,
                          [&](const PathInfo& p, const PathInfo& q, const PathInfo& r) {
                              ThetaWitness w{a, b, {PathWitness{p.vertices}, PathWitness{q.vertices}, PathWitness{r.vertices}}};
                              if (check_theta(g, w)) return false;
                              found = w;
                              return true;
                          });
            if (found) return found;
        }
    }
    return std::nullopt;
}

using Triangle = std::array<Vertex, 3>;

std::vector<Triangle> triangles_of(const Graph& g) {
    std::vector<Triangle> out;
    for (Vertex a = 0; a < g.size(); ++a)
        for (Vertex b : g.neighbors(a))
            if (b > a)
                for (Vertex c : g.neighbors(b))
                    if (c > b && g.adjacent(a, c)) out.push_back({a, b, c});
    return out;
}

// Induced paths from `from` to `to` whose interiors avoid `forbidden` and N[forbidden].
std::vector<PathInfo> connecting_paths(const Graph& g, InducedPaths& paths, Vertex from, Vertex to,
                                       const std::vector<Vertex>& forbidden) {
    std::vector<char> blocked(static_cast<std::size_t>(g.size()), 0);
    for (Vertex f : forbidden) {
        blocked[f] = 1;
        for (Vertex u : g.neighbors(f)) blocked[u] = 1;
    }
    std::vector<PathInfo> out;
    paths.run(
        from, [&](Vertex u) { return u == to || !blocked[u]; },
        [&](const std::vector<Vertex>& p) {
            if (p.back() == to) {
                out.push_back(make_info(g, p, false, false));
                return Step::Stop;
            }
            return Step::Extend;
        });
    return out;
}

std::optional<PrismWitness> paths_prism_block(const Graph& g, Budget& budget, bool classical) {
    InducedPaths paths(g, budget);
    auto tris = triangles_of(g);
    for (std::size_t x = 0; x < tris.size(); ++x) {
        for (std::size_t y = x + 1; y < tris.size(); ++y) {
            const Triangle& A = tris[x];
            const Triangle& B = tris[y];
            std::vector<Vertex> common;
            for (Vertex v : A)
                if (std::find(B.begin(), B.end(), v) != B.end()) common.push_back(v);
            if (common.size() > 1 || (common.size() == 1 && classical)) continue;
            // Order both triangles so a shared vertex sits in the middle slot.
            Triangle a = A;
            Triangle b = B;
            if (common.size() == 1) {
                std::stable_partition(a.begin(), a.end(), [&](Vertex v) { return v != common[0]; });
                std::swap(a[1], a[2]);
                std::stable_partition(b.begin(), b.end(), [&](Vertex v) { return v != common[0]; });
                std::swap(b[1], b[2]);
            }
            std::array<int, 3> perm{0, 1, 2};
            do {
                if (common.size() == 1 && perm[1] != 1) continue;
                std::array<std::vector<PathInfo>, 3> lists;
                bool empty = false;
                for (int i = 0; i < 3 && !empty; ++i) {
                    Vertex from = a[i];
                    Vertex to = b[perm[i]];
                    if (from == to) {
                        lists[i].push_back(make_info(g, {from}, false, false));
                        continue;
                    }
                    std::vector<Vertex> forbidden;
                    for (Vertex v : a)
                        if (v != from) forbidden.push_back(v);
                    for (Vertex v : b)
                        if (v != to) forbidden.push_back(v);
                    lists[i] = connecting_paths(g, paths, from, to, forbidden);
                    empty = lists[i].empty();
                }
                if (empty) continue;
                std::optional<PrismWitness> found;
                search_triple({&lists[0], &lists[1], &lists[2]}, false, budget,
                              [&](const PathInfo& p, const PathInfo& q, const PathInfo& r) {
                                  PrismWitness w{a, {b[perm[0]], b[perm[1]], b[perm[2]]},
                                                 {PathWitness{p.vertices}, PathWitness{q.vertices}, PathWitness{r.vertices}}};
                                  if (check_prism(g, w, classical)) return false;
                                  found = w;
                                  return true;
                              });
                if (found) return found;
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    return std::nullopt;
}

std::optional<PyramidWitness> paths_pyramid_block(const Graph& g, Budget& budget) {
    InducedPaths paths(g, budget);
    for (const Triangle& base : triangles_of(g)) {
        if (g.degree(base[0]) < 3 || g.degree(base[1]) < 3 || g.degree(base[2]) < 3) continue;
        for (Vertex apex = 0; apex < g.size(); ++apex) {
            if (g.degree(apex) < 3 || std::find(base.begin(), base.end(), apex) != base.end()) continue;
            int touching = 0;
            for (Vertex b : base) touching += g.adjacent(apex, b) ? 1 : 0;
            if (touching > 1) continue;
            std::array<std::vector<PathInfo>, 3> lists;
            bool empty = false;
            for (int i = 0; i < 3 && !empty; ++i) {
                if (g.adjacent(apex, base[i])) {
                    lists[i].push_back(make_info(g, {apex, base[i]}, false, false));
                    continue;
                }
                std::vector<Vertex> forbidden;
                for (Vertex v : base)
                    if (v != base[i]) forbidden.push_back(v);
                lists[i] = connecting_paths(g, paths, apex, base[i], forbidden);
                empty = lists[i].empty();
            }
            if (empty) continue;
            std::optional<PyramidWitness> found;
            search_triple({&lists[0], &lists[1], &lists[2]}, false, budget,
                          [&](const PathInfo& p, const PathInfo& q, const PathInfo& r) {
                              PyramidWitness w{apex, base, {PathWitness{p.vertices}, PathWitness{q.vertices}, PathWitness{r.vertices}}};
                              if (check_pyramid(g, w)) return false;
                              found = w;
                              return true;
                          });
            if (found) return found;
        }
    }
    return std::nullopt;
}

// ---- heuristic engine ----------------------------------------------------

VertexSet random_ball(const Graph& g, SplitMix64& rng, int size) {
    Vertex start = static_cast<Vertex>(rng.uniform(static_cast<std::uint64_t>(g.size())));
    std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
    std::deque<Vertex> queue{start};
    seen[start] = 1;
    VertexSet ball;
    while (!queue.empty() && static_cast<int>(ball.size()) < size) {
        Vertex v = queue.front();
        queue.pop_front();
        ball.push_back(v);
        std::vector<Vertex> nb = g.neighbors(v);
        rng.shuffle(nb);
        for (Vertex u : nb)
            if (!seen[u]) {
                seen[u] = 1;
                queue.push_back(u);
            }
    }
    return make_set(std::move(ball));
}

template <class W, class SubsetFn, class PathsFn>
Detection<W> dispatch(const Graph& g, const DetectOptions& opts, SubsetFn subset, PathsFn paths) {
    Budget budget{opts.budget};
    Engine engine = opts.engine;
    if (engine == Engine::Auto) engine = g.size() <= std::min(opts.cap, 64) ? Engine::Subset : Engine::Paths;
    switch (engine) {
        case Engine::Subset:
            require_cap(g, opts);
            return {subset(g, budget), true};
        case Engine::Paths:
            return {per_block(g, [&](const Graph& b) { return paths(b, budget); }), true};
        case Engine::Heuristic: {
            if (g.size() == 0) return {std::nullopt, true};
            if (g.size() <= std::min(opts.cap, 64)) return {subset(g, budget), true};
            SplitMix64 rng(opts.seed);
            for (int r = 0; r < opts.restarts; ++r) {
                InducedSubgraph sub = induced_subgraph(g, random_ball(g, rng, std::min(opts.cap, 64)));
                Budget local{opts.budget};
                if (auto w = subset(sub.graph, local)) return {remap(*w, sub.to_parent), true};
            }
            return {std::nullopt, false};
        }
        case Engine::Auto: break;
    }
    return {std::nullopt, false};
}

}  // namespace

Detection<ThetaWitness> find_theta(const Graph& g, const DetectOptions& opts) {
    return dispatch<ThetaWitness>(g, opts, subset_theta, paths_theta_block);
}

Detection<PrismWitness> find_prism(const Graph& g, const DetectOptions& opts) {
    bool classical = opts.classical_prism;
    return dispatch<PrismWitness>(
        g, opts, [&](const Graph& h, Budget& b) { return subset_prism(h, b, classical); },
        [&](const Graph& h, Budget& b) { return paths_prism_block(h, b, classical); });
}

Detection<PyramidWitness> find_pyramid(const Graph& g, const DetectOptions& opts) {
    return dispatch<PyramidWitness>(g, opts, subset_pyramid, paths_pyramid_block);
}

std::optional<K1tWitness> find_k1t(const Graph& g, int t) {
    if (t < 1) throw InputError("t must be at least 1");
    std::optional<K1tWitness> best;
    std::optional<VertexSet> best_key;
    for (Vertex c = 0; c < g.size(); ++c) {
        const VertexSet& nb = g.neighbors(c);
        if (static_cast<int>(nb.size()) < t) continue;
        // Lex-least stable t-subset of N(c) by DFS in index order.
        std::vector<Vertex> chosen;
        std::function<bool(std::size_t)> pick = [&](std::size_t from) {
            if (static_cast<int>(chosen.size()) == t) return true;
            for (std::size_t i = from; i + (t - chosen.size()) <= nb.size(); ++i) {
                Vertex v = nb[i];
                bool ok = std::none_of(chosen.begin(), chosen.end(), [&](Vertex u) { return g.adjacent(u, v); });
                if (!ok) continue;
                chosen.push_back(v);
                if (pick(i + 1)) return true;
                chosen.pop_back();
            }
            return false;
        };
        if (!pick(0)) continue;
        K1tWitness w{c, chosen};
        VertexSet key = w.vertex_set();
        if (!best_key || key < *best_key) {
            best = w;
            best_key = key;
        }
    }
    return best;
}

std::vector<std::vector<Vertex>> find_holes(const Graph& g, int min_len, std::int64_t budget_steps) {
    if (min_len < 4) throw InputError("minimum hole length must be at least 4");
    Budget budget{budget_steps};
    std::vector<std::vector<Vertex>> holes;
    InducedPaths paths(g, budget);
    for (Vertex s = 0; s < g.size(); ++s) {
        paths.run(
            s, [&](Vertex u) { return u > s; },
            [&](const std::vector<Vertex>& p) {
                Vertex last = p.back();
                if (p.size() >= 3 && g.adjacent(last, s)) {
                    // Closing edge; the path cannot continue as an induced path from s.
                    if (p.size() >= 4 && static_cast<int>(p.size()) >= min_len && p[1] < last) holes.push_back(p);
                    return Step::Stop;
                }
                return Step::Extend;
            },
            true);
    }
    std::sort(holes.begin(), holes.end(),
              [](const auto& x, const auto& y) { return make_set(x) < make_set(y); });
    return holes;
}

std::vector<Wheel> find_wheels(const Graph& g, int min_hole_len, std::int64_t budget) {
    std::vector<Wheel> out;
    for (auto& hole : find_holes(g, min_hole_len, budget)) {
        VertexSet hs = make_set(hole);
        for (Vertex c = 0; c < g.size(); ++c) {
            if (set_contains(hs, c)) continue;
            if (neighbors_in(g, c, hs).size() >= 3) out.push_back(Wheel{hole, c});
        }
    }
    return out;
}

ClassReport in_class_Ct(const Graph& g, int t, const DetectOptions& opts) {
    ClassReport report;
    auto theta = find_theta(g, opts);
    if (theta.witness) {
        report.violation = "theta";
        report.theta = theta.witness;
        return report;
    }
    auto prism = find_prism(g, opts);
    if (prism.witness) {
        report.violation = "prism";
        report.prism = prism.witness;
        return report;
    }
    report.k1t = find_k1t(g, t);
    if (report.k1t) {
        report.violation = "k1t";
        return report;
    }
    report.decided = theta.decided && prism.decided;
    report.member = report.decided;
    return report;
}

}  // namespace tindep
