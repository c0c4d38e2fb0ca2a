#include "tindep/align.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "tindep/error.hpp"

namespace tindep {

std::string to_string(AlignKind k) {
    switch (k) {
        case AlignKind::Wide: return "wide";
        case AlignKind::Spiky: return "spiky";
        case AlignKind::Triangular: return "triangular";
        case AlignKind::Mixed: return "mixed";
    }
    return "mixed";
}

namespace {

std::vector<int> positions(const Graph& g, const PathWitness& P, Vertex x) {
    std::vector<int> out;
    for (std::size_t i = 0; i < P.vertices.size(); ++i)
        if (g.adjacent(x, P.vertices[i])) out.push_back(static_cast<int>(i));
    return out;
}

void check_path(const Graph& g, const PathWitness& P) {
    g.check_set(P.vertices);
    if (P.vertices.empty() || !is_induced_path(g, P.vertices)) throw InputError("P is not an induced path");
}

}  // namespace

std::optional<AlignKind> attachment_kind(const Graph& g, const PathWitness& P, Vertex x) {
    auto pos = positions(g, P, x);
    if (pos.empty()) return std::nullopt;
    if (pos.size() == 1) return AlignKind::Spiky;
    if (pos.size() == 2 && pos[1] == pos[0] + 1) return AlignKind::Triangular;
    return AlignKind::Wide;
}

std::optional<Alignment> classify_alignment(const Graph& g, const PathWitness& P, const VertexSet& X) {
    check_path(g, P);
    g.check_set(X);
    if (!disjoint(make_set(X), P.vertex_set())) throw InputError("X meets P");
    if (X.empty()) return std::nullopt;
    struct Item {
        int lo, hi;
        Vertex x;
        AlignKind kind;
    };
    std::vector<Item> items;
    for (Vertex x : make_set(X)) {
        auto pos = positions(g, P, x);
        if (pos.empty()) return std::nullopt;
        items.push_back({pos.front(), pos.back(), x, *attachment_kind(g, P, x)});
    }
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return std::tie(a.lo, a.x) < std::tie(b.lo, b.x); });
    for (std::size_t i = 0; i + 1 < items.size(); ++i)
        if (items[i].hi >= items[i + 1].lo) return std::nullopt;
    Alignment a;
    a.P = P;
    for (const auto& it : items) {
        a.order.push_back(it.x);
        a.windows.emplace_back(it.lo, it.hi);
        a.kinds.push_back(it.kind);
    }
    a.kind = a.kinds.front();
    for (AlignKind k : a.kinds)
        if (k != a.kind) a.kind = AlignKind::Mixed;
    return a;
}

std::vector<int> interval_stable_set(const std::vector<std::pair<int, int>>& windows) {
    std::vector<int> idx(windows.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return std::tie(windows[a].second, windows[a].first, a) < std::tie(windows[b].second, windows[b].first, b);
    });
    std::vector<int> out;
    int last = 0;
    for (int i : idx) {
        if (windows[i].first > windows[i].second) throw InputError("malformed window");
        if (out.empty() || windows[i].first > last) {
            out.push_back(i);
            last = windows[i].second;
        }
    }
    return out;
}

Extraction extract_consistent_alignment(const Graph& g, const PathWitness& P, const VertexSet& Y, int s, int d,
                                        const ExtractOptions& opts) {
    check_path(g, P);
    g.check_set(Y);
    VertexSet ys = make_set(Y);
    if (s < 1 || d < 1) throw InputError("s and d must be positive");
    if (!disjoint(ys, P.vertex_set())) throw ContractError("hypothesis failed: Y meets P");
    if (!is_stable(g, ys)) throw ContractError("hypothesis failed: Y is not stable");
    const std::size_t need = static_cast<std::size_t>(3 * s * (d + 1));
    if (opts.require_size && ys.size() < need)
        throw ContractError("hypothesis failed: |Y| = " + std::to_string(ys.size()) + " < 3s(d+1) = " + std::to_string(need));
    if (ys.size() < static_cast<std::size_t>(3 * s))
        throw ContractError("hypothesis failed: |Y| < 3s");
    std::vector<std::pair<int, int>> windows;
    for (Vertex y : ys) {
        auto pos = positions(g, P, y);
        if (pos.empty()) throw ContractError("hypothesis failed: vertex " + std::to_string(y) + " has no neighbor in P");
        windows.emplace_back(pos.front(), pos.back());
    }
    for (Vertex p : P.vertices)
        if (static_cast<int>(neighbors_in(g, p, ys).size()) >= d)
            throw ContractError("hypothesis failed: vertex " + std::to_string(p) + " of P has at least d neighbors in Y");
    if (opts.verify_outside_paths) {
        VertexSet NP = closed_neighborhood(g, P.vertex_set());
        std::vector<int> comp_of(static_cast<std::size_t>(g.size()), -1);
        auto comps = components(g, NP);
        for (std::size_t i = 0; i < comps.size(); ++i)
            for (Vertex v : comps[i]) comp_of[v] = static_cast<int>(i);
        std::vector<VertexSet> reach;
        for (Vertex y : ys) {
            VertexSet r;
            for (Vertex u : g.neighbors(y))
                if (comp_of[u] >= 0) r.push_back(comp_of[u]);
            reach.push_back(make_set(r));
        }
        for (std::size_t i = 0; i < ys.size(); ++i)
            for (std::size_t j = i + 1; j < ys.size(); ++j)
                if (disjoint(reach[i], reach[j]))
                    throw ContractError("hypothesis failed: no path from " + std::to_string(ys[i]) + " to " +
                                        std::to_string(ys[j]) + " avoiding N[P]");
    }
    // Depth of the interval family: a point in d+1 intervals is a (d+1)-clique of I.
    for (std::size_t p = 0; p < P.vertices.size(); ++p) {
        int depth = 0;
        for (auto [lo, hi] : windows) depth += (lo <= static_cast<int>(p) && static_cast<int>(p) <= hi) ? 1 : 0;
        if (depth >= d + 1)
            throw ContractError("theta hypothesis violated: " + std::to_string(depth) + " intervals share vertex " +
                                std::to_string(P.vertices[p]) + " of P");
    }
    auto picked = interval_stable_set(windows);
    if (picked.size() < static_cast<std::size_t>(3 * s))
        throw ContractError("interval graph has no stable set of size 3s");
    if (!opts.maximal) picked.resize(static_cast<std::size_t>(3 * s));
    std::vector<Vertex> stable;
    for (int i : picked) stable.push_back(ys[i]);
    std::map<AlignKind, std::vector<Vertex>> by_kind;
    for (Vertex y : stable) by_kind[*attachment_kind(g, P, y)].push_back(y);
    AlignKind best = AlignKind::Wide;
    std::size_t best_size = 0;
    for (AlignKind k : {AlignKind::Wide, AlignKind::Spiky, AlignKind::Triangular})
        if (by_kind[k].size() > best_size) {
            best = k;
            best_size = by_kind[k].size();
        }
    std::size_t take = opts.maximal ? best_size : static_cast<std::size_t>(s);
    std::vector<Vertex> chosen(by_kind[best].begin(), by_kind[best].begin() + static_cast<std::ptrdiff_t>(take));
    Extraction out;
    out.S = make_set(chosen);
    out.alignment = *classify_alignment(g, P, out.S);
    out.stable = stable;
    return out;
}

std::optional<std::pair<std::vector<Vertex>, bool>> common_monotone_subsequence(const std::vector<Vertex>& a,
                                                                                const std::vector<Vertex>& b, int x) {
    std::map<Vertex, int> pos;
    for (std::size_t i = 0; i < b.size(); ++i) pos[b[i]] = static_cast<int>(i);
    std::vector<Vertex> seq;
    for (Vertex v : a)
        if (pos.count(v)) seq.push_back(v);
    // Longest strictly monotone subsequence by O(n^2) DP, earliest predecessor on ties.
    auto longest = [&](bool increasing) {
        const std::size_t n = seq.size();
        std::vector<int> len(n, 1), prev(n, -1);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) {
                bool ok = increasing ? pos[seq[j]] < pos[seq[i]] : pos[seq[j]] > pos[seq[i]];
                if (ok && len[j] + 1 > len[i]) {
                    len[i] = len[j] + 1;
                    prev[i] = static_cast<int>(j);
                }
            }
        std::vector<Vertex> out;
        if (n == 0) return out;
        int end = static_cast<int>(std::max_element(len.begin(), len.end()) - len.begin());
        for (int i = end; i >= 0; i = prev[i]) out.push_back(seq[i]);
        std::reverse(out.begin(), out.end());
        return out;
    };
    if (x <= 0) return std::make_pair(std::vector<Vertex>{}, false);
    for (bool increasing : {true, false}) {
        auto run = longest(increasing);
        if (static_cast<int>(run.size()) >= x) {
            run.resize(static_cast<std::size_t>(x));
            return std::make_pair(run, !increasing);
        }
    }
    return std::nullopt;
}

}  // namespace tindep
