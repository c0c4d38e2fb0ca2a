#include "tindep/separators.hpp"

#include <algorithm>

#include "tindep/error.hpp"

namespace tindep {

namespace {

std::vector<std::pair<Vertex, Vertex>> cross_pairs(const std::vector<VertexSet>& groups, const VertexSet& NZ) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (std::size_t i = 0; i < groups.size(); ++i)
        for (std::size_t j = i + 1; j < groups.size(); ++j)
            for (Vertex u : groups[i])
                for (Vertex v : groups[j])
                    if (u != v && !set_contains(NZ, u) && !set_contains(NZ, v))
                        out.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

VertexSet wheel_Z(const Graph& g, const Wheel& w) {
    if (auto err = check_wheel(g, w)) throw InputError("invalid wheel: " + *err);
    VertexSet hole = make_set(w.hole);
    VertexSet hub_nbrs = neighbors_in(g, w.hub, hole);
    if (!is_special(g, w)) return set_union(hub_nbrs, {w.hub});
    Vertex a = -1;
    Vertex b = -1;
    for (const auto& s : wheel_sectors(g, w))
        if (s.length() == 1) {
            a = s.front();
            b = s.back();
        }
    Vertex d = -1;
    for (Vertex v : hub_nbrs)
        if (v != a && v != b) d = v;
    VertexSet Z = set_union(make_set({a, b, w.hub}), {d});
    return set_union(Z, neighbors_in(g, d, hole));
}

VertexSet pyramid_Z(const Graph& g, const PyramidWitness& p) {
    if (auto err = check_pyramid(g, p)) throw InputError("invalid pyramid: " + *err);
    VertexSet Z{p.apex};
    for (const auto& path : p.paths) Z.push_back(path.vertices[1]);
    for (Vertex b : p.base) Z.push_back(b);
    return make_set(std::move(Z));
}

bool certify_theta_prism_free(const Graph& g, const DetectOptions& opts) {
    try {
        auto theta = find_theta(g, opts);
        if (theta.witness) throw ContractError("class hypothesis violated: G contains a theta");
        auto prism = find_prism(g, opts);
        if (prism.witness) throw ContractError("class hypothesis violated: G contains a prism");
        return theta.decided && prism.decided;
    } catch (const ResourceError&) {
        return false;
    }
}

SeparatorReport check_pairs(const Graph& g, const VertexSet& Z, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    SeparatorReport r;
    r.Z = Z;
    r.NZ = closed_neighborhood(g, Z);
    r.component_map.assign(static_cast<std::size_t>(g.size()), -1);
    auto comps = components(g, r.NZ);
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (Vertex v : comps[i]) r.component_map[static_cast<std::size_t>(v)] = static_cast<int>(i);
    for (auto [u, v] : pairs) {
        if (set_contains(r.NZ, u) || set_contains(r.NZ, v)) continue;
        if (r.component_map[static_cast<std::size_t>(u)] == r.component_map[static_cast<std::size_t>(v)])
            r.violations.emplace_back(u, v);
        else
            r.separated_pairs.emplace_back(u, v);
    }
    r.vacuous = r.separated_pairs.empty() && r.violations.empty();
    return r;
}

SeparatorReport verify_wheel_separation(const Graph& g, const Wheel& w, const SeparationOptions& opts) {
    VertexSet Z = wheel_Z(g, w);
    auto sectors = wheel_sectors(g, w);
    if (is_special(g, w)) {
        for (const auto& s : sectors)
            if (s.length() >= 2 && s.length() < 3)
                throw ContractError("hypothesis failed: special wheel has a long sector of length " +
                                    std::to_string(s.length()) + " (need at least three)");
    } else if (w.hole.size() < 7) {
        throw ContractError("hypothesis failed: hole has length " + std::to_string(w.hole.size()) +
                            " (need at least seven)");
    }
    bool certified = !opts.check_class || certify_theta_prism_free(g, opts.detect);
    std::vector<VertexSet> interiors;
    for (const auto& s : sectors) interiors.push_back(s.interior());
    VertexSet NZ = closed_neighborhood(g, Z);
    SeparatorReport r = check_pairs(g, Z, cross_pairs(interiors, NZ));
    r.hypotheses_assumed = opts.check_class && !certified;
    return r;
}

SeparatorReport verify_pyramid_separation(const Graph& g, const PyramidWitness& p, const SeparationOptions& opts) {
    VertexSet Z = pyramid_Z(g, p);
    bool certified = !opts.check_class || certify_theta_prism_free(g, opts.detect);
    std::vector<VertexSet> groups;
    for (const auto& path : p.paths) groups.push_back(set_difference(path.vertex_set(), {p.apex}));
    VertexSet NZ = closed_neighborhood(g, Z);
    SeparatorReport r = check_pairs(g, Z, cross_pairs(groups, NZ));
    r.hypotheses_assumed = opts.check_class && !certified;
    return r;
}

}  // namespace tindep
