#include "tindep/generate.hpp"

#include <algorithm>
#include <numeric>

#include "tindep/amicable.hpp"
#include "tindep/detect.hpp"
#include "tindep/error.hpp"
#include "tindep/rng.hpp"
#include "tindep/serialize.hpp"

namespace tindep {

namespace {

struct Builder {
    int n = 0;
    std::vector<Edge> edges;

    Vertex add() { return n++; }
    void edge(Vertex u, Vertex v) { edges.emplace_back(std::min(u, v), std::max(u, v)); }
    /// `count` new vertices in a chain hanging from `from` (no edge when from < 0).
    std::vector<Vertex> chain(Vertex from, int count) {
        std::vector<Vertex> out;
        for (int k = 0; k < count; ++k) {
            Vertex v = add();
            if (from >= 0) edge(from, v);
            out.push_back(from = v);
        }
        return out;
    }
    Graph graph() const { return Graph(n, edges); }
};

/// Random trees of 1-3 vertices, each joined by one edge to an existing vertex.
void add_pendants(Builder& b, int count, int max_n, SplitMix64& rng) {
    for (int k = 0; k < count; ++k) {
        int room = max_n > 0 ? max_n - b.n : 3;
        if (room <= 0) break;
        int size = std::min(rng.range(1, 3), room);
        Vertex root = b.add();
        b.edge(rng.range(0, root - 1), root);
        for (int i = 1; i < size; ++i) {
            Vertex v = b.add();
            b.edge(rng.range(root, v - 1), v);
        }
    }
}

/// Joins `from` to `to` by a path of `len` edges; returns the path including both ends.
PathWitness join(Builder& b, Vertex from, Vertex to, int len) {
    PathWitness p{{from}};
    Vertex prev = from;
    for (int k = 1; k < len; ++k) {
        Vertex v = b.add();
        b.edge(prev, v);
        p.vertices.push_back(prev = v);
    }
    b.edge(prev, to);
    p.vertices.push_back(to);
    return p;
}

int unit_sectors(int hole, const std::vector<int>& pos) {
    int ones = 0;
    for (std::size_t i = 0; i < pos.size(); ++i) ones += (pos[(i + 1) % pos.size()] - pos[i] + hole) % hole == 1;
    return ones;
}

bool special_positions(int hole, const std::vector<int>& pos) {
    if (pos.size() != 3) return false;
    int ones = 0;
    int longs = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        int gap = (pos[(i + 1) % 3] - pos[i] + hole) % hole;
        if (gap == 1) ++ones;
        if (gap >= 2) ++longs;
    }
    return ones == 1 && longs == 2;
}

Generated wheel(const GeneratorSpec& s, SplitMix64& rng) {
    const int L = s.hole;
    if (L < 4) throw InputError("wheel hole must have length at least 4");
    if (s.hub_degree < 3 || s.hub_degree > L) throw InputError("hub degree must be in [3, hole length]");
    std::vector<int> pos;
    if (s.special) {
        if (s.hub_degree != 3) throw InputError("a special wheel has hub degree 3");
        if (s.long_sector < 2) throw InputError("special wheel long sectors must have length at least 2");
        if (L < 1 + 2 * s.long_sector) throw InputError("hole too short for the requested long sectors");
        int a = rng.range(s.long_sector, L - 1 - s.long_sector);
        int off = rng.range(0, L - 1);
        pos = {off, (off + 1) % L, (off + 1 + a) % L};
        std::sort(pos.begin(), pos.end());
    } else {
        std::vector<int> all(static_cast<std::size_t>(L));
        std::iota(all.begin(), all.end(), 0);
        for (int tries = 0;; ++tries) {
            if (tries == 1000) throw InputError("no non-special hub placement found");
            rng.shuffle(all);
            pos.assign(all.begin(), all.begin() + s.hub_degree);
            std::sort(pos.begin(), pos.end());
            // two triangles at the hub would close a prism with a zero-length path
            if (!special_positions(L, pos) && unit_sectors(L, pos) <= 1) break;
        }
    }
    Builder b;
    auto hole = b.chain(-1, L);
    b.edge(hole.front(), hole.back());
    Vertex hub = b.add();
    for (int p : pos) b.edge(hub, hole[static_cast<std::size_t>(p)]);
    add_pendants(b, s.pendants, s.max_n, rng);
    return {b.graph(), to_json(Wheel{hole, hub})};
}

Generated pyramid(const GeneratorSpec& s, SplitMix64& rng) {
    int ones = 0;
    for (int l : s.lengths) {
        if (l < 1) throw InputError("pyramid paths have length at least 1");
        ones += l == 1;
    }
    if (ones > 1) throw InputError("at most one pyramid path may have length 1");
    Builder b;
    PyramidWitness w;
    w.apex = b.add();
    for (auto& v : w.base) v = b.add();
    b.edge(w.base[0], w.base[1]);
    b.edge(w.base[0], w.base[2]);
    b.edge(w.base[1], w.base[2]);
    for (std::size_t i = 0; i < 3; ++i) w.paths[i] = join(b, w.apex, w.base[i], s.lengths[i]);
    add_pendants(b, s.pendants, s.max_n, rng);
    return {b.graph(), to_json(w)};
}

Generated theta(const GeneratorSpec& s, SplitMix64& rng) {
    for (int l : s.lengths)
        if (l < 2) throw InputError("theta paths have length at least 2");
    Builder b;
    ThetaWitness w;
    w.a = b.add();
    w.b = b.add();
    for (std::size_t i = 0; i < 3; ++i) w.paths[i] = join(b, w.a, w.b, s.lengths[i]);
    add_pendants(b, s.pendants, s.max_n, rng);
    return {b.graph(), to_json(w)};
}

Generated prism(const GeneratorSpec& s, SplitMix64& rng) {
    int zeros = 0;
    for (int l : s.lengths) {
        if (l < 0) throw InputError("prism path lengths are nonnegative");
        zeros += l == 0;
    }
    if (zeros > 1) throw InputError("at most one prism path may have length 0");
    if (zeros == 1)
        for (int l : s.lengths)
            if (l == 1) throw InputError("with a length-0 prism path the other two need length at least 2");
    Builder b;
    PrismWitness w;
    for (auto& v : w.a) v = b.add();
    for (std::size_t i = 0; i < 3; ++i) {
        if (s.lengths[i] == 0) {
            w.b[i] = w.a[i];
            w.paths[i] = PathWitness{{w.a[i]}};
        } else {
            w.b[i] = b.add();
            w.paths[i] = join(b, w.a[i], w.b[i], s.lengths[i]);
        }
    }
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
            b.edge(w.a[i], w.a[j]);
            if (w.b[i] != w.a[i] || w.b[j] != w.a[j]) b.edge(w.b[i], w.b[j]);
        }
    std::sort(b.edges.begin(), b.edges.end());
    b.edges.erase(std::unique(b.edges.begin(), b.edges.end()), b.edges.end());
    add_pendants(b, s.pendants, s.max_n, rng);
    return {b.graph(), to_json(w)};
}

Generated connectifier(Builder& b, std::vector<Vertex> leaves, const std::string& kind, const VertexSet& H) {
    std::vector<Vertex> xs;
    for (Vertex leaf : leaves) {
        Vertex x = b.add();
        b.edge(leaf, x);
        xs.push_back(x);
    }
    return {b.graph(), Json{{"type", "connectifier"}, {"kind", kind}, {"H", H}, {"X", xs}}};
}

Generated caterpillar(const GeneratorSpec& s, SplitMix64& rng) {
    if (s.branches < 2) throw InputError("a caterpillar needs at least two branch vertices");
    if (s.leg < 0) throw InputError("leg must be nonnegative");
    Builder b;
    std::vector<Vertex> spine = b.chain(-1, 2 * s.branches + 1);  // end, b1, m1, ..., bk, end
    std::vector<Vertex> leaves;
    auto hang = [&](Vertex from, int len) {
        auto c = b.chain(from, len);
        return c.empty() ? from : c.back();
    };
    leaves.push_back(hang(spine.front(), rng.range(0, s.leg)));
    for (int k = 0; k < s.branches; ++k) leaves.push_back(hang(spine[static_cast<std::size_t>(2 * k + 1)], rng.range(1, s.leg + 1)));
    leaves.push_back(hang(spine.back(), rng.range(0, s.leg)));
    VertexSet H(static_cast<std::size_t>(b.n));
    std::iota(H.begin(), H.end(), 0);
    return connectifier(b, leaves, "caterpillar", H);
}

Generated line_star(const GeneratorSpec& s, SplitMix64& rng) {
    if (s.branches < 3) throw InputError("a subdivided star needs at least three legs");
    if (s.leg < 0) throw InputError("leg must be nonnegative");
    // Vertex k of H is the k-th edge of the star; edges are listed leg by leg from the root.
    std::vector<std::vector<int>> legs;
    int m = 0;
    for (int l = 0; l < s.branches; ++l) {
        int len = rng.range(1, s.leg + 1);
        std::vector<int> ids(static_cast<std::size_t>(len));
        std::iota(ids.begin(), ids.end(), m);
        m += len;
        legs.push_back(std::move(ids));
    }
    Builder b;
    b.n = m;
    std::vector<Vertex> leaves;
    for (std::size_t l = 0; l < legs.size(); ++l) {
        for (std::size_t k = 0; k + 1 < legs[l].size(); ++k) b.edge(legs[l][k], legs[l][k + 1]);
        for (std::size_t o = l + 1; o < legs.size(); ++o) b.edge(legs[l].front(), legs[o].front());
        leaves.push_back(legs[l].back());
    }
    VertexSet H(static_cast<std::size_t>(m));
    std::iota(H.begin(), H.end(), 0);
    return connectifier(b, leaves, "line-of-subdivided-star", H);
}

Generated trisection(const GeneratorSpec& s) {
    GeneratedInstance gi = generate_amicable({s.case_tag, s.leg, s.gap, s.pendants, s.seed});
    Json w = to_json(gi.graph, gi.instance);
    w.erase("graph");
    w["type"] = "trisection";
    w["case"] = s.case_tag;
    return {gi.graph, w};
}

Generated random_ct(const GeneratorSpec& s, SplitMix64& rng) {
    if (s.n < 1 || s.t < 1 || s.density < 0 || s.density > 100 || s.attempts < 1)
        throw InputError("random-Ct needs n >= 1, t >= 1, density in [0, 100], attempts >= 1");
    DetectOptions opts;
    opts.engine = Engine::Auto;
    Generated out;
    for (int a = 1; a <= s.attempts; ++a) {
        Builder b;
        b.n = s.n;
        for (Vertex u = 0; u < s.n; ++u)
            for (Vertex v = u + 1; v < s.n; ++v)
                if (rng.chance(static_cast<std::uint64_t>(s.density), 100)) b.edge(u, v);
        Graph g = b.graph();
        ClassReport r = in_class_Ct(g, s.t, opts);
        if (r.member && r.decided) {
            out.graph = std::move(g);
            out.attempts = a;
            return out;
        }
    }
    out.found = false;
    out.attempts = s.attempts;
    return out;
}

}  // namespace

const std::vector<std::string>& generator_families() {
    static const std::vector<std::string> names{"wheel",
                                                "pyramid",
                                                "theta",
                                                "prism",
                                                "caterpillar-connectifier",
                                                "line-star-connectifier",
                                                "trisection-instance",
                                                "random-Ct"};
    return names;
}

Generated generate(const GeneratorSpec& spec) {
    SplitMix64 rng(spec.seed);
    Generated g;
    const std::string& f = spec.family;
    if (f == "wheel") g = wheel(spec, rng);
    else if (f == "pyramid") g = pyramid(spec, rng);
    else if (f == "theta") g = theta(spec, rng);
    else if (f == "prism") g = prism(spec, rng);
    else if (f == "caterpillar-connectifier") g = caterpillar(spec, rng);
    else if (f == "line-star-connectifier") g = line_star(spec, rng);
    else if (f == "trisection-instance") g = trisection(spec);
    else if (f == "random-Ct") return random_ct(spec, rng);
    else throw InputError("unknown generator family '" + f + "'");
    g.attempts = 1;
    return g;
}

Json generated_to_json(const Generated& g) {
    Json out = graph_to_json(g.graph);
    if (!g.witness.is_null()) out["witness"] = g.witness;
    if (!g.found) out["found"] = false;
    return out;
}

StripStructure thick_strip(const SmoothTree& tree, const std::vector<std::vector<int>>& rung_lengths) {
    if (rung_lengths.size() != tree.edges.size()) throw InputError("one rung list per tree edge");
    StripStructure s;
    s.apex = 0;
    s.tree = tree;
    const std::size_t m = tree.edges.size();
    s.eta_v.assign(static_cast<std::size_t>(tree.n), {});
    s.eta_e.assign(m, {});
    s.eta_ev.assign(m, std::vector<VertexSet>(static_cast<std::size_t>(tree.n)));
    Builder b;
    b.add();
    std::vector<std::vector<std::pair<std::size_t, Vertex>>> at(static_cast<std::size_t>(tree.n));
    for (std::size_t e = 0; e < m; ++e) {
        if (rung_lengths[e].empty()) throw InputError("every tree edge needs a rung");
        auto [u, v] = tree.edges[e];
        for (int len : rung_lengths[e]) {
            if (len < 0) throw InputError("rung lengths are nonnegative");
            auto chain = b.chain(-1, len + 1);
            for (std::size_t k = 0; k + 1 < chain.size(); ++k) b.edge(chain[k], chain[k + 1]);
            s.eta_e[e].insert(s.eta_e[e].end(), chain.begin(), chain.end());
            s.eta_ev[e][static_cast<std::size_t>(u)].push_back(chain.front());
            s.eta_ev[e][static_cast<std::size_t>(v)].push_back(chain.back());
            at[static_cast<std::size_t>(u)].emplace_back(e, chain.front());
            at[static_cast<std::size_t>(v)].emplace_back(e, chain.back());
        }
    }
    auto deg = tree.degrees();
    for (std::size_t v = 0; v < at.size(); ++v) {
        for (std::size_t i = 0; i < at[v].size(); ++i) {
            if (deg[v] == 1) b.edge(0, at[v][i].second);
            for (std::size_t j = i + 1; j < at[v].size(); ++j)
                if (at[v][i].first != at[v][j].first) b.edge(at[v][i].second, at[v][j].second);
        }
    }
    for (auto& row : s.eta_ev)
        for (auto& x : row) x = make_set(x);
    for (auto& x : s.eta_e) x = make_set(x);
    std::sort(b.edges.begin(), b.edges.end());
    b.edges.erase(std::unique(b.edges.begin(), b.edges.end()), b.edges.end());
    s.graph = b.graph();
    return s;
}

}  // namespace tindep
