#include <algorithm>

#include "tindep/amicable.hpp"
#include "tindep/error.hpp"
#include "tindep/rng.hpp"

namespace tindep {

namespace {

struct Builder {
    int n = 0;
    std::vector<Edge> edges;

    Vertex add() { return n++; }
    void edge(Vertex u, Vertex v) { edges.emplace_back(std::min(u, v), std::max(u, v)); }
    std::vector<Vertex> chain(Vertex from, int count) {
        std::vector<Vertex> out;
        Vertex prev = from;
        for (int k = 0; k < count; ++k) {
            Vertex v = add();
            if (prev >= 0) edge(prev, v);
            out.push_back(v);
            prev = v;
        }
        return out;
    }
};

/// Path with one window per x, `gap` free vertices before, between and after windows.
std::vector<Vertex> windowed_path(Builder& b, const std::vector<Vertex>& xs, AlignKind kind, int gap) {
    std::vector<Vertex> path;
    auto grow = [&](int count) {
        auto more = b.chain(path.empty() ? -1 : path.back(), count);
        path.insert(path.end(), more.begin(), more.end());
    };
    grow(gap);
    for (Vertex x : xs) {
        int w = kind == AlignKind::Spiky ? 1 : kind == AlignKind::Triangular ? 2 : 3;
        grow(w);
        // A wide window sees all three vertices; seeing only its ends would close a theta.
        for (auto it = path.end() - w; it != path.end(); ++it) b.edge(x, *it);
        grow(gap);
    }
    return path;
}

/// Tree as (n, edges) plus its seven leaves in attachment order.
struct Tree {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<Vertex> leaves;

    Vertex add() { return n++; }
    void edge(Vertex u, Vertex v) { edges.emplace_back(std::min(u, v), std::max(u, v)); }
    Vertex hang(Vertex from, int count) {
        Vertex prev = from;
        for (int k = 0; k < count; ++k) {
            Vertex v = add();
            edge(prev, v);
            prev = v;
        }
        return prev;
    }
};

/// Spine end, b_1, m_1, ..., b_5, end with a leg of legs[l] vertices at each b_l.
/// Spine vertices get the smallest ids so the canonical spine ends at the leaves 0 and 6.
Tree caterpillar_tree(const std::array<int, 7>& legs) {
    Tree t;
    std::vector<Vertex> spine{t.add()};
    std::vector<Vertex> branch;
    for (int l = 1; l <= 5; ++l) {
        branch.push_back(t.add());
        if (l < 5) spine.push_back(branch.back()), spine.push_back(t.add());
        else spine.push_back(branch.back());
    }
    spine.push_back(t.add());
    for (std::size_t k = 0; k + 1 < spine.size(); ++k) t.edge(spine[k], spine[k + 1]);
    t.leaves.push_back(t.hang(spine.front(), legs[0] - 1));
    for (int l = 1; l <= 5; ++l) t.leaves.push_back(t.hang(branch[l - 1], legs[l]));
    t.leaves.push_back(t.hang(spine.back(), legs[6] - 1));
    return t;
}

Tree star_tree(const std::array<int, 7>& legs) {
    Tree t;
    Vertex root = t.add();
    for (int l = 0; l < 7; ++l) t.leaves.push_back(t.hang(root, legs[l]));
    return t;
}

/// Copies the tree, or its line graph, into the builder; returns H and the attachment per leaf.
std::pair<VertexSet, std::vector<Vertex>> embed(Builder& b, const Tree& t, bool line) {
    VertexSet H;
    std::vector<Vertex> att;
    if (!line) {
        Vertex base = b.n;
        for (int v = 0; v < t.n; ++v) H.push_back(b.add());
        for (auto [u, v] : t.edges) b.edge(base + u, base + v);
        for (Vertex leaf : t.leaves) att.push_back(base + leaf);
        return {H, att};
    }
    Vertex base = b.n;
    for (std::size_t e = 0; e < t.edges.size(); ++e) H.push_back(b.add());
    for (std::size_t a = 0; a < t.edges.size(); ++a)
        for (std::size_t c = a + 1; c < t.edges.size(); ++c) {
            auto [u, v] = t.edges[a];
            auto [w, z] = t.edges[c];
            if (u == w || u == z || v == w || v == z) b.edge(base + static_cast<int>(a), base + static_cast<int>(c));
        }
    for (Vertex leaf : t.leaves)
        for (std::size_t e = 0; e < t.edges.size(); ++e)
            if (t.edges[e].first == leaf || t.edges[e].second == leaf) att.push_back(base + static_cast<int>(e));
    return {H, att};
}

}  // namespace

GeneratedInstance generate_amicable(const AmicableGenSpec& spec) {
    const auto& tags = amicable_case_tags();
    if (std::find(tags.begin(), tags.end(), spec.case_tag) == tags.end())
        throw InputError("unknown amicable case: " + spec.case_tag);
    if (spec.leg < 0 || spec.gap < 1 || spec.decorate < 0) throw InputError("leg >= 0, gap >= 1, decorate >= 0 required");
    SplitMix64 rng(spec.seed);
    const std::string& tag = spec.case_tag;

    AlignKind k1 = AlignKind::Triangular, k2 = AlignKind::Mixed;
    if (tag == "lineCat-spiky" || tag == "lineStar-spiky") k1 = AlignKind::Spiky;
    if (tag == "lineCat-wide" || tag == "lineStar-wide-pyramid" || tag == "lineStar-wide-specialwheel") k1 = AlignKind::Wide;
    if (tag == "align-specialwheel") {
        bool flip = rng.chance(1, 2);
        k1 = flip ? AlignKind::Spiky : AlignKind::Triangular;
        k2 = flip ? AlignKind::Triangular : AlignKind::Spiky;
    }
    if (tag == "align-nonspecialwheel") {
        static const std::pair<AlignKind, AlignKind> pairs[] = {
            {AlignKind::Wide, AlignKind::Spiky},      {AlignKind::Wide, AlignKind::Triangular},
            {AlignKind::Wide, AlignKind::Wide},       {AlignKind::Spiky, AlignKind::Wide},
            {AlignKind::Triangular, AlignKind::Wide}};
        auto pick = pairs[rng.uniform(5)];
        k1 = pick.first;
        k2 = pick.second;
    }

    Builder b;
    std::vector<Vertex> xs;
    for (int l = 0; l < 7; ++l) xs.push_back(b.add());
    auto d1 = windowed_path(b, xs, k1, spec.gap);

    std::array<int, 7> legs{};
    for (int& l : legs) l = 1 + spec.leg + rng.range(0, 1);
    VertexSet H;
    if (tag.rfind("align", 0) == 0) {
        auto hp = windowed_path(b, xs, k2, spec.gap + rng.range(0, 1));
        H = make_set(hp);
    } else {
        bool line = tag.rfind("line", 0) == 0;
        bool star = tag == "star-pyramid" || tag.rfind("lineStar", 0) == 0;
        if (tag == "lineStar-wide-specialwheel") legs[3] = 1;
        if (tag == "lineStar-wide-pyramid") legs[3] = std::max(legs[3], 2);
        Tree t = star ? star_tree(legs) : caterpillar_tree(legs);
        auto [h, att] = embed(b, t, line);
        H = h;
        for (int l = 0; l < 7; ++l) b.edge(xs[l], att[l]);
    }
    VertexSet D2 = H;
    for (int k = 0; k < spec.decorate; ++k) {
        Vertex at = H[rng.uniform(H.size())];
        auto tail = b.chain(at, rng.range(1, 2));
        D2.insert(D2.end(), tail.begin(), tail.end());
    }
    GeneratedInstance out;
    out.graph = Graph(b.n, b.edges);
    out.instance.T.D1.vertices = d1;
    out.instance.T.Y = make_set(xs);
    out.instance.T.D2 = make_set(D2);
    out.instance.X = make_set(xs);
    out.instance.H = H;
    out.instance.t = k1t_threshold(out.graph);
    return out;
}

}  // namespace tindep
