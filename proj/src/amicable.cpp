#include "tindep/amicable.hpp"

#include <algorithm>

#include "tindep/error.hpp"

namespace tindep {

std::optional<std::string> check_trisection(const Graph& g, const Trisection& T, int s) {
    g.check_set(T.D1.vertices);
    g.check_set(T.Y);
    g.check_set(T.D2);
    VertexSet D1 = T.D1.vertex_set(), Y = make_set(T.Y), D2 = make_set(T.D2);
    if (D1.size() != T.D1.vertices.size()) return "D1 repeats a vertex";
    if (!is_separation(g, {D1, Y, D2})) return "(D1, Y, D2) is not a separation";
    if (!is_stable(g, Y)) return "Y is not stable";
    if (static_cast<int>(Y.size()) != s) return "|Y| = " + std::to_string(Y.size()) + ", expected " + std::to_string(s);
    if (open_neighborhood(g, D1) != Y) return "N(D1) differs from Y";
    if (open_neighborhood(g, D2) != Y) return "N(D2) differs from Y";
    if (!is_induced_path(g, T.D1.vertices)) return "D1 is not an induced path";
    for (Vertex y : Y) {
        bool found = false;
        for (Vertex d : D1) found = found || neighbors_in(g, d, Y) == VertexSet{y};
        if (!found) return "no vertex of D1 sees only " + std::to_string(y) + " in Y";
    }
    return std::nullopt;
}

namespace {

bool same_or_reversed(const std::vector<Vertex>& a, const std::vector<Vertex>& b, bool& reversed) {
    if (a == b) {
        reversed = false;
        return true;
    }
    if (std::equal(a.begin(), a.end(), b.rbegin(), b.rend())) {
        reversed = true;
        return true;
    }
    return false;
}

/// Union of shortest paths inside H between the attachments of X.
std::optional<ShapeH> restrict_shape(const Graph& g, const ShapeH& shape, const std::vector<Vertex>& X) {
    std::vector<Vertex> att;
    for (Vertex x : X) att.push_back(attachment(g, shape, x));
    VertexSet Hs;
    for (std::size_t a = 0; a < att.size(); ++a)
        for (std::size_t b = a; b < att.size(); ++b) {
            auto p = shortest_path(g, att[a], {att[b]}, shape.H);
            if (!p) return std::nullopt;
            Hs.insert(Hs.end(), p->begin(), p->end());
        }
    auto out = classify_shape(g, make_set(Hs));
    if (!out || check_connectifier(g, *out, make_set(X))) return std::nullopt;
    return out;
}

/// Grows an induced path inside `allowed` at either end by vertices that see S.
std::vector<Vertex> extend_path(const Graph& g, std::vector<Vertex> path, const VertexSet& allowed, const VertexSet& S) {
    for (bool grew = true; grew;) {
        grew = false;
        for (int side = 0; side < 2 && !grew; ++side) {
            Vertex end = side == 0 ? path.front() : path.back();
            for (Vertex w : g.neighbors(end)) {
                if (!set_contains(allowed, w) || std::find(path.begin(), path.end(), w) != path.end()) continue;
                if (neighbors_in(g, w, S).empty()) continue;
                std::vector<Vertex> next = path;
                if (side == 0) next.insert(next.begin(), w);
                else next.push_back(w);
                if (!is_induced_path(g, next)) continue;
                path = next;
                grew = true;
                break;
            }
        }
    }
    return path;
}

}  // namespace

AmiabilityResult amiability_search(const Graph& g, const Trisection& T, int x, int t, const AmiabilityOptions& opts) {
    if (x < 1 || t < 1) throw InputError("x and t must be positive");
    if (auto bad = check_trisection(g, T, static_cast<int>(T.Y.size()))) throw ContractError("hypothesis failed: " + *bad);
    if (!is_connected(g, T.D2)) throw ContractError("hypothesis failed: D2 is not connected");

    ExtractOptions ex;
    ex.require_size = false;
    ex.maximal = true;
    auto stage1 = extract_consistent_alignment(g, T.D1, T.Y, 1, t, ex);
    const VertexSet& S = stage1.S;
    if (static_cast<int>(S.size()) < x)
        throw ResourceError("consistent alignment on D1 has only " + std::to_string(S.size()) + " vertices");

    // The connectifier search runs in G[D2 ∪ S] so that H stays inside D2.
    auto sub = induced_subgraph(g, set_union(make_set(T.D2), S));
    VertexSet localS;
    for (Vertex v : S) localS.push_back(sub.to_local[v]);
    ConnectOptions copts = opts.connect;
    copts.allow_singleton = false;
    std::optional<ConnectFound> found;
    bool exhausted = false;
    int lo = std::max(x, opts.min_h > 0 ? opts.min_h : x);
    for (int h = static_cast<int>(S.size()); h >= lo && !found; --h) {
        auto r = find_connectifier(sub.graph, localS, h, copts);
        exhausted = exhausted || r.exhausted;
        found = r.found;
    }
    if (!found) {
        if (exhausted) throw ResourceError("connectifier search budget exhausted");
        throw ResourceError("no connectifier or path found for any h >= " + std::to_string(lo));
    }
    auto lift = [&](const VertexSet& local) {
        VertexSet out;
        for (Vertex v : local) out.push_back(sub.to_parent[v]);
        return make_set(out);
    };
    VertexSet Sp = lift(found->S_prime);
    auto shape = classify_shape(g, lift(found->shape.H));
    if (!shape) throw ContractError("lifted shape failed to classify");

    AmiabilityResult res;
    auto d1_order = [&](const VertexSet& set) { return classify_alignment(g, T.D1, set)->order; };
    if (found->path_case) {
        PathWitness hp{extend_path(g, shape->P, make_set(T.D2), Sp)};
        auto stage3 = extract_consistent_alignment(g, hp, Sp, 1, t, ex);
        auto a = classify_alignment(g, hp, stage3.S);
        auto es = common_monotone_subsequence(d1_order(stage3.S), a->order, x);
        if (!es) throw ResourceError("no common monotone subsequence of length " + std::to_string(x));
        res.X = es->first;
        res.H = hp.vertex_set();
        res.h_kind = a->kind;
    } else if (shape->concentrated()) {
        std::vector<Vertex> pick = d1_order(Sp);
        pick.resize(static_cast<std::size_t>(x));
        auto r = restrict_shape(g, *shape, pick);
        if (!r) throw ContractError("restricting the concentrated connectifier failed");
        res.X = pick;
        res.shape = r;
        res.H = r->H;
        // A single attachment leaves a one-vertex H, which is a (spiky) alignment.
        res.connectifier = r->kind != ShapeKind::Singleton;
    } else {
        auto es = common_monotone_subsequence(d1_order(Sp), connectifier_order(g, *shape, Sp), x);
        if (!es) throw ResourceError("no common monotone subsequence of length " + std::to_string(x));
        auto r = restrict_shape(g, *shape, es->first);
        if (!r) throw ContractError("restricting the connectifier failed");
        res.X = es->first;
        res.shape = r;
        res.H = r->H;
        res.connectifier = r->kind != ShapeKind::Singleton;
    }
    // Re-validate the three bullets.
    auto a1 = classify_alignment(g, T.D1, make_set(res.X));
    if (!a1 || !a1->consistent()) throw ContractError("(D1, X) is not a consistent alignment");
    res.X = a1->order;
    res.d1_kind = a1->kind;
    bool rev = false;
    if (res.connectifier) {
        if (res.shape->kind == ShapeKind::Singleton) throw ContractError("connectifier with |H| = 1");
        if (!res.shape->concentrated() && !same_or_reversed(connectifier_order(g, *res.shape, make_set(res.X)), res.X, rev))
            throw ContractError("orders on X differ");
    } else {
        res.shape.reset();
        auto s2 = classify_shape(g, res.H);
        auto a2 = classify_alignment(g, PathWitness{s2->P}, make_set(res.X));
        if (!a2 || !a2->consistent() || !same_or_reversed(a2->order, res.X, rev))
            throw ContractError("(H, X) is not a consistent alignment with the same order");
        res.h_kind = a2->kind;
    }
    return res;
}

const std::vector<std::string>& amicable_case_tags() {
    static const std::vector<std::string> tags{
        "caterpillar-pyramid",        "lineCat-spiky",           "lineCat-wide",
        "star-pyramid",               "lineStar-spiky",          "lineStar-wide-pyramid",
        "lineStar-wide-specialwheel", "align-specialwheel",      "align-nonspecialwheel"};
    return tags;
}

int k1t_threshold(const Graph& g) {
    int best = 0;
    for (Vertex v = 0; v < g.size(); ++v) best = std::max(best, stable_number(g, g.neighbors(v)));
    return best + 1;
}

namespace {

using Seq = std::vector<Vertex>;

void append(Seq& s, const Seq& more) {
    for (Vertex v : more)
        if (s.empty() || s.back() != v) s.push_back(v);
}

Seq seg(const std::vector<Vertex>& p, int a, int b) {
    Seq out;
    if (a <= b)
        for (int k = a; k <= b; ++k) out.push_back(p[k]);
    else
        for (int k = a; k >= b; --k) out.push_back(p[k]);
    return out;
}

Seq rev(Seq s) {
    std::reverse(s.begin(), s.end());
    return s;
}

int index_of(const std::vector<Vertex>& p, Vertex v) {
    auto it = std::find(p.begin(), p.end(), v);
    if (it == p.end()) throw ContractError("vertex " + std::to_string(v) + " is not on the path");
    return static_cast<int>(it - p.begin());
}

[[noreturn]] void forced(const Graph& g, const std::string& why, const AmicableOptions& opts) {
    std::string pattern = "no theta or prism found within the detection caps";
    try {
        auto theta = find_theta(g, opts.detect);
        if (theta.witness) {
            pattern = "theta";
            for (Vertex v : theta.witness->vertex_set()) pattern += " " + std::to_string(v);
        } else {
            auto prism = find_prism(g, opts.detect);
            if (prism.witness) {
                pattern = "prism";
                for (Vertex v : prism.witness->vertex_set()) pattern += " " + std::to_string(v);
            }
        }
    } catch (const ResourceError&) {
        pattern = "detection budget exhausted";
    }
    throw ContractError("class hypothesis violated: " + why + " (" + pattern + ")");
}

PyramidWitness make_pyramid(Vertex apex, const std::array<Seq, 3>& paths) {
    PyramidWitness p;
    p.apex = apex;
    for (int k = 0; k < 3; ++k) {
        p.paths[k].vertices = paths[k];
        p.base[k] = paths[k].back();
    }
    return p;
}

}  // namespace

AmicableResult amicable_Z(const Graph& g, const AmicabilityInstance& inst, const AmicableOptions& opts) {
    const Trisection& T = inst.T;
    if (auto bad = check_trisection(g, T, static_cast<int>(T.Y.size()))) throw ContractError("hypothesis failed: " + *bad);
    VertexSet Xs = make_set(inst.X), Hs = make_set(inst.H);
    if (Xs.size() != 7) throw ContractError("hypothesis failed: X must have seven vertices");
    if (!is_subset(Xs, make_set(T.Y))) throw ContractError("hypothesis failed: X is not a subset of Y");
    if (Hs.empty() || !is_subset(Hs, make_set(T.D2)) || !is_connected(g, Hs))
        throw ContractError("hypothesis failed: H is not a connected subgraph of D2");
    auto a1 = classify_alignment(g, T.D1, Xs);
    if (!a1 || !a1->consistent()) throw ContractError("hypothesis failed: (D1, X) is not a consistent alignment");

    AmicableResult res;
    // The alignment order is taken along D1 as given, so the first vertex of D1 seeing X sees x_1.
    const Seq& d = T.D1.vertices;
    const Seq& x = a1->order;
    res.X = x;
    res.D1 = d;
    const int i = a1->windows[0].second, j = a1->windows[6].first;
    const int i2 = a1->windows[3].first, j2 = a1->windows[3].second;
    res.i = i + 1;
    res.j = j + 1;
    res.i2 = i2 + 1;
    res.j2 = j2 + 1;
    if (!(i + 2 < i2 && i2 <= j2 && j2 < j - 2)) throw ContractError("hypothesis failed: i+2 < i' <= j' < j-2");
    const AlignKind k1 = a1->kind;

    auto shape = classify_shape(g, Hs);
    bool connectifier = shape && !check_connectifier(g, *shape, Xs);
    bool want_special = false, is_wheel = false;
    if (connectifier) {
        ShapeH sh = *shape;
        if (sh.kind == ShapeKind::Singleton) throw ContractError("hypothesis failed: connectifier with |H| = 1");
        if (!sh.concentrated()) {
            bool reversed = false;
            if (!same_or_reversed(connectifier_order(g, sh, Xs), x, reversed))
                throw ContractError("hypothesis failed: (H, X) and (D1, X) order X differently");
            if (reversed) std::reverse(sh.P.begin(), sh.P.end());
        }
        const Seq& P = sh.P;
        VertexSet near = set_intersection(closed_neighborhood(g, make_set(P)), Hs);
        std::array<Seq, 7> L;
        std::array<Vertex, 7> s{}, p{}, q{}, h{};
        for (int l = 0; l < 7; ++l) {
            Vertex r = attachment(g, sh, x[l]);
            L[l] = *shortest_path(g, r, near, Hs);
            s[l] = L[l].back();
            if (set_contains(make_set(P), s[l])) {
                p[l] = q[l] = h[l] = s[l];
                continue;
            }
            std::vector<int> at;
            for (std::size_t k = 0; k < P.size(); ++k)
                if (g.adjacent(s[l], P[k])) at.push_back(static_cast<int>(k));
            p[l] = P[at.front()];
            q[l] = P[at.back()];
            h[l] = p[l];
        }
        auto Pseg = [&](Vertex a, Vertex b) { return seg(P, index_of(P, a), index_of(P, b)); };
        std::array<Seq, 3> paths;
        switch (sh.kind) {
            case ShapeKind::Caterpillar: {
                if (k1 != AlignKind::Triangular) forced(g, "caterpillar H needs a triangular (D1, X)", opts);
                res.case_tag = "caterpillar-pyramid";
                append(paths[0], Pseg(p[3], p[0]));
                append(paths[0], rev(L[0]));
                append(paths[0], {x[0]});
                append(paths[0], seg(d, i, i2));
                append(paths[1], {p[3]});
                append(paths[1], rev(L[3]));
                append(paths[1], {x[3]});
                append(paths[2], Pseg(p[3], p[6]));
                append(paths[2], rev(L[6]));
                append(paths[2], {x[6]});
                append(paths[2], seg(d, j, j2));
                res.witness = make_pyramid(p[3], paths);
                break;
            }
            case ShapeKind::LineCaterpillar: {
                if (k1 == AlignKind::Triangular) forced(g, "line-of-caterpillar H with a triangular (D1, X)", opts);
                bool spiky = k1 == AlignKind::Spiky;
                res.case_tag = spiky ? "lineCat-spiky" : "lineCat-wide";
                Vertex apex = spiky ? d[i2] : x[3];
                paths[0] = spiky ? Seq{} : Seq{x[3]};
                append(paths[0], seg(d, i2, i));
                append(paths[0], {x[0]});
                append(paths[0], L[0]);
                append(paths[0], Pseg(q[0], p[3]));
                paths[1] = spiky ? Seq{d[i2], x[3]} : Seq{x[3]};
                append(paths[1], L[3]);
                paths[2] = spiky ? Seq{} : Seq{x[3]};
                append(paths[2], seg(d, spiky ? i2 : j2, j));
                append(paths[2], {x[6]});
                append(paths[2], L[6]);
                append(paths[2], Pseg(p[6], q[3]));
                res.witness = make_pyramid(apex, paths);
                break;
            }
            case ShapeKind::SubdividedStar: {
                if (k1 != AlignKind::Triangular) forced(g, "subdivided-star H needs a triangular (D1, X)", opts);
                if (j2 - i2 != 1) throw ContractError("triangular alignment with j' - i' != 1");
                res.case_tag = "star-pyramid";
                Vertex root = P.front();
                for (int k = 0; k < 3; ++k) {
                    int l = 3 * k;
                    paths[k] = {root};
                    append(paths[k], rev(L[l]));
                    append(paths[k], {x[l]});
                }
                append(paths[0], seg(d, i, i2));
                append(paths[2], seg(d, j, j2));
                res.witness = make_pyramid(root, paths);
                break;
            }
            case ShapeKind::LineSubdividedStar: {
                if (k1 == AlignKind::Triangular) forced(g, "line-of-subdivided-star H with a triangular (D1, X)", opts);
                Vertex r4 = attachment(g, sh, x[3]);
                if (k1 == AlignKind::Wide && r4 == s[3] && s[3] == h[3]) {
                    res.case_tag = "lineStar-wide-specialwheel";
                    Seq C{x[3]};
                    append(C, seg(d, i2, i));
                    append(C, {x[0]});
                    append(C, L[0]);
                    append(C, {h[0], h[6]});
                    append(C, rev(L[6]));
                    append(C, {x[6]});
                    append(C, seg(d, j, j2));
                    res.witness = Wheel{C, h[3]};
                    is_wheel = want_special = true;
                    break;
                }
                bool spiky = k1 == AlignKind::Spiky;
                res.case_tag = spiky ? "lineStar-spiky" : "lineStar-wide-pyramid";
                Vertex apex = spiky ? d[i2] : x[3];
                paths[0] = spiky ? Seq{} : Seq{x[3]};
                append(paths[0], seg(d, i2, i));
                append(paths[0], {x[0]});
                append(paths[0], L[0]);
                append(paths[0], {h[0]});
                paths[1] = spiky ? Seq{d[i2], x[3]} : Seq{x[3]};
                append(paths[1], L[3]);
                append(paths[1], {h[3]});
                paths[2] = spiky ? Seq{} : Seq{x[3]};
                append(paths[2], seg(d, spiky ? i2 : j2, j));
                append(paths[2], {x[6]});
                append(paths[2], L[6]);
                append(paths[2], {h[6]});
                res.witness = make_pyramid(apex, paths);
                break;
            }
            case ShapeKind::Singleton: break;
        }
    } else {
        if (!shape || !shape->is_path())
            throw ContractError("hypothesis failed: H is neither a connectifier for X nor a path");
        Seq hp = shape->P;
        auto a2 = classify_alignment(g, PathWitness{hp}, Xs);
        if (!a2 || !a2->consistent()) throw ContractError("hypothesis failed: (H, X) is not a consistent alignment");
        bool reversed = false;
        if (!same_or_reversed(a2->order, x, reversed))
            throw ContractError("hypothesis failed: (H, X) and (D1, X) order X differently");
        if (reversed) {
            std::reverse(hp.begin(), hp.end());
            a2 = classify_alignment(g, PathWitness{hp}, Xs);
        }
        const AlignKind k2 = a2->kind;
        bool mixed_pair = (k1 == AlignKind::Spiky && k2 == AlignKind::Triangular) ||
                          (k1 == AlignKind::Triangular && k2 == AlignKind::Spiky);
        if (!mixed_pair && k1 != AlignKind::Wide && k2 != AlignKind::Wide)
            forced(g, "alignments of kinds " + to_string(k1) + " and " + to_string(k2), opts);
        want_special = mixed_pair;
        is_wheel = true;
        res.case_tag = mixed_pair ? "align-specialwheel" : "align-nonspecialwheel";
        Seq C{d[i], x[0]};
        append(C, seg(hp, a2->windows[0].second, a2->windows[6].first));
        append(C, {x[6]});
        append(C, seg(d, j, i + 1));
        res.witness = Wheel{C, x[3]};
    }

    auto check = [&](const std::string& name, bool ok) { res.checks.push_back({name, ok}); };
    if (is_wheel) {
        const Wheel& w = std::get<Wheel>(res.witness);
        auto bad = check_wheel(g, w);
        check("witness", !bad && is_special(g, w) == want_special);
        if (bad) throw ContractError("constructed wheel is invalid: " + *bad);
        res.Z = wheel_Z(g, w);
    } else {
        const PyramidWitness& pw = std::get<PyramidWitness>(res.witness);
        auto bad = check_pyramid(g, pw);
        check("witness", !bad);
        if (bad) forced(g, "constructed pyramid is invalid: " + *bad, opts);
        res.Z = pyramid_Z(g, pw);
    }
    VertexSet allowed = make_set(T.D2);
    for (int k = i + 2; k <= j - 2; ++k) allowed.push_back(d[k]);
    allowed.push_back(x[3]);
    allowed = make_set(allowed);
    check("containment", is_subset(res.Z, allowed));
    check("size", static_cast<int>(res.Z.size()) <= std::max(2 * inst.t, 7));
    VertexSet NZ = closed_neighborhood(g, res.Z);
    bool outside = !set_contains(NZ, d[i]) && !set_contains(NZ, d[j]);
    check("separation", outside && separates(g, NZ, {d[i]}, {d[j]}));
    VertexSet left = make_set(seg(d, 0, i)), right = make_set(seg(d, j, static_cast<int>(d.size()) - 1));
    check("consequence", disjoint(left, NZ) && disjoint(right, NZ) && separates(g, NZ, left, right));
    SeparationOptions so;
    so.check_class = opts.check_class;
    so.detect = opts.detect;
    try {
        res.report = is_wheel ? verify_wheel_separation(g, std::get<Wheel>(res.witness), so)
                              : verify_pyramid_separation(g, std::get<PyramidWitness>(res.witness), so);
        check("verifier", res.report.ok());
    } catch (const ContractError&) {
        check("verifier", false);
    }
    res.verified = std::all_of(res.checks.begin(), res.checks.end(), [](const AmicableCheck& c) { return c.ok; });
    return res;
}

}  // namespace tindep
