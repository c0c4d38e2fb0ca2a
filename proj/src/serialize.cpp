#include "tindep/serialize.hpp"

#include <sstream>

#include "tindep/error.hpp"

namespace tindep {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

Vertex vertex_from_json(const Json& j) {
    if (!j.is_number_integer()) throw InputError("vertex must be an integer, got " + j.dump());
    return j.get<Vertex>();
}

template <std::size_t N>
std::array<Vertex, N> triple_from_json(const Json& j) {
    if (!j.is_array() || j.size() != N) throw InputError("expected " + std::to_string(N) + " vertices, got " + j.dump());
    std::array<Vertex, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = vertex_from_json(j[i]);
    return out;
}

std::array<PathWitness, 3> paths_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) throw InputError("expected three paths");
    return {path_from_json(j[0]), path_from_json(j[1]), path_from_json(j[2])};
}

Json paths_to_json(const std::array<PathWitness, 3>& p) {
    return Json::array({path_to_json(p[0]), path_to_json(p[1]), path_to_json(p[2])});
}

Json pairs_to_json(const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    Json out = Json::array();
    for (auto [u, v] : pairs) out.push_back({u, v});
    return out;
}

}  // namespace

Json path_to_json(const PathWitness& p) { return p.vertices; }

std::vector<Vertex> list_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("expected a vertex list, got " + j.dump());
    std::vector<Vertex> out;
    for (const Json& v : j) out.push_back(vertex_from_json(v));
    return out;
}

PathWitness path_from_json(const Json& j) { return PathWitness{list_from_json(j)}; }

VertexSet set_from_json(const Json& j) {
    std::vector<Vertex> list = list_from_json(j);
    VertexSet out = make_set(list);
    if (out.size() != list.size()) throw InputError("vertex set repeats a vertex: " + j.dump());
    return out;
}

Json to_json(const ThetaWitness& w) {
    return {{"type", "theta"}, {"a", w.a}, {"b", w.b}, {"paths", paths_to_json(w.paths)}};
}
Json to_json(const PrismWitness& w) {
    return {{"type", "prism"}, {"a", w.a}, {"b", w.b}, {"paths", paths_to_json(w.paths)}};
}
Json to_json(const PyramidWitness& w) {
    return {{"type", "pyramid"}, {"apex", w.apex}, {"base", w.base}, {"paths", paths_to_json(w.paths)}};
}
Json to_json(const K1tWitness& w) { return {{"type", "k1t"}, {"center", w.center}, {"leaves", w.leaves}}; }
Json to_json(const Wheel& w) { return {{"type", "wheel"}, {"hole", w.hole}, {"hub", w.hub}}; }

ThetaWitness theta_from_json(const Json& j) {
    ThetaWitness w;
    w.a = vertex_from_json(field(j, "a"));
    w.b = vertex_from_json(field(j, "b"));
    w.paths = paths_from_json(field(j, "paths"));
    return w;
}
PrismWitness prism_from_json(const Json& j) {
    PrismWitness w;
    w.a = triple_from_json<3>(field(j, "a"));
    w.b = triple_from_json<3>(field(j, "b"));
    w.paths = paths_from_json(field(j, "paths"));
    return w;
}
PyramidWitness pyramid_from_json(const Json& j) {
    PyramidWitness w;
    w.apex = vertex_from_json(field(j, "apex"));
    w.base = triple_from_json<3>(field(j, "base"));
    w.paths = paths_from_json(field(j, "paths"));
    return w;
}
K1tWitness k1t_from_json(const Json& j) {
    return K1tWitness{vertex_from_json(field(j, "center")), set_from_json(field(j, "leaves"))};
}
Wheel wheel_from_json(const Json& j) {
    return Wheel{list_from_json(field(j, "hole")), vertex_from_json(field(j, "hub"))};
}

Json to_json(const SeparatorReport& r) {
    return {{"Z", r.Z},
            {"NZ", r.NZ},
            {"separated_pairs", pairs_to_json(r.separated_pairs)},
            {"violations", pairs_to_json(r.violations)},
            {"hypotheses_assumed", r.hypotheses_assumed},
            {"vacuous", r.vacuous},
            {"ok", r.ok()}};
}

Json to_json(const ClassReport& r) {
    Json out{{"member", r.member}, {"decided", r.decided}, {"violation", r.violation}};
    if (r.theta) out["witness"] = to_json(*r.theta);
    if (r.prism) out["witness"] = to_json(*r.prism);
    if (r.k1t) out["witness"] = to_json(*r.k1t);
    return out;
}

Json to_json(const StripStructure& s) {
    Json tree_edges = Json::array();
    for (auto [u, v] : s.tree.edges) tree_edges.push_back({u, v});
    return {{"graph", graph_to_json(s.graph)},
            {"apex", s.apex},
            {"tree", {{"n", s.tree.n}, {"edges", tree_edges}}},
            {"eta_v", s.eta_v},
            {"eta_e", s.eta_e},
            {"eta_ev", s.eta_ev}};
}

StripStructure strip_from_json(const Json& j) {
    StripStructure s;
    s.graph = parse_graph_json(field(j, "graph")).graph;
    s.apex = vertex_from_json(field(j, "apex"));
    const Json& tree = field(j, "tree");
    try {
        s.tree.n = field(tree, "n").get<int>();
        for (const Json& e : field(tree, "edges")) {
            if (!e.is_array() || e.size() != 2) throw InputError("tree edge must be a pair");
            s.tree.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    } catch (const Json::exception& ex) {
        throw InputError(std::string("strip tree: ") + ex.what());
    }
    for (const Json& x : field(j, "eta_v")) s.eta_v.push_back(set_from_json(x));
    for (const Json& x : field(j, "eta_e")) s.eta_e.push_back(set_from_json(x));
    for (const Json& row : field(j, "eta_ev")) {
        if (!row.is_array()) throw InputError("eta_ev rows must be arrays");
        std::vector<VertexSet> out;
        for (const Json& x : row) out.push_back(set_from_json(x));
        s.eta_ev.push_back(std::move(out));
    }
    return s;
}

Json to_json(const std::vector<StripViolation>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back({{"axiom", x.axiom}, {"detail", x.detail}});
    return out;
}

Json to_json(const StripClass& c) { return {{"tame", c.tame}, {"substantial", c.substantial}, {"rich", c.rich}}; }

Json to_json(const Alignment& a) {
    Json windows = Json::array();
    Json kinds = Json::array();
    for (auto [l, r] : a.windows) windows.push_back({l, r});
    for (AlignKind k : a.kinds) kinds.push_back(to_string(k));
    return {{"P", path_to_json(a.P)},
            {"order", a.order},
            {"windows", windows},
            {"kinds", kinds},
            {"kind", to_string(a.kind)},
            {"consistent", a.consistent()}};
}

Json to_json(const Extraction& e) {
    return {{"S", e.S}, {"alignment", to_json(e.alignment)}, {"stable", e.stable}};
}

Json to_json(const ShapeH& s) {
    Json out{{"kind", to_string(s.kind)}, {"H", s.H}, {"P", s.P}, {"legs", s.legs}, {"Z", s.Z},
             {"concentrated", s.concentrated()}};
    if (s.preimage_n > 0) {
        Json edges = Json::array();
        for (auto [u, v] : s.preimage_edges) edges.push_back({u, v});
        out["preimage"] = {{"n", s.preimage_n}, {"edges", edges}};
    }
    return out;
}

Json to_json(const ConnectResult& r) {
    Json out{{"found", r.found.has_value()}, {"exhausted", r.exhausted}};
    if (r.found) {
        out["S_prime"] = r.found->S_prime;
        out["shape"] = to_json(r.found->shape);
        out["path_case"] = r.found->path_case;
    }
    return out;
}

Json to_json(const Graph& g, const AmicabilityInstance& inst) {
    return {{"graph", graph_to_json(g)},
            {"D1", path_to_json(inst.T.D1)},
            {"Y", inst.T.Y},
            {"D2", inst.T.D2},
            {"X", inst.X},
            {"H", inst.H},
            {"t", inst.t}};
}

AmicableDocument amicable_instance_from_json(const Json& j) {
    AmicableDocument d;
    d.graph = parse_graph_json(field(j, "graph")).graph;
    d.instance.T.D1 = path_from_json(field(j, "D1"));
    d.instance.T.Y = set_from_json(field(j, "Y"));
    d.instance.T.D2 = set_from_json(field(j, "D2"));
    d.instance.X = j.contains("X") ? set_from_json(j.at("X")) : VertexSet{};
    d.instance.H = j.contains("H") ? set_from_json(j.at("H")) : VertexSet{};
    if (j.contains("t")) {
        if (!j.at("t").is_number_integer()) throw InputError("\"t\" must be an integer");
        d.instance.t = j.at("t").get<int>();
    }
    return d;
}

Json to_json(const AmicableResult& r) {
    Json checks = Json::object();
    for (const auto& c : r.checks) checks[c.name] = c.ok;
    Json witness = std::visit([](const auto& w) { return to_json(w); }, r.witness);
    return {{"case", r.case_tag},
            {"Z", r.Z},
            {"witness", witness},
            {"X", r.X},
            {"D1", r.D1},
            {"i", r.i},
            {"j", r.j},
            {"i_prime", r.i2},
            {"j_prime", r.j2},
            {"checks", checks},
            {"report", to_json(r.report)},
            {"verified", r.verified}};
}

Json to_json(const AmiabilityResult& r) {
    Json out{{"X", r.X},
             {"H", r.H},
             {"connectifier", r.connectifier},
             {"d1_kind", to_string(r.d1_kind)}};
    if (r.shape) out["shape"] = to_json(*r.shape);
    if (!r.connectifier) out["h_kind"] = to_string(r.h_kind);
    return out;
}

Json to_json(const TreeDecomposition& td) {
    Json nodes = Json::array();
    for (int i = 0; i < td.node_count(); ++i) nodes.push_back({{"id", i}, {"bag", td.bags[static_cast<std::size_t>(i)]}});
    Json edges = Json::array();
    for (auto [a, b] : td.edges) edges.push_back({a, b});
    return {{"nodes", nodes}, {"edges", edges}};
}

TreeDecomposition decomposition_from_json(const Json& j) {
    TreeDecomposition td;
    const Json& nodes = field(j, "nodes");
    if (!nodes.is_array()) throw InputError("\"nodes\" must be an array");
    td.bags.resize(nodes.size());
    std::vector<char> seen(nodes.size(), 0);
    for (const Json& node : nodes) {
        const Json& id = field(node, "id");
        if (!id.is_number_integer() || id.get<long>() < 0 || id.get<std::size_t>() >= nodes.size())
            throw InputError("node id out of range: " + id.dump());
        auto k = id.get<std::size_t>();
        if (seen[k]) throw InputError("duplicate node id " + id.dump());
        seen[k] = 1;
        td.bags[k] = set_from_json(field(node, "bag"));
    }
    for (const Json& e : field(j, "edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw InputError("tree edge must be a pair of node ids");
        td.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return td;
}

Json rational_to_json(const Rational& r) {
    if (denominator(r) == 1 && abs(r) < Rational(1'000'000'000)) return numerator(r).convert_to<long long>();
    return rational_string(r);
}

Json to_json(const MwisResult& r) { return {{"value", rational_to_json(r.value)}, {"witness", r.witness}}; }

std::vector<Rational> parse_weights(std::string_view text) {
    std::vector<Rational> out;
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '[') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::exception& ex) {
            throw InputError(std::string("malformed weights JSON: ") + ex.what());
        }
        for (const Json& x : j) {
            if (x.is_number_integer()) out.emplace_back(x.get<long long>());
            else if (x.is_string()) out.push_back(parse_rational(x.get<std::string>()));
            else throw InputError("weight must be an integer or a \"p/q\" string, got " + x.dump());
        }
    } else {
        std::istringstream in{std::string(text)};
        std::string token;
        while (in >> token) out.push_back(parse_rational(token));
    }
    for (const Rational& r : out)
        if (r < 0) throw InputError("negative weight " + rational_string(r));
    return out;
}

}  // namespace tindep
