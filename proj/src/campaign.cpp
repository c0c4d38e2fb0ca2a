#include "tindep/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "tindep/amicable.hpp"
#include "tindep/decomp.hpp"
#include "tindep/detect.hpp"
#include "tindep/error.hpp"
#include "tindep/generate.hpp"
#include "tindep/rng.hpp"
#include "tindep/separators.hpp"
#include "tindep/serialize.hpp"
#include "tindep/strip.hpp"

namespace tindep {

namespace {

TrialResult result(const char* status, std::string detail = {}, Json metrics = Json::object()) {
    TrialResult r;
    r.status = status;
    r.detail = std::move(detail);
    r.metrics = std::move(metrics);
    return r;
}

Graph random_graph(int n, int num, int den, SplitMix64& rng) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.chance(static_cast<std::uint64_t>(num), static_cast<std::uint64_t>(den))) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph random_tree(int n, SplitMix64& rng) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(rng.range(0, v - 1), v);
    return Graph(n, edges);
}

Graph instance_graph(const Json& inst) { return parse_graph_json(inst.at("graph")).graph; }

// ---- separators ----

Json make_wheel(bool special, SplitMix64& rng, std::uint64_t seed) {
    GeneratorSpec s;
    s.family = "wheel";
    s.seed = seed;
    s.hole = special ? rng.range(10, 15) : rng.range(7, 15);
    s.special = special;
    s.hub_degree = special || rng.chance(2, 3) ? 3 : rng.range(4, std::max(4, std::min(5, s.hole / 2)));
    s.long_sector = 3;
    s.pendants = rng.range(0, std::min(4, 15 - s.hole));
    s.max_n = 16;
    Generated g = generate(s);
    return {{"graph", graph_to_json(g.graph)}, {"witness", g.witness}};
}

TrialResult separation_result(const SeparatorReport& r, Json metrics) {
    metrics["pairs"] = r.separated_pairs.size() + r.violations.size();
    metrics["Z"] = r.Z.size();
    if (!r.ok()) {
        auto [u, v] = r.violations.front();
        return result(kViolated, "pair " + std::to_string(u) + "," + std::to_string(v) + " not separated",
                      std::move(metrics));
    }
    if (r.hypotheses_assumed) return result(kSkipped, "class membership undecided", std::move(metrics));
    if (r.vacuous) return result(kVacuous, {}, std::move(metrics));
    return result(kVerified, {}, std::move(metrics));
}

TrialResult run_wheel(const Json& inst) {
    Graph g = instance_graph(inst);
    Wheel w = wheel_from_json(inst.at("witness"));
    SeparationOptions opts;
    return separation_result(verify_wheel_separation(g, w, opts),
                             {{"n", g.size()}, {"hole", w.hole.size()}, {"special", is_special(g, w)}});
}

std::array<int, 3> pyramid_lengths(SplitMix64& rng, int lo, int hi) {
    for (;;) {
        std::array<int, 3> ls{rng.range(lo, hi), rng.range(lo, hi), rng.range(lo, hi)};
        if (std::count(ls.begin(), ls.end(), 1) <= 1) return ls;
    }
}

Json make_pyramid(SplitMix64& rng, std::uint64_t seed, int lo, int hi, int pendants) {
    GeneratorSpec s;
    s.family = "pyramid";
    s.seed = seed;
    s.lengths = pyramid_lengths(rng, lo, hi);
    s.pendants = rng.range(0, pendants);
    Generated g = generate(s);
    return {{"graph", graph_to_json(g.graph)}, {"witness", g.witness}};
}

TrialResult run_pyramid(const Json& inst) {
    Graph g = instance_graph(inst);
    PyramidWitness p = pyramid_from_json(inst.at("witness"));
    SeparationOptions opts;
    return separation_result(verify_pyramid_separation(g, p, opts), {{"n", g.size()}});
}

// ---- strips ----

SmoothTree random_smooth_tree(SplitMix64& rng) {
    switch (rng.range(0, 2)) {
    case 0: return {4, {{0, 1}, {0, 2}, {0, 3}}};
    case 1: return {5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}};
    default: return {6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}}};
    }
}

/// η(e,u) ⊆ η(e,v) implies equality, for every edge.
bool nested_ends_equal(const StripStructure& s) {
    for (std::size_t e = 0; e < s.tree.edges.size(); ++e) {
        auto [u, v] = s.tree.edges[e];
        const VertexSet& a = s.eta_ev[e][static_cast<std::size_t>(u)];
        const VertexSet& b = s.eta_ev[e][static_cast<std::size_t>(v)];
        if ((is_subset(a, b) || is_subset(b, a)) && a != b) return false;
    }
    return true;
}

void drop_everywhere(StripStructure& s, const VertexSet& gone) {
    for (auto& x : s.eta_v) x = set_difference(x, gone);
    for (auto& x : s.eta_e) x = set_difference(x, gone);
    for (auto& row : s.eta_ev)
        for (auto& x : row) x = set_difference(x, gone);
}

StripStructure mutate(const StripStructure& base, SplitMix64& rng, std::string& op) {
    StripStructure s = base;
    const int m = static_cast<int>(s.tree.edges.size());
    int e = rng.range(0, m - 1);
    auto [u, v] = s.tree.edges[static_cast<std::size_t>(e)];
    Vertex end = rng.chance(1, 2) ? u : v;
    const VertexSet& eta = s.eta_e[static_cast<std::size_t>(e)];
    VertexSet& at = s.eta_ev[static_cast<std::size_t>(e)][static_cast<std::size_t>(end)];
    switch (rng.range(0, 3)) {
    case 0: {
        op = "drop-rung";
        auto rs = rungs(s, e).rungs;
        drop_everywhere(s, rs[static_cast<std::size_t>(rng.range(0, static_cast<int>(rs.size()) - 1))].vertex_set());
        break;
    }
    case 1:
        op = "drop-vertex";
        drop_everywhere(s, {eta[static_cast<std::size_t>(rng.range(0, static_cast<int>(eta.size()) - 1))]});
        break;
    case 2:
        op = "grow-end";
        at = set_union(at, {eta[static_cast<std::size_t>(rng.range(0, static_cast<int>(eta.size()) - 1))]});
        break;
    default:
        op = "shrink-end";
        at.erase(at.begin() + rng.range(0, static_cast<int>(at.size()) - 1));
        break;
    }
    return s;
}

Json make_strip(SplitMix64& rng, std::uint64_t seed) {
    Json inst = make_pyramid(rng, seed, 1, 6, 2);
    SmoothTree tree = random_smooth_tree(rng);
    Json rl = Json::array();
    for (std::size_t e = 0; e < tree.edges.size(); ++e) {
        Json lens = Json::array();
        for (int k = rng.range(1, 2); k > 0; --k) lens.push_back(rng.range(0, 3));
        rl.push_back(lens);
    }
    Json edges = Json::array();
    for (auto [a, b] : tree.edges) edges.push_back({a, b});
    inst["thick"] = {{"tree", {{"n", tree.n}, {"edges", edges}}}, {"rungs", rl}, {"mutation_seed", rng.next()}};
    return inst;
}

TrialResult run_strip(const Json& inst) {
    Graph g = instance_graph(inst);
    PyramidWitness p = pyramid_from_json(inst.at("witness"));
    Json metrics = Json::object();
    std::string pyramid_status = "skipped";
    StripStructure s;
    bool trapped = true;
    try {
        s = pyramid_to_strip(g, p, true);
    } catch (const ContractError&) {
        trapped = false;
    }
    if (trapped) {
        auto v = validate_strip(s);
        if (!v.empty()) return result(kViolated, "pyramid strip fails " + v.front().axiom + ": " + v.front().detail);
        StripClass c = classify_strip(s);
        if (!c.tame || !c.substantial || !c.rich) return result(kViolated, "pyramid strip is not tame, substantial and rich");
        pyramid_status = "verified";
    }
    metrics["pyramid"] = pyramid_status;

    const Json& thick = inst.at("thick");
    SmoothTree tree;
    tree.n = thick.at("tree").at("n").get<int>();
    for (const Json& e : thick.at("tree").at("edges")) tree.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    std::vector<std::vector<int>> lens;
    for (const Json& row : thick.at("rungs")) lens.push_back(row.get<std::vector<int>>());
    StripStructure base = thick_strip(tree, lens);
    if (auto v = validate_strip(base); !v.empty()) return result(kInvalid, "thick strip fails " + v.front().axiom);
    if (!nested_ends_equal(base)) return result(kViolated, "nested rung ends differ on a valid strip");
    SplitMix64 rng(thick.at("mutation_seed").get<std::uint64_t>());
    int valid = 0;
    Json ops = Json::array();
    for (int k = 0; k < 3; ++k) {
        std::string op;
        StripStructure mutant = mutate(base, rng, op);
        if (!validate_strip(mutant).empty()) continue;
        ++valid;
        ops.push_back(op);
        if (!nested_ends_equal(mutant)) return result(kViolated, op + ": nested rung ends differ on a valid strip");
        for (auto [lo, hi] : {std::pair{&mutant, &base}, std::pair{&base, &mutant}})
            if (strip_leq(*lo, *hi) && classify_strip(*lo).substantial && !classify_strip(*hi).substantial)
                return result(kViolated, op + ": substantial strip below a non-substantial one");
    }
    metrics["valid_mutants"] = valid;
    metrics["mutations"] = ops;
    if (!trapped && valid == 0) return result(kSkipped, "apex not trapped and no valid mutant", std::move(metrics));
    return result(kVerified, trapped ? "" : "apex not trapped", std::move(metrics));
}

// ---- amicability ----

Json make_amicable(int index, SplitMix64& rng, std::uint64_t seed) {
    const auto& tags = amicable_case_tags();
    AmicableGenSpec spec;
    spec.case_tag = tags[static_cast<std::size_t>(index) % tags.size()];
    spec.leg = rng.range(0, 2);
    spec.gap = rng.range(2, 3);
    spec.decorate = rng.range(0, 2);
    spec.seed = seed;
    GeneratedInstance gi = generate_amicable(spec);
    Json inst = to_json(gi.graph, gi.instance);
    inst["case"] = spec.case_tag;
    return inst;
}

TrialResult run_amicable(const Json& inst) {
    AmicableDocument d = amicable_instance_from_json(inst);
    std::string expected = inst.at("case").get<std::string>();
    AmicableResult r = amicable_Z(d.graph, d.instance);
    Json metrics{{"case", r.case_tag}, {"Z", r.Z.size()}, {"n", d.graph.size()}, {"t", d.instance.t}};
    if (r.case_tag != expected) return result(kViolated, "fired " + r.case_tag + ", built for " + expected, metrics);
    for (const auto& c : r.checks)
        if (!c.ok) return result(kViolated, "check failed: " + c.name, metrics);
    if (!r.verified) return result(kViolated, "not verified", metrics);
    return result(kVerified, {}, std::move(metrics));
}

// ---- decomposition ----

Json make_decomp(int index, SplitMix64& rng) {
    int n = rng.range(1, 12);
    Graph g = index % 4 == 0 ? random_tree(n, rng) : random_graph(n, rng.range(1, 4), 8, rng);
    return {{"graph", graph_to_json(g)}, {"tree", index % 4 == 0}};
}

/// Least s for which the recursion with the min-α oracle succeeds.
std::pair<int, TreeDecomposition> least_s_decomposition(const Graph& g) {
    SeparatorOracle o = min_alpha_oracle(g);
    for (int s = 1;; ++s) {
        try {
            return {s, bs_to_tree_decomposition(g, s, o)};
        } catch (const ContractError&) {
            if (s >= g.size()) throw;
        }
    }
}

TrialResult run_decomp(const Json& inst) {
    Graph g = instance_graph(inst);
    auto [s, td] = least_s_decomposition(g);
    Json metrics{{"n", g.size()}, {"s", s}, {"bags", td.node_count()}};
    if (auto bad = validate_decomposition(g, td)) return result(kViolated, "invalid decomposition: " + *bad, metrics);
    int tia = tia_of(g, td);
    metrics["tia"] = tia;
    if (tia > 5 * s) return result(kViolated, "bag alpha above 5s", metrics);
    if (inst.value("tree", false) && tia > 5) return result(kViolated, "tree decomposition above 5", metrics);
    if (g.size() <= 8) {
        int exact = exact_tia_small(g);
        metrics["exact"] = exact;
        if (tia < exact || tia > 5 * exact || s > exact)
            return result(kViolated, "produced width outside [exact, 5 exact]", metrics);
    }
    return result(kVerified, {}, std::move(metrics));
}

// ---- star cover ----

Json make_star(SplitMix64& rng) {
    int t = rng.range(2, 4);
    int n = rng.range(5, 14);
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    rng.shuffle(pairs);
    std::vector<Edge> edges;
    for (Edge e : pairs) {
        if (!rng.chance(1, 2)) continue;
        edges.push_back(e);
        Graph g(n, edges);
        if (stable_number(g, g.neighbors(e.first)) >= t || stable_number(g, g.neighbors(e.second)) >= t) edges.pop_back();
    }
    std::vector<Vertex> ys(static_cast<std::size_t>(n));
    std::iota(ys.begin(), ys.end(), 0);
    rng.shuffle(ys);
    ys.resize(static_cast<std::size_t>(rng.range(0, 3)));
    std::vector<Vertex> support(static_cast<std::size_t>(n));
    std::iota(support.begin(), support.end(), 0);
    rng.shuffle(support);
    support.resize(static_cast<std::size_t>(rng.range(1, n)));
    return {{"graph", graph_to_json(Graph(n, edges))}, {"t", t}, {"Y", make_set(ys)}, {"support", make_set(support)}};
}

TrialResult run_star(const Json& inst) {
    Graph g = instance_graph(inst);
    int t = inst.at("t").get<int>();
    if (find_k1t(g, t)) return result(kInvalid, "graph contains K_{1,t}");
    VertexSet y = set_from_json(inst.at("Y"));
    StarAlphaBound b = star_alpha_bound(g, y, t);
    Json metrics{{"n", g.size()}, {"t", t}, {"Y", y.size()}, {"alpha", b.alpha}, {"bound", b.bound}};
    if (!b.ok) return result(kViolated, "alpha(N[Y]) exceeds |Y| t", metrics);
    WeightFn w = WeightFn::uniform_on(g.size(), set_from_json(inst.at("support")));
    SeparatorSearch found = balanced_separator_search(g, w, 3);
    if (found.Y) {
        StarAlphaBound fb = star_alpha_bound(g, *found.Y, t);
        metrics["search_Y"] = found.Y->size();
        metrics["search_alpha"] = fb.alpha;
        if (!fb.ok) return result(kViolated, "alpha(N[Y]) exceeds |Y| t for the balanced Y", metrics);
    }
    return result(kVerified, {}, std::move(metrics));
}

// ---- MWIS ----

Json make_mwis(int index, SplitMix64& rng) {
    int n = rng.range(1, 18);
    Graph g = random_graph(n, rng.range(1, 5), 10, rng);
    Json w = Json::array();
    for (int v = 0; v < n; ++v) w.push_back(rational_string(Rational(rng.range(0, 20), rng.range(1, 6))));
    return {{"graph", graph_to_json(g)}, {"weights", w}, {"decomposition", index % 2 == 0 && n <= 12 ? "separator" : "elimination"}};
}

Rational mwis_by_subsets(const Graph& g, const std::vector<Rational>& w) {
    const int n = g.size();
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : g.neighbors(v)) nbr[static_cast<std::size_t>(v)] |= 1u << u;
    std::vector<Rational> best(std::size_t{1} << n);
    for (std::uint32_t m = 1; m < (1u << n); ++m) {
        int v = std::countr_zero(m);
        std::uint32_t rest = m & (m - 1);
        Rational with = w[static_cast<std::size_t>(v)] + best[rest & ~nbr[static_cast<std::size_t>(v)]];
        best[m] = std::max(best[rest], with);
    }
    return best.back();
}

TrialResult run_mwis(const Json& inst) {
    Graph g = instance_graph(inst);
    std::vector<Rational> w = parse_weights(inst.at("weights").dump());
    bool sep = inst.at("decomposition") == "separator";
    TreeDecomposition td = sep ? least_s_decomposition(g).second : elimination_decomposition(g);
    MwisResult r = mwis_on_decomposition(g, td, w);
    Rational expect = mwis_by_subsets(g, w);
    Json metrics{{"n", g.size()}, {"value", rational_string(r.value)}, {"bags", td.node_count()}};
    if (r.value != expect) return result(kViolated, "DP value differs from subset enumeration " + rational_string(expect), metrics);
    Rational sum = 0;
    for (Vertex v : r.witness) sum += w[static_cast<std::size_t>(v)];
    if (!is_stable(g, r.witness) || sum != r.value) return result(kViolated, "witness does not realize the value", metrics);
    return result(kVerified, {}, std::move(metrics));
}

struct Campaign {
    std::function<Json(int, SplitMix64&, std::uint64_t)> make;
    std::function<TrialResult(const Json&)> run;
};

const std::map<std::string, Campaign>& registry() {
    static const std::map<std::string, Campaign> r{
        {"wheel-sep", {[](int, SplitMix64& rng, std::uint64_t s) { return make_wheel(false, rng, s); }, run_wheel}},
        {"special-wheel-sep", {[](int, SplitMix64& rng, std::uint64_t s) { return make_wheel(true, rng, s); }, run_wheel}},
        {"pyramid-sep", {[](int, SplitMix64& rng, std::uint64_t s) { return make_pyramid(rng, s, 3, 6, 3); }, run_pyramid}},
        {"strip", {[](int, SplitMix64& rng, std::uint64_t s) { return make_strip(rng, s); }, run_strip}},
        {"amicable", {make_amicable, run_amicable}},
        {"decomp-pipeline", {[](int i, SplitMix64& rng, std::uint64_t) { return make_decomp(i, rng); }, run_decomp}},
        {"star-bound", {[](int, SplitMix64& rng, std::uint64_t) { return make_star(rng); }, run_star}},
        {"mwis", {[](int i, SplitMix64& rng, std::uint64_t) { return make_mwis(i, rng); }, run_mwis}},
    };
    return r;
}

const Campaign& lookup(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end()) throw InputError("unknown campaign '" + name + "'");
    return it->second;
}

}  // namespace

const std::vector<std::string>& campaign_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [k, v] : registry()) out.push_back(k);
        return out;
    }();
    return names;
}

Json make_instance(const std::string& name, int index, std::uint64_t trial_seed) {
    SplitMix64 rng(trial_seed);
    return lookup(name).make(index, rng, trial_seed);
}

TrialResult run_instance(const std::string& name, const Json& instance) {
    const Campaign& c = lookup(name);
    try {
        return c.run(instance);
    } catch (const ContractError& e) {
        return result(kInvalid, e.what());
    } catch (const InputError& e) {
        return result(kInvalid, e.what());
    } catch (const Json::exception& e) {
        return result(kInvalid, e.what());
    } catch (const ResourceError& e) {
        return result(kResource, e.what());
    }
}

CampaignReport run_campaign(const CampaignOptions& opts) {
    lookup(opts.name);
    if (opts.trials < 0) throw InputError("trials must be nonnegative");
    CampaignReport report;
    report.name = opts.name;
    report.seed = opts.seed;
    report.results.resize(static_cast<std::size_t>(opts.trials));
    std::vector<Json> failing(static_cast<std::size_t>(opts.trials));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next++; i < opts.trials; i = next++) {
            std::uint64_t seed = SplitMix64::derive(opts.seed, static_cast<std::uint64_t>(i));
            Json inst;
            TrialResult r;
            try {
                inst = make_instance(opts.name, i, seed);
                r = run_instance(opts.name, inst);
            } catch (const std::exception& e) {
                r = result(kInvalid, std::string("generation failed: ") + e.what());
            }
            r.trial = i;
            r.seed = seed;
            if (r.status == kViolated || r.status == kInvalid) failing[static_cast<std::size_t>(i)] = std::move(inst);
            report.results[static_cast<std::size_t>(i)] = std::move(r);
        }
    };
    int threads = opts.threads > 0 ? opts.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    threads = std::max(1, std::min(threads, opts.trials));
    std::vector<std::thread> pool;
    for (int k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    if (!opts.artifact_dir.empty()) {
        for (const TrialResult& r : report.results) {
            if (r.status != kViolated && r.status != kInvalid) continue;
            std::filesystem::create_directories(opts.artifact_dir);
            std::string path = (std::filesystem::path(opts.artifact_dir) /
                                (opts.name + "-trial" + std::to_string(r.trial) + ".json"))
                                   .string();
            Json doc{{"campaign", opts.name},
                     {"trial", r.trial},
                     {"seed", r.seed},
                     {"status", r.status},
                     {"detail", r.detail},
                     {"instance", failing[static_cast<std::size_t>(r.trial)]}};
            write_text_file(path, doc.dump(2) + "\n");
            report.artifacts.push_back(path);
        }
    }
    return report;
}

TrialResult replay_artifact(const Json& artifact) {
    if (!artifact.is_object() || !artifact.contains("campaign") || !artifact.contains("instance"))
        throw InputError("artifact needs \"campaign\" and \"instance\"");
    std::string name = artifact.at("campaign").get<std::string>();
    TrialResult r;
    if (artifact.at("instance").is_null()) r = result(kInvalid, "artifact has no instance");
    else r = run_instance(name, artifact.at("instance"));
    r.trial = artifact.value("trial", 0);
    r.seed = artifact.value("seed", std::uint64_t{0});
    return r;
}

int CampaignReport::count(const std::string& status) const {
    return static_cast<int>(std::count_if(results.begin(), results.end(),
                                          [&](const TrialResult& r) { return r.status == status; }));
}

Json CampaignReport::to_json() const {
    Json counts = Json::object();
    for (const char* s : {kVerified, kViolated, kVacuous, kSkipped, kInvalid, kResource}) counts[s] = count(s);
    Json rows = Json::array();
    for (const TrialResult& r : results) {
        Json row{{"trial", r.trial}, {"seed", r.seed}, {"status", r.status}};
        if (!r.detail.empty()) row["detail"] = r.detail;
        row["metrics"] = r.metrics;
        rows.push_back(std::move(row));
    }
    return {{"campaign", name},
            {"seed", seed},
            {"trials", results.size()},
            {"counts", counts},
            {"passed", passed()},
            {"results", rows},
            {"artifacts", artifacts}};
}

std::string CampaignReport::to_text() const {
    std::ostringstream out;
    out << "campaign " << name << " seed " << seed << " trials " << results.size() << '\n';
    for (const char* s : {kVerified, kViolated, kVacuous, kSkipped, kInvalid, kResource}) out << "  " << s << ' ' << count(s) << '\n';
    for (const TrialResult& r : results)
        if (r.status != kVerified && r.status != kVacuous)
            out << "  trial " << r.trial << ' ' << r.status << (r.detail.empty() ? "" : ": " + r.detail) << '\n';
    for (const std::string& a : artifacts) out << "  artifact " << a << '\n';
    out << (passed() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

}  // namespace tindep
