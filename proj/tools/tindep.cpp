// Command-line front end: one subcommand per library area.
// Exit codes: 0 pass/decided, 1 violation, 2 resource limit, 3 bad input or failed precondition.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <sstream>

#include "tindep/align.hpp"
#include "tindep/amicable.hpp"
#include "tindep/campaign.hpp"
#include "tindep/connect.hpp"
#include "tindep/decomp.hpp"
#include "tindep/detect.hpp"
#include "tindep/error.hpp"
#include "tindep/generate.hpp"
#include "tindep/io.hpp"
#include "tindep/separators.hpp"
#include "tindep/serialize.hpp"
#include "tindep/strip.hpp"

using namespace tindep;

namespace {

enum Exit { kExitPass = 0, kExitViolation = 1, kExitResource = 2, kExitInput = 3 };

std::string g_format = "json";

std::vector<Vertex> parse_list(const std::string& text) {
    std::vector<Vertex> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw InputError("");
        } catch (const std::exception&) {
            throw InputError("bad vertex '" + item + "' in list '" + text + "'");
        }
    }
    return out;
}

std::string list_text(const std::vector<Vertex>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i]);
    return out;
}

/// Prints `doc` as JSON, or `text` in text mode.
void emit(const Json& doc, const std::string& text) {
    if (g_format == "text") std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n");
    else std::cout << doc.dump(2) << '\n';
}

DetectOptions detect_options(const std::string& engine, int cap, std::int64_t budget) {
    static const std::map<std::string, Engine> engines{
        {"subset", Engine::Subset}, {"paths", Engine::Paths}, {"auto", Engine::Auto}, {"heuristic", Engine::Heuristic}};
    auto it = engines.find(engine);
    if (it == engines.end()) throw InputError("unknown engine '" + engine + "'");
    DetectOptions o;
    o.engine = it->second;
    o.cap = cap;
    o.budget = budget;
    return o;
}

// ---- detect ----

struct DetectArgs {
    std::string pattern, file, engine = "auto";
    int t = 3, min_hole = 4, cap = 16;
    std::int64_t budget = 50'000'000;
};

int run_detect(const DetectArgs& a) {
    Graph g = read_graph_file(a.file).graph;
    DetectOptions o = detect_options(a.engine, a.cap, a.budget);
    Json doc{{"pattern", a.pattern}};
    Json witness;
    bool decided = true;
    auto take = [&](const auto& d) {
        decided = d.decided;
        if (d.witness) witness = to_json(*d.witness);
    };
    if (a.pattern == "theta") take(find_theta(g, o));
    else if (a.pattern == "prism") take(find_prism(g, o));
    else if (a.pattern == "pyramid") take(find_pyramid(g, o));
    else if (a.pattern == "k1t") {
        if (auto w = find_k1t(g, a.t)) witness = to_json(*w);
    } else if (a.pattern == "wheel") {
        auto ws = find_wheels(g, a.min_hole, a.budget);
        if (!ws.empty()) witness = to_json(ws.front());
    } else if (a.pattern == "class") {
        ClassReport r = in_class_Ct(g, a.t, o);
        doc["class"] = to_json(r);
        decided = r.decided;
        if (r.theta || r.prism || r.k1t) witness = to_json(r).at("witness");
    } else {
        throw InputError("unknown pattern '" + a.pattern + "'");
    }
    doc["decided"] = decided;
    doc["found"] = !witness.is_null();
    doc["witness"] = witness;
    std::string text = witness.is_null() ? (decided ? "none" : "undecided") : witness.dump();
    emit(doc, text);
    return decided ? kExitPass : kExitResource;
}

// ---- separate ----

int run_separate(const std::string& from, const std::string& file, bool check_class) {
    GraphDocument d = read_graph_file(file);
    SeparationOptions o;
    o.check_class = check_class;
    SeparatorReport r;
    Json witness = d.witness;
    if (from == "wheel") {
        if (witness.is_null()) {
            for (const Wheel& w : find_wheels(d.graph, 4)) {
                bool special = is_special(d.graph, w);
                bool fits = true;
                for (const PathWitness& s : wheel_sectors(d.graph, w))
                    if (special && s.length() != 1 && s.length() < 3) fits = false;
                if ((special && fits) || (!special && w.hole.size() >= 7)) {
                    witness = to_json(w);
                    break;
                }
            }
            if (witness.is_null()) throw ContractError("no wheel meeting the separation hypotheses found");
        }
        r = verify_wheel_separation(d.graph, wheel_from_json(witness), o);
    } else if (from == "pyramid") {
        if (witness.is_null()) {
            DetectOptions det;
            det.engine = Engine::Auto;
            auto p = find_pyramid(d.graph, det);
            if (!p.witness) throw ContractError("graph has no pyramid");
            witness = to_json(*p.witness);
        }
        r = verify_pyramid_separation(d.graph, pyramid_from_json(witness), o);
    } else {
        throw InputError("--from must be wheel or pyramid");
    }
    Json doc = to_json(r);
    doc["witness"] = witness;
    std::ostringstream text;
    text << "Z " << list_text(r.Z) << "\nseparated pairs " << r.separated_pairs.size() << "\nviolations "
         << r.violations.size() << (r.vacuous ? "\nvacuous" : "") << (r.hypotheses_assumed ? "\nclass not certified" : "");
    emit(doc, text.str());
    return r.ok() ? kExitPass : kExitViolation;
}

// ---- strip ----

int run_strip_validate(const std::string& file) {
    Json j;
    try {
        j = Json::parse(read_text_file(file));
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed strip JSON: ") + e.what());
    }
    StripStructure s = strip_from_json(j);
    auto v = validate_strip(s);
    Json doc{{"valid", v.empty()}, {"violations", to_json(v)}};
    std::string text = v.empty() ? "valid" : "invalid";
    if (v.empty()) {
        StripClass c = classify_strip(s);
        doc["class"] = to_json(c);
        text += std::string("\ntame ") + (c.tame ? "yes" : "no") + "\nsubstantial " + (c.substantial ? "yes" : "no") +
                "\nrich " + (c.rich ? "yes" : "no");
    }
    for (const auto& x : v) text += "\n" + x.axiom + ": " + x.detail;
    emit(doc, text);
    return v.empty() ? kExitPass : kExitViolation;
}

int run_strip_pyramid(const std::string& file, bool strict) {
    GraphDocument d = read_graph_file(file);
    if (d.witness.is_null()) throw InputError("graph file needs an embedded pyramid witness");
    StripStructure s = pyramid_to_strip(d.graph, pyramid_from_json(d.witness), strict);
    std::cout << to_json(s).dump(2) << '\n';
    return kExitPass;
}

// ---- align / connect ----

int run_align_classify(const std::string& file, const std::string& path, const std::string& xs) {
    Graph g = read_graph_file(file).graph;
    auto a = classify_alignment(g, PathWitness{parse_list(path)}, make_set(parse_list(xs)));
    Json doc = a ? to_json(*a) : Json{{"alignment", nullptr}};
    emit(doc, a ? to_string(a->kind) + "\norder " + list_text(a->order) : "none");
    return kExitPass;
}

int run_align_extract(const std::string& file, const std::string& path, const std::string& ys, int s, int d,
                      bool no_size, bool maximal) {
    Graph g = read_graph_file(file).graph;
    ExtractOptions o;
    o.require_size = !no_size;
    o.maximal = maximal;
    Extraction e = extract_consistent_alignment(g, PathWitness{parse_list(path)}, make_set(parse_list(ys)), s, d, o);
    emit(to_json(e), "S " + list_text(e.S) + "\n" + to_string(e.alignment.kind));
    return kExitPass;
}

int run_connect_find(const std::string& file, const std::string& set, int h, std::int64_t budget) {
    Graph g = read_graph_file(file).graph;
    ConnectOptions o;
    o.budget = budget;
    ConnectResult r = find_connectifier(g, make_set(parse_list(set)), h, o);
    std::string text = r.found ? to_string(r.found->shape.kind) + "\nS' " + list_text(r.found->S_prime) + "\nH " +
                                     list_text(r.found->shape.H)
                               : (r.exhausted ? "budget exhausted" : "none");
    emit(to_json(r), text);
    if (!r.found && r.exhausted) return kExitResource;
    return kExitPass;
}

int run_connect_classify(const std::string& file, const std::string& hs, const std::string& xs) {
    Graph g = read_graph_file(file).graph;
    auto shape = classify_shape(g, make_set(parse_list(hs)));
    if (!shape) {
        emit(Json{{"shape", nullptr}}, "none");
        return kExitPass;
    }
    Json doc{{"shape", to_json(*shape)}};
    std::string text = to_string(shape->kind);
    if (!xs.empty()) {
        VertexSet X = make_set(parse_list(xs));
        auto problem = check_connectifier(g, *shape, X);
        doc["connectifier"] = !problem;
        if (problem) doc["problem"] = *problem;
        else if (!shape->concentrated()) doc["order"] = connectifier_order(g, *shape, X);
        text += problem ? "\nnot a connectifier: " + *problem : "\nconnectifier";
    }
    emit(doc, text);
    return kExitPass;
}

// ---- amicable ----

AmicableDocument read_instance(const std::string& file) {
    try {
        Json doc = Json::parse(read_text_file(file));
        // Generator output: {n, edges, witness: {type: "trisection", ...}}.
        if (!doc.contains("graph") && doc.contains("witness") && doc.contains("edges")) {
            Json inst = doc.at("witness");
            inst["graph"] = {{"n", doc.at("n")}, {"edges", doc.at("edges")}};
            doc = std::move(inst);
        }
        return amicable_instance_from_json(doc);
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed instance JSON: ") + e.what());
    }
}

int run_amicable(const std::string& file, bool check_class) {
    AmicableDocument d = read_instance(file);
    AmicableOptions o;
    o.check_class = check_class;
    AmicableResult r = amicable_Z(d.graph, d.instance, o);
    std::string text = "case " + r.case_tag + "\nZ " + list_text(r.Z);
    for (const auto& c : r.checks) text += "\n" + c.name + " " + (c.ok ? "ok" : "FAILED");
    emit(to_json(r), text);
    return r.verified ? kExitPass : kExitViolation;
}

int run_amiable(const std::string& file, int x, int t) {
    AmicableDocument d = read_instance(file);
    AmiabilityResult r = amiability_search(d.graph, d.instance.T, x, t);
    emit(to_json(r), (r.connectifier ? "connectifier" : "alignment") + std::string("\nX ") + list_text(r.X) + "\nH " +
                         list_text(r.H));
    return kExitPass;
}

// ---- decompose / mwis ----

int run_decompose(const std::string& file, int s, int kmax, const std::string& oracle_name) {
    Graph g = read_graph_file(file).graph;
    SeparatorOracle oracle;
    if (oracle_name == "neighborhood") oracle = neighborhood_oracle(g, kmax);
    else if (oracle_name == "min-alpha") oracle = min_alpha_oracle(g);
    else throw InputError("--oracle must be neighborhood or min-alpha");
    DecompositionStats stats;
    TreeDecomposition td;
    if (s > 0) {
        td = bs_to_tree_decomposition(g, s, oracle, &stats);
    } else {
        // least s that works
        for (s = 1;; ++s) {
            try {
                stats = {};
                td = bs_to_tree_decomposition(g, s, oracle, &stats);
                break;
            } catch (const ContractError&) {
                if (s >= std::max(1, g.size())) throw;
            }
        }
    }
    auto bad = validate_decomposition(g, td);
    int tia = tia_of(g, td);
    std::map<std::size_t, int> hist;
    for (const VertexSet& b : td.bags) ++hist[b.size()];
    Json histogram = Json::object();
    for (auto [size, count] : hist) histogram[std::to_string(size)] = count;
    Json report{{"s", s},
                {"valid", !bad},
                {"max_bag_alpha", tia},
                {"bound", 5 * s},
                {"bag_size_histogram", histogram},
                {"oracle_calls", stats.oracle_calls},
                {"max_oracle_alpha", stats.max_oracle_alpha}};
    if (bad) report["problem"] = *bad;
    std::ostringstream text;
    text << "nodes " << td.node_count() << "\ns " << s << "\nmax bag alpha " << tia << "\nvalid " << (bad ? "no" : "yes");
    emit(Json{{"decomposition", to_json(td)}, {"report", report}}, text.str());
    return bad || tia > 5 * s ? kExitViolation : kExitPass;
}

int run_mwis(const std::string& file, const std::string& td_file, const std::string& weights_file) {
    Graph g = read_graph_file(file).graph;
    TreeDecomposition td;
    if (td_file.empty()) {
        td = elimination_decomposition(g);
    } else {
        Json j;
        try {
            j = Json::parse(read_text_file(td_file));
        } catch (const Json::exception& e) {
            throw InputError(std::string("malformed decomposition JSON: ") + e.what());
        }
        td = decomposition_from_json(j.contains("decomposition") ? j.at("decomposition") : j);
    }
    std::vector<Rational> w = weights_file.empty() ? std::vector<Rational>(static_cast<std::size_t>(g.size()), 1)
                                                   : parse_weights(read_text_file(weights_file));
    MwisResult r = mwis_on_decomposition(g, td, w);
    emit(to_json(r), "value " + rational_string(r.value) + "\nwitness " + list_text(r.witness));
    return kExitPass;
}

// ---- generate / campaign ----

int run_generate(GeneratorSpec spec, const std::string& lengths, const std::string& out) {
    if (!lengths.empty()) {
        auto ls = parse_list(lengths);
        if (ls.size() != 3) throw InputError("--lengths takes three values");
        spec.lengths = {ls[0], ls[1], ls[2]};
    }
    Generated g = generate(spec);
    std::string body = g_format == "text" ? format_graph_text(g.graph) : generated_to_json(g).dump(2) + "\n";
    if (out.empty()) std::cout << body;
    else write_text_file(out, body);
    return g.found ? kExitPass : kExitResource;
}

int run_campaign_cmd(const CampaignOptions& o, const std::string& replay) {
    if (!replay.empty()) {
        Json a;
        try {
            a = Json::parse(read_text_file(replay));
        } catch (const Json::exception& e) {
            throw InputError(std::string("malformed artifact: ") + e.what());
        }
        TrialResult r = replay_artifact(a);
        emit(Json{{"trial", r.trial}, {"seed", r.seed}, {"status", r.status}, {"detail", r.detail}, {"metrics", r.metrics}},
             r.status + (r.detail.empty() ? "" : ": " + r.detail));
        return r.status == kViolated ? kExitViolation : r.status == kInvalid ? kExitInput : r.status == kResource ? kExitResource : kExitPass;
    }
    CampaignReport rep = run_campaign(o);
    emit(rep.to_json(), rep.to_text());
    if (rep.count(kViolated)) return kExitViolation;
    if (rep.count(kInvalid)) return kExitInput;
    if (rep.count(kResource)) return kExitResource;
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Theta/prism/pyramid structure tools and tree decompositions"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_help_flag("--help", "Print this help message and exit");
    app.add_option("--format", g_format, "Output format")->check(CLI::IsMember({"json", "text"}));
    std::function<int()> action;

    DetectArgs det;
    auto* detect = app.add_subcommand("detect", "Find an induced theta, prism, pyramid, K_{1,t} or wheel");
    detect->add_option("--pattern", det.pattern, "theta|prism|pyramid|k1t|wheel|class")->required();
    detect->add_option("--t", det.t, "t for k1t and class");
    detect->add_option("--min-hole", det.min_hole, "Minimum hole length for wheels");
    detect->add_option("--engine", det.engine, "subset|paths|auto|heuristic");
    detect->add_option("--cap", det.cap, "Subset engine vertex cap");
    detect->add_option("--budget", det.budget, "Search step budget");
    detect->add_option("graph", det.file)->required();
    detect->callback([&] { action = [&] { return run_detect(det); }; });

    std::string from, file, file2, file3;
    bool no_class = false;
    auto* separate = app.add_subcommand("separate", "Verify the separator core of a wheel or pyramid");
    separate->add_option("--from", from, "wheel|pyramid")->required();
    separate->add_flag("--no-class-check", no_class, "Skip theta/prism detection");
    separate->add_option("graph", file)->required();
    separate->callback([&] { action = [&] { return run_separate(from, file, !no_class); }; });

    auto* strip = app.add_subcommand("strip", "Strip-structures");
    strip->require_subcommand(1);
    auto* sv = strip->add_subcommand("validate", "Check axioms S1-S8 and classify");
    sv->add_option("strip", file)->required();
    sv->callback([&] { action = [&] { return run_strip_validate(file); }; });
    bool lenient = false;
    auto* sp = strip->add_subcommand("pyramid", "Strip of the embedded pyramid witness");
    sp->add_flag("--lenient", lenient, "Do not require a trapped apex");
    sp->add_option("graph", file)->required();
    sp->callback([&] { action = [&] { return run_strip_pyramid(file, !lenient); }; });

    std::string path, set;
    int s = 1, d = 1, h = 1;
    bool no_size = false, maximal = false;
    std::int64_t budget = 2'000'000;
    auto* align = app.add_subcommand("align", "Alignments of a set on an induced path");
    align->require_subcommand(1);
    auto* ac = align->add_subcommand("classify", "Classify (P, X)");
    ac->add_option("--path", path, "Comma-separated path")->required();
    ac->add_option("--set", set, "Comma-separated X")->required();
    ac->add_option("graph", file)->required();
    ac->callback([&] { action = [&] { return run_align_classify(file, path, set); }; });
    auto* ae = align->add_subcommand("extract", "Extract a consistent s-subset of Y");
    ae->add_option("--path", path, "Comma-separated path")->required();
    ae->add_option("--set", set, "Comma-separated Y")->required();
    ae->add_option("--s", s, "Subset size")->required();
    ae->add_option("--d", d, "Degree bound")->required();
    ae->add_flag("--no-size-check", no_size, "Skip the |Y| >= 3s(d+1) requirement");
    ae->add_flag("--maximal", maximal, "Keep the whole largest class");
    ae->add_option("graph", file)->required();
    ae->callback([&] { action = [&] { return run_align_extract(file, path, set, s, d, no_size, maximal); }; });

    std::string xs;
    auto* connect = app.add_subcommand("connect", "Connectifiers");
    connect->require_subcommand(1);
    auto* cf = connect->add_subcommand("find", "Search for an h-connectifier of S");
    cf->add_option("--set", set, "Comma-separated S")->required();
    cf->add_option("--h", h, "Number of attached vertices")->required();
    cf->add_option("--budget", budget, "Candidate budget");
    cf->add_option("graph", file)->required();
    cf->callback([&] { action = [&] { return run_connect_find(file, set, h, budget); }; });
    auto* cc = connect->add_subcommand("classify", "Shape of G[H], optionally checked against X");
    cc->add_option("--set", set, "Comma-separated H")->required();
    cc->add_option("--x", xs, "Comma-separated X");
    cc->add_option("graph", file)->required();
    cc->callback([&] { action = [&] { return run_connect_classify(file, set, xs); }; });

    bool check_class = false;
    int x = 7, t = 3;
    auto* amicable = app.add_subcommand("amicable", "Amicability construction");
    amicable->require_subcommand(1);
    auto* ar = amicable->add_subcommand("run", "Build Z for an instance {graph, D1, Y, D2, X, H, t}");
    ar->add_flag("--check-class", check_class, "Run theta/prism detection");
    ar->add_option("instance", file)->required();
    ar->callback([&] { action = [&] { return run_amicable(file, check_class); }; });
    auto* aa = amicable->add_subcommand("search", "Amiability search on a trisection {graph, D1, Y, D2}");
    aa->add_option("--x", x, "Target size");
    aa->add_option("--t", t, "Claw bound");
    aa->add_option("instance", file)->required();
    aa->callback([&] { action = [&] { return run_amiable(file, x, t); }; });

    int ds = 0, kmax = 2;
    std::string oracle = "neighborhood";
    auto* decompose = app.add_subcommand("decompose", "Tree decomposition from balanced separators");
    decompose->add_option("--s", ds, "Oracle alpha bound (0 = least that works)");
    decompose->add_option("--kmax", kmax, "Largest |Y| for neighborhood separators");
    decompose->add_option("--oracle", oracle, "neighborhood|min-alpha");
    decompose->add_option("graph", file)->required();
    decompose->callback([&] { action = [&] { return run_decompose(file, ds, kmax, oracle); }; });

    auto* mwis = app.add_subcommand("mwis", "Maximum weight stable set over a tree decomposition");
    mwis->add_option("--td", file2, "Decomposition JSON (default: min-degree elimination)");
    mwis->add_option("--weights", file3, "Weights file (default: all 1)");
    mwis->add_option("graph", file)->required();
    mwis->callback([&] { action = [&] { return run_mwis(file, file2, file3); }; });

    GeneratorSpec spec;
    std::string lengths, out;
    auto* gen = app.add_subcommand("generate", "Generate an instance");
    gen->add_option("--family", spec.family, "Generator family")->required()->check(CLI::IsMember(generator_families()));
    gen->add_option("--seed", spec.seed);
    gen->add_option("--hole", spec.hole);
    gen->add_option("--hub-degree", spec.hub_degree);
    gen->add_flag("--special", spec.special);
    gen->add_option("--long-sector", spec.long_sector);
    gen->add_option("--lengths", lengths, "Three comma-separated path lengths");
    gen->add_option("--branches", spec.branches);
    gen->add_option("--leg", spec.leg);
    gen->add_option("--gap", spec.gap);
    gen->add_option("--case", spec.case_tag);
    gen->add_option("--n", spec.n);
    gen->add_option("--t", spec.t);
    gen->add_option("--density", spec.density, "Edge probability in percent");
    gen->add_option("--attempts", spec.attempts);
    gen->add_option("--pendants", spec.pendants);
    gen->add_option("--max-n", spec.max_n);
    gen->add_option("-o,--output", out);
    gen->callback([&] { action = [&] { return run_generate(spec, lengths, out); }; });

    CampaignOptions co;
    std::string replay;
    auto* camp = app.add_subcommand("campaign", "Seeded property-test campaign");
    camp->add_option("name", co.name)->check(CLI::IsMember(campaign_names()));
    camp->add_option("--trials", co.trials);
    camp->add_option("--seed", co.seed);
    camp->add_option("--threads", co.threads);
    camp->add_option("--artifacts", co.artifact_dir, "Directory for failure artifacts");
    camp->add_option("--replay", replay, "Re-run one failure artifact");
    camp->callback([&] {
        if (co.name.empty() && replay.empty()) throw CLI::ValidationError("campaign", "name or --replay required");
        action = [&] { return run_campaign_cmd(co, replay); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInput;
    }
    try {
        return action();
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const ContractError& e) {
        std::cerr << "contract error: " << e.what() << '\n';
        return kExitInput;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kExitResource;
    }
}
