#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tindep/campaign.hpp"
#include "tindep/decomp.hpp"
#include "tindep/detect.hpp"
#include "tindep/error.hpp"
#include "tindep/generate.hpp"
#include "tindep/io.hpp"
#include "tindep/separators.hpp"
#include "tindep/serialize.hpp"

namespace py = pybind11;
using namespace tindep;

namespace {

// Structured results cross the boundary as JSON text; the Python package decodes them.
std::string dump(const Json& j) { return j.dump(); }

Engine engine_of(const std::string& name) {
    if (name == "subset") return Engine::Subset;
    if (name == "paths") return Engine::Paths;
    if (name == "auto") return Engine::Auto;
    if (name == "heuristic") return Engine::Heuristic;
    throw InputError("unknown engine '" + name + "'");
}

template <class W>
std::optional<std::string> found(const Detection<W>& d) {
    if (!d.decided) throw ResourceError("heuristic search found nothing; absence not decided");
    if (!d.witness) return std::nullopt;
    return dump(to_json(*d.witness));
}

std::optional<std::string> detect(const Graph& g, const std::string& pattern, int t, const std::string& engine) {
    DetectOptions o;
    o.engine = engine_of(engine);
    if (pattern == "theta") return found(find_theta(g, o));
    if (pattern == "prism") return found(find_prism(g, o));
    if (pattern == "pyramid") return found(find_pyramid(g, o));
    if (pattern == "k1t") {
        auto w = find_k1t(g, t);
        return w ? std::optional(dump(to_json(*w))) : std::nullopt;
    }
    throw InputError("unknown pattern '" + pattern + "'");
}

std::string separate(const Graph& g, const std::string& kind, const std::string& witness, bool check_class) {
    SeparationOptions o;
    o.check_class = check_class;
    Json w = Json::parse(witness);
    if (kind == "wheel") return dump(to_json(verify_wheel_separation(g, wheel_from_json(w), o)));
    if (kind == "pyramid") return dump(to_json(verify_pyramid_separation(g, pyramid_from_json(w), o)));
    throw InputError("unknown structure '" + kind + "'");
}

std::string decompose(const Graph& g, int s, const std::string& oracle, int kmax) {
    SeparatorOracle o;
    if (oracle == "min-alpha") o = min_alpha_oracle(g);
    else if (oracle == "neighborhood") o = neighborhood_oracle(g, kmax);
    else throw InputError("unknown oracle '" + oracle + "'");
    DecompositionStats stats;
    TreeDecomposition td;
    int used = s;
    if (s > 0) {
        td = bs_to_tree_decomposition(g, s, o, &stats);
    } else {
        for (used = 1;; ++used) {
            try {
                stats = {};
                td = bs_to_tree_decomposition(g, used, o, &stats);
                break;
            } catch (const ContractError&) {
                if (used >= std::max(1, g.size())) throw;
            }
        }
    }
    return dump({{"decomposition", to_json(td)},
                 {"s", used},
                 {"tia", tia_of(g, td)},
                 {"oracle_calls", stats.oracle_calls},
                 {"max_oracle_alpha", stats.max_oracle_alpha}});
}

std::string mwis(const Graph& g, const std::vector<std::string>& weights, const std::optional<std::string>& td) {
    std::vector<Rational> w;
    for (const auto& x : weights) {
        auto one = parse_weights(x);
        if (one.size() != 1) throw InputError("each weight must be a single number");
        w.push_back(one.front());
    }
    TreeDecomposition d = td ? decomposition_from_json(Json::parse(*td)) : elimination_decomposition(g);
    return dump(to_json(mwis_on_decomposition(g, d, w)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Native core of tindep";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph(n, edges); }), py::arg("n"),
             py::arg("edges"))
        .def_static("parse", [](const std::string& text) { return parse_graph_document(text).graph; })
        .def_property_readonly("n", &Graph::size)
        .def_property_readonly("m", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("neighbors", [](const Graph& g, Vertex v) {
            g.check_vertex(v);
            return g.neighbors(v);
        })
        .def("adjacent", [](const Graph& g, Vertex u, Vertex v) {
            g.check_vertex(u);
            g.check_vertex(v);
            return g.adjacent(u, v);
        })
        .def("to_json", [](const Graph& g) { return dump(graph_to_json(g)); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.size()) + " m=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("detect", &detect, py::arg("graph"), py::arg("pattern"), py::arg("t") = 3, py::arg("engine") = "auto");
    m.def(
        "in_class",
        [](const Graph& g, int t, const std::string& engine) {
            DetectOptions o;
            o.engine = engine_of(engine);
            return dump(to_json(in_class_Ct(g, t, o)));
        },
        py::arg("graph"), py::arg("t"), py::arg("engine") = "auto");
    m.def("separate", &separate, py::arg("graph"), py::arg("kind"), py::arg("witness"), py::arg("check_class") = true);
    m.def("decompose", &decompose, py::arg("graph"), py::arg("s") = 0, py::arg("oracle") = "min-alpha",
          py::arg("kmax") = 2);
    m.def("validate_decomposition",
          [](const Graph& g, const std::string& td) { return validate_decomposition(g, decomposition_from_json(Json::parse(td))); });
    m.def("tia_of", [](const Graph& g, const std::string& td) { return tia_of(g, decomposition_from_json(Json::parse(td))); });
    m.def("exact_tia", &exact_tia_small);
    m.def("mwis", &mwis, py::arg("graph"), py::arg("weights"), py::arg("decomposition") = std::nullopt);

    py::class_<GeneratorSpec>(m, "GeneratorSpec")
        .def(py::init<>())
        .def_readwrite("family", &GeneratorSpec::family)
        .def_readwrite("seed", &GeneratorSpec::seed)
        .def_readwrite("hole", &GeneratorSpec::hole)
        .def_readwrite("hub_degree", &GeneratorSpec::hub_degree)
        .def_readwrite("special", &GeneratorSpec::special)
        .def_readwrite("long_sector", &GeneratorSpec::long_sector)
        .def_readwrite("lengths", &GeneratorSpec::lengths)
        .def_readwrite("branches", &GeneratorSpec::branches)
        .def_readwrite("leg", &GeneratorSpec::leg)
        .def_readwrite("gap", &GeneratorSpec::gap)
        .def_readwrite("case_tag", &GeneratorSpec::case_tag)
        .def_readwrite("n", &GeneratorSpec::n)
        .def_readwrite("t", &GeneratorSpec::t)
        .def_readwrite("density", &GeneratorSpec::density)
        .def_readwrite("attempts", &GeneratorSpec::attempts)
        .def_readwrite("pendants", &GeneratorSpec::pendants)
        .def_readwrite("max_n", &GeneratorSpec::max_n);
    m.def("generate", [](const GeneratorSpec& s) { return dump(generated_to_json(generate(s))); });
    m.def("generator_families", &generator_families);

    m.def("campaign_names", &campaign_names);
    m.def(
        "run_campaign",
        [](const std::string& name, int trials, std::uint64_t seed, int threads) {
            py::gil_scoped_release release;
            return dump(run_campaign(CampaignOptions{name, trials, seed, threads, ""}).to_json());
        },
        py::arg("name"), py::arg("trials") = 100, py::arg("seed") = 1, py::arg("threads") = 0);
}
