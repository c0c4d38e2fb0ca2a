#include "tindep/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "tindep/error.hpp"

namespace tindep {

Graph parse_graph_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int n = -1;
    long declared = -1;
    std::vector<Edge> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == 'c') continue;
        if (tag == "p") {
            if (n >= 0) throw InputError("line " + std::to_string(line_no) + ": second header");
            if (!(ls >> n >> declared) || n < 0 || declared < 0)
                throw InputError("line " + std::to_string(line_no) + ": bad header");
        } else if (tag == "e") {
            if (n < 0) throw InputError("line " + std::to_string(line_no) + ": edge before header");
            long u = 0;
            long v = 0;
            if (!(ls >> u >> v)) throw InputError("line " + std::to_string(line_no) + ": bad edge");
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw InputError("line " + std::to_string(line_no) + ": vertex out of range");
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        } else {
            throw InputError("line " + std::to_string(line_no) + ": unknown tag '" + tag + "'");
        }
    }
    if (n < 0) throw InputError("missing header line");
    if (static_cast<long>(edges.size()) != declared)
        throw InputError("header declares " + std::to_string(declared) + " edges, found " +
                         std::to_string(edges.size()));
    return Graph(n, edges);
}

std::string format_graph_text(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.size() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
    return out.str();
}

GraphDocument parse_graph_json(const Json& doc) {
    if (!doc.is_object()) throw InputError("graph JSON must be an object");
    GraphDocument out;
    if (doc.contains("witness")) out.witness = doc.at("witness");
    const Json* edges = doc.contains("edges") ? &doc.at("edges") : nullptr;
    if (edges == nullptr || !edges->is_array()) throw InputError("graph JSON needs an \"edges\" array");
    std::vector<Edge> list;
    int n = 0;
    try {
        if (doc.contains("labels")) {
            const Json& labels = doc.at("labels");
            if (!labels.is_array()) throw InputError("\"labels\" must be an array");
            std::map<std::string, Vertex> index;
            for (std::size_t i = 0; i < labels.size(); ++i)
                if (!index.emplace(labels[i].dump(), static_cast<Vertex>(i)).second)
                    throw InputError("duplicate label " + labels[i].dump());
            n = static_cast<int>(labels.size());
            if (doc.contains("n") && doc.at("n").get<int>() != n) throw InputError("\"n\" disagrees with labels");
            for (const Json& e : *edges) {
                if (!e.is_array() || e.size() != 2) throw InputError("edge must be a pair");
                auto u = index.find(e[0].dump());
                auto v = index.find(e[1].dump());
                if (u == index.end() || v == index.end()) throw InputError("edge uses unknown label");
                list.emplace_back(u->second, v->second);
            }
            out.labels = labels;
        } else {
            if (!doc.contains("n")) throw InputError("graph JSON needs \"n\"");
            n = doc.at("n").get<int>();
            for (const Json& e : *edges) {
                if (!e.is_array() || e.size() != 2) throw InputError("edge must be a pair");
                list.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
            }
        }
    } catch (const Json::exception& ex) {
        throw InputError(std::string("graph JSON: ") + ex.what());
    }
    out.graph = Graph(n, list);
    return out;
}

Json graph_to_json(const Graph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return Json{{"n", g.size()}, {"edges", std::move(edges)}};
}

GraphDocument parse_graph_document(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        Json doc;
        try {
            doc = Json::parse(text);
        } catch (const Json::exception& ex) {
            throw InputError(std::string("malformed JSON: ") + ex.what());
        }
        return parse_graph_json(doc);
    }
    GraphDocument out;
    out.graph = parse_graph_text(text);
    return out;
}

GraphDocument read_graph_file(const std::string& path) { return parse_graph_document(read_text_file(path)); }

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << content;
}

}  // namespace tindep
