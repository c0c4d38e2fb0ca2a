#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "tindep/graph.hpp"

namespace tindep {

using Json = nlohmann::json;

/// A parsed graph file. `labels` is null unless the JSON input carried a
/// "labels" array; then edges were given in labels and local id i stands for
/// labels[i]. `witness` holds an embedded pattern witness, if any.
struct GraphDocument {
    Graph graph;
    Json labels;
    Json witness;
};

/// `p <n> <m>` followed by m lines `e <u> <v>`. Lines starting with `c` are comments.
Graph parse_graph_text(std::string_view text);
std::string format_graph_text(const Graph& g);

GraphDocument parse_graph_json(const Json& doc);
Json graph_to_json(const Graph& g);

/// Chooses the JSON reader when the first non-blank character is '{'.
GraphDocument parse_graph_document(std::string_view text);
GraphDocument read_graph_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

}  // namespace tindep
