#pragma once

#include <string>
#include <vector>

#include "tindep/align.hpp"
#include "tindep/amicable.hpp"
#include "tindep/connect.hpp"
#include "tindep/decomp.hpp"
#include "tindep/detect.hpp"
#include "tindep/io.hpp"
#include "tindep/patterns.hpp"
#include "tindep/separators.hpp"
#include "tindep/strip.hpp"
#include "tindep/weights.hpp"

namespace tindep {

// JSON forms of the library objects. Readers throw InputError on malformed input.

Json path_to_json(const PathWitness& p);
PathWitness path_from_json(const Json& j);
VertexSet set_from_json(const Json& j);
std::vector<Vertex> list_from_json(const Json& j);

Json to_json(const ThetaWitness& w);
Json to_json(const PrismWitness& w);
Json to_json(const PyramidWitness& w);
Json to_json(const K1tWitness& w);
Json to_json(const Wheel& w);
ThetaWitness theta_from_json(const Json& j);
PrismWitness prism_from_json(const Json& j);
PyramidWitness pyramid_from_json(const Json& j);
K1tWitness k1t_from_json(const Json& j);
Wheel wheel_from_json(const Json& j);

Json to_json(const SeparatorReport& r);
Json to_json(const ClassReport& r);

Json to_json(const StripStructure& s);
StripStructure strip_from_json(const Json& j);
Json to_json(const std::vector<StripViolation>& v);
Json to_json(const StripClass& c);

Json to_json(const Alignment& a);
Json to_json(const Extraction& e);
Json to_json(const ShapeH& s);
Json to_json(const ConnectResult& r);

/// {"graph", "D1", "Y", "D2", "X", "H", "t"}
Json to_json(const Graph& g, const AmicabilityInstance& inst);
struct AmicableDocument {
    Graph graph;
    AmicabilityInstance instance;
};
AmicableDocument amicable_instance_from_json(const Json& j);
Json to_json(const AmicableResult& r);
Json to_json(const AmiabilityResult& r);

/// {"nodes": [{"id", "bag"}], "edges": [[a, b]]}
Json to_json(const TreeDecomposition& td);
TreeDecomposition decomposition_from_json(const Json& j);
Json to_json(const MwisResult& r);

/// JSON array of numbers or "p/q" strings, or whitespace-separated rationals.
std::vector<Rational> parse_weights(std::string_view text);
Json rational_to_json(const Rational& r);

}  // namespace tindep
