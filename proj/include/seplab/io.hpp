#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "seplab/geometry.hpp"
#include "seplab/graph.hpp"

namespace seplab::io {

using nlohmann::json;

// {"n": int, "edges": [[u, v], ...]} with u < v, edges sorted.
json graph_to_json(const Graph& g);
// Accepts edges in any order/orientation; InputError on duplicates, self-loops,
// out-of-range ids or a malformed document.
Graph graph_from_json(const json& doc);

// {"curves": [[[x, y], ...], ...]}
json representation_to_json(const StringRepresentation& rep);
StringRepresentation representation_from_json(const json& doc);

// An instance file holds a graph, optionally with the curves that realize it.
struct Instance {
  Graph graph;
  std::optional<StringRepresentation> rep;
};

// Graph fields plus "curves" when a representation is present.
json instance_to_json(const Instance& inst);

// Reads "n"/"edges" and/or "curves". With curves, the intersection graph is
// re-derived; if edges are stored too, they must match it exactly (InputError
// naming the first differing pair otherwise).
Instance instance_from_json(const json& doc);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

Graph load_graph(const std::string& path);
StringRepresentation load_representation(const std::string& path);
Instance load_instance(const std::string& path);

}  // namespace seplab::io
