#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "endgraph/digraph.hpp"

namespace endgraph {

/// JSON digraph document:
///   {"name", "depth", "span", "vertices": [{"id", "level", "coord"?, "hub"?}],
///    "edges": [["u", "v"], ...]}
/// Vertices and edges keep their stored order, so import(export(g)) == g.
std::string export_json(const LevelledDigraph& g);

/// Throws ParseError for malformed documents and ValidationError for
/// documents that describe an invalid digraph.
LevelledDigraph import_json(std::string_view text);

/// Graphviz digraph, one node per vertex labelled by its tag. Vertices with
/// coordinates get a pinned `pos`.
std::string export_dot(const LevelledDigraph& g);

/// Sequence file: JSON array of arrays of vertex-id strings.
std::vector<std::vector<std::string>> import_sequence(std::string_view text);
std::string export_sequence(const std::vector<std::vector<std::string>>& sets);

}  // namespace endgraph
