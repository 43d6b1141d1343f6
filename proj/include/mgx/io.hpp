#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mgx/graph.hpp"

namespace mgx {

// Text format (.mg):
//   n <count>
//   e u v      undirected edge
//   a u v      arc u -> v
// '#' starts a comment. A stream may hold several graphs, each opened by an
// `n` line.

MixedGraph parse_mg(std::string_view text);
std::vector<MixedGraph> parse_mg_many(std::string_view text);
std::string format_mg(const MixedGraph& g);

// JSON mirror: {"n":int,"edges":[{"u":int,"v":int,"kind":"e"|"a"}]}
// For kind "a" the arc runs u -> v.
nlohmann::json to_json(const MixedGraph& g);
MixedGraph graph_from_json(const nlohmann::json& j);

/// Reads a graph file, JSON if the first non-blank character is '{', .mg
/// text otherwise.
MixedGraph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const MixedGraph& g);

}  // namespace mgx
