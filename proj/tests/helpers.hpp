#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include "mgx/graph.hpp"
#include "mgx/io.hpp"

namespace testing {

// Graph from .mg text; keeps test fixtures readable.
inline mgx::MixedGraph mg(const std::string& text) { return mgx::parse_mg(text); }

inline mgx::MixedGraph undirected(std::size_t n, std::initializer_list<std::pair<mgx::VertexId, mgx::VertexId>> edges) {
  mgx::MixedGraph g(n);
  for (const auto& [a, b] : edges) {
    g.add_edge(a, b);
  }
  return g;
}

}  // namespace testing
