#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "mgx/graph.hpp"
#include "mgx/hermitian.hpp"
#include "mgx/numeric.hpp"

namespace mgx {

/// Arc counts along a cycle traversal. sigma = |forward - backward|.
struct CycleSignature {
  std::size_t forward = 0;
  std::size_t backward = 0;

  [[nodiscard]] std::size_t sigma() const { return forward > backward ? forward - backward : backward - forward; }
  friend bool operator==(const CycleSignature&, const CycleSignature&) = default;
};

/// Counts arcs that agree (forward) or disagree (backward) with the traversal
/// v0 v1 ... v_{l-1} v0. Throws GraphError if the sequence is not a cycle of g.
CycleSignature signature(const MixedGraph& g, std::span<const VertexId> cycle);

/// Product of H entries along the closed traversal; a power of i.
Gaussian<int> cycle_value(const MixedGraph& g, std::span<const VertexId> cycle);

/// True iff the cycle's value is +1 or -1. Cross-checked against sigma being
/// even; a mismatch throws InternalError.
bool is_real(const MixedGraph& g, std::span<const VertexId> cycle);

/// Component makeup of one elementary subgraph.
struct ElementarySubgraph {
  std::vector<std::pair<VertexId, VertexId>> k2_edges;
  std::vector<std::vector<VertexId>> cycles;

  [[nodiscard]] std::size_t order() const;
  [[nodiscard]] std::size_t omega() const { return k2_edges.size() + cycles.size(); }
  [[nodiscard]] std::size_t cycle_count() const { return cycles.size(); }
};

inline constexpr std::size_t kEnumerationVertexCap = 14;

/// Visits every real elementary subgraph of g exactly once. Throws
/// CapExceeded above kEnumerationVertexCap vertices.
void for_each_real_elementary_subgraph(const MixedGraph& g, const std::function<void(const ElementarySubgraph&)>& visit);

/// a_j = sum over real elementary subgraphs B on j vertices of
/// (-1)^(sigma(B)/2 + omega(B)) * 2^c(B); a_0 = 1.
BigInt coefficient_by_enumeration(const MixedGraph& g, std::size_t j);
IntPolynomial charpoly_by_enumeration(const MixedGraph& g);

}  // namespace mgx
