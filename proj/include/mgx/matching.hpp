#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "mgx/graph.hpp"
#include "mgx/numeric.hpp"

namespace mgx {

/// Pairwise vertex-disjoint edges of the host graph, each stored with u < v.
struct Matching {
  std::vector<std::pair<VertexId, VertexId>> edges;
  [[nodiscard]] std::size_t size() const { return edges.size(); }
};

/// Matching number and the i-matching counts m_0..m_m.
struct MatchingProfile {
  std::size_t m = 0;
  std::vector<BigInt> counts;
};

/// Maximum cardinality matching of the underlying graph (Edmonds' blossom
/// algorithm).
Matching maximum_matching(const MixedGraph& g);
std::size_t matching_number(const MixedGraph& g);

/// i-matching counts by expansion on the lowest vertex, memoised on induced
/// vertex subsets.
MatchingProfile matching_counts(const MixedGraph& g);

/// Matching number of g with the forbidden edges removed.
std::size_t max_matching_avoiding(const MixedGraph& g, std::span<const std::pair<VertexId, VertexId>> forbidden);

inline constexpr std::size_t kBruteForceMatchingEdgeCap = 24;

/// Exhaustive search over independent edge subsets. Throws CapExceeded above
/// kBruteForceMatchingEdgeCap edges.
std::size_t brute_force_matching_number(const MixedGraph& g);

/// True if `m` is a matching of g.
bool is_matching(const MixedGraph& g, const Matching& m);

}  // namespace mgx
