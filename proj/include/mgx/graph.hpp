#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace mgx {

using VertexId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/// Direction of an edge relative to its canonical pair (u < v).
enum class Orientation : std::uint8_t {
  Undirected,
  Forward,   // arc u -> v
  Backward,  // arc v -> u
};

/// An edge stored on its unordered pair with u < v. The orientation tag is the
/// only thing separating a mixed graph from its underlying graph.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Orientation dir = Orientation::Undirected;

  [[nodiscard]] bool is_arc() const { return dir != Orientation::Undirected; }
  [[nodiscard]] VertexId tail() const { return dir == Orientation::Backward ? v : u; }
  [[nodiscard]] VertexId head() const { return dir == Orientation::Backward ? u : v; }
  [[nodiscard]] VertexId other(VertexId x) const { return x == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple mixed graph on dense vertex ids 0..n-1. Each unordered pair carries
/// at most one edge, either undirected or an arc.
class MixedGraph {
 public:
  struct Incidence {
    VertexId neighbor;
    std::size_t edge;
  };

  MixedGraph() = default;
  explicit MixedGraph(std::size_t vertex_count);

  /// Adds an undirected edge. Throws GraphError on loops, duplicates or
  /// unknown ids.
  std::size_t add_edge(VertexId a, VertexId b);
  /// Adds an arc tail -> head.
  std::size_t add_arc(VertexId tail, VertexId head);
  std::size_t add(VertexId a, VertexId b, Orientation dir);

  void set_orientation(std::size_t edge_index, Orientation dir);

  [[nodiscard]] std::size_t vertex_count() const { return adjacency_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] const Edge& edge(std::size_t i) const { return edges_[i]; }
  [[nodiscard]] std::span<const Incidence> incident(VertexId v) const { return adjacency_[v]; }
  [[nodiscard]] std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
  [[nodiscard]] std::optional<std::size_t> find_edge(VertexId a, VertexId b) const;
  [[nodiscard]] bool adjacent(VertexId a, VertexId b) const { return find_edge(a, b).has_value(); }

  /// Same graph with every edge undirected.
  [[nodiscard]] MixedGraph underlying() const;
  /// Every arc reversed; undirected edges untouched.
  [[nodiscard]] MixedGraph reversed() const;
  /// Same underlying edges with the given per-edge orientations.
  [[nodiscard]] MixedGraph with_orientations(std::span<const Orientation> dirs) const;

  friend bool operator==(const MixedGraph& a, const MixedGraph& b) { return a.edges_ == b.edges_ && a.vertex_count() == b.vertex_count(); }

 private:
  void check_vertex(VertexId v) const;

  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

/// A subgraph together with the vertex correspondence to its parent.
struct InducedSubgraph {
  MixedGraph graph;
  std::vector<VertexId> to_parent;    // new id -> parent id
  std::vector<VertexId> from_parent;  // parent id -> new id, kNoVertex if deleted
};

/// Mixed subgraph induced on `keep` (ids kept in increasing order).
InducedSubgraph induced_subgraph(const MixedGraph& g, std::span<const VertexId> keep);

/// G - X. Throws GraphError if any id in `xs` is out of range.
InducedSubgraph delete_vertices(const MixedGraph& g, std::span<const VertexId> xs);

/// G with the listed edges removed (ids preserved). Edges are given as
/// unordered pairs; throws GraphError if a pair is not an edge of g.
MixedGraph delete_edges(const MixedGraph& g, std::span<const std::pair<VertexId, VertexId>> pairs);

/// Component label per vertex, labels dense in order of smallest vertex.
std::vector<std::size_t> component_labels(const MixedGraph& g, std::size_t* count = nullptr);
std::size_t component_count(const MixedGraph& g);
bool is_connected(const MixedGraph& g);
std::vector<InducedSubgraph> components(const MixedGraph& g);

/// c(G) = |E| - |V| + omega(G), on the underlying graph.
std::size_t cycle_space_dim(const MixedGraph& g);

/// Disjoint union; vertices of `b` are shifted by a.vertex_count().
MixedGraph disjoint_union(const MixedGraph& a, const MixedGraph& b);

struct PendantPair {
  VertexId pendant;
  VertexId quasi;
  friend bool operator==(const PendantPair&, const PendantPair&) = default;
};

/// Every degree-1 vertex with its neighbour. An isolated edge is reported
/// once, with the smaller id as the pendant.
std::vector<PendantPair> pendant_and_quasi_pendant(const MixedGraph& g);

/// True if v is adjacent to a degree-1 vertex and is not itself of degree 1.
bool is_quasi_pendant(const MixedGraph& g, VertexId v);

struct BlockDecomposition {
  std::vector<std::vector<VertexId>> blocks;      // sorted vertex sets
  std::vector<std::vector<std::size_t>> block_edges;
  std::vector<VertexId> cut_vertices;             // sorted
};

/// Biconnected components of the underlying graph.
BlockDecomposition blocks(const MixedGraph& g);

/// Vertex sequences of all cycles when every block is an edge or a cycle and
/// cycle blocks are pairwise vertex-disjoint; nullopt otherwise. Each cycle
/// starts at its smallest vertex and continues to the smaller-id neighbour.
/// Cycles are ordered by their first vertex.
std::optional<std::vector<std::vector<VertexId>>> all_cycles_if_disjoint(const MixedGraph& g);

/// Vertices that lie on some cycle (members of a block with >= 3 vertices).
std::vector<bool> on_cycle_mask(const MixedGraph& g);

}  // namespace mgx
