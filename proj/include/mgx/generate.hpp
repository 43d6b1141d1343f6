#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mgx/graph.hpp"

namespace mgx {

/// mt19937_64 with a rejection sampler, so a seed gives the same stream on
/// every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

 private:
  std::mt19937_64 engine_;
};

/// Seed for the i-th item of a stream, independent of how many draws earlier
/// items consumed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

inline constexpr std::size_t kOrientationEdgeCap = 20;

/// All 3^|E| orientations of g's edges. Edge 0 is the least significant
/// base-3 digit: 0 undirected, 1 arc u->v, 2 arc v->u. The visited graph is a
/// scratch object reused between calls. Throws CapExceeded above
/// kOrientationEdgeCap edges.
void for_each_orientation(const MixedGraph& g, const std::function<void(const MixedGraph&)>& visit);
std::vector<MixedGraph> enumerate_orientations(const MixedGraph& g);

MixedGraph path_graph(std::size_t n);
MixedGraph cycle_graph(std::size_t n);
/// Vertex 0 joined to 1..n-1.
MixedGraph star_graph(std::size_t n);
MixedGraph complete_graph(std::size_t n);

/// Uniform labelled tree (random Pruefer sequence).
MixedGraph random_tree(std::size_t n, Rng& rng);
/// Random tree plus `extra` further edges, fewer if the graph fills up.
MixedGraph random_connected(std::size_t n, std::size_t extra, Rng& rng);
/// Each pair joined with probability percent/100.
MixedGraph random_graph(std::size_t n, unsigned percent, Rng& rng);
/// Each edge independently undirected or an arc either way.
MixedGraph random_orientation(const MixedGraph& g, Rng& rng);
/// Two to four random connected pieces, at most max_n vertices in total.
MixedGraph random_disconnected(std::size_t max_n, Rng& rng);

/// Every labelled connected unicyclic graph on n vertices, exactly once,
/// undirected.
void for_each_unicyclic(std::size_t n, const std::function<void(const MixedGraph&)>& visit);
std::vector<MixedGraph> unicyclic_all(std::size_t n);

/// Connected graphs on up to max_n vertices whose cycles are pairwise
/// vertex-disjoint, built from a vertex or a cycle by repeatedly adding a
/// pendant vertex or a new cycle bridged to an existing vertex. Every
/// isomorphism class occurs at least once. Undirected.
std::vector<MixedGraph> cactus_census(std::size_t max_n);

/// Orientation variants of a cactus census graph: for every cycle each
/// (forward, backward) arc split with forward >= backward, laid out along
/// the cycle; other edges oriented at random from `seed`.
std::vector<MixedGraph> cycle_signature_variants(const MixedGraph& g, std::uint64_t seed);

struct GeneratorSpec {
  std::string family;  // path, cycle, star, random_tree, unicyclic_all, random_connected
  std::vector<std::size_t> args;
  std::uint64_t seed = 0;
};

/// path n | cycle n | star n | random_tree n [count] | unicyclic_all n |
/// random_connected n extra [count]. Throws std::invalid_argument on an
/// unknown family or bad arguments.
std::vector<MixedGraph> generate(const GeneratorSpec& spec);

}  // namespace mgx
