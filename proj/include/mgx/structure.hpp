#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mgx/graph.hpp"
#include "mgx/hermitian.hpp"
#include "mgx/numeric.hpp"

namespace mgx {

using EdgePair = std::pair<VertexId, VertexId>;

// ---- cycles ---------------------------------------------------------------

struct CycleClass {
  std::size_t n = 0;
  std::size_t sigma = 0;
  Inertia predicted;
};

/// Closed-form inertia of a mixed cycle of length n and signature sigma.
/// Throws std::invalid_argument if n < 3 or sigma > n.
Inertia cycle_inertia_formula(std::size_t n, std::size_t sigma);
CycleClass classify_cycle(std::size_t n, std::size_t sigma);

/// Closed-form rank of a mixed cycle. Cross-checked against
/// cycle_inertia_formula; a mismatch throws InternalError.
std::size_t cycle_rank_formula(std::size_t n, std::size_t sigma);

/// Traversal of g when its underlying graph is a single cycle through every
/// vertex, else nullopt.
std::optional<std::vector<VertexId>> cycle_traversal(const MixedGraph& g);

/// Signature of a cycle read from its smallest vertex toward the smaller-id
/// neighbour. The opposite direction is computed too and must agree.
std::size_t canonical_sigma(const MixedGraph& g, std::span<const VertexId> cycle);

// ---- unicyclic graphs -----------------------------------------------------

enum class UnicyclicCase { MinusOneBoth, PlusOnePositive, PlusOneNegative, Balanced };

std::string_view to_string(UnicyclicCase c);

/// Orientation-independent matching data of a connected unicyclic graph.
/// Build once per underlying graph and reuse across orientations.
struct UnicyclicStructure {
  std::size_t n = 0;
  std::vector<VertexId> cycle;
  std::vector<EdgePair> incident_edges;  // exactly one endpoint on the cycle
  std::size_t m = 0;                     // m(G)
  std::size_t m_without_cycle = 0;       // m(G - V(C))
  /// Largest i such that some i-matching uses an incident edge; 0 if none.
  std::size_t incident_matching_max = 0;
  /// m(G) is reachable with every incident edge deleted.
  bool max_avoids_incident = false;

  [[nodiscard]] std::size_t q() const { return cycle.size(); }
  /// No maximum matching contains an edge incident to the cycle.
  [[nodiscard]] bool no_max_uses_incident() const { return incident_matching_max < m; }
  /// m(G) = m(G - V(C)) + (q-1)/2 (odd q only).
  [[nodiscard]] bool cycle_saturated_odd() const {
    return q() % 2 == 1 && m == m_without_cycle + (q() - 1) / 2;
  }
};

/// Throws PreconditionError unless g is connected with |E| = |V| >= 3.
UnicyclicStructure analyze_unicyclic(const MixedGraph& g);

struct UnicyclicClass {
  UnicyclicCase tag = UnicyclicCase::Balanced;
  Inertia predicted;
  std::size_t q = 0;
  std::size_t sigma = 0;
  std::size_t m = 0;
  std::size_t m_without_cycle = 0;
  bool no_max_uses_incident = false;
};

UnicyclicClass classify_unicyclic(const UnicyclicStructure& s, std::size_t sigma);
UnicyclicClass classify_unicyclic(const MixedGraph& g);

struct SignPrediction {
  std::size_t k = 0;
  std::vector<int> even_signs;  // sgn(a_{2i}), i = 0..floor(n/2)
  int odd_leading_sign = 0;     // sgn(a_{2m+1})
  bool odd_all_zero = false;    // q even or sigma odd
};

SignPrediction predict_coefficient_signs(const UnicyclicStructure& s, std::size_t sigma);
SignPrediction predict_coefficient_signs(const MixedGraph& g);

/// Compares a prediction with an exact polynomial. Returns a description of
/// the first disagreement, or nullopt. Besides the even signs and
/// sgn(a_{2m+1}) it checks that a_{2i+1} = 0 for i > k, and that every odd
/// coefficient vanishes when odd_all_zero is set.
std::optional<std::string> sign_mismatch(const SignPrediction& p, std::size_t m, const IntPolynomial& poly);
/// Same check on the sign sequence sgn(a_0)..sgn(a_n).
std::optional<std::string> sign_mismatch(const SignPrediction& p, std::size_t m, std::span<const int> signs);

std::vector<int> coefficient_signs(const IntPolynomial& poly);

/// Indices i where the four-case even-sign rule, read with its stated ranges
/// (the last case covering 0 <= i <= q/2), disagrees with sgn(a_{2i}).
std::vector<std::size_t> literal_even_sign_disagreements(const UnicyclicStructure& s, std::size_t sigma,
                                                         std::span<const int> signs);

// ---- cactus structure -----------------------------------------------------

/// Cycle contraction of a graph whose cycles are pairwise vertex-disjoint.
struct CactusDecomposition {
  std::vector<std::vector<VertexId>> cycles;
  /// Each cycle contracted to one vertex. Non-cycle vertices come first in
  /// increasing order, then one vertex per cycle.
  MixedGraph t_g;
  std::vector<bool> cyclic;          // per t_g vertex
  std::vector<VertexId> t_vertex;    // g vertex -> t_g vertex
  /// Forest induced on the non-cycle vertices.
  InducedSubgraph bracket_t_g;
  /// Edges joining a cycle to a vertex off that cycle.
  std::vector<EdgePair> f_edges;
};

/// Requires only that cycles be vertex-disjoint (trees and bare cycles are
/// accepted). Throws PreconditionError otherwise.
CactusDecomposition contract_cycles(const MixedGraph& g);

/// Membership in the class: connected, cycles pairwise vertex-disjoint, at
/// least one cycle, and not a bare cycle (some edge lies on no cycle).
/// Throws PreconditionError naming the failed clause.
CactusDecomposition cactus_decomposition(const MixedGraph& g);

// ---- bounds and characterizations -----------------------------------------

struct InertiaBounds {
  std::int64_t lower = 0;  // m - c
  std::int64_t upper = 0;  // m + c
  friend bool operator==(const InertiaBounds&, const InertiaBounds&) = default;
};

InertiaBounds inertia_bounds(const MixedGraph& g);

enum class Extremum { Max, Min };
enum class InertiaIndex { Positive, Negative };

enum class Characterization { PositiveMax, NegativeMax, Min };

std::string_view to_string(Characterization c);

struct CharacterizationReport {
  Characterization kind = Characterization::PositiveMax;
  bool disjoint_cycles = false;
  bool cycle_condition = false;  // every cycle has the required q, sigma class
  bool in_class = false;         // the cactus class proper (not tree, not bare cycle)
  /// Set when cycles are disjoint.
  std::optional<bool> tree_matching_equal;  // m(T_G) = m([T_G])
  std::optional<bool> max_avoids_f;         // some maximum matching avoids F
  std::optional<bool> no_max_uses_f;        // no maximum matching uses F
  bool predicate = false;
  /// The two matching forms disagree on a graph where they are asserted
  /// equivalent.
  bool forms_disagree = false;
};

/// Throws PreconditionError on a disconnected graph.
CharacterizationReport characterize(const MixedGraph& g, Characterization kind);

bool characterize_p_plus_max(const MixedGraph& g);
bool characterize_n_minus_max(const MixedGraph& g);
bool characterize_inertia_min(const MixedGraph& g);

struct ConsequenceItem {
  VertexId vertex = 0;
  int item = 0;  // 1..7
  bool ok = false;
  std::string detail;
};

struct ConsequenceReport {
  Extremum which = Extremum::Max;
  InertiaIndex index = InertiaIndex::Positive;
  std::vector<ConsequenceItem> items;
  /// Min case: vertices where the sum form p(G-v) = m(G-v) + c(G-v) holds.
  std::size_t min_sum_form_holds = 0;

  [[nodiscard]] bool all_ok() const;
};

/// Checks the seven consequences of attaining the chosen bound for every
/// vertex on a cycle. Throws PreconditionError if g has no cycle or the
/// bound is not attained.
ConsequenceReport check_extremal_consequences(const MixedGraph& g, Extremum which,
                                              InertiaIndex index = InertiaIndex::Positive);

}  // namespace mgx
