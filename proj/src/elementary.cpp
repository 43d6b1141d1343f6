#include "mgx/elementary.hpp"

#include <string>

#include "mgx/error.hpp"

namespace mgx {

namespace {

void check_cycle(const MixedGraph& g, std::span<const VertexId> cycle) {
  if (cycle.size() < 3) {
    throw GraphError("a cycle needs at least 3 vertices");
  }
  std::vector<bool> seen(g.vertex_count(), false);
  for (VertexId v : cycle) {
    if (v >= g.vertex_count()) {
      throw GraphError("cycle vertex " + std::to_string(v) + " out of range");
    }
    if (seen[v]) {
      throw GraphError("cycle repeats vertex " + std::to_string(v));
    }
    seen[v] = true;
  }
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const VertexId a = cycle[i];
    const VertexId b = cycle[(i + 1) % cycle.size()];
    if (!g.adjacent(a, b)) {
      throw GraphError("cycle step " + std::to_string(a) + "-" + std::to_string(b) + " is not an edge");
    }
  }
}

// Unchecked: caller guarantees consecutive vertices are adjacent.
CycleSignature count_arcs(const MixedGraph& g, std::span<const VertexId> cycle) {
  CycleSignature s;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const VertexId a = cycle[i];
    const VertexId b = cycle[(i + 1) % cycle.size()];
    const Edge& e = g.edge(*g.find_edge(a, b));
    if (!e.is_arc()) {
      continue;
    }
    if (e.tail() == a) {
      ++s.forward;
    } else {
      ++s.backward;
    }
  }
  return s;
}

class Enumerator {
 public:
  explicit Enumerator(const MixedGraph& g) : g_(g), covered_(g.vertex_count(), false) {
    if (g.vertex_count() > kEnumerationVertexCap) {
      throw CapExceeded("elementary subgraph enumeration limited to " + std::to_string(kEnumerationVertexCap) +
                        " vertices, got " + std::to_string(g.vertex_count()));
    }
  }

  template <class Visit>
  void run(Visit&& visit) {
    recurse(0, visit);
  }

  std::size_t sigma_sum() const { return sigma_sum_; }
  const ElementarySubgraph& current() const { return current_; }

 private:
  template <class Visit>
  void recurse(VertexId v, Visit& visit) {
    while (v < g_.vertex_count() && covered_[v]) {
      ++v;
    }
    if (v == g_.vertex_count()) {
      visit(*this);
      return;
    }
    // v stays uncovered
    recurse(v + 1, visit);
    // v matched to a later neighbour
    covered_[v] = true;
    for (const auto& inc : g_.incident(v)) {
      const VertexId u = inc.neighbor;
      if (u < v || covered_[u]) {
        continue;
      }
      covered_[u] = true;
      current_.k2_edges.emplace_back(v, u);
      recurse(v + 1, visit);
      current_.k2_edges.pop_back();
      covered_[u] = false;
    }
    // v is the smallest vertex of a real cycle
    path_.assign(1, v);
    extend_cycle(v, visit);
    covered_[v] = false;
  }

  template <class Visit>
  void extend_cycle(VertexId start, Visit& visit) {
    const VertexId last = path_.back();
    for (const auto& inc : g_.incident(last)) {
      const VertexId u = inc.neighbor;
      if (u == start && path_.size() >= 3 && path_[1] < last) {
        close_cycle(start, visit);
        continue;
      }
      if (u <= start || covered_[u]) {
        continue;
      }
      covered_[u] = true;
      path_.push_back(u);
      extend_cycle(start, visit);
      path_.pop_back();
      covered_[u] = false;
    }
  }

  template <class Visit>
  void close_cycle(VertexId start, Visit& visit) {
    const CycleSignature s = count_arcs(g_, path_);
    if (s.sigma() % 2 != 0) {
      return;  // value is +-i: not real
    }
    const std::vector<VertexId> saved = path_;
    sigma_sum_ += s.sigma();
    current_.cycles.push_back(saved);
    recurse(start + 1, visit);
    current_.cycles.pop_back();
    sigma_sum_ -= s.sigma();
    path_ = saved;
  }

  const MixedGraph& g_;
  std::vector<bool> covered_;
  std::vector<VertexId> path_;
  ElementarySubgraph current_;
  std::size_t sigma_sum_ = 0;
};

}  // namespace

CycleSignature signature(const MixedGraph& g, std::span<const VertexId> cycle) {
  check_cycle(g, cycle);
  return count_arcs(g, cycle);
}

Gaussian<int> cycle_value(const MixedGraph& g, std::span<const VertexId> cycle) {
  check_cycle(g, cycle);
  Gaussian<int> value(1, 0);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const VertexId a = cycle[i];
    const VertexId b = cycle[(i + 1) % cycle.size()];
    const Edge& e = g.edge(*g.find_edge(a, b));
    if (!e.is_arc()) {
      continue;
    }
    value = value * (e.tail() == a ? Gaussian<int>(0, 1) : Gaussian<int>(0, -1));
  }
  return value;
}

bool is_real(const MixedGraph& g, std::span<const VertexId> cycle) {
  const Gaussian<int> value = cycle_value(g, cycle);
  const bool real = value.im == 0;
  if (real != (count_arcs(g, cycle).sigma() % 2 == 0)) {
    throw InternalError("cycle realness disagrees with signature parity");
  }
  return real;
}

std::size_t ElementarySubgraph::order() const {
  std::size_t total = 2 * k2_edges.size();
  for (const auto& c : cycles) {
    total += c.size();
  }
  return total;
}

void for_each_real_elementary_subgraph(const MixedGraph& g, const std::function<void(const ElementarySubgraph&)>& visit) {
  Enumerator en(g);
  en.run([&](const Enumerator& e) { visit(e.current()); });
}

IntPolynomial charpoly_by_enumeration(const MixedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<BigInt> a(n + 1, BigInt(0));
  Enumerator en(g);
  en.run([&](const Enumerator& e) {
    const ElementarySubgraph& b = e.current();
    const std::size_t sigma = e.sigma_sum();
    if (sigma % 2 != 0) {
      throw InternalError("odd signature sum in a real elementary subgraph");
    }
    const std::size_t exponent = sigma / 2 + b.omega();
    BigInt term(1);
    term <<= b.cycle_count();
    if (exponent % 2 != 0) {
      term = -term;
    }
    a[b.order()] += term;
  });
  a[0] = 1;  // the empty subgraph contributes exactly 1 here as well
  return IntPolynomial(std::move(a));
}

BigInt coefficient_by_enumeration(const MixedGraph& g, std::size_t j) {
  if (j > g.vertex_count()) {
    throw std::out_of_range("coefficient index exceeds the vertex count");
  }
  return charpoly_by_enumeration(g)[j];
}

}  // namespace mgx
