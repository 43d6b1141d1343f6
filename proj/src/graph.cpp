#include "mgx/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mgx/error.hpp"

namespace mgx {

MixedGraph::MixedGraph(std::size_t vertex_count) : adjacency_(vertex_count) {}

void MixedGraph::check_vertex(VertexId v) const {
  if (v >= vertex_count()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range (n=" + std::to_string(vertex_count()) + ")");
  }
}

std::size_t MixedGraph::add(VertexId a, VertexId b, Orientation dir) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) {
    throw GraphError("loop at vertex " + std::to_string(a));
  }
  if (find_edge(a, b)) {
    throw GraphError("duplicate edge " + std::to_string(a) + "-" + std::to_string(b));
  }
  Edge e{std::min(a, b), std::max(a, b), dir};
  if (a > b && dir != Orientation::Undirected) {
    e.dir = dir == Orientation::Forward ? Orientation::Backward : Orientation::Forward;
  }
  const std::size_t index = edges_.size();
  edges_.push_back(e);
  adjacency_[a].push_back({b, index});
  adjacency_[b].push_back({a, index});
  return index;
}

std::size_t MixedGraph::add_edge(VertexId a, VertexId b) { return add(a, b, Orientation::Undirected); }

std::size_t MixedGraph::add_arc(VertexId tail, VertexId head) { return add(tail, head, Orientation::Forward); }

void MixedGraph::set_orientation(std::size_t edge_index, Orientation dir) { edges_.at(edge_index).dir = dir; }

std::optional<std::size_t> MixedGraph::find_edge(VertexId a, VertexId b) const {
  if (a >= vertex_count() || b >= vertex_count()) {
    return std::nullopt;
  }
  const auto& list = adjacency_[a].size() <= adjacency_[b].size() ? adjacency_[a] : adjacency_[b];
  const VertexId target = adjacency_[a].size() <= adjacency_[b].size() ? b : a;
  for (const auto& inc : list) {
    if (inc.neighbor == target) {
      return inc.edge;
    }
  }
  return std::nullopt;
}

MixedGraph MixedGraph::underlying() const {
  MixedGraph g = *this;
  for (auto& e : g.edges_) {
    e.dir = Orientation::Undirected;
  }
  return g;
}

MixedGraph MixedGraph::reversed() const {
  MixedGraph g = *this;
  for (auto& e : g.edges_) {
    if (e.dir == Orientation::Forward) {
      e.dir = Orientation::Backward;
    } else if (e.dir == Orientation::Backward) {
      e.dir = Orientation::Forward;
    }
  }
  return g;
}

MixedGraph MixedGraph::with_orientations(std::span<const Orientation> dirs) const {
  if (dirs.size() != edges_.size()) {
    throw GraphError("orientation count does not match edge count");
  }
  MixedGraph g = *this;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    g.edges_[i].dir = dirs[i];
  }
  return g;
}

InducedSubgraph induced_subgraph(const MixedGraph& g, std::span<const VertexId> keep) {
  InducedSubgraph out;
  out.from_parent.assign(g.vertex_count(), kNoVertex);
  std::vector<VertexId> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (VertexId v : sorted) {
    if (v >= g.vertex_count()) {
      throw GraphError("vertex " + std::to_string(v) + " out of range");
    }
    out.from_parent[v] = static_cast<VertexId>(out.to_parent.size());
    out.to_parent.push_back(v);
  }
  out.graph = MixedGraph(out.to_parent.size());
  for (const Edge& e : g.edges()) {
    const VertexId a = out.from_parent[e.u];
    const VertexId b = out.from_parent[e.v];
    if (a != kNoVertex && b != kNoVertex) {
      // relabelling is monotone, so a < b and the direction tag carries over
      out.graph.add(a, b, e.dir);
    }
  }
  return out;
}

InducedSubgraph delete_vertices(const MixedGraph& g, std::span<const VertexId> xs) {
  std::vector<bool> dead(g.vertex_count(), false);
  for (VertexId x : xs) {
    if (x >= g.vertex_count()) {
      throw GraphError("cannot delete unknown vertex " + std::to_string(x));
    }
    dead[x] = true;
  }
  std::vector<VertexId> keep;
  keep.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!dead[v]) {
      keep.push_back(v);
    }
  }
  return induced_subgraph(g, keep);
}

MixedGraph delete_edges(const MixedGraph& g, std::span<const std::pair<VertexId, VertexId>> pairs) {
  std::vector<bool> dead(g.edge_count(), false);
  for (const auto& [a, b] : pairs) {
    auto idx = g.find_edge(a, b);
    if (!idx) {
      throw GraphError("no edge " + std::to_string(a) + "-" + std::to_string(b));
    }
    dead[*idx] = true;
  }
  MixedGraph out(g.vertex_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (!dead[i]) {
      const Edge& e = g.edge(i);
      out.add(e.u, e.v, e.dir);
    }
  }
  return out;
}

std::vector<std::size_t> component_labels(const MixedGraph& g, std::size_t* count) {
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> label(g.vertex_count(), kUnset);
  std::vector<VertexId> stack;
  std::size_t next = 0;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (label[s] != kUnset) {
      continue;
    }
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(x)) {
        if (label[inc.neighbor] == kUnset) {
          label[inc.neighbor] = next;
          stack.push_back(inc.neighbor);
        }
      }
    }
    ++next;
  }
  if (count != nullptr) {
    *count = next;
  }
  return label;
}

std::size_t component_count(const MixedGraph& g) {
  std::size_t count = 0;
  component_labels(g, &count);
  return count;
}

bool is_connected(const MixedGraph& g) { return component_count(g) <= 1; }

std::vector<InducedSubgraph> components(const MixedGraph& g) {
  std::size_t count = 0;
  const auto label = component_labels(g, &count);
  std::vector<std::vector<VertexId>> members(count);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    members[label[v]].push_back(v);
  }
  std::vector<InducedSubgraph> out;
  out.reserve(count);
  for (const auto& m : members) {
    out.push_back(induced_subgraph(g, m));
  }
  return out;
}

std::size_t cycle_space_dim(const MixedGraph& g) {
  return g.edge_count() + component_count(g) - g.vertex_count();
}

MixedGraph disjoint_union(const MixedGraph& a, const MixedGraph& b) {
  MixedGraph out(a.vertex_count() + b.vertex_count());
  for (const Edge& e : a.edges()) {
    out.add(e.u, e.v, e.dir);
  }
  const auto shift = static_cast<VertexId>(a.vertex_count());
  for (const Edge& e : b.edges()) {
    out.add(e.u + shift, e.v + shift, e.dir);
  }
  return out;
}

std::vector<PendantPair> pendant_and_quasi_pendant(const MixedGraph& g) {
  std::vector<PendantPair> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 1) {
      continue;
    }
    const VertexId w = g.incident(v)[0].neighbor;
    if (g.degree(w) == 1 && w < v) {
      continue;  // isolated edge, already reported from w
    }
    out.push_back({v, w});
  }
  return out;
}

bool is_quasi_pendant(const MixedGraph& g, VertexId v) {
  if (g.degree(v) == 1) {
    return false;
  }
  for (const auto& inc : g.incident(v)) {
    if (g.degree(inc.neighbor) == 1) {
      return true;
    }
  }
  return false;
}

BlockDecomposition blocks(const MixedGraph& g) {
  const std::size_t n = g.vertex_count();
  BlockDecomposition out;
  std::vector<std::size_t> disc(n, 0);
  std::vector<std::size_t> low(n, 0);
  std::vector<bool> is_cut(n, false);
  std::vector<std::size_t> edge_stack;
  std::size_t time = 0;

  struct Frame {
    VertexId v;
    std::size_t parent_edge;
    std::size_t next;  // index into incident list
    std::size_t children;
  };
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  auto pop_block = [&](std::size_t until_edge) {
    std::vector<std::size_t> es;
    std::vector<VertexId> vs;
    while (true) {
      const std::size_t e = edge_stack.back();
      edge_stack.pop_back();
      es.push_back(e);
      vs.push_back(g.edge(e).u);
      vs.push_back(g.edge(e).v);
      if (e == until_edge) {
        break;
      }
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::sort(es.begin(), es.end());
    out.blocks.push_back(std::move(vs));
    out.block_edges.push_back(std::move(es));
  };

  std::vector<Frame> stack;
  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != 0) {
      continue;
    }
    disc[root] = low[root] = ++time;
    stack.push_back({root, kNone, 0, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto inc = g.incident(f.v);
      if (f.next < inc.size()) {
        const auto [w, e] = inc[f.next++];
        if (e == f.parent_edge) {
          continue;
        }
        if (disc[w] == 0) {
          edge_stack.push_back(e);
          disc[w] = low[w] = ++time;
          ++f.children;
          stack.push_back({w, e, 0, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.push_back(e);  // back edge
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children > 1) {
          is_cut[done.v] = true;
        }
        continue;
      }
      Frame& parent = stack.back();
      low[parent.v] = std::min(low[parent.v], low[done.v]);
      if (low[done.v] >= disc[parent.v]) {
        if (parent.parent_edge != kNone) {
          is_cut[parent.v] = true;
        }
        pop_block(done.parent_edge);
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (is_cut[v]) {
      out.cut_vertices.push_back(v);
    }
  }
  return out;
}

namespace {

std::vector<VertexId> traverse_cycle(const MixedGraph& g, const std::vector<VertexId>& members) {
  std::vector<bool> in(g.vertex_count(), false);
  for (VertexId v : members) {
    in[v] = true;
  }
  const VertexId start = members.front();  // members are sorted
  VertexId best = kNoVertex;
  for (const auto& inc : g.incident(start)) {
    if (in[inc.neighbor]) {
      best = std::min(best, inc.neighbor);
    }
  }
  std::vector<VertexId> order{start};
  VertexId prev = start;
  VertexId cur = best;
  while (cur != start) {
    order.push_back(cur);
    VertexId next = kNoVertex;
    for (const auto& inc : g.incident(cur)) {
      if (in[inc.neighbor] && inc.neighbor != prev) {
        next = inc.neighbor;
        break;
      }
    }
    prev = cur;
    cur = next;
  }
  return order;
}

}  // namespace

std::optional<std::vector<std::vector<VertexId>>> all_cycles_if_disjoint(const MixedGraph& g) {
  const BlockDecomposition bd = blocks(g);
  std::vector<bool> used(g.vertex_count(), false);
  std::vector<std::vector<VertexId>> cycles;
  for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
    const auto& vs = bd.blocks[b];
    const std::size_t edges = bd.block_edges[b].size();
    if (edges == 1) {
      continue;
    }
    if (edges != vs.size()) {
      return std::nullopt;  // biconnected with a chord
    }
    for (VertexId v : vs) {
      if (used[v]) {
        return std::nullopt;
      }
      used[v] = true;
    }
    cycles.push_back(traverse_cycle(g, vs));
  }
  std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return cycles;
}

std::vector<bool> on_cycle_mask(const MixedGraph& g) {
  std::vector<bool> mask(g.vertex_count(), false);
  const BlockDecomposition bd = blocks(g);
  for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
    if (bd.block_edges[b].size() > 1) {
      for (VertexId v : bd.blocks[b]) {
        mask[v] = true;
      }
    }
  }
  return mask;
}

}  // namespace mgx
