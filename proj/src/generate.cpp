#include "mgx/generate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "mgx/error.hpp"

namespace mgx {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) {
    throw std::invalid_argument("Rng::below needs a positive bound");
  }
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finaliser
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void for_each_orientation(const MixedGraph& g, const std::function<void(const MixedGraph&)>& visit) {
  const std::size_t e = g.edge_count();
  if (e > kOrientationEdgeCap) {
    throw CapExceeded("orientation enumeration limited to " + std::to_string(kOrientationEdgeCap) + " edges, got " +
                      std::to_string(e));
  }
  MixedGraph scratch = g;
  std::vector<std::uint8_t> digit(e, 0);
  for (std::size_t i = 0; i < e; ++i) {
    scratch.set_orientation(i, Orientation::Undirected);
  }
  while (true) {
    visit(scratch);
    std::size_t i = 0;
    while (i < e && digit[i] == 2) {
      digit[i] = 0;
      scratch.set_orientation(i, Orientation::Undirected);
      ++i;
    }
    if (i == e) {
      return;
    }
    ++digit[i];
    scratch.set_orientation(i, digit[i] == 1 ? Orientation::Forward : Orientation::Backward);
  }
}

std::vector<MixedGraph> enumerate_orientations(const MixedGraph& g) {
  std::vector<MixedGraph> out;
  for_each_orientation(g, [&](const MixedGraph& h) { out.push_back(h); });
  return out;
}

MixedGraph path_graph(std::size_t n) {
  MixedGraph g(n);
  for (VertexId v = 1; v < n; ++v) {
    g.add_edge(v - 1, v);
  }
  return g;
}

MixedGraph cycle_graph(std::size_t n) {
  if (n < 3) {
    throw std::invalid_argument("cycle needs at least 3 vertices");
  }
  MixedGraph g = path_graph(n);
  g.add_edge(0, static_cast<VertexId>(n - 1));
  return g;
}

MixedGraph star_graph(std::size_t n) {
  MixedGraph g(n);
  for (VertexId v = 1; v < n; ++v) {
    g.add_edge(0, v);
  }
  return g;
}

MixedGraph complete_graph(std::size_t n) {
  MixedGraph g(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      g.add_edge(u, v);
    }
  }
  return g;
}

MixedGraph random_tree(std::size_t n, Rng& rng) {
  MixedGraph g(n);
  if (n < 2) {
    return g;
  }
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  std::vector<VertexId> pruefer(n - 2);
  for (auto& x : pruefer) {
    x = static_cast<VertexId>(rng.below(n));
  }
  std::vector<std::size_t> degree(n, 1);
  for (VertexId x : pruefer) {
    ++degree[x];
  }
  std::set<VertexId> leaves;
  for (VertexId v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      leaves.insert(v);
    }
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId x : pruefer) {
    const VertexId leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
    if (--degree[x] == 1) {
      leaves.insert(x);
    }
  }
  const VertexId a = *leaves.begin();
  const VertexId b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  std::sort(edges.begin(), edges.end());
  for (const auto& [u, v] : edges) {
    g.add_edge(u, v);
  }
  return g;
}

MixedGraph random_connected(std::size_t n, std::size_t extra, Rng& rng) {
  MixedGraph g = random_tree(n, rng);
  std::vector<std::pair<VertexId, VertexId>> missing;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) {
        missing.emplace_back(u, v);
      }
    }
  }
  for (std::size_t i = 0; i < extra && !missing.empty(); ++i) {
    const std::size_t j = rng.below(missing.size());
    g.add_edge(missing[j].first, missing[j].second);
    missing[j] = missing.back();
    missing.pop_back();
  }
  return g;
}

MixedGraph random_graph(std::size_t n, unsigned percent, Rng& rng) {
  MixedGraph g(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (rng.below(100) < percent) {
        g.add_edge(u, v);
      }
    }
  }
  return g;
}

MixedGraph random_orientation(const MixedGraph& g, Rng& rng) {
  MixedGraph out = g;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    out.set_orientation(i, static_cast<Orientation>(rng.below(3)));
  }
  return out;
}

MixedGraph random_disconnected(std::size_t max_n, Rng& rng) {
  if (max_n < 2) {
    throw std::invalid_argument("a disconnected graph needs at least 2 vertices");
  }
  const std::size_t pieces = std::min<std::size_t>(rng.between(2, 4), max_n);
  MixedGraph g(0);
  std::size_t left = max_n;
  for (std::size_t p = 0; p < pieces; ++p) {
    const std::size_t reserve = pieces - p - 1;
    const std::size_t n = rng.between(1, std::max<std::size_t>(1, std::min<std::size_t>(5, left - reserve)));
    left -= n;
    MixedGraph piece = random_orientation(random_connected(n, rng.below(3), rng), rng);
    g = disjoint_union(g, piece);
  }
  return g;
}

namespace {

// Rooted forests hanging the vertices outside `cycle` onto it, as parent
// assignments. Calls emit(parent) for each.
void for_each_attachment(std::size_t n, const std::vector<bool>& on_cycle, std::vector<VertexId>& parent,
                         std::size_t next, const std::function<void()>& emit) {
  while (next < n && on_cycle[next]) {
    ++next;
  }
  if (next == n) {
    // reject assignments with a cycle among the non-cycle vertices
    for (VertexId v = 0; v < n; ++v) {
      VertexId x = v;
      std::size_t steps = 0;
      while (!on_cycle[x]) {
        x = parent[x];
        if (++steps > n) {
          return;
        }
      }
    }
    emit();
    return;
  }
  for (VertexId p = 0; p < n; ++p) {
    if (p == next) {
      continue;
    }
    parent[next] = p;
    for_each_attachment(n, on_cycle, parent, next + 1, emit);
  }
}

}  // namespace

void for_each_unicyclic(std::size_t n, const std::function<void(const MixedGraph&)>& visit) {
  for (std::size_t q = 3; q <= n; ++q) {
    // choose the cycle's vertex set
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(q), true);
    std::vector<std::vector<VertexId>> subsets;
    do {
      std::vector<VertexId> s;
      for (VertexId v = 0; v < n; ++v) {
        if (pick[v]) {
          s.push_back(v);
        }
      }
      subsets.push_back(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));

    for (const auto& s : subsets) {
      std::vector<bool> on_cycle(n, false);
      for (VertexId v : s) {
        on_cycle[v] = true;
      }
      // cyclic orders starting at s[0], one per direction pair
      std::vector<VertexId> rest(s.begin() + 1, s.end());
      do {
        if (rest.front() > rest.back()) {
          continue;
        }
        std::vector<VertexId> order{s[0]};
        order.insert(order.end(), rest.begin(), rest.end());
        std::vector<VertexId> parent(n, kNoVertex);
        for_each_attachment(n, on_cycle, parent, 0, [&] {
          std::vector<std::pair<VertexId, VertexId>> edges;
          for (std::size_t i = 0; i < q; ++i) {
            const VertexId a = order[i];
            const VertexId b = order[(i + 1) % q];
            edges.emplace_back(std::min(a, b), std::max(a, b));
          }
          for (VertexId v = 0; v < n; ++v) {
            if (!on_cycle[v]) {
              edges.emplace_back(std::min(v, parent[v]), std::max(v, parent[v]));
            }
          }
          std::sort(edges.begin(), edges.end());
          MixedGraph g(n);
          for (const auto& [a, b] : edges) {
            g.add_edge(a, b);
          }
          visit(g);
        });
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
  }
}

std::vector<MixedGraph> unicyclic_all(std::size_t n) {
  std::vector<MixedGraph> out;
  for_each_unicyclic(n, [&](const MixedGraph& g) { out.push_back(g); });
  return out;
}

namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

MixedGraph from_edges(std::size_t n, EdgeList edges) {
  std::sort(edges.begin(), edges.end());
  MixedGraph g(n);
  for (const auto& [a, b] : edges) {
    g.add_edge(a, b);
  }
  return g;
}

void grow(std::size_t n, EdgeList& edges, std::size_t max_n, std::set<std::pair<std::size_t, EdgeList>>& seen) {
  EdgeList key = edges;
  std::sort(key.begin(), key.end());
  if (!seen.emplace(n, key).second) {
    return;
  }
  const auto k = static_cast<VertexId>(n);
  for (VertexId x = 0; x < n && n + 1 <= max_n; ++x) {
    edges.emplace_back(x, k);
    grow(n + 1, edges, max_n, seen);
    edges.pop_back();
  }
  for (std::size_t q = 3; n + q <= max_n; ++q) {
    for (VertexId x = 0; x < n; ++x) {
      const std::size_t before = edges.size();
      edges.emplace_back(x, k);
      for (std::size_t i = 0; i < q; ++i) {
        const auto a = static_cast<VertexId>(k + i);
        const auto b = static_cast<VertexId>(k + (i + 1) % q);
        edges.emplace_back(std::min(a, b), std::max(a, b));
      }
      grow(n + q, edges, max_n, seen);
      edges.resize(before);
    }
  }
}

}  // namespace

std::vector<MixedGraph> cactus_census(std::size_t max_n) {
  std::set<std::pair<std::size_t, EdgeList>> seen;
  if (max_n >= 1) {
    EdgeList edges;
    grow(1, edges, max_n, seen);
  }
  for (std::size_t q = 3; q <= max_n; ++q) {
    EdgeList edges;
    for (std::size_t i = 0; i < q; ++i) {
      const auto a = static_cast<VertexId>(i);
      const auto b = static_cast<VertexId>((i + 1) % q);
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    grow(q, edges, max_n, seen);
  }
  std::vector<MixedGraph> out;
  out.reserve(seen.size());
  for (const auto& [n, edges] : seen) {
    out.push_back(from_edges(n, edges));
  }
  return out;
}

std::vector<MixedGraph> cycle_signature_variants(const MixedGraph& g, std::uint64_t seed) {
  const auto cycles = all_cycles_if_disjoint(g);
  if (!cycles) {
    throw PreconditionError("signature variants need vertex-disjoint cycles");
  }
  std::vector<bool> cycle_edge(g.edge_count(), false);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> splits;
  for (const auto& c : *cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      cycle_edge[*g.find_edge(c[i], c[(i + 1) % c.size()])] = true;
    }
    std::vector<std::pair<std::size_t, std::size_t>> s;
    for (std::size_t f = 0; f <= c.size(); ++f) {
      for (std::size_t b = 0; b <= f && f + b <= c.size(); ++b) {
        s.emplace_back(f, b);
      }
    }
    splits.push_back(std::move(s));
  }
  Rng rng(seed);
  std::vector<MixedGraph> out;
  std::vector<std::size_t> choice(cycles->size(), 0);
  while (true) {
    MixedGraph h = g;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      if (!cycle_edge[i]) {
        h.set_orientation(i, static_cast<Orientation>(rng.below(3)));
      }
    }
    for (std::size_t ci = 0; ci < cycles->size(); ++ci) {
      const auto& c = (*cycles)[ci];
      const auto [f, b] = splits[ci][choice[ci]];
      for (std::size_t j = 0; j < c.size(); ++j) {
        const VertexId from = c[j];
        const VertexId to = c[(j + 1) % c.size()];
        const std::size_t e = *g.find_edge(from, to);
        Orientation dir = Orientation::Undirected;
        if (j < f + b) {
          const bool along = j < f;
          const VertexId tail = along ? from : to;
          dir = tail == g.edge(e).u ? Orientation::Forward : Orientation::Backward;
        }
        h.set_orientation(e, dir);
      }
    }
    out.push_back(std::move(h));
    std::size_t i = 0;
    while (i < choice.size() && choice[i] + 1 == splits[i].size()) {
      choice[i] = 0;
      ++i;
    }
    if (i == choice.size()) {
      break;
    }
    ++choice[i];
  }
  return out;
}

std::vector<MixedGraph> generate(const GeneratorSpec& spec) {
  const auto& a = spec.args;
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (a.size() < lo || a.size() > hi) {
      throw std::invalid_argument("family '" + spec.family + "' takes " + std::to_string(lo) +
                                  (hi > lo ? ".." + std::to_string(hi) : "") + " arguments");
    }
  };
  Rng rng(spec.seed);
  std::vector<MixedGraph> out;
  if (spec.family == "path") {
    need(1, 1);
    out.push_back(path_graph(a[0]));
  } else if (spec.family == "cycle") {
    need(1, 1);
    out.push_back(cycle_graph(a[0]));
  } else if (spec.family == "star") {
    need(1, 1);
    out.push_back(star_graph(a[0]));
  } else if (spec.family == "random_tree") {
    need(1, 2);
    const std::size_t count = a.size() > 1 ? a[1] : 1;
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(random_tree(a[0], rng));
    }
  } else if (spec.family == "unicyclic_all") {
    need(1, 1);
    out = unicyclic_all(a[0]);
  } else if (spec.family == "random_connected") {
    need(2, 3);
    const std::size_t count = a.size() > 2 ? a[2] : 1;
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(random_connected(a[0], a[1], rng));
    }
  } else {
    throw std::invalid_argument("unknown family '" + spec.family + "'");
  }
  return out;
}

}  // namespace mgx
