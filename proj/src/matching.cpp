#include "mgx/matching.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "mgx/error.hpp"

namespace mgx {

namespace {

// Edmonds' blossom algorithm, O(V^3). `match`, `parent` and `base` follow the
// usual augmenting-path formulation with blossom contraction via base ids.
class Blossom {
 public:
  explicit Blossom(const MixedGraph& g)
      : g_(g), n_(g.vertex_count()), match_(n_, kNoVertex), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

  std::vector<VertexId> run() {
    // greedy warm start
    for (VertexId v = 0; v < n_; ++v) {
      if (match_[v] != kNoVertex) {
        continue;
      }
      for (const auto& inc : g_.incident(v)) {
        if (match_[inc.neighbor] == kNoVertex) {
          match_[v] = inc.neighbor;
          match_[inc.neighbor] = v;
          break;
        }
      }
    }
    for (VertexId v = 0; v < n_; ++v) {
      if (match_[v] == kNoVertex) {
        const VertexId end = find_path(v);
        augment(end);
      }
    }
    return match_;
  }

 private:
  VertexId lca(VertexId a, VertexId b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == kNoVertex) {
        break;
      }
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) {
        return b;
      }
      b = parent_[match_[b]];
    }
  }

  void mark_path(VertexId v, VertexId b, VertexId child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  VertexId find_path(VertexId root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), kNoVertex);
    for (VertexId i = 0; i < n_; ++i) {
      base_[i] = i;
    }
    used_[root] = true;
    std::vector<VertexId> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId v = queue[head];
      for (const auto& inc : g_.incident(v)) {
        const VertexId to = inc.neighbor;
        if (base_[v] == base_[to] || match_[v] == to) {
          continue;
        }
        if (to == root || (match_[to] != kNoVertex && parent_[match_[to]] != kNoVertex)) {
          const VertexId cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (VertexId i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == kNoVertex) {
          parent_[to] = v;
          if (match_[to] == kNoVertex) {
            return to;
          }
          used_[match_[to]] = true;
          queue.push_back(match_[to]);
        }
      }
    }
    return kNoVertex;
  }

  void augment(VertexId v) {
    while (v != kNoVertex) {
      const VertexId pv = parent_[v];
      const VertexId ppv = match_[pv];
      match_[v] = pv;
      match_[pv] = v;
      v = ppv;
    }
  }

  const MixedGraph& g_;
  std::size_t n_;
  std::vector<VertexId> match_;
  std::vector<VertexId> parent_;
  std::vector<VertexId> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

using Key = std::vector<std::uint64_t>;

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto w : k) {
      h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

class MatchingCounter {
 public:
  explicit MatchingCounter(const MixedGraph& g) : g_(g), words_((g.vertex_count() + 63) / 64) {}

  std::vector<BigInt> count_all() {
    Key all(words_, 0);
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      set(all, v);
    }
    return count(all);
  }

 private:
  static bool test(const Key& k, VertexId v) { return (k[v / 64] >> (v % 64)) & 1U; }
  static void set(Key& k, VertexId v) { k[v / 64] |= std::uint64_t{1} << (v % 64); }
  static void clear(Key& k, VertexId v) { k[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

  // Generating polynomial sum_i m_i x^i of the subgraph induced on `alive`.
  std::vector<BigInt> count(const Key& alive) {
    if (auto it = memo_.find(alive); it != memo_.end()) {
      return it->second;
    }
    // lowest alive vertex with an alive neighbour
    VertexId pivot = kNoVertex;
    Key rest = alive;
    for (VertexId v = 0; v < g_.vertex_count() && pivot == kNoVertex; ++v) {
      if (!test(alive, v)) {
        continue;
      }
      bool has_neighbor = false;
      for (const auto& inc : g_.incident(v)) {
        if (test(alive, inc.neighbor)) {
          has_neighbor = true;
          break;
        }
      }
      if (has_neighbor) {
        pivot = v;
      } else {
        clear(rest, v);  // isolated in the induced subgraph
      }
    }
    std::vector<BigInt> result{BigInt(1)};
    if (pivot != kNoVertex) {
      clear(rest, pivot);
      result = count(rest);
      for (const auto& inc : g_.incident(pivot)) {
        if (!test(rest, inc.neighbor)) {
          continue;
        }
        Key sub = rest;
        clear(sub, inc.neighbor);
        const auto with = count(sub);
        if (result.size() < with.size() + 1) {
          result.resize(with.size() + 1, BigInt(0));
        }
        for (std::size_t i = 0; i < with.size(); ++i) {
          result[i + 1] += with[i];
        }
      }
    }
    memo_.emplace(alive, result);
    return result;
  }

  const MixedGraph& g_;
  std::size_t words_;
  std::unordered_map<Key, std::vector<BigInt>, KeyHash> memo_;
};

void brute_force(const std::vector<Edge>& edges, std::size_t index, std::vector<bool>& used, std::size_t size,
                 std::size_t& best) {
  best = std::max(best, size);
  if (index == edges.size() || size + (edges.size() - index) <= best) {
    return;
  }
  const Edge& e = edges[index];
  if (!used[e.u] && !used[e.v]) {
    used[e.u] = used[e.v] = true;
    brute_force(edges, index + 1, used, size + 1, best);
    used[e.u] = used[e.v] = false;
  }
  brute_force(edges, index + 1, used, size, best);
}

}  // namespace

Matching maximum_matching(const MixedGraph& g) {
  const auto mate = Blossom(g).run();
  Matching m;
  for (VertexId v = 0; v < mate.size(); ++v) {
    if (mate[v] != kNoVertex && v < mate[v]) {
      m.edges.emplace_back(v, mate[v]);
    }
  }
  return m;
}

std::size_t matching_number(const MixedGraph& g) { return maximum_matching(g).size(); }

MatchingProfile matching_counts(const MixedGraph& g) {
  MatchingProfile profile;
  profile.counts = MatchingCounter(g).count_all();
  while (profile.counts.size() > 1 && profile.counts.back() == 0) {
    profile.counts.pop_back();
  }
  profile.m = profile.counts.size() - 1;
  return profile;
}

std::size_t max_matching_avoiding(const MixedGraph& g, std::span<const std::pair<VertexId, VertexId>> forbidden) {
  return matching_number(delete_edges(g, forbidden));
}

std::size_t brute_force_matching_number(const MixedGraph& g) {
  if (g.edge_count() > kBruteForceMatchingEdgeCap) {
    throw CapExceeded("brute-force matching limited to " + std::to_string(kBruteForceMatchingEdgeCap) + " edges, got " +
                      std::to_string(g.edge_count()));
  }
  std::vector<bool> used(g.vertex_count(), false);
  std::size_t best = 0;
  brute_force(g.edges(), 0, used, 0, best);
  return best;
}

bool is_matching(const MixedGraph& g, const Matching& m) {
  std::vector<bool> used(g.vertex_count(), false);
  for (const auto& [a, b] : m.edges) {
    if (a >= g.vertex_count() || b >= g.vertex_count() || !g.adjacent(a, b) || used[a] || used[b]) {
      return false;
    }
    used[a] = used[b] = true;
  }
  return true;
}

}  // namespace mgx
