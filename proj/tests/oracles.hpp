#pragma once

// Slow, independent reference computations used only by the tests. Nothing
// here calls into the library's algorithms beyond reading graph structure.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "mgx/graph.hpp"
#include "mgx/hermitian.hpp"
#include "mgx/numeric.hpp"

namespace oracle {

using mgx::BigInt;
using mgx::GaussianInt;
using mgx::MixedGraph;
using mgx::VertexId;

inline GaussianInt entry(const MixedGraph& g, VertexId r, VertexId c) {
  for (const mgx::Edge& e : g.edges()) {
    if (!((e.u == r && e.v == c) || (e.u == c && e.v == r))) {
      continue;
    }
    if (!e.is_arc()) {
      return {BigInt(1), BigInt(0)};
    }
    return e.tail() == r ? GaussianInt(BigInt(0), BigInt(1)) : GaussianInt(BigInt(0), BigInt(-1));
  }
  return {};
}

// Leibniz determinant of the principal submatrix on `rows`.
inline GaussianInt principal_minor(const MixedGraph& g, const std::vector<VertexId>& rows) {
  std::vector<std::size_t> perm(rows.size());
  std::iota(perm.begin(), perm.end(), 0);
  GaussianInt total;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      for (std::size_t j = i + 1; j < perm.size(); ++j) {
        inversions += perm[i] > perm[j];
      }
    }
    GaussianInt term(BigInt(inversions % 2 == 0 ? 1 : -1), BigInt(0));
    for (std::size_t i = 0; i < perm.size() && !term.is_zero(); ++i) {
      term = term * entry(g, rows[i], rows[perm[i]]);
    }
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// a_j = (-1)^j * (sum of j x j principal minors of H).
inline std::vector<BigInt> charpoly_by_minors(const MixedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<GaussianInt> sums(n + 1);
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    std::vector<VertexId> rows;
    for (VertexId v = 0; v < n; ++v) {
      if (mask & (1U << v)) {
        rows.push_back(v);
      }
    }
    sums[rows.size()] += rows.empty() ? GaussianInt(BigInt(1), BigInt(0)) : principal_minor(g, rows);
  }
  std::vector<BigInt> out;
  for (std::size_t j = 0; j <= n; ++j) {
    if (sums[j].im != 0) {
      throw std::logic_error("principal minor sum is not real");
    }
    out.push_back(j % 2 == 0 ? sums[j].re : BigInt(-sums[j].re));
  }
  return out;
}

// Cyclic Jacobi on the real 2n x 2n embedding [[A, -B], [B, A]] of H = A + iB.
// Every eigenvalue of H appears twice.
inline std::vector<double> eigenvalues(const MixedGraph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t N = 2 * n;
  std::vector<double> a(N * N, 0.0);
  for (const mgx::Edge& e : g.edges()) {
    for (const auto& [r, c] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      const GaussianInt z = entry(g, r, c);
      const double re = z.re.get_d();
      const double im = z.im.get_d();
      a[r * N + c] = re;
      a[(r + n) * N + (c + n)] = re;
      a[r * N + (c + n)] = -im;
      a[(r + n) * N + c] = im;
    }
  }
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t p = 0; p < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        off += a[p * N + q] * a[p * N + q];
      }
    }
    if (off < 1e-30) {
      break;
    }
    for (std::size_t p = 0; p < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const double apq = a[p * N + q];
        if (std::abs(apq) < 1e-300) {
          continue;
        }
        const double theta = (a[q * N + q] - a[p * N + p]) / (2 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (std::size_t k = 0; k < N; ++k) {
          const double akp = a[k * N + p];
          const double akq = a[k * N + q];
          a[k * N + p] = c * akp - s * akq;
          a[k * N + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < N; ++k) {
          const double apk = a[p * N + k];
          const double aqk = a[q * N + k];
          a[p * N + k] = c * apk - s * aqk;
          a[q * N + k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> out;
  for (std::size_t i = 0; i < N; ++i) {
    out.push_back(a[i * N + i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Inertia from numerical eigenvalues; nonzero eigenvalues of these small
// integer matrices are far above the threshold.
inline mgx::Inertia numeric_inertia(const MixedGraph& g) {
  mgx::Inertia in;
  for (double x : eigenvalues(g)) {
    if (x > 1e-7) {
      ++in.p_plus;
    } else if (x < -1e-7) {
      ++in.n_minus;
    } else {
      ++in.nullity;
    }
  }
  if (in.p_plus % 2 || in.n_minus % 2 || in.nullity % 2) {
    throw std::logic_error("embedding eigenvalues are not paired");
  }
  return {in.p_plus / 2, in.n_minus / 2, in.nullity / 2};
}

// Number of i-edge matchings for every i, by scanning all edge subsets.
inline std::vector<std::size_t> matching_counts(const MixedGraph& g) {
  const std::size_t e = g.edge_count();
  std::vector<std::size_t> counts(1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) {
    std::vector<bool> used(g.vertex_count(), false);
    bool ok = true;
    std::size_t size = 0;
    for (std::size_t i = 0; i < e && ok; ++i) {
      if (!(mask >> i & 1U)) {
        continue;
      }
      const mgx::Edge& ed = g.edge(i);
      ok = !used[ed.u] && !used[ed.v];
      used[ed.u] = used[ed.v] = true;
      ++size;
    }
    if (ok) {
      if (counts.size() <= size) {
        counts.resize(size + 1, 0);
      }
      ++counts[size];
    }
  }
  return counts;
}

inline bool connected(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      x = parent[x] = parent[parent[x]];
    }
    return x;
  };
  std::size_t parts = n;
  for (const auto& [a, b] : edges) {
    const auto ra = find(a);
    const auto rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --parts;
    }
  }
  return parts <= 1;
}

// Connected graphs with |E| = |V| on n labelled vertices, by scanning edge
// subsets of K_n.
inline std::size_t count_connected_unicyclic(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> all;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      all.emplace_back(u, v);
    }
  }
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != n) {
      continue;
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (mask >> i & 1U) {
        edges.push_back(all[i]);
      }
    }
    count += connected(n, edges);
  }
  return count;
}

}  // namespace oracle
