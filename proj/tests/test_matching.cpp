#include <doctest.h>

#include <vector>

#include "helpers.hpp"
#include "mgx/error.hpp"
#include "mgx/generate.hpp"
#include "mgx/matching.hpp"
#include "oracles.hpp"

using namespace mgx;
using testing::undirected;

namespace {

MixedGraph petersen() {
  MixedGraph g(10);
  for (VertexId i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, i + 5);
  }
  return g;
}

std::vector<BigInt> big(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) {
    out.emplace_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("maximum matchings of small graphs") {
  CHECK(maximum_matching(path_graph(4)).size() == 2);
  CHECK(maximum_matching(cycle_graph(5)).size() == 2);
  CHECK(brute_force_matching_number(petersen()) == 5);
  const Matching p = maximum_matching(petersen());
  CHECK(p.size() == 5);
  CHECK(is_matching(petersen(), p));
  CHECK(matching_number(MixedGraph(4)) == 0);
}

TEST_CASE("matching counts") {
  CHECK(matching_counts(cycle_graph(4)).counts == big({1, 4, 2}));
  CHECK(matching_counts(path_graph(2)).counts == big({1, 1}));
  CHECK(matching_counts(path_graph(5)).counts == big({1, 4, 3}));
  CHECK(matching_counts(path_graph(5)).m == 2);
  CHECK(matching_counts(MixedGraph(2)).counts == big({1}));
}

TEST_CASE("matchings avoiding forbidden edges") {
  // C4 on 0..3 with a pendant vertex 4 at 0.
  const MixedGraph g = undirected(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}});
  const std::pair<VertexId, VertexId> pendant[] = {{4, 0}};
  CHECK(max_matching_avoiding(g, pendant) == 2);
  CHECK(max_matching_avoiding(g, {}) == matching_number(g));
  const std::pair<VertexId, VertexId> all[] = {{0, 1}, {1, 2}, {0, 2}};
  CHECK(max_matching_avoiding(cycle_graph(3), all) == 0);
}

TEST_CASE("brute force matching number") {
  CHECK(brute_force_matching_number(cycle_graph(6)) == 3);
  CHECK(brute_force_matching_number(star_graph(5)) == 1);
  CHECK_THROWS_AS(brute_force_matching_number(complete_graph(8)), CapExceeded);
}

TEST_CASE("blossom agrees with exhaustive search on random graphs") {
  Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    const MixedGraph g = random_graph(rng.between(1, 10), static_cast<unsigned>(rng.between(10, 45)), rng);
    if (g.edge_count() > kBruteForceMatchingEdgeCap) {
      continue;
    }
    const Matching mm = maximum_matching(g);
    CHECK(is_matching(g, mm));
    CHECK(mm.size() == brute_force_matching_number(g));
  }
}

TEST_CASE("matching counts agree with edge-subset enumeration") {
  Rng rng(12);
  for (int t = 0; t < 150; ++t) {
    const MixedGraph g = random_graph(rng.between(1, 9), static_cast<unsigned>(rng.between(15, 50)), rng);
    if (g.edge_count() > 18) {
      continue;
    }
    const auto expected = oracle::matching_counts(g);
    const auto profile = matching_counts(g);
    REQUIRE(profile.counts.size() == expected.size());
    CHECK(profile.m + 1 == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      CHECK(profile.counts[i] == expected[i]);
    }
  }
}

TEST_CASE("is_matching rejects overlapping edges") {
  Matching bad;
  bad.edges = {{0, 1}, {1, 2}};
  CHECK_FALSE(is_matching(path_graph(3), bad));
  Matching missing;
  missing.edges = {{0, 2}};
  CHECK_FALSE(is_matching(path_graph(3), missing));
}
