#include <doctest.h>

#include <set>
#include <vector>

#include "helpers.hpp"
#include "mgx/elementary.hpp"
#include "mgx/error.hpp"
#include "mgx/generate.hpp"
#include "oracles.hpp"

using namespace mgx;
using testing::mg;

TEST_CASE("cycle signature") {
  const MixedGraph t = mg("n 3\na 0 1\na 1 2\ne 2 0\n");
  const VertexId tri[] = {0, 1, 2};
  CHECK(signature(t, tri) == CycleSignature{2, 0});
  CHECK(signature(t, tri).sigma() == 2);
  const VertexId back[] = {0, 2, 1};
  CHECK(signature(t, back) == CycleSignature{0, 2});

  const VertexId hex[] = {0, 1, 2, 3, 4, 5};
  CHECK(signature(cycle_graph(6), hex).sigma() == 0);

  const MixedGraph d4 = mg("n 4\na 0 1\na 1 2\na 2 3\na 3 0\n");
  const VertexId sq[] = {0, 1, 2, 3};
  CHECK(signature(d4, sq).sigma() == 4);

  const VertexId not_cycle[] = {0, 2, 1, 3};
  CHECK_THROWS_AS(signature(d4, not_cycle), GraphError);
  const VertexId too_short[] = {0, 1};
  CHECK_THROWS_AS(signature(path_graph(2), too_short), GraphError);
}

TEST_CASE("real cycles") {
  const VertexId tri[] = {0, 1, 2};
  CHECK(is_real(mg("n 3\na 0 1\na 1 2\ne 2 0\n"), tri));
  CHECK_FALSE(is_real(mg("n 3\na 0 1\ne 1 2\ne 2 0\n"), tri));
  CHECK(is_real(cycle_graph(3), tri));
  CHECK(cycle_value(mg("n 3\na 0 1\ne 1 2\ne 2 0\n"), tri) == Gaussian<int>{0, 1});
  CHECK(cycle_value(mg("n 3\na 0 1\na 1 2\ne 2 0\n"), tri) == Gaussian<int>{-1, 0});
  CHECK(cycle_value(cycle_graph(3), tri) == Gaussian<int>{1, 0});
}

TEST_CASE("coefficients by enumeration") {
  CHECK(coefficient_by_enumeration(cycle_graph(4), 4) == 0);
  CHECK(coefficient_by_enumeration(cycle_graph(3), 3) == -2);
  CHECK(coefficient_by_enumeration(complete_graph(5), 1) == 0);
  CHECK(coefficient_by_enumeration(complete_graph(5), 0) == 1);
}

TEST_CASE("charpoly by enumeration") {
  CHECK(charpoly_by_enumeration(path_graph(3)) == IntPolynomial({BigInt(1), BigInt(0), BigInt(-2), BigInt(0)}));
  CHECK(charpoly_by_enumeration(mg("n 3\na 0 1\na 1 2\ne 2 0\n")) ==
        IntPolynomial({BigInt(1), BigInt(0), BigInt(-3), BigInt(2)}));
  CHECK(charpoly_by_enumeration(MixedGraph(1)) == IntPolynomial({BigInt(1), BigInt(0)}));
  CHECK_THROWS_AS(charpoly_by_enumeration(path_graph(kEnumerationVertexCap + 1)), CapExceeded);
}

TEST_CASE("each real elementary subgraph is visited once") {
  // K4: 3 perfect matchings, 6 single edges, 4 triangles, 3 four-cycles, and
  // the empty subgraph; all cycles are real when undirected.
  std::size_t count = 0;
  std::set<std::pair<std::vector<std::pair<VertexId, VertexId>>, std::vector<std::vector<VertexId>>>> seen;
  for_each_real_elementary_subgraph(complete_graph(4), [&](const ElementarySubgraph& b) {
    ++count;
    seen.insert({b.k2_edges, b.cycles});
    CHECK(b.omega() == b.k2_edges.size() + b.cycles.size());
  });
  CHECK(count == 17);
  CHECK(seen.size() == 17);
}

TEST_CASE("non-real cycles are skipped") {
  std::size_t cycles = 0;
  for_each_real_elementary_subgraph(mg("n 3\na 0 1\ne 1 2\ne 2 0\n"), [&](const ElementarySubgraph& b) {
    cycles += b.cycle_count();
  });
  CHECK(cycles == 0);
}

TEST_CASE("enumeration agrees with the principal minor expansion") {
  Rng rng(31);
  for (int t = 0; t < 80; ++t) {
    const MixedGraph g = random_orientation(random_graph(rng.between(1, 7), static_cast<unsigned>(rng.between(30, 80)), rng), rng);
    CHECK(charpoly_by_enumeration(g).coefficients() == oracle::charpoly_by_minors(g));
  }
}
