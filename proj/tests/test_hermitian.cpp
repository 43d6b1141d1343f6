#include <doctest.h>

#include <cstdint>
#include <vector>

#include "helpers.hpp"
#include "mgx/generate.hpp"
#include "mgx/hermitian.hpp"
#include "oracles.hpp"

using namespace mgx;
using testing::mg;

namespace {

IntPolynomial poly(std::initializer_list<long> xs) {
  std::vector<BigInt> c;
  for (long x : xs) {
    c.emplace_back(x);
  }
  return IntPolynomial(std::move(c));
}

GaussianInt gi(long re, long im = 0) { return {BigInt(re), BigInt(im)}; }

}  // namespace

TEST_CASE("hermitian adjacency entries") {
  const HermitianMatrix arc = hermitian_adjacency(mg("n 2\na 0 1\n"));
  CHECK(arc(0, 1) == gi(0, 1));
  CHECK(arc(1, 0) == gi(0, -1));
  CHECK(arc(0, 0) == gi(0));
  const HermitianMatrix edge = hermitian_adjacency(mg("n 2\ne 0 1\n"));
  CHECK(edge(0, 1) == gi(1));
  CHECK(edge(1, 0) == gi(1));
  CHECK(hermitian_adjacency(MixedGraph(3)) == HermitianMatrix(3));
}

TEST_CASE("from_rows requires a Hermitian matrix") {
  CHECK_NOTHROW(HermitianMatrix::from_rows({{gi(0), gi(2, 1)}, {gi(2, -1), gi(3)}}));
  CHECK_THROWS_AS(HermitianMatrix::from_rows({{gi(0), gi(0, 1)}, {gi(0, 1), gi(0)}}), std::invalid_argument);
  CHECK_THROWS_AS(HermitianMatrix::from_rows({{gi(0, 1)}}), std::invalid_argument);
  CHECK_THROWS_AS(HermitianMatrix::from_rows({{gi(0), gi(1)}}), std::invalid_argument);
}

TEST_CASE("characteristic polynomials of small graphs") {
  CHECK(charpoly(cycle_graph(3)) == poly({1, 0, -3, -2}));
  CHECK(charpoly(cycle_graph(4)) == poly({1, 0, -4, 0, 0}));
  CHECK(charpoly(path_graph(3)) == poly({1, 0, -2, 0}));
  CHECK(charpoly(MixedGraph(0)) == poly({1}));
  CHECK(charpoly(mg("n 3\na 0 1\na 1 2\ne 2 0\n")) == poly({1, 0, -3, 2}));
  CHECK(charpoly(cycle_graph(3)).to_string() == "1 0 -3 -2");
}

TEST_CASE("polynomial product") {
  CHECK(poly({1, 1}) * poly({1, -1}) == poly({1, 0, -1}));
  CHECK(poly({1}) * poly({1, 0, -3}) == poly({1, 0, -3}));
}

TEST_CASE("inertia from a characteristic polynomial") {
  CHECK(inertia_from_charpoly(poly({1, 0, -3, 0})) == Inertia{1, 1, 1});
  CHECK(inertia_from_charpoly(poly({1, 0, -3, -2})) == Inertia{1, 2, 0});
  CHECK(inertia_from_charpoly(poly({1, 0, -4, 0, 0})) == Inertia{1, 1, 2});
  const std::int64_t c3[] = {1, 0, -3, -2};
  CHECK(inertia_from_charpoly(std::span<const std::int64_t>(c3)) == Inertia{1, 2, 0});
  CHECK(inertia_from_charpoly(poly({1})) == Inertia{0, 0, 0});
}

TEST_CASE("inertia by congruence") {
  CHECK(inertia_by_congruence(HermitianMatrix::from_rows({{gi(0), gi(1)}, {gi(1), gi(0)}})) == Inertia{1, 1, 0});
  CHECK(inertia_by_congruence(HermitianMatrix(3)) == Inertia{0, 0, 3});
  CHECK(inertia_by_congruence(hermitian_adjacency(cycle_graph(5))) == Inertia{3, 2, 0});
  CHECK(inertia_by_congruence(HermitianMatrix::from_rows({{gi(2), gi(0, 1)}, {gi(0, -1), gi(-3)}})) ==
        Inertia{1, 1, 0});
}

TEST_CASE("rank") {
  CHECK(rank(hermitian_adjacency(cycle_graph(4))) == 2);
  CHECK(rank(hermitian_adjacency(mg("n 3\na 0 1\ne 1 2\ne 2 0\n"))) == 2);
  CHECK(rank(HermitianMatrix(4)) == 0);
}

TEST_CASE("charpoly agrees with the principal minor expansion on every orientation") {
  const MixedGraph bases[] = {path_graph(4), cycle_graph(4), star_graph(4), complete_graph(4),
                              testing::undirected(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}})};
  for (const auto& base : bases) {
    for_each_orientation(base, [](const MixedGraph& g) {
      const auto expected = oracle::charpoly_by_minors(g);
      CHECK(charpoly(g).coefficients() == expected);
    });
  }
}

TEST_CASE("charpoly agrees with the principal minor expansion on random graphs") {
  Rng rng(21);
  for (int t = 0; t < 60; ++t) {
    const MixedGraph g = random_orientation(random_graph(rng.between(1, 7), 50, rng), rng);
    CHECK(charpoly(g).coefficients() == oracle::charpoly_by_minors(g));
  }
}

TEST_CASE("all charpoly arithmetic paths agree") {
  Rng rng(22);
  for (int t = 0; t < 200; ++t) {
    const MixedGraph g = random_orientation(random_graph(rng.between(1, 14), 40, rng), rng);
    const HermitianMatrix h = hermitian_adjacency(g);
    const IntPolynomial big = detail::charpoly_bigint(h);
    CHECK(detail::charpoly_checked64(h) == big);
    CHECK(charpoly(h) == big);
    CHECK(charpoly(g) == big);
    std::vector<std::int64_t> fast;
    REQUIRE(detail::charpoly_int64(g, fast));
    REQUIRE(fast.size() == big.degree() + 1);
    for (std::size_t j = 0; j < fast.size(); ++j) {
      CHECK(BigInt(static_cast<long>(fast[j])) == big[j]);
    }
  }
}

TEST_CASE("large complete graph exceeds 64 bits and falls back") {
  // det(lambda I - (J - I)) = (lambda - n + 1)(lambda + 1)^(n-1); the middle
  // coefficients of K70 exceed 2^63.
  const int n = 70;
  const MixedGraph g = complete_graph(n);
  std::vector<std::int64_t> fast;
  CHECK_FALSE(detail::charpoly_int64(g, fast));
  IntPolynomial expected = poly({1, -(n - 1)});
  for (int i = 0; i < n - 1; ++i) {
    expected = expected * poly({1, 1});
  }
  CHECK(charpoly(g) == expected);
  CHECK(inertia(g) == Inertia{1, n - 1, 0});
}

TEST_CASE("Descartes, congruence and numerical eigenvalues agree") {
  Rng rng(23);
  for (int t = 0; t < 150; ++t) {
    const MixedGraph g = random_orientation(random_graph(rng.between(1, 10), static_cast<unsigned>(rng.between(20, 70)), rng), rng);
    const Inertia d = inertia(g, InertiaMethod::Descartes);
    CHECK(d == inertia(g, InertiaMethod::Congruence));
    CHECK(d == oracle::numeric_inertia(g));
    CHECK(d.order() == g.vertex_count());
  }
}

TEST_CASE("inertia to_string") {
  CHECK_FALSE(inertia(cycle_graph(3)).to_string().empty());
}
