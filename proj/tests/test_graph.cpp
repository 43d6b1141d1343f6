#include <doctest.h>

#include <algorithm>
#include <vector>

#include "helpers.hpp"
#include "mgx/error.hpp"
#include "mgx/generate.hpp"
#include "mgx/graph.hpp"

using namespace mgx;
using testing::mg;
using testing::undirected;

TEST_CASE("edges are canonicalised and arcs keep their direction") {
  MixedGraph g(3);
  g.add_arc(2, 0);
  const Edge& e = g.edge(0);
  CHECK(e.u == 0);
  CHECK(e.v == 2);
  CHECK(e.is_arc());
  CHECK(e.tail() == 2);
  CHECK(e.head() == 0);
  CHECK(g.adjacent(0, 2));
  CHECK_FALSE(g.adjacent(0, 1));
}

TEST_CASE("malformed edges are rejected") {
  MixedGraph g(3);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(1, 1), GraphError);
  CHECK_THROWS_AS(g.add_edge(1, 0), GraphError);
  CHECK_THROWS_AS(g.add_arc(0, 1), GraphError);
  CHECK_THROWS_AS(g.add_edge(0, 3), GraphError);
}

TEST_CASE("underlying and reversed graphs") {
  const MixedGraph g = mg("n 3\na 0 1\ne 1 2\n");
  const MixedGraph u = g.underlying();
  CHECK_FALSE(u.edge(0).is_arc());
  const MixedGraph r = g.reversed();
  CHECK(r.edge(0).tail() == 1);
  CHECK(r.reversed() == g);
}

TEST_CASE("components") {
  SUBCASE("two disjoint edges") {
    const auto parts = components(undirected(4, {{0, 1}, {2, 3}}));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].graph.vertex_count() == 2);
    CHECK(parts[1].graph.vertex_count() == 2);
  }
  SUBCASE("cycle C5") { CHECK(components(cycle_graph(5)).size() == 1); }
  SUBCASE("empty graph on three vertices") {
    const auto parts = components(MixedGraph(3));
    REQUIRE(parts.size() == 3);
    for (const auto& p : parts) {
      CHECK(p.graph.vertex_count() == 1);
    }
  }
}

TEST_CASE("cycle space dimension") {
  Rng rng(7);
  CHECK(cycle_space_dim(random_tree(7, rng)) == 0);
  CHECK(cycle_space_dim(cycle_graph(4)) == 1);
  CHECK(cycle_space_dim(disjoint_union(cycle_graph(3), cycle_graph(3))) == 2);
  CHECK(cycle_space_dim(complete_graph(4)) == 3);
}

TEST_CASE("pendant and quasi-pendant pairs") {
  const auto p3 = pendant_and_quasi_pendant(path_graph(3));
  CHECK(p3 == std::vector<PendantPair>{{0, 1}, {2, 1}});
  CHECK(pendant_and_quasi_pendant(cycle_graph(4)).empty());
  const auto k2 = pendant_and_quasi_pendant(path_graph(2));
  CHECK(k2 == std::vector<PendantPair>{{0, 1}});
  CHECK(is_quasi_pendant(path_graph(3), 1));
  CHECK_FALSE(is_quasi_pendant(path_graph(2), 0));
}

TEST_CASE("vertex deletion") {
  SUBCASE("C4 minus a vertex is P3") {
    const VertexId x[] = {2};
    const auto sub = delete_vertices(cycle_graph(4), x);
    CHECK(sub.graph.vertex_count() == 3);
    CHECK(sub.graph.edge_count() == 2);
    CHECK(cycle_space_dim(sub.graph) == 0);
    CHECK(is_connected(sub.graph));
    CHECK(sub.from_parent[2] == kNoVertex);
    CHECK(sub.to_parent == std::vector<VertexId>{0, 1, 3});
  }
  SUBCASE("empty deletion is the identity") {
    const MixedGraph g = mg("n 4\na 0 1\ne 1 2\na 3 2\n");
    const auto sub = delete_vertices(g, std::span<const VertexId>{});
    CHECK(sub.graph == g);
  }
  SUBCASE("triangle with pendant minus pendant and quasi") {
    const MixedGraph g = undirected(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
    const VertexId x[] = {3, 0};
    const auto sub = delete_vertices(g, x);
    CHECK(sub.graph.vertex_count() == 2);
    CHECK(sub.graph.edge_count() == 1);
  }
  SUBCASE("arcs survive with their direction") {
    const MixedGraph g = mg("n 3\na 2 1\ne 0 1\n");
    const VertexId x[] = {0};
    const auto sub = delete_vertices(g, x);
    REQUIRE(sub.graph.edge_count() == 1);
    CHECK(sub.graph.edge(0).tail() == 1);
    CHECK(sub.graph.edge(0).head() == 0);
  }
  SUBCASE("unknown id") {
    const VertexId x[] = {9};
    CHECK_THROWS_AS(delete_vertices(path_graph(3), x), GraphError);
  }
}

TEST_CASE("edge deletion") {
  const std::pair<VertexId, VertexId> drop[] = {{1, 0}};
  const MixedGraph g = delete_edges(cycle_graph(4), drop);
  CHECK(g.edge_count() == 3);
  CHECK_FALSE(g.adjacent(0, 1));
  const std::pair<VertexId, VertexId> missing[] = {{0, 2}};
  CHECK_THROWS_AS(delete_edges(cycle_graph(4), missing), GraphError);
}

TEST_CASE("blocks") {
  SUBCASE("triangle with a pendant edge") {
    const auto b = blocks(undirected(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}));
    CHECK(b.blocks.size() == 2);
    CHECK(b.cut_vertices == std::vector<VertexId>{2});
    CHECK(std::count(b.blocks.begin(), b.blocks.end(), std::vector<VertexId>{0, 1, 2}) == 1);
    CHECK(std::count(b.blocks.begin(), b.blocks.end(), std::vector<VertexId>{2, 3}) == 1);
  }
  SUBCASE("P4") {
    const auto b = blocks(path_graph(4));
    CHECK(b.blocks.size() == 3);
    CHECK(b.cut_vertices == std::vector<VertexId>{1, 2});
  }
  SUBCASE("C5") {
    const auto b = blocks(cycle_graph(5));
    CHECK(b.blocks.size() == 1);
    CHECK(b.cut_vertices.empty());
  }
}

TEST_CASE("disjoint cycles") {
  SUBCASE("two triangles joined by a path") {
    const auto c = all_cycles_if_disjoint(undirected(7, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 4}}));
    REQUIRE(c.has_value());
    CHECK(*c == std::vector<std::vector<VertexId>>{{0, 1, 2}, {4, 5, 6}});
  }
  SUBCASE("two triangles sharing a vertex") {
    CHECK_FALSE(all_cycles_if_disjoint(undirected(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}})).has_value());
  }
  SUBCASE("K4") { CHECK_FALSE(all_cycles_if_disjoint(complete_graph(4)).has_value()); }
  SUBCASE("tree has no cycles") {
    const auto c = all_cycles_if_disjoint(star_graph(5));
    REQUIRE(c.has_value());
    CHECK(c->empty());
  }
  SUBCASE("traversal starts at the smallest vertex toward the smaller neighbour") {
    const auto c = all_cycles_if_disjoint(undirected(4, {{3, 1}, {1, 2}, {2, 0}, {0, 3}}));
    REQUIRE(c.has_value());
    CHECK(c->front() == std::vector<VertexId>{0, 2, 1, 3});
  }
}

TEST_CASE("on-cycle mask") {
  const auto mask = on_cycle_mask(undirected(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}}));
  CHECK(mask == std::vector<bool>{true, true, true, false, false});
}

TEST_CASE("disjoint union shifts the second graph") {
  const MixedGraph g = disjoint_union(mg("n 2\na 1 0\n"), mg("n 2\na 0 1\n"));
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge(1).tail() == 2);
  CHECK(g.edge(1).head() == 3);
  CHECK(component_count(g) == 2);
}
