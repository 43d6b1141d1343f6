#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "helpers.hpp"
#include "mgx/error.hpp"
#include "mgx/generate.hpp"
#include "mgx/io.hpp"

using namespace mgx;

TEST_CASE("mg text round trip") {
  const MixedGraph g = parse_mg("# comment\nn 4\ne 0 1\na 2 1  # arc 2 -> 1\n\na 2 3\n");
  CHECK(g.vertex_count() == 4);
  REQUIRE(g.edge_count() == 3);
  CHECK(g.edge(1).tail() == 2);
  CHECK(g.edge(1).head() == 1);
  CHECK(format_mg(g) == "n 4\ne 0 1\na 2 1\na 2 3\n");
  CHECK(parse_mg(format_mg(g)) == g);
}

TEST_CASE("several graphs in one stream") {
  const auto gs = parse_mg_many("n 2\ne 0 1\nn 3\n");
  REQUIRE(gs.size() == 2);
  CHECK(gs[1].vertex_count() == 3);
  CHECK_THROWS_AS(parse_mg("n 2\nn 3\n"), ParseError);
  CHECK_THROWS_AS(parse_mg(""), ParseError);
}

TEST_CASE("parse errors carry the line number") {
  const auto message = [](const std::string& text) {
    try {
      parse_mg(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("n 2\ne 0 0\n").rfind("line 2:", 0) == 0);
  CHECK(message("e 0 1\n").rfind("line 1:", 0) == 0);
  CHECK(message("n 2\nx 0 1\n").rfind("line 2:", 0) == 0);
  CHECK(message("n 2\ne 0\n").rfind("line 2:", 0) == 0);
  CHECK(message("n two\n").rfind("line 1:", 0) == 0);
  CHECK(message("n 2\ne 0 1\na 1 0\n").rfind("line 3:", 0) == 0);
  CHECK(message("n 2\ne 0 5\n").rfind("line 2:", 0) == 0);
}

TEST_CASE("json round trip") {
  const MixedGraph g = parse_mg("n 3\na 2 0\ne 1 2\n");
  const auto j = to_json(g);
  CHECK(j["n"] == 3);
  CHECK(j["edges"][0]["u"] == 2);
  CHECK(j["edges"][0]["v"] == 0);
  CHECK(j["edges"][0]["kind"] == "a");
  CHECK(graph_from_json(j) == g);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json{{"n", 2}}), ParseError);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n":2,"edges":[{"u":0,"v":1,"kind":"x"}]})")), ParseError);
}

TEST_CASE("files in both formats") {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string mg_path = (dir / "mgx_io_test.mg").string();
  const std::string json_path = (dir / "mgx_io_test.json").string();
  Rng rng(3);
  const MixedGraph g = random_orientation(random_connected(8, 3, rng), rng);
  write_graph_file(mg_path, g);
  CHECK(read_graph_file(mg_path) == g);
  {
    std::FILE* f = std::fopen(json_path.c_str(), "w");
    REQUIRE(f != nullptr);
    const std::string text = "  " + to_json(g).dump();
    std::fputs(text.c_str(), f);
    std::fclose(f);
  }
  CHECK(read_graph_file(json_path) == g);
  std::filesystem::remove(mg_path);
  std::filesystem::remove(json_path);
  CHECK_THROWS_AS(read_graph_file((dir / "mgx_no_such_file.mg").string()), ParseError);
}
