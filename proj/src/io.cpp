#include "mgx/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "mgx/error.hpp"

namespace mgx {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
      ++i;
    }
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') {
      ++i;
    }
    if (i > start) {
      out.push_back(s.substr(start, i - start));
    }
  }
  return out;
}

std::uint64_t parse_uint(std::string_view word, std::size_t line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    throw ParseError("line " + std::to_string(line) + ": expected non-negative integer, got '" + std::string(word) + "'");
  }
  return value;
}

VertexId parse_vertex(std::string_view word, std::size_t line) {
  const auto v = parse_uint(word, line);
  if (v >= kNoVertex) {
    throw ParseError("line " + std::to_string(line) + ": vertex id too large");
  }
  return static_cast<VertexId>(v);
}

}  // namespace

std::vector<MixedGraph> parse_mg_many(std::string_view text) {
  std::vector<MixedGraph> graphs;
  bool open = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto words = split_words(line);
    const auto& tag = words[0];
    if (tag == "n") {
      if (words.size() != 2) {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'n <count>'");
      }
      graphs.emplace_back(parse_uint(words[1], line_no));
      open = true;
    } else if (tag == "e" || tag == "a") {
      if (!open) {
        throw ParseError("line " + std::to_string(line_no) + ": edge before 'n' line");
      }
      if (words.size() != 3) {
        throw ParseError("line " + std::to_string(line_no) + ": expected '" + std::string(tag) + " u v'");
      }
      const VertexId u = parse_vertex(words[1], line_no);
      const VertexId v = parse_vertex(words[2], line_no);
      try {
        graphs.back().add(u, v, tag == "a" ? Orientation::Forward : Orientation::Undirected);
      } catch (const GraphError& err) {
        throw ParseError("line " + std::to_string(line_no) + ": " + err.what());
      }
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown record '" + std::string(tag) + "'");
    }
  }
  return graphs;
}

MixedGraph parse_mg(std::string_view text) {
  auto graphs = parse_mg_many(text);
  if (graphs.size() != 1) {
    throw ParseError("expected exactly one graph, found " + std::to_string(graphs.size()));
  }
  return std::move(graphs.front());
}

std::string format_mg(const MixedGraph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) {
    if (e.is_arc()) {
      out << "a " << e.tail() << ' ' << e.head() << '\n';
    } else {
      out << "e " << e.u << ' ' << e.v << '\n';
    }
  }
  return out.str();
}

nlohmann::json to_json(const MixedGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) {
    if (e.is_arc()) {
      edges.push_back({{"u", e.tail()}, {"v", e.head()}, {"kind", "a"}});
    } else {
      edges.push_back({{"u", e.u}, {"v", e.v}, {"kind", "e"}});
    }
  }
  return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

MixedGraph graph_from_json(const nlohmann::json& j) {
  try {
    MixedGraph g(j.at("n").get<std::size_t>());
    for (const auto& e : j.at("edges")) {
      const auto kind = e.at("kind").get<std::string>();
      if (kind != "e" && kind != "a") {
        throw ParseError("edge kind must be \"e\" or \"a\", got \"" + kind + "\"");
      }
      g.add(e.at("u").get<VertexId>(), e.at("v").get<VertexId>(), kind == "a" ? Orientation::Forward : Orientation::Undirected);
    }
    return g;
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("bad graph JSON: ") + err.what());
  } catch (const GraphError& err) {
    throw ParseError(std::string("bad graph JSON: ") + err.what());
  }
}

MixedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& err) {
      throw ParseError(path + ": " + err.what());
    }
    return graph_from_json(j);
  }
  return parse_mg(text);
}

void write_graph_file(const std::string& path, const MixedGraph& g) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot write " + path);
  }
  out << format_mg(g);
}

}  // namespace mgx
