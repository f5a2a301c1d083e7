#include "divgraph/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

namespace divgraph {

ParseError::ParseError(std::size_t line, std::size_t offset, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", offset " + std::to_string(offset) +
                         ": " + what),
      line_(line),
      offset_(offset) {}

std::string encode(const Graph& g) {
  std::string out = "{\"n\":" + std::to_string(g.node_count()) + ",\"edges\":[";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    if (!first) out += ',';
    first = false;
    out += '[';
    out += std::to_string(u);
    out += ',';
    out += std::to_string(v);
    out += ']';
  }
  out += "]}";
  return out;
}

Graph decode(std::string_view record, std::size_t line) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(record);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(line, e.byte, "malformed JSON record");
  }
  auto fail = [&](const std::string& what) -> ParseError { return ParseError(line, 0, what); };
  if (!doc.is_object()) throw fail("record is not an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "n" && key != "edges") throw fail("unexpected key '" + key + "'");
  }
  if (!doc.contains("n") || !doc["n"].is_number_unsigned()) {
    throw fail("\"n\" must be a positive integer");
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) throw fail("\"edges\" must be an array");
  const auto n = doc["n"].get<std::uint64_t>();
  if (n == 0) throw fail("\"n\" must be a positive integer");
  std::vector<Edge> edges;
  edges.reserve(doc["edges"].size());
  for (const auto& pair : doc["edges"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
        !pair[1].is_number_unsigned()) {
      throw fail("each edge must be a pair of node indices");
    }
    const auto u = pair[0].get<std::uint64_t>();
    const auto v = pair[1].get<std::uint64_t>();
    if (u >= n || v >= n) throw fail("edge endpoint out of range");
    if (u == v) throw fail("self-loop at node " + std::to_string(u));
    edges.emplace_back(static_cast<Node>(u), static_cast<Node>(v));
  }
  return Graph::from_edges(n, edges);
}

std::vector<Graph> read_graph_set(std::istream& in) {
  std::vector<Graph> graphs;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    graphs.push_back(decode(text, line));
  }
  return graphs;
}

std::vector<Graph> read_graph_set(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph set " + path.string());
  return read_graph_set(in);
}

void write_graph_set(std::ostream& out, const std::vector<Graph>& graphs) {
  for (const auto& g : graphs) out << encode(g) << '\n';
}

}  // namespace divgraph
