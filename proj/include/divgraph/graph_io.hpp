#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "divgraph/graph.hpp"

namespace divgraph {

/// Malformed graph record. `line` is 1-based (0 when decoding a lone record),
/// `offset` is the byte offset within the record.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t offset, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t offset() const { return offset_; }

 private:
  std::size_t line_;
  std::size_t offset_;
};

/// One-line record `{"n":4,"edges":[[0,1],[1,2]]}`; edges sorted, u < v.
std::string encode(const Graph& g);
Graph decode(std::string_view record, std::size_t line = 0);

/// Graph set file: one record per line. Blank lines are skipped.
std::vector<Graph> read_graph_set(std::istream& in);
std::vector<Graph> read_graph_set(const std::filesystem::path& path);
void write_graph_set(std::ostream& out, const std::vector<Graph>& graphs);

}  // namespace divgraph
