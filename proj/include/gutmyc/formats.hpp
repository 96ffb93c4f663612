#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gutmyc/graph.hpp"

namespace gutmyc {

enum class Format : std::uint8_t { graph6, edgelist };
std::string_view to_string(Format f);
std::optional<Format> parse_format(std::string_view s);

// graph6: size header (one byte n+63 for n <= 62, '~' plus three bytes for
// n <= 258047, "~~" plus six bytes beyond that) followed by the upper
// triangle x01, x02, x12, x03, ... packed six bits per byte, MSB first,
// each byte offset by 63 and the last one zero-padded. An optional
// ">>graph6<<" prefix and a trailing '\r' are accepted.
Graph parse_graph6(std::string_view line);

// Shortest header, zero padding.
std::string write_graph6(const Graph& g);

// Edge list: first significant line is the vertex count, then one "u v"
// pair per line. Blank lines and lines starting with '#' are ignored.
Graph parse_edge_list(std::string_view doc);
std::string write_edge_list(const Graph& g);

// One element of a graph stream. Exactly one of graph / error is set.
struct GraphRecord {
  std::size_t index = 0;  // 0-based record position in the stream
  std::size_t line = 0;   // 1-based line where the record starts
  std::optional<Graph> graph;
  std::string error;

  bool ok() const { return graph.has_value(); }
};

// Pull parser over a multi-graph text stream. graph6 sources hold one
// graph per non-blank line. Edge-list sources hold consecutive documents:
// a line with a single integer opens a new record, two-integer lines add
// edges to it. A malformed record is reported in place and parsing resumes
// with the next record.
class GraphReader {
 public:
  GraphReader(std::istream& in, Format format);

  std::optional<GraphRecord> next();

 private:
  std::optional<GraphRecord> next_graph6();
  std::optional<GraphRecord> next_edgelist();

  std::istream& in_;
  Format format_;
  std::size_t line_no_ = 0;
  std::size_t index_ = 0;
  std::optional<std::string> pending_;  // edge-list header read ahead
  std::size_t pending_line_ = 0;
};

std::vector<GraphRecord> read_graphs(std::istream& in, Format format);

}  // namespace gutmyc
