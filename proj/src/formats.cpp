#include "gutmyc/formats.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <limits>
#include <sstream>

#include "gutmyc/errors.hpp"

namespace gutmyc {

namespace {

constexpr char kBias = 63;
constexpr std::string_view kGraph6Prefix = ">>graph6<<";
constexpr std::uint64_t kMaxOrder = std::numeric_limits<Vertex>::max() / 2 - 1;

std::string_view trim_newline(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> tokens_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool insignificant(const std::vector<std::string_view>& tokens) {
  return tokens.empty() || tokens.front().front() == '#';
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line_no, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(std::string(what) + " is not a nonnegative integer: '" + std::string(tok) + "'", line_no);
  return v;
}

std::size_t parse_header(const std::vector<std::string_view>& tokens, std::size_t line_no) {
  if (tokens.size() != 1) throw ParseError("expected a single vertex count on the header line", line_no);
  std::uint64_t n = parse_uint(tokens[0], line_no, "vertex count");
  if (n > kMaxOrder) throw ParseError("vertex count too large", line_no);
  return static_cast<std::size_t>(n);
}

Edge parse_edge(const std::vector<std::string_view>& tokens, std::size_t n, std::size_t line_no) {
  if (tokens.size() != 2) throw ParseError("expected an edge 'u v'", line_no);
  std::uint64_t u = parse_uint(tokens[0], line_no, "endpoint");
  std::uint64_t v = parse_uint(tokens[1], line_no, "endpoint");
  const std::string pair = "(" + std::string(tokens[0]) + "," + std::string(tokens[1]) + ")";
  if (u >= n || v >= n) throw ParseError("edge " + pair + ": endpoint out of range [0, " + std::to_string(n) + ")", line_no);
  if (u == v) throw ParseError("edge " + pair + ": loop", line_no);
  return {static_cast<Vertex>(u), static_cast<Vertex>(v)};
}

std::uint64_t read_bits6(std::string_view s, std::size_t count) {
  std::uint64_t v = 0;
  for (std::size_t k = 0; k < count; ++k) v = (v << 6) | static_cast<std::uint64_t>(s[k] - kBias);
  return v;
}

void append_bits6(std::string& out, std::uint64_t v, std::size_t count) {
  for (std::size_t k = count; k-- > 0;) out.push_back(static_cast<char>(((v >> (6 * k)) & 0x3f) + kBias));
}

}  // namespace

std::string_view to_string(Format f) { return f == Format::graph6 ? "graph6" : "edgelist"; }

std::optional<Format> parse_format(std::string_view s) {
  if (s == "graph6") return Format::graph6;
  if (s == "edgelist") return Format::edgelist;
  return std::nullopt;
}

Graph parse_graph6(std::string_view line) {
  line = trim_newline(line);
  if (line.starts_with(kGraph6Prefix)) line.remove_prefix(kGraph6Prefix.size());
  if (line.empty()) throw ParseError("empty graph6 record");
  for (std::size_t k = 0; k < line.size(); ++k) {
    const auto c = static_cast<unsigned char>(line[k]);
    if (c < 63 || c > 126)
      throw ParseError("graph6 byte " + std::to_string(k) + " has value " + std::to_string(c) + ", outside 63..126");
  }

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (line[0] != '~') {
    n = static_cast<std::uint64_t>(line[0] - kBias);
    pos = 1;
  } else if (line.size() >= 2 && line[1] == '~') {
    if (line.size() < 8) throw ParseError("truncated graph6 size header");
    n = read_bits6(line.substr(2), 6);
    pos = 8;
  } else {
    if (line.size() < 4) throw ParseError("truncated graph6 size header");
    n = read_bits6(line.substr(1), 3);
    pos = 4;
  }
  if (n > kMaxOrder) throw ParseError("graph6 vertex count " + std::to_string(n) + " too large");

  const std::uint64_t bits = n * (n - (n > 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  const std::string_view body = line.substr(pos);
  if (body.size() < bytes)
    throw ParseError("truncated graph6 bit stream: expected " + std::to_string(bytes) + " data bytes, got " +
                     std::to_string(body.size()));
  if (body.size() > bytes)
    throw ParseError("graph6 record has " + std::to_string(body.size() - bytes) + " unexpected trailing bytes");
  if (bits % 6 != 0) {
    const auto last = static_cast<unsigned>(body.back() - kBias);
    const unsigned pad = 6 - static_cast<unsigned>(bits % 6);
    if ((last & ((1u << pad) - 1)) != 0) throw ParseError("nonzero padding bits in graph6 record");
  }

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const auto byte = static_cast<unsigned>(body[k / 6] - kBias);
      if ((byte >> (5 - k % 6)) & 1u) edges.push_back({i, j});
    }
  }
  return build_graph(static_cast<std::size_t>(n), edges);
}

std::string write_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    append_bits6(out, n, 3);
  } else {
    out.append("~~");
    append_bits6(out, n, 6);
  }
  const std::uint64_t bits = n * (n - (n > 0)) / 2;
  std::vector<std::uint8_t> packed((bits + 5) / 6, 0);
  for (const Edge& e : g.edges()) {
    // e.u < e.v; column-major position of x_{u,v}.
    const std::uint64_t k = static_cast<std::uint64_t>(e.v) * (e.v - 1) / 2 + e.u;
    packed[k / 6] |= static_cast<std::uint8_t>(1u << (5 - k % 6));
  }
  out.reserve(out.size() + packed.size());
  for (std::uint8_t b : packed) out.push_back(static_cast<char>(b + kBias));
  return out;
}

Graph parse_edge_list(std::string_view doc) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  while (!doc.empty()) {
    const std::size_t cut = doc.find('\n');
    const std::string_view line = doc.substr(0, cut);
    doc = cut == std::string_view::npos ? std::string_view{} : doc.substr(cut + 1);
    ++line_no;
    const auto tokens = tokens_of(line);
    if (insignificant(tokens)) continue;
    if (!n) {
      n = parse_header(tokens, line_no);
      continue;
    }
    edges.push_back(parse_edge(tokens, *n, line_no));
  }
  if (!n) throw ParseError("missing vertex-count header");
  return build_graph(*n, edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

GraphReader::GraphReader(std::istream& in, Format format) : in_(in), format_(format) {}

std::optional<GraphRecord> GraphReader::next() {
  return format_ == Format::graph6 ? next_graph6() : next_edgelist();
}

std::optional<GraphRecord> GraphReader::next_graph6() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    const std::string_view view = trim_newline(line);
    if (view.empty()) continue;
    GraphRecord rec;
    rec.index = index_++;
    rec.line = line_no_;
    try {
      rec.graph = parse_graph6(view);
    } catch (const Error& e) {
      rec.error = ParseError(e.what(), line_no_).what();
    }
    return rec;
  }
  return std::nullopt;
}

std::optional<GraphRecord> GraphReader::next_edgelist() {
  std::string header;
  std::size_t header_line = 0;
  if (pending_) {
    header = std::move(*pending_);
    header_line = pending_line_;
    pending_.reset();
  } else {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (insignificant(tokens_of(line))) continue;
      header = std::move(line);
      header_line = line_no_;
      break;
    }
    if (header_line == 0) return std::nullopt;
  }

  GraphRecord rec;
  rec.index = index_++;
  rec.line = header_line;
  std::size_t n = 0;
  try {
    const auto tokens = tokens_of(header);
    if (tokens.size() == 2) throw ParseError("edge line before any vertex-count header", header_line);
    n = parse_header(tokens, header_line);
  } catch (const ParseError& e) {
    rec.error = e.what();
  }

  std::vector<Edge> edges;
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    const auto tokens = tokens_of(line);
    if (insignificant(tokens)) continue;
    if (tokens.size() == 1) {
      pending_ = std::move(line);
      pending_line_ = line_no_;
      break;
    }
    if (!rec.error.empty()) continue;
    try {
      edges.push_back(parse_edge(tokens, n, line_no_));
    } catch (const ParseError& e) {
      rec.error = e.what();
    }
  }
  if (rec.error.empty()) rec.graph = build_graph(n, edges);
  return rec;
}

std::vector<GraphRecord> read_graphs(std::istream& in, Format format) {
  GraphReader reader(in, format);
  std::vector<GraphRecord> out;
  while (auto rec = reader.next()) out.push_back(std::move(*rec));
  return out;
}

}  // namespace gutmyc
