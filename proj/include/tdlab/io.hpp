#pragma once

#include <charconv>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "tdlab/errors.hpp"
#include "tdlab/graph.hpp"

namespace tdlab {

/// Largest order representable by the single-byte graph6 order form.
inline constexpr int kMaxGraph6Order = 62;

namespace detail {

inline constexpr int kGraph6Bias = 63;
inline constexpr int kGraph6Max = 126;

inline std::string_view strip_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

inline std::size_t graph6_body_length(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace detail

/// Decodes one graph6 line (a trailing newline is tolerated). Only the
/// single-byte order form (n <= 62) is accepted.
inline Graph parse_graph6(std::string_view line) {
  line = detail::strip_line_end(line);
  if (line.empty()) {
    throw ParseError("empty graph6 line", 0);
  }
  const auto byte_at = [&](std::size_t i) {
    const int c = static_cast<unsigned char>(line[i]);
    if (c < detail::kGraph6Bias || c > detail::kGraph6Max) {
      throw ParseError("graph6 character out of range 63..126", i);
    }
    return c - detail::kGraph6Bias;
  };

  const int n = byte_at(0);
  if (n > kMaxGraph6Order) {
    throw ParseError("graph6 order above 62 (multi-byte order form) is not supported", 0);
  }
  const std::size_t expected = 1 + detail::graph6_body_length(n);
  for (std::size_t i = 1; i < std::min(line.size(), expected); ++i) {
    byte_at(i);
  }
  if (line.size() < expected) {
    throw ParseError("truncated graph6 line", line.size());
  }
  if (line.size() > expected) {
    throw ParseError("trailing garbage after graph6 body", expected);
  }

  std::vector<VertexMask> rows(n, 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int group = byte_at(1 + k / 6);
      if ((group >> (5 - k % 6)) & 1) {
        rows[i] |= bit(j);
        rows[j] |= bit(i);
      }
    }
  }
  if (k % 6 != 0) {
    const int last = byte_at(expected - 1);
    if ((last & ((1 << (6 - k % 6)) - 1)) != 0) {
      throw ParseError("malformed graph6 byte: nonzero padding bits", expected - 1);
    }
  }
  return Graph::from_adjacency(std::move(rows));
}

/// Bit-exact graph6 encoding without a trailing newline.
inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw DomainError("graph6 output supports at most 62 vertices, got " + std::to_string(n));
  }
  std::string out;
  out.reserve(1 + detail::graph6_body_length(n));
  out.push_back(static_cast<char>(n + detail::kGraph6Bias));
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + detail::kGraph6Bias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((group << (6 - filled)) + detail::kGraph6Bias));
  }
  return out;
}

/// Edge-list text: a header line "n m" followed by m lines "u v" (0-based).
/// Blank lines are ignored.
inline Graph parse_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view line = detail::strip_line_end(text.substr(pos, end - pos));
    if (line.find_first_not_of(" \t") != std::string_view::npos) {
      lines.push_back(line);
    }
    pos = end + 1;
  }
  if (lines.empty()) {
    throw ParseError("empty edge list");
  }

  const auto read_pair = [&](std::size_t index) {
    std::string_view line = lines[index];
    long values[2] = {0, 0};
    const char* p = line.data();
    const char* end = line.data() + line.size();
    for (long& value : values) {
      while (p < end && (*p == ' ' || *p == '\t')) {
        ++p;
      }
      auto [next, ec] = std::from_chars(p, end, value);
      if (ec != std::errc{} || next == p) {
        throw ParseError("edge list line " + std::to_string(index + 1) +
                         ": expected two integers, got '" + std::string(line) + "'");
      }
      p = next;
    }
    while (p < end && (*p == ' ' || *p == '\t')) {
      ++p;
    }
    if (p != end) {
      throw ParseError("edge list line " + std::to_string(index + 1) + ": trailing characters");
    }
    return std::pair{values[0], values[1]};
  };

  const auto [n, m] = read_pair(0);
  if (n < 0 || n > kMaxOrder || m < 0) {
    throw ParseError("edge list header out of range: n must be 0.." + std::to_string(kMaxOrder));
  }
  if (lines.size() != static_cast<std::size_t>(m) + 1) {
    throw ParseError("edge list declares " + std::to_string(m) + " edges but has " +
                     std::to_string(lines.size() - 1) + " edge lines");
  }
  std::vector<VertexMask> rows(n, 0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [u, v] = read_pair(i);
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw ParseError("edge list line " + std::to_string(i + 1) + ": invalid edge " +
                       std::to_string(u) + " " + std::to_string(v));
    }
    rows[u] |= bit(static_cast<Vertex>(v));
    rows[v] |= bit(static_cast<Vertex>(u));
  }
  return Graph::from_adjacency(std::move(rows));
}

inline std::string to_edge_list(const Graph& g) {
  const auto edges = g.edges();
  std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
  for (const EdgeRef& e : edges) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

enum class GraphFormat { Auto, Graph6, EdgeList };

/// Auto-detection: first byte in 63..126 and no whitespace before the end of
/// the first line means graph6; anything else is an edge list.
inline GraphFormat detect_format(std::string_view text) {
  const std::string_view first = text.substr(0, text.find('\n'));
  const std::string_view line = detail::strip_line_end(first);
  if (line.empty()) {
    return GraphFormat::EdgeList;
  }
  const int c = static_cast<unsigned char>(line.front());
  const bool graph6_byte = c >= detail::kGraph6Bias && c <= detail::kGraph6Max;
  const bool has_space = line.find_first_of(" \t") != std::string_view::npos;
  return graph6_byte && !has_space ? GraphFormat::Graph6 : GraphFormat::EdgeList;
}

/// Reads a single graph in the given (or detected) format.
inline Graph read_graph(std::string_view text, GraphFormat format = GraphFormat::Auto) {
  if (format == GraphFormat::Auto) {
    format = detect_format(text);
  }
  if (format == GraphFormat::Graph6) {
    const std::string_view line = text.substr(0, text.find('\n'));
    const std::string_view rest = text.substr(std::min(text.size(), line.size() + 1));
    if (rest.find_first_not_of(" \t\r\n") != std::string_view::npos) {
      throw ParseError("expected a single graph6 line", line.size() + 1);
    }
    return parse_graph6(line);
  }
  return parse_edge_list(text);
}

/// Reads a graph6 stream: one graph per line; blank lines and lines starting
/// with ">>" are skipped.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = detail::strip_line_end(line);
    if (view.empty() || view.starts_with(">>")) {
      continue;
    }
    try {
      out.push_back(parse_graph6(view));
    } catch (const ParseError& e) {
      throw ParseError("graph6 stream line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace tdlab
