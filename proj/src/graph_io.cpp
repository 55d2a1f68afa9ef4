#include "p3c/graph_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

namespace p3c {

namespace {

struct Line {
  std::size_t number; // 1-based
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && blank(s.front()))
    s.remove_prefix(1);
  while (!s.empty() && blank(s.back()))
    s.remove_suffix(1);
  return s;
}

// Non-blank lines that are not '#' comments.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    auto line = trim(raw);
    if (line.empty() || line.front() == '#')
      continue;
    out.push_back({number, line});
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
      ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t')
      ++j;
    if (j > i)
      out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long long> to_integer(std::string_view token) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    return std::nullopt;
  return value;
}

[[noreturn]] void fail(std::size_t line, const std::string &what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

bool is_size_header(std::string_view line) {
  auto t = tokens(line);
  return t.size() == 2 && to_integer(t[0]) && to_integer(t[1]);
}

} // namespace

Graph parse_edge_list(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty())
    throw ParseError("line 1: missing \"n m\" header");

  const auto header = tokens(lines[0].text);
  if (header.size() != 2)
    fail(lines[0].number, "expected \"n m\"");
  auto n = to_integer(header[0]);
  auto m = to_integer(header[1]);
  if (!n || !m)
    fail(lines[0].number, "malformed header token");
  if (*n < 0 || *m < 0)
    fail(lines[0].number, "negative count in header");
  if (*n > (1 << 24))
    fail(lines[0].number, "vertex count too large");

  if (static_cast<long long>(lines.size()) - 1 < *m)
    fail(lines.empty() ? 1 : lines.back().number,
         "expected " + std::to_string(*m) + " edge lines, found " + std::to_string(lines.size() - 1));
  if (static_cast<long long>(lines.size()) - 1 > *m)
    fail(lines[static_cast<std::size_t>(*m) + 1].number, "more edge lines than declared");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(*m));
  std::vector<std::pair<Edge, std::size_t>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto &line = lines[i];
    auto t = tokens(line.text);
    if (t.size() != 2)
      fail(line.number, "expected \"u v\"");
    auto u = to_integer(t[0]);
    auto v = to_integer(t[1]);
    if (!u || !v)
      fail(line.number, "malformed vertex token");
    if (*u < 0 || *v < 0 || *u >= *n || *v >= *n)
      fail(line.number, "vertex id out of range 0.." + std::to_string(*n - 1));
    if (*u == *v)
      fail(line.number, "self-loop at vertex " + std::to_string(*u));
    Edge e = make_edge(static_cast<Vertex>(*u), static_cast<Vertex>(*v));
    seen.emplace_back(e, line.number);
    edges.push_back(e);
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 1; i < seen.size(); ++i)
    if (seen[i].first == seen[i - 1].first)
      fail(std::max(seen[i].second, seen[i - 1].second), "duplicate edge " + to_string(seen[i].first));

  return Graph(static_cast<int>(*n), std::move(edges));
}

std::string emit_edge_list(const Graph &g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto &e : g.edges())
    out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header)
    text.remove_prefix(header.size());
  if (text.empty())
    throw ParseError("byte 0: empty graph6 string");

  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw ParseError("byte " + std::to_string(i) + ": character outside 63..126");
  }

  std::size_t pos = 0;
  const auto take = [&](std::size_t count) {
    if (pos + count > text.size())
      throw ParseError("byte " + std::to_string(text.size()) + ": truncated size field");
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < count; ++i)
      value = (value << 6) | static_cast<std::uint64_t>(text[pos + i] - 63);
    pos += count;
    return value;
  };

  std::uint64_t n = 0;
  if (text[0] != 126) {
    n = take(1);
  } else if (text.size() > 1 && text[1] != 126) {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }
  if (n > (1U << 24))
    throw ParseError("byte 0: vertex count too large");

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes)
    throw ParseError("byte " + std::to_string(text.size()) + ": truncated bit payload, expected " +
                     std::to_string(bytes) + " bytes");
  if (text.size() - pos > bytes)
    throw ParseError("byte " + std::to_string(pos + bytes) + ": trailing data after bit payload");

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int chunk = text[pos + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1)
        edges.push_back({i, j});
    }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string emit_graph6(const Graph &g) {
  std::string out;
  const auto n = static_cast<std::uint64_t>(g.order());
  const auto put = [&](std::uint64_t value, int chunks) {
    for (int i = chunks - 1; i >= 0; --i)
      out.push_back(static_cast<char>(((value >> (6 * i)) & 63) + 63));
  };
  if (n <= 62) {
    put(n, 1);
  } else if (n <= 258047) {
    out.push_back(126);
    put(n, 3);
  } else {
    out.push_back(126);
    out.push_back(126);
    put(n, 6);
  }

  int chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.order(); ++j)
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = filled = 0;
      }
    }
  if (filled > 0)
    out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

GraphFormat detect_format(std::string_view text) {
  auto lines = content_lines(text);
  if (!lines.empty() && is_size_header(lines[0].text))
    return GraphFormat::edge_list;
  return GraphFormat::graph6;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::automatic)
    format = detect_format(text);
  if (format == GraphFormat::edge_list)
    return parse_edge_list(text);
  auto lines = content_lines(text);
  if (lines.size() != 1)
    throw ParseError("expected exactly one graph6 line, found " + std::to_string(lines.size()));
  try {
    return parse_graph6(lines[0].text);
  } catch (const ParseError &e) {
    throw ParseError("line " + std::to_string(lines[0].number) + ", " + e.what());
  }
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  for (const auto &line : content_lines(text)) {
    try {
      out.push_back(parse_graph6(line.text));
    } catch (const ParseError &e) {
      throw ParseError("line " + std::to_string(line.number) + ", " + e.what());
    }
  }
  return out;
}

std::string to_dot(const Graph &g, const std::vector<std::size_t> *edge_class) {
  static constexpr std::array<const char *, 12> palette = {
      "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
      "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939"};

  // Colours follow the rank of the class id, not the raw id.
  std::vector<std::size_t> ids;
  if (edge_class) {
    if (edge_class->size() != g.size())
      throw ContractViolation("one class id per edge required");
    ids = *edge_class;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  }

  std::ostringstream out;
  out << "graph {\n";
  for (Vertex v = 0; v < g.order(); ++v)
    out << "  " << v << ";\n";
  for (EdgeId id = 0; id < g.size(); ++id) {
    const auto &e = g.edge(id);
    out << "  " << e.u << " -- " << e.v;
    if (edge_class) {
      const std::size_t cls = (*edge_class)[id];
      const auto rank = static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), cls) - ids.begin());
      out << " [color=\"" << palette[rank % palette.size()] << "\", label=\"" << cls << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

} // namespace p3c
