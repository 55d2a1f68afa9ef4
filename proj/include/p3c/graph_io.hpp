#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "p3c/graph.hpp"

namespace p3c {

/// Malformed graph text. The message names the offending line or byte.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class GraphFormat { edge_list, graph6, automatic };

/// Edge-list text: first non-comment line "n m", then m lines "u v" with
/// 0-based ids. Lines whose first non-blank character is '#' are skipped.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph &g);

/// graph6, including the 4-byte and 8-byte size prefixes. A leading
/// ">>graph6<<" header is accepted.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph &g);

/// edge_list when the first non-comment line is two integers, else graph6.
GraphFormat detect_format(std::string_view text);

Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::automatic);

/// Non-empty, non-comment lines, each parsed as one graph6 graph.
std::vector<Graph> parse_graph6_lines(std::string_view text);

/// Undirected DOT. With class ids, each edge is coloured and labelled by the
/// id at the same position in g.edges().
std::string to_dot(const Graph &g, const std::vector<std::size_t> *edge_class = nullptr);

} // namespace p3c
