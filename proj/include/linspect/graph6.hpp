#ifndef LINSPECT_GRAPH6_HPP
#define LINSPECT_GRAPH6_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "linspect/graph.hpp"

namespace linspect {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Decodes one graph6 line (an optional ">>graph6<<" prefix is tolerated):
/// header bytes give n, then the upper adjacency triangle in column-major
/// order packed into 6-bit printable characters.
Graph parse_graph6(std::string_view line);

/// Standard graph6 encoding; inverse of parse_graph6.
std::string to_graph6(const Graph& g);

/// Edge-list text: first non-comment line is the vertex count, every further
/// line one "a b" pair; '#' starts a comment.
Graph parse_edge_list_text(std::string_view text);

std::string to_edge_list_text(const Graph& g);

enum class GraphFormat { graph6, edgelist };

/// Reads a whole file (or "-" for stdin) in the given format; when absent the
/// format is guessed from the ".g6" extension and the leading content.
Graph load_graph(const std::string& path, std::optional<GraphFormat> format = {});

}  // namespace linspect

#endif
