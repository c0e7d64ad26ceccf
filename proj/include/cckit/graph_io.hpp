#pragma once

#include <string>
#include <string_view>

#include "cckit/multigraph.hpp"

namespace cckit {

enum class GraphFormat { graph6, edgelist, dot };

GraphFormat parse_format(std::string_view name);
const char* format_extension(GraphFormat f);

/// One graph6 line without the trailing newline. Throws InvalidInput for multigraphs.
std::string to_graph6(const Multigraph& g);
/// Vertices are labelled 0..n-1. Accepts an optional ">>graph6<<" header.
Multigraph from_graph6(std::string_view line);

/// Every vertex on its own line (keeps ids and isolated vertices), then `u v k` lines.
std::string to_edgelist(const Multigraph& g);
/// `u v [k]` per line, a lone token declares a vertex, '#' starts a comment.
Multigraph from_edgelist(std::string_view text);

/// Parallel edges are drawn as repeated lines.
std::string to_dot(const Multigraph& g, std::string_view name = "G");

std::string serialize(const Multigraph& g, GraphFormat f);
/// Picks graph6 for *.g6, the edge-list reader otherwise.
Multigraph read_graph_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace cckit
