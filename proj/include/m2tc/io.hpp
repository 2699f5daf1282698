#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "m2tc/graph.hpp"

namespace m2tc {

struct ParseOptions {
  /// Input ids run 1..n and are shifted down by one.
  bool one_based = false;
};

struct ParsedGraph {
  Digraph graph;
  /// Present when the document carries a "T: k v1 ... vk" line.
  std::optional<VertexSet> terminals;
};

/// Edge-list document: '#' lines and blank lines are ignored, the first
/// remaining line is "n m", then m lines "u v", then optionally one
/// "T: k v1 ... vk" line. Errors throw ParseError carrying the line number.
ParsedGraph parse_digraph(std::string_view text, const ParseOptions& options = {});

ParsedGraph read_digraph_file(const std::string& path, const ParseOptions& options = {});

/// Writes the same format, edges in stored order.
std::string format_digraph(const Digraph& g, const std::optional<VertexSet>& terminals = std::nullopt,
                           bool one_based = false);

}  // namespace m2tc
