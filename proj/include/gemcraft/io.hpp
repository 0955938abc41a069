#pragma once

#include <string>

#include "gemcraft/graph.hpp"

namespace gemcraft {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// gem-v1 JSON: {"format":"gem-v1","vertices":n,"edges":[[u,v,c],...]}.
/// Edges are written sorted by (u, c) with u < v.
std::string graph_to_json(const ColouredGraph& g);
ColouredGraph graph_from_json(const std::string& text);

/// Cycle notation, one line per colour:
///   vertices 4
///   0: (0 1)(2 3)
///   3: (0 2)(1 -)(3 -)
std::string graph_to_text(const ColouredGraph& g);
ColouredGraph graph_from_text(const std::string& text);

/// Chooses JSON or cycle notation by the first non-blank character.
ColouredGraph parse_graph(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace gemcraft
