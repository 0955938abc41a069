#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gemcraft/graph.hpp"

namespace gemcraft {

/// One traversal of an edge: forward means from edges[edge].first to .second.
struct Dart {
  int edge = -1;
  bool forward = true;
  bool operator==(const Dart&) const = default;
};

/// A 2-cell complex given by explicit vertices, edges and polygonal faces.
/// An edge lying on one face only is a boundary edge.
struct PolygonMap {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<Dart>> faces;

  int tail(Dart d) const { return d.forward ? edges[d.edge].first : edges[d.edge].second; }
  int head(Dart d) const { return d.forward ? edges[d.edge].second : edges[d.edge].first; }

  int euler_characteristic() const {
    return vertex_count - static_cast<int>(edges.size()) + static_cast<int>(faces.size());
  }

  /// For every edge, the (face, position) of each of its occurrences.
  std::vector<std::vector<std::pair<int, int>>> edge_incidence() const;

  /// Throws StructureError unless each face is a closed walk and every edge
  /// lies on one or two face sides.
  void check() const;

  int boundary_component_count() const;

  /// Whether faces can be oriented coherently. Optionally restricted to the
  /// faces marked in `subset` with gluing only across edges marked in `glue`.
  bool orientable() const;
  bool orientable(const std::vector<char>& face_subset, const std::vector<char>& glue_edge) const;

  SurfaceType surface() const;
};

}  // namespace gemcraft
