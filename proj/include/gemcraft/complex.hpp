#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gemcraft/graph.hpp"

namespace gemcraft {

/// The pseudocomplex K(g): one tetrahedron per vertex of g, corners labelled
/// by colours, and the face opposite corner c glued along the c-edge.
struct Pseudocomplex {
  std::vector<std::array<int, 4>> gluings;        // partner tetrahedron, or -1 (boundary face)
  std::vector<std::array<int, 4>> corner_class;   // vertex of K at each corner
  std::vector<Colour> class_label;                // label of each vertex of K
  int edge_count = 0;
  int triangle_count = 0;

  int tetrahedron_count() const { return static_cast<int>(gluings.size()); }
  int vertex_count() const { return static_cast<int>(class_label.size()); }
  int euler_characteristic() const {
    return vertex_count() - edge_count + triangle_count - tetrahedron_count();
  }
  int boundary_tetrahedra() const;
  std::string to_json() const;
};

Pseudocomplex build_complex(const ColouredGraph& g);

/// chi(K) from residue counts: sum g_^c - sum g_ij + triangles - |V|.
int complex_euler_characteristic(const ColouredGraph& g);

/// Three-coloured graph on the boundary vertices: u and u' are c-adjacent iff
/// a {c,3}-path joins them. Vertex i is the i-th boundary vertex of g.
ColouredGraph boundary_graph(const ColouredGraph& g);

struct BoundaryComponent {
  SurfaceType surface;
  std::vector<int> faces;  // boundary vertices of g whose tetrahedra carry the faces
};

std::vector<BoundaryComponent> boundary_surface(const ColouredGraph& g);

struct SingularVertex {
  Colour label;
  Residue residue;
  SurfaceType link;
};

std::vector<SingularVertex> singular_vertices(const ColouredGraph& g);

/// Joins boundary vertices by 3-edges along {i,3}-paths.
ColouredGraph cap_off(const ColouredGraph& g, Colour i);

/// Result of removing open stars of the singular vertices of a graph in the
/// singular class. Each vertex of `gem` comes from `origin[v].first` of the
/// input; `origin[v].second` is 0 for an untouched vertex and 1, 2, 3 for the
/// three pieces a truncated vertex is split into (piece 1 carries the new
/// boundary face).
struct Desingularization {
  ColouredGraph gem;
  std::vector<std::pair<int, int>> origin;
};

Desingularization desingularize_with_origin(const ColouredGraph& g);
ColouredGraph desingularize(const ColouredGraph& g);

}  // namespace gemcraft
