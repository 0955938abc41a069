#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gemcraft/graph.hpp"
#include "gemcraft/polygon_map.hpp"

namespace gemcraft {

enum class CurveSystem { V, W };
std::string to_string(CurveSystem s);

struct Curve {
  CurveSystem system = CurveSystem::V;
  std::vector<int> edges;     // map edges in cyclic order
  std::vector<int> vertices;  // map vertices in cyclic order
  std::string label;
};

/// Planar picture of a diagram, used by the doubling construction.
///
/// Each V-curve is a pair of circles, one in the upper and one in the lower
/// half-plane, identified by reflection in the axis (orientable handle) or by
/// reflection composed with a flip (non-orientable handle). The upper circle is
/// described by the ids of its points in counter-clockwise order. A W-curve is
/// a closed sequence of stops: a point on an upper circle, or a crossing of
/// the axis at a given position. Arcs alternate between the half-planes at
/// every stop.
struct PlanarPresentation {
  struct Handle {
    bool orientable = true;
    std::vector<int> ccw_points;
  };
  struct Stop {
    bool on_axis = false;
    int point = -1;     // circle point id (when !on_axis)
    int handle = -1;    // handle of that point
    double axis_position = 0;  // when on_axis
  };
  struct WCurve {
    std::vector<Stop> stops;
    bool starts_upper = true;  // half-plane of the arc leaving stops[0]
  };
  std::vector<Handle> handles;
  std::vector<WCurve> w_curves;
  /// Crossing id in the diagram of each circle point.
  std::vector<int> point_crossing;
};

/// A generalized Heegaard diagram: a closed surface given as a polygon map,
/// two systems of curves drawn along map edges, and their crossings.
struct HeegaardDiagram {
  PolygonMap map;
  SurfaceType surface;
  std::vector<Curve> curves;
  std::vector<int> curve_of_edge;  // -1 for edges on no curve
  /// Per vertex, the V- and W-curve through it (-1 if none). A vertex with
  /// both is a crossing.
  std::vector<std::array<int, 2>> vertex_curves;
  std::vector<std::string> vertex_labels;
  int free_circles = 0;
  std::optional<PlanarPresentation> planar;

  /// Colour choice the diagram was extracted with, or kNone.
  Colour alpha = kNone;

  std::vector<int> system_curves(CurveSystem s) const;
  bool is_crossing(int v) const { return vertex_curves[v][0] >= 0 && vertex_curves[v][1] >= 0; }
  int crossing_count() const;

  /// Fills curve_of_edge, vertex_curves and surface from map and curves;
  /// throws StructureError if curves overlap or the map is not closed.
  void finalize();
};

/// Component graph of the surface cut along a set of curves.
struct CutDualGraph {
  std::vector<SurfaceType> nodes;
  std::vector<int> curve_ids;                // one edge per curve
  std::vector<std::pair<int, int>> edges;    // node pair per curve
  std::vector<int> plus_nodes;               // nodes of positive genus
  std::vector<int> face_node;                // node of every face

  bool proper() const;
  bool reduced() const;
};

CutDualGraph cut_dual(const HeegaardDiagram& d, const std::vector<int>& curve_ids);

struct ReductionChoice {
  std::vector<int> removed_v;  // curve indices, ascending
  std::vector<int> removed_w;
  bool operator==(const ReductionChoice&) const = default;
};

/// Sets of curves whose removal turns the system reduced: spanning trees of
/// the cut-dual graph with all positive-genus nodes merged into one.
/// Emits at most `limit` sets in lexicographic order; returns true if more exist.
bool reduction_sets(const CutDualGraph& g, std::int64_t limit,
                    const std::function<void(const std::vector<int>&)>& emit);

/// The count |C| - g - max(0, h-1) + sum of boundary genera for a system.
int expected_tree_size(const HeegaardDiagram& d, const CutDualGraph& g);

struct RegionCensus {
  std::vector<int> face_region;   // region id per face
  std::vector<int> region_size;   // m(R): distinct surviving crossings on the closure
  std::vector<int> region_first_face;
  int n_singular = 0;
  int best_region = -1;           // max m, ties by least first face
};

/// Regions of the diagram after removing the given curves.
RegionCensus regions(const HeegaardDiagram& d, const ReductionChoice& removed = {});

enum class SearchMode { Exhaustive, Heuristic };
std::string to_string(SearchMode m);

struct SearchOptions {
  std::int64_t limit = 1000000;
  SearchMode mode = SearchMode::Exhaustive;
  bool heuristic_fallback = true;  // sample when the exhaustive search is truncated
  std::int64_t samples = 2000;
  std::uint64_t seed = 1;
  int threads = 1;
};

struct ComplexityReport {
  int value = -1;
  int n_singular = 0;
  int best_region_size = 0;
  Colour alpha = kNone;
  ReductionChoice choice;
  int region = -1;        // least face index of the best region
  SearchMode search_mode = SearchMode::Exhaustive;
  std::int64_t choices_examined = 0;
  bool truncated = false;

  bool found() const { return value >= 0; }
};

/// Deterministic preference: smaller value, then fewer singular crossings,
/// then (alpha, removed_v, removed_w, region) lexicographically.
bool better(const ComplexityReport& a, const ComplexityReport& b);

/// Complexity of the diagram after removing the given curves; both systems
/// must then be reduced (PreconditionError otherwise).
ComplexityReport chm_reduced(const HeegaardDiagram& d, const ReductionChoice& removed = {});

/// Evaluates a single choice without checking reducedness.
ComplexityReport evaluate_choice(const HeegaardDiagram& d, const ReductionChoice& choice);

struct EnumerationResult {
  std::vector<ReductionChoice> choices;
  bool truncated = false;
};

EnumerationResult enumerate_reductions(const HeegaardDiagram& d, std::int64_t limit);

ComplexityReport chm_diagram(const HeegaardDiagram& d, const SearchOptions& opts = {});

/// Diagram of a graph in the singular class with singular colour 0; alpha in {1,2,3}.
HeegaardDiagram diagram_from_singular(const ColouredGraph& g, Colour alpha);
/// Diagram of a gem; alpha in {0,1,2}.
HeegaardDiagram diagram_from_gem(const ColouredGraph& g, Colour alpha);

/// Minimum over the admissible colours and reductions.
ComplexityReport gm_complexity(const ColouredGraph& g, const SearchOptions& opts = {});

/// The diagram of g for a colour choice, dispatching on the class of g.
HeegaardDiagram diagram_for(const ColouredGraph& g, Colour alpha);
std::vector<Colour> admissible_alphas(const ColouredGraph& g);

bool condition_star(const HeegaardDiagram& d);
bool is_connected_diagram(const HeegaardDiagram& d);

/// Doubles every W-curve of a diagram with a planar presentation, taking the
/// axis as an extra V-curve. Colour 0 joins a crossing with its push-off
/// copy, colour 2 the following pairs along V-curves and axis, colours 1 and
/// 3 the W arcs in the upper and lower half-plane.
ColouredGraph double_diagram(const HeegaardDiagram& d);
ColouredGraph double_planar(const PlanarPresentation& p);

}  // namespace gemcraft
