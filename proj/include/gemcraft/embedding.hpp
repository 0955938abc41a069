#pragma once

#include <array>
#include <string>
#include <vector>

#include "gemcraft/graph.hpp"
#include "gemcraft/polygon_map.hpp"

namespace gemcraft {

/// Cyclic order (e0,e1,e2,e3) of the four colours, stored normalized: e0 = 0
/// and, of the two directions, the one with the smaller e1.
class CyclicPermutation {
 public:
  CyclicPermutation() = default;
  CyclicPermutation(Colour a, Colour b, Colour c, Colour d);
  explicit CyclicPermutation(const std::array<Colour, 4>& order)
      : CyclicPermutation(order[0], order[1], order[2], order[3]) {}

  const std::array<Colour, 4>& order() const { return order_; }
  Colour operator[](int i) const { return order_[((i % 4) + 4) % 4]; }
  int position(Colour c) const;
  Colour next(Colour c) const { return (*this)[position(c) + 1]; }
  Colour prev(Colour c) const { return (*this)[position(c) + 3]; }

  /// The cyclic sequence rotated so that `last` is in the last slot, in the
  /// stored direction.
  std::array<Colour, 4> ending_with(Colour last) const;

  std::string str() const;
  bool operator==(const CyclicPermutation&) const = default;

 private:
  std::array<Colour, 4> order_{0, 1, 2, 3};
};

/// The three cyclic permutations of four colours up to reversal.
std::vector<CyclicPermutation> essential_permutations();

/// What an edge of the embedded map is.
enum class EdgeKind { Graph, Extension, Arc };

struct EmbeddedEdge {
  EdgeKind kind = EdgeKind::Graph;
  Colour colour = kNone;  // colour for graph and extension edges
};

enum class FaceKind { Bicoloured, BoundaryRegion };

struct EmbeddedFace {
  FaceKind kind = FaceKind::Bicoloured;
  ColourSet colours = 0;
};

/// A regular embedding of a coloured graph (its extended graph if it has
/// boundary) in the surface determined by a cyclic permutation.
struct RegularEmbedding {
  ColouredGraph source;         // the extended graph in the boundary case
  int original_vertices = 0;    // vertices of the input graph; later ones are added
  CyclicPermutation eps;
  PolygonMap map;
  std::vector<EmbeddedEdge> edge_info;
  std::vector<EmbeddedFace> face_info;
  std::vector<std::array<int, 4>> edge_of;  // map edge of (vertex, colour), or -1
  SurfaceType surface;

  /// Genus of an orientable surface, half the non-orientable genus otherwise.
  int regular_genus() const;
};

RegularEmbedding embed(const ColouredGraph& g, const CyclicPermutation& eps);

struct GenusFormulaReport {
  CyclicPermutation eps;
  int variant_a = 0;  // g_{e0 e2} - g_{^e1} - g_{^3} + 1
  int variant_b = 0;  // g_{e1 3} - g_{^e0} - g_{^e2} + 1
  int chi_genus = 0;
  bool agree() const { return variant_a == chi_genus && variant_b == chi_genus; }
};

/// Evaluates both forms of the regular genus formula on a gem and the genus
/// from the embedding. Throws PreconditionError unless g is a gem.
GenusFormulaReport regular_genus_formula(const ColouredGraph& g, const CyclicPermutation& eps);

}  // namespace gemcraft
