#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gemcraft {

/// Edge colour in {0,1,2,3}.
using Colour = int;
inline constexpr int kColours = 4;
inline constexpr int kNone = -1;

/// Raised when an input violates a structural contract (bad matching, wrong class, ...).
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation's class precondition does not hold.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a construction fails its own consistency checks.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bitmask over the four colours.
using ColourSet = std::uint8_t;

constexpr ColourSet colour_set(std::initializer_list<Colour> cs) {
  ColourSet s = 0;
  for (Colour c : cs) s = static_cast<ColourSet>(s | (1u << c));
  return s;
}
constexpr bool contains(ColourSet s, Colour c) { return (s >> c) & 1u; }
constexpr ColourSet complement(ColourSet s) { return static_cast<ColourSet>(~s & 0xF); }
int popcount(ColourSet s);
std::string colour_set_name(ColourSet s);

/// A 4-coloured graph stored as one partial matching per colour.
///
/// Colours 0, 1 and 2 must be total; colour 3 may be missing at boundary
/// vertices. Parallel edges of distinct colours are allowed; loops are not.
class ColouredGraph {
 public:
  ColouredGraph() = default;
  explicit ColouredGraph(int vertex_count, std::string name = {});

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  /// Neighbour of v along colour c, or kNone.
  int neighbour(int v, Colour c) const { return adj_[v][c]; }
  bool has_edge(int v, Colour c) const { return adj_[v][c] != kNone; }

  /// Adds the c-edge u-v. Throws StructureError if either end already has a c-edge.
  void add_edge(int u, int v, Colour c);

  int edge_count() const;
  bool is_regular() const;
  std::vector<int> boundary_vertices() const;
  bool is_connected() const;

  /// Checks totality of colours 0..2 and connectivity. Throws StructureError.
  void validate() const;

  bool operator==(const ColouredGraph& o) const { return adj_ == o.adj_; }

 private:
  std::vector<std::array<int, kColours>> adj_;
  std::string name_;
};

/// Connected component of the graph restricted to a colour subset.
struct Residue {
  ColourSet colours = 0;
  std::vector<int> vertices;  // sorted ascending
  bool is_cycle = true;       // for two-colour residues: cycle vs path
};

/// Residues in order of least vertex.
std::vector<Residue> residues(const ColouredGraph& g, ColourSet colours);
int residue_count(const ColouredGraph& g, ColourSet colours);

/// Per-vertex index of the residue containing it.
std::vector<int> residue_index(const ColouredGraph& g, ColourSet colours);

/// Two-colour residue traversed as a walk: vertices in order, starting at its
/// least vertex (or at its least endpoint for a path), first edge coloured a.
std::vector<int> bicoloured_walk(const ColouredGraph& g, const Residue& r, Colour a, Colour b);

bool is_bipartite(const ColouredGraph& g);

/// Closed or bordered surface type. For non-orientable surfaces `genus` is the
/// non-orientable genus k (chi = 2 - k - boundary).
struct SurfaceType {
  bool orientable = true;
  int genus = 0;
  int boundary_components = 0;

  int euler_characteristic() const {
    return (orientable ? 2 - 2 * genus : 2 - genus) - boundary_components;
  }
  bool is_sphere() const { return orientable && genus == 0 && boundary_components == 0; }
  bool is_disk() const { return orientable && genus == 0 && boundary_components == 1; }
  bool operator==(const SurfaceType&) const = default;
  std::string describe() const;
};

SurfaceType surface_from_chi(int chi, bool orientable, int boundary_components);

/// Surface represented by a 3-colour residue.
SurfaceType surface_of_residue(const ColouredGraph& g, const Residue& r);

enum class ClassTag { ClosedGem, BoundaryGem, SingularRegular, Invalid };
std::string to_string(ClassTag t);

struct ResidueReport {
  Colour missing_colour;  // the residue is a c-hat residue for this c
  Residue residue;
  SurfaceType surface;
};

struct GraphClass {
  ClassTag tag = ClassTag::Invalid;
  Colour singular_colour = kNone;  // for SingularRegular
  std::vector<ResidueReport> detail;
  std::vector<ResidueReport> offending;
  std::string reason;
};

GraphClass classify(const ColouredGraph& g);

/// Number of boundary components of K(g), from the boundary graph.
int boundary_component_count(const ColouredGraph& g);

bool is_contracted(const ColouredGraph& g);

/// Vector of residue counts over every colour subset of size 2 and 3, plus
/// vertex and boundary-vertex counts. Equal for isomorphic graphs.
std::vector<int> residue_census(const ColouredGraph& g);

/// The six two-colour counts g01,g02,g03,g12,g13,g23.
std::array<int, 6> pair_census(const ColouredGraph& g);

struct IsoOptions {
  /// 0: colour-preserving only; 6: also permutations fixing colour 3; 24: all.
  int colour_permutations = 0;
};

struct Isomorphism {
  std::vector<int> map;                 // vertex of g1 -> vertex of g2
  std::array<Colour, 4> colour_map{0, 1, 2, 3};  // colour in g1 -> colour in g2
};

std::optional<Isomorphism> colour_isomorphic(const ColouredGraph& g1, const ColouredGraph& g2,
                                             IsoOptions opts = {});

/// Relabels vertices: result has edge (perm[u], perm[v], c) for every edge (u, v, c).
ColouredGraph permute_vertices(const ColouredGraph& g, const std::vector<int>& perm);
ColouredGraph permute_colours(const ColouredGraph& g, const std::array<Colour, 4>& cmap);

/// Adds a new vertex and a 3-edge for each boundary vertex. New vertex for the
/// i-th boundary vertex (in ascending order) is vertex_count + i.
ColouredGraph extended_graph(const ColouredGraph& g);

// The 2-vertex crystallization of S^3 (four parallel edges).
ColouredGraph s3_crystallization();

}  // namespace gemcraft
