#include "gemcraft/embedding.hpp"

#include <algorithm>

namespace gemcraft {

CyclicPermutation::CyclicPermutation(Colour a, Colour b, Colour c, Colour d) {
  std::array<Colour, 4> in{a, b, c, d};
  std::array<Colour, 4> sorted = in;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<Colour, 4>{0, 1, 2, 3})
    throw StructureError("cyclic permutation must use each colour once");
  int z = static_cast<int>(std::find(in.begin(), in.end(), 0) - in.begin());
  std::array<Colour, 4> fwd, bwd;
  for (int i = 0; i < 4; ++i) {
    fwd[i] = in[(z + i) % 4];
    bwd[i] = in[(z - i + 4) % 4];
  }
  order_ = fwd[1] < bwd[1] ? fwd : bwd;
}

int CyclicPermutation::position(Colour c) const {
  return static_cast<int>(std::find(order_.begin(), order_.end(), c) - order_.begin());
}

std::array<Colour, 4> CyclicPermutation::ending_with(Colour last) const {
  int p = position(last);
  std::array<Colour, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = (*this)[p + 1 + i];
  return out;
}

std::string CyclicPermutation::str() const {
  std::string s = "(";
  for (int i = 0; i < 4; ++i) s += std::to_string(order_[i]) + (i < 3 ? "," : ")");
  return s;
}

std::vector<CyclicPermutation> essential_permutations() {
  return {CyclicPermutation(0, 1, 2, 3), CyclicPermutation(0, 1, 3, 2), CyclicPermutation(0, 2, 1, 3)};
}

int RegularEmbedding::regular_genus() const {
  int twice = 2 - surface.euler_characteristic() - surface.boundary_components;
  return twice / 2;
}

RegularEmbedding embed(const ColouredGraph& g, const CyclicPermutation& eps) {
  if (!g.is_connected()) throw PreconditionError("embed requires a connected graph");
  RegularEmbedding out;
  out.eps = eps;
  out.original_vertices = g.vertex_count();
  out.source = g.is_regular() ? g : extended_graph(g);
  const ColouredGraph& s = out.source;
  const int n = s.vertex_count();

  PolygonMap& m = out.map;
  m.vertex_count = n;
  out.edge_of.assign(n, {-1, -1, -1, -1});
  for (int v = 0; v < n; ++v)
    for (Colour c = 0; c < kColours; ++c) {
      int w = s.neighbour(v, c);
      if (w == kNone || w < v) continue;
      int id = static_cast<int>(m.edges.size());
      m.edges.emplace_back(v, w);
      bool ext = w >= out.original_vertices;
      out.edge_info.push_back({ext ? EdgeKind::Extension : EdgeKind::Graph, c});
      out.edge_of[v][c] = out.edge_of[w][c] = id;
    }

  auto dart = [&](int from, Colour c) {
    int e = out.edge_of[from][c];
    return Dart{e, m.edges[e].first == from};
  };

  for (int i = 0; i < 4; ++i) {
    Colour x = eps[i], y = eps[i + 1];
    ColourSet pair = colour_set({x, y});
    for (const Residue& r : residues(s, pair)) {
      // Added boundary vertices are isolated unless the pair contains 3.
      if (r.vertices.size() == 1) continue;
      std::vector<Dart> face;
      if (r.is_cycle) {
        int v = r.vertices.front();
        Colour c = x;
        do {
          face.push_back(dart(v, c));
          v = s.neighbour(v, c);
          c = (c == x) ? y : x;
        } while (v != r.vertices.front() || c != x);
        out.face_info.push_back({FaceKind::Bicoloured, pair});
      } else {
        int start = kNone;
        for (int v : r.vertices)
          if (!s.has_edge(v, x) || !s.has_edge(v, y)) {
            start = v;
            break;
          }
        int v = start;
        Colour c = s.has_edge(v, x) ? x : y;
        while (s.has_edge(v, c)) {
          face.push_back(dart(v, c));
          v = s.neighbour(v, c);
          c = (c == x) ? y : x;
        }
        int arc = static_cast<int>(m.edges.size());
        m.edges.emplace_back(v, start);
        out.edge_info.push_back({EdgeKind::Arc, kNone});
        face.push_back(Dart{arc, true});
        out.face_info.push_back({FaceKind::BoundaryRegion, pair});
      }
      m.faces.push_back(std::move(face));
    }
  }
  m.check();
  out.surface = m.surface();
  return out;
}

GenusFormulaReport regular_genus_formula(const ColouredGraph& g, const CyclicPermutation& eps) {
  GraphClass cls = classify(g);
  if (cls.tag != ClassTag::ClosedGem && cls.tag != ClassTag::BoundaryGem)
    throw PreconditionError("regular genus formula applies to gems only, got " + to_string(cls.tag));
  std::array<Colour, 4> e = eps.ending_with(3);
  auto gp = [&](Colour a, Colour b) { return residue_count(g, colour_set({a, b})); };
  auto gh = [&](Colour c) { return residue_count(g, complement(colour_set({c}))); };
  GenusFormulaReport r;
  r.eps = eps;
  r.variant_a = gp(e[0], e[2]) - gh(e[1]) - gh(3) + 1;
  r.variant_b = gp(e[1], 3) - gh(e[0]) - gh(e[2]) + 1;
  r.chi_genus = embed(g, eps).regular_genus();
  return r;
}

}  // namespace gemcraft
