#include <algorithm>

#include "gemcraft/embedding.hpp"
#include "gemcraft/heegaard.hpp"

namespace gemcraft {

namespace {

// Curves along the bicoloured cycles of the given colours, in residue order.
void add_curves(HeegaardDiagram& d, const RegularEmbedding& emb, Colour a, Colour b,
                CurveSystem system, bool closed_only) {
  const ColouredGraph& s = emb.source;
  for (const Residue& r : residues(s, colour_set({a, b}))) {
    if (!r.is_cycle) continue;
    bool touches_added = std::any_of(r.vertices.begin(), r.vertices.end(),
                                     [&](int v) { return v >= emb.original_vertices; });
    if (closed_only && touches_added) continue;
    Curve c;
    c.system = system;
    int v = r.vertices.front();
    Colour col = a;
    do {
      c.vertices.push_back(v);
      c.edges.push_back(emb.edge_of[v][col]);
      v = s.neighbour(v, col);
      col = col == a ? b : a;
    } while (v != r.vertices.front() || col != a);
    c.label = "{" + std::to_string(a) + "," + std::to_string(b) + "}:" + std::to_string(r.vertices.front());
    d.curves.push_back(std::move(c));
  }
}

// Closes every boundary circle of an embedding with a disk face.
void cap_boundary(PolygonMap& m, const std::vector<EmbeddedEdge>& info) {
  std::vector<std::vector<int>> arcs_at(m.vertex_count);
  for (std::size_t e = 0; e < m.edges.size(); ++e)
    if (info[e].kind == EdgeKind::Arc) {
      arcs_at[m.edges[e].first].push_back(static_cast<int>(e));
      arcs_at[m.edges[e].second].push_back(static_cast<int>(e));
    }
  std::vector<char> used(m.edges.size(), 0);
  for (std::size_t e0 = 0; e0 < m.edges.size(); ++e0) {
    if (info[e0].kind != EdgeKind::Arc || used[e0]) continue;
    std::vector<Dart> face;
    int e = static_cast<int>(e0);
    int at = m.edges[e].first;
    while (!used[e]) {
      used[e] = 1;
      Dart d{e, m.edges[e].first == at};
      face.push_back(d);
      at = m.head(d);
      const auto& here = arcs_at[at];
      if (here.size() != 2) throw StructureError("boundary vertex without two arcs");
      e = here[0] == e ? here[1] : here[0];
    }
    m.faces.push_back(std::move(face));
  }
}

HeegaardDiagram diagram_from_embedding(const RegularEmbedding& emb) {
  HeegaardDiagram d;
  d.map = emb.map;
  cap_boundary(d.map, emb.edge_info);
  return d;
}

}  // namespace

HeegaardDiagram diagram_from_singular(const ColouredGraph& g, Colour alpha) {
  GraphClass cls = classify(g);
  if (cls.tag != ClassTag::SingularRegular || cls.singular_colour != 0)
    throw PreconditionError("expected a singular graph with singular colour 0, got " + to_string(cls.tag));
  if (alpha < 1 || alpha > 3) throw PreconditionError("alpha must lie in {1,2,3}");
  const Colour beta = alpha % 3 + 1;
  const Colour alpha2 = 6 - alpha - beta;
  RegularEmbedding emb = embed(g, CyclicPermutation(beta, alpha, 0, alpha2));
  HeegaardDiagram d = diagram_from_embedding(emb);
  add_curves(d, emb, 0, beta, CurveSystem::V, false);
  add_curves(d, emb, alpha, alpha2, CurveSystem::W, false);
  d.alpha = alpha;
  d.finalize();
  return d;
}

HeegaardDiagram diagram_from_gem(const ColouredGraph& g, Colour alpha) {
  GraphClass cls = classify(g);
  if (cls.tag != ClassTag::BoundaryGem && cls.tag != ClassTag::ClosedGem)
    throw PreconditionError("expected a gem, got " + to_string(cls.tag));
  if (alpha < 0 || alpha > 2) throw PreconditionError("alpha must lie in {0,1,2}");
  Colour b1 = alpha == 0 ? 1 : 0;
  Colour b2 = 3 - alpha - b1;
  RegularEmbedding emb = embed(g, CyclicPermutation(b1, alpha, b2, 3));
  HeegaardDiagram d = diagram_from_embedding(emb);
  add_curves(d, emb, b1, b2, CurveSystem::V, false);
  add_curves(d, emb, alpha, 3, CurveSystem::W, true);
  d.alpha = alpha;
  d.finalize();
  return d;
}

std::vector<Colour> admissible_alphas(const ColouredGraph& g) {
  GraphClass cls = classify(g);
  switch (cls.tag) {
    case ClassTag::ClosedGem:
    case ClassTag::BoundaryGem: return {0, 1, 2};
    case ClassTag::SingularRegular:
      if (cls.singular_colour == 0) return {1, 2, 3};
      throw PreconditionError("singular colour must be 0, got " + std::to_string(cls.singular_colour));
    case ClassTag::Invalid: break;
  }
  throw PreconditionError("graph is not a gem nor a singular graph: " + cls.reason);
}

HeegaardDiagram diagram_for(const ColouredGraph& g, Colour alpha) {
  GraphClass cls = classify(g);
  if (cls.tag == ClassTag::SingularRegular) return diagram_from_singular(g, alpha);
  return diagram_from_gem(g, alpha);
}

ComplexityReport gm_complexity(const ColouredGraph& g, const SearchOptions& opts) {
  ComplexityReport best;
  std::int64_t examined = 0;
  bool truncated = false, heuristic = false;
  for (Colour a : admissible_alphas(g)) {
    ComplexityReport r = chm_diagram(diagram_for(g, a), opts);
    examined += r.choices_examined;
    truncated = truncated || r.truncated;
    heuristic = heuristic || r.search_mode == SearchMode::Heuristic;
    if (better(r, best)) best = r;
  }
  best.choices_examined = examined;
  best.truncated = truncated;
  best.search_mode = heuristic ? SearchMode::Heuristic : SearchMode::Exhaustive;
  return best;
}

}  // namespace gemcraft
