#include "gemcraft/complex.hpp"

#include <json.hpp>

#include "gemcraft/union_find.hpp"

namespace gemcraft {

int Pseudocomplex::boundary_tetrahedra() const {
  int n = 0;
  for (const auto& gl : gluings)
    for (int t : gl)
      if (t < 0) {
        ++n;
        break;
      }
  return n;
}

std::string Pseudocomplex::to_json() const {
  nlohmann::json tets = nlohmann::json::array(), glue = nlohmann::json::array();
  for (int t = 0; t < tetrahedron_count(); ++t) {
    tets.push_back({{"id", t}, {"corners", corner_class[t]}});
    for (Colour c = 0; c < kColours; ++c)
      if (gluings[t][c] < 0 || t < gluings[t][c]) glue.push_back({t, c, gluings[t][c]});
  }
  nlohmann::json labels = class_label;
  return nlohmann::json{{"tetrahedra", tets}, {"gluings", glue}, {"vertex_labels", labels}}.dump() + "\n";
}

Pseudocomplex build_complex(const ColouredGraph& g) {
  if (!g.is_connected()) throw PreconditionError("build_complex requires a connected graph");
  Pseudocomplex k;
  const int n = g.vertex_count();
  k.gluings.resize(n);
  k.corner_class.resize(n);
  for (int t = 0; t < n; ++t)
    for (Colour c = 0; c < kColours; ++c) k.gluings[t][c] = g.neighbour(t, c);
  int next = 0;
  for (Colour c = 0; c < kColours; ++c) {
    std::vector<int> idx = residue_index(g, complement(colour_set({c})));
    int count = 0;
    for (int t = 0; t < n; ++t) {
      k.corner_class[t][c] = next + idx[t];
      count = std::max(count, idx[t] + 1);
    }
    k.class_label.insert(k.class_label.end(), count, c);
    next += count;
  }
  for (Colour i = 0; i < kColours; ++i)
    for (Colour j = i + 1; j < kColours; ++j) k.edge_count += residue_count(g, colour_set({i, j}));
  for (int t = 0; t < n; ++t)
    for (Colour c = 0; c < kColours; ++c) {
      int u = g.neighbour(t, c);
      if (u == kNone || t < u) ++k.triangle_count;
    }
  return k;
}

int complex_euler_characteristic(const ColouredGraph& g) {
  return build_complex(g).euler_characteristic();
}

namespace {

int path_end(const ColouredGraph& g, int v, Colour x, Colour y) {
  Colour c = g.has_edge(v, x) ? x : y;
  int cur = v;
  while (g.has_edge(cur, c)) {
    cur = g.neighbour(cur, c);
    c = (c == x) ? y : x;
  }
  return cur;
}

}  // namespace

ColouredGraph boundary_graph(const ColouredGraph& g) {
  std::vector<int> bv = g.boundary_vertices();
  std::vector<int> pos(g.vertex_count(), -1);
  for (std::size_t i = 0; i < bv.size(); ++i) pos[bv[i]] = static_cast<int>(i);
  ColouredGraph out(static_cast<int>(bv.size()));
  for (std::size_t i = 0; i < bv.size(); ++i)
    for (Colour c = 0; c < 3; ++c) {
      int j = pos[path_end(g, bv[i], c, 3)];
      if (j < 0 || j == static_cast<int>(i))
        throw StructureError("boundary path from vertex " + std::to_string(bv[i]) + " is malformed");
      if (static_cast<int>(i) < j) out.add_edge(static_cast<int>(i), j, c);
    }
  return out;
}

std::vector<BoundaryComponent> boundary_surface(const ColouredGraph& g) {
  std::vector<BoundaryComponent> out;
  std::vector<int> bv = g.boundary_vertices();
  if (bv.empty()) return out;
  ColouredGraph b = boundary_graph(g);
  for (const Residue& r : residues(b, colour_set({0, 1, 2}))) {
    BoundaryComponent comp;
    comp.surface = surface_of_residue(b, r);
    for (int v : r.vertices) comp.faces.push_back(bv[v]);
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<SingularVertex> singular_vertices(const ColouredGraph& g) {
  if (!g.is_regular()) throw PreconditionError("singular_vertices requires a regular graph");
  std::vector<SingularVertex> out;
  for (Colour c = 0; c < kColours; ++c)
    for (auto& r : residues(g, complement(colour_set({c})))) {
      SurfaceType s = surface_of_residue(g, r);
      if (!s.is_sphere()) out.push_back({c, std::move(r), s});
    }
  return out;
}

ColouredGraph cap_off(const ColouredGraph& g, Colour i) {
  if (i < 0 || i > 2) throw PreconditionError("cap_off colour must lie in {0,1,2}");
  std::vector<int> bv = g.boundary_vertices();
  if (bv.empty()) throw PreconditionError("cap_off requires boundary vertices");
  ColouredGraph out = g;
  out.set_name(g.name().empty() ? "" : "cap(" + g.name() + ")");
  for (int u : bv) {
    int w = path_end(g, u, i, 3);
    if (w == u || g.has_edge(w, 3)) throw StructureError("unmatched {i,3}-path at vertex " + std::to_string(u));
    if (u < w) out.add_edge(u, w, 3);
  }
  return out;
}

Desingularization desingularize_with_origin(const ColouredGraph& g) {
  GraphClass cls = classify(g);
  if (cls.tag != ClassTag::SingularRegular || cls.singular_colour != 0)
    throw PreconditionError("desingularize requires a singular graph with singular colour 0, got " +
                            to_string(cls.tag));
  const int n = g.vertex_count();
  std::vector<char> truncated(n, 0);
  for (const auto& r : cls.offending)
    for (int v : r.residue.vertices) truncated[v] = 1;

  // New indices: kept vertices get one, truncated ones three consecutive.
  Desingularization out;
  std::vector<int> first(n);
  for (int v = 0; v < n; ++v) {
    first[v] = static_cast<int>(out.origin.size());
    if (truncated[v])
      for (int piece = 1; piece <= 3; ++piece) out.origin.emplace_back(v, piece);
    else
      out.origin.emplace_back(v, 0);
  }
  auto piece = [&](int v, int k) { return truncated[v] ? first[v] + k - 1 : first[v]; };
  ColouredGraph& h = out.gem;
  h = ColouredGraph(static_cast<int>(out.origin.size()), g.name().empty() ? "" : "desing(" + g.name() + ")");
  auto link = [&](int a, int b, Colour c) {
    if (a < b) h.add_edge(a, b, c);
  };
  for (int v = 0; v < n; ++v) {
    const int v0 = g.neighbour(v, 0), v1 = g.neighbour(v, 1), v2 = g.neighbour(v, 2),
              v3 = g.neighbour(v, 3);
    if (!truncated[v]) {
      link(first[v], truncated[v0] ? piece(v0, 3) : first[v0], 0);
      for (Colour c = 1; c < kColours; ++c) {
        int w = g.neighbour(v, c);
        link(first[v], first[w], c);
      }
      continue;
    }
    const int p1 = piece(v, 1), p2 = piece(v, 2), p3 = piece(v, 3);
    link(p1, piece(v2, 1), 0);
    link(p1, p2, 1);
    link(p1, piece(v1, 1), 2);
    link(p2, piece(v2, 2), 0);
    link(p2, p3, 2);
    link(p2, piece(v3, 2), 3);
    link(p3, truncated[v0] ? piece(v0, 3) : first[v0], 0);
    link(p3, piece(v1, 3), 1);
    link(p3, piece(v3, 3), 3);
  }
  GraphClass check = classify(h);
  if (check.tag != ClassTag::BoundaryGem)
    throw ConsistencyError("desingularization did not produce a gem with boundary");
  return out;
}

ColouredGraph desingularize(const ColouredGraph& g) { return desingularize_with_origin(g).gem; }

}  // namespace gemcraft
