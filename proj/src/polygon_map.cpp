#include "gemcraft/polygon_map.hpp"

#include "gemcraft/union_find.hpp"

namespace gemcraft {

std::vector<std::vector<std::pair<int, int>>> PolygonMap::edge_incidence() const {
  std::vector<std::vector<std::pair<int, int>>> inc(edges.size());
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (std::size_t i = 0; i < faces[f].size(); ++i)
      inc[faces[f][i].edge].emplace_back(static_cast<int>(f), static_cast<int>(i));
  return inc;
}

void PolygonMap::check() const {
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& face = faces[f];
    if (face.empty()) throw StructureError("face " + std::to_string(f) + " is empty");
    for (std::size_t i = 0; i < face.size(); ++i) {
      const Dart& d = face[i];
      const Dart& n = face[(i + 1) % face.size()];
      if (head(d) != tail(n))
        throw StructureError("face " + std::to_string(f) + " is not a closed walk");
    }
  }
  auto inc = edge_incidence();
  for (std::size_t e = 0; e < inc.size(); ++e)
    if (inc[e].empty() || inc[e].size() > 2)
      throw StructureError("edge " + std::to_string(e) + " lies on " +
                           std::to_string(inc[e].size()) + " face sides");
}

int PolygonMap::boundary_component_count() const {
  auto inc = edge_incidence();
  UnionFind uf(vertex_count);
  std::vector<char> touched(vertex_count, 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (inc[e].size() != 1) continue;
    uf.unite(edges[e].first, edges[e].second);
    touched[edges[e].first] = touched[edges[e].second] = 1;
  }
  std::vector<char> root_seen(vertex_count, 0);
  int count = 0;
  for (int v = 0; v < vertex_count; ++v) {
    if (!touched[v]) continue;
    int r = uf.find(v);
    if (!root_seen[r]) {
      root_seen[r] = 1;
      ++count;
    }
  }
  return count;
}

bool PolygonMap::orientable() const {
  return orientable(std::vector<char>(faces.size(), 1), std::vector<char>(edges.size(), 1));
}

bool PolygonMap::orientable(const std::vector<char>& face_subset,
                            const std::vector<char>& glue_edge) const {
  // Sign s_f per face; an edge seen as d1 on f1 and d2 on f2 needs s_f1*d1 = -s_f2*d2.
  std::vector<std::vector<std::pair<int, int>>> adj(faces.size());
  std::vector<std::vector<std::pair<int, int>>> occ(edges.size());
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (!face_subset[f]) continue;
    for (const Dart& d : faces[f])
      if (glue_edge[d.edge]) occ[d.edge].emplace_back(static_cast<int>(f), d.forward ? 1 : -1);
  }
  for (const auto& o : occ) {
    if (o.size() != 2) continue;
    // s_f2 = -s_f1 * d1 * d2
    int rel = -o[0].second * o[1].second;
    adj[o[0].first].emplace_back(o[1].first, rel);
    adj[o[1].first].emplace_back(o[0].first, rel);
  }
  std::vector<int> sign(faces.size(), 0);
  for (std::size_t s = 0; s < faces.size(); ++s) {
    if (!face_subset[s] || sign[s]) continue;
    sign[s] = 1;
    std::vector<int> stack{static_cast<int>(s)};
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (auto [g, rel] : adj[f]) {
        int want = sign[f] * rel;
        if (!sign[g]) {
          sign[g] = want;
          stack.push_back(g);
        } else if (sign[g] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

SurfaceType PolygonMap::surface() const {
  return surface_from_chi(euler_characteristic(), orientable(), boundary_component_count());
}

}  // namespace gemcraft
