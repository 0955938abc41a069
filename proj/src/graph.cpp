#include "gemcraft/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "gemcraft/union_find.hpp"

namespace gemcraft {

int popcount(ColourSet s) { return std::popcount(static_cast<unsigned>(s)); }

std::string colour_set_name(ColourSet s) {
  std::string out = "{";
  for (Colour c = 0; c < kColours; ++c) {
    if (!contains(s, c)) continue;
    if (out.size() > 1) out += ",";
    out += std::to_string(c);
  }
  return out + "}";
}

ColouredGraph::ColouredGraph(int vertex_count, std::string name)
    : adj_(static_cast<std::size_t>(vertex_count), {kNone, kNone, kNone, kNone}),
      name_(std::move(name)) {
  if (vertex_count < 0) throw StructureError("negative vertex count");
}

void ColouredGraph::add_edge(int u, int v, Colour c) {
  const int n = vertex_count();
  if (c < 0 || c >= kColours) throw StructureError("colour out of range: " + std::to_string(c));
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw StructureError("vertex out of range in edge (" + std::to_string(u) + "," +
                         std::to_string(v) + "," + std::to_string(c) + ")");
  if (u == v) throw StructureError("loop at vertex " + std::to_string(u));
  if (adj_[u][c] != kNone || adj_[v][c] != kNone)
    throw StructureError("colour " + std::to_string(c) + " already used at vertex " +
                         std::to_string(adj_[u][c] != kNone ? u : v));
  adj_[u][c] = v;
  adj_[v][c] = u;
}

int ColouredGraph::edge_count() const {
  int twice = 0;
  for (const auto& a : adj_)
    for (int w : a) twice += (w != kNone);
  return twice / 2;
}

bool ColouredGraph::is_regular() const {
  return std::all_of(adj_.begin(), adj_.end(), [](const auto& a) {
    return std::none_of(a.begin(), a.end(), [](int w) { return w == kNone; });
  });
}

std::vector<int> ColouredGraph::boundary_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v)
    if (adj_[v][3] == kNone) out.push_back(v);
  return out;
}

bool ColouredGraph::is_connected() const {
  if (vertex_count() == 0) return false;
  return residue_count(*this, 0xF) == 1;
}

void ColouredGraph::validate() const {
  if (vertex_count() == 0) throw StructureError("graph has no vertices");
  for (int v = 0; v < vertex_count(); ++v)
    for (Colour c = 0; c < 3; ++c)
      if (adj_[v][c] == kNone)
        throw StructureError("vertex " + std::to_string(v) + " has no " + std::to_string(c) +
                             "-edge");
  if (!is_connected()) throw StructureError("graph is not connected");
}

std::vector<int> residue_index(const ColouredGraph& g, ColourSet colours) {
  const int n = g.vertex_count();
  std::vector<int> idx(n, -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (idx[s] >= 0) continue;
    idx[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (Colour c = 0; c < kColours; ++c) {
        if (!contains(colours, c)) continue;
        int w = g.neighbour(v, c);
        if (w != kNone && idx[w] < 0) {
          idx[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return idx;
}

std::vector<Residue> residues(const ColouredGraph& g, ColourSet colours) {
  std::vector<int> idx = residue_index(g, colours);
  int count = idx.empty() ? 0 : *std::max_element(idx.begin(), idx.end()) + 1;
  std::vector<Residue> out(count);
  for (auto& r : out) r.colours = colours;
  for (int v = 0; v < g.vertex_count(); ++v) out[idx[v]].vertices.push_back(v);
  if (popcount(colours) == 2) {
    for (auto& r : out)
      for (int v : r.vertices)
        for (Colour c = 0; c < kColours; ++c)
          if (contains(colours, c) && !g.has_edge(v, c)) r.is_cycle = false;
  }
  return out;
}

int residue_count(const ColouredGraph& g, ColourSet colours) {
  std::vector<int> idx = residue_index(g, colours);
  return idx.empty() ? 0 : *std::max_element(idx.begin(), idx.end()) + 1;
}

std::vector<int> bicoloured_walk(const ColouredGraph& g, const Residue& r, Colour a, Colour b) {
  int start = r.vertices.front();
  Colour first = a;
  if (!r.is_cycle) {
    // Start at the least endpoint; leave along whichever colour it has.
    for (int v : r.vertices) {
      if (!g.has_edge(v, a) || !g.has_edge(v, b)) {
        start = v;
        first = g.has_edge(v, a) ? a : b;
        break;
      }
    }
  }
  std::vector<int> walk{start};
  int prev = start;
  int cur = g.neighbour(start, first);
  Colour next = first == a ? b : a;
  while (cur != kNone && cur != start) {
    walk.push_back(cur);
    prev = cur;
    cur = g.neighbour(cur, next);
    next = next == a ? b : a;
  }
  (void)prev;
  return walk;
}

bool is_bipartite(const ColouredGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(n, -1);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (Colour c = 0; c < kColours; ++c) {
        int w = g.neighbour(v, c);
        if (w == kNone) continue;
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::string SurfaceType::describe() const {
  std::ostringstream os;
  if (orientable && genus == 0 && boundary_components == 0) return "S2";
  if (orientable && genus == 0 && boundary_components == 1) return "D2";
  if (orientable && genus == 1 && boundary_components == 0) return "T2";
  if (orientable)
    os << "genus " << genus;
  else
    os << "non-orientable genus " << genus;
  if (boundary_components) os << ", " << boundary_components << " boundary";
  return os.str();
}

SurfaceType surface_from_chi(int chi, bool orientable, int boundary_components) {
  int defect = 2 - chi - boundary_components;
  if (defect < 0 || (orientable && defect % 2 != 0))
    throw StructureError("Euler characteristic " + std::to_string(chi) +
                         " is not that of a surface with " +
                         std::to_string(boundary_components) + " boundary components");
  return SurfaceType{orientable, orientable ? defect / 2 : defect, boundary_components};
}

namespace {

// Bipartiteness of the subgraph induced on a vertex set through given colours.
bool residue_bipartite(const ColouredGraph& g, const std::vector<int>& verts, ColourSet cs) {
  std::vector<int> side(g.vertex_count(), -1);
  std::vector<int> stack{verts.front()};
  side[verts.front()] = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (Colour c = 0; c < kColours; ++c) {
      if (!contains(cs, c)) continue;
      int w = g.neighbour(v, c);
      if (w == kNone) continue;
      if (side[w] < 0) {
        side[w] = 1 - side[v];
        stack.push_back(w);
      } else if (side[w] == side[v]) {
        return false;
      }
    }
  }
  return true;
}

// Other endpoint of the {x,y}-path starting at v (which lacks one of the colours).
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

SurfaceType surface_of_residue(const ColouredGraph& g, const Residue& r) {
  if (popcount(r.colours) != 3) throw PreconditionError("surface_of_residue needs 3 colours");
  std::vector<Colour> cs;
  for (Colour c = 0; c < kColours; ++c)
    if (contains(r.colours, c)) cs.push_back(c);

  std::vector<char> in(g.vertex_count(), 0);
  for (int v : r.vertices) in[v] = 1;

  int twice_edges = 0, missing = 0;
  for (int v : r.vertices)
    for (Colour c : cs) (g.has_edge(v, c) ? twice_edges : missing) += 1;
  const int edges = twice_edges / 2 + missing;

  // Complex vertices are the two-colour residues inside r.
  int complex_vertices = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      ColourSet pair = colour_set({cs[i], cs[j]});
      std::vector<int> idx = residue_index(g, pair);
      std::vector<int> seen;
      for (int v : r.vertices) seen.push_back(idx[v]);
      std::sort(seen.begin(), seen.end());
      complex_vertices += static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
    }
  const int chi = complex_vertices - edges + static_cast<int>(r.vertices.size());

  int boundary = 0;
  if (missing > 0) {
    // Boundary sides are (v, d) with d missing; adjacent sides meet through
    // paths in the other two colours.
    std::vector<std::pair<int, Colour>> sides;
    for (int v : r.vertices)
      for (Colour c : cs)
        if (!g.has_edge(v, c)) sides.emplace_back(v, c);
    UnionFind uf(static_cast<int>(sides.size()));
    auto side_id = [&](int v, Colour d) {
      auto it = std::find(sides.begin(), sides.end(), std::make_pair(v, d));
      return it == sides.end() ? -1 : static_cast<int>(it - sides.begin());
    };
    for (std::size_t s = 0; s < sides.size(); ++s) {
      auto [v, d] = sides[s];
      for (Colour x : cs) {
        if (x == d) continue;
        int w = path_end(g, v, x, d);
        int t = side_id(w, d);
        if (t >= 0) uf.unite(static_cast<int>(s), t);
      }
    }
    boundary = uf.components();
  }
  const bool orientable = residue_bipartite(g, r.vertices, r.colours);
  return surface_from_chi(chi, orientable, boundary);
}

std::string to_string(ClassTag t) {
  switch (t) {
    case ClassTag::ClosedGem: return "ClosedGem";
    case ClassTag::BoundaryGem: return "BoundaryGem";
    case ClassTag::SingularRegular: return "SingularRegular";
    case ClassTag::Invalid: return "Invalid";
  }
  return "?";
}

GraphClass classify(const ColouredGraph& g) {
  GraphClass out;
  if (g.vertex_count() == 0 || !g.is_connected()) {
    out.reason = "graph is empty or disconnected";
    return out;
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    for (Colour c = 0; c < 3; ++c)
      if (!g.has_edge(v, c)) {
        out.reason = "vertex " + std::to_string(v) + " lacks colour " + std::to_string(c);
        return out;
      }
  const bool regular = g.is_regular();
  for (Colour c = 0; c < kColours; ++c) {
    for (auto& r : residues(g, complement(colour_set({c})))) {
      SurfaceType s = surface_of_residue(g, r);
      out.detail.push_back({c, std::move(r), s});
    }
  }
  std::vector<Colour> bad_colours;
  for (const auto& rr : out.detail) {
    bool ok = rr.surface.is_sphere() || (!regular && rr.surface.is_disk());
    if (!ok) {
      out.offending.push_back(rr);
      if (std::find(bad_colours.begin(), bad_colours.end(), rr.missing_colour) ==
          bad_colours.end())
        bad_colours.push_back(rr.missing_colour);
    }
  }
  if (out.offending.empty()) {
    out.tag = regular ? ClassTag::ClosedGem : ClassTag::BoundaryGem;
  } else if (regular && bad_colours.size() == 1) {
    out.tag = ClassTag::SingularRegular;
    out.singular_colour = bad_colours.front();
  } else {
    out.reason = regular ? "non-sphere residues in more than one colour"
                         : "residue that is neither a sphere nor a disk";
  }
  return out;
}

int boundary_component_count(const ColouredGraph& g) {
  std::vector<int> bv = g.boundary_vertices();
  if (bv.empty()) return 0;
  std::vector<int> pos(g.vertex_count(), -1);
  for (std::size_t i = 0; i < bv.size(); ++i) pos[bv[i]] = static_cast<int>(i);
  UnionFind uf(static_cast<int>(bv.size()));
  for (int v : bv)
    for (Colour c = 0; c < 3; ++c) uf.unite(pos[v], pos[path_end(g, v, c, 3)]);
  return uf.components();
}

bool is_contracted(const ColouredGraph& g) {
  GraphClass cls = classify(g);
  if (cls.tag != ClassTag::ClosedGem && cls.tag != ClassTag::BoundaryGem)
    throw PreconditionError("is_contracted requires a gem, got " + to_string(cls.tag));
  const int h = boundary_component_count(g);
  auto hat = [&](Colour c) { return residue_count(g, complement(colour_set({c}))); };
  if (h <= 1) return hat(0) == 1 && hat(1) == 1 && hat(2) == 1 && hat(3) == 1;
  return hat(3) == 1 && hat(0) == h && hat(1) == h && hat(2) == h;
}

std::array<int, 6> pair_census(const ColouredGraph& g) {
  std::array<int, 6> out{};
  int k = 0;
  for (Colour i = 0; i < kColours; ++i)
    for (Colour j = i + 1; j < kColours; ++j) out[k++] = residue_count(g, colour_set({i, j}));
  return out;
}

std::vector<int> residue_census(const ColouredGraph& g) {
  std::vector<int> out{g.vertex_count(), static_cast<int>(g.boundary_vertices().size())};
  for (ColourSet s = 1; s < 16; ++s) {
    int k = popcount(s);
    if (k != 2 && k != 3) continue;
    auto rs = residues(g, s);
    out.push_back(static_cast<int>(rs.size()));
    if (k == 2) {
      std::vector<int> sizes;
      for (const auto& r : rs) sizes.push_back(static_cast<int>(r.vertices.size()) * (r.is_cycle ? 1 : -1));
      std::sort(sizes.begin(), sizes.end());
      out.insert(out.end(), sizes.begin(), sizes.end());
    }
  }
  return out;
}

ColouredGraph permute_vertices(const ColouredGraph& g, const std::vector<int>& perm) {
  ColouredGraph out(g.vertex_count(), g.name());
  for (int v = 0; v < g.vertex_count(); ++v)
    for (Colour c = 0; c < kColours; ++c) {
      int w = g.neighbour(v, c);
      if (w != kNone && v < w) out.add_edge(perm[v], perm[w], c);
    }
  return out;
}

ColouredGraph permute_colours(const ColouredGraph& g, const std::array<Colour, 4>& cmap) {
  ColouredGraph out(g.vertex_count(), g.name());
  for (int v = 0; v < g.vertex_count(); ++v)
    for (Colour c = 0; c < kColours; ++c) {
      int w = g.neighbour(v, c);
      if (w != kNone && v < w) out.add_edge(v, w, cmap[c]);
    }
  return out;
}

namespace {

// Tries the colour-preserving map determined by 0 -> start.
std::optional<std::vector<int>> propagate(const ColouredGraph& a, const ColouredGraph& b,
                                          int start) {
  const int n = a.vertex_count();
  std::vector<int> fwd(n, -1), bwd(n, -1);
  std::vector<int> queue{0};
  fwd[0] = start;
  bwd[start] = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    int fv = fwd[v];
    for (Colour c = 0; c < kColours; ++c) {
      int w = a.neighbour(v, c);
      int fw = b.neighbour(fv, c);
      if ((w == kNone) != (fw == kNone)) return std::nullopt;
      if (w == kNone) continue;
      if (fwd[w] == -1) {
        if (bwd[fw] != -1) return std::nullopt;
        fwd[w] = fw;
        bwd[fw] = w;
        queue.push_back(w);
      } else if (fwd[w] != fw) {
        return std::nullopt;
      }
    }
  }
  if (static_cast<int>(queue.size()) != n) return std::nullopt;
  return fwd;
}

}  // namespace

std::optional<Isomorphism> colour_isomorphic(const ColouredGraph& g1, const ColouredGraph& g2,
                                             IsoOptions opts) {
  if (g1.vertex_count() != g2.vertex_count() || g1.vertex_count() == 0) return std::nullopt;
  if (!g1.is_connected() || !g2.is_connected()) return std::nullopt;

  std::vector<std::array<Colour, 4>> cmaps;
  std::array<Colour, 4> p{0, 1, 2, 3};
  do {
    bool ok = opts.colour_permutations == 24 ||
              (opts.colour_permutations == 6 && p[3] == 3) || p == std::array<Colour, 4>{0, 1, 2, 3};
    if (ok) cmaps.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  const std::vector<int> target = residue_census(g2);
  for (const auto& cmap : cmaps) {
    ColouredGraph a = permute_colours(g1, cmap);
    if (residue_census(a) != target) continue;
    for (int s = 0; s < g2.vertex_count(); ++s) {
      if (auto m = propagate(a, g2, s)) return Isomorphism{std::move(*m), cmap};
    }
  }
  return std::nullopt;
}

ColouredGraph extended_graph(const ColouredGraph& g) {
  std::vector<int> bv = g.boundary_vertices();
  if (bv.empty()) throw PreconditionError("extended_graph requires boundary vertices");
  const int n = g.vertex_count();
  ColouredGraph out(n + static_cast<int>(bv.size()), g.name());
  for (int v = 0; v < n; ++v)
    for (Colour c = 0; c < kColours; ++c) {
      int w = g.neighbour(v, c);
      if (w != kNone && v < w) out.add_edge(v, w, c);
    }
  for (std::size_t i = 0; i < bv.size(); ++i) out.add_edge(bv[i], n + static_cast<int>(i), 3);
  return out;
}

ColouredGraph s3_crystallization() {
  ColouredGraph g(2, "S3");
  for (Colour c = 0; c < kColours; ++c) g.add_edge(0, 1, c);
  return g;
}

}  // namespace gemcraft
