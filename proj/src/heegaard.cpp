#include "gemcraft/heegaard.hpp"

#include <algorithm>
#include <random>
#include <thread>

#include "gemcraft/union_find.hpp"

namespace gemcraft {

std::string to_string(CurveSystem s) { return s == CurveSystem::V ? "V" : "W"; }
std::string to_string(SearchMode m) { return m == SearchMode::Exhaustive ? "exhaustive" : "heuristic"; }

std::vector<int> HeegaardDiagram::system_curves(CurveSystem s) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < curves.size(); ++i)
    if (curves[i].system == s) out.push_back(static_cast<int>(i));
  return out;
}

int HeegaardDiagram::crossing_count() const {
  int n = 0;
  for (int v = 0; v < map.vertex_count; ++v) n += is_crossing(v);
  return n;
}

void HeegaardDiagram::finalize() {
  map.check();
  auto inc = map.edge_incidence();
  for (std::size_t e = 0; e < inc.size(); ++e)
    if (inc[e].size() != 2)
      throw StructureError("diagram surface is not closed at edge " + std::to_string(e));
  curve_of_edge.assign(map.edges.size(), -1);
  vertex_curves.assign(map.vertex_count, {-1, -1});
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const Curve& c = curves[i];
    const int slot = c.system == CurveSystem::V ? 0 : 1;
    if (c.edges.empty()) throw StructureError("curve " + std::to_string(i) + " has no edges");
    for (int e : c.edges) {
      if (curve_of_edge[e] >= 0) throw StructureError("edge " + std::to_string(e) + " lies on two curves");
      curve_of_edge[e] = static_cast<int>(i);
    }
    for (int v : c.vertices) {
      if (vertex_curves[v][slot] >= 0 && vertex_curves[v][slot] != static_cast<int>(i))
        throw StructureError("curves of system " + to_string(c.system) + " meet at vertex " +
                             std::to_string(v));
      vertex_curves[v][slot] = static_cast<int>(i);
    }
  }
  surface = map.surface();
}

bool CutDualGraph::proper() const {
  return std::all_of(nodes.begin(), nodes.end(), [](const SurfaceType& s) { return s.genus == 0; });
}

bool CutDualGraph::reduced() const {
  if (nodes.size() == 1) return true;
  return std::none_of(nodes.begin(), nodes.end(), [](const SurfaceType& s) { return s.genus == 0; });
}

namespace {

// Incidence data shared by the cut and region computations.
struct MapIndex {
  std::vector<std::array<int, 2>> edge_faces;
  std::vector<std::vector<int>> vertex_faces;  // distinct faces with a corner at v

  explicit MapIndex(const PolygonMap& m) {
    edge_faces.assign(m.edges.size(), {-1, -1});
    for (std::size_t f = 0; f < m.faces.size(); ++f)
      for (const Dart& d : m.faces[f]) {
        auto& slot = edge_faces[d.edge];
        (slot[0] < 0 ? slot[0] : slot[1]) = static_cast<int>(f);
      }
    vertex_faces.assign(m.vertex_count, {});
    for (std::size_t f = 0; f < m.faces.size(); ++f)
      for (const Dart& d : m.faces[f]) {
        auto& vf = vertex_faces[m.tail(d)];
        if (std::find(vf.begin(), vf.end(), static_cast<int>(f)) == vf.end())
          vf.push_back(static_cast<int>(f));
      }
  }
};

}  // namespace

CutDualGraph cut_dual(const HeegaardDiagram& d, const std::vector<int>& curve_ids) {
  const PolygonMap& m = d.map;
  MapIndex idx(m);
  std::vector<char> cut_edge(m.edges.size(), 0);
  std::vector<char> on_cut(m.vertex_count, 0);
  for (int c : curve_ids) {
    for (int e : d.curves[c].edges) {
      cut_edge[e] = 1;
      on_cut[m.edges[e].first] = on_cut[m.edges[e].second] = 1;
    }
  }
  UnionFind uf(static_cast<int>(m.faces.size()));
  for (std::size_t e = 0; e < m.edges.size(); ++e)
    if (!cut_edge[e]) uf.unite(idx.edge_faces[e][0], idx.edge_faces[e][1]);

  CutDualGraph g;
  g.face_node = uf.labels();
  const int nodes = uf.components();
  std::vector<int> chi(nodes, 0), sides(nodes, 0);
  for (int f : g.face_node) chi[f] += 1;
  for (std::size_t e = 0; e < m.edges.size(); ++e)
    if (!cut_edge[e]) chi[g.face_node[idx.edge_faces[e][0]]] -= 1;
  for (int v = 0; v < m.vertex_count; ++v)
    if (!on_cut[v] && !idx.vertex_faces[v].empty()) chi[g.face_node[idx.vertex_faces[v][0]]] += 1;
  for (int c : curve_ids) {
    int e = d.curves[c].edges.front();
    int a = g.face_node[idx.edge_faces[e][0]];
    int b = g.face_node[idx.edge_faces[e][1]];
    sides[a] += 1;
    sides[b] += 1;
    g.curve_ids.push_back(c);
    g.edges.emplace_back(std::min(a, b), std::max(a, b));
  }

  // Orientability of each piece: coherent face signs across uncut edges.
  std::vector<std::vector<std::pair<int, int>>> adj(m.faces.size());
  std::vector<std::vector<std::pair<int, int>>> occ(m.edges.size());
  for (std::size_t f = 0; f < m.faces.size(); ++f)
    for (const Dart& dt : m.faces[f]) occ[dt.edge].emplace_back(static_cast<int>(f), dt.forward ? 1 : -1);
  for (std::size_t e = 0; e < m.edges.size(); ++e) {
    if (cut_edge[e]) continue;
    int rel = -occ[e][0].second * occ[e][1].second;
    adj[occ[e][0].first].emplace_back(occ[e][1].first, rel);
    adj[occ[e][1].first].emplace_back(occ[e][0].first, rel);
  }
  std::vector<int> sign(m.faces.size(), 0);
  std::vector<char> orientable(nodes, 1);
  for (std::size_t s = 0; s < m.faces.size(); ++s) {
    if (sign[s]) continue;
    sign[s] = 1;
    std::vector<int> stack{static_cast<int>(s)};
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (auto [h, rel] : adj[f]) {
        int want = sign[f] * rel;
        if (!sign[h]) {
          sign[h] = want;
          stack.push_back(h);
        } else if (sign[h] != want) {
          orientable[g.face_node[f]] = 0;
        }
      }
    }
  }
  for (int n = 0; n < nodes; ++n) {
    g.nodes.push_back(surface_from_chi(chi[n], orientable[n], sides[n]));
    if (g.nodes.back().genus > 0) g.plus_nodes.push_back(n);
  }
  return g;
}

namespace {

// Node relabelling with every positive-genus node merged into one.
std::vector<int> merged_nodes(const CutDualGraph& g, int& count) {
  std::vector<int> label(g.nodes.size(), -1);
  count = 0;
  int plus = -1;
  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    if (g.nodes[n].genus > 0) {
      if (plus < 0) plus = count++;
      label[n] = plus;
    } else {
      label[n] = count++;
    }
  }
  return label;
}

}  // namespace

bool reduction_sets(const CutDualGraph& g, std::int64_t limit,
                    const std::function<void(const std::vector<int>&)>& emit) {
  int count = 0;
  std::vector<int> label = merged_nodes(g, count);
  // Candidate edges: non-loops after merging, in ascending curve order.
  std::vector<int> order(g.edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return g.curve_ids[a] < g.curve_ids[b]; });
  std::vector<std::pair<int, int>> ends;
  std::vector<int> curve;
  for (int i : order) {
    int a = label[g.edges[i].first], b = label[g.edges[i].second];
    if (a == b) continue;
    ends.emplace_back(a, b);
    curve.push_back(g.curve_ids[i]);
  }
  const int need = count - 1;
  const int m = static_cast<int>(ends.size());
  std::int64_t emitted = 0;
  bool more = false;
  std::vector<int> chosen;

  auto connectable = [&](int from) {
    UnionFind uf(count);
    for (int i : chosen) uf.unite(ends[i].first, ends[i].second);
    for (int i = from; i < m; ++i) uf.unite(ends[i].first, ends[i].second);
    return uf.components() == 1;
  };
  auto acyclic_with = [&](int e) {
    UnionFind uf(count);
    for (int i : chosen) uf.unite(ends[i].first, ends[i].second);
    return uf.find(ends[e].first) != uf.find(ends[e].second);
  };

  std::function<bool(int)> rec = [&](int i) -> bool {
    if (static_cast<int>(chosen.size()) == need) {
      if (emitted == limit) {
        more = true;
        return false;
      }
      std::vector<int> out;
      for (int c : chosen) out.push_back(curve[c]);
      emit(out);
      ++emitted;
      return true;
    }
    if (i >= m || static_cast<int>(chosen.size()) + (m - i) < need) return true;
    if (acyclic_with(i)) {
      chosen.push_back(i);
      bool go = rec(i + 1);
      chosen.pop_back();
      if (!go) return false;
    }
    if (connectable(i + 1)) return rec(i + 1);
    return true;
  };
  if (count >= 1 && connectable(0)) rec(0);
  return more;
}

int expected_tree_size(const HeegaardDiagram& d, const CutDualGraph& g) {
  const int genus = d.surface.orientable ? d.surface.genus : d.surface.genus / 2;
  const int h = static_cast<int>(g.plus_nodes.size());
  int boundary_genera = 0;
  for (int n : g.plus_nodes) boundary_genera += g.nodes[n].genus;
  return static_cast<int>(g.curve_ids.size()) - genus - std::max(0, h - 1) + boundary_genera;
}

namespace {

// Precomputed evaluation of reductions on one diagram.
class Evaluator {
 public:
  explicit Evaluator(const HeegaardDiagram& d)
      : d_(d), idx_(d.map), base_(static_cast<int>(d.map.faces.size())), curve_edges_(d.curves.size()) {
    for (std::size_t e = 0; e < d.map.edges.size(); ++e) {
      int c = d.curve_of_edge[e];
      if (c < 0)
        base_.unite(idx_.edge_faces[e][0], idx_.edge_faces[e][1]);
      else
        curve_edges_[c].push_back(static_cast<int>(e));
    }
    for (int v = 0; v < d.map.vertex_count; ++v)
      if (d.is_crossing(v)) crossings_.push_back(v);
    removed_.assign(d.curves.size(), 0);
  }

  RegionCensus census(const ReductionChoice& choice) {
    UnionFind uf = base_;
    std::fill(removed_.begin(), removed_.end(), 0);
    for (int c : choice.removed_v) removed_[c] = 1;
    for (int c : choice.removed_w) removed_[c] = 1;
    for (std::size_t c = 0; c < removed_.size(); ++c)
      if (removed_[c])
        for (int e : curve_edges_[c]) uf.unite(idx_.edge_faces[e][0], idx_.edge_faces[e][1]);

    RegionCensus out;
    const int faces = static_cast<int>(d_.map.faces.size());
    out.face_region = uf.labels();
    const int regions = uf.components();
    out.region_size.assign(regions, 0);
    out.region_first_face.assign(regions, -1);
    for (int f = 0; f < faces; ++f)
      if (out.region_first_face[out.face_region[f]] < 0) out.region_first_face[out.face_region[f]] = f;
    std::vector<int> seen(regions, -1);
    for (int v : crossings_) {
      if (removed_[d_.vertex_curves[v][0]] || removed_[d_.vertex_curves[v][1]]) continue;
      ++out.n_singular;
      for (int f : idx_.vertex_faces[v]) {
        int r = out.face_region[f];
        if (seen[r] != v) {
          seen[r] = v;
          ++out.region_size[r];
        }
      }
    }
    // Region labels follow least face index, so the first maximum wins ties.
    out.best_region = 0;
    for (int r = 1; r < regions; ++r)
      if (out.region_size[r] > out.region_size[out.best_region]) out.best_region = r;
    return out;
  }

  ComplexityReport evaluate(const ReductionChoice& choice) {
    RegionCensus c = census(choice);
    ComplexityReport r;
    r.n_singular = c.n_singular;
    r.best_region_size = c.region_size[c.best_region];
    r.value = r.n_singular - r.best_region_size;
    r.region = c.region_first_face[c.best_region];
    r.choice = choice;
    r.alpha = d_.alpha;
    return r;
  }

 private:
  const HeegaardDiagram& d_;
  MapIndex idx_;
  UnionFind base_;
  std::vector<std::vector<int>> curve_edges_;
  std::vector<int> crossings_;
  std::vector<char> removed_;
};

}  // namespace

RegionCensus regions(const HeegaardDiagram& d, const ReductionChoice& removed) {
  Evaluator ev(d);
  return ev.census(removed);
}

bool better(const ComplexityReport& a, const ComplexityReport& b) {
  if (!b.found()) return a.found();
  if (!a.found()) return false;
  if (a.value != b.value) return a.value < b.value;
  if (a.n_singular != b.n_singular) return a.n_singular < b.n_singular;
  if (a.alpha != b.alpha) return a.alpha < b.alpha;
  if (a.choice.removed_v != b.choice.removed_v) return a.choice.removed_v < b.choice.removed_v;
  if (a.choice.removed_w != b.choice.removed_w) return a.choice.removed_w < b.choice.removed_w;
  return a.region < b.region;
}

ComplexityReport evaluate_choice(const HeegaardDiagram& d, const ReductionChoice& choice) {
  Evaluator ev(d);
  ComplexityReport r = ev.evaluate(choice);
  r.choices_examined = 1;
  return r;
}

namespace {

std::vector<int> surviving(const HeegaardDiagram& d, CurveSystem s, const std::vector<int>& removed) {
  std::vector<int> out;
  for (int c : d.system_curves(s))
    if (!std::binary_search(removed.begin(), removed.end(), c)) out.push_back(c);
  return out;
}

}  // namespace

ComplexityReport chm_reduced(const HeegaardDiagram& d, const ReductionChoice& removed) {
  for (CurveSystem s : {CurveSystem::V, CurveSystem::W}) {
    const auto& rem = s == CurveSystem::V ? removed.removed_v : removed.removed_w;
    if (!cut_dual(d, surviving(d, s, rem)).reduced())
      throw PreconditionError("the " + to_string(s) + " system is not reduced");
  }
  return evaluate_choice(d, removed);
}

EnumerationResult enumerate_reductions(const HeegaardDiagram& d, std::int64_t limit) {
  EnumerationResult out;
  std::vector<std::vector<int>> vs, ws;
  const CutDualGraph gv = cut_dual(d, d.system_curves(CurveSystem::V));
  const CutDualGraph gw = cut_dual(d, d.system_curves(CurveSystem::W));
  const int need_v = expected_tree_size(d, gv);
  const int need_w = expected_tree_size(d, gw);
  auto check = [](const std::vector<int>& t, int need, const char* sys) {
    if (static_cast<int>(t.size()) != need)
      throw ConsistencyError(std::string("reduction set of the ") + sys + " system has " +
                             std::to_string(t.size()) + " curves, expected " + std::to_string(need));
  };
  bool tv = reduction_sets(gv, limit, [&](const std::vector<int>& t) {
    check(t, need_v, "V");
    vs.push_back(t);
  });
  bool tw = reduction_sets(gw, limit, [&](const std::vector<int>& t) {
    check(t, need_w, "W");
    ws.push_back(t);
  });
  out.truncated = tv || tw;
  for (const auto& v : vs)
    for (const auto& w : ws) {
      if (static_cast<std::int64_t>(out.choices.size()) == limit) {
        out.truncated = true;
        return out;
      }
      out.choices.push_back({v, w});
    }
  return out;
}

namespace {

// Random spanning tree of the merged cut-dual graph by Kruskal over a shuffled edge order.
std::vector<int> random_reduction_set(const CutDualGraph& g, std::mt19937_64& rng) {
  int count = 0;
  std::vector<int> label = merged_nodes(g, count);
  std::vector<int> order(g.edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::shuffle(order.begin(), order.end(), rng);
  UnionFind uf(count);
  std::vector<int> out;
  for (int i : order)
    if (uf.unite(label[g.edges[i].first], label[g.edges[i].second])) out.push_back(g.curve_ids[i]);
  std::sort(out.begin(), out.end());
  return out;
}

ComplexityReport best_of(const HeegaardDiagram& d, const std::vector<ReductionChoice>& choices,
                         int threads) {
  threads = std::max(1, std::min<int>(threads, static_cast<int>(choices.size() / 64) + 1));
  std::vector<ComplexityReport> partial(threads);
  auto work = [&](int t) {
    Evaluator ev(d);
    std::size_t lo = choices.size() * t / threads, hi = choices.size() * (t + 1) / threads;
    for (std::size_t i = lo; i < hi; ++i) {
      ComplexityReport r = ev.evaluate(choices[i]);
      if (better(r, partial[t])) partial[t] = std::move(r);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  ComplexityReport best;
  for (auto& p : partial)
    if (better(p, best)) best = std::move(p);
  return best;
}

}  // namespace

ComplexityReport chm_diagram(const HeegaardDiagram& d, const SearchOptions& opts) {
  ComplexityReport best;
  std::int64_t examined = 0;
  bool truncated = false;
  bool sampled = false;
  if (opts.mode == SearchMode::Exhaustive) {
    EnumerationResult en = enumerate_reductions(d, opts.limit);
    best = best_of(d, en.choices, opts.threads);
    examined += static_cast<std::int64_t>(en.choices.size());
    truncated = en.truncated;
  }
  if (opts.mode == SearchMode::Heuristic || (truncated && opts.heuristic_fallback)) {
    const CutDualGraph gv = cut_dual(d, d.system_curves(CurveSystem::V));
    const CutDualGraph gw = cut_dual(d, d.system_curves(CurveSystem::W));
    std::mt19937_64 rng(opts.seed);
    std::vector<ReductionChoice> samples;
    for (std::int64_t i = 0; i < opts.samples; ++i) {
      ReductionChoice c;
      c.removed_v = random_reduction_set(gv, rng);
      c.removed_w = random_reduction_set(gw, rng);
      samples.push_back(std::move(c));
    }
    ComplexityReport h = best_of(d, samples, opts.threads);
    if (better(h, best)) best = h;
    examined += opts.samples;
    sampled = true;
  }
  best.choices_examined = examined;
  best.truncated = truncated;
  best.search_mode = sampled ? SearchMode::Heuristic : SearchMode::Exhaustive;
  best.alpha = d.alpha;
  return best;
}

bool condition_star(const HeegaardDiagram& d) {
  if (d.free_circles > 0) return false;
  for (const Curve& c : d.curves) {
    bool crosses = std::any_of(c.vertices.begin(), c.vertices.end(),
                               [&](int v) { return d.is_crossing(v); });
    if (!crosses) return false;
  }
  return true;
}

bool is_connected_diagram(const HeegaardDiagram& d) {
  if (d.free_circles > 0 || d.curves.empty()) return false;
  // Each component of the complement of the curves must have chi = 1.
  const PolygonMap& m = d.map;
  MapIndex idx(m);
  UnionFind uf(static_cast<int>(m.faces.size()));
  for (std::size_t e = 0; e < m.edges.size(); ++e)
    if (d.curve_of_edge[e] < 0) uf.unite(idx.edge_faces[e][0], idx.edge_faces[e][1]);
  std::vector<int> label = uf.labels();
  std::vector<int> chi(uf.components(), 0);
  for (int f : label) chi[f] += 1;
  for (std::size_t e = 0; e < m.edges.size(); ++e)
    if (d.curve_of_edge[e] < 0) chi[label[idx.edge_faces[e][0]]] -= 1;
  for (int v = 0; v < m.vertex_count; ++v)
    if (d.vertex_curves[v][0] < 0 && d.vertex_curves[v][1] < 0 && !idx.vertex_faces[v].empty())
      chi[label[idx.vertex_faces[v][0]]] += 1;
  return std::all_of(chi.begin(), chi.end(), [](int x) { return x == 1; });
}

}  // namespace gemcraft
