#include "gemcraft/diagram_io.hpp"

#include <map>
#include <json.hpp>
#include <set>
#include <tuple>

#include "gemcraft/io.hpp"

namespace gemcraft {

namespace {

using nlohmann::json;

// Half-edge: edge id and end (0 = tail, 1 = head).
struct HalfEdge {
  int edge = -1;
  int end = 0;
  bool operator<(const HalfEdge& o) const { return std::tie(edge, end) < std::tie(o.edge, o.end); }
  bool operator==(const HalfEdge&) const = default;
};

CurveSystem parse_system(const std::string& s, const std::string& where) {
  if (s == "V") return CurveSystem::V;
  if (s == "W") return CurveSystem::W;
  throw ParseError(where + ": system must be \"V\" or \"W\"");
}

}  // namespace

HeegaardDiagram diagram_from_rotations(const RotationSpec& spec) {
  const int n = spec.crossings;
  if (n < 0) throw StructureError("negative crossing count");
  if (spec.systems.size() != spec.curve_crossings.size())
    throw StructureError("curve systems and crossing lists differ in length");
  if (static_cast<int>(spec.rotations.size()) != n)
    throw StructureError("expected one rotation per crossing");

  HeegaardDiagram d;
  d.map.vertex_count = n;
  // edge_base[c] + i is the arc of curve c from its i-th to its (i+1)-th crossing.
  std::vector<int> edge_base(spec.curve_crossings.size(), -1);
  std::vector<std::array<int, 2>> seen(n, {-1, -1});
  for (std::size_t c = 0; c < spec.curve_crossings.size(); ++c) {
    const auto& xs = spec.curve_crossings[c];
    if (xs.empty()) {
      ++d.free_circles;
      continue;
    }
    const int slot = spec.systems[c] == CurveSystem::V ? 0 : 1;
    edge_base[c] = static_cast<int>(d.map.edges.size());
    Curve curve;
    curve.system = spec.systems[c];
    curve.label = to_string(curve.system) + std::to_string(c);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      int x = xs[i];
      if (x < 0 || x >= n) throw StructureError("curve " + std::to_string(c) + ": crossing out of range");
      if (seen[x][slot] >= 0)
        throw StructureError("crossing " + std::to_string(x) + " lies twice on system " +
                             to_string(curve.system));
      seen[x][slot] = static_cast<int>(c);
      curve.vertices.push_back(x);
      curve.edges.push_back(static_cast<int>(d.map.edges.size()));
      d.map.edges.emplace_back(x, xs[(i + 1) % xs.size()]);
    }
    d.curves.push_back(std::move(curve));
  }
  for (int x = 0; x < n; ++x)
    if (seen[x][0] < 0 || seen[x][1] < 0)
      throw StructureError("crossing " + std::to_string(x) + " is not on both systems");

  const int m = static_cast<int>(d.map.edges.size());
  std::vector<char> twisted(m, 0);
  for (auto [c, pos] : spec.twisted) {
    if (c < 0 || c >= static_cast<int>(edge_base.size()) || edge_base[c] < 0 || pos < 0 ||
        pos >= static_cast<int>(spec.curve_crossings[c].size()))
      throw StructureError("twisted arc out of range");
    twisted[edge_base[c] + pos] ^= 1;
  }

  auto half_edge = [&](const ArcEnd& a) {
    if (a.curve < 0 || a.curve >= static_cast<int>(edge_base.size()) || edge_base[a.curve] < 0)
      throw StructureError("rotation refers to an unknown curve");
    const int len = static_cast<int>(spec.curve_crossings[a.curve].size());
    if (a.position < 0 || a.position >= len || (a.dir != 1 && a.dir != -1))
      throw StructureError("rotation entry out of range");
    if (a.dir == 1) return HalfEdge{edge_base[a.curve] + a.position, 0};
    return HalfEdge{edge_base[a.curve] + (a.position + len - 1) % len, 1};
  };

  std::map<HalfEdge, std::pair<int, int>> slot_of;  // half-edge -> (crossing, index)
  std::vector<std::array<HalfEdge, 4>> rot(n);
  for (int x = 0; x < n; ++x) {
    for (int i = 0; i < 4; ++i) {
      const ArcEnd& a = spec.rotations[x][i];
      HalfEdge h = half_edge(a);
      int at = h.end == 0 ? d.map.edges[h.edge].first : d.map.edges[h.edge].second;
      if (at != x)
        throw StructureError("rotation at crossing " + std::to_string(x) + " lists an arc of another crossing");
      if (!slot_of.emplace(h, std::make_pair(x, i)).second)
        throw StructureError("arc end listed twice in rotations");
      rot[x][i] = h;
    }
    for (int i = 0; i < 4; ++i)
      if (spec.systems[spec.rotations[x][i].curve] == spec.systems[spec.rotations[x][(i + 1) % 4].curve])
        throw StructureError("curves do not cross transversally at crossing " + std::to_string(x));
  }

  // Face tracing with a local orientation flag.
  std::vector<std::array<char, 2>> used(m, {0, 0});
  auto side_index = [](int s) { return s > 0 ? 0 : 1; };
  for (int e0 = 0; e0 < m; ++e0) {
    for (int s0 : {1, -1}) {
      if (used[e0][side_index(s0)]) continue;
      std::vector<Dart> face;
      HalfEdge h{e0, 0};
      int s = s0;
      do {
        const int e = h.edge;
        int s_arrival = twisted[e] ? -s : s;
        int side = h.end == 0 ? s : -s_arrival;
        if (used[e][side_index(side)]) throw StructureError("inconsistent rotation system");
        used[e][side_index(side)] = 1;
        face.push_back(Dart{e, h.end == 0});
        HalfEdge far{e, 1 - h.end};
        auto [x, i] = slot_of.at(far);
        s = s_arrival;
        h = rot[x][(i + s + 4) % 4];
      } while (!(h == HalfEdge{e0, 0} && s == s0));
      d.map.faces.push_back(std::move(face));
    }
  }

  d.vertex_labels = spec.labels;
  if (!d.vertex_labels.empty() && static_cast<int>(d.vertex_labels.size()) != n)
    throw StructureError("expected one label per crossing");
  d.planar = spec.planar;
  d.finalize();
  if (spec.declared_surface && !(*spec.declared_surface == d.surface))
    throw StructureError("declared surface " + spec.declared_surface->describe() +
                         " differs from traced surface " + d.surface.describe());
  return d;
}

RotationSpec rotations_from_planar(const PlanarPresentation& p, const std::vector<std::string>& labels) {
  RotationSpec spec;
  const int points = static_cast<int>(p.point_crossing.size());
  std::vector<int> point_handle(points, -1), point_pos(points, -1);
  for (std::size_t hd = 0; hd < p.handles.size(); ++hd) {
    const auto& pts = p.handles[hd].ccw_points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i] < 0 || pts[i] >= points || point_handle[pts[i]] >= 0)
        throw StructureError("planar handle " + std::to_string(hd) + ": bad point");
      point_handle[pts[i]] = static_cast<int>(hd);
      point_pos[pts[i]] = static_cast<int>(i);
    }
  }
  for (int q = 0; q < points; ++q)
    if (point_handle[q] < 0) throw StructureError("planar point " + std::to_string(q) + " is on no handle");

  spec.crossings = points;
  std::set<int> ids(p.point_crossing.begin(), p.point_crossing.end());
  if (static_cast<int>(ids.size()) != points || (points > 0 && (*ids.begin() != 0 || *ids.rbegin() != points - 1)))
    throw StructureError("planar point crossings must be a permutation");

  for (const auto& hd : p.handles) {
    spec.systems.push_back(CurveSystem::V);
    std::vector<int> xs;
    for (int q : hd.ccw_points) xs.push_back(p.point_crossing[q]);
    spec.curve_crossings.push_back(std::move(xs));
  }

  // Upper- and lower-side W arc ends at every point.
  std::vector<ArcEnd> upper(points, ArcEnd{-1, 0, 0}), lower(points, ArcEnd{-1, 0, 0});
  std::vector<char> visited(points, 0);
  for (std::size_t t = 0; t < p.w_curves.size(); ++t) {
    const auto& w = p.w_curves[t];
    const int curve = static_cast<int>(spec.systems.size());
    const int len = static_cast<int>(w.stops.size());
    if (len % 2 != 0) throw StructureError("planar W-curve " + std::to_string(t) + " has an odd number of stops");
    std::vector<int> xs;
    std::vector<int> circle_stops;
    for (int k = 0; k < len; ++k)
      if (!w.stops[k].on_axis) circle_stops.push_back(k);
    for (std::size_t j = 0; j < circle_stops.size(); ++j) {
      const int k = circle_stops[j];
      const int q = w.stops[k].point;
      if (q < 0 || q >= points) throw StructureError("planar W stop refers to an unknown point");
      if (visited[q]) throw StructureError("planar point " + std::to_string(q) + " visited twice");
      visited[q] = 1;
      xs.push_back(p.point_crossing[q]);
      const bool leaves_upper = w.starts_upper != (k % 2 == 1);
      ArcEnd out{curve, static_cast<int>(j), 1}, in{curve, static_cast<int>(j), -1};
      upper[q] = leaves_upper ? out : in;
      lower[q] = leaves_upper ? in : out;
      const bool flip = !p.handles[point_handle[q]].orientable;
      // A lower-side end at a non-orientable handle passes the twist of the handle.
      if (flip) {
        const int pos = leaves_upper ? (static_cast<int>(j) + static_cast<int>(circle_stops.size()) - 1) %
                                           static_cast<int>(circle_stops.size())
                                     : static_cast<int>(j);
        spec.twisted.emplace_back(curve, pos);
      }
    }
    spec.systems.push_back(CurveSystem::W);
    spec.curve_crossings.push_back(std::move(xs));
  }
  for (int q = 0; q < points; ++q)
    if (!visited[q]) throw StructureError("planar point " + std::to_string(q) + " is on no W-curve");

  spec.rotations.assign(points, {});
  for (int q = 0; q < points; ++q) {
    const int hd = point_handle[q];
    const int x = p.point_crossing[q];
    spec.rotations[x] = {ArcEnd{hd, point_pos[q], 1}, lower[q], ArcEnd{hd, point_pos[q], -1}, upper[q]};
  }
  spec.labels = labels;
  spec.planar = p;
  return spec;
}

std::string rotation_spec_to_json(const RotationSpec& spec) {
  json j;
  j["format"] = "hdiag-v1";
  j["crossings"] = spec.crossings;
  if (spec.declared_surface) {
    j["genus"] = spec.declared_surface->genus;
    j["orientable"] = spec.declared_surface->orientable;
  }
  json curves = json::array();
  for (std::size_t c = 0; c < spec.systems.size(); ++c)
    curves.push_back({{"system", to_string(spec.systems[c])}, {"crossings", spec.curve_crossings[c]}});
  j["curves"] = curves;
  json rots = json::array();
  for (const auto& r : spec.rotations) {
    json row = json::array();
    for (const ArcEnd& a : r) row.push_back({a.curve, a.position, a.dir});
    rots.push_back(row);
  }
  j["rotations"] = rots;
  if (!spec.twisted.empty()) {
    json tw = json::array();
    for (auto [c, pos] : spec.twisted) tw.push_back({c, pos});
    j["twisted"] = tw;
  }
  if (!spec.labels.empty()) j["labels"] = spec.labels;
  if (spec.planar) {
    const auto& p = *spec.planar;
    json pl;
    json handles = json::array();
    for (const auto& h : p.handles) handles.push_back({{"orientable", h.orientable}, {"points", h.ccw_points}});
    pl["handles"] = handles;
    json ws = json::array();
    for (const auto& w : p.w_curves) {
      json stops = json::array();
      for (const auto& s : w.stops) {
        if (s.on_axis)
          stops.push_back({{"axis", s.axis_position}});
        else
          stops.push_back({{"point", s.point}});
      }
      ws.push_back({{"starts_upper", w.starts_upper}, {"stops", stops}});
    }
    pl["w_curves"] = ws;
    pl["point_crossing"] = p.point_crossing;
    j["planar"] = pl;
  }
  return j.dump(2);
}

RotationSpec rotation_spec_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!j.is_object() || j.value("format", "") != "hdiag-v1") throw ParseError("format must be \"hdiag-v1\"");
    RotationSpec spec;
    spec.crossings = j.at("crossings").get<int>();
    const auto& curves = j.at("curves");
    for (std::size_t c = 0; c < curves.size(); ++c) {
      const std::string where = "curves[" + std::to_string(c) + "]";
      spec.systems.push_back(parse_system(curves[c].at("system").get<std::string>(), where));
      spec.curve_crossings.push_back(curves[c].at("crossings").get<std::vector<int>>());
    }
    const auto& rots = j.at("rotations");
    for (std::size_t x = 0; x < rots.size(); ++x) {
      if (rots[x].size() != 4) throw ParseError("rotations[" + std::to_string(x) + "]: expected 4 arc ends");
      std::array<ArcEnd, 4> r;
      for (int i = 0; i < 4; ++i) {
        const auto& a = rots[x][i];
        if (!a.is_array() || a.size() != 3)
          throw ParseError("rotations[" + std::to_string(x) + "][" + std::to_string(i) +
                           "]: expected [curve, position, dir]");
        r[i] = ArcEnd{a[0].get<int>(), a[1].get<int>(), a[2].get<int>()};
      }
      spec.rotations.push_back(r);
    }
    if (j.contains("twisted"))
      for (const auto& t : j["twisted"]) spec.twisted.emplace_back(t.at(0).get<int>(), t.at(1).get<int>());
    if (j.contains("labels")) spec.labels = j["labels"].get<std::vector<std::string>>();
    if (j.contains("genus")) {
      SurfaceType s;
      s.genus = j["genus"].get<int>();
      s.orientable = j.value("orientable", true);
      spec.declared_surface = s;
    }
    if (j.contains("planar")) {
      const auto& pl = j["planar"];
      PlanarPresentation p;
      for (const auto& h : pl.at("handles"))
        p.handles.push_back({h.value("orientable", true), h.at("points").get<std::vector<int>>()});
      std::vector<int> handle_of;
      for (std::size_t hd = 0; hd < p.handles.size(); ++hd)
        for (int q : p.handles[hd].ccw_points) {
          if (q < 0) throw ParseError("planar.handles: negative point");
          if (static_cast<int>(handle_of.size()) <= q) handle_of.resize(q + 1, -1);
          handle_of[q] = static_cast<int>(hd);
        }
      for (const auto& w : pl.at("w_curves")) {
        PlanarPresentation::WCurve wc;
        wc.starts_upper = w.value("starts_upper", true);
        for (const auto& s : w.at("stops")) {
          PlanarPresentation::Stop st;
          if (s.contains("axis")) {
            st.on_axis = true;
            st.axis_position = s["axis"].get<double>();
          } else {
            st.point = s.at("point").get<int>();
            if (st.point < 0 || st.point >= static_cast<int>(handle_of.size()))
              throw ParseError("planar stop refers to an unknown point");
            st.handle = handle_of[st.point];
          }
          wc.stops.push_back(st);
        }
        p.w_curves.push_back(std::move(wc));
      }
      p.point_crossing = pl.at("point_crossing").get<std::vector<int>>();
      spec.planar = p;
    }
    return spec;
  } catch (const json::exception& e) {
    throw ParseError(std::string("hdiag-v1: ") + e.what());
  }
}

}  // namespace gemcraft
