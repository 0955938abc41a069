#include <algorithm>
#include <numeric>

#include "gemcraft/heegaard.hpp"

namespace gemcraft {

namespace {

struct StopRef {
  int curve = 0;
  int index = 0;
};

}  // namespace

ColouredGraph double_planar(const PlanarPresentation& p) {

  // Vertex 2*s + c is copy c (0 = the curve, 1 = its push-off) of global stop s.
  std::vector<StopRef> stops;
  std::vector<int> first_stop;
  for (std::size_t t = 0; t < p.w_curves.size(); ++t) {
    first_stop.push_back(static_cast<int>(stops.size()));
    const int len = static_cast<int>(p.w_curves[t].stops.size());
    if (len == 0 || len % 2 != 0)
      throw StructureError("planar W-curve " + std::to_string(t) + " needs an even, positive number of stops");
    for (int k = 0; k < len; ++k) stops.push_back({static_cast<int>(t), k});
  }
  const int n_stops = static_cast<int>(stops.size());
  ColouredGraph g(2 * n_stops);

  // Whether the push-off copy follows the curve (counter-clockwise on the
  // upper circle, east on the axis) at each stop.
  std::vector<char> pushoff_after(n_stops, 0);
  std::vector<int> point_stop(p.point_crossing.size(), -1);
  std::vector<std::pair<double, int>> axis;
  for (std::size_t t = 0; t < p.w_curves.size(); ++t) {
    const auto& w = p.w_curves[t];
    const int len = static_cast<int>(w.stops.size());
    bool right = false;
    for (int k = 0; k < len; ++k) {
      const auto& st = w.stops[k];
      const int s = first_stop[t] + k;
      const bool arrive_upper = w.starts_upper != ((k + len - 1) % 2 == 1);
      const bool leave_upper = !arrive_upper;
      const int a = 2 * s, b = 2 * s + 1;
      const int next = first_stop[t] + (k + 1) % len;
      g.add_edge(a, 2 * next, leave_upper ? 1 : 3);
      g.add_edge(b, 2 * next + 1, leave_upper ? 1 : 3);
      if (st.on_axis) {
        const bool moving_down = arrive_upper;
        pushoff_after[s] = moving_down != right;
        axis.emplace_back(st.axis_position, s);
        continue;
      }
      if (st.point < 0 || st.point >= static_cast<int>(point_stop.size()) || point_stop[st.point] >= 0)
        throw StructureError("planar point visited twice or unknown");
      point_stop[st.point] = s;
      const bool flip = !p.handles.at(st.handle).orientable;
      const bool right_after = flip ? !right : right;
      pushoff_after[s] = arrive_upper ? right : !right_after;
      right = right_after;
    }
    if (right) throw StructureError("planar W-curve " + std::to_string(t) + " is one-sided");
  }

  auto close_sequence = [&](const std::vector<int>& seq) {
    std::vector<int> verts;
    for (int s : seq) {
      verts.push_back(pushoff_after[s] ? 2 * s : 2 * s + 1);
      verts.push_back(pushoff_after[s] ? 2 * s + 1 : 2 * s);
    }
    for (std::size_t i = 0; i < verts.size(); i += 2) {
      g.add_edge(verts[i], verts[i + 1], 0);
      g.add_edge(verts[i + 1], verts[(i + 2) % verts.size()], 2);
    }
  };
  for (const auto& h : p.handles) {
    std::vector<int> seq;
    for (int q : h.ccw_points) {
      if (point_stop.at(q) < 0) throw StructureError("planar point " + std::to_string(q) + " is on no W-curve");
      seq.push_back(point_stop[q]);
    }
    close_sequence(seq);
  }
  if (axis.empty()) throw StructureError("the axis meets no W-curve");
  std::stable_sort(axis.begin(), axis.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t i = 1; i < axis.size(); ++i)
    if (axis[i].first == axis[i - 1].first) throw StructureError("two axis stops share a position");
  std::vector<int> seq;
  for (auto [pos, s] : axis) seq.push_back(s);
  close_sequence(seq);

  if (!g.is_connected()) throw StructureError("augmented diagram is disconnected");
  GraphClass cls = classify(g);
  if (cls.tag == ClassTag::Invalid) throw StructureError("doubled graph is invalid: " + cls.reason);
  return g;
}

ColouredGraph double_diagram(const HeegaardDiagram& d) {
  if (!d.planar) throw PreconditionError("doubling needs a planar presentation");
  if (!condition_star(d)) throw PreconditionError("diagram has a curve without crossings");
  return double_planar(*d.planar);
}

}  // namespace gemcraft
