#include "gemcraft/seifert.hpp"

#include <numeric>

namespace gemcraft {

void LambdaParams::validate() const {
  if (p < 1 || q < 1 || h < 1 || k < 1 || h > p || k > q)
    throw PreconditionError("parameters must satisfy 1 <= h <= p and 1 <= k <= q: " + str());
  if (std::gcd(p, h) != 1 || std::gcd(q, k) != 1)
    throw PreconditionError("parameter pairs must be coprime: " + str());
}

std::string LambdaParams::str() const {
  return "((" + std::to_string(p) + "," + std::to_string(h) + "),(" + std::to_string(q) + "," +
         std::to_string(k) + "))";
}

std::string SeifertParams::str() const {
  return "(D2;(" + std::to_string(p) + "," + std::to_string(alpha) + "),(" + std::to_string(q) +
         "," + std::to_string(beta) + "))";
}

std::string LambdaLayout::label(int v) const {
  static const char* names[] = {"A", "A'", "C", "C'", "B", "B'", "D", "D'"};
  if (v < 4 * p) return std::string(names[v % 4]) + std::to_string(v / 4 + 1);
  int w = v - 4 * p;
  return std::string(names[4 + w % 4]) + std::to_string(w / 4 + 1);
}

ColouredGraph lambda_graph(const LambdaParams& params) {
  params.validate();
  const int p = params.p, h = params.h, q = params.q, k = params.k;
  const LambdaLayout L{p, q};
  ColouredGraph g(4 * (p + q), "Lambda" + params.str());

  for (int i = 1; i <= p; ++i) {
    g.add_edge(L.A(i), L.C(i), 0);
    g.add_edge(L.Ap(i), L.Cp(i), 0);
    g.add_edge(L.A(i), L.Ap(i), 1);
    g.add_edge(L.C(i), L.Cp(i), 1);
    g.add_edge(L.C(i), L.A(i + 1), 2);
  }
  for (int j = 1; j <= q; ++j) {
    g.add_edge(L.B(j), L.D(j), 0);
    g.add_edge(L.Bp(j), L.Dp(j), 0);
    g.add_edge(L.B(j), L.Bp(j), 1);
    g.add_edge(L.D(j), L.Dp(j), 1);
    g.add_edge(L.D(j), L.B(j + 1), 2);
  }
  for (int i = 1; i < p; ++i) g.add_edge(L.Cp(i), L.Ap(i + 1), 2);
  g.add_edge(L.Cp(p), L.Bp(1), 2);
  for (int j = 1; j < q; ++j) g.add_edge(L.Dp(j), L.Bp(j + 1), 2);
  g.add_edge(L.Dp(q), L.Ap(1), 2);

  for (int i = 1; i < p; ++i) {
    g.add_edge(L.Ap(i), L.A(i + h), 3);
    g.add_edge(L.Cp(i), L.C(i + h), 3);
  }
  for (int j = 1; j < q; ++j) {
    g.add_edge(L.Bp(j), L.B(j + k), 3);
    g.add_edge(L.Dp(j), L.D(j + k), 3);
  }
  g.add_edge(L.Ap(p), L.B(k), 3);
  g.add_edge(L.Cp(p), L.D(k), 3);
  g.add_edge(L.Bp(q), L.A(h), 3);
  g.add_edge(L.Dp(q), L.C(h), 3);

  const int s = p + q;
  const std::array<int, 6> expected{s, 3, s, s - 1, 2, s - 1};
  if (pair_census(g) != expected)
    throw ConsistencyError("Lambda" + params.str() + " fails its residue census");
  GraphClass cls = classify(g);
  if (cls.tag != ClassTag::SingularRegular || cls.singular_colour != 0 ||
      cls.offending.size() != 1 || !(cls.offending[0].surface == SurfaceType{true, 1, 0}))
    throw ConsistencyError("Lambda" + params.str() + " is not singular with one torus link");
  return g;
}

LambdaParams torus_knot_params(int p, int q) {
  if (q < 2 || p <= q || std::gcd(p, q) != 1)
    throw PreconditionError("torus knot needs coprime p > q >= 2");
  return LambdaParams{p, q, q, p % q};
}

ColouredGraph torus_knot_graph(int p, int q) { return lambda_graph(torus_knot_params(p, q)); }

int mod_inverse(int a, int m) {
  for (int x = 1; x <= m; ++x)
    if ((static_cast<long long>(a) * x) % m == 1 % m) return x;
  throw PreconditionError(std::to_string(a) + " is not invertible mod " + std::to_string(m));
}

SeifertParams seifert_of(const LambdaParams& params) {
  params.validate();
  if (params.p < 2 || params.q < 2) throw PreconditionError("fibre orders must be at least 2");
  return SeifertParams{params.p, mod_inverse(params.h, params.p), params.q,
                       mod_inverse(params.k, params.q)};
}

BoundFormulaResult complexity_bound(const SeifertParams& s) {
  if (s.p < 2 || s.q < 2 || std::gcd(s.p, s.alpha) != 1 || std::gcd(s.q, s.beta) != 1)
    throw PreconditionError("invalid Seifert parameters " + s.str());
  auto delta = [](int a, int n) {
    int r = ((a % n) + n) % n;
    return (r == 1 || r == n - 1) ? 1 : 0;
  };
  BoundFormulaResult r;
  r.delta_alpha = delta(s.alpha, s.p);
  r.delta_beta = delta(s.beta, s.q);
  r.value = std::max(s.p - 4 + r.delta_alpha, 0) + std::max(s.q - 4 + r.delta_beta, 0);
  return r;
}

std::vector<LambdaParams> lambda_tuples(int max_sum) {
  std::vector<LambdaParams> out;
  for (int p = 2; p <= max_sum; ++p)
    for (int q = 2; q <= p && p + q <= max_sum; ++q)
      for (int h = 1; h < p; ++h)
        for (int k = 1; k < q; ++k)
          if (std::gcd(p, h) == 1 && std::gcd(q, k) == 1) out.push_back({p, h, q, k});
  return out;
}

RotationSpec standard_rotation_spec(const LambdaParams& params) {
  params.validate();
  const int p = params.p, q = params.q;
  PlanarPresentation pl;
  PlanarPresentation::Handle a, b;
  std::vector<std::string> labels;
  for (int i = 1; i <= p; ++i) {
    a.ccw_points.push_back(i - 1);
    labels.push_back("A" + std::to_string(i));
  }
  for (int j = 1; j <= q; ++j) {
    b.ccw_points.push_back(p + j - 1);
    labels.push_back("B" + std::to_string(j));
  }
  pl.handles = {a, b};
  PlanarPresentation::WCurve w;
  w.starts_upper = true;
  for (int t = 1; t <= p; ++t) {
    const int i = (t * params.h - 1) % p + 1;
    w.stops.push_back({false, i - 1, 0, 0});
    w.stops.push_back({true, -1, -1, static_cast<double>(i)});
  }
  for (int t = 1; t <= q; ++t) {
    const int j = (t * params.k - 1) % q + 1;
    w.stops.push_back({false, p + j - 1, 1, 0});
    w.stops.push_back({true, -1, -1, static_cast<double>(p + j)});
  }
  pl.w_curves = {w};
  pl.point_crossing.resize(p + q);
  std::iota(pl.point_crossing.begin(), pl.point_crossing.end(), 0);
  RotationSpec spec = rotations_from_planar(pl, labels);
  spec.declared_surface = SurfaceType{true, 2, 0};
  return spec;
}

HeegaardDiagram standard_diagram(const LambdaParams& params) {
  return diagram_from_rotations(standard_rotation_spec(params));
}

ComplexityReport canonical_reduction(const LambdaParams& params) {
  HeegaardDiagram d = diagram_from_singular(lambda_graph(params), 1);
  const int long_cycle = 2 * (params.p + params.q);
  ComplexityReport best;
  for (int v : d.system_curves(CurveSystem::V)) {
    if (static_cast<int>(d.curves[v].vertices.size()) != long_cycle) continue;
    for (int w : d.system_curves(CurveSystem::W)) {
      ComplexityReport r = chm_reduced(d, ReductionChoice{{v}, {w}});
      if (better(r, best)) best = r;
    }
  }
  if (!best.found()) throw ConsistencyError("no reduction of the expected shape");
  return best;
}

}  // namespace gemcraft
