#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "gemcraft/diagram_io.hpp"
#include "gemcraft/embedding.hpp"
#include "gemcraft/io.hpp"
#include "gemcraft/seifert.hpp"

using namespace gemcraft;

namespace {

// One handle crossed once by W, which also crosses the axis once.
PlanarPresentation genus_one() {
  PlanarPresentation p;
  p.handles = {{true, {0}}};
  PlanarPresentation::WCurve w;
  w.stops = {{false, 0, 0, 0}, {true, -1, -1, 0.0}};
  p.w_curves = {w};
  p.point_crossing = {0};
  return p;
}

std::vector<LambdaParams> all_params(int max_sum) {
  std::vector<LambdaParams> out;
  for (int s = 2; s <= max_sum; ++s)
    for (int p = 1; p < s; ++p)
      for (int h = 1; h <= p; ++h)
        for (int k = 1; k <= s - p; ++k)
          if (std::gcd(p, h) == 1 && std::gcd(s - p, k) == 1) out.push_back({p, h, s - p, k});
  return out;
}

}  // namespace

TEST(Diagram, GenusOneTorus) {
  HeegaardDiagram d = diagram_from_rotations(rotations_from_planar(genus_one()));
  EXPECT_EQ(d.surface, (SurfaceType{true, 1, 0}));
  EXPECT_EQ(d.crossing_count(), 1);
  EXPECT_TRUE(is_connected_diagram(d));
  ColouredGraph g = double_diagram(d);
  EXPECT_EQ(g.vertex_count(), 4);
  EXPECT_EQ(classify(g).tag, ClassTag::ClosedGem);
}

TEST(Diagram, StandardDiagramShape) {
  HeegaardDiagram d = standard_diagram({3, 2, 2, 1});
  EXPECT_EQ(d.surface, (SurfaceType{true, 2, 0}));
  EXPECT_EQ(d.system_curves(CurveSystem::V).size(), 2u);
  EXPECT_EQ(d.system_curves(CurveSystem::W).size(), 1u);
  EXPECT_EQ(d.crossing_count(), 5);
  EXPECT_TRUE(condition_star(d));
  EXPECT_TRUE(is_connected_diagram(d));
}

TEST(Diagram, StandardDiagramComplexity) {
  HeegaardDiagram d = standard_diagram({5, 3, 3, 2});
  ComplexityReport r = chm_reduced(d);
  EXPECT_EQ(r.value, 1);
  EXPECT_EQ(r.best_region_size, 7);
  bool found = false;
  for (const auto& face : d.map.faces) {
    std::set<std::string> labels;
    for (Dart x : face) labels.insert(d.vertex_labels[d.map.tail(x)]);
    if (labels.size() == 7 && labels.count("A2") == 0) found = true;
  }
  EXPECT_TRUE(found);
}

TEST(Diagram, MaximalRegionContainsHandleEnds) {
  for (const LambdaParams& p : lambda_tuples(11)) {
    HeegaardDiagram d = standard_diagram(p);
    RegionCensus rc = regions(d);
    const int best = rc.region_size[rc.best_region];
    std::set<int> want;
    for (int i : {1, p.p, p.h, p.h + 1}) want.insert((i - 1) % p.p);
    for (int j : {1, p.q, p.k, p.k + 1}) want.insert(p.p + (j - 1) % p.q);
    bool found = false;
    for (const auto& face : d.map.faces) {
      std::set<int> on;
      for (Dart x : face) on.insert(d.map.tail(x));
      if (static_cast<int>(on.size()) == best && std::includes(on.begin(), on.end(), want.begin(), want.end()))
        found = true;
    }
    EXPECT_TRUE(found) << p.str();
    EXPECT_EQ(chm_reduced(d).value, complexity_bound(seifert_of(p)).value) << p.str();
  }
}

TEST(Diagram, DoublingReproducesLambda) {
  for (const LambdaParams& p : all_params(10)) {
    ColouredGraph doubled = double_planar(*standard_rotation_spec(p).planar);
    EXPECT_TRUE(colour_isomorphic(doubled, lambda_graph(p)).has_value()) << p.str();
  }
}

TEST(Diagram, DoubledGraphEmbedsInDiagramSurface) {
  for (const LambdaParams& p : lambda_tuples(9)) {
    HeegaardDiagram d = standard_diagram(p);
    RegularEmbedding e = embed(double_diagram(d), CyclicPermutation(2, 1, 0, 3));
    EXPECT_EQ(e.regular_genus(), d.surface.genus) << p.str();
  }
}

TEST(Diagram, HandleSwapSymmetry) {
  for (const LambdaParams& p : all_params(9)) {
    LambdaParams s{p.q, p.k, p.p, p.h};
    EXPECT_TRUE(colour_isomorphic(lambda_graph(p), lambda_graph(s)).has_value()) << p.str();
  }
}

TEST(Diagram, JsonRoundTrip) {
  RotationSpec spec = standard_rotation_spec({4, 1, 3, 2});
  RotationSpec back = rotation_spec_from_json(rotation_spec_to_json(spec));
  EXPECT_EQ(rotation_spec_to_json(back), rotation_spec_to_json(spec));
  HeegaardDiagram a = diagram_from_rotations(spec), b = diagram_from_rotations(back);
  EXPECT_EQ(a.map.faces.size(), b.map.faces.size());
  EXPECT_EQ(a.surface, b.surface);
  EXPECT_TRUE(colour_isomorphic(double_diagram(b), lambda_graph({4, 1, 3, 2})).has_value());
}

TEST(Diagram, RejectsBadInput) {
  EXPECT_THROW(rotation_spec_from_json("{\"format\":\"gem-v1\"}"), ParseError);
  EXPECT_THROW(rotation_spec_from_json("{\"format\":\"hdiag-v1\",\"crossings\":1}"), ParseError);
  RotationSpec spec = standard_rotation_spec({3, 2, 2, 1});
  std::swap(spec.rotations[0][0], spec.rotations[0][1]);
  EXPECT_THROW(diagram_from_rotations(spec), StructureError);
  RotationSpec wrong = standard_rotation_spec({3, 2, 2, 1});
  wrong.declared_surface = SurfaceType{true, 3, 0};
  EXPECT_THROW(diagram_from_rotations(wrong), StructureError);
}

TEST(Diagram, NonOrientableHandle) {
  // The genus-one picture with a flipped handle: a one-sided W-curve.
  PlanarPresentation p = genus_one();
  p.handles[0].orientable = false;
  HeegaardDiagram d = diagram_from_rotations(rotations_from_planar(p));
  EXPECT_FALSE(d.surface.orientable);
  EXPECT_THROW(double_diagram(d), StructureError);
}
