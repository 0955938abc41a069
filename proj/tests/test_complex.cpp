#include <gtest/gtest.h>

#include "gemcraft/complex.hpp"
#include "gemcraft/heegaard.hpp"
#include "gemcraft/io.hpp"
#include "gemcraft/seifert.hpp"

using namespace gemcraft;

namespace {

ColouredGraph ball_gem() {
  ColouredGraph g(2);
  for (Colour c = 0; c < 3; ++c) g.add_edge(0, 1, c);
  return g;
}

ColouredGraph solid_torus() { return parse_graph(read_file(std::string(GEMCRAFT_DATA_DIR) + "/solid_torus.gem")); }

}  // namespace

TEST(Complex, SphereCrystallization) {
  Pseudocomplex k = build_complex(s3_crystallization());
  EXPECT_EQ(k.tetrahedron_count(), 2);
  EXPECT_EQ(k.vertex_count(), 4);
  EXPECT_EQ(k.euler_characteristic(), 0);
  EXPECT_EQ(k.boundary_tetrahedra(), 0);
}

TEST(Complex, TrefoilComplex) {
  ColouredGraph g = lambda_graph({3, 2, 2, 1});
  Pseudocomplex k = build_complex(g);
  EXPECT_EQ(k.tetrahedron_count(), 20);
  EXPECT_EQ(k.vertex_count(), 4);
  EXPECT_EQ(k.euler_characteristic(), 1);
  EXPECT_EQ(complex_euler_characteristic(g), 1);
}

TEST(Complex, ComplexEulerMatchesResidueCount) {
  for (const LambdaParams& p : lambda_tuples(9)) {
    ColouredGraph g = lambda_graph(p);
    EXPECT_EQ(build_complex(g).euler_characteristic(), complex_euler_characteristic(g)) << p.str();
    ColouredGraph d = desingularize(g);
    EXPECT_EQ(build_complex(d).euler_characteristic(), complex_euler_characteristic(d)) << p.str();
    EXPECT_EQ(complex_euler_characteristic(d), 0) << p.str();
  }
}

TEST(Complex, SingularVertexOfLambda) {
  auto sv = singular_vertices(lambda_graph({5, 2, 3, 1}));
  ASSERT_EQ(sv.size(), 1u);
  EXPECT_EQ(sv[0].label, 0);
  EXPECT_EQ(sv[0].link, (SurfaceType{true, 1, 0}));
}

TEST(Complex, DesingularizedLambdaHasTorusBoundary) {
  for (const LambdaParams& p : lambda_tuples(8)) {
    Desingularization ds = desingularize_with_origin(lambda_graph(p));
    EXPECT_EQ(classify(ds.gem).tag, ClassTag::BoundaryGem) << p.str();
    auto bs = boundary_surface(ds.gem);
    ASSERT_EQ(bs.size(), 1u) << p.str();
    EXPECT_EQ(bs[0].surface, (SurfaceType{true, 1, 0})) << p.str();
    EXPECT_EQ(ds.origin.size(), static_cast<std::size_t>(ds.gem.vertex_count()));
  }
}

TEST(Complex, CapOffBall) {
  ColouredGraph c = cap_off(ball_gem(), 0);
  EXPECT_EQ(classify(c).tag, ClassTag::ClosedGem);
}

TEST(Complex, CapOffDesingularizedGivesSingularGraph) {
  ColouredGraph d = desingularize(lambda_graph({3, 2, 2, 1}));
  for (Colour i = 0; i < 3; ++i) {
    ColouredGraph c = cap_off(d, i);
    GraphClass cls = classify(c);
    EXPECT_EQ(cls.tag, ClassTag::SingularRegular) << int(i);
    auto sv = singular_vertices(c);
    ASSERT_EQ(sv.size(), 1u);
    EXPECT_EQ(sv[0].link, (SurfaceType{true, 1, 0}));
    EXPECT_EQ(complex_euler_characteristic(c), 1);
  }
}

TEST(Complex, Preconditions) {
  EXPECT_THROW(cap_off(lambda_graph({3, 2, 2, 1}), 0), PreconditionError);
  EXPECT_THROW(desingularize(s3_crystallization()), PreconditionError);
}

TEST(Complex, SolidTorusGem) {
  ColouredGraph g = solid_torus();
  EXPECT_EQ(classify(g).tag, ClassTag::BoundaryGem);
  auto bs = boundary_surface(g);
  ASSERT_EQ(bs.size(), 1u);
  EXPECT_EQ(bs[0].surface, (SurfaceType{true, 1, 0}));
  HeegaardDiagram d = diagram_from_gem(g, 0);
  EXPECT_TRUE(d.system_curves(CurveSystem::W).empty());
  EXPECT_EQ(chm_diagram(d).value, 0);
  EXPECT_EQ(gm_complexity(g).value, 0);
}
