#include <gtest/gtest.h>

#include "gemcraft/heegaard.hpp"
#include "gemcraft/seifert.hpp"

using namespace gemcraft;

TEST(Heegaard, TrefoilDiagram) {
  ColouredGraph g = lambda_graph({3, 2, 2, 1});
  HeegaardDiagram d = diagram_from_singular(g, 1);
  EXPECT_EQ(d.surface, (SurfaceType{true, 2, 0}));
  EXPECT_EQ(d.system_curves(CurveSystem::V).size(), 3u);
  EXPECT_EQ(d.system_curves(CurveSystem::W).size(), 2u);
  EXPECT_EQ(d.crossing_count(), 20);
  EXPECT_TRUE(cut_dual(d, d.system_curves(CurveSystem::V)).proper());
  CutDualGraph gw = cut_dual(d, d.system_curves(CurveSystem::W));
  EXPECT_EQ(gw.nodes.size(), 2u);
  EXPECT_EQ(gw.plus_nodes.size(), 1u);
  int trees = 0;
  reduction_sets(gw, 100, [&](const std::vector<int>&) { ++trees; });
  EXPECT_EQ(trees, 2);
}

TEST(Heegaard, TrefoilComplexity) {
  ComplexityReport r = gm_complexity(lambda_graph({3, 2, 2, 1}));
  EXPECT_EQ(r.value, 0);
  EXPECT_EQ(r.n_singular, 5);
  EXPECT_EQ(r.best_region_size, 5);
}
