#include <gtest/gtest.h>

#include "gemcraft/seifert.hpp"

using namespace gemcraft;

TEST(Seifert, TrefoilCensus) {
  ColouredGraph g = lambda_graph({3, 2, 2, 1});
  EXPECT_EQ(g.vertex_count(), 20);
  EXPECT_EQ(pair_census(g), (std::array<int, 6>{5, 3, 5, 4, 2, 4}));
  EXPECT_EQ(residues(g, colour_set({0, 2})).size(), 3u);
  EXPECT_EQ(residues(g, colour_set({0, 1})).size(), 5u);
  EXPECT_TRUE(is_bipartite(g));
  GraphClass cls = classify(g);
  EXPECT_EQ(cls.tag, ClassTag::SingularRegular);
  EXPECT_EQ(cls.singular_colour, 0);
  for (const auto& r : cls.detail) {
    if (r.missing_colour == 0)
      EXPECT_EQ(r.surface, (SurfaceType{true, 1, 0}));
    else
      EXPECT_TRUE(r.surface.is_sphere());
  }
}

TEST(Seifert, Parameters) {
  EXPECT_EQ(seifert_of({3, 2, 2, 1}), (SeifertParams{3, 2, 2, 1}));
  EXPECT_EQ(seifert_of({5, 2, 2, 1}), (SeifertParams{5, 3, 2, 1}));
  EXPECT_EQ(seifert_of({7, 1, 4, 1}), (SeifertParams{7, 1, 4, 1}));
  EXPECT_EQ(torus_knot_params(3, 2), (LambdaParams{3, 2, 2, 1}));
  EXPECT_EQ(torus_knot_params(5, 3), (LambdaParams{5, 3, 3, 2}));
  EXPECT_THROW(torus_knot_params(4, 2), PreconditionError);
  EXPECT_THROW(lambda_graph({4, 2, 3, 1}), PreconditionError);
}

TEST(Seifert, BoundFormula) {
  EXPECT_EQ(complexity_bound(seifert_of(torus_knot_params(4, 3))).value, 1);
  EXPECT_EQ(complexity_bound(seifert_of(torus_knot_params(5, 2))).value, 1);
  EXPECT_EQ(complexity_bound(seifert_of(torus_knot_params(5, 3))).value, 1);
  EXPECT_EQ(complexity_bound({2, 1, 2, 1}).value, 0);
  EXPECT_EQ(complexity_bound({3, 1, 3, 1}).value, 0);
  // p + q - 8 needs p != +-1 mod q as well as p - q != 1.
  for (auto [p, q] : {std::pair{9, 7}, {11, 7}, {13, 5}, {12, 5}}) {
    EXPECT_EQ(complexity_bound(seifert_of(torus_knot_params(p, q))).value, p + q - 8);
  }
  for (auto [p, q] : {std::pair{7, 4}, {9, 5}, {11, 4}}) {
    EXPECT_EQ(complexity_bound(seifert_of(torus_knot_params(p, q))).value, p + q - 7);
  }
}

TEST(Seifert, AllSmallTuplesPassCensus) {
  for (const auto& t : lambda_tuples(12)) EXPECT_NO_THROW(lambda_graph(t)) << t.str();
}
