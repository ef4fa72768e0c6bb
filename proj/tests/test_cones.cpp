#include "toricideal/cones.hpp"

#include "support/oracles.hpp"
#include "support/random_instances.hpp"

#include <gtest/gtest.h>

using namespace toricideal;

TEST(Cones, WorkedConeDual) {
  RationalCone sigma(2, {lattice({1, -1}), lattice({0, 1})});
  RationalCone dual = dual_cone(sigma);
  std::vector<LatticeVector> want{lattice({1, 0}), lattice({1, 1})};
  EXPECT_EQ(dual.rays(), want);
  EXPECT_TRUE(same_cone(dual_cone(dual), sigma));
}

TEST(Cones, NonPrimitiveAndRedundantGeneratorsAreCleaned) {
  RationalCone c(2, {lattice({2, 0}), lattice({0, 3}), lattice({1, 1})});
  std::vector<LatticeVector> want{lattice({0, 1}), lattice({1, 0})};
  EXPECT_EQ(c.rays(), want);
}

TEST(Cones, DualityMatchesBruteForceNormals) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t d = trial % 2 ? 3 : 2;
    RationalCone sigma = instances::random_cone(rng, d);
    EXPECT_EQ(dual_cone(sigma).rays(), oracle::dual_rays(sigma.rays(), d)) << sigma.str();
    EXPECT_TRUE(same_cone(dual_cone(dual_cone(sigma)), sigma));
  }
}

TEST(Cones, HalfPlaneIsNotPointed) {
  RationalCone h(2, {lattice({1, 0}), lattice({-1, 0}), lattice({0, 1})});
  EXPECT_FALSE(h.is_strongly_convex());
  EXPECT_TRUE(h.is_full_dimensional());
  EXPECT_THROW(h.rays(), PreconditionError);
  EXPECT_THROW(hilbert_basis(h), PreconditionError);
}

TEST(Cones, LowerDimensionalCone) {
  RationalCone ray(2, {lattice({1, 1})});
  EXPECT_EQ(ray.dimension(), 1u);
  EXPECT_TRUE(ray.contains(lattice({3, 3})));
  EXPECT_FALSE(ray.contains(lattice({3, 2})));
  EXPECT_THROW(ray.interior_contains(lattice({1, 1})), PreconditionError);
}

TEST(HilbertBasis, TwoDimensionalExamples) {
  // A_1 singularity: dual of Cone((0,1),(2,-1)) is Cone((1,0),(1,2))
  RationalCone a1(2, {lattice({1, 0}), lattice({1, 2})});
  std::vector<LatticeVector> want{lattice({1, 0}), lattice({1, 1}), lattice({1, 2})};
  EXPECT_EQ(hilbert_basis(a1).elements, want);
  RationalCone orth = RationalCone::orthant(3);
  EXPECT_EQ(hilbert_basis(orth).elements.size(), 3u);
  // Cone((1,0),(1,3)): basis (1,0),(1,1),(1,2),(1,3)
  EXPECT_EQ(hilbert_basis(RationalCone(2, {lattice({1, 0}), lattice({1, 3})})).elements.size(), 4u);
}

TEST(HilbertBasis, RandomConesDecomposeAndAreIrredundant) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t d = trial % 2 ? 3 : 2;
    RationalCone c = instances::random_cone(rng, d, 4, 3, 6);
    auto hb = hilbert_basis(c).elements;
    oracle::DecompositionOracle dp(hb, c.halfspaces());
    LatticeVector x(d);
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
      if (j == d) {
        if (c.contains(x)) {
          ASSERT_TRUE(dp.decomposes(x)) << x.str() << " in " << c.str();
        }
        return;
      }
      for (long k = -6; k <= 6; ++k) {
        x[j] = k;
        rec(j + 1);
      }
    };
    rec(0);
    for (const auto& h : hb) {
      std::vector<LatticeVector> others;
      for (const auto& g : hb)
        if (g != h) others.push_back(g);
      oracle::DecompositionOracle without(others, c.halfspaces());
      EXPECT_FALSE(without.decomposes(h)) << h.str();
    }
  }
}

TEST(Triangulation, SimplicesCoverAndHaveRightSize) {
  RationalCone square(3, {lattice({1, 0, 1}), lattice({0, 1, 1}), lattice({-1, 0, 1}), lattice({0, -1, 1})});
  auto tri = pulling_triangulation(square);
  ASSERT_EQ(tri.size(), 2u);
  for (const auto& s : tri) EXPECT_EQ(s.size(), 3u);
  EXPECT_FALSE(is_simplicial(square));
}

TEST(Parallelotope, PointCountEqualsDeterminant) {
  std::vector<LatticeVector> gens{lattice({0, 1}), lattice({3, -1})};
  auto pts = parallelotope_points(gens);
  EXPECT_EQ(pts.size(), 3u);
  std::vector<LatticeVector> want{lattice({0, 0}), lattice({1, 0}), lattice({2, 0})};
  EXPECT_EQ(pts, want);
  std::vector<LatticeVector> g3{lattice({1, 0, 0}), lattice({0, 1, 0}), lattice({1, 1, 5})};
  EXPECT_EQ(parallelotope_points(g3).size(), 5u);
}

TEST(Smoothness, MultiplicityOfSimplicialCones) {
  EXPECT_EQ(multiplicity(RationalCone(2, {lattice({0, 1}), lattice({2, -1})})), 2);
  EXPECT_TRUE(is_smooth_cone(RationalCone(2, {lattice({1, -1}), lattice({0, 1})})));
  EXPECT_FALSE(is_smooth_cone(RationalCone(2, {lattice({1, 0}), lattice({1, 2})})));
}
