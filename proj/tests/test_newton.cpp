#include "toricideal/newton.hpp"

#include "support/oracles.hpp"
#include "support/random_instances.hpp"

#include <gtest/gtest.h>

using namespace toricideal;

namespace {

RationalCone worked_dual() { return dual_cone(RationalCone(2, {lattice({1, -1}), lattice({0, 1})})); }

}  // namespace

TEST(MonomialIdeal, RejectsExponentOutsideDualNamingHalfspace) {
  try {
    MonomialIdeal a(worked_dual(), {lattice({1, 2})});
    FAIL() << "accepted an exponent outside the dual cone";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("(1,-1)"), std::string::npos) << e.what();
  }
}

TEST(MonomialIdeal, MinimalExponentsDropDominated) {
  MonomialIdeal a(RationalCone::orthant(2), {lattice({1, 1}), lattice({2, 1}), lattice({0, 3})});
  std::vector<LatticeVector> want{lattice({0, 3}), lattice({1, 1})};
  EXPECT_EQ(a.minimal_exponents(), want);
}

TEST(Newton, WorkedExamplePolyhedron) {
  MonomialIdeal a(worked_dual(), {lattice({5, 1}), lattice({4, 3})});
  NewtonPolyhedron p = newton_polyhedron(a);
  std::vector<RatVector> verts{to_rat(lattice({4, 3})), to_rat(lattice({5, 1}))};
  EXPECT_EQ(p.vertices(), verts);
  std::vector<Facet> facets{{lattice({0, 1}), Rat(1)}, {lattice({1, -1}), Rat(1)}, {lattice({2, 1}), Rat(11)}};
  EXPECT_EQ(p.facets(), facets);
  // (3,0) - w = (5,1) is a boundary point
  EXPECT_TRUE(p.contains(lattice({5, 1})));
  EXPECT_FALSE(p.interior_contains(lattice({5, 1})));
  EXPECT_TRUE(p.interior_contains(lattice({5, 2})));
}

TEST(Newton, ScaleMultipliesOffsetsAndVertices) {
  MonomialIdeal a(RationalCone::orthant(2), {lattice({1, 0}), lattice({0, 1})});
  NewtonPolyhedron p = scale(newton_polyhedron(a), Rat(Integer(3), Integer(2)));
  EXPECT_TRUE(p.contains(RatVector{Rat(Integer(3), Integer(2)), Rat(0)}));
  EXPECT_FALSE(p.interior_contains(RatVector{Rat(1), Rat(Integer(1), Integer(2))}));
  EXPECT_THROW(scale(p, Rat(0)), PreconditionError);
  EXPECT_THROW(newton_polyhedron(MonomialIdeal(RationalCone::orthant(2), {})), PreconditionError);
}

TEST(Newton, InteriorAgreesWithBruteForceSupportNumbers) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t d = trial % 2 ? 3 : 2;
    RationalCone sigma = instances::random_cone(rng, d);
    MonomialIdeal a = instances::random_ideal(rng, sigma, 4, 5);
    Rat t = instances::random_t(rng);
    NewtonPolyhedron p = scale(newton_polyhedron(a), t);
    oracle::InteriorOracle brute(a.exponents(), a.ambient().rays(), t, d);
    for (int s = 0; s < 200; ++s) {
      RatVector x(d);
      for (auto& c : x) c = Rat(Integer(instances::uniform(rng, -60, 60)), Integer(4));
      ASSERT_EQ(p.interior_contains(x), brute.interior_contains(x)) << x.str();
    }
  }
}
