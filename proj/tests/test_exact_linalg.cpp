#include "toricideal/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace toricideal;

TEST(Rat, CanonicalFormAndRendering) {
  EXPECT_EQ(Rat(Integer(6), Integer(-4)).str(), "-3/2");
  EXPECT_EQ(Rat(5).str(), "5/1");
  EXPECT_EQ(Rat(Integer(0), Integer(7)).str(), "0/1");
  EXPECT_THROW(Rat(Integer(1), Integer(0)), std::domain_error);
}

TEST(Rat, ParseAcceptsIntegersAndFractions) {
  EXPECT_EQ(Rat::parse("7"), Rat(7));
  EXPECT_EQ(Rat::parse("-10/4"), Rat(Integer(-5), Integer(2)));
  EXPECT_EQ(Rat::parse(" 1/1 "), Rat(1));
  EXPECT_THROW(Rat::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rat::parse("1.5"), std::invalid_argument);
  EXPECT_THROW(Rat::parse(""), std::invalid_argument);
}

TEST(Rat, FloorAndCeilAreSignCorrect) {
  EXPECT_EQ(Rat(Integer(-1), Integer(2)).floor(), -1);
  EXPECT_EQ(Rat(Integer(-1), Integer(2)).ceil(), 0);
  EXPECT_EQ(Rat(Integer(7), Integer(3)).floor(), 2);
  EXPECT_EQ(Rat(Integer(7), Integer(3)).ceil(), 3);
  EXPECT_EQ(Rat(-4).floor(), -4);
  EXPECT_EQ(Rat(-4).ceil(), -4);
}

TEST(Rat, ArithmeticMatchesHandComputation) {
  Rat a(Integer(1), Integer(3)), b(Integer(1), Integer(6));
  EXPECT_EQ(a + b, Rat(Integer(1), Integer(2)));
  EXPECT_EQ(a - b, Rat(Integer(1), Integer(6)));
  EXPECT_EQ(a * b, Rat(Integer(1), Integer(18)));
  EXPECT_EQ(a / b, Rat(2));
  EXPECT_LT(b, a);
}

TEST(Vec, PairingAndPrimitive) {
  EXPECT_EQ(pairing(lattice({5, 1}), lattice({1, -1})), 4);
  EXPECT_EQ(primitive(lattice({2, -2})), lattice({1, -1}));
  EXPECT_EQ(primitive(lattice({0, -6, 9})), lattice({0, -2, 3}));
  RatVector r{Rat(Integer(1), Integer(2)), Rat(Integer(-1), Integer(3))};
  EXPECT_EQ(primitive(r), lattice({3, -2}));
}

TEST(Vec, GradedLexOrdersBySumThenLex) {
  std::vector<LatticeVector> vs{lattice({3, 2}), lattice({0, 2}), lattice({3, 1}), lattice({1, 1})};
  sort_graded_lex(vs);
  std::vector<LatticeVector> want{lattice({0, 2}), lattice({1, 1}), lattice({3, 1}), lattice({3, 2})};
  EXPECT_EQ(vs, want);
}

TEST(Matrix, RankAndSolve) {
  RatMatrix a{{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(6)}, {Rat(1), Rat(0), Rat(1)}};
  EXPECT_EQ(matrix_rank(a), 2u);
  RatVector b{Rat(6), Rat(12), Rat(2)};
  auto sol = solve_linear(a, b);
  ASSERT_TRUE(sol);
  EXPECT_EQ(a * sol->particular, b);
  ASSERT_EQ(sol->kernel_basis.size(), 1u);
  EXPECT_TRUE((a * sol->kernel_basis[0]).is_zero());
  EXPECT_FALSE(solve_linear(a, RatVector{Rat(1), Rat(3), Rat(0)}));
}

TEST(Matrix, DeterminantOfLatticeRows) {
  EXPECT_EQ(determinant({lattice({1, -1}), lattice({0, 1})}), 1);
  EXPECT_EQ(determinant({lattice({0, 1}), lattice({2, -1})}), -2);
  EXPECT_EQ(determinant({lattice({1, 0, 0}), lattice({0, 1, 0}), lattice({1, 1, 3})}), 3);
}

TEST(Hermite, RandomMatricesSatisfyDefiningProperties) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> dist(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t m = 1 + trial % 4, n = 1 + (trial / 4) % 4;
    IntMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = dist(rng);
    HermiteForm hf = hermite_normal_form(a);
    ASSERT_EQ(hf.u * a, hf.h);
    Integer det = determinant(to_rat(hf.u)).num();
    ASSERT_TRUE(det == 1 || det == -1);
    // echelon shape with positive pivots and reduced entries above them
    std::size_t last_col = 0;
    bool seen_zero_row = false;
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t c = 0;
      while (c < n && hf.h(i, c) == 0) ++c;
      if (c == n) {
        seen_zero_row = true;
        continue;
      }
      ASSERT_FALSE(seen_zero_row);
      if (i > 0) {
        ASSERT_GT(c, last_col);
      }
      last_col = c;
      ASSERT_GT(hf.h(i, c), 0);
      for (std::size_t k = 0; k < i; ++k) {
        ASSERT_GE(hf.h(k, c), 0);
        ASSERT_LT(hf.h(k, c), hf.h(i, c));
      }
    }
  }
}

TEST(Hermite, LatticeIndexIsGcdOfMinors) {
  EXPECT_EQ(lattice_index({lattice({0, 1}), lattice({2, -1})}, 2), 2);
  EXPECT_EQ(lattice_index({lattice({2, 0, 0}), lattice({0, 3, 0})}, 3), 6);
  EXPECT_EQ(lattice_index({lattice({2, 0, 0}), lattice({0, 2, 0})}, 3), 4);
  EXPECT_EQ(lattice_index({lattice({2, 2, 0})}, 3), 2);
}
