#include "oracles.hpp"

#include <kdb/lattice.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace kdb;

namespace {

oracle::Grid to_grid(const IntegerMatrix& m) {
  oracle::Grid g(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g[i][j] = m(i, j);
  return g;
}

IntVector iv(std::initializer_list<long long> xs) {
  IntVector v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

void expect_valid_decomposition(const IntegerMatrix& M, const SmithDecomposition& snf) {
  EXPECT_EQ(snf.U * M * snf.V, snf.D);
  EXPECT_EQ(abs(determinant(snf.U)), 1);
  EXPECT_EQ(abs(determinant(snf.V)), 1);
  for (std::size_t i = 0; i < snf.D.rows(); ++i)
    for (std::size_t j = 0; j < snf.D.cols(); ++j)
      if (i != j) EXPECT_EQ(snf.D(i, j), 0);
  auto f = snf.invariant_factors();
  for (std::size_t i = 0; i < f.size(); ++i) {
    EXPECT_GT(f[i], 0);
    if (i + 1 < f.size()) EXPECT_EQ(f[i + 1] % f[i], 0);
  }
}

}  // namespace

TEST(SmithNormalForm, Identity) {
  auto I = IntegerMatrix::identity(2);
  auto snf = smith_normal_form(I);
  EXPECT_EQ(snf.D, I);
  EXPECT_EQ(snf.U, I);
  EXPECT_EQ(snf.V, I);
}

TEST(SmithNormalForm, DeskExamplesAgreeWithDeterminantalDivisors) {
  IntegerMatrix a{{2, 4}, {6, 8}};
  IntegerMatrix b{{1, 0}, {1, 2}};
  // Oracle: gcd of k x k minors; frozen below.
  EXPECT_EQ(oracle::invariant_factors(to_grid(a)), (std::vector<Integer>{2, 4}));
  EXPECT_EQ(oracle::invariant_factors(to_grid(b)), (std::vector<Integer>{1, 2}));

  auto sa = smith_normal_form(a);
  EXPECT_EQ(sa.D, (IntegerMatrix{{2, 0}, {0, 4}}));
  EXPECT_EQ(sa.invariant_factors()[0] * sa.invariant_factors()[1], abs(oracle::cofactor_det(to_grid(a))));
  expect_valid_decomposition(a, sa);

  auto sb = smith_normal_form(b);
  EXPECT_EQ(sb.D, (IntegerMatrix{{1, 0}, {0, 2}}));
  expect_valid_decomposition(b, sb);
}

TEST(SmithNormalForm, RectangularAndZero) {
  IntegerMatrix z(2, 3);
  auto sz = smith_normal_form(z);
  EXPECT_EQ(sz.rank(), 0u);
  expect_valid_decomposition(z, sz);

  IntegerMatrix r{{0, 0, 1}, {0, 1, 1}, {1, 1, 1}, {1, 1, 2}};
  auto sr = smith_normal_form(r);
  EXPECT_EQ(sr.invariant_factors(), oracle::invariant_factors(to_grid(r)));
  expect_valid_decomposition(r, sr);
}

TEST(SmithNormalForm, EntriesBeyondMachineWords) {
  Integer big = Integer(1) << 80;
  IntegerMatrix m(2, 2);
  m(0, 0) = big * 6;
  m(0, 1) = big * 4;
  m(1, 0) = big * 9;
  m(1, 1) = big * 6 + 1;
  auto snf = smith_normal_form(m);
  expect_valid_decomposition(m, snf);
  EXPECT_EQ(snf.invariant_factors(), oracle::invariant_factors(to_grid(m)));
}

TEST(SmithNormalForm, RandomMatricesProperty) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> size(1, 5), entry(-9, 9);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = size(rng), cols = size(rng);
    IntegerMatrix M(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) M(i, j) = entry(rng);
    auto snf = smith_normal_form(M);
    expect_valid_decomposition(M, snf);
    if (rows <= 4 && cols <= 4) EXPECT_EQ(snf.invariant_factors(), oracle::invariant_factors(to_grid(M)));
    if (rows == cols) {
      Integer prod = 1;
      for (std::size_t i = 0; i < rows; ++i) prod *= snf.D(i, i);
      EXPECT_EQ(prod, abs(oracle::cofactor_det(to_grid(M))));
    }
  }
}

TEST(Determinant, MatchesCofactorExpansion) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      IntegerMatrix M(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) M(i, j) = entry(rng);
      EXPECT_EQ(determinant(M), oracle::cofactor_det(to_grid(M)));
    }
}

TEST(PrimitiveVector, Examples) {
  EXPECT_EQ(primitive_vector(iv({2, 4})), iv({1, 2}));
  EXPECT_EQ(primitive_vector(iv({1, 0, 0})), iv({1, 0, 0}));
  EXPECT_EQ(primitive_vector(iv({-3, 6, 9})), iv({-1, 2, 3}));
}

TEST(PrimitiveVector, ZeroVectorIsAnError) {
  try {
    primitive_vector(iv({0, 0}));
    FAIL() << "expected NonzeroRequired";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonzeroRequired);
  }
}

TEST(SmoothSimplicialCone, Examples) {
  std::vector<IntVector> std2{iv({1, 0}), iv({0, 1})};
  std::vector<IntVector> a1{iv({1, 0}), iv({1, 2})};
  std::vector<IntVector> three{iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 2})};
  EXPECT_TRUE(is_smooth_simplicial_cone(std2, 2));
  EXPECT_FALSE(is_smooth_simplicial_cone(a1, 2));
  EXPECT_FALSE(is_smooth_simplicial_cone(three, 3));
}

TEST(SmoothSimplicialCone, DependentRaysAreNotSimplicial) {
  std::vector<IntVector> dep{iv({1, 0}), iv({2, 0})};
  try {
    is_smooth_simplicial_cone(dep, 2);
    FAIL() << "expected NotSimplicial";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSimplicial);
  }
}

TEST(SmoothSimplicialCone, AgreesWithUnitDeterminantOnSmallGrid) {
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b)
      for (int c = -4; c <= 4; ++c)
        for (int d = -4; d <= 4; ++d) {
          const long long det = 1LL * a * d - 1LL * b * c;
          if (det == 0) continue;
          std::vector<IntVector> rays{iv({a, c}), iv({b, d})};
          EXPECT_EQ(is_smooth_simplicial_cone(rays, 2), det == 1 || det == -1) << a << b << c << d;
        }
}
