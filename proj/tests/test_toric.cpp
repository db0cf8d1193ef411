#include "oracles.hpp"

#include <kdb/toric.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace kdb;

namespace {

IntVector iv(std::initializer_list<long long> xs) {
  IntVector v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

const std::vector<IntVector> kQuadric{iv({0, 0, 1}), iv({1, 0, 1}), iv({0, 1, 1}), iv({1, 1, 1})};
const std::vector<IntVector> kA1{iv({1, 0}), iv({1, 2})};
const std::vector<IntVector> kPlane{iv({1, 0}), iv({0, 1})};

std::vector<std::vector<std::size_t>> face_sets(const PolyCone& cone) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& f : faces(cone)) out.push_back(f.ray_indices);
  std::sort(out.begin(), out.end());
  return out;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::SchemaError;
}

}  // namespace

TEST(ValidateCone, Primitivizes) {
  auto cone = validate_cone({iv({2, 0}), iv({0, 3})}, 2);
  EXPECT_EQ(cone.rays(), kPlane);
}

TEST(ValidateCone, RejectsLines) {
  EXPECT_EQ(code_of([] { validate_cone({iv({1, 0}), iv({-1, 0})}, 2); }), ErrorCode::NotStronglyConvex);
  EXPECT_EQ(code_of([] { validate_cone({iv({1, 0}), iv({-1, 0}), iv({0, 1})}, 2); }), ErrorCode::NotStronglyConvex);
  EXPECT_EQ(code_of([] { validate_cone({iv({1, 0}), iv({0, 1}), iv({-1, -1})}, 2); }), ErrorCode::NotStronglyConvex);
}

TEST(ValidateCone, ReportsRedundantRayIndex) {
  try {
    validate_cone({iv({1, 0}), iv({0, 1}), iv({1, 1})}, 2);
    FAIL();
  } catch (const RedundantRayError& e) {
    EXPECT_EQ(e.code(), ErrorCode::RedundantRay);
    EXPECT_EQ(e.index(), 2u);
  }
  try {
    validate_cone({iv({1, 2}), iv({1, 0}), iv({2, 4})}, 2);
    FAIL();
  } catch (const RedundantRayError& e) {
    EXPECT_EQ(e.index(), 2u);  // repeated ray after primitivization
  }
}

TEST(ValidateCone, InputErrors) {
  EXPECT_EQ(code_of([] { validate_cone({iv({0, 0})}, 2); }), ErrorCode::NonzeroRequired);
  EXPECT_EQ(code_of([] { validate_cone({iv({1, 0, 0})}, 2); }), ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of([] { validate_cone({}, 9); }), ErrorCode::TooLarge);
}

TEST(Faces, Examples) {
  auto plane = validate_cone(kPlane, 2);
  EXPECT_EQ(face_sets(plane), (std::vector<std::vector<std::size_t>>{{}, {0}, {0, 1}, {1}}));

  auto ray = validate_cone({iv({1, 2})}, 2);
  EXPECT_EQ(faces(ray).size(), 2u);

  auto quadric = validate_cone(kQuadric, 3);
  auto fs = faces(quadric);
  ASSERT_EQ(fs.size(), 10u);
  std::vector<int> by_dim(4);
  for (const auto& f : fs) ++by_dim[f.dimension];
  EXPECT_EQ(by_dim, (std::vector<int>{1, 4, 4, 1}));
}

TEST(Faces, QuadricMatchesFourierMotzkinOracle) {
  auto quadric = validate_cone(kQuadric, 3);
  auto expected = oracle::brute_force_faces(kQuadric, 3);
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(expected.size(), 10u);
  EXPECT_EQ(face_sets(quadric), expected);
}

TEST(Faces, RandomConesMatchOracleAndCloseUnderIntersection) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> entry(-3, 3);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 80; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const std::size_t s = 1 + rng() % 5;
    std::vector<IntVector> rays;
    for (std::size_t i = 0; i < s; ++i) {
      IntVector r(n);
      for (auto& x : r) x = entry(rng);
      rays.push_back(r);
    }
    std::optional<PolyCone> cone;
    try {
      cone = validate_cone(rays, n);
    } catch (const Error&) {
      continue;
    }
    ++checked;
    auto expected = oracle::brute_force_faces(cone->rays(), n);
    std::sort(expected.begin(), expected.end());
    auto got = face_sets(*cone);
    EXPECT_EQ(got, expected);

    for (const auto& a : got)
      for (const auto& b : got) {
        std::vector<std::size_t> meet;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(meet));
        EXPECT_TRUE(std::binary_search(got.begin(), got.end(), meet));
      }
  }
  EXPECT_GE(checked, 40);
}

TEST(Faces, NonFullDimensionalCone) {
  // A 2-dimensional cone sitting in rank 3 with a sublattice of index 2.
  auto cone = validate_cone({iv({1, 0, 0}), iv({1, 2, 0})}, 3);
  EXPECT_EQ(cone.dimension(), 2u);
  EXPECT_EQ(faces(cone).size(), 4u);
  EXPECT_EQ(singular_locus_codim(cone), ExtCount(2));

  auto smooth = validate_cone({iv({1, 1, 0}), iv({0, 1, 1})}, 3);
  EXPECT_EQ(singular_locus_codim(smooth), ExtCount::infinity());
}

TEST(SingularLocus, Examples) {
  EXPECT_EQ(singular_locus_codim(validate_cone(kPlane, 2)), ExtCount::infinity());
  EXPECT_EQ(singular_locus_codim(validate_cone(kA1, 2)), ExtCount(2));
  EXPECT_EQ(singular_locus_codim(validate_cone(kQuadric, 3)), ExtCount(3));
  EXPECT_EQ(singular_locus_codim(validate_cone({}, 3)), ExtCount::infinity());
}

TEST(ClassifyToric, Quadric) {
  auto v = classify_toric(validate_cone(kQuadric, 3));
  EXPECT_FALSE(v.is_simplicial);
  EXPECT_EQ(v.singular_codim, ExtCount(3));
  EXPECT_EQ(v.pre_k_du_bois_max, ExtCount::infinity());
  EXPECT_EQ(v.k_du_bois_max, ExtCount(1));
  EXPECT_EQ(v.pre_k_rational_max, ExtCount(0));
  EXPECT_EQ(v.k_rational_max, ExtCount(0));
  EXPECT_TRUE(toric_verdict(v, Notion::PreRational, 1).is_no());
  EXPECT_TRUE(toric_verdict(v, Notion::Rational, 1).is_no());
  EXPECT_TRUE(toric_verdict(v, Notion::DuBois, 1).is_yes());
  EXPECT_TRUE(toric_verdict(v, Notion::DuBois, 2).is_no());
}

TEST(ClassifyToric, A1) {
  auto v = classify_toric(validate_cone(kA1, 2));
  EXPECT_TRUE(v.is_simplicial);
  EXPECT_EQ(v.singular_codim, ExtCount(2));
  EXPECT_EQ(v.k_du_bois_max, ExtCount(0));
  EXPECT_EQ(v.pre_k_rational_max, ExtCount::infinity());
  EXPECT_EQ(v.k_rational_max, ExtCount(0));
  EXPECT_FALSE(v.k_rational_boundary_unknown);
}

TEST(ClassifyToric, SmoothConeIsInfiniteEverywhere) {
  auto v = classify_toric(validate_cone(kPlane, 2));
  EXPECT_EQ(v.singular_codim, ExtCount::infinity());
  EXPECT_EQ(v.k_du_bois_max, ExtCount::infinity());
  EXPECT_EQ(v.pre_k_rational_max, ExtCount::infinity());
  EXPECT_EQ(v.k_rational_max, ExtCount::infinity());
  for (Notion n : kAllNotions) EXPECT_TRUE(toric_verdict(v, n, 7).is_yes());
}

TEST(ClassifyToric, OddCodimensionBoundaryIsUnknown) {
  // Simplicial 3-dimensional cone, index 2, all proper faces smooth: c = 3.
  auto v = classify_toric(validate_cone({iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 2})}, 3));
  EXPECT_TRUE(v.is_simplicial);
  EXPECT_EQ(v.singular_codim, ExtCount(3));
  EXPECT_EQ(v.k_rational_max, ExtCount(0));
  EXPECT_TRUE(v.k_rational_boundary_unknown);
  EXPECT_TRUE(toric_verdict(v, Notion::Rational, 0).is_yes());
  EXPECT_TRUE(toric_verdict(v, Notion::Rational, 1).is_unknown());
  EXPECT_TRUE(toric_verdict(v, Notion::Rational, 2).is_no());
}

TEST(ClassifyToric, RandomConeProperties) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(-3, 3);
  int checked = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const std::size_t s = 1 + rng() % 5;
    std::vector<IntVector> rays;
    for (std::size_t i = 0; i < s; ++i) {
      IntVector r(n);
      for (auto& x : r) x = entry(rng);
      rays.push_back(r);
    }
    std::optional<PolyCone> cone;
    try {
      cone = validate_cone(rays, n);
    } catch (const Error&) {
      continue;
    }
    ++checked;
    auto v = classify_toric(*cone);
    if (v.smooth()) continue;
    EXPECT_GE(v.singular_codim, ExtCount(2));
    if (cone->is_simplicial()) EXPECT_EQ(v.pre_k_rational_max, ExtCount::infinity());
    else EXPECT_EQ(v.pre_k_rational_max, ExtCount(0));
    EXPECT_GE(v.k_du_bois_max, v.k_rational_max);
  }
  EXPECT_GT(checked, 100);
}
