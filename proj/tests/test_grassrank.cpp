#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "angularity/curvmeas.hpp"
#include "angularity/grassrank.hpp"

using namespace angularity;

namespace {

// C(n,k)^2 - C(n,k-1) C(n,k+1), the dimension of the degree-2 part of the
// Plücker coordinate ring.
std::uint64_t coordinate_ring_degree2(int n, int k) {
  const std::uint64_t c = binomial(n, k);
  return c * c - (k >= 1 ? binomial(n, k - 1) : 0) * binomial(n, k + 1);
}

}  // namespace

TEST(DimFormula, MatchesCoordinateRing) {
  for (int n = 2; n <= 9; ++n)
    for (int k = 0; k < n - 1; ++k) EXPECT_EQ(dim_formula(n, k), coordinate_ring_degree2(n, k)) << n << "," << k;
  EXPECT_EQ(dim_formula(4, 2), 20u);
  EXPECT_EQ(dim_formula(6, 2), 105u);
}

TEST(Sampling, FramesAreOrthonormal) {
  const auto s = sample_grassmann(5, 2, 50, 3);
  ASSERT_EQ(s.frames.size(), 50u);
  for (const auto& f : s.frames) EXPECT_TRUE(f.is_orthonormal(1e-12));
}

TEST(Sampling, PluckerSecondMomentIsUniform) {
  // Under the invariant measure E[p_I^2] = 1 / C(n,k) for every I.
  const auto s = sample_grassmann(4, 2, 20000, 5);
  const Mat m = monomial_matrix(s.frames);
  const auto diag_col = [](int i, int c) { return i * c - i * (i - 1) / 2; };
  for (int i = 0; i < 6; ++i) EXPECT_NEAR(m.col(diag_col(i, 6)).mean(), 1.0 / 6, 0.01);
}

TEST(Rank, EqualsExpectedDimension) {
  for (auto [n, k] : {std::pair{3, 1}, std::pair{4, 1}, std::pair{4, 2}, std::pair{5, 2}, std::pair{6, 2}}) {
    const std::uint64_t c = binomial(n, k);
    const auto r = restriction_rank(n, k, std::max<std::uint64_t>(500, 2 * c * (c + 1)), 7);
    EXPECT_EQ(static_cast<std::uint64_t>(r.rank), dim_formula(n, k)) << n << "," << k;
    EXPECT_TRUE(r.stable);
    EXPECT_GT(r.gap, 1e3);
  }
}

TEST(Rank, NumericalRankOfKnownMatrix) {
  Rng rng = make_rng(2, 0, 0);
  const Mat a = gaussian_matrix(30, 4, rng) * gaussian_matrix(4, 12, rng);
  const auto r = numerical_rank(a);
  EXPECT_EQ(r.rank, 4);
  EXPECT_TRUE(r.stable);
}

TEST(Rank, ConstCoeffWeightsSpanTheQuadratics) {
  const auto r = constcoeff_weight_rank(4, 2, 60, 500, 3);
  EXPECT_EQ(r.rank.rank, 20);
  EXPECT_LT(r.span_residual, 1e-8);
}

TEST(Fit, QuadraticWeightIsFitExactly) {
  Rng rng = make_rng(4, 0, 0);
  Mat q = gaussian_matrix(10, 10, rng);
  q = q + q.transpose().eval();
  const WeightSpec w = Quadratic{2, q};
  const auto s = sample_grassmann(5, 2, 300, 6);
  Vec values(300);
  for (int i = 0; i < 300; ++i) values[i] = weight_eval(w, s.frames[static_cast<std::size_t>(i)]);
  EXPECT_LT(fit_quadratic(s.frames, values).residual, 1e-10);
}

TEST(Fit, QuarticWeightIsNotQuadratic) {
  const WeightSpec w = tabulated_weight("p0-quartic", 4, 2);
  const auto s = sample_grassmann(4, 2, 500, 8);
  Vec values(500);
  for (int i = 0; i < 500; ++i) values[i] = weight_eval(w, s.frames[static_cast<std::size_t>(i)]);
  EXPECT_GT(fit_quadratic(s.frames, values).residual, 1e-3);
}

TEST(Strichartz, ObstructionFamilyProfile) {
  for (int m1 = 0; m1 <= 3; ++m1) {
    HighestWeightSpec spec{5, 2, {m1, 0}};
    spec.validate();
    for (double phi : {0.0, 0.4, 1.3, 2.9}) {
      const auto f = strichartz_vector(spec, obstruction_frame(5, 2, phi));
      EXPECT_NEAR(f.real(), std::pow(std::cos(phi), 2 * m1), 1e-12);
      EXPECT_NEAR(f.imag(), 0.0, 1e-12);
    }
  }
}

TEST(Strichartz, HigherWeightsAreNotQuadratic) {
  std::vector<double> grid;
  for (int i = 0; i < 100; ++i) grid.push_back(std::numbers::pi * i / 100);
  EXPECT_LT(obstruction_family_check(6, 3, 1, grid).fit_residual, 1e-8);
  EXPECT_GT(obstruction_family_check(6, 3, 2, grid).fit_residual, 1e-2);
  EXPECT_GT(obstruction_family_check(4, 2, 3, grid).fit_residual, 1e-2);
}

TEST(Strichartz, InvalidWeightsRejected) {
  EXPECT_THROW((HighestWeightSpec{5, 2, {0, 1}}.validate()), std::invalid_argument);
  EXPECT_THROW((HighestWeightSpec{5, 2, {1, -1}}.validate()), std::invalid_argument);
  EXPECT_THROW((HighestWeightSpec{5, 3, {1, 0, 0}}.validate()), std::invalid_argument);
  EXPECT_NO_THROW((HighestWeightSpec{4, 2, {1, -1}}.validate()));
}
