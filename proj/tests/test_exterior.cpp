#include <gtest/gtest.h>

#include "angularity/exterior.hpp"

using namespace angularity;

namespace {

Frame random_frame(int n, int k, std::uint64_t seed) {
  Rng rng = make_rng(seed, 7, 0);
  return Frame(gaussian_matrix(n, k, rng));
}

Frame orthonormal_frame(int n, int k, std::uint64_t seed) {
  Eigen::HouseholderQR<Mat> qr{random_frame(n, k, seed).vectors};
  return Frame(Mat(qr.householderQ()).leftCols(k));
}

BiGradedForm random_biform(int n, int a, int b, std::uint64_t seed) {
  Rng rng = make_rng(seed, 9, 0);
  std::normal_distribution<double> g;
  BiGradedForm w(n, a, b);
  for (std::size_t i = 0; i < w.base_size(); ++i)
    for (std::size_t j = 0; j < w.fiber_size(); ++j) w.coeff(i, j) = g(rng);
  return w;
}

}  // namespace

TEST(Subsets, RankInvertsEnumeration) {
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto subsets = sorted_subsets(n, k);
      ASSERT_EQ(subsets.size(), binomial(n, k));
      for (std::size_t r = 0; r < subsets.size(); ++r) EXPECT_EQ(subset_rank(subsets[r], n), r);
    }
}

TEST(Wedge, VectorsAnticommute) {
  Rng rng = make_rng(1, 1, 0);
  const auto u = MultiVector::vector(random_unit_vector(5, rng));
  const auto v = MultiVector::vector(random_unit_vector(5, rng));
  const auto uv = wedge(u, v);
  const auto vu = wedge(v, u);
  EXPECT_LT((uv + vu).norm(), 1e-14);
  EXPECT_LT(wedge(u, u).norm(), 1e-14);
}

TEST(Wedge, BasisSigns) {
  const auto e1 = MultiVector::basis(3, {0});
  const auto e2 = MultiVector::basis(3, {1});
  const auto e3 = MultiVector::basis(3, {2});
  EXPECT_DOUBLE_EQ(wedge(wedge(e1, e2), e3).coeff({0, 1, 2}), 1.0);
  EXPECT_DOUBLE_EQ(wedge(wedge(e2, e1), e3).coeff({0, 1, 2}), -1.0);
  EXPECT_DOUBLE_EQ(wedge(e3, wedge(e1, e2)).coeff({0, 1, 2}), 1.0);
}

TEST(Wedge, Associative) {
  Rng rng = make_rng(2, 1, 0);
  const auto a = MultiVector::vector(random_unit_vector(5, rng));
  const auto b = wedge(MultiVector::vector(random_unit_vector(5, rng)), MultiVector::vector(random_unit_vector(5, rng)));
  const auto c = MultiVector::vector(random_unit_vector(5, rng));
  EXPECT_LT((wedge(wedge(a, b), c) - wedge(a, wedge(b, c))).norm(), 1e-13);
}

TEST(Plucker, CauchyBinetNormIsGramDeterminant) {
  for (int k = 1; k <= 4; ++k) {
    const Frame f = random_frame(6, k, 10 + static_cast<std::uint64_t>(k));
    const double gram = (f.vectors.transpose() * f.vectors).determinant();
    const auto p = plucker(f);
    EXPECT_NEAR(p.norm() * p.norm(), gram, 1e-10 * gram);
  }
}

TEST(Plucker, CoordinatesAreMinors) {
  const Frame f = random_frame(5, 3, 3);
  const auto p = plucker(f);
  for (const auto& s : sorted_subsets(5, 3)) {
    Mat minor(3, 3);
    for (int r = 0; r < 3; ++r) minor.row(r) = f.vectors.row(s[static_cast<std::size_t>(r)]);
    EXPECT_NEAR(p.coeff(s), minor.determinant(), 1e-12);
  }
}

TEST(Plucker, RelationOnG24) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto p = plucker(random_frame(4, 2, seed));
    const double rel = p.coeff({0, 1}) * p.coeff({2, 3}) - p.coeff({0, 2}) * p.coeff({1, 3}) +
                       p.coeff({0, 3}) * p.coeff({1, 2});
    EXPECT_NEAR(rel, 0.0, 1e-12);
  }
}

TEST(Plucker, DegenerateFrameThrows) {
  Mat m(3, 2);
  m << 1, 2, 0, 0, 0, 0;
  EXPECT_THROW(plucker(Frame(m)), DimensionError);
}

TEST(Contract, FullBasisContractionIsPlusOne) {
  BiGradedForm w(4, 2, 2);
  w.set({0, 2}, {1, 3}, 1.0);
  const auto c = contract(MultiVector::basis(4, {0, 2}), w);
  EXPECT_EQ(c.base_grade(), 0);
  EXPECT_DOUBLE_EQ(pair_fiber(c, MultiVector::basis(4, {1, 3})), 1.0);
}

TEST(Contract, IteratedContractionMatchesWedge) {
  const BiGradedForm w = random_biform(5, 3, 2, 4);
  Rng rng = make_rng(4, 2, 0);
  const auto u = MultiVector::vector(random_unit_vector(5, rng));
  const auto v = wedge(MultiVector::vector(random_unit_vector(5, rng)), MultiVector::vector(random_unit_vector(5, rng)));
  const auto lhs = contract(u, contract(v, w));
  const auto rhs = contract(wedge(v, u), w);
  for (std::size_t i = 0; i < lhs.coeffs().size(); ++i) EXPECT_NEAR(lhs.coeffs()[i], rhs.coeffs()[i], 1e-12);
}

TEST(Contract, GradeMismatchThrows) {
  BiGradedForm w(4, 1, 2);
  EXPECT_THROW(contract(MultiVector::basis(4, {0, 1}), w), GradeError);
}

TEST(Complement, OrthonormalAndPositivelyOriented) {
  for (int k = 0; k <= 5; ++k) {
    const Frame e = orthonormal_frame(5, k, 20 + static_cast<std::uint64_t>(k));
    const Frame c = oriented_complement(e);
    ASSERT_EQ(c.size(), 5 - k);
    EXPECT_TRUE(c.is_orthonormal());
    Mat full(5, 5);
    full << e.vectors, c.vectors;
    EXPECT_NEAR(full.determinant(), 1.0, 1e-12);
  }
}
