#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "angularity/curvmeas.hpp"

using namespace angularity;
using namespace angularity::shapes;

namespace {

BiGradedForm random_biform(int n, int a, int b, std::uint64_t seed) {
  Rng rng = make_rng(seed, 3, 0);
  std::normal_distribution<double> g;
  BiGradedForm w(n, a, b);
  for (std::size_t i = 0; i < w.base_size(); ++i)
    for (std::size_t j = 0; j < w.fiber_size(); ++j) w.coeff(i, j) = g(rng);
  return w;
}

Frame random_frame(int n, int k, std::uint64_t seed) {
  Rng rng = make_rng(seed, 4, 0);
  Eigen::HouseholderQR<Mat> qr{gaussian_matrix(n, k, rng)};
  return Frame(Mat(qr.householderQ()).leftCols(k));
}

}  // namespace

TEST(BallVolume, KnownValues) {
  EXPECT_DOUBLE_EQ(ball_volume(0), 1.0);
  EXPECT_NEAR(ball_volume(1), 2.0, 1e-15);
  EXPECT_NEAR(ball_volume(2), std::numbers::pi, 1e-15);
  EXPECT_NEAR(ball_volume(3), 4 * std::numbers::pi / 3, 1e-14);
  EXPECT_NEAR(ball_volume(4), std::numbers::pi * std::numbers::pi / 2, 1e-14);
}

TEST(IntrinsicVolumes, CubeIsBinomial) {
  for (int n = 1; n <= 3; ++n) {
    const auto v = intrinsic_volumes(cube(n));
    for (int k = 0; k <= n; ++k) EXPECT_NEAR(v[static_cast<std::size_t>(k)], static_cast<double>(binomial(n, k)), 1e-12);
  }
}

TEST(IntrinsicVolumes, PolygonHalfPerimeterAndEuler) {
  const Polytope p = regular_polygon(9, 2.0);
  const double side = 2 * 2.0 * std::sin(std::numbers::pi / 9);
  const auto v = intrinsic_volumes(p);
  EXPECT_NEAR(v[0], 1.0, 1e-12);
  EXPECT_NEAR(v[1], 9 * side / 2, 1e-12);
  EXPECT_NEAR(v[2], face_volume(p, p.whole()), 1e-12);
}

TEST(IntrinsicVolumes, IndependentOfAmbientDimension) {
  // A unit square sitting in R^3 has the same intrinsic volumes as in R^2.
  const Polytope flat(std::vector<RVec>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
  const auto v = intrinsic_volumes(flat);
  EXPECT_NEAR(v[0], 1.0, 1e-12);
  EXPECT_NEAR(v[1], 2.0, 1e-12);
  EXPECT_NEAR(v[2], 1.0, 1e-12);
}

TEST(IntrinsicVolumes, HomogeneousOfDegreeK) {
  const Polytope p = random_polytope(3, 7, 2);
  Mat q = 2.5 * Mat::Identity(3, 3);
  const Polytope big = p.transformed(q, Vec::Zero(3));
  const auto a = intrinsic_volumes(p);
  const auto b = intrinsic_volumes(big);
  for (int k = 0; k <= 3; ++k) EXPECT_NEAR(b[static_cast<std::size_t>(k)], std::pow(2.5, k) * a[static_cast<std::size_t>(k)], 1e-9 * (1 + b[static_cast<std::size_t>(k)]));
}

TEST(IntrinsicVolumes, RigidMotionInvariance) {
  const Polytope p = random_polytope(3, 8, 9);
  Rng rng = make_rng(9, 0, 0);
  Eigen::HouseholderQR<Mat> qr{gaussian_matrix(3, 3, rng)};
  const auto a = intrinsic_volumes(p);
  const auto b = intrinsic_volumes(p.transformed(qr.householderQ(), (Vec(3) << 1, 2, -3).finished()));
  for (int k = 0; k <= 3; ++k) EXPECT_NEAR(a[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(k)], 1e-9);
}

TEST(Steiner, TubeVolumeMatchesPolynomial) {
  const auto r = steiner_check(cube(2), 0.5, 200000, 3);
  EXPECT_NEAR(r.target, 1 + 2 * 2 * 0.5 + std::numbers::pi * 0.25, 1e-12);
  EXPECT_LE(std::abs(r.residual), 4 * r.sigma);
}

TEST(Weights, QuadraticIdentityEqualsFederer) {
  const int n = 4, k = 2;
  const Quadratic q{k, Mat::Identity(6, 6)};
  for (std::uint64_t s = 0; s < 5; ++s) EXPECT_NEAR(weight_eval(q, random_frame(n, k, s)), weight_eval(Federer{k}, random_frame(n, k, s)), 1e-12);
  const Polytope p = random_polytope(4, 7, 1);
  EvalOptions opts;
  opts.angle.seed = 8;
  EXPECT_NEAR(evaluate(q, p, BorelBox::everything(), opts).total, evaluate(Federer{k}, p, BorelBox::everything(), opts).total, 1e-10);
}

TEST(Weights, EvennessIsEnforced) {
  EXPECT_THROW(make_tabulated(3, 1, "odd", [](const Frame& f) { return f.vectors(0, 0); }), std::invalid_argument);
  EXPECT_NO_THROW(make_tabulated(3, 1, "even", [](const Frame& f) { return f.vectors(0, 0) * f.vectors(0, 0); }));
  for (const auto& id : tabulated_ids()) EXPECT_NO_THROW(tabulated_weight(id, 4, 2));
  EXPECT_THROW(tabulated_weight("no-such-weight", 4, 2), std::invalid_argument);
}

TEST(Weights, ValidationRejectsBadShapes) {
  EXPECT_THROW(validate_weight(Federer{5}, 4), std::invalid_argument);
  EXPECT_THROW(validate_weight(Quadratic{2, Mat::Identity(5, 5)}, 4), std::invalid_argument);
  EXPECT_THROW(validate_weight(ConstCoeff{BiGradedForm(4, 2, 1)}, 4), std::invalid_argument);
}

TEST(Weights, QuadraticIsEvenUnderReflection) {
  Rng rng = make_rng(1, 1, 0);
  Mat q = gaussian_matrix(10, 10, rng);
  q = q + q.transpose().eval();
  const Quadratic w{2, q};
  Frame f = random_frame(5, 2, 4);
  const double a = weight_eval(w, f);
  f.vectors.col(1) *= -1;
  EXPECT_NEAR(weight_eval(w, f), a, 1e-12);
}

TEST(Evaluate, BoxAdditivity) {
  const Polytope p = random_polytope(3, 8, 4);
  const std::vector<WeightSpec> ws = {Federer{0}, Federer{1}, Federer{2}, tabulated_weight("p0-squared", 3, 1)};
  Vec lo = Vec::Constant(3, -1), hi = Vec::Constant(3, 1);
  Vec cut_hi = hi, cut_lo = lo;
  cut_hi[1] = 0.113;
  cut_lo[1] = 0.113;
  const auto whole = evaluate(ws, p, BorelBox::box(lo, hi));
  const auto a = evaluate(ws, p, BorelBox::box(lo, cut_hi));
  const auto b = evaluate(ws, p, BorelBox::box(cut_lo, hi));
  EXPECT_NEAR(a.total + b.total, whole.total, 1e-12);
  for (std::size_t d = 0; d < whole.per_degree.size(); ++d) EXPECT_NEAR(a.per_degree[d] + b.per_degree[d], whole.per_degree[d], 1e-12);
}

TEST(Evaluate, FaceDimensionMatchesWeightDegree) {
  const auto e = evaluate(Federer{1}, cube(3));
  EXPECT_NEAR(e.per_degree[1], 3.0, 1e-12);
  EXPECT_EQ(e.per_degree[0], 0.0);
  EXPECT_EQ(e.per_degree[2], 0.0);
}

TEST(ConstCoeff, FaceSumAgreesWithNormalCycleIntegral) {
  struct Case {
    int n, k;
    std::uint64_t seed;
  };
  for (const Case c : {Case{2, 0, 1}, Case{2, 1, 2}, Case{3, 1, 3}, Case{3, 2, 4}, Case{3, 3, 5}}) {
    const Polytope p = random_polytope(c.n, c.n + 2, c.seed);
    const BiGradedForm omega = random_biform(c.n, c.k, c.n - c.k, c.seed);
    const auto direct = direct_constcoeff(omega, p, BorelBox::everything(), 40000, c.seed);
    const auto faces = evaluate(ConstCoeff{omega}, p);
    const double sigma = std::hypot(direct.total_sigma, faces.total_sigma);
    EXPECT_LE(std::abs(direct.total - faces.total), 4 * sigma + 1e-9) << "n=" << c.n << " k=" << c.k;
  }
}

TEST(ConstCoeff, SymplecticMultiplesVanishOnPlanes) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const BiGradedForm eta = random_biform(4, 1, 1, s);
    const ConstCoeff w{symplectic_wedge(eta)};
    for (std::uint64_t f = 0; f < 20; ++f) EXPECT_NEAR(weight_eval(w, random_frame(4, 2, 100 * s + f)), 0.0, 1e-12);
  }
}

TEST(ConstCoeff, StandardVolumeFormGivesFederer) {
  // dx_1 ^ ... ^ dx_k ^ dy_{k+1} ^ ... ^ dy_n summed over complementary
  // pairs with the shuffle sign recovers the Federer weight up to ω_{n-k}.
  const int n = 3, k = 1;
  BiGradedForm omega(n, k, n - k);
  omega.set({0}, {1, 2}, 1.0);
  omega.set({1}, {0, 2}, -1.0);
  omega.set({2}, {0, 1}, 1.0);
  for (std::uint64_t s = 0; s < 5; ++s)
    EXPECT_NEAR(weight_eval(ConstCoeff{omega}, random_frame(n, k, s)), ball_volume(n - k), 1e-12);
}

TEST(MonteCarlo, DeterministicAcrossThreadCounts) {
  const Polytope p = random_polytope(4, 7, 3);
  EvalOptions opts;
  opts.angle.seed = 17;
  opts.angle.samples = 30000;
  set_thread_count(1);
  const auto a = intrinsic_volumes(p, opts);
  set_thread_count(4);
  const auto b = intrinsic_volumes(p, opts);
  set_thread_count(0);
  EXPECT_EQ(a, b);
}
