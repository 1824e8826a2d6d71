#include <gtest/gtest.h>

#include <cmath>

#include "angularity/crofton.hpp"

using namespace angularity;
using namespace angularity::shapes;

TEST(Flats, SampledFramesAreOrthonormalAndCentered) {
  const FlatMeasure m = make_flat_measure(4, 1, 2.0, Vec::Constant(4, 0.5));
  Rng rng = make_rng(1, 0, 0);
  for (int i = 0; i < 50; ++i) {
    const AffineFlat f = sample_flat(m, rng);
    ASSERT_EQ(f.dim(), 3);
    EXPECT_TRUE((f.frame.transpose() * f.frame).isIdentity(1e-12));
    // The offset from the centre lies in the complement and within the window.
    const Vec off = f.point - m.center;
    EXPECT_LT((f.frame.transpose() * off).norm(), 1e-12);
    EXPECT_LE(off.norm(), 2.0 + 1e-12);
  }
}

TEST(Flats, IndexedSamplingIsReproducible) {
  const FlatMeasure m = make_flat_measure(3, 2, 1.0, Vec::Zero(3));
  const AffineFlat a = sample_flat(m, 5, 17);
  const AffineFlat b = sample_flat(m, 5, 17);
  EXPECT_EQ(a.point, b.point);
  EXPECT_EQ(a.frame, b.frame);
}

TEST(Flats, WindowCoversBody) {
  const Polytope p = random_polytope(3, 8, 1);
  const FlatMeasure m = flat_measure_for(p, 1);
  for (const auto& v : p.vertices_d()) EXPECT_LT((v - m.center).norm(), m.radius);
  EXPECT_GE(m.radius, 1.5 * std::sqrt(3.0) / 2);
}

TEST(Crofton, RecoversFaceSumIntrinsicVolumes) {
  struct Case {
    Polytope p;
    int k;
  };
  const std::vector<Case> cases = {{simplex(2), 1}, {random_polytope(2, 6, 3), 1}, {random_polytope(3, 7, 4), 2}};
  for (const auto& c : cases) {
    const FlatMeasure m = calibrate(flat_measure_for(c.p, c.k), 200000, 11);
    const auto r = crofton_estimate(c.p, m, 200000, 12);
    const double target = intrinsic_volume(c.p, c.k);
    EXPECT_LE(std::abs(r.value - target), 4 * r.sigma) << r.value << " vs " << target;
    EXPECT_EQ(r.calibration, m.calibration);
  }
}

TEST(Crofton, CalibrationIsScaleFree) {
  // The calibrated estimate for the unit square centred in the window is C(2,1).
  const Polytope sq = cube(2);
  const FlatMeasure m = calibrate(flat_measure_for(sq, 1), 100000, 3);
  const auto r = crofton_estimate(sq, m, 100000, 4);
  EXPECT_LE(std::abs(r.value - 2.0), 4 * r.sigma);
}

TEST(Crofton, RejectsWindowTooSmallForCalibration) {
  EXPECT_THROW(calibrate(make_flat_measure(2, 1, 0.1, Vec::Zero(2)), 1000, 1), std::invalid_argument);
}

TEST(Crofton, ThreadCountDoesNotChangeResult) {
  const Polytope p = random_polytope(3, 6, 8);
  const FlatMeasure m = calibrate(flat_measure_for(p, 1), 30000, 1);
  set_thread_count(1);
  const auto a = crofton_estimate(p, m, 30000, 2);
  set_thread_count(3);
  const auto b = crofton_estimate(p, m, 30000, 2);
  set_thread_count(0);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.sigma, b.sigma);
}

TEST(VkAction, SquareFirstIntrinsicVolume) {
  // V1 applied to V1 of the unit square.
  const Polytope sq = cube(2);
  const FlatMeasure m = calibrate(flat_measure_for(sq, 1), 200000, 5);
  const auto r = vk_action({Federer{1}}, sq, BorelBox::everything(), m, 200000, 6);
  EXPECT_LE(std::abs(r.value - std::acos(-1.0) / 2), 4 * r.sigma);
}

TEST(VkAction, FedererZeroGivesCroftonCount) {
  // Ψ = V_0 counts hit flats, so the action reduces to the Crofton estimate.
  const Polytope p = random_polytope(2, 5, 6);
  const FlatMeasure m = calibrate(flat_measure_for(p, 1), 50000, 7);
  const auto a = vk_action({Federer{0}}, p, BorelBox::everything(), m, 50000, 8);
  const auto b = crofton_estimate(p, m, 50000, 8);
  EXPECT_NEAR(a.value, b.value, 1e-9 * b.value);
}
