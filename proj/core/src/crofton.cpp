#include "angularity/crofton.hpp"

#include <cmath>

namespace angularity {
namespace {

constexpr std::uint64_t kFlatStream = 0x666c6174;
constexpr std::uint64_t kCalibrationStream = 0x63616c69;

CroftonResult scaled(const Welford& w, const FlatMeasure& meas) {
  CroftonResult r;
  r.calibration = meas.calibration;
  r.value = meas.calibration * w.mean;
  const double rel_c = meas.calibration_sigma / meas.calibration;
  r.sigma = std::sqrt(std::pow(meas.calibration * w.sigma(), 2) + std::pow(r.value * rel_c, 2));
  return r;
}

}  // namespace

FlatMeasure make_flat_measure(int n, int k, double radius, Vec center) {
  if (k < 0 || k > n) throw DimensionError("flat codimension out of range");
  if (!(radius > 0.0)) throw std::invalid_argument("window radius must be positive");
  if (center.size() != n) throw DimensionError("window centre has the wrong dimension");
  return FlatMeasure{n, n - k, radius, std::move(center), 1.0, 0.0};
}

FlatMeasure flat_measure_for(const Polytope& p, int k) {
  const int n = p.ambient_dim();
  const double r = 1.5 * std::max(p.circumradius(), std::sqrt(static_cast<double>(n)) / 2.0);
  return make_flat_measure(n, k, r, p.center());
}

AffineFlat sample_flat(const FlatMeasure& meas, Rng& rng) {
  const int n = meas.n;
  const int d = meas.d;
  const int k = n - d;
  AffineFlat flat;
  if (k == 0) {
    flat.point = meas.center;
    flat.frame = Mat::Identity(n, n);
    flat.complement = Mat(n, 0);
    return flat;
  }
  Mat q;
  if (d == 0) {
    q = Mat::Identity(n, n);
  } else {
    Eigen::HouseholderQR<Mat> qr(gaussian_matrix(n, n, rng));
    q = qr.householderQ();
  }
  flat.frame = q.leftCols(d);
  flat.complement = q.rightCols(k);
  Vec y = random_unit_vector(k, rng);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  y *= meas.radius * std::pow(unit(rng), 1.0 / k);
  flat.point = meas.center + flat.complement * y;
  return flat;
}

AffineFlat sample_flat(const FlatMeasure& meas, std::uint64_t seed, std::uint64_t index) {
  Rng rng = make_rng(seed, kFlatStream, index);
  return sample_flat(meas, rng);
}

FlatMeasure calibrate(FlatMeasure meas, std::uint64_t samples, std::uint64_t seed) {
  const int n = meas.n;
  std::vector<Vec> corners;
  for (int m = 0; m < (1 << n); ++m) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = meas.center[i] + ((m & (1 << i)) ? 0.5 : -0.5);
    corners.push_back(v);
  }
  if (std::sqrt(static_cast<double>(n)) / 2.0 > meas.radius)
    throw std::invalid_argument("calibration cube does not fit in the sampling window");
  const Polytope cube = Polytope::from_doubles(corners);
  const double target = intrinsic_volume(cube, meas.k());
  const Welford w = monte_carlo(samples, seed, kCalibrationStream, [&](Rng& rng) {
    return slice_hits(cube, sample_flat(meas, rng)) ? 1.0 : 0.0;
  });
  if (w.mean == 0.0) throw std::runtime_error("no calibration flat hit the reference cube");
  meas.calibration = target / w.mean;
  meas.calibration_sigma = meas.calibration * w.sigma() / w.mean;
  return meas;
}

CroftonResult crofton_estimate(const Polytope& p, const FlatMeasure& meas, std::uint64_t samples, std::uint64_t seed) {
  if (p.ambient_dim() != meas.n) throw DimensionError("polytope and flat measure differ in dimension");
  const Welford w = monte_carlo(samples, seed, kFlatStream, [&](Rng& rng) {
    return slice_hits(p, sample_flat(meas, rng)) ? 1.0 : 0.0;
  });
  return scaled(w, meas);
}

CroftonResult vk_action(const std::vector<WeightSpec>& psi, const Polytope& p, const BorelBox& u,
                        const FlatMeasure& meas, std::uint64_t samples, std::uint64_t seed, const EvalOptions& opts) {
  if (p.ambient_dim() != meas.n) throw DimensionError("polytope and flat measure differ in dimension");
  for (const auto& w : psi) validate_weight(w, meas.n);
  const Welford w = monte_carlo(samples, seed, kFlatStream, [&](Rng& rng) {
    const AffineFlat flat = sample_flat(meas, rng);
    if (!slice_hits(p, flat)) return 0.0;
    const auto verts = slice_vertices(p, flat);
    if (verts.empty()) return 0.0;
    const Polytope local = Polytope::from_doubles(verts);
    return evaluate_embedded(psi, local, AffineMap{flat.point, flat.frame}, u, opts).total;
  });
  return scaled(w, meas);
}

}  // namespace angularity
