#pragma once

// Monte Carlo integral geometry over affine Grassmannians: Crofton
// estimates of intrinsic volumes and the V_k action on curvature measures.

#include <cstdint>
#include <vector>

#include "angularity/common.hpp"
#include "angularity/curvmeas.hpp"
#include "angularity/polytope.hpp"

namespace angularity {

/// Flats of dimension d = n - k whose direction is uniform on Grass_d and
/// whose offset is uniform in the radius-R ball of the orthogonal
/// complement around `center`.  `calibration` rescales hit fractions to the
/// chosen Haar normalization.
struct FlatMeasure {
  int n = 0;
  int d = 0;
  double radius = 1.0;
  Vec center;
  double calibration = 1.0;
  double calibration_sigma = 0.0;

  int k() const { return n - d; }
};

FlatMeasure make_flat_measure(int n, int k, double radius, Vec center);

/// Window suited to P: centred at P's barycentre with radius
/// 1.5 max(circumradius(P), sqrt(n)/2), so the calibration cube also fits.
FlatMeasure flat_measure_for(const Polytope& p, int k);

AffineFlat sample_flat(const FlatMeasure& meas, Rng& rng);
AffineFlat sample_flat(const FlatMeasure& meas, std::uint64_t seed, std::uint64_t index);

/// Sets c so that the estimate for the unit cube centred at meas.center
/// equals its face-sum V_k = C(n,k).  Throws if no flat hits the cube.
FlatMeasure calibrate(FlatMeasure meas, std::uint64_t samples, std::uint64_t seed);

struct CroftonResult {
  double value = 0.0;
  double sigma = 0.0;
  double calibration = 0.0;
};

CroftonResult crofton_estimate(const Polytope& p, const FlatMeasure& meas, std::uint64_t samples, std::uint64_t seed);

/// c times the mean over flats of Ψ(P ∩ E, U), the slice evaluated in R^n.
CroftonResult vk_action(const std::vector<WeightSpec>& psi, const Polytope& p, const BorelBox& u,
                        const FlatMeasure& meas, std::uint64_t samples, std::uint64_t seed,
                        const EvalOptions& opts = {});

}  // namespace angularity
