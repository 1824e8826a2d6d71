#pragma once

// Quadratic polynomials on the Plücker embedding restricted to the
// Grassmannian: numerical ranks, constant-coefficient weights, and the
// Strichartz highest weight vectors.

#include <complex>
#include <cstdint>
#include <vector>

#include "angularity/common.hpp"
#include "angularity/exterior.hpp"

namespace angularity {

struct GrassSample {
  int n = 0;
  int k = 0;
  std::vector<Frame> frames;
  std::uint64_t seed = 0;
};

/// Orthonormalized standard-Gaussian n x k frames (invariant measure).
GrassSample sample_grassmann(int n, int k, std::size_t count, std::uint64_t seed);

/// C(n,k) C(n+1,k+1) / (n-k+1), cross-checked against
/// C(n,k)^2 - C(n,k-1) C(n,k+1).  Requires 0 <= k < n-1.
std::uint64_t dim_formula(int n, int k);

/// Products p_I p_J (I <= J) of the Plücker coordinates.
std::vector<double> quadratic_monomials(const MultiVector& p);

/// Rows indexed by frames, columns by quadratic monomials.
Mat monomial_matrix(const std::vector<Frame>& frames);

struct RankResult {
  int rank = 0;
  /// σ_r / σ_{r+1}, with σ_{r+1} floored at machine epsilon times σ_1.
  double gap = 0.0;
  double cutoff = 0.0;
  bool stable = false;
  std::vector<double> singular_values;
};

/// Singular values above rel_cutoff * σ_max.  Stable when σ_r >= 10 cutoff
/// and σ_{r+1} <= cutoff / 10.
RankResult numerical_rank(const Mat& m, double rel_cutoff = 1e-9);

/// Rank of the quadratic monomials restricted to sampled k-planes.
/// Re-samples (up to three times) while the rank is unstable.
RankResult restriction_rank(int n, int k, std::size_t sample_count, std::uint64_t seed);

struct ConstCoeffRank {
  RankResult rank;
  /// Largest relative RMS misfit of a weight row against the quadratic span.
  double span_residual = 0.0;
};

/// Form with independent standard normal coefficients.
BiGradedForm random_form(int n, int base, int fiber, Rng& rng);

ConstCoeffRank constcoeff_weight_rank(int n, int k, std::size_t form_count, std::size_t sample_count,
                                      std::uint64_t seed);

struct HighestWeightSpec {
  int n = 0;
  int k = 0;
  std::vector<int> m;

  /// Throws unless m_1 >= ... >= m_{k-1} >= |m_k|, 2k <= n, and m_k >= 0
  /// whenever 2k < n.
  void validate() const;
};

std::complex<double> strichartz_vector(const HighestWeightSpec& spec, const Frame& frame);

/// E(φ) = <cos φ e1 + sin φ e4> ⊕ <e3, e5, ..., e_{2k-1}> for n >= 4, and
/// <cos φ e1 + sin φ e3> for n = 3.
Frame obstruction_frame(int n, int k, double phi);

struct QuadraticFit {
  Vec coefficients;
  double residual = 0.0;  // RMS misfit
  double condition = 0.0;
};

/// Least-squares fit of values by quadratic Plücker monomials.  The sample
/// count must exceed the rank of the monomial matrix.
QuadraticFit fit_quadratic(const std::vector<Frame>& frames, const Vec& values);

struct ObstructionResult {
  double max_residual = 0.0;  // max |f(E(φ)) - cos^{2 m1} φ|
  double fit_residual = 0.0;  // quadratic fit RMS over the family
};

/// Evaluates m = (m1, 0, ..., 0) on the family over `grid`.
ObstructionResult obstruction_family_check(int n, int k, int m1, const std::vector<double>& grid);

}  // namespace angularity
