#pragma once

// Polyhedral convex cones C = cone(generators) + span(lineality) and their
// external angles.

#include <cstdint>
#include <vector>

#include "angularity/common.hpp"

namespace angularity {

class PolyCone {
 public:
  PolyCone() = default;
  PolyCone(int n, std::vector<Vec> generators, std::vector<Vec> lineality = {});

  /// A cone whose lineality space is known to be span(lineality).  The
  /// lineality basis is orthonormalized and generators are projected onto its
  /// complement, skipping the feasibility search done by normalize().
  static PolyCone with_lineality(int n, std::vector<Vec> generators, const std::vector<Vec>& lineality);

  int dim() const { return n_; }
  const std::vector<Vec>& generators() const { return generators_; }
  const std::vector<Vec>& lineality() const { return lineality_; }
  bool is_normalized() const { return normalized_; }

  /// Orthonormal lineality basis equal to L(C); unit generators orthogonal
  /// to it, with zero and duplicate directions removed.
  PolyCone normalize() const;

  /// Appends zero coordinates, embedding the cone into R^m (m >= n).
  PolyCone embed(int m) const;
  PolyCone transformed(const Mat& q) const;

 private:
  int n_ = 0;
  std::vector<Vec> generators_;
  std::vector<Vec> lineality_;
  bool normalized_ = false;
};

/// Orthonormal basis of L(C) = C ∩ (-C).
std::vector<Vec> lineality_space(const PolyCone& cone);

bool polar_contains(const PolyCone& cone, const Vec& xi);

/// Splits C into cones sharing L(C), each simplicial modulo L(C), meeting in
/// common faces.
std::vector<PolyCone> triangulate(const PolyCone& cone);

struct AngleOptions {
  std::uint64_t samples = 200000;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

struct AngleResult {
  double value = 0.0;
  double sigma = 0.0;
  bool exact = true;
};

/// Fraction of L(C)^⊥ occupied by the polar cone.  Exact when the
/// generators span at most 3 dimensions modulo L(C); Monte Carlo otherwise.
AngleResult external_angle(const PolyCone& cone, const AngleOptions& opts = {});

struct AdditivityResult {
  double residual = 0.0;
  double sigma = 0.0;
  std::size_t pieces = 0;
};

/// |sum over intersections of triangulation pieces (inclusion-exclusion) - γ(C)|.
AdditivityResult angle_additivity_check(const PolyCone& cone, const AngleOptions& opts = {});

/// Inclusion-exclusion sum over explicit cones sharing a common lineality
/// space, whose pairwise intersections are given by common generators.
/// Pieces are index sets into `generators`.
Estimate inclusion_exclusion_angle(int n, const std::vector<Vec>& generators, const std::vector<Vec>& lineality,
                                   const std::vector<std::vector<int>>& pieces, const AngleOptions& opts);

/// Nonnegative least squares min |A x - b|, x >= 0 (Lawson-Hanson).
Vec nnls(const Mat& a, const Vec& b);

}  // namespace angularity
