#pragma once

// Convex polytopes given by exact rational vertices.  All combinatorial
// decisions (affine hull, facet support, face identity) are made in exact
// arithmetic; volumes, angles and distances are reported as doubles.

#include <cstdint>
#include <optional>
#include <vector>

#include "angularity/common.hpp"
#include "angularity/cones.hpp"

namespace angularity {

/// normal . x <= offset (or == offset for hull equations).
struct Halfspace {
  RVec normal;
  Rational offset;
};

struct Face {
  int dim = 0;
  std::vector<int> vertices;
  std::uint64_t mask = 0;
  /// Orthonormal frame (n x dim) of the linear subspace parallel to the face.
  Mat affine_basis;
  Vec barycenter;
};

/// Axis-aligned box, or all of R^n.
struct BorelBox {
  bool all = true;
  Vec lo;
  Vec hi;

  static BorelBox everything() { return {}; }
  static BorelBox box(Vec lo, Vec hi);
  bool contains(const Vec& x) const;
};

/// x = origin + frame * y, mapping R^d isometrically into R^n.
struct AffineMap {
  Vec origin;
  Mat frame;

  static AffineMap identity(int n) { return {Vec::Zero(n), Mat::Identity(n, n)}; }
  Vec apply(const Vec& y) const { return origin + frame * y; }
};

class Polytope {
 public:
  /// Convex hull of the given points; non-extreme points are dropped.
  explicit Polytope(std::vector<RVec> points);
  static Polytope from_doubles(const std::vector<Vec>& points);

  int ambient_dim() const { return n_; }
  int dim() const { return dim_; }

  const std::vector<RVec>& vertices() const { return vertices_; }
  const std::vector<Vec>& vertices_d() const { return vertices_d_; }

  const std::vector<Halfspace>& facets() const { return facets_; }
  /// Affine hull equations (empty for full-dimensional polytopes).
  const std::vector<Halfspace>& equations() const { return equations_; }

  /// All nonempty faces, sorted by dimension; the last entry is P itself.
  const std::vector<Face>& faces() const { return faces_; }
  std::vector<const Face*> faces_of_dim(int k) const;
  const Face& whole() const { return faces_.back(); }

  bool contains(const Vec& x, double tol = 1e-9) const;

  /// Image under x -> q x + t (vertices rounded through double).
  Polytope transformed(const Mat& q, const Vec& t) const;
  Polytope negated() const;

  Vec center() const;
  double circumradius() const;

  /// Pulling triangulation of a face into simplices (vertex index lists).
  std::vector<std::vector<int>> triangulate_face(const Face& f) const;

 private:
  int n_ = 0;
  int dim_ = 0;
  std::vector<RVec> vertices_;
  std::vector<Vec> vertices_d_;
  std::vector<Halfspace> facets_;
  std::vector<Halfspace> equations_;
  std::vector<Face> faces_;
  Mat facet_a_;
  Vec facet_b_;
  Mat eq_a_;
  Vec eq_b_;
};

/// Complete face list of P (including P itself).
const std::vector<Face>& face_lattice(const Polytope& p);

/// Tangent cone T_F P, normalized, with lineality span(F - F).
PolyCone tangent_cone(const Polytope& p, const Face& f);

/// k-volume of F ∩ U.  Exact for U = everything (Gram determinants) and for
/// boxes (exact clipping in rational arithmetic).
double face_volume(const Polytope& p, const Face& f, const BorelBox& u = BorelBox::everything());

/// k-volume of F ∩ {x : h.normal . x <= h.offset for all h in clip}.
double face_volume_clipped(const Polytope& p, const Face& f, const std::vector<Halfspace>& clip);

/// Halfspaces describing map^{-1}(box) in the domain coordinates of `map`.
std::vector<Halfspace> pull_back_box(const BorelBox& box, const AffineMap& map);

double distance_to_polytope(const Polytope& p, const Vec& x);

struct AffineFlat {
  Vec point;
  Mat frame;       // n x d, orthonormal
  Mat complement;  // n x (n-d) orthonormal complement, optional (may be empty)

  int ambient_dim() const { return static_cast<int>(point.size()); }
  int dim() const { return static_cast<int>(frame.cols()); }
};

/// Vertices (in flat coordinates) of P ∩ flat, empty when they do not meet.
std::vector<Vec> slice_vertices(const Polytope& p, const AffineFlat& flat);

/// P ∩ flat as a polytope in R^d flat coordinates.
std::optional<Polytope> slice(const Polytope& p, const AffineFlat& flat);

/// Whether P ∩ flat is nonempty.
bool slice_hits(const Polytope& p, const AffineFlat& flat);

namespace shapes {
Polytope cube(int n, const Rational& side = 1);
Polytope simplex(int n);
Polytope segment(int n, const Rational& length = 1);
Polytope point(int n);
Polytope regular_polygon(int sides, double radius = 1.0);
Polytope random_polytope(int n, int count, std::uint64_t seed);
}  // namespace shapes

}  // namespace angularity
