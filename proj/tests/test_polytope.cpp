#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "angularity/polytope.hpp"

using namespace angularity;
using namespace angularity::shapes;

namespace {

std::vector<int> f_vector(const Polytope& p) {
  std::vector<int> f(static_cast<std::size_t>(p.dim() + 1), 0);
  for (const auto& face : p.faces()) ++f[static_cast<std::size_t>(face.dim)];
  return f;
}

int euler_characteristic(const Polytope& p) {
  int chi = 0;
  for (const auto& face : p.faces()) chi += (face.dim % 2 == 0) ? 1 : -1;
  return chi;
}

}  // namespace

TEST(FaceLattice, CubeCountsMatchBinomialFormula) {
  for (int n = 1; n <= 4; ++n) {
    const auto f = f_vector(cube(n));
    for (int k = 0; k <= n; ++k)
      EXPECT_EQ(f[static_cast<std::size_t>(k)], static_cast<int>(binomial(n, k)) << (n - k)) << "n=" << n << " k=" << k;
  }
}

TEST(FaceLattice, SimplexFacesAreVertexSubsets) {
  for (int n = 1; n <= 4; ++n) {
    const auto f = f_vector(simplex(n));
    for (int k = 0; k <= n; ++k) EXPECT_EQ(f[static_cast<std::size_t>(k)], static_cast<int>(binomial(n + 1, k + 1)));
  }
}

TEST(FaceLattice, EulerRelationOnRandomPolytopes) {
  for (int n = 2; n <= 4; ++n)
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const Polytope p = random_polytope(n, n + 4, seed);
      ASSERT_EQ(p.dim(), n);
      EXPECT_EQ(euler_characteristic(p), 1) << "n=" << n << " seed=" << seed;
    }
}

TEST(Hull, DropsInteriorPoints) {
  std::vector<RVec> pts = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {Rational(1, 2), Rational(1, 3)}, {Rational(1, 2), 0}};
  const Polytope p(pts);
  EXPECT_EQ(p.vertices().size(), 4u);
  EXPECT_EQ(p.facets().size(), 4u);
}

TEST(Hull, LowerDimensionalPolytope) {
  std::vector<RVec> pts = {{0, 0, 1}, {1, 0, 1}, {0, 1, 1}};
  const Polytope p(pts);
  EXPECT_EQ(p.ambient_dim(), 3);
  EXPECT_EQ(p.dim(), 2);
  EXPECT_EQ(p.equations().size(), 1u);
  EXPECT_NEAR(face_volume(p, p.whole()), 0.5, 1e-15);
}

TEST(Volume, CubeFacesHaveUnitVolume) {
  const Polytope c = cube(3);
  for (const auto& f : c.faces()) EXPECT_NEAR(face_volume(c, f), 1.0, 1e-14);
}

TEST(Volume, SimplexVolumeIsInverseFactorial) {
  double fact = 1;
  for (int n = 1; n <= 5; ++n) {
    fact *= n;
    const Polytope s = simplex(n);
    EXPECT_NEAR(face_volume(s, s.whole()), 1.0 / fact, 1e-15);
  }
}

TEST(Volume, RegularPolygonArea) {
  const Polytope p = regular_polygon(7);
  EXPECT_NEAR(face_volume(p, p.whole()), 3.5 * std::sin(2 * std::numbers::pi / 7), 1e-12);
}

TEST(Volume, BoxClippingIsAdditive) {
  const Polytope p = random_polytope(3, 8, 17);
  const Vec lo = Vec::Constant(3, -2.0), hi = Vec::Constant(3, 2.0);
  Vec mid = hi;
  mid[0] = 0.037;
  Vec mid_lo = lo;
  mid_lo[0] = 0.037;
  for (const auto& f : p.faces()) {
    const double whole = face_volume(p, f, BorelBox::box(lo, hi));
    const double left = face_volume(p, f, BorelBox::box(lo, mid));
    const double right = face_volume(p, f, BorelBox::box(mid_lo, hi));
    EXPECT_NEAR(left + right, whole, 1e-12);
    EXPECT_NEAR(whole, face_volume(p, f), 1e-12);
  }
}

TEST(Volume, ClippedTriangle) {
  const Polytope s = simplex(2);
  const auto box = BorelBox::box(Vec::Zero(2), Vec::Constant(2, 0.5));
  EXPECT_NEAR(face_volume(s, s.whole(), box), 0.25, 1e-15);
}

TEST(Geometry, ContainsAndDistance) {
  const Polytope c = cube(2);
  EXPECT_TRUE(c.contains((Vec(2) << 0.5, 0.5).finished()));
  EXPECT_FALSE(c.contains((Vec(2) << 1.5, 0.5).finished()));
  EXPECT_NEAR(distance_to_polytope(c, (Vec(2) << 2, 2).finished()), std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(distance_to_polytope(c, (Vec(2) << 0.5, -3).finished()), 3.0, 1e-9);
}

TEST(Geometry, RigidMotionPreservesFaceVolumes) {
  const Polytope p = random_polytope(3, 7, 5);
  Rng rng = make_rng(5, 0, 0);
  Eigen::HouseholderQR<Mat> qr{gaussian_matrix(3, 3, rng)};
  const Polytope q = p.transformed(qr.householderQ(), (Vec(3) << 0.3, -1, 2).finished());
  ASSERT_EQ(f_vector(p), f_vector(q));
  for (int k = 0; k <= 3; ++k) {
    double a = 0, b = 0;
    for (const auto* f : p.faces_of_dim(k)) a += face_volume(p, *f);
    for (const auto* f : q.faces_of_dim(k)) b += face_volume(q, *f);
    EXPECT_NEAR(a, b, 1e-9 * (1 + a));
  }
}

TEST(TangentCone, SquareVertexIsQuadrant) {
  const Polytope c = cube(2);
  const auto verts = c.faces_of_dim(0);
  const PolyCone t = tangent_cone(c, *verts.front());
  EXPECT_TRUE(t.normalize().lineality().empty());
  const auto angle = external_angle(t);
  EXPECT_TRUE(angle.exact);
  EXPECT_NEAR(angle.value, 0.25, 1e-12);
}

TEST(Triangulation, CoversTheFace) {
  const Polytope p = random_polytope(3, 9, 23);
  double total = 0;
  for (const auto& simplex_ids : p.triangulate_face(p.whole())) {
    std::vector<RVec> pts;
    for (int i : simplex_ids) pts.push_back(p.vertices()[static_cast<std::size_t>(i)]);
    const Polytope s(pts);
    total += face_volume(s, s.whole());
  }
  EXPECT_NEAR(total, face_volume(p, p.whole()), 1e-12);
}

TEST(Slice, CubeByDiagonalPlane) {
  const Polytope c = cube(3);
  AffineFlat flat;
  flat.point = Vec::Constant(3, 0.5);
  flat.frame = Mat(3, 2);
  flat.frame << 1 / std::sqrt(2.0), 1 / std::sqrt(6.0), -1 / std::sqrt(2.0), 1 / std::sqrt(6.0), 0, -2 / std::sqrt(6.0);
  ASSERT_TRUE(slice_hits(c, flat));
  const auto s = slice(c, flat);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->vertices().size(), 6u);  // regular hexagon
  flat.point = Vec::Constant(3, 2.0);
  EXPECT_FALSE(slice_hits(c, flat));
}

TEST(Shapes, RejectsBadInput) {
  EXPECT_THROW(Polytope(std::vector<RVec>{}), std::invalid_argument);
  EXPECT_THROW(Polytope(std::vector<RVec>{{0, 0}, {1}}), std::invalid_argument);
}
