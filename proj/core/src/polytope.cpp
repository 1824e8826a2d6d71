#include "angularity/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_set>

#include "exact_linalg.hpp"

namespace angularity {
namespace {

using exact::RMat;

constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Indices (into `pts`) of a maximal affinely independent subset, starting
// with pts[ids[0]].
std::vector<int> affine_basis_indices(const std::vector<RVec>& pts, const std::vector<int>& ids) {
  std::vector<int> chosen{ids.front()};
  RMat rows;
  const int n = static_cast<int>(pts.front().size());
  for (std::size_t i = 1; i < ids.size(); ++i) {
    RMat trial = rows;
    trial.push_back(exact::sub(pts[static_cast<std::size_t>(ids[i])], pts[static_cast<std::size_t>(ids[0])]));
    if (exact::rank(trial, n) > static_cast<int>(rows.size())) {
      rows = std::move(trial);
      chosen.push_back(ids[i]);
    }
  }
  return chosen;
}

Mat to_mat_rows(const std::vector<Halfspace>& hs, int n) {
  Mat a(static_cast<Eigen::Index>(hs.size()), n);
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (int j = 0; j < n; ++j) a(static_cast<Eigen::Index>(i), j) = to_double(hs[i].normal[static_cast<std::size_t>(j)]);
  return a;
}

Vec to_vec_offsets(const std::vector<Halfspace>& hs) {
  Vec b(static_cast<Eigen::Index>(hs.size()));
  for (std::size_t i = 0; i < hs.size(); ++i) b[static_cast<Eigen::Index>(i)] = to_double(hs[i].offset);
  return b;
}

}  // namespace

BorelBox BorelBox::box(Vec lo, Vec hi) {
  if (lo.size() != hi.size()) throw DimensionError("box corners differ in dimension");
  for (Eigen::Index i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) throw std::invalid_argument("box must satisfy lo <= hi");
  BorelBox b;
  b.all = false;
  b.lo = std::move(lo);
  b.hi = std::move(hi);
  return b;
}

bool BorelBox::contains(const Vec& x) const {
  if (all) return true;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (x[i] < lo[i] || x[i] > hi[i]) return false;
  return true;
}

Polytope::Polytope(std::vector<RVec> points) {
  if (points.empty()) throw std::invalid_argument("a polytope needs at least one point");
  n_ = static_cast<int>(points.front().size());
  std::vector<RVec> pts;
  for (auto& p : points) {
    if (static_cast<int>(p.size()) != n_) throw DimensionError("points differ in dimension");
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
  }
  if (pts.size() > 64) throw DimensionError("at most 64 points are supported");
  const int m = static_cast<int>(pts.size());

  // Affine hull.
  RMat diffs;
  for (int i = 1; i < m; ++i) diffs.push_back(exact::sub(pts[static_cast<std::size_t>(i)], pts[0]));
  const exact::Echelon ech = exact::rref(diffs, n_);
  dim_ = static_cast<int>(ech.pivots.size());
  for (auto& y : exact::nullspace(diffs, n_)) {
    Rational off = exact::dot(y, pts[0]);
    equations_.push_back({std::move(y), std::move(off)});
  }
  const auto& piv = ech.pivots;
  std::vector<RVec> proj;
  for (const auto& p : pts) {
    RVec q;
    for (int c : piv) q.push_back(p[static_cast<std::size_t>(c)]);
    proj.push_back(std::move(q));
  }

  struct RawFacet {
    RVec normal;  // in pivot coordinates
    Rational offset;
    std::uint64_t mask;
  };
  std::vector<RawFacet> raw;
  std::vector<bool> keep(static_cast<std::size_t>(m), dim_ == 0);
  if (dim_ == 0) {
    keep.assign(1, true);
  } else {
    for (const auto& s : sorted_subsets(m, dim_)) {
      std::uint64_t smask = 0;
      for (int i : s) smask |= bit(i);
      bool known = false;
      for (const auto& f : raw)
        if ((f.mask & smask) == smask) known = true;
      if (known) continue;
      RMat rows;
      for (std::size_t j = 1; j < s.size(); ++j)
        rows.push_back(exact::sub(proj[static_cast<std::size_t>(s[j])], proj[static_cast<std::size_t>(s[0])]));
      auto ns = exact::nullspace(rows, dim_);
      if (ns.size() != 1) continue;
      RVec a = std::move(ns.front());
      Rational b = exact::dot(a, proj[static_cast<std::size_t>(s[0])]);
      bool pos = false, neg = false;
      std::uint64_t mask = 0;
      for (int i = 0; i < m; ++i) {
        const Rational v = exact::dot(a, proj[static_cast<std::size_t>(i)]) - b;
        if (v > 0) pos = true;
        else if (v < 0) neg = true;
        else mask |= bit(i);
      }
      if (pos && neg) continue;
      if (pos) {
        for (auto& x : a) x = -x;
        b = -b;
      }
      raw.push_back({std::move(a), std::move(b), mask});
    }
    const std::uint64_t full = (m == 64) ? ~std::uint64_t{0} : (bit(m) - 1);
    for (int i = 0; i < m; ++i) {
      std::uint64_t inter = full;
      for (const auto& f : raw)
        if (f.mask & bit(i)) inter &= f.mask;
      keep[static_cast<std::size_t>(i)] = (inter == bit(i));
    }
  }

  // Re-index onto the extreme points.
  std::vector<int> new_index(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < m; ++i) {
    if (!keep[static_cast<std::size_t>(i)]) continue;
    new_index[static_cast<std::size_t>(i)] = static_cast<int>(vertices_.size());
    vertices_.push_back(pts[static_cast<std::size_t>(i)]);
  }
  auto remap = [&](std::uint64_t mask) {
    std::uint64_t out = 0;
    for (int i = 0; i < m; ++i)
      if ((mask & bit(i)) && new_index[static_cast<std::size_t>(i)] >= 0) out |= bit(new_index[static_cast<std::size_t>(i)]);
    return out;
  };
  for (const auto& v : vertices_) vertices_d_.push_back(to_vec(v));
  const int nv = static_cast<int>(vertices_.size());

  std::vector<std::uint64_t> facet_masks;
  for (const auto& f : raw) {
    RVec normal(static_cast<std::size_t>(n_), Rational(0));
    for (std::size_t j = 0; j < piv.size(); ++j) normal[static_cast<std::size_t>(piv[j])] = f.normal[j];
    facets_.push_back({std::move(normal), f.offset});
    facet_masks.push_back(remap(f.mask));
  }

  // Faces: closure of the facets under intersection, plus P.
  std::vector<std::uint64_t> masks = facet_masks;
  std::unordered_set<std::uint64_t> seen(masks.begin(), masks.end());
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (auto g : facet_masks) {
      const std::uint64_t h = masks[i] & g;
      if (h != 0 && seen.insert(h).second) masks.push_back(h);
    }
  const std::uint64_t all_mask = (nv == 64) ? ~std::uint64_t{0} : (bit(nv) - 1);
  if (seen.insert(all_mask).second) masks.push_back(all_mask);

  for (auto mask : masks) {
    Face f;
    f.mask = mask;
    for (int i = 0; i < nv; ++i)
      if (mask & bit(i)) f.vertices.push_back(i);
    if (mask == all_mask) {
      f.dim = dim_;
    } else {
      RMat rows;
      for (std::size_t j = 1; j < f.vertices.size(); ++j)
        rows.push_back(exact::sub(vertices_[static_cast<std::size_t>(f.vertices[j])],
                                  vertices_[static_cast<std::size_t>(f.vertices[0])]));
      f.dim = exact::rank(rows, n_);
    }
    f.barycenter = Vec::Zero(n_);
    for (int v : f.vertices) f.barycenter += vertices_d_[static_cast<std::size_t>(v)];
    f.barycenter /= static_cast<double>(f.vertices.size());
    if (f.dim > 0) {
      const auto basis_ids = affine_basis_indices(vertices_, f.vertices);
      Mat d(n_, f.dim);
      for (int j = 1; j <= f.dim; ++j)
        d.col(j - 1) = vertices_d_[static_cast<std::size_t>(basis_ids[static_cast<std::size_t>(j)])] -
                       vertices_d_[static_cast<std::size_t>(basis_ids[0])];
      Eigen::HouseholderQR<Mat> qr(d);
      f.affine_basis = qr.householderQ() * Mat::Identity(n_, f.dim);
    } else {
      f.affine_basis = Mat(n_, 0);
    }
    faces_.push_back(std::move(f));
  }
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
  });

  facet_a_ = to_mat_rows(facets_, n_);
  facet_b_ = to_vec_offsets(facets_);
  eq_a_ = to_mat_rows(equations_, n_);
  eq_b_ = to_vec_offsets(equations_);
}

Polytope Polytope::from_doubles(const std::vector<Vec>& points) {
  std::vector<RVec> pts;
  for (const auto& p : points) pts.push_back(to_rational(p));
  return Polytope(std::move(pts));
}

std::vector<const Face*> Polytope::faces_of_dim(int k) const {
  std::vector<const Face*> out;
  for (const auto& f : faces_)
    if (f.dim == k) out.push_back(&f);
  return out;
}

bool Polytope::contains(const Vec& x, double tol) const {
  if (x.size() != n_) throw DimensionError("point has the wrong dimension");
  if (facet_a_.rows() > 0 && ((facet_a_ * x - facet_b_).array() > tol).any()) return false;
  if (eq_a_.rows() > 0 && ((eq_a_ * x - eq_b_).array().abs() > tol).any()) return false;
  if (dim_ == 0) return (x - vertices_d_.front()).norm() <= tol;
  return true;
}

Polytope Polytope::transformed(const Mat& q, const Vec& t) const {
  std::vector<Vec> pts;
  for (const auto& v : vertices_d_) pts.push_back(q * v + t);
  return from_doubles(pts);
}

Polytope Polytope::negated() const {
  std::vector<RVec> pts;
  for (auto v : vertices_) {
    for (auto& x : v) x = -x;
    pts.push_back(std::move(v));
  }
  return Polytope(std::move(pts));
}

Vec Polytope::center() const { return whole().barycenter; }

double Polytope::circumradius() const {
  const Vec c = center();
  double r = 0.0;
  for (const auto& v : vertices_d_) r = std::max(r, (v - c).norm());
  return r;
}

std::vector<std::vector<int>> Polytope::triangulate_face(const Face& f) const {
  if (f.dim == 0) return {{f.vertices.front()}};
  const int v0 = f.vertices.front();
  std::vector<std::vector<int>> out;
  for (const auto& g : faces_) {
    if (g.dim != f.dim - 1 || (g.mask & ~f.mask) != 0 || (g.mask & bit(v0))) continue;
    for (auto cell : triangulate_face(g)) {
      cell.push_back(v0);
      out.push_back(std::move(cell));
    }
  }
  return out;
}

const std::vector<Face>& face_lattice(const Polytope& p) { return p.faces(); }

PolyCone tangent_cone(const Polytope& p, const Face& f) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < p.vertices_d().size(); ++i)
    if (!(f.mask & bit(static_cast<int>(i)))) gens.push_back(p.vertices_d()[i] - f.barycenter);
  std::vector<Vec> lin;
  for (Eigen::Index j = 0; j < f.affine_basis.cols(); ++j) lin.push_back(f.affine_basis.col(j));
  return PolyCone::with_lineality(p.ambient_dim(), std::move(gens), lin);
}

namespace {

// Exact k-volume of the simplices of a pulling triangulation.
double simplex_volume(const std::vector<RVec>& verts, const std::vector<int>& cell) {
  const int k = static_cast<int>(cell.size()) - 1;
  if (k == 0) return 1.0;
  std::vector<RVec> edges;
  for (int j = 1; j <= k; ++j)
    edges.push_back(exact::sub(verts[static_cast<std::size_t>(cell[static_cast<std::size_t>(j)])],
                               verts[static_cast<std::size_t>(cell[0])]));
  RMat gram(static_cast<std::size_t>(k), RVec(static_cast<std::size_t>(k)));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      gram[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          exact::dot(edges[static_cast<std::size_t>(a)], edges[static_cast<std::size_t>(b)]);
  const double g = to_double(exact::determinant(std::move(gram)));
  return std::sqrt(std::max(0.0, g)) / factorial(k);
}

double full_volume(const Polytope& p, const Face& f) {
  double vol = 0.0;
  for (const auto& cell : p.triangulate_face(f)) vol += simplex_volume(p.vertices(), cell);
  return vol;
}

}  // namespace

double face_volume(const Polytope& p, const Face& f, const BorelBox& u) {
  if (u.all) return full_volume(p, f);
  if (u.lo.size() != p.ambient_dim()) throw DimensionError("box has the wrong dimension");
  return face_volume_clipped(p, f, pull_back_box(u, AffineMap::identity(p.ambient_dim())));
}

std::vector<Halfspace> pull_back_box(const BorelBox& box, const AffineMap& map) {
  std::vector<Halfspace> out;
  if (box.all) return out;
  const Eigen::Index n = map.frame.rows();
  if (box.lo.size() != n) throw DimensionError("box has the wrong dimension");
  for (Eigen::Index i = 0; i < n; ++i) {
    RVec row = to_rational(Vec(map.frame.row(i).transpose()));
    RVec neg = row;
    for (auto& x : neg) x = -x;
    out.push_back({row, to_rational(box.hi[i]) - to_rational(map.origin[i])});
    out.push_back({neg, to_rational(map.origin[i]) - to_rational(box.lo[i])});
  }
  return out;
}

double face_volume_clipped(const Polytope& p, const Face& f, const std::vector<Halfspace>& clip) {
  const auto& verts = p.vertices();
  auto inside = [&](const RVec& x, const Halfspace& h) { return exact::dot(h.normal, x) <= h.offset; };
  bool all_in = true;
  for (const auto& h : clip) {
    bool any_in = false, every_in = true;
    for (int v : f.vertices) {
      if (inside(verts[static_cast<std::size_t>(v)], h)) any_in = true;
      else every_in = false;
    }
    if (!any_in) return 0.0;
    all_in = all_in && every_in;
  }
  if (all_in) return full_volume(p, f);
  if (f.dim == 0) return 0.0;

  // Parametrize aff(F) as v0 + W t.
  const int k = f.dim;
  const auto ids = affine_basis_indices(verts, f.vertices);
  const RVec& v0 = verts[static_cast<std::size_t>(ids[0])];
  std::vector<RVec> w;
  for (int j = 1; j <= k; ++j) w.push_back(exact::sub(verts[static_cast<std::size_t>(ids[static_cast<std::size_t>(j)])], v0));

  std::vector<RVec> g;
  std::vector<Rational> h;
  auto add = [&](const Halfspace& hs) {
    RVec row(static_cast<std::size_t>(k));
    bool zero = true;
    for (int j = 0; j < k; ++j) {
      row[static_cast<std::size_t>(j)] = exact::dot(hs.normal, w[static_cast<std::size_t>(j)]);
      if (row[static_cast<std::size_t>(j)] != 0) zero = false;
    }
    Rational rhs = hs.offset - exact::dot(hs.normal, v0);
    if (zero) return rhs >= 0;
    g.push_back(std::move(row));
    h.push_back(std::move(rhs));
    return true;
  };
  for (const auto& hs : p.facets())
    if (!add(hs)) return 0.0;
  for (const auto& hs : clip)
    if (!add(hs)) return 0.0;

  std::vector<RVec> pts;
  const int rows = static_cast<int>(g.size());
  for (const auto& s : sorted_subsets(rows, k)) {
    RMat a;
    RVec b;
    for (int i : s) {
      a.push_back(g[static_cast<std::size_t>(i)]);
      b.push_back(h[static_cast<std::size_t>(i)]);
    }
    auto t = exact::solve(std::move(a), std::move(b));
    if (!t) continue;
    bool feasible = true;
    for (int i = 0; i < rows && feasible; ++i)
      if (exact::dot(g[static_cast<std::size_t>(i)], *t) > h[static_cast<std::size_t>(i)]) feasible = false;
    if (feasible && std::find(pts.begin(), pts.end(), *t) == pts.end()) pts.push_back(std::move(*t));
  }
  if (static_cast<int>(pts.size()) < k + 1) return 0.0;
  const Polytope clipped(std::move(pts));
  if (clipped.dim() < k) return 0.0;
  Rational vol_t = 0;
  for (const auto& cell : clipped.triangulate_face(clipped.whole())) {
    RMat e;
    for (int j = 1; j <= k; ++j)
      e.push_back(exact::sub(clipped.vertices()[static_cast<std::size_t>(cell[static_cast<std::size_t>(j)])],
                             clipped.vertices()[static_cast<std::size_t>(cell[0])]));
    vol_t += abs(exact::determinant(std::move(e)));
  }
  RMat gram(static_cast<std::size_t>(k), RVec(static_cast<std::size_t>(k)));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      gram[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          exact::dot(w[static_cast<std::size_t>(a)], w[static_cast<std::size_t>(b)]);
  return to_double(vol_t) / factorial(k) * std::sqrt(to_double(exact::determinant(std::move(gram))));
}

double distance_to_polytope(const Polytope& p, const Vec& x) {
  if (p.contains(x, 1e-12)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& f : p.faces()) {
    Vec proj;
    if (f.dim == 0) {
      proj = p.vertices_d()[static_cast<std::size_t>(f.vertices.front())];
    } else {
      proj = f.barycenter + f.affine_basis * (f.affine_basis.transpose() * (x - f.barycenter));
      if (!p.contains(proj, 1e-9)) continue;
    }
    best = std::min(best, (x - proj).norm());
  }
  return best;
}

namespace {

std::vector<Vec> enumerate_slice(const Polytope& p, const AffineFlat& flat, bool first_only) {
  const int n = p.ambient_dim();
  const int d = flat.dim();
  if (flat.ambient_dim() != n || flat.frame.rows() != n) throw DimensionError("flat has the wrong ambient dimension");
  constexpr double tol = 1e-9;
  if (d == 0) {
    if (p.contains(flat.point, tol)) return {Vec(0)};
    return {};
  }
  Mat fa(static_cast<Eigen::Index>(p.facets().size()), n);
  Vec fb(fa.rows());
  for (std::size_t i = 0; i < p.facets().size(); ++i) {
    for (int j = 0; j < n; ++j) fa(static_cast<Eigen::Index>(i), j) = to_double(p.facets()[i].normal[static_cast<std::size_t>(j)]);
    fb[static_cast<Eigen::Index>(i)] = to_double(p.facets()[i].offset);
  }
  const Mat g = fa * flat.frame;
  const Vec h = fb - fa * flat.point;

  Vec y0 = Vec::Zero(d);
  Mat z = Mat::Identity(d, d);
  if (!p.equations().empty()) {
    Mat ea(static_cast<Eigen::Index>(p.equations().size()), n);
    Vec eb(ea.rows());
    for (std::size_t i = 0; i < p.equations().size(); ++i) {
      for (int j = 0; j < n; ++j) ea(static_cast<Eigen::Index>(i), j) = to_double(p.equations()[i].normal[static_cast<std::size_t>(j)]);
      eb[static_cast<Eigen::Index>(i)] = to_double(p.equations()[i].offset);
    }
    const Mat e = ea * flat.frame;
    const Vec rhs = eb - ea * flat.point;
    Eigen::JacobiSVD<Mat> svd(e, Eigen::ComputeFullU | Eigen::ComputeFullV);
    svd.setThreshold(1e-10);
    const int r = static_cast<int>(svd.rank());
    y0 = svd.solve(rhs);
    if ((e * y0 - rhs).cwiseAbs().maxCoeff() > tol) return {};
    z = svd.matrixV().rightCols(d - r);
  }
  const Mat g2 = g * z;
  const Vec h2 = h - g * y0;
  const int dz = static_cast<int>(z.cols());
  auto feasible = [&](const Vec& t) { return g2.rows() == 0 || ((g2 * t - h2).array() <= tol).all(); };
  if (dz == 0) {
    if (feasible(Vec::Zero(0))) return {y0};
    return {};
  }
  std::vector<Vec> out;
  const int rows = static_cast<int>(g2.rows());
  for (const auto& s : sorted_subsets(rows, dz)) {
    Mat a(dz, dz);
    Vec b(dz);
    for (int i = 0; i < dz; ++i) {
      a.row(i) = g2.row(s[static_cast<std::size_t>(i)]);
      b[i] = h2[s[static_cast<std::size_t>(i)]];
    }
    Eigen::FullPivLU<Mat> lu(a);
    lu.setThreshold(1e-12);
    if (!lu.isInvertible()) continue;
    const Vec t = lu.solve(b);
    if (!feasible(t)) continue;
    const Vec y = y0 + z * t;
    bool dup = false;
    for (const auto& q : out)
      if ((q - y).norm() < tol) dup = true;
    if (!dup) out.push_back(y);
    if (first_only) break;
  }
  return out;
}

}  // namespace

std::vector<Vec> slice_vertices(const Polytope& p, const AffineFlat& flat) { return enumerate_slice(p, flat, false); }

std::optional<Polytope> slice(const Polytope& p, const AffineFlat& flat) {
  auto verts = slice_vertices(p, flat);
  if (verts.empty()) return std::nullopt;
  return Polytope::from_doubles(verts);
}

bool slice_hits(const Polytope& p, const AffineFlat& flat) {
  const int n = p.ambient_dim();
  const int d = flat.dim();
  constexpr double tol = 1e-9;
  if (d == n) return true;
  if (flat.complement.cols() == 1 && flat.complement.rows() == n) {
    const Vec u = flat.complement.col(0);
    const double c = u.dot(flat.point);
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto& v : p.vertices_d()) {
      const double s = u.dot(v) - c;
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    return lo <= tol && hi >= -tol;
  }
  if (d == 1 && p.equations().empty()) {
    const Vec dir = flat.frame.col(0);
    double lo = -std::numeric_limits<double>::infinity(), hi = std::numeric_limits<double>::infinity();
    for (const auto& f : p.facets()) {
      double a = 0.0, b = to_double(f.offset);
      for (int j = 0; j < n; ++j) {
        const double c = to_double(f.normal[static_cast<std::size_t>(j)]);
        a += c * dir[j];
        b -= c * flat.point[j];
      }
      if (std::abs(a) < 1e-14) {
        if (b < -tol) return false;
      } else if (a > 0) {
        hi = std::min(hi, b / a);
      } else {
        lo = std::max(lo, b / a);
      }
    }
    return lo <= hi + tol;
  }
  return !enumerate_slice(p, flat, true).empty();
}

namespace shapes {

Polytope cube(int n, const Rational& side) {
  if (n > 6) throw DimensionError("cube supports n <= 6");
  std::vector<RVec> pts;
  for (int m = 0; m < (1 << n); ++m) {
    RVec v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = (m & (1 << i)) ? side : Rational(0);
    pts.push_back(std::move(v));
  }
  return Polytope(std::move(pts));
}

Polytope simplex(int n) {
  std::vector<RVec> pts;
  pts.emplace_back(static_cast<std::size_t>(n), Rational(0));
  for (int i = 0; i < n; ++i) {
    RVec v(static_cast<std::size_t>(n), Rational(0));
    v[static_cast<std::size_t>(i)] = 1;
    pts.push_back(std::move(v));
  }
  return Polytope(std::move(pts));
}

Polytope segment(int n, const Rational& length) {
  RVec a(static_cast<std::size_t>(n), Rational(0));
  RVec b = a;
  b[0] = length;
  return Polytope({a, b});
}

Polytope point(int n) { return Polytope({RVec(static_cast<std::size_t>(n), Rational(0))}); }

Polytope regular_polygon(int sides, double radius) {
  std::vector<Vec> pts;
  for (int i = 0; i < sides; ++i) {
    const double a = 2.0 * std::numbers::pi * i / sides;
    Vec v(2);
    v << radius * std::cos(a), radius * std::sin(a);
    pts.push_back(v);
  }
  return Polytope::from_doubles(pts);
}

Polytope random_polytope(int n, int count, std::uint64_t seed) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng = make_rng(seed, 0x706f6c79, attempt);
    std::uniform_int_distribution<int> coord(-32, 32);
    std::vector<RVec> pts;
    for (int i = 0; i < count; ++i) {
      RVec v(static_cast<std::size_t>(n));
      for (auto& x : v) x = Rational(coord(rng), 64);
      pts.push_back(std::move(v));
    }
    Polytope p(std::move(pts));
    if (p.dim() == n) return p;
  }
}

}  // namespace shapes

}  // namespace angularity
