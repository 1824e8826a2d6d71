#include "angularity/cones.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace angularity {
namespace {

constexpr double kLinealitySlack = 1e-10;
constexpr double kZeroTol = 1e-10;

// Orthonormal basis of span(vectors), rank decided relative to the largest
// singular value.
std::vector<Vec> orthonormal_span(int n, const std::vector<Vec>& vectors, double tol = 1e-10) {
  std::vector<Vec> out;
  if (vectors.empty()) return out;
  Mat m(n, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = vectors[i];
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullU);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s[0] <= 0.0) return out;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s[i] > tol * std::max(1.0, s[0])) out.push_back(svd.matrixU().col(i));
  return out;
}

Vec project_out(const Vec& v, const std::vector<Vec>& basis) {
  Vec r = v;
  for (const auto& b : basis) r -= b.dot(r) * b;
  return r;
}

// Coordinates of the generators in an orthonormal basis of their span.
struct Reduced {
  Mat basis;                 // n x r
  std::vector<Vec> coords;   // r-vectors
};

Reduced reduce_to_span(int n, const std::vector<Vec>& generators) {
  Reduced red;
  const auto span = orthonormal_span(n, generators);
  red.basis = Mat(n, static_cast<Eigen::Index>(span.size()));
  for (std::size_t i = 0; i < span.size(); ++i) red.basis.col(static_cast<Eigen::Index>(i)) = span[i];
  for (const auto& g : generators) red.coords.push_back(red.basis.transpose() * g);
  return red;
}

// Direction c with <y_i, c> > 0 for all generators of a pointed cone: the
// normalized minimum-norm point of the convex hull of the unit generators.
Vec interior_direction(const std::vector<Vec>& ys) {
  const int r = static_cast<int>(ys.front().size());
  const int m = static_cast<int>(ys.size());
  constexpr double kWeight = 1e3;
  Mat a(r + 1, m);
  Vec b = Vec::Zero(r + 1);
  for (int i = 0; i < m; ++i) {
    a.col(i).head(r) = ys[static_cast<std::size_t>(i)].normalized();
    a(r, i) = kWeight;
  }
  b[r] = kWeight;
  const Vec lambda = nnls(a, b);
  Vec c = a.topRows(r) * lambda;
  auto margin = [&](const Vec& dir) {
    double mn = std::numeric_limits<double>::infinity();
    for (const auto& y : ys) mn = std::min(mn, y.normalized().dot(dir));
    return mn;
  };
  if (c.norm() > 1e-14) c.normalize();
  if (c.norm() < 0.5 || margin(c) <= 1e-12) {
    // Perceptron fallback.
    c = Vec::Zero(r);
    for (const auto& y : ys) c += y.normalized();
    for (int it = 0; it < 100000; ++it) {
      if (c.norm() > 0) c.normalize();
      bool ok = true;
      for (const auto& y : ys) {
        const Vec u = y.normalized();
        if (u.dot(c) <= 1e-9) {
          c += u;
          ok = false;
          break;
        }
      }
      if (ok) break;
    }
    c.normalize();
  }
  return c;
}

// Orthonormal basis (columns) of the orthogonal complement of a unit vector.
Mat complement_basis(const Vec& c) {
  const int r = static_cast<int>(c.size());
  Eigen::HouseholderQR<Mat> qr{Mat(c)};
  Mat q = qr.householderQ() * Mat::Identity(r, r);
  return q.rightCols(r - 1);
}

using Cell = std::vector<int>;

// Pulling triangulation of a full-dimensional point configuration in R^m.
// `pts` holds the coordinates of the points named by `ids`.
std::vector<Cell> pull_triangulate(const std::vector<Vec>& pts, const std::vector<int>& ids, int m) {
  if (static_cast<int>(ids.size()) == m + 1 || m == 0) return {Cell(ids.begin(), ids.begin() + m + 1)};
  double scale = 0.0;
  for (const auto& p : pts) scale = std::max(scale, p.cwiseAbs().maxCoeff());
  const double tol = 1e-9 * std::max(1.0, scale);
  const int npts = static_cast<int>(pts.size());

  std::vector<std::uint64_t> seen;
  std::vector<Cell> out;
  for (const auto& sub : sorted_subsets(npts, m)) {
    Vec normal;
    if (m == 1) {
      normal = Vec::Ones(1);
    } else {
      Mat d(m - 1, m);
      for (int i = 1; i < m; ++i)
        d.row(i - 1) = (pts[static_cast<std::size_t>(sub[static_cast<std::size_t>(i)])] -
                        pts[static_cast<std::size_t>(sub[0])]).transpose();
      Eigen::JacobiSVD<Mat> svd(d, Eigen::ComputeFullV);
      const auto& s = svd.singularValues();
      if (s.size() < m - 1 || s[m - 2] < 1e-9 * std::max(1.0, s[0])) continue;
      normal = svd.matrixV().col(m - 1);
    }
    const double off = normal.dot(pts[static_cast<std::size_t>(sub[0])]);
    int above = 0, below = 0;
    std::uint64_t mask = 0;
    for (int j = 0; j < npts; ++j) {
      const double v = normal.dot(pts[static_cast<std::size_t>(j)]) - off;
      if (v > tol) ++above;
      else if (v < -tol) ++below;
      else mask |= (std::uint64_t{1} << j);
    }
    if (above > 0 && below > 0) continue;
    if (std::find(seen.begin(), seen.end(), mask) != seen.end()) continue;
    seen.push_back(mask);
    if (mask & 1u) continue;  // facet contains the pulled point (local index 0)

    // Facet coordinates in R^{m-1}.
    const Vec origin = pts[static_cast<std::size_t>(sub[0])];
    Mat basis = complement_basis(normal.normalized());
    std::vector<Vec> fpts;
    std::vector<int> fids;
    for (int j = 0; j < npts; ++j) {
      if (!(mask & (std::uint64_t{1} << j))) continue;
      fpts.push_back(basis.transpose() * (pts[static_cast<std::size_t>(j)] - origin));
      fids.push_back(ids[static_cast<std::size_t>(j)]);
    }
    for (auto cell : pull_triangulate(fpts, fids, m - 1)) {
      cell.push_back(ids[0]);
      std::sort(cell.begin(), cell.end());
      out.push_back(std::move(cell));
    }
  }
  return out;
}

struct Triangulation {
  PolyCone cone;                 // normalized
  std::vector<Cell> pieces;      // indices into cone.generators()
};

Triangulation triangulate_indices(const PolyCone& input) {
  Triangulation t{input.normalize(), {}};
  const auto& gens = t.cone.generators();
  const int m = static_cast<int>(gens.size());
  if (m == 0) {
    t.pieces.push_back({});
    return t;
  }
  if (m > 64) throw DimensionError("triangulate supports at most 64 generators");
  const Reduced red = reduce_to_span(t.cone.dim(), gens);
  const int r = static_cast<int>(red.basis.cols());
  std::vector<int> all(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) all[static_cast<std::size_t>(i)] = i;
  if (m == r) {
    t.pieces.push_back(all);
    return t;
  }
  const Vec c = interior_direction(red.coords);
  const Mat w = complement_basis(c);
  std::vector<Vec> section;
  for (const auto& y : red.coords) section.push_back(w.transpose() * (y / y.dot(c)));
  t.pieces = pull_triangulate(section, all, r - 1);
  return t;
}

double angle_2d(const std::vector<Vec>& ys) {
  Vec c = Vec::Zero(2);
  for (const auto& y : ys) c += y.normalized();
  c.normalize();
  double lo = 0.0, hi = 0.0;
  for (const auto& y : ys) {
    const double a = std::atan2(c[0] * y[1] - c[1] * y[0], c.dot(y));
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }
  const double width = hi - lo;
  return (std::numbers::pi - width) / (2.0 * std::numbers::pi);
}

// Solid angle of the polar of a full-dimensional pointed cone in R^3,
// as a fraction of the sphere.
double angle_3d(const std::vector<Vec>& ys) {
  std::vector<Vec> units;
  for (const auto& y : ys) units.push_back(y.normalized());
  const int m = static_cast<int>(units.size());
  std::vector<Eigen::Vector3d> normals;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const Eigen::Vector3d a = units[static_cast<std::size_t>(i)];
      const Eigen::Vector3d b = units[static_cast<std::size_t>(j)];
      Eigen::Vector3d nrm = a.cross(b);
      if (nrm.norm() < 1e-12) continue;
      nrm.normalize();
      bool le = true, ge = true;
      for (const auto& u : units) {
        const double v = nrm.dot(Eigen::Vector3d(u));
        if (v > 1e-12) le = false;
        if (v < -1e-12) ge = false;
      }
      if (!le && !ge) continue;
      if (!le) nrm = -nrm;
      bool dup = false;
      for (const auto& q : normals)
        if (q.dot(nrm) > 1.0 - 1e-12) dup = true;
      if (!dup) normals.push_back(nrm);
    }
  }
  if (normals.size() < 3) return 0.0;
  Eigen::Vector3d c = Eigen::Vector3d::Zero();
  for (const auto& q : normals) c += q;
  c.normalize();
  Eigen::Vector3d e1 = c.unitOrthogonal();
  Eigen::Vector3d e2 = c.cross(e1);
  std::sort(normals.begin(), normals.end(), [&](const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
    return std::atan2(a.dot(e2), a.dot(e1)) < std::atan2(b.dot(e2), b.dot(e1));
  });
  double omega = 0.0;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    const Eigen::Vector3d& a = normals[i];
    const Eigen::Vector3d& b = normals[(i + 1) % normals.size()];
    const double num = std::abs(c.dot(a.cross(b)));
    const double den = 1.0 + c.dot(a) + a.dot(b) + b.dot(c);
    omega += 2.0 * std::atan2(num, den);
  }
  return omega / (4.0 * std::numbers::pi);
}

}  // namespace

Vec nnls(const Mat& a, const Vec& b) {
  const Eigen::Index n = a.cols();
  Vec x = Vec::Zero(n);
  std::vector<bool> passive(static_cast<std::size_t>(n), false);
  const double tol = 1e-12 * std::max(1.0, a.cwiseAbs().maxCoeff()) * static_cast<double>(std::max<Eigen::Index>(n, 1));
  for (int outer = 0; outer < 3 * n + 10; ++outer) {
    Vec w = a.transpose() * (b - a * x);
    Eigen::Index best = -1;
    double best_w = tol;
    for (Eigen::Index j = 0; j < n; ++j)
      if (!passive[static_cast<std::size_t>(j)] && w[j] > best_w) {
        best_w = w[j];
        best = j;
      }
    if (best < 0) break;
    passive[static_cast<std::size_t>(best)] = true;
    for (int inner = 0; inner < 3 * n + 10; ++inner) {
      std::vector<Eigen::Index> p;
      for (Eigen::Index j = 0; j < n; ++j)
        if (passive[static_cast<std::size_t>(j)]) p.push_back(j);
      Mat ap(a.rows(), static_cast<Eigen::Index>(p.size()));
      for (std::size_t i = 0; i < p.size(); ++i) ap.col(static_cast<Eigen::Index>(i)) = a.col(p[i]);
      const Vec zp = ap.completeOrthogonalDecomposition().solve(b);
      Vec z = Vec::Zero(n);
      for (std::size_t i = 0; i < p.size(); ++i) z[p[i]] = zp[static_cast<Eigen::Index>(i)];
      bool feasible = true;
      for (auto j : p)
        if (z[j] <= 0) feasible = false;
      if (feasible) {
        x = z;
        break;
      }
      double alpha = 1.0;
      for (auto j : p)
        if (z[j] <= 0) alpha = std::min(alpha, x[j] / (x[j] - z[j]));
      x += alpha * (z - x);
      for (auto j : p)
        if (x[j] <= 1e-15) {
          x[j] = 0.0;
          passive[static_cast<std::size_t>(j)] = false;
        }
    }
  }
  return x;
}

PolyCone::PolyCone(int n, std::vector<Vec> generators, std::vector<Vec> lineality)
    : n_(n), generators_(std::move(generators)), lineality_(std::move(lineality)) {
  for (const auto& g : generators_)
    if (g.size() != n) throw DimensionError("generator has the wrong dimension");
  for (const auto& l : lineality_)
    if (l.size() != n) throw DimensionError("lineality vector has the wrong dimension");
}

namespace {

std::vector<Vec> clean_generators(const std::vector<Vec>& gens, const std::vector<Vec>& lin) {
  std::vector<Vec> out;
  double scale = 0.0;
  for (const auto& g : gens) scale = std::max(scale, g.norm());
  for (const auto& g : gens) {
    Vec p = project_out(g, lin);
    if (p.norm() <= kZeroTol * std::max(1.0, scale)) continue;
    p.normalize();
    bool dup = false;
    for (const auto& q : out)
      if (q.dot(p) > 1.0 - 1e-13) dup = true;
    if (!dup) out.push_back(p);
  }
  return out;
}

}  // namespace

PolyCone PolyCone::with_lineality(int n, std::vector<Vec> generators, const std::vector<Vec>& lineality) {
  PolyCone c(n, {}, {});
  c.lineality_ = orthonormal_span(n, lineality);
  c.generators_ = clean_generators(generators, c.lineality_);
  for (const auto& g : c.generators_)
    if (g.size() != n) throw DimensionError("generator has the wrong dimension");
  c.normalized_ = true;
  return c;
}

std::vector<Vec> lineality_space(const PolyCone& cone) {
  const int n = cone.dim();
  std::vector<Vec> gens;
  for (const auto& g : cone.generators())
    if (g.norm() > 0) gens.push_back(g.normalized());
  std::vector<Vec> span = cone.lineality();
  const auto lin = orthonormal_span(n, cone.lineality());
  const int m = static_cast<int>(gens.size());
  const int l = static_cast<int>(lin.size());
  if (m > 0) {
    Mat a(n, m + 2 * l);
    for (int i = 0; i < m; ++i) a.col(i) = gens[static_cast<std::size_t>(i)];
    for (int i = 0; i < l; ++i) {
      a.col(m + 2 * i) = lin[static_cast<std::size_t>(i)];
      a.col(m + 2 * i + 1) = -lin[static_cast<std::size_t>(i)];
    }
    for (const auto& g : gens) {
      const Vec x = nnls(a, -g);
      if ((a * x + g).norm() <= kLinealitySlack) span.push_back(g);
    }
  }
  return orthonormal_span(n, span);
}

PolyCone PolyCone::normalize() const {
  if (normalized_) return *this;
  return with_lineality(n_, generators_, lineality_space(*this));
}

PolyCone PolyCone::embed(int m) const {
  if (m < n_) throw DimensionError("cannot embed into a smaller space");
  auto pad = [&](const Vec& v) {
    Vec w = Vec::Zero(m);
    w.head(n_) = v;
    return w;
  };
  PolyCone c(m, {}, {});
  for (const auto& g : generators_) c.generators_.push_back(pad(g));
  for (const auto& l : lineality_) c.lineality_.push_back(pad(l));
  c.normalized_ = normalized_;
  return c;
}

PolyCone PolyCone::transformed(const Mat& q) const {
  PolyCone c(static_cast<int>(q.rows()), {}, {});
  for (const auto& g : generators_) c.generators_.push_back(q * g);
  for (const auto& l : lineality_) c.lineality_.push_back(q * l);
  c.normalized_ = false;
  return c;
}

bool polar_contains(const PolyCone& cone, const Vec& xi) {
  if (xi.size() != cone.dim()) throw DimensionError("covector has the wrong dimension");
  double gmax = 0.0;
  for (const auto& g : cone.generators()) gmax = std::max(gmax, g.norm());
  for (const auto& l : cone.lineality()) gmax = std::max(gmax, l.norm());
  const double tol = 1e-12 * xi.norm() * gmax;
  for (const auto& g : cone.generators())
    if (xi.dot(g) > tol) return false;
  for (const auto& l : cone.lineality())
    if (std::abs(xi.dot(l)) > tol) return false;
  return true;
}

std::vector<PolyCone> triangulate(const PolyCone& cone) {
  const auto t = triangulate_indices(cone);
  std::vector<PolyCone> out;
  for (const auto& piece : t.pieces) {
    std::vector<Vec> g;
    for (int i : piece) g.push_back(t.cone.generators()[static_cast<std::size_t>(i)]);
    out.push_back(PolyCone::with_lineality(cone.dim(), std::move(g), t.cone.lineality()));
  }
  return out;
}

AngleResult external_angle(const PolyCone& input, const AngleOptions& opts) {
  const PolyCone cone = input.normalize();
  const auto& gens = cone.generators();
  if (gens.empty()) return {1.0, 0.0, true};
  const Reduced red = reduce_to_span(cone.dim(), gens);
  const int r = static_cast<int>(red.basis.cols());
  switch (r) {
    case 1: return {0.5, 0.0, true};
    case 2: return {angle_2d(red.coords), 0.0, true};
    case 3: return {angle_3d(red.coords), 0.0, true};
    default: break;
  }
  if (opts.samples < 1) throw std::invalid_argument("Monte Carlo external angle needs at least one sample");
  const auto& ys = red.coords;
  const Welford w = monte_carlo(opts.samples, opts.seed, opts.stream, [&](Rng& rng) {
    const Vec xi = random_unit_vector(r, rng);
    for (const auto& y : ys)
      if (xi.dot(y) > 1e-12) return 0.0;
    return 1.0;
  });
  return {w.mean, w.sigma(), false};
}

Estimate inclusion_exclusion_angle(int n, const std::vector<Vec>& generators, const std::vector<Vec>& lineality,
                                   const std::vector<std::vector<int>>& pieces, const AngleOptions& opts) {
  const std::size_t m = pieces.size();
  if (m > 24) throw DimensionError("inclusion-exclusion limited to 24 pieces");
  std::vector<std::uint64_t> masks;
  for (const auto& p : pieces) {
    std::uint64_t mask = 0;
    for (int i : p) mask |= std::uint64_t{1} << i;
    masks.push_back(mask);
  }
  std::map<std::uint64_t, long long> coefficient;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << m); ++s) {
    std::uint64_t common = ~std::uint64_t{0};
    int size = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (s & (std::uint64_t{1} << i)) {
        common &= masks[i];
        ++size;
      }
    coefficient[common] += (size % 2 == 1) ? 1 : -1;
  }
  Estimate total;
  double var = 0.0;
  std::uint64_t stream = opts.stream;
  for (const auto& [mask, coef] : coefficient) {
    if (coef == 0) continue;
    std::vector<Vec> g;
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) g.push_back(generators[i]);
    AngleOptions o = opts;
    o.stream = ++stream;
    const auto a = external_angle(PolyCone::with_lineality(n, std::move(g), lineality), o);
    total.value += static_cast<double>(coef) * a.value;
    var += static_cast<double>(coef * coef) * a.sigma * a.sigma;
  }
  total.sigma = std::sqrt(var);
  return total;
}

AdditivityResult angle_additivity_check(const PolyCone& cone, const AngleOptions& opts) {
  const auto t = triangulate_indices(cone);
  AdditivityResult res;
  res.pieces = t.pieces.size();
  const auto whole = external_angle(t.cone, opts);
  if (t.pieces.size() == 1) return res;
  AngleOptions o = opts;
  o.stream = opts.stream + 1000;
  const auto sum = inclusion_exclusion_angle(t.cone.dim(), t.cone.generators(), t.cone.lineality(), t.pieces, o);
  res.residual = std::abs(sum.value - whole.value);
  res.sigma = std::sqrt(sum.sigma * sum.sigma + whole.sigma * whole.sigma);
  return res;
}

}  // namespace angularity
