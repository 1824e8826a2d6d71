#include "angularity/curvmeas.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace angularity {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Frame random_frame(int n, int k, Rng& rng) {
  Mat g = gaussian_matrix(n, k, rng);
  Eigen::HouseholderQR<Mat> qr(g);
  return Frame(qr.householderQ() * Mat::Identity(n, k));
}

double constcoeff_weight(const BiGradedForm& omega, const Frame& frame) {
  const int n = omega.dim();
  const int k = frame.size();
  if (frame.dim() != n || omega.base_grade() != k || omega.fiber_grade() != n - k)
    throw GradeError("form bidegree does not match the frame");
  const BiGradedForm reduced = contract(plucker(frame), omega);
  double value = ball_volume(n - k) * pair_fiber(reduced, plucker(oriented_complement(frame)));
  if (k == n && frame.vectors.determinant() < 0) value = -value;
  return value;
}

}  // namespace

double ball_volume(int k) {
  if (k < 0) throw std::invalid_argument("ball dimension must be nonnegative");
  return std::pow(std::numbers::pi, k / 2.0) / std::tgamma(k / 2.0 + 1.0);
}

int weight_degree(const WeightSpec& w) {
  return std::visit(overloaded{[](const Federer& f) { return f.k; }, [](const Quadratic& q) { return q.k; },
                               [](const ConstCoeff& c) { return c.omega.base_grade(); },
                               [](const Tabulated& t) { return t.k; }},
                    w);
}

void validate_weight(const WeightSpec& w, int n) {
  const int k = weight_degree(w);
  if (k < 0 || k > n) throw DimensionError("weight degree out of range");
  if (const auto* q = std::get_if<Quadratic>(&w)) {
    const auto m = static_cast<Eigen::Index>(binomial(n, k));
    if (q->q.rows() != m || q->q.cols() != m) throw DimensionError("quadratic weight has the wrong size");
    if ((q->q - q->q.transpose()).cwiseAbs().maxCoeff() > 1e-12) throw std::invalid_argument("quadratic weight is not symmetric");
  }
  if (const auto* c = std::get_if<ConstCoeff>(&w)) {
    if (c->omega.dim() != n || c->omega.fiber_grade() != n - k) throw GradeError("form must have bidegree (k, n-k)");
  }
}

Tabulated make_tabulated(int n, int k, std::string id, std::function<double(const Frame&)> fn, std::uint64_t seed,
                         int trials) {
  if (k < 0 || k > n) throw DimensionError("weight degree out of range");
  if (k > 0) {
    Rng rng = make_rng(seed, 0x6576656e, 0);
    for (int t = 0; t < trials; ++t) {
      Frame f = random_frame(n, k, rng);
      Frame g = f;
      g.vectors.col(0) *= -1.0;
      const double a = fn(f);
      const double b = fn(g);
      if (std::abs(a - b) > 1e-9 * std::max(1.0, std::abs(a))) throw std::invalid_argument("tabulated weight '" + id + "' is not even");
    }
  }
  return Tabulated{k, std::move(id), std::move(fn)};
}

std::vector<std::string> tabulated_ids() { return {"one", "p0-squared", "p0-abs", "p0-quartic"}; }

Tabulated tabulated_weight(const std::string& id, int n, int k) {
  auto p0 = [](const Frame& f) { return plucker(f).coeffs().front(); };
  if (id == "one") return make_tabulated(n, k, id, [](const Frame&) { return 1.0; });
  if (id == "p0-squared") return make_tabulated(n, k, id, [p0](const Frame& f) { return std::pow(p0(f), 2); });
  if (id == "p0-abs") return make_tabulated(n, k, id, [p0](const Frame& f) { return std::abs(p0(f)); });
  if (id == "p0-quartic") return make_tabulated(n, k, id, [p0](const Frame& f) { return std::pow(p0(f), 4); });
  throw std::invalid_argument("unknown tabulated weight '" + id + "'");
}

double weight_eval(const WeightSpec& w, const Frame& frame) {
  if (weight_degree(w) != frame.size()) throw DimensionError("frame size does not match the weight degree");
  return std::visit(overloaded{[](const Federer&) { return 1.0; },
                               [&](const Quadratic& q) {
                                 const MultiVector pl = plucker(frame);
                                 const auto& c = pl.coeffs();
                                 if (static_cast<Eigen::Index>(c.size()) != q.q.rows())
                                   throw DimensionError("quadratic weight has the wrong size");
                                 const Eigen::Map<const Vec> p(c.data(), static_cast<Eigen::Index>(c.size()));
                                 return p.dot(q.q * p);
                               },
                               [&](const ConstCoeff& c) { return constcoeff_weight(c.omega, frame); },
                               [&](const Tabulated& t) { return t.fn(frame); }},
                    w);
}

CurvatureEvaluation evaluate_embedded(const std::vector<WeightSpec>& weights, const Polytope& local,
                                      const AffineMap& embedding, const BorelBox& u, const EvalOptions& opts) {
  const int n = static_cast<int>(embedding.frame.rows());
  if (embedding.frame.cols() != local.ambient_dim()) throw DimensionError("embedding does not match the polytope");
  for (const auto& w : weights) validate_weight(w, n);
  CurvatureEvaluation out;
  out.per_degree.assign(static_cast<std::size_t>(n + 1), 0.0);
  out.sigma.assign(static_cast<std::size_t>(n + 1), 0.0);
  const auto clip = pull_back_box(u, embedding);
  std::vector<double> var(static_cast<std::size_t>(n + 1), 0.0);
  const auto& faces = local.faces();
  for (std::size_t fi = 0; fi < faces.size(); ++fi) {
    const Face& f = faces[fi];
    double weight = 0.0;
    bool any = false;
    const Frame frame(embedding.frame * f.affine_basis);
    for (const auto& w : weights)
      if (weight_degree(w) == f.dim) {
        weight += weight_eval(w, frame);
        any = true;
      }
    if (!any || weight == 0.0) continue;
    const double vol = u.all ? face_volume(local, f) : face_volume_clipped(local, f, clip);
    if (vol == 0.0) continue;
    AngleOptions ao = opts.angle;
    ao.stream = opts.angle.stream + fi;
    const AngleResult gamma = external_angle(tangent_cone(local, f), ao);
    const auto d = static_cast<std::size_t>(f.dim);
    out.per_degree[d] += weight * gamma.value * vol;
    var[d] += std::pow(weight * gamma.sigma * vol, 2);
  }
  double total_var = 0.0;
  for (int k = 0; k <= n; ++k) {
    out.sigma[static_cast<std::size_t>(k)] = std::sqrt(var[static_cast<std::size_t>(k)]);
    out.total += out.per_degree[static_cast<std::size_t>(k)];
    total_var += var[static_cast<std::size_t>(k)];
  }
  out.total_sigma = std::sqrt(total_var);
  return out;
}

CurvatureEvaluation evaluate(const std::vector<WeightSpec>& weights, const Polytope& p, const BorelBox& u,
                             const EvalOptions& opts) {
  return evaluate_embedded(weights, p, AffineMap::identity(p.ambient_dim()), u, opts);
}

CurvatureEvaluation evaluate(const WeightSpec& w, const Polytope& p, const BorelBox& u, const EvalOptions& opts) {
  return evaluate(std::vector<WeightSpec>{w}, p, u, opts);
}

double intrinsic_volume(const Polytope& p, int k, const EvalOptions& opts) {
  if (k < 0 || k > p.ambient_dim()) throw DimensionError("intrinsic volume degree out of range");
  return evaluate(Federer{k}, p, BorelBox::everything(), opts).total;
}

std::vector<double> intrinsic_volumes(const Polytope& p, const EvalOptions& opts) {
  std::vector<WeightSpec> all;
  for (int k = 0; k <= p.ambient_dim(); ++k) all.emplace_back(Federer{k});
  return evaluate(all, p, BorelBox::everything(), opts).per_degree;
}

SteinerResult steiner_check(const Polytope& p, double eps, std::uint64_t samples, std::uint64_t seed) {
  if (!(eps > 0.0)) throw std::invalid_argument("steiner_check requires eps > 0");
  const int n = p.ambient_dim();
  Vec lo = p.vertices_d().front(), hi = lo;
  for (const auto& v : p.vertices_d()) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
  }
  lo.array() -= eps;
  hi.array() += eps;
  const double box_vol = (hi - lo).prod();
  const Welford w = monte_carlo(samples, seed, 0x73746e72, [&](Rng& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Vec x(n);
    for (int i = 0; i < n; ++i) x[i] = lo[i] + (hi[i] - lo[i]) * unit(rng);
    return distance_to_polytope(p, x) <= eps ? 1.0 : 0.0;
  });
  SteinerResult r;
  r.estimate = box_vol * w.mean;
  r.sigma = box_vol * w.sigma();
  const auto v = intrinsic_volumes(p);
  for (int k = 0; k <= n; ++k) r.target += ball_volume(n - k) * std::pow(eps, n - k) * v[static_cast<std::size_t>(k)];
  r.residual = std::abs(r.estimate - r.target);
  return r;
}

CurvatureEvaluation direct_constcoeff(const BiGradedForm& omega, const Polytope& p, const BorelBox& u,
                                      std::uint64_t samples, std::uint64_t seed) {
  const int n = p.ambient_dim();
  const int k = omega.base_grade();
  if (omega.dim() != n || omega.fiber_grade() != n - k) throw GradeError("form must have bidegree (k, n-k)");
  CurvatureEvaluation out;
  out.per_degree.assign(static_cast<std::size_t>(n + 1), 0.0);
  out.sigma.assign(static_cast<std::size_t>(n + 1), 0.0);
  const auto base_sets = sorted_subsets(n, k);
  const auto fiber_sets = sorted_subsets(n, n - k);
  double var = 0.0;
  const auto& faces = p.faces();
  for (std::size_t fi = 0; fi < faces.size(); ++fi) {
    const Face& f = faces[fi];
    if (f.dim != k) continue;
    const double vol = face_volume(p, f, u);
    if (vol == 0.0) continue;

    // Positively oriented splitting R^n = F ⊕ F^⊥.
    Mat e = f.affine_basis;
    Mat full(n, n);
    if (k > 0) {
      Eigen::HouseholderQR<Mat> qr(e);
      full = qr.householderQ();
      full.leftCols(k) = e;
    } else {
      full = Mat::Identity(n, n);
    }
    if (full.determinant() < 0) full.col(n - 1) *= -1.0;
    e = full.leftCols(k);
    const Mat comp = full.rightCols(n - k);

    double form = 0.0;
    for (std::size_t bi = 0; bi < base_sets.size(); ++bi) {
      Mat eb(k, k);
      for (int r = 0; r < k; ++r) eb.row(r) = e.row(base_sets[bi][static_cast<std::size_t>(r)]);
      const double de = k == 0 ? 1.0 : eb.determinant();
      if (de == 0.0) continue;
      for (std::size_t fj = 0; fj < fiber_sets.size(); ++fj) {
        const double c = omega.coeff(bi, fj);
        if (c == 0.0) continue;
        Mat cf(n - k, n - k);
        for (int r = 0; r < n - k; ++r) cf.row(r) = comp.row(fiber_sets[fj][static_cast<std::size_t>(r)]);
        form += c * de * (n - k == 0 ? 1.0 : cf.determinant());
      }
    }
    if (form == 0.0) continue;

    double fibre = 1.0, fibre_sigma = 0.0;
    if (k < n) {
      std::vector<Vec> edges;
      for (const auto& v : p.vertices_d()) edges.push_back(v - f.barycenter);
      const int m = n - k;
      const Welford w = monte_carlo(samples, seed, 0x64637563 + fi, [&](Rng& rng) {
        std::normal_distribution<double> normal;
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        Vec y(m);
        for (int i = 0; i < m; ++i) y[i] = normal(rng);
        y *= std::pow(unit(rng), 1.0 / m) / y.norm();
        const Vec xi = comp * y;
        for (const auto& g : edges)
          if (xi.dot(g) > 1e-12 * g.norm()) return 0.0;
        return 1.0;
      });
      fibre = ball_volume(m) * w.mean;
      fibre_sigma = ball_volume(m) * w.sigma();
    }
    out.per_degree[static_cast<std::size_t>(k)] += vol * form * fibre;
    var += std::pow(vol * form * fibre_sigma, 2);
  }
  out.sigma[static_cast<std::size_t>(k)] = std::sqrt(var);
  out.total = out.per_degree[static_cast<std::size_t>(k)];
  out.total_sigma = out.sigma[static_cast<std::size_t>(k)];
  return out;
}

namespace {

// Sign of the permutation sorting the concatenation of two sorted,
// disjoint index lists; 0 when they overlap.
int concat_sign(const Subset& a, const Subset& b) {
  int inversions = 0;
  for (int x : a)
    for (int y : b) {
      if (x == y) return 0;
      if (x > y) ++inversions;
    }
  return inversions % 2 ? -1 : 1;
}

Subset merged(const Subset& a, const Subset& b) {
  Subset out;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

BiGradedForm symplectic_wedge(const BiGradedForm& eta) {
  const int n = eta.dim();
  const int a = eta.base_grade();
  const int b = eta.fiber_grade();
  if (a + 1 > n || b + 1 > n) throw GradeError("symplectic product exceeds the top degree");
  BiGradedForm out(n, a + 1, b + 1);
  const auto base_sets = sorted_subsets(n, a);
  const auto fiber_sets = sorted_subsets(n, b);
  for (std::size_t bi = 0; bi < base_sets.size(); ++bi)
    for (std::size_t fj = 0; fj < fiber_sets.size(); ++fj) {
      const double c = eta.coeff(bi, fj);
      if (c == 0.0) continue;
      const Subset& I = base_sets[bi];
      const Subset& J = fiber_sets[fj];
      for (int i = 0; i < n; ++i) {
        // dx_i ^ dy_i ^ dx_I ^ dy_J = (-1)^|I| dx_i ^ dx_I ^ dy_i ^ dy_J
        const int s1 = concat_sign({i}, I);
        const int s2 = concat_sign({i}, J);
        if (s1 == 0 || s2 == 0) continue;
        const int parity = (a % 2) ? -1 : 1;
        out.add(merged({i}, I), merged({i}, J), parity * s1 * s2 * c);
      }
    }
  return out;
}

}  // namespace angularity
