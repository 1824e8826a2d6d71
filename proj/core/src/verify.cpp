#include "angularity/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "angularity/crofton.hpp"
#include "angularity/curvmeas.hpp"
#include "angularity/grassrank.hpp"
#include "angularity/repcomb.hpp"

namespace angularity {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Collects sub-checks of one criterion.
struct Checks {
  bool pass = true;
  std::ostringstream detail;
  int failed = 0;
  int total = 0;

  void check(bool ok, const std::string& what) {
    ++total;
    if (!ok) {
      pass = false;
      if (failed++ < 4) detail << " FAIL[" << what << "]";
    }
  }
};

std::string fmt(double x, int prec = 6) {
  std::ostringstream s;
  s << std::setprecision(prec) << x;
  return s.str();
}

bool within_sigma(double diff, double sigma, double k = 3.0) {
  return std::abs(diff) <= k * sigma + 1e-9 * (1.0 + std::abs(diff));
}

const std::vector<std::pair<int, int>> kRankCases = {{3, 1}, {4, 1}, {4, 2}, {5, 1}, {5, 2}, {5, 3}, {6, 2}};

std::size_t rank_samples(int n, int k) {
  const std::uint64_t c = binomial(n, k);
  return std::max<std::size_t>(500, 2 * c * (c + 1));
}

void criterion1(Checks& c, const VerifyOptions& o) {
  for (auto [n, k] : kRankCases) {
    const auto t0 = Clock::now();
    const auto expected = static_cast<int>(dim_formula(n, k));
    const RankResult r = restriction_rank(n, k, rank_samples(n, k), o.seed + 100 * n + k);
    const double t = seconds_since(t0);
    c.detail << " (" << n << "," << k << "):" << r.rank << "/" << expected << " gap=" << fmt(r.gap, 3);
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
    c.check(r.rank == expected, tag + " rank");
    c.check(r.gap >= 1e3, tag + " gap");
    c.check(t < 60.0, tag + " runtime");
  }
}

void criterion2(Checks& c, const VerifyOptions& o) {
  double worst = 0.0;
  for (auto [n, k] : kRankCases) {
    const auto dim = dim_formula(n, k);
    const RankResult r = restriction_rank(n, k, rank_samples(n, k), o.seed + 100 * n + k);
    const ConstCoeffRank cc = constcoeff_weight_rank(n, k, 2 * dim, rank_samples(n, k), o.seed + 200 * n + k);
    worst = std::max(worst, cc.span_residual);
    c.detail << " (" << n << "," << k << "):" << cc.rank.rank << "/" << r.rank;
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
    c.check(cc.rank.rank == r.rank, tag + " rank");
    c.check(cc.span_residual < 1e-8, tag + " span residual");
  }
  c.detail << " max span residual=" << fmt(worst, 3);
}

BorelBox random_box(const Polytope& p, Rng& rng) {
  const int n = p.ambient_dim();
  Vec lo = p.vertices_d().front(), hi = lo;
  for (const auto& v : p.vertices_d()) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Vec a(n), b(n);
  for (int i = 0; i < n; ++i) {
    const double w = hi[i] - lo[i];
    a[i] = lo[i] - 0.1 * w + 0.6 * w * unit(rng);
    b[i] = a[i] + 0.3 * w + 0.8 * w * unit(rng);
  }
  return BorelBox::box(a, b);
}

void criterion3(Checks& c, const VerifyOptions& o) {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const int n = 2 + i % 3;
    Rng rng = make_rng(o.seed, 3, static_cast<std::uint64_t>(i));
    const int k = std::uniform_int_distribution<int>(0, n)(rng);
    const BiGradedForm omega = random_form(n, k, n - k, rng);
    const Polytope p = shapes::random_polytope(n, n + 2, o.seed + 3000 + static_cast<std::uint64_t>(i));
    const BorelBox u = (i % 2 == 0) ? BorelBox::everything() : random_box(p, rng);
    EvalOptions eo;
    eo.angle.seed = o.seed + 31 + static_cast<std::uint64_t>(i);
    const CurvatureEvaluation a = evaluate(ConstCoeff{omega}, p, u, eo);
    const CurvatureEvaluation b = direct_constcoeff(omega, p, u, 100000, o.seed + 37 + static_cast<std::uint64_t>(i));
    const double sigma = std::hypot(a.total_sigma, b.total_sigma);
    const double diff = a.total - b.total;
    if (sigma > 0.0) worst = std::max(worst, std::abs(diff) / sigma);
    c.check(within_sigma(diff, sigma), "case " + std::to_string(i) + " n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                           " diff=" + fmt(diff, 3) + " sigma=" + fmt(sigma, 3));
  }
  const double t = seconds_since(t0);
  c.check(t < 300.0, "runtime");
  c.detail << " 50 cases, max |diff|/sigma=" << fmt(worst, 3);
}

void criterion4(Checks& c, const VerifyOptions& o) {
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const int n = 2 + i % 3;
    Rng rng = make_rng(o.seed, 4, static_cast<std::uint64_t>(i));
    const int k = std::uniform_int_distribution<int>(1, n - 1)(rng);
    const BiGradedForm eta = random_form(n, k - 1, n - k - 1, rng);
    const WeightSpec w = ConstCoeff{symplectic_wedge(eta)};
    const GrassSample planes = sample_grassmann(n, k, 500, o.seed + 400 + static_cast<std::uint64_t>(i));
    for (const auto& f : planes.frames) worst = std::max(worst, std::abs(weight_eval(w, f)));
  }
  c.check(worst < 1e-12, "max |f|=" + fmt(worst, 3));
  c.detail << " 20 forms x 500 planes, max |f|=" << fmt(worst, 3);
}

void criterion5(Checks& c, const VerifyOptions& o) {
  const std::vector<std::pair<std::string, Polytope>> bodies = {
      {"cube3", shapes::cube(3)}, {"simplex3", shapes::simplex(3)}, {"segment2", shapes::segment(2)}, {"point2", shapes::point(2)}};
  double worst_rel = 0.0;
  std::uint64_t stream = 0;
  for (const auto& [name, p] : bodies)
    for (double eps : {0.1, 0.5, 1.0}) {
      const SteinerResult r = steiner_check(p, eps, 1000000, o.seed + 500 + stream++);
      worst_rel = std::max(worst_rel, r.sigma / r.target);
      c.check(within_sigma(r.residual, r.sigma), name + " eps=" + fmt(eps, 2) + " residual=" + fmt(r.residual, 3) +
                                                     " sigma=" + fmt(r.sigma, 3));
    }
  c.detail << " 12 cases, max relative sigma=" << fmt(100 * worst_rel, 3) << "%";
}

PolyCone orthant(int n) {
  std::vector<Vec> gens;
  for (int i = 0; i < n; ++i) gens.push_back(Vec::Unit(n, i));
  return PolyCone(n, gens);
}

void criterion6(Checks& c, const VerifyOptions& o) {
  AngleOptions ao;
  ao.seed = o.seed + 600;
  for (int n = 1; n <= 5; ++n) {
    const AngleResult g = external_angle(orthant(n), ao);
    const double target = std::ldexp(1.0, -n);
    const std::string tag = "orthant n=" + std::to_string(n) + " got " + fmt(g.value);
    if (n <= 3) c.check(g.exact && std::abs(g.value - target) < 1e-12, tag);
    else c.check(within_sigma(g.value - target, g.sigma), tag);
  }
  for (const Polytope& p : {shapes::cube(3), shapes::simplex(3), shapes::random_polytope(3, 9, o.seed + 61)})
    for (const Face* f : p.faces_of_dim(p.dim() - 1)) {
      const AngleResult g = external_angle(tangent_cone(p, *f), ao);
      c.check(g.exact && std::abs(g.value - 0.5) < 1e-12, "facet angle " + fmt(g.value));
    }
  int polys = 0;
  for (const Polytope& p : {shapes::cube(3), shapes::simplex(3), shapes::simplex(4), shapes::regular_polygon(7),
                            shapes::random_polytope(3, 8, o.seed + 62), shapes::random_polytope(4, 7, o.seed + 63)}) {
    EvalOptions eo;
    eo.angle.seed = o.seed + 64 + static_cast<std::uint64_t>(polys++);
    const CurvatureEvaluation e = evaluate(Federer{0}, p, BorelBox::everything(), eo);
    c.check(within_sigma(e.total - 1.0, e.total_sigma), "vertex sum " + fmt(e.total) + " sigma " + fmt(e.total_sigma, 3));
  }
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const int n = 3 + i % 2;
    Rng rng = make_rng(o.seed, 6, static_cast<std::uint64_t>(i));
    const int m = n + 1 + i % 3;
    std::vector<Vec> gens;
    for (int j = 0; j < m; ++j) {
      Vec g = random_unit_vector(n, rng);
      g[0] = std::abs(g[0]) + 0.05;
      gens.push_back(g);
    }
    AngleOptions co;
    co.seed = o.seed + 660 + static_cast<std::uint64_t>(i);
    const AdditivityResult r = angle_additivity_check(PolyCone(n, gens), co);
    if (r.sigma > 0.0) worst = std::max(worst, r.residual / r.sigma);
    c.check(within_sigma(r.residual, r.sigma), "additivity cone " + std::to_string(i) + " residual " + fmt(r.residual, 3));
  }
  c.detail << " orthants, facets, " << polys << " vertex sums, 20 additivity cones (max residual/sigma="
           << fmt(worst, 3) << ")";
}

void criterion7(Checks& c, const VerifyOptions& o) {
  std::uint64_t idx = 0;
  double worst = 0.0;
  for (int n : {2, 3}) {
    std::vector<std::pair<std::string, Polytope>> bodies = {{"simplex", shapes::simplex(n)}};
    for (int j = 0; j < 5; ++j)
      bodies.emplace_back("random" + std::to_string(j), shapes::random_polytope(n, n + 3 + j, o.seed + 700 + 10 * n + j));
    for (const auto& [name, p] : bodies)
      for (int k = 1; k < n; ++k) {
        const FlatMeasure meas = calibrate(flat_measure_for(p, k), 1000000, o.seed + 7000 + idx);
        const CroftonResult r = crofton_estimate(p, meas, 1000000, o.seed + 7500 + idx);
        ++idx;
        const double target = intrinsic_volume(p, k);
        const double rel = std::abs(r.value - target) / target;
        worst = std::max(worst, rel);
        c.check(within_sigma(r.value - target, r.sigma) && rel <= 0.01,
                name + " n=" + std::to_string(n) + " k=" + std::to_string(k) + " " + fmt(r.value) + " vs " + fmt(target));
      }
  }
  c.detail << " " << idx << " estimates, max relative error=" << fmt(100 * worst, 3) << "%";
}

void criterion8(Checks& c, const VerifyOptions& o) {
  const Polytope square = shapes::cube(2);
  const FlatMeasure meas = calibrate(flat_measure_for(square, 1), 1000000, o.seed + 800);
  const CroftonResult r = vk_action({Federer{1}}, square, BorelBox::everything(), meas, 1000000, o.seed + 801);
  const double target = std::numbers::pi / 2.0;
  const double rel = std::abs(r.value - target) / target;
  c.check(within_sigma(r.value - target, r.sigma) && rel <= 0.01, "value " + fmt(r.value));
  c.detail << " (V1.V1)(square)=" << fmt(r.value) << " +- " << fmt(r.sigma, 3) << " vs pi/2";
}

void criterion9(Checks& c, const VerifyOptions&) {
  const auto t0 = Clock::now();
  int count = 0;
  for (int n = 2; n <= 10; ++n)
    for (int k = 1; k <= n - 1; ++k, ++count) c.check(plucker_quadric_dim_check(n, k) == 0, "quadric n=" + std::to_string(n) + " k=" + std::to_string(k));
  for (int n = 3; n <= 8; ++n)
    for (int k = 0; 2 * k <= n; ++k, ++count) c.check(so_branch_dim_check(k, n) == 0, "branch n=" + std::to_string(n) + " k=" + std::to_string(k));
  for (int n = 2; n <= 8; ++n)
    for (int k = 0; 2 * k <= n; ++k, ++count) {
      const Decomposition d = littlewood_restrict(twos(k), n);
      bool ok = static_cast<int>(d.size()) == k + 1;
      for (int i = 0; ok && i <= k; ++i) ok = d[static_cast<std::size_t>(i)].first == twos(i) && d[static_cast<std::size_t>(i)].second == 1;
      c.check(ok, "restriction n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  const double t = seconds_since(t0);
  c.check(t < 1.0, "runtime " + fmt(t, 3));
  c.detail << " " << count << " identities in " << fmt(t, 3) << " s";
}

void criterion10(Checks& c, const VerifyOptions&) {
  std::vector<double> grid;
  for (int i = 0; i < 100; ++i) grid.push_back(std::numbers::pi * i / 100.0);
  double worst = 0.0, worst_good_fit = 0.0, best_bad_fit = std::numeric_limits<double>::infinity();
  for (int n : {3, 4, 5, 6})
    for (int k = 1; 2 * k <= n && (n > 3 || k == 1); ++k)
      for (int m1 : {0, 1, 2, 3}) {
        const ObstructionResult r = obstruction_family_check(n, k, m1, grid);
        worst = std::max(worst, r.max_residual);
        const std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " m1=" + std::to_string(m1);
        c.check(r.max_residual < 1e-10, tag + " value residual " + fmt(r.max_residual, 3));
        if (m1 <= 1) {
          worst_good_fit = std::max(worst_good_fit, r.fit_residual);
          c.check(r.fit_residual < 1e-8, tag + " fit " + fmt(r.fit_residual, 3));
        } else {
          best_bad_fit = std::min(best_bad_fit, r.fit_residual);
          c.check(r.fit_residual > 0.01, tag + " fit " + fmt(r.fit_residual, 3));
        }
      }
  c.detail << " max |f-cos^2m1|=" << fmt(worst, 3) << ", fit residual m1<=1: " << fmt(worst_good_fit, 3)
           << ", m1>=2: >=" << fmt(best_bad_fit, 3);
}

struct Entry {
  const char* name;
  void (*fn)(Checks&, const VerifyOptions&);
};

const Entry kCriteria[kCriterionCount] = {
    {"classification dimension", criterion1}, {"constant-coefficient coincidence", criterion2},
    {"angularity oracle", criterion3},        {"symplectic kernel", criterion4},
    {"Steiner formula", criterion5},          {"external angles", criterion6},
    {"Crofton formula", criterion7},          {"V1 power relation", criterion8},
    {"representation identities", criterion9}, {"obstruction family", criterion10},
};

}  // namespace

CriterionResult run_criterion(int id, const VerifyOptions& opts) {
  if (id < 1 || id > kCriterionCount) throw std::invalid_argument("criterion id must be in 1..10");
  const Entry& e = kCriteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.name = e.name;
  const auto t0 = Clock::now();
  Checks c;
  try {
    e.fn(c, opts);
  } catch (const std::exception& ex) {
    c.pass = false;
    c.detail << " exception: " << ex.what();
  }
  r.seconds = seconds_since(t0);
  r.pass = c.pass;
  r.detail = c.detail.str();
  if (!r.detail.empty() && r.detail.front() == ' ') r.detail.erase(0, 1);
  if (c.failed > 0) r.detail += " [" + std::to_string(c.failed) + "/" + std::to_string(c.total) + " checks failed]";
  return r;
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), id) == opts.only.end()) continue;
    out.push_back(run_criterion(id, opts));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream s;
  s << (r.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << std::left << std::setw(34) << r.name
    << std::right << " (" << std::fixed << std::setprecision(1) << r.seconds << " s)  " << r.detail;
  return s.str();
}

}  // namespace angularity
