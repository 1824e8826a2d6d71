#include "angularity/grassrank.hpp"

#include <cmath>
#include <limits>

#include "angularity/curvmeas.hpp"

namespace angularity {
namespace {

std::complex<double> ipow(std::complex<double> z, int e) {
  std::complex<double> r = 1.0;
  for (int i = 0; i < e; ++i) r *= z;
  return r;
}

}  // namespace

GrassSample sample_grassmann(int n, int k, std::size_t count, std::uint64_t seed) {
  if (k < 1 || k > n - 1) throw DimensionError("sample_grassmann requires 1 <= k <= n-1");
  GrassSample s{n, k, {}, seed};
  s.frames.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng = make_rng(seed, 0x67726173, i);
    for (;;) {
      const Mat g = gaussian_matrix(n, k, rng);
      Eigen::HouseholderQR<Mat> qr(g);
      if (qr.matrixQR().diagonal().cwiseAbs().minCoeff() < 1e-8) continue;
      s.frames.emplace_back(qr.householderQ() * Mat::Identity(n, k));
      break;
    }
  }
  return s;
}

std::uint64_t dim_formula(int n, int k) {
  if (k < 0 || k >= n - 1) throw DimensionError("dim_formula requires 0 <= k < n-1");
  const BigInt num = BigInt(binomial(n, k)) * BigInt(binomial(n + 1, k + 1));
  if (num % (n - k + 1) != 0) throw std::logic_error("dimension formula is not integral");
  const BigInt a = num / (n - k + 1);
  const BigInt b = BigInt(binomial(n, k)) * BigInt(binomial(n, k)) -
                   (k == 0 ? BigInt(0) : BigInt(binomial(n, k - 1)) * BigInt(binomial(n, k + 1)));
  if (a != b) throw std::logic_error("dimension formulas disagree");
  return a.convert_to<std::uint64_t>();
}

std::vector<double> quadratic_monomials(const MultiVector& p) {
  const auto& c = p.coeffs();
  std::vector<double> out;
  out.reserve(c.size() * (c.size() + 1) / 2);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i; j < c.size(); ++j) out.push_back(c[i] * c[j]);
  return out;
}

Mat monomial_matrix(const std::vector<Frame>& frames) {
  if (frames.empty()) return Mat(0, 0);
  const auto first = quadratic_monomials(plucker(frames.front()));
  Mat m(static_cast<Eigen::Index>(frames.size()), static_cast<Eigen::Index>(first.size()));
  for (std::size_t r = 0; r < frames.size(); ++r) {
    const auto row = quadratic_monomials(plucker(frames[r]));
    for (std::size_t c = 0; c < row.size(); ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = row[c];
  }
  return m;
}

RankResult numerical_rank(const Mat& m, double rel_cutoff) {
  RankResult r;
  if (m.size() == 0) return r;
  Eigen::BDCSVD<Mat> svd(m);
  const Vec& s = svd.singularValues();
  r.singular_values.assign(s.data(), s.data() + s.size());
  r.cutoff = rel_cutoff * s[0];
  while (r.rank < s.size() && s[r.rank] > r.cutoff) ++r.rank;
  const double floor = std::numeric_limits<double>::epsilon() * s[0];
  const double above = r.rank > 0 ? s[r.rank - 1] : floor;
  const double below = std::max(r.rank < s.size() ? s[r.rank] : 0.0, floor);
  r.gap = above / below;
  r.stable = above >= 10.0 * r.cutoff && below <= r.cutoff / 10.0;
  return r;
}

RankResult restriction_rank(int n, int k, std::size_t sample_count, std::uint64_t seed) {
  const std::uint64_t c = binomial(n, k);
  if (sample_count < c * (c + 1)) throw std::invalid_argument("restriction_rank needs at least 2 C(C(n,k)+1, 2) samples");
  RankResult r;
  for (std::uint64_t attempt = 0; attempt < 4; ++attempt) {
    r = numerical_rank(monomial_matrix(sample_grassmann(n, k, sample_count, seed + attempt).frames));
    if (r.stable) break;
  }
  return r;
}

BiGradedForm random_form(int n, int base, int fiber, Rng& rng) {
  BiGradedForm omega(n, base, fiber);
  std::normal_distribution<double> normal;
  for (std::size_t i = 0; i < omega.base_size(); ++i)
    for (std::size_t j = 0; j < omega.fiber_size(); ++j) omega.coeff(i, j) = normal(rng);
  return omega;
}

ConstCoeffRank constcoeff_weight_rank(int n, int k, std::size_t form_count, std::size_t sample_count,
                                      std::uint64_t seed) {
  if (form_count < 2 * dim_formula(n, k)) throw std::invalid_argument("constcoeff_weight_rank needs at least 2 dim forms");
  const GrassSample sample = sample_grassmann(n, k, sample_count, seed);
  Mat values(static_cast<Eigen::Index>(form_count), static_cast<Eigen::Index>(sample_count));
  for (std::size_t f = 0; f < form_count; ++f) {
    Rng rng = make_rng(seed, 0x666f726d, f);
    const WeightSpec w = ConstCoeff{random_form(n, k, n - k, rng)};
    for (std::size_t s = 0; s < sample_count; ++s)
      values(static_cast<Eigen::Index>(f), static_cast<Eigen::Index>(s)) = weight_eval(w, sample.frames[s]);
  }
  ConstCoeffRank out;
  out.rank = numerical_rank(values);
  const Mat mono = monomial_matrix(sample.frames);
  const Eigen::CompleteOrthogonalDecomposition<Mat> cod(mono);
  for (Eigen::Index f = 0; f < values.rows(); ++f) {
    const Vec row = values.row(f).transpose();
    const Vec fit = mono * cod.solve(row);
    const double scale = row.norm();
    if (scale == 0.0) continue;
    out.span_residual = std::max(out.span_residual, (fit - row).norm() / scale);
  }
  return out;
}

void HighestWeightSpec::validate() const {
  if (k < 1 || 2 * k > n) throw DimensionError("highest weight requires 1 <= k <= n/2");
  if (static_cast<int>(m.size()) != k) throw DimensionError("highest weight needs k entries");
  for (int l = 0; l + 1 < k; ++l) {
    const int next = (l + 2 == k) ? std::abs(m[static_cast<std::size_t>(l + 1)]) : m[static_cast<std::size_t>(l + 1)];
    if (m[static_cast<std::size_t>(l)] < next) throw std::invalid_argument("highest weight is not dominant");
  }
  if (m.back() < 0 && 2 * k < n) throw std::invalid_argument("m_k must be nonnegative when 2k < n");
}

std::complex<double> strichartz_vector(const HighestWeightSpec& spec, const Frame& frame) {
  spec.validate();
  const int k = spec.k;
  if (frame.dim() != spec.n || frame.size() != k) throw DimensionError("frame does not match the highest weight");
  using CMat = Eigen::MatrixXcd;
  const std::complex<double> i_unit(0.0, 1.0);
  std::vector<std::complex<double>> dets;
  for (int l = 1; l <= k; ++l) {
    CMat a(l, k);
    for (int j = 0; j < l; ++j)
      a.row(j) = frame.vectors.row(2 * j).cast<std::complex<double>>() +
                 i_unit * frame.vectors.row(2 * j + 1).cast<std::complex<double>>();
    dets.push_back((a * a.transpose()).determinant());
  }
  const auto& m = spec.m;
  auto mk = [&](int l) { return l >= k ? 0 : m[static_cast<std::size_t>(l)]; };
  std::complex<double> f = 1.0;
  if (m.back() >= 0) {
    for (int l = 0; l < k; ++l) f *= ipow(dets[static_cast<std::size_t>(l)], mk(l) - mk(l + 1));
  } else {
    for (int l = 0; l + 1 < k; ++l) f *= ipow(dets[static_cast<std::size_t>(l)], mk(l) - std::abs(mk(l + 1)));
    f *= ipow(std::conj(dets.back()), std::abs(m.back()));
  }
  return f;
}

Frame obstruction_frame(int n, int k, double phi) {
  if (n < 3) throw DimensionError("the obstruction family needs n >= 3");
  Mat e = Mat::Zero(n, k);
  if (n == 3) {
    if (k != 1) throw DimensionError("for n = 3 the family consists of lines");
    e(0, 0) = std::cos(phi);
    e(2, 0) = std::sin(phi);
    return Frame(e);
  }
  if (2 * k - 1 > n) throw DimensionError("family needs e_{2k-1}");
  e(0, 0) = std::cos(phi);
  e(3, 0) = std::sin(phi);
  for (int j = 1; j < k; ++j) e(2 * j, j) = 1.0;
  return Frame(e);
}

QuadraticFit fit_quadratic(const std::vector<Frame>& frames, const Vec& values) {
  const Mat mono = monomial_matrix(frames);
  if (mono.rows() != values.size()) throw DimensionError("one value per frame is required");
  const Eigen::CompleteOrthogonalDecomposition<Mat> cod(mono);
  if (mono.rows() <= cod.rank()) throw std::invalid_argument("fit_quadratic needs more samples than independent monomials");
  QuadraticFit fit;
  fit.coefficients = cod.solve(values);
  fit.residual = std::sqrt((mono * fit.coefficients - values).squaredNorm() / static_cast<double>(values.size()));
  const Eigen::JacobiSVD<Mat> svd(mono);
  const Vec& s = svd.singularValues();
  const int r = static_cast<int>(cod.rank());
  fit.condition = r > 0 ? s[0] / s[r - 1] : std::numeric_limits<double>::infinity();
  return fit;
}

ObstructionResult obstruction_family_check(int n, int k, int m1, const std::vector<double>& grid) {
  HighestWeightSpec spec{n, k, std::vector<int>(static_cast<std::size_t>(k), 0)};
  spec.m.front() = m1;
  ObstructionResult out;
  std::vector<Frame> frames;
  Vec re(static_cast<Eigen::Index>(grid.size())), im(static_cast<Eigen::Index>(grid.size()));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Frame e = obstruction_frame(n, k, grid[i]);
    const std::complex<double> f = strichartz_vector(spec, e);
    out.max_residual = std::max(out.max_residual, std::abs(f - std::pow(std::cos(grid[i]), 2 * m1)));
    re[static_cast<Eigen::Index>(i)] = f.real();
    im[static_cast<Eigen::Index>(i)] = f.imag();
    frames.push_back(e);
  }
  out.fit_residual = std::hypot(fit_quadratic(frames, re).residual, fit_quadratic(frames, im).residual);
  return out;
}

}  // namespace angularity
