#include "angularity/exterior.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace angularity {
namespace {

// Sign of the permutation sorting the concatenation (a, b) of two disjoint
// sorted subsets.
int merge_sign(const Subset& a, const Subset& b) {
  std::size_t inversions = 0;
  for (int x : a)
    for (int y : b)
      if (x > y) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

bool disjoint(const Subset& a, const Subset& b) {
  for (int x : a)
    if (std::binary_search(b.begin(), b.end(), x)) return false;
  return true;
}

Subset set_union(const Subset& a, const Subset& b) {
  Subset out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void check_subset(const Subset& s, int n) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= n) throw DimensionError("index out of range");
    if (i > 0 && s[i] <= s[i - 1]) throw DimensionError("index set must be strictly increasing");
  }
}

}  // namespace

MultiVector::MultiVector(int n, int grade) : n_(n), grade_(grade) {
  if (n < 0 || grade < 0 || grade > n) throw GradeError("grade out of range");
  coeffs_.assign(binomial(n, grade), 0.0);
}

MultiVector::MultiVector(int n, int grade, std::vector<double> coeffs)
    : n_(n), grade_(grade), coeffs_(std::move(coeffs)) {
  if (n < 0 || grade < 0 || grade > n) throw GradeError("grade out of range");
  if (coeffs_.size() != binomial(n, grade)) throw DimensionError("coefficient count must equal C(n,k)");
}

MultiVector MultiVector::scalar(int n, double value) { return MultiVector(n, 0, {value}); }

MultiVector MultiVector::basis(int n, const Subset& indices, double coeff) {
  check_subset(indices, n);
  MultiVector m(n, static_cast<int>(indices.size()));
  m.coeffs_[subset_rank(indices, n)] = coeff;
  return m;
}

MultiVector MultiVector::vector(const Vec& v) {
  const int n = static_cast<int>(v.size());
  return MultiVector(n, 1, std::vector<double>(v.data(), v.data() + n));
}

double MultiVector::coeff(const Subset& indices) const {
  check_subset(indices, n_);
  if (static_cast<int>(indices.size()) != grade_) throw GradeError("index set has the wrong grade");
  return coeffs_[subset_rank(indices, n_)];
}

double MultiVector::norm() const {
  double s = 0.0;
  for (double c : coeffs_) s += c * c;
  return std::sqrt(s);
}

MultiVector MultiVector::operator+(const MultiVector& o) const {
  if (o.n_ != n_ || o.grade_ != grade_) throw GradeError("adding multivectors of different shape");
  MultiVector r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
  return r;
}

MultiVector MultiVector::operator-(const MultiVector& o) const { return *this + o * -1.0; }

MultiVector MultiVector::operator*(double s) const {
  MultiVector r = *this;
  for (double& c : r.coeffs_) c *= s;
  return r;
}

BiGradedForm::BiGradedForm(int n, int base, int fiber) : n_(n), base_(base), fiber_(fiber) {
  if (n < 0 || base < 0 || fiber < 0 || base > n || fiber > n) throw GradeError("bidegree out of range");
  base_size_ = binomial(n, base);
  fiber_size_ = binomial(n, fiber);
  coeffs_.assign(base_size_ * fiber_size_, 0.0);
}

double BiGradedForm::coeff(const Subset& base, const Subset& fiber) const {
  check_subset(base, n_);
  check_subset(fiber, n_);
  if (static_cast<int>(base.size()) != base_ || static_cast<int>(fiber.size()) != fiber_)
    throw GradeError("index sets do not match the bidegree");
  return coeff(subset_rank(base, n_), subset_rank(fiber, n_));
}

void BiGradedForm::set(const Subset& base, const Subset& fiber, double value) {
  check_subset(base, n_);
  check_subset(fiber, n_);
  if (static_cast<int>(base.size()) != base_ || static_cast<int>(fiber.size()) != fiber_)
    throw GradeError("index sets do not match the bidegree");
  coeff(subset_rank(base, n_), subset_rank(fiber, n_)) = value;
}

void BiGradedForm::add(const Subset& base, const Subset& fiber, double value) {
  set(base, fiber, coeff(base, fiber) + value);
}

double BiGradedForm::max_abs() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

BiGradedForm BiGradedForm::operator+(const BiGradedForm& o) const {
  if (o.n_ != n_ || o.base_ != base_ || o.fiber_ != fiber_) throw GradeError("adding forms of different bidegree");
  BiGradedForm r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
  return r;
}

BiGradedForm BiGradedForm::operator*(double s) const {
  BiGradedForm r = *this;
  for (double& c : r.coeffs_) c *= s;
  return r;
}

bool Frame::is_orthonormal(double tol) const {
  if (size() == 0) return true;
  const Mat gram = vectors.transpose() * vectors;
  return (gram - Mat::Identity(size(), size())).cwiseAbs().maxCoeff() <= tol;
}

MultiVector wedge(const MultiVector& u, const MultiVector& v) {
  if (u.dim() != v.dim()) throw DimensionError("wedge of multivectors in different dimensions");
  const int n = u.dim();
  if (u.grade() + v.grade() > n) throw GradeError("wedge grade exceeds ambient dimension");
  const auto us = sorted_subsets(n, u.grade());
  const auto vs = sorted_subsets(n, v.grade());
  MultiVector out(n, u.grade() + v.grade());
  std::vector<double> coeffs(out.coeffs().size(), 0.0);
  for (std::size_t i = 0; i < us.size(); ++i) {
    const double a = u.coeffs()[i];
    if (a == 0.0) continue;
    for (std::size_t j = 0; j < vs.size(); ++j) {
      const double b = v.coeffs()[j];
      if (b == 0.0 || !disjoint(us[i], vs[j])) continue;
      coeffs[subset_rank(set_union(us[i], vs[j]), n)] += merge_sign(us[i], vs[j]) * a * b;
    }
  }
  return MultiVector(n, out.grade(), std::move(coeffs));
}

MultiVector plucker(const Frame& frame) {
  const int n = frame.dim();
  const int k = frame.size();
  const Mat gram = frame.vectors.transpose() * frame.vectors;
  if (k > 0 && gram.determinant() < 1e-12) throw DimensionError("frame is rank deficient");
  const auto subsets = sorted_subsets(n, k);
  std::vector<double> coeffs(subsets.size());
  Mat minor(k, k);
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    for (int r = 0; r < k; ++r) minor.row(r) = frame.vectors.row(subsets[s][static_cast<std::size_t>(r)]);
    coeffs[s] = k == 0 ? 1.0 : minor.determinant();
  }
  return MultiVector(n, k, std::move(coeffs));
}

BiGradedForm contract(const MultiVector& u, const BiGradedForm& omega) {
  if (u.dim() != omega.dim()) throw DimensionError("contraction across different dimensions");
  if (u.grade() > omega.base_grade()) throw GradeError("contraction grade exceeds base grade");
  const int n = u.dim();
  const int a = omega.base_grade();
  const auto us = sorted_subsets(n, u.grade());
  const auto ks = sorted_subsets(n, a);
  BiGradedForm out(n, a - u.grade(), omega.fiber_grade());
  for (std::size_t i = 0; i < us.size(); ++i) {
    const double c = u.coeffs()[i];
    if (c == 0.0) continue;
    for (std::size_t kk = 0; kk < ks.size(); ++kk) {
      if (!std::includes(ks[kk].begin(), ks[kk].end(), us[i].begin(), us[i].end())) continue;
      Subset rest;
      std::set_difference(ks[kk].begin(), ks[kk].end(), us[i].begin(), us[i].end(), std::back_inserter(rest));
      // dx_K = sign * dx_I ^ dx_rest
      const double sign = merge_sign(us[i], rest);
      const std::size_t r = subset_rank(rest, n);
      for (std::size_t f = 0; f < omega.fiber_size(); ++f) out.coeff(r, f) += sign * c * omega.coeff(kk, f);
    }
  }
  return out;
}

double pair_fiber(const BiGradedForm& omega, const MultiVector& v) {
  if (omega.base_grade() != 0) throw GradeError("pairing requires a base-grade-0 form");
  if (omega.dim() != v.dim() || omega.fiber_grade() != v.grade()) throw GradeError("fiber grade mismatch");
  double s = 0.0;
  for (std::size_t j = 0; j < omega.fiber_size(); ++j) s += omega.coeff(0, j) * v.coeffs()[j];
  return s;
}

Frame oriented_complement(const Frame& frame) {
  const int n = frame.dim();
  const int k = frame.size();
  if (!frame.is_orthonormal(1e-10)) throw DimensionError("oriented_complement requires an orthonormal frame");
  if (k == n) return Frame(Mat(n, 0));
  Mat q = Mat::Identity(n, n);
  if (k > 0) {
    Eigen::HouseholderQR<Mat> qr(frame.vectors);
    q = qr.householderQ() * Mat::Identity(n, n);
  }
  Mat comp = q.rightCols(n - k);
  Mat full(n, n);
  full << frame.vectors, comp;
  if (full.determinant() < 0) comp.col(n - k - 1) *= -1.0;
  return Frame(comp);
}

}  // namespace angularity
