#pragma once

// Dense exterior algebra over R^n.
//
// Grade-k elements store one coefficient per sorted k-subset of {0..n-1},
// in lexicographic order.  A BiGradedForm of bidegree (a, b) is a constant
// coefficient form on R^n + R^n: the coefficient at (I, J) multiplies
// dx_I ^ dy_J, with the base (x) factor written first.

#include <vector>

#include "angularity/common.hpp"

namespace angularity {

class MultiVector {
 public:
  MultiVector(int n, int grade);
  MultiVector(int n, int grade, std::vector<double> coeffs);

  static MultiVector scalar(int n, double value);
  static MultiVector basis(int n, const Subset& indices, double coeff = 1.0);
  static MultiVector vector(const Vec& v);

  int dim() const { return n_; }
  int grade() const { return grade_; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double coeff(const Subset& indices) const;
  double norm() const;

  MultiVector operator+(const MultiVector& o) const;
  MultiVector operator-(const MultiVector& o) const;
  MultiVector operator*(double s) const;

 private:
  int n_;
  int grade_;
  std::vector<double> coeffs_;
};

class BiGradedForm {
 public:
  BiGradedForm(int n, int base, int fiber);

  int dim() const { return n_; }
  int base_grade() const { return base_; }
  int fiber_grade() const { return fiber_; }
  std::size_t base_size() const { return base_size_; }
  std::size_t fiber_size() const { return fiber_size_; }

  double coeff(std::size_t base_idx, std::size_t fiber_idx) const {
    return coeffs_[base_idx * fiber_size_ + fiber_idx];
  }
  double& coeff(std::size_t base_idx, std::size_t fiber_idx) {
    return coeffs_[base_idx * fiber_size_ + fiber_idx];
  }
  double coeff(const Subset& base, const Subset& fiber) const;
  void set(const Subset& base, const Subset& fiber, double value);
  void add(const Subset& base, const Subset& fiber, double value);

  const std::vector<double>& coeffs() const { return coeffs_; }
  double max_abs() const;

  BiGradedForm operator+(const BiGradedForm& o) const;
  BiGradedForm operator*(double s) const;

 private:
  int n_;
  int base_;
  int fiber_;
  std::size_t base_size_;
  std::size_t fiber_size_;
  std::vector<double> coeffs_;
};

/// k vectors in R^n stored as the columns of an n x k matrix.
struct Frame {
  Mat vectors;

  Frame() = default;
  explicit Frame(Mat columns) : vectors(std::move(columns)) {}

  int dim() const { return static_cast<int>(vectors.rows()); }
  int size() const { return static_cast<int>(vectors.cols()); }
  bool is_orthonormal(double tol = 1e-12) const;
};

MultiVector wedge(const MultiVector& u, const MultiVector& v);

/// Plücker coordinates of the frame (the wedge of its vectors).
/// Throws DimensionError when the Gram determinant is below 1e-12.
MultiVector plucker(const Frame& frame);

/// Interior product of u into the base slot of omega.  The sign convention
/// satisfies contract(u, contract(v, w)) == contract(wedge(v, u), w), and a
/// basis k-vector e_I fully contracts dx_I to +1.
BiGradedForm contract(const MultiVector& u, const BiGradedForm& omega);

/// Pairs the fiber slot of a base-grade-0 form with a multivector of the
/// same grade: sum_J omega(0, J) * v_J.
double pair_fiber(const BiGradedForm& omega, const MultiVector& v);

/// Orthonormal frame of the orthogonal complement whose concatenation with
/// `frame` has determinant +1.  Requires an orthonormal input frame.
Frame oriented_complement(const Frame& frame);

}  // namespace angularity
