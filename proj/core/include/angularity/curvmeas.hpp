#pragma once

// Translation-invariant curvature measures on polytopes, evaluated by the
// face sum  sum_F f(F) γ(T_F P) vol_k(F ∩ U).

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "angularity/common.hpp"
#include "angularity/cones.hpp"
#include "angularity/exterior.hpp"
#include "angularity/polytope.hpp"

namespace angularity {

/// Volume of the unit ball in R^k.
double ball_volume(int k);

struct Federer {
  int k = 0;
};

/// f(E) = p^T Q p with p the Plücker coordinates of E; Q is indexed by
/// sorted k-subsets in lexicographic order.
struct Quadratic {
  int k = 0;
  Mat q;
};

/// Weight induced by a constant form of bidegree (k, n-k).
struct ConstCoeff {
  BiGradedForm omega;
};

struct Tabulated {
  int k = 0;
  std::string id;
  std::function<double(const Frame&)> fn;
};

using WeightSpec = std::variant<Federer, Quadratic, ConstCoeff, Tabulated>;

int weight_degree(const WeightSpec& w);

/// Checks the structural invariants of `w` for ambient dimension n.
void validate_weight(const WeightSpec& w, int n);

/// Wraps a callback, rejecting it unless f(frame) == f(frame with one vector
/// negated) on `trials` random frames.
Tabulated make_tabulated(int n, int k, std::string id, std::function<double(const Frame&)> fn,
                         std::uint64_t seed = 0, int trials = 100);

/// Built-in named weights: "one", "p0-squared", "p0-abs", "p0-quartic".
Tabulated tabulated_weight(const std::string& id, int n, int k);
std::vector<std::string> tabulated_ids();

double weight_eval(const WeightSpec& w, const Frame& frame);

struct CurvatureEvaluation {
  std::vector<double> per_degree;  // indexed by face dimension
  std::vector<double> sigma;
  double total = 0.0;
  double total_sigma = 0.0;
};

struct EvalOptions {
  AngleOptions angle;
};

/// Face-sum evaluation of P given in local coordinates and placed in R^n by
/// `embedding`; weights see ambient frames and U is an ambient box.
CurvatureEvaluation evaluate_embedded(const std::vector<WeightSpec>& weights, const Polytope& local,
                                      const AffineMap& embedding, const BorelBox& u,
                                      const EvalOptions& opts = {});

CurvatureEvaluation evaluate(const std::vector<WeightSpec>& weights, const Polytope& p,
                             const BorelBox& u = BorelBox::everything(), const EvalOptions& opts = {});
CurvatureEvaluation evaluate(const WeightSpec& w, const Polytope& p, const BorelBox& u = BorelBox::everything(),
                             const EvalOptions& opts = {});

double intrinsic_volume(const Polytope& p, int k, const EvalOptions& opts = {});
std::vector<double> intrinsic_volumes(const Polytope& p, const EvalOptions& opts = {});

struct SteinerResult {
  double estimate = 0.0;
  double sigma = 0.0;
  double target = 0.0;
  double residual = 0.0;
};

/// Monte Carlo volume of the ε-neighbourhood against the Steiner polynomial.
SteinerResult steiner_check(const Polytope& p, double eps, std::uint64_t samples, std::uint64_t seed);

/// Integral of ω over the normal disc current restricted to U, computed
/// face by face with Monte Carlo fibre integrals over the polar cones.
CurvatureEvaluation direct_constcoeff(const BiGradedForm& omega, const Polytope& p, const BorelBox& u,
                                      std::uint64_t samples, std::uint64_t seed);

/// (k, n-k) block of σ ∧ η with σ = sum_i dx_i ^ dy_i; η has bidegree
/// (k-1, n-k-1).
BiGradedForm symplectic_wedge(const BiGradedForm& eta);

}  // namespace angularity
