#pragma once

// Small dense exact linear algebra over the rationals.

#include <optional>
#include <vector>

#include "angularity/common.hpp"

namespace angularity::exact {

using RMat = std::vector<RVec>;  // row-major

struct Echelon {
  RMat rows;                // reduced row echelon form, zero rows removed
  std::vector<int> pivots;  // pivot column of each row
};

Echelon rref(RMat m, int cols);

int rank(const RMat& m, int cols);

/// Basis of {y : m y = 0}.
RMat nullspace(const RMat& m, int cols);

/// Solution of the square system a x = b, or nullopt when singular.
std::optional<RVec> solve(RMat a, RVec b);

Rational determinant(RMat a);

Rational dot(const RVec& a, const RVec& b);
RVec sub(const RVec& a, const RVec& b);

}  // namespace angularity::exact
