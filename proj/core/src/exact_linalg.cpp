#include "exact_linalg.hpp"

#include <utility>

namespace angularity::exact {

Echelon rref(RMat m, int cols) {
  Echelon e;
  const int rows = static_cast<int>(m.size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[static_cast<std::size_t>(r)], m[static_cast<std::size_t>(piv)]);
    auto& pr = m[static_cast<std::size_t>(r)];
    const Rational inv = 1 / pr[static_cast<std::size_t>(c)];
    for (int j = c; j < cols; ++j) pr[static_cast<std::size_t>(j)] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      auto& row = m[static_cast<std::size_t>(i)];
      const Rational f = row[static_cast<std::size_t>(c)];
      if (f == 0) continue;
      for (int j = c; j < cols; ++j) row[static_cast<std::size_t>(j)] -= f * pr[static_cast<std::size_t>(j)];
    }
    e.pivots.push_back(c);
    ++r;
  }
  m.resize(static_cast<std::size_t>(r));
  e.rows = std::move(m);
  return e;
}

int rank(const RMat& m, int cols) { return static_cast<int>(rref(m, cols).pivots.size()); }

RMat nullspace(const RMat& m, int cols) {
  const Echelon e = rref(m, cols);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  RMat basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    RVec v(static_cast<std::size_t>(cols), Rational(0));
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      v[static_cast<std::size_t>(e.pivots[r])] = -e.rows[r][static_cast<std::size_t>(free)];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RVec> solve(RMat a, RVec b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == n) return std::nullopt;
    std::swap(a[c], a[piv]);
    const Rational inv = 1 / a[c][c];
    for (std::size_t j = c; j <= n; ++j) a[c][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  RVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

Rational determinant(RMat a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[c], a[piv]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

Rational dot(const RVec& a, const RVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RVec sub(const RVec& a, const RVec& b) {
  RVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

}  // namespace angularity::exact
