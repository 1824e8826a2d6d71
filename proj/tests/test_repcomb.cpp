#include <gtest/gtest.h>

#include <map>

#include "angularity/repcomb.hpp"

using namespace angularity;

namespace {

// Polynomials in N variables as exponent vector -> coefficient.
using Poly = std::map<std::vector<int>, long long>;

void fill_tableaux(const Partition& shape, int vars, std::vector<std::vector<int>>& t, int row, int col, Poly& out) {
  if (row == shape.length()) {
    std::vector<int> e(static_cast<std::size_t>(vars), 0);
    for (const auto& r : t)
      for (int x : r) ++e[static_cast<std::size_t>(x)];
    ++out[e];
    return;
  }
  if (col == shape[row]) {
    fill_tableaux(shape, vars, t, row + 1, 0, out);
    return;
  }
  int lo = 0;
  if (col > 0) lo = std::max(lo, t[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - 1)]);
  if (row > 0) lo = std::max(lo, t[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)] + 1);
  for (int x = lo; x < vars; ++x) {
    t[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = x;
    fill_tableaux(shape, vars, t, row, col + 1, out);
  }
}

// Schur polynomial as a sum over semistandard tableaux.
Poly schur(const Partition& shape, int vars) {
  Poly out;
  if (shape.length() > vars) return out;
  std::vector<std::vector<int>> t;
  for (int r = 0; r < shape.length(); ++r) t.emplace_back(static_cast<std::size_t>(shape[r]), 0);
  fill_tableaux(shape, vars, t, 0, 0, out);
  return out;
}

Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      auto e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out[e] += ca * cb;
    }
  return out;
}

long long ssyt_count(const Partition& shape, int vars) {
  long long c = 0;
  for (const auto& [e, coef] : schur(shape, vars)) c += coef;
  return c;
}

}  // namespace

TEST(Partition, Validation) {
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, -1}), std::invalid_argument);
  EXPECT_EQ(Partition({3, 1, 0, 0}).length(), 2);
  EXPECT_EQ(transpose(Partition{3, 1}), (Partition{2, 1, 1}));
  EXPECT_EQ(twos(3), (Partition{2, 2, 2}));
}

TEST(Partition, CountsArePartitionNumbers) {
  const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int s = 0; s <= 8; ++s) EXPECT_EQ(static_cast<int>(partitions_of(s).size()), p[s]);
}

TEST(LittlewoodRichardson, SchurProductExpansion) {
  const int vars = 4;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (const auto& lambda : partitions_of(a, vars))
        for (const auto& mu : partitions_of(b, vars)) {
          Poly expected = multiply(schur(lambda, vars), schur(mu, vars));
          Poly got;
          for (const auto& nu : partitions_of(a + b, vars)) {
            const auto c = static_cast<long long>(lr_coefficient(lambda, mu, nu));
            for (const auto& [e, coef] : schur(nu, vars)) got[e] += c * coef;
          }
          std::erase_if(got, [](const auto& kv) { return kv.second == 0; });
          EXPECT_EQ(got, expected);
        }
}

TEST(LittlewoodRichardson, Symmetry) {
  for (const auto& lambda : partitions_of(4))
    for (const auto& mu : partitions_of(3))
      for (const auto& nu : partitions_of(7)) {
        EXPECT_EQ(lr_coefficient(lambda, mu, nu), lr_coefficient(mu, lambda, nu));
        EXPECT_EQ(lr_coefficient(lambda, mu, nu), lr_coefficient(transpose(lambda), transpose(mu), transpose(nu)));
      }
}

TEST(LittlewoodRichardson, PieriRule) {
  for (const auto& lambda : partitions_of(4))
    for (int r = 1; r <= 3; ++r)
      for (const auto& nu : partitions_of(4 + r)) {
        bool strip = nu.contains(lambda);
        for (int i = 0; strip && i < nu.length(); ++i)
          if (nu[i + 1] > lambda[i]) strip = false;
        EXPECT_EQ(lr_coefficient(lambda, Partition{r}, nu), strip ? 1u : 0u);
      }
}

TEST(LittlewoodRichardson, KnownCoefficient) { EXPECT_EQ(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}), 2u); }

TEST(WeylDimension, SlMatchesTableauCount) {
  for (int n = 1; n <= 4; ++n)
    for (int s = 0; s <= 5; ++s)
      for (const auto& lambda : partitions_of(s, n)) EXPECT_EQ(weyl_dim_sl(lambda, n), ssyt_count(lambda, n));
}

TEST(WeylDimension, TensorProductDimensions) {
  const int n = 5;
  for (const auto& lambda : partitions_of(3, n))
    for (const auto& mu : partitions_of(2, n)) {
      BigInt total = 0;
      for (const auto& [nu, m] : tensor_decompose(lambda, mu, n)) total += BigInt(m) * weyl_dim_sl(nu, n);
      EXPECT_EQ(total, weyl_dim_sl(lambda, n) * weyl_dim_sl(mu, n));
    }
}

TEST(WeylDimension, SoKnownValues) {
  EXPECT_EQ(weyl_dim_so({3, {1}}), 3);
  EXPECT_EQ(weyl_dim_so({3, {4}}), 9);
  EXPECT_EQ(weyl_dim_so({4, {1, 0}}), 4);
  EXPECT_EQ(weyl_dim_so({4, {1, 1}}), 3);
  EXPECT_EQ(weyl_dim_so({4, {1, -1}}), 3);
  EXPECT_EQ(weyl_dim_so({5, {1, 0}}), 5);
  EXPECT_EQ(weyl_dim_so({5, {1, 1}}), 10);
  EXPECT_EQ(weyl_dim_so({6, {1, 1, 1}}), 10);
  EXPECT_EQ(weyl_dim_so({7, {2, 0, 0}}), 27);
  EXPECT_EQ(weyl_dim_so({8, {1, 1, 0, 0}}), 28);
  EXPECT_THROW(weyl_dim_so({5, {1, -1}}), std::invalid_argument);
}

TEST(Branching, TwosRestrictToTwos) {
  for (int n = 2; n <= 8; ++n)
    for (int k = 0; 2 * k <= n; ++k) {
      const auto d = littlewood_restrict(twos(k), n);
      ASSERT_EQ(static_cast<int>(d.size()), k + 1);
      for (int i = 0; i <= k; ++i) {
        EXPECT_EQ(d[static_cast<std::size_t>(i)].first, twos(i));
        EXPECT_EQ(d[static_cast<std::size_t>(i)].second, 1u);
      }
    }
}

TEST(Branching, DimensionIdentities) {
  for (int n = 2; n <= 10; ++n)
    for (int k = 1; k < n; ++k) EXPECT_EQ(plucker_quadric_dim_check(n, k), 0) << n << "," << k;
  for (int n = 3; n <= 8; ++n)
    for (int k = 0; 2 * k <= n; ++k) EXPECT_EQ(so_branch_dim_check(k, n), 0) << n << "," << k;
}
