#pragma once

// Partition combinatorics: Littlewood-Richardson coefficients, Weyl
// dimensions for SL(n) and SO(n), and the stable-range restriction
// GL(n) -> O(n).

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "angularity/common.hpp"

namespace angularity {

class Partition {
 public:
  Partition() = default;
  /// Throws unless parts are nonnegative and weakly decreasing; trailing
  /// zeros are dropped.
  Partition(std::vector<int> parts);  // NOLINT(google-explicit-constructor)
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  /// i-th part (0-based), zero beyond the length.
  int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
  bool contains(const Partition& o) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// (2, ..., 2) with `count` parts.
Partition twos(int count);

Partition transpose(const Partition& lambda);

/// All partitions of `size` with at most max_parts parts, each at most
/// max_part.
std::vector<Partition> partitions_of(int size, int max_parts = std::numeric_limits<int>::max(),
                                     int max_part = std::numeric_limits<int>::max());

/// Number of strict μ-expansions of λ with shape ν.
std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

using Decomposition = std::vector<std::pair<Partition, std::uint64_t>>;

/// Components of Γ_λ ⊗ Γ_μ with at most n parts.  With sl_normalize the
/// shapes are reduced by their n-th part and equal shapes merged.
Decomposition tensor_decompose(const Partition& lambda, const Partition& mu, int n, bool sl_normalize = false);

BigInt weyl_dim_sl(const Partition& lambda, int n);

struct SOWeight {
  int n = 0;
  std::vector<int> m;  // floor(n/2) entries

  void validate() const;
};

BigInt weyl_dim_so(const SOWeight& mu);

/// Stable-range restriction of Γ_λ from GL(n) to O(n).
Decomposition littlewood_restrict(const Partition& lambda, int n);

/// dim Γ_{(2^k)} over SL(n) minus the summed SO(n) dimensions of its
/// components (2^i), i <= k, with the even-n splitting applied.
BigInt so_branch_dim_check(int k, int n);

/// C(n,k)^2 - C(n,k-1) C(n,k+1) - dim Γ_{(2^{n-k})}.
BigInt plucker_quadric_dim_check(int n, int k);

}  // namespace angularity
