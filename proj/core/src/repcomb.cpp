#include "angularity/repcomb.hpp"

#include <algorithm>
#include <map>

namespace angularity {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

bool Partition::contains(const Partition& o) const {
  if (o.length() > length()) return false;
  for (int i = 0; i < o.length(); ++i)
    if (o[i] > (*this)[i]) return false;
  return true;
}

Partition twos(int count) { return Partition(std::vector<int>(static_cast<std::size_t>(std::max(count, 0)), 2)); }

Partition transpose(const Partition& lambda) {
  std::vector<int> t(static_cast<std::size_t>(lambda[0]), 0);
  for (int i = 1; i <= lambda[0]; ++i)
    for (int p : lambda.parts())
      if (p >= i) ++t[static_cast<std::size_t>(i - 1)];
  return Partition(std::move(t));
}

namespace {

void partitions_rec(int remaining, int max_parts, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) >= max_parts) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, max_parts, p, cur, out);
    cur.pop_back();
  }
}

struct LrSearch {
  const Partition& mu;
  const Partition& nu;
  int rows;
  std::vector<int> shape;                // current row lengths
  std::vector<std::vector<int>> labels;  // labels of added boxes per row, left to right
  std::uint64_t count = 0;

  bool lattice() const {
    std::vector<int> seen(static_cast<std::size_t>(mu.length()) + 2, 0);
    for (const auto& row : labels)
      for (auto it = row.rbegin(); it != row.rend(); ++it) {
        const int p = *it;
        ++seen[static_cast<std::size_t>(p)];
        if (p > 1 && seen[static_cast<std::size_t>(p)] > seen[static_cast<std::size_t>(p - 1)]) return false;
      }
    return true;
  }

  // Adds `left` boxes labelled `label` in rows >= row, as a horizontal strip
  // over `old` (the shape before this label).
  void strip(int label, int row, int left, const std::vector<int>& old) {
    if (left == 0) {
      place(label + 1);
      return;
    }
    if (row >= rows) return;
    const int ceiling = std::min(nu[row], row == 0 ? nu[0] : old[static_cast<std::size_t>(row - 1)]);
    const int room = std::max(0, ceiling - shape[static_cast<std::size_t>(row)]);
    for (int a = std::min(room, left); a >= 0; --a) {
      shape[static_cast<std::size_t>(row)] += a;
      for (int i = 0; i < a; ++i) labels[static_cast<std::size_t>(row)].push_back(label);
      strip(label, row + 1, left - a, old);
      for (int i = 0; i < a; ++i) labels[static_cast<std::size_t>(row)].pop_back();
      shape[static_cast<std::size_t>(row)] -= a;
    }
  }

  void place(int label) {
    if (label > mu.length()) {
      for (int i = 0; i < rows; ++i)
        if (shape[static_cast<std::size_t>(i)] != nu[i]) return;
      if (lattice()) ++count;
      return;
    }
    const std::vector<int> old = shape;
    strip(label, 0, mu[label - 1], old);
  }
};

}  // namespace

std::vector<Partition> partitions_of(int size, int max_parts, int max_part) {
  std::vector<Partition> out;
  if (size < 0) return out;
  std::vector<int> cur;
  partitions_rec(size, max_parts, max_part, cur, out);
  return out;
}

std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() + mu.size() != nu.size() || !nu.contains(lambda) || !nu.contains(mu)) return 0;
  LrSearch s{mu, nu, nu.length(), {}, {}, 0};
  s.shape.resize(static_cast<std::size_t>(s.rows));
  for (int i = 0; i < s.rows; ++i) s.shape[static_cast<std::size_t>(i)] = lambda[i];
  s.labels.resize(static_cast<std::size_t>(s.rows));
  s.place(1);
  return s.count;
}

Decomposition tensor_decompose(const Partition& lambda, const Partition& mu, int n, bool sl_normalize) {
  if (lambda.length() > n || mu.length() > n) throw DimensionError("partitions must have at most n parts");
  std::map<Partition, std::uint64_t> acc;
  for (const auto& nu : partitions_of(lambda.size() + mu.size(), n)) {
    const std::uint64_t c = lr_coefficient(lambda, mu, nu);
    if (c == 0) continue;
    Partition key = nu;
    if (sl_normalize && nu.length() == n) {
      std::vector<int> parts = nu.parts();
      const int last = parts.back();
      for (auto& p : parts) p -= last;
      key = Partition(std::move(parts));
    }
    acc[key] += c;
  }
  return Decomposition(acc.begin(), acc.end());
}

BigInt weyl_dim_sl(const Partition& lambda, int n) {
  if (lambda.length() > n) throw DimensionError("partition has more than n parts");
  Rational d = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d *= Rational(lambda[i] - lambda[j] + j - i, j - i);
  if (denominator(d) != 1) throw std::logic_error("Weyl dimension is not integral");
  return numerator(d);
}

void SOWeight::validate() const {
  if (n < 2) throw DimensionError("SO(n) weights need n >= 2");
  const int r = n / 2;
  if (static_cast<int>(m.size()) != r) throw DimensionError("SO(n) weight needs floor(n/2) entries");
  for (int i = 0; i + 1 < r; ++i) {
    const bool last_pair = (i + 2 == r);
    const int next = (n % 2 == 0 && last_pair) ? std::abs(m[static_cast<std::size_t>(i + 1)]) : m[static_cast<std::size_t>(i + 1)];
    if (m[static_cast<std::size_t>(i)] < next) throw std::invalid_argument("SO(n) weight is not dominant");
  }
  if (n % 2 == 1 && r > 0 && m.back() < 0) throw std::invalid_argument("odd SO(n) weights are nonnegative");
}

BigInt weyl_dim_so(const SOWeight& mu) {
  mu.validate();
  const int r = mu.n / 2;
  const bool odd = mu.n % 2 == 1;
  std::vector<Rational> rho(static_cast<std::size_t>(r)), l(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    rho[static_cast<std::size_t>(i)] = odd ? Rational(2 * (r - i) - 1, 2) : Rational(r - i - 1);
    l[static_cast<std::size_t>(i)] = rho[static_cast<std::size_t>(i)] + mu.m[static_cast<std::size_t>(i)];
  }
  Rational d = 1;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      const auto a = static_cast<std::size_t>(i), b = static_cast<std::size_t>(j);
      d *= (l[a] * l[a] - l[b] * l[b]) / (rho[a] * rho[a] - rho[b] * rho[b]);
    }
  if (odd)
    for (int i = 0; i < r; ++i) d *= l[static_cast<std::size_t>(i)] / rho[static_cast<std::size_t>(i)];
  if (denominator(d) != 1) throw std::logic_error("Weyl dimension is not integral");
  return numerator(d);
}

Decomposition littlewood_restrict(const Partition& lambda, int n) {
  if (lambda.length() > n / 2) throw DimensionError("partition is outside the stable range");
  Decomposition out;
  for (int size = 0; size <= lambda.size(); ++size)
    for (const auto& mu : partitions_of(size, lambda.length())) {
      if (!lambda.contains(mu)) continue;
      const Partition mt = transpose(mu);
      if (mt[0] + mt[1] > n) continue;
      std::uint64_t mult = 0;
      for (const auto& delta : partitions_of(lambda.size() - size, lambda.length())) {
        if (std::any_of(delta.parts().begin(), delta.parts().end(), [](int p) { return p % 2 != 0; })) continue;
        mult += lr_coefficient(delta, mu, lambda);
      }
      if (mult > 0) out.emplace_back(mu, mult);
    }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt so_branch_dim_check(int k, int n) {
  if (k < 0 || 2 * k > n) throw DimensionError("so_branch_dim_check requires k <= n/2");
  const int r = n / 2;
  BigInt total = 0;
  for (int i = 0; i <= k; ++i) {
    SOWeight w{n, std::vector<int>(static_cast<std::size_t>(r), 0)};
    for (int j = 0; j < i; ++j) w.m[static_cast<std::size_t>(j)] = 2;
    total += weyl_dim_so(w);
    if (n % 2 == 0 && r > 0 && w.m.back() > 0) {
      w.m.back() = -w.m.back();
      total += weyl_dim_so(w);
    }
  }
  return weyl_dim_sl(twos(k), n) - total;
}

BigInt plucker_quadric_dim_check(int n, int k) {
  if (k < 1 || k > n - 1) throw DimensionError("plucker_quadric_dim_check requires 1 <= k <= n-1");
  const BigInt c = binomial(n, k);
  return c * c - BigInt(binomial(n, k - 1)) * BigInt(binomial(n, k + 1)) - weyl_dim_sl(twos(n - k), n);
}

}  // namespace angularity
