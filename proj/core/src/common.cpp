#include "angularity/common.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace angularity {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::vector<Subset> sorted_subsets(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  Subset cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::size_t subset_rank(const Subset& s, int n) {
  // Count subsets that precede s lexicographically.
  const int k = static_cast<int>(s.size());
  std::size_t rank = 0;
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    for (int v = prev + 1; v < s[static_cast<std::size_t>(i)]; ++v) rank += binomial(n - v - 1, k - i - 1);
    prev = s[static_cast<std::size_t>(i)];
  }
  return rank;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational to_rational(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite coordinate");
  return Rational(x);
}

RVec to_rational(const Vec& v) {
  RVec out;
  out.reserve(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_rational(v[i]));
  return out;
}

Vec to_vec(const RVec& v) {
  Vec out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = to_double(v[i]);
  return out;
}

Rng make_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

void Welford::add(double x) {
  ++count;
  const double d = x - mean;
  mean += d / static_cast<double>(count);
  m2 += d * (x - mean);
}

void Welford::merge(const Welford& other) {
  if (other.count == 0) return;
  if (count == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(count);
  const double nb = static_cast<double>(other.count);
  const double d = other.mean - mean;
  const double n = na + nb;
  mean += d * nb / n;
  m2 += other.m2 + d * d * na * nb / n;
  count += other.count;
}

double Welford::variance() const { return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0; }

double Welford::sigma() const {
  return count > 1 ? std::sqrt(variance() / static_cast<double>(count)) : 0.0;
}

namespace {
std::atomic<int> g_threads{0};
}

void set_thread_count(int threads) { g_threads.store(std::max(0, threads)); }

int thread_count() {
  const int t = g_threads.load();
  if (t > 0) return t;
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t chunks, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(thread_count()), chunks);
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) fn(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) fn(c);
    });
  }
}

Welford monte_carlo(std::uint64_t samples, std::uint64_t seed, std::uint64_t stream,
                    const std::function<double(Rng&)>& sampler) {
  const std::size_t chunks = static_cast<std::size_t>((samples + kChunkSize - 1) / kChunkSize);
  std::vector<Welford> partial(chunks);
  parallel_for(chunks, [&](std::size_t c) {
    Rng rng = make_rng(seed, stream, c);
    const std::uint64_t begin = c * kChunkSize;
    const std::uint64_t end = std::min<std::uint64_t>(samples, begin + kChunkSize);
    Welford w;
    for (std::uint64_t i = begin; i < end; ++i) w.add(sampler(rng));
    partial[c] = w;
  });
  Welford total;
  for (const auto& w : partial) total.merge(w);
  return total;
}

Vec random_unit_vector(int dim, Rng& rng) {
  std::normal_distribution<double> normal;
  Vec v(dim);
  double norm = 0.0;
  do {
    for (int i = 0; i < dim; ++i) v[i] = normal(rng);
    norm = v.norm();
  } while (norm < 1e-300);
  return v / norm;
}

Mat gaussian_matrix(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal;
  Mat m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = normal(rng);
  return m;
}

}  // namespace angularity
