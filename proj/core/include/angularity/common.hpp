#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>

namespace angularity {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;
using RVec = std::vector<Rational>;

/// Sorted index subset, 0-based.
using Subset = std::vector<int>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GradeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::uint64_t binomial(int n, int k);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<Subset> sorted_subsets(int n, int k);

/// Lexicographic rank of a sorted k-subset of {0..n-1}; inverse of
/// sorted_subsets(n, k)[rank].
std::size_t subset_rank(const Subset& s, int n);

double to_double(const Rational& q);
Rational to_rational(double x);
RVec to_rational(const Vec& v);
Vec to_vec(const RVec& v);

// ---------------------------------------------------------------------------
// Monte Carlo plumbing.
//
// Every Monte Carlo loop is split into fixed-size chunks, each with its own
// generator seeded from (seed, stream, chunk).  Chunk results are merged in
// chunk order, so estimates do not depend on the number of worker threads.

using Rng = std::mt19937_64;

Rng make_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Running mean/variance (Welford), mergeable.
struct Welford {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x);
  void merge(const Welford& other);
  double variance() const;
  /// Standard error of the mean.
  double sigma() const;
};

struct Estimate {
  double value = 0.0;
  double sigma = 0.0;
};

void set_thread_count(int threads);
int thread_count();

constexpr std::uint64_t kChunkSize = 8192;

/// Runs `fn(chunk_index)` for chunk_index in [0, chunks) on the worker pool.
void parallel_for(std::size_t chunks, const std::function<void(std::size_t)>& fn);

/// Mean of `sampler(rng)` over `samples` draws, chunked as described above.
Welford monte_carlo(std::uint64_t samples, std::uint64_t seed, std::uint64_t stream,
                    const std::function<double(Rng&)>& sampler);

/// Uniform point on the unit sphere of R^dim.
Vec random_unit_vector(int dim, Rng& rng);

/// dim x dim matrix with independent standard normal entries.
Mat gaussian_matrix(int rows, int cols, Rng& rng);

}  // namespace angularity
