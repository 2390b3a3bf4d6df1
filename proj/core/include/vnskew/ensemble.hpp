#ifndef VNSKEW_ENSEMBLE_HPP
#define VNSKEW_ENSEMBLE_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "vnskew/dims.hpp"

namespace vnskew {

/// Splittable counter-style generator: a 64-bit seed plus a stream index
/// define an independent substream, so batches can run on any worker with
/// identical results.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed);
  SplitRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  /// Uniform in (0, 1].
  double uniform();
  /// Standard normal via the Box-Muller transform (deterministic per stream).
  double normal();

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Dense complex matrix with immutable dimensions.
struct ComplexMatrix {
  long rows = 0;
  long cols = 0;
  std::vector<std::complex<double>> data;

  ComplexMatrix(long r, long c) : rows(r), cols(c), data(r * c) {}
  std::complex<double>& at(long i, long j) { return data[i * cols + j]; }
  const std::complex<double>& at(long i, long j) const { return data[i * cols + j]; }
};

/// m x n matrix of iid standard complex Gaussians (real and imaginary parts
/// independent N(0, 1/2), so E|x|^2 = 1 and the Wishart eigenvalue density
/// carries the weight e^{-theta}).
ComplexMatrix sample_ginibre(const Dims& d, SplitRng& rng);

/// Eigenvalues sorted non-increasing. `normalized` marks a unit-trace
/// spectrum.
struct EigenSpectrum {
  std::vector<double> values;
  bool normalized = false;
};

/// Eigenvalues of the Hermitian matrix X X^dagger via cyclic Jacobi sweeps
/// (convergence: off-diagonal Frobenius norm <= 1e-12 * trace, at most 100
/// sweeps). Unnormalized Wishart spectrum.
EigenSpectrum wishart_eigenvalues(const ComplexMatrix& x);

/// Fixed-trace spectrum: eigenvalues of X X^dagger / tr(X X^dagger), summing
/// to 1; tiny negative values are clamped to zero.
EigenSpectrum fixed_trace_eigenvalues(const ComplexMatrix& x);

/// von Neumann entropy -sum lambda ln lambda (0 ln 0 = 0); requires a
/// normalized spectrum.
double entropy_S(const EigenSpectrum& spec);

/// Induced entropy sum theta ln theta over an unnormalized spectrum.
double induced_T(const EigenSpectrum& spec);

/// Power sums of one batch of samples.
struct BatchMoments {
  long count = 0;
  double s1 = 0, s2 = 0, s3 = 0, s4 = 0;

  void add(double x);
  void merge(const BatchMoments& o);
};

/// Streaming moment accumulator split into a fixed number of batches, so
/// batch means give standard errors and batch-aligned merges reproduce the
/// single-stream result exactly.
class SampleStats {
 public:
  static constexpr long kDefaultBatches = 100;

  explicit SampleStats(long batch_count = kDefaultBatches);

  long batch_count() const { return static_cast<long>(batches_.size()); }
  long count() const;
  double sum_power(int p) const;
  double min_value() const { return min_; }
  double max_value() const { return max_; }

  void add(long batch_index, double x);
  /// Batch-aligned merge: slot-wise accumulation.
  void merge(const SampleStats& o);

  const std::vector<BatchMoments>& batches() const { return batches_; }

 private:
  std::vector<BatchMoments> batches_;
  double min_, max_;
};

/// Unbiased k-statistics with batch-mean standard errors.
struct CumulantEstimates {
  double k1, k2, k3;
  double se1, se2, se3;
};

/// Requires count >= 10. Standard errors come from per-batch k-statistics
/// and are NaN when any batch holds fewer than 3 samples.
CumulantEstimates empirical_cumulants(const SampleStats& stats);

/// Samples `samples` entropies S at the given dimensions, deterministically
/// for fixed (d, samples, seed) and any thread count. When `collect` is
/// non-null it receives all samples in global order.
SampleStats run_batch(const Dims& d, long samples, std::uint64_t seed,
                      int threads = 1, std::vector<double>* collect = nullptr);

}  // namespace vnskew

#endif  // VNSKEW_ENSEMBLE_HPP
