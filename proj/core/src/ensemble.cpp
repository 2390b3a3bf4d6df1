#include "vnskew/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace vnskew {

namespace {

std::uint64_t splitmix_step(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // Decorrelate substreams by running the finalizer over (seed, stream).
  std::uint64_t s = seed ^ (0xA0761D6478BD642Full * (stream + 1));
  splitmix_step(s);
  return s;
}

}  // namespace

SplitRng::SplitRng(std::uint64_t seed) : state_(seed) {}
SplitRng::SplitRng(std::uint64_t seed, std::uint64_t stream)
    : state_(mix_seed(seed, stream)) {}

std::uint64_t SplitRng::next_u64() { return splitmix_step(state_); }

double SplitRng::uniform() {
  // 53-bit mantissa, mapped to (0, 1].
  return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

double SplitRng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u = uniform();
  double v = uniform();
  double r = std::sqrt(-2.0 * std::log(u));
  double angle = 6.283185307179586477 * v;
  spare_ = r * std::sin(angle);
  has_spare_ = true;
  return r * std::cos(angle);
}

ComplexMatrix sample_ginibre(const Dims& d, SplitRng& rng) {
  ComplexMatrix x(d.m, d.n);
  const double scale = 0.7071067811865475244;  // 1/sqrt(2)
  for (auto& entry : x.data) {
    double re = rng.normal() * scale;
    double im = rng.normal() * scale;
    entry = {re, im};
  }
  return x;
}

namespace {

// Cyclic Jacobi for a Hermitian matrix held row-major in `h` (m x m).
// Returns unsorted eigenvalues.
std::vector<double> jacobi_hermitian(std::vector<std::complex<double>>& h, long m) {
  auto at = [&](long i, long j) -> std::complex<double>& { return h[i * m + j]; };
  if (m == 1) return {h[0].real()};
  double trace = 0.0;
  for (long i = 0; i < m; ++i) trace += at(i, i).real();
  const double threshold = 1e-12 * std::abs(trace);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (long p = 0; p < m; ++p) {
      for (long q = p + 1; q < m; ++q) off += 2.0 * std::norm(at(p, q));
    }
    if (std::sqrt(off) <= threshold) {
      std::vector<double> eig(m);
      for (long i = 0; i < m; ++i) eig[i] = at(i, i).real();
      return eig;
    }
    for (long p = 0; p < m; ++p) {
      for (long q = p + 1; q < m; ++q) {
        std::complex<double> hpq = at(p, q);
        double mag = std::abs(hpq);
        if (mag == 0.0) continue;
        std::complex<double> phase = hpq / mag;
        double app = at(p, p).real();
        double aqq = at(q, q).real();
        // tan(2 theta) = 2|h_pq| / (a_pp - a_qq), solved for tan(theta)
        // without trigonometric calls.
        double tau = (app - aqq) / (2.0 * mag);
        double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
        double cs = 1.0 / std::sqrt(1.0 + t * t);
        double sn = t * cs;
        // Columns: col_p' = cs col_p + sn e^{-i phi} col_q,
        //          col_q' = -sn e^{i phi} col_p + cs col_q; then rows by
        // conjugation. Work on full rows/columns, fix the 2x2 block last.
        // Complex products are hand-rolled: this is the simulation hot loop
        // and the library __muldc3 call dominates otherwise.
        const double pr = phase.real(), pi = phase.imag();
        for (long i = 0; i < m; ++i) {
          std::complex<double>& eip = at(i, p);
          std::complex<double>& eiq = at(i, q);
          double a = eip.real(), b = eip.imag();
          double c = eiq.real(), dd = eiq.imag();
          eip = {cs * a + sn * (pr * c + pi * dd), cs * b + sn * (pr * dd - pi * c)};
          eiq = {cs * c - sn * (pr * a - pi * b), cs * dd - sn * (pr * b + pi * a)};
        }
        for (long i = 0; i < m; ++i) {
          std::complex<double>& epi = at(p, i);
          std::complex<double>& eqi = at(q, i);
          double a = epi.real(), b = epi.imag();
          double c = eqi.real(), dd = eqi.imag();
          epi = {cs * a + sn * (pr * c - pi * dd), cs * b + sn * (pr * dd + pi * c)};
          eqi = {cs * c - sn * (pr * a + pi * b), cs * dd - sn * (pr * b - pi * a)};
        }
        // Clean the rotated pair: exact Hermitian form of the 2x2 result.
        double hpp = cs * cs * app + sn * sn * aqq + 2.0 * cs * sn * mag;
        double hqq = sn * sn * app + cs * cs * aqq - 2.0 * cs * sn * mag;
        at(p, p) = hpp;
        at(q, q) = hqq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
      }
    }
  }
  throw std::runtime_error("jacobi_hermitian: no convergence within 100 sweeps");
}

std::vector<std::complex<double>> gram_matrix(const ComplexMatrix& x) {
  const long m = x.rows, n = x.cols;
  std::vector<std::complex<double>> h(m * m);
  for (long i = 0; i < m; ++i) {
    for (long j = i; j < m; ++j) {
      double re = 0.0, im = 0.0;
      const std::complex<double>* xi = &x.data[i * n];
      const std::complex<double>* xj = &x.data[j * n];
      for (long k = 0; k < n; ++k) {
        re += xi[k].real() * xj[k].real() + xi[k].imag() * xj[k].imag();
        im += xi[k].imag() * xj[k].real() - xi[k].real() * xj[k].imag();
      }
      h[i * m + j] = {re, im};
      h[j * m + i] = {re, -im};
    }
  }
  return h;
}

}  // namespace

EigenSpectrum wishart_eigenvalues(const ComplexMatrix& x) {
  if (x.rows > x.cols) throw std::invalid_argument("wishart_eigenvalues: need m <= n");
  auto h = gram_matrix(x);
  std::vector<double> eig = jacobi_hermitian(h, x.rows);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  for (double& v : eig) {
    if (v < 0.0 && v > -1e-14) v = 0.0;
  }
  return {std::move(eig), false};
}

EigenSpectrum fixed_trace_eigenvalues(const ComplexMatrix& x) {
  EigenSpectrum spec = wishart_eigenvalues(x);
  double trace = 0.0;
  for (double v : spec.values) trace += v;
  if (!(trace > 0.0)) throw std::runtime_error("fixed_trace_eigenvalues: zero trace");
  for (double& v : spec.values) v /= trace;
  spec.normalized = true;
  return spec;
}

double entropy_S(const EigenSpectrum& spec) {
  if (!spec.normalized) throw std::invalid_argument("entropy_S: spectrum not normalized");
  double s = 0.0;
  for (double lam : spec.values) {
    if (lam > 0.0) s -= lam * std::log(lam);
  }
  return s;
}

double induced_T(const EigenSpectrum& spec) {
  if (spec.normalized) throw std::invalid_argument("induced_T: wants the raw spectrum");
  double t = 0.0;
  for (double theta : spec.values) {
    if (theta > 0.0) t += theta * std::log(theta);
  }
  return t;
}

void BatchMoments::add(double x) {
  ++count;
  s1 += x;
  double x2 = x * x;
  s2 += x2;
  s3 += x2 * x;
  s4 += x2 * x2;
}

void BatchMoments::merge(const BatchMoments& o) {
  count += o.count;
  s1 += o.s1;
  s2 += o.s2;
  s3 += o.s3;
  s4 += o.s4;
}

SampleStats::SampleStats(long batch_count)
    : batches_(batch_count),
      min_(std::numeric_limits<double>::infinity()),
      max_(-std::numeric_limits<double>::infinity()) {
  if (batch_count < 1) throw std::invalid_argument("SampleStats: need >= 1 batch");
}

long SampleStats::count() const {
  long c = 0;
  for (const auto& b : batches_) c += b.count;
  return c;
}

double SampleStats::sum_power(int p) const {
  double s = 0.0;
  for (const auto& b : batches_) {
    switch (p) {
      case 1: s += b.s1; break;
      case 2: s += b.s2; break;
      case 3: s += b.s3; break;
      case 4: s += b.s4; break;
      default: throw std::invalid_argument("SampleStats: power must be 1..4");
    }
  }
  return s;
}

void SampleStats::add(long batch_index, double x) {
  batches_.at(batch_index).add(x);
  min_ = std::min(min_, x);
  max_ = std::max(max_, x);
}

void SampleStats::merge(const SampleStats& o) {
  if (o.batch_count() != batch_count()) {
    throw std::invalid_argument("SampleStats::merge: batch layouts differ");
  }
  for (long i = 0; i < batch_count(); ++i) batches_[i].merge(o.batches_[i]);
  min_ = std::min(min_, o.min_);
  max_ = std::max(max_, o.max_);
}

namespace {

// k-statistics (unbiased cumulant estimators) from raw power sums.
void k_stats(long n, double s1, double s2, double s3, double& k1, double& k2,
             double& k3) {
  double dn = static_cast<double>(n);
  k1 = s1 / dn;
  k2 = (dn * s2 - s1 * s1) / (dn * (dn - 1));
  k3 = (2 * s1 * s1 * s1 - 3 * dn * s1 * s2 + dn * dn * s3) /
       (dn * (dn - 1) * (dn - 2));
}

}  // namespace

CumulantEstimates empirical_cumulants(const SampleStats& stats) {
  const long n = stats.count();
  if (n < 10) throw std::invalid_argument("empirical_cumulants: need >= 10 samples");
  CumulantEstimates est{};
  k_stats(n, stats.sum_power(1), stats.sum_power(2), stats.sum_power(3), est.k1,
          est.k2, est.k3);
  // Standard errors from per-batch k-statistics; undefined (NaN) when any
  // batch holds fewer than 3 samples.
  const long B = stats.batch_count();
  double m1 = 0, m2 = 0, m3 = 0;
  std::vector<double> b1(B), b2(B), b3(B);
  for (long i = 0; i < B; ++i) {
    const BatchMoments& b = stats.batches()[i];
    if (b.count < 3) {
      est.se1 = est.se2 = est.se3 = std::numeric_limits<double>::quiet_NaN();
      return est;
    }
    k_stats(b.count, b.s1, b.s2, b.s3, b1[i], b2[i], b3[i]);
    m1 += b1[i];
    m2 += b2[i];
    m3 += b3[i];
  }
  m1 /= B;
  m2 /= B;
  m3 /= B;
  double v1 = 0, v2 = 0, v3 = 0;
  for (long i = 0; i < B; ++i) {
    v1 += (b1[i] - m1) * (b1[i] - m1);
    v2 += (b2[i] - m2) * (b2[i] - m2);
    v3 += (b3[i] - m3) * (b3[i] - m3);
  }
  est.se1 = std::sqrt(v1 / (B - 1) / B);
  est.se2 = std::sqrt(v2 / (B - 1) / B);
  est.se3 = std::sqrt(v3 / (B - 1) / B);
  return est;
}

SampleStats run_batch(const Dims& d, long samples, std::uint64_t seed, int threads,
                      std::vector<double>* collect) {
  const long B = SampleStats::kDefaultBatches;
  if (samples < B) throw std::invalid_argument("run_batch: need samples >= 100");
  if (collect) collect->assign(samples, 0.0);

  const long base = samples / B, extra = samples % B;
  auto batch_size = [&](long b) { return base + (b < extra ? 1 : 0); };
  auto batch_offset = [&](long b) { return b * base + std::min(b, extra); };

  std::vector<SampleStats> partial(B, SampleStats(B));
  std::atomic<long> next{0};
  auto worker = [&] {
    for (;;) {
      long b = next.fetch_add(1);
      if (b >= B) return;
      SplitRng rng(seed, static_cast<std::uint64_t>(b));
      const long size = batch_size(b), offset = batch_offset(b);
      for (long i = 0; i < size; ++i) {
        ComplexMatrix x = sample_ginibre(d, rng);
        double s = entropy_S(fixed_trace_eigenvalues(x));
        partial[b].add(b, s);
        if (collect) (*collect)[offset + i] = s;
      }
    }
  };
  int nthreads = std::max(1, threads);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  SampleStats stats(B);
  for (long b = 0; b < B; ++b) stats.merge(partial[b]);
  return stats;
}

}  // namespace vnskew
