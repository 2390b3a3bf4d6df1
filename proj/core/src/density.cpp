#include "vnskew/density.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace vnskew {

double hermite(int k, double x) {
  if (k < 0) throw std::invalid_argument("hermite: degree must be >= 0");
  double h0 = 1.0;
  if (k == 0) return h0;
  double h1 = x;
  for (int i = 1; i < k; ++i) {
    double h2 = x * h1 - i * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

double gaussian_pdf(double x) {
  return 0.3989422804014326779 * std::exp(-0.5 * x * x);
}

double gram_charlier_pdf(double x, double gamma1) {
  return gaussian_pdf(x) * (1.0 + gamma1 / 6.0 * hermite(3, x));
}

std::vector<double> standardize(std::span<const double> samples, double k1,
                                double k2) {
  if (!(k2 > 0)) throw std::invalid_argument("standardize: k2 must be positive");
  const double inv = 1.0 / std::sqrt(k2);
  std::vector<double> out(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) out[i] = (samples[i] - k1) * inv;
  return out;
}

std::vector<double> estimate_density(std::span<const double> samples,
                                     std::span<const double> grid) {
  const std::size_t n = samples.size();
  if (n < 10000) throw std::invalid_argument("estimate_density: need >= 1e4 samples");

  // Silverman bandwidth.
  double mean = 0.0;
  for (double s : samples) mean += s;
  mean /= n;
  double var = 0.0;
  for (double s : samples) var += (s - mean) * (s - mean);
  var /= (n - 1);
  std::vector<double> sorted(samples.begin(), samples.end());
  std::nth_element(sorted.begin(), sorted.begin() + n / 4, sorted.end());
  double q1 = sorted[n / 4];
  std::nth_element(sorted.begin(), sorted.begin() + (3 * n) / 4, sorted.end());
  double q3 = sorted[(3 * n) / 4];
  double spread = std::min(std::sqrt(var), (q3 - q1) / 1.34);
  double h = 0.9 * spread * std::pow(static_cast<double>(n), -0.2);
  if (!(h > 0)) throw std::invalid_argument("estimate_density: degenerate sample spread");

  // Linear binning, then a kernel pass over the bins.
  auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
  double lo = *lo_it - 1e-9, hi = *hi_it + 1e-9;
  const std::size_t bins = 8192;
  const double width = (hi - lo) / bins;
  std::vector<double> mass(bins + 1, 0.0);
  for (double s : samples) {
    double pos = (s - lo) / width;
    std::size_t b = std::min<std::size_t>(static_cast<std::size_t>(pos), bins - 1);
    double frac = pos - b;
    mass[b] += 1.0 - frac;
    mass[b + 1] += frac;
  }
  const double cutoff = 8.0 * h;
  std::vector<double> out(grid.size(), 0.0);
  for (std::size_t g = 0; g < grid.size(); ++g) {
    double x = grid[g];
    auto first = static_cast<long>(std::floor((x - cutoff - lo) / width));
    auto last = static_cast<long>(std::ceil((x + cutoff - lo) / width));
    first = std::max(first, 0L);
    last = std::min(last, static_cast<long>(bins));
    double acc = 0.0;
    for (long b = first; b <= last; ++b) {
      double center = lo + b * width;
      acc += mass[b] * gaussian_pdf((x - center) / h);
    }
    out[g] = acc / (n * h);
  }
  return out;
}

double l1_distance(std::span<const double> grid, std::span<const double> a,
                   std::span<const double> b) {
  if (grid.size() != a.size() || grid.size() != b.size()) {
    throw std::invalid_argument("l1_distance: grid mismatch");
  }
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    double fa = std::abs(a[i] - b[i]);
    double fb = std::abs(a[i + 1] - b[i + 1]);
    total += 0.5 * (fa + fb) * (grid[i + 1] - grid[i]);
  }
  return total;
}

std::vector<double> default_grid() {
  std::vector<double> g(401);
  for (int i = 0; i < 401; ++i) g[i] = -5.0 + i * 0.025;
  return g;
}

DensityTable make_density_table(std::span<const double> standardized_samples,
                                double gamma1, std::vector<double> grid) {
  DensityTable t;
  t.grid = std::move(grid);
  t.empirical = estimate_density(standardized_samples, t.grid);
  t.gaussian.resize(t.grid.size());
  t.gram_charlier.resize(t.grid.size());
  for (std::size_t i = 0; i < t.grid.size(); ++i) {
    t.gaussian[i] = gaussian_pdf(t.grid[i]);
    t.gram_charlier[i] = gram_charlier_pdf(t.grid[i], gamma1);
  }
  return t;
}

std::string density_table_csv(const DensityTable& table) {
  std::string out = "x,empirical,gaussian,gram_charlier\n";
  char buf[160];
  for (std::size_t i = 0; i < table.grid.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g,%.12g\n", table.grid[i],
                  table.empirical[i], table.gaussian[i], table.gram_charlier[i]);
    out += buf;
  }
  return out;
}

}  // namespace vnskew
