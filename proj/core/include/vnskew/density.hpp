#ifndef VNSKEW_DENSITY_HPP
#define VNSKEW_DENSITY_HPP

#include <span>
#include <string>
#include <vector>

namespace vnskew {

/// Probabilists' Hermite polynomial H_k via the recurrence
/// H_{k+1} = x H_k - k H_{k-1}.
double hermite(int k, double x);

/// Standard normal density.
double gaussian_pdf(double x);

/// Gram-Charlier type-A density with a third-cumulant correction:
/// phi(x) (1 + gamma1/6 H_3(x)). Reported as-is (it can dip below zero in
/// far tails for large |gamma1|).
double gram_charlier_pdf(double x, double gamma1);

/// Affine standardization x = (s - k1)/sqrt(k2); rejects k2 <= 0.
std::vector<double> standardize(std::span<const double> samples, double k1,
                                double k2);

/// Gaussian kernel density estimate with Silverman's bandwidth
/// 0.9 min(sigma, IQR/1.34) N^{-1/5}, evaluated on `grid` (binned
/// evaluation). Requires >= 1e4 samples.
std::vector<double> estimate_density(std::span<const double> samples,
                                     std::span<const double> grid);

/// Trapezoid integral of |a - b| over the common grid.
double l1_distance(std::span<const double> grid, std::span<const double> a,
                   std::span<const double> b);

/// Default standardized-entropy grid: 401 points on [-5, 5].
std::vector<double> default_grid();

/// The three Figure curves on a common grid.
struct DensityTable {
  std::vector<double> grid;
  std::vector<double> empirical;
  std::vector<double> gaussian;
  std::vector<double> gram_charlier;
};

DensityTable make_density_table(std::span<const double> standardized_samples,
                                double gamma1, std::vector<double> grid);

/// CSV with header `x,empirical,gaussian,gram_charlier`, one row per grid
/// point, 12 significant digits.
std::string density_table_csv(const DensityTable& table);

}  // namespace vnskew

#endif  // VNSKEW_DENSITY_HPP
