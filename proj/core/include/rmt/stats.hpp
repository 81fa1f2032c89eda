#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "rmt/error.hpp"

namespace rmt::stats {

/// Sorted sample with right-continuous step CDF.
class EmpiricalDistribution {
 public:
  /// InsufficientDataError for an empty sample; DomainError for NaN.
  explicit EmpiricalDistribution(std::vector<double> values);

  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t count() const noexcept { return values_.size(); }
  /// Fraction of samples <= x.
  double cdf(double x) const;
  /// Fraction of samples < x.
  double cdf_left(double x) const;

 private:
  std::vector<double> values_;
};

using Cdf = std::function<double(double)>;

/// sup_x |F_n(x) - F(x)|, evaluated at every jump from both sides.
/// Tied samples form one jump.
double ks_statistic(const EmpiricalDistribution& emp, const Cdf& cdf);

struct SummaryStats {
  double mean = 0.0;
  double sd = 0.0;  // unbiased (n - 1) estimator; 0 for a single value
  double skewness = 0.0;
  double kurtosis_excess = 0.0;
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 0;
};

/// Moments of a sample. Skewness m3 / m2^{3/2} and kurtosis excess m4 / m2^2 - 3
/// use central moments; both are 0 for a constant sample.
SummaryStats summarize(std::span<const double> values);

/// Fraction of values in the closed interval [lo, hi].
double range_probability(std::span<const double> values, double lo, double hi);

struct HistogramBin {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 0;
  double density = 0.0;  // count / (total * width), total includes out-of-range values
};

/// Equal-width bins on [lo, hi); the last bin is closed on the right.
std::vector<HistogramBin> histogram(std::span<const double> values, double lo, double hi,
                                    std::size_t bins);

}  // namespace rmt::stats
