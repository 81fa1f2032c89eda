#include "rmt/stats.hpp"

#include <algorithm>
#include <cmath>

namespace rmt::stats {

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty()) throw InsufficientDataError("EmpiricalDistribution: empty sample");
  for (double v : values_)
    if (std::isnan(v)) throw DomainError("EmpiricalDistribution: NaN sample");
  std::sort(values_.begin(), values_.end());
}

double EmpiricalDistribution::cdf(double x) const {
  const auto it = std::upper_bound(values_.begin(), values_.end(), x);
  return static_cast<double>(it - values_.begin()) / static_cast<double>(values_.size());
}

double EmpiricalDistribution::cdf_left(double x) const {
  const auto it = std::lower_bound(values_.begin(), values_.end(), x);
  return static_cast<double>(it - values_.begin()) / static_cast<double>(values_.size());
}

double ks_statistic(const EmpiricalDistribution& emp, const Cdf& cdf) {
  const auto& v = emp.values();
  const double n = static_cast<double>(v.size());
  double d = 0.0;
  std::size_t i = 0;
  while (i < v.size()) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    const double f = cdf(v[i]);
    const double below = static_cast<double>(i) / n;
    const double at = static_cast<double>(j) / n;
    d = std::max({d, std::abs(f - below), std::abs(at - f)});
    i = j;
  }
  return d;
}

SummaryStats summarize(std::span<const double> values) {
  SummaryStats s;
  s.count = values.size();
  if (values.empty()) throw InsufficientDataError("summarize: empty sample");
  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  s.min = values[0];
  s.max = values[0];
  for (double v : values) {
    sum += v;
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
  }
  s.mean = sum / n;
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : values) {
    const double d = v - s.mean;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  if (values.size() > 1) s.sd = std::sqrt(m2 / (n - 1.0));
  m2 /= n;
  m3 /= n;
  m4 /= n;
  if (m2 > 0.0) {
    s.skewness = m3 / std::pow(m2, 1.5);
    s.kurtosis_excess = m4 / (m2 * m2) - 3.0;
  }
  return s;
}

double range_probability(std::span<const double> values, double lo, double hi) {
  if (values.empty()) throw InsufficientDataError("range_probability: empty sample");
  std::size_t inside = 0;
  for (double v : values)
    if (v >= lo && v <= hi) ++inside;
  return static_cast<double>(inside) / static_cast<double>(values.size());
}

std::vector<HistogramBin> histogram(std::span<const double> values, double lo, double hi,
                                    std::size_t bins) {
  if (bins == 0 || !(lo < hi)) throw DomainError("histogram: need bins > 0 and lo < hi");
  std::vector<HistogramBin> out(bins);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    out[b].lo = lo + width * static_cast<double>(b);
    out[b].hi = (b + 1 == bins) ? hi : lo + width * static_cast<double>(b + 1);
  }
  for (double v : values) {
    if (!(v >= lo && v <= hi)) continue;
    auto b = static_cast<std::size_t>((v - lo) / width);
    if (b >= bins) b = bins - 1;
    ++out[b].count;
  }
  const double total = static_cast<double>(values.size());
  for (auto& bin : out)
    bin.density = total > 0 ? static_cast<double>(bin.count) / (total * (bin.hi - bin.lo)) : 0.0;
  return out;
}

}  // namespace rmt::stats
