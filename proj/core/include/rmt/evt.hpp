#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "rmt/error.hpp"
#include "rmt/parallel.hpp"
#include "rmt/stats.hpp"

namespace rmt::evt {

enum class EvtKind { gumbel, frechet, weibull };

/// One of the three classical extreme-value laws.
struct EvtLimit {
  EvtKind kind = EvtKind::gumbel;
  double alpha = 1.0;  // shape, used by frechet and weibull

  static EvtLimit gumbel() { return {EvtKind::gumbel, 1.0}; }
  static EvtLimit frechet(double alpha) { return {EvtKind::frechet, alpha}; }
  static EvtLimit weibull(double alpha) { return {EvtKind::weibull, alpha}; }
  std::string name() const;
};

/// gumbel exp(-e^{-x}); frechet exp(-x^{-alpha}) for x > 0, else 0;
/// weibull exp(-(-x)^alpha) for x < 0, else 1. DomainError for alpha <= 0.
double evt_cdf(const EvtLimit& limit, double x);

enum class EntryKind { exponential, uniform01, pareto };

/// Law of the iid diagonal entries.
struct EntryDistribution {
  EntryKind kind = EntryKind::exponential;
  double alpha = 1.0;  // pareto tail index: F(x) = 1 - x^{-alpha} on [1, inf)

  static EntryDistribution exponential() { return {EntryKind::exponential, 1.0}; }
  static EntryDistribution uniform01() { return {EntryKind::uniform01, 1.0}; }
  static EntryDistribution pareto(double alpha) { return {EntryKind::pareto, alpha}; }
  /// "exponential", "uniform01", "pareto" or "pareto:<alpha>".
  static EntryDistribution parse(const std::string& name);

  double cdf(double x) const;
  double sample(Rng& rng) const;
  std::string name() const;
  /// Limit law reached under default_normalization.
  EvtLimit limit() const;
};

/// Centering a_N and scale b_N > 0 applied as (max - a_N) / b_N.
struct EvtNormalization {
  std::function<double(int)> a_n;
  std::function<double(int)> b_n;

  static EvtNormalization identity();
};

/// exponential: a_N = log N, b_N = 1; uniform01: a_N = 1, b_N = 1/N;
/// pareto(alpha): a_N = 0, b_N = N^{1/alpha}.
EvtNormalization default_normalization(const EntryDistribution& entry);

/// Exact CDF of the normalized maximum, F(a_N + b_N x)^N.
double finite_n_cdf(const EntryDistribution& entry, int n, const EvtNormalization& norm, double x);

/// Normalized maxima of N iid entries (the largest eigenvalue of a diagonal
/// matrix) over `trials` draws; trial i uses stream_rng(seed, i).
/// DomainError for N < 2 or trials < 100.
stats::EmpiricalDistribution simulate_diagonal_max(const EntryDistribution& entry, int n,
                                                   std::size_t trials,
                                                   const EvtNormalization& norm,
                                                   std::uint64_t seed, unsigned threads = 0);

}  // namespace rmt::evt
