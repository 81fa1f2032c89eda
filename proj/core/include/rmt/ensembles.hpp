#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "rmt/error.hpp"
#include "rmt/parallel.hpp"

namespace rmt::ensembles {

enum class EntryLaw { gaussian, rademacher, uniform };

const char* to_string(EntryLaw law);
/// Accepts "gaussian", "rademacher", "uniform"; DomainError otherwise.
EntryLaw parse_entry_law(const std::string& name);

/// Wigner-type ensemble: off-diagonal entries of standard deviation sigma,
/// diagonal entries of variance 2 sigma^2 / beta.
struct EnsembleSpec {
  int beta = 2;
  int n = 100;
  EntryLaw entry_law = EntryLaw::gaussian;
  double sigma = 0.70710678118654752440;

  /// DomainError for a bad beta, n or sigma; CapabilityError for n > 2000 or a
  /// non-gaussian law with beta = 4.
  void validate() const;
  std::string tag() const;
};

struct SpectrumSample {
  std::vector<double> values;  // ascending
  std::string meta;
  std::uint64_t seed = 0;
  std::uint64_t index = 0;

  double max() const { return values.back(); }
};

/// A sampled matrix, row-major. Real symmetric for beta = 1, complex
/// Hermitian otherwise (dimension 2n for beta = 4).
struct SampledMatrix {
  std::size_t dim = 0;
  bool is_complex = false;
  std::vector<double> real;
  std::vector<std::complex<double>> complex;
};

SampledMatrix sample_matrix(const EnsembleSpec& spec, Rng& rng);

/// Eigenvalues of a real symmetric row-major matrix (only the lower triangle is
/// read), ascending. Householder tridiagonalization followed by implicit QL.
/// NumericalError after 30 QL sweeps on one eigenvalue.
std::vector<double> eigenvalues_symmetric(std::vector<double> a, std::size_t n);

/// Eigenvalues of a complex Hermitian row-major matrix, ascending.
std::vector<double> eigenvalues_hermitian(const std::vector<std::complex<double>>& a,
                                          std::size_t n);

/// Eigenvalues of a symmetric tridiagonal matrix (diagonal d, off-diagonal e
/// with e.size() == d.size() - 1), ascending.
std::vector<double> eigenvalues_tridiagonal(std::vector<double> d, std::vector<double> e);

/// Spectrum of one draw; the stream is stream_rng(seed, index). For beta = 4
/// the doubled eigenvalues are paired and averaged.
SpectrumSample sample_spectrum(const EnsembleSpec& spec, std::uint64_t seed,
                               std::uint64_t index = 0);

/// Draws 0 .. count-1, in draw order, computed on `threads` workers (0 = auto).
std::vector<SpectrumSample> sample_spectra(const EnsembleSpec& spec, std::uint64_t seed,
                                           std::size_t count, unsigned threads = 0);

/// Inverse of lambda_max = 2 sigma sqrt(N) + sigma lambda_hat / N^{1/6}.
double edge_scale(double lambda_max, const EnsembleSpec& spec);
double edge_scale(const SpectrumSample& sample, const EnsembleSpec& spec);

/// Limiting CDF of edge_scale for the given beta. For beta = 1, 2 this is
/// F_beta(s). The quaternion realization with the variance convention above
/// has lambda_hat -> 2^{-1/6} X with X ~ F_4, so beta = 4 returns F_4(2^{1/6} s).
double edge_limit_cdf(int beta, double s);

/// Consecutive spacings of the central `window` fraction of the spectrum (by
/// index), multiplied by the semicircle density at the origin,
/// sqrt(N) / (pi sigma) with N the sample size.
/// InsufficientDataError when fewer than 10 eigenvalues fall in the window.
std::vector<double> bulk_spacings(const SpectrumSample& sample, const EnsembleSpec& spec,
                                  double window = 0.2);

/// Semicircle density (2 / pi) sqrt(1 - x^2) on [-1, 1].
double semicircle_density(double x);

}  // namespace rmt::ensembles
