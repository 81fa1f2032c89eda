#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include "rmt/error.hpp"
#include "rmt/stats.hpp"

namespace rmt::spectra {

enum class Format { plain, csv };

struct LoadOptions {
  Format format = Format::plain;
  std::size_t csv_column = 0;  // 0-based column for Format::csv
  char delimiter = ',';
  /// InsufficientDataError below this many distinct values; 0 disables the check.
  std::size_t min_count = 100;
};

struct RawSpectrum {
  std::vector<double> values;  // ascending
  std::string source;
  std::size_t parsed = 0;      // numeric lines read
  std::size_t skipped = 0;     // comment and blank lines
  std::size_t duplicates = 0;  // exact repeats removed
};

/// Reads one value per line ('#' comments and blank lines skipped), sorts and
/// drops exact duplicates. IoError if unreadable; ParseError with the 1-based
/// line number for a non-numeric or non-finite token.
RawSpectrum load_spectrum(const std::string& path, const LoadOptions& options = {});
RawSpectrum parse_spectrum(std::istream& in, const std::string& source,
                           const LoadOptions& options = {});

/// Spectrum of the 0/1 adjacency matrix of an undirected graph given as "u v"
/// lines with 1-based vertices. Repeated eigenvalues are kept. ParseError for an
/// out-of-range vertex or a self-loop; CapabilityError above 4000 vertices.
RawSpectrum adjacency_spectrum(const std::string& path, int n_vertices);
RawSpectrum parse_adjacency(std::istream& in, const std::string& source, int n_vertices);

enum class UnfoldMethod { local_mean, polynomial, given_density };

struct UnfoldOptions {
  UnfoldMethod method = UnfoldMethod::polynomial;
  int window = 21;                // local_mean: odd, >= 5
  int degree = 9;                 // polynomial: in [3, 15]
  std::string density = "zeta";   // given_density: "zeta" or "semicircle"
  double trim = 0.0;              // fraction dropped from each end after mapping, in [0, 0.4]
  /// InsufficientDataError below this many values.
  std::size_t min_count = 100;

  std::string describe() const;
};

/// Parses "local_mean:21", "polynomial:9", "given_density:zeta" and the bare
/// method names. DomainError otherwise.
UnfoldOptions parse_unfold_method(const std::string& text);

struct UnfoldedSpectrum {
  std::vector<double> values;  // ascending, unit mean spacing over the retained window
  std::string method;

  std::vector<double> spacings() const;
  double mean_spacing() const;
};

/// local_mean: each spacing divided by the mean of the `window` spacings around
/// it. polynomial: least-squares Chebyshev fit of the counting function
/// (UnfoldingError if the fit is not increasing). given_density: "zeta" uses the
/// smooth zero count (T/2pi)(log(T/2pi) - 1) + 7/8 for ordinates T;
/// "semicircle" uses N times the semicircle CDF of radius sqrt(2N), matching
/// sigma = 1/sqrt(2). The result is shifted to start at 0 and rescaled to unit
/// mean spacing.
UnfoldedSpectrum unfold(const RawSpectrum& raw, const UnfoldOptions& options);

/// Smooth count of zeta zeros with ordinate in (0, T].
double zeta_smooth_count(double t);

enum class Reference { gaudin, goe_surmise, poisson };

const char* to_string(Reference r);
Reference parse_reference(const std::string& name);
/// Only the GOE surmise is approximate.
bool is_approximate(Reference r);
double reference_cdf(Reference r, double s);
double reference_pdf(Reference r, double s);

struct SpacingReport {
  std::string method;
  Reference reference = Reference::gaudin;
  double ks = 0.0;
  std::size_t n = 0;
  stats::SummaryStats moments;
  std::vector<stats::HistogramBin> histogram;   // 50 bins on [0, 4]
  std::vector<double> reference_density;        // reference pdf at bin centres

  /// {method, reference, approximate, ks, n, moments, histogram:[{lo,hi,count,density}]}
  std::string to_json() const;
  /// bin_lo,bin_hi,density,reference_density
  std::string to_csv() const;
};

SpacingReport spacing_report(const UnfoldedSpectrum& u, Reference reference);

}  // namespace rmt::spectra
