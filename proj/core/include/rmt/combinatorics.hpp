#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rmt/error.hpp"
#include "rmt/parallel.hpp"
#include "rmt/stats.hpp"

namespace rmt::combinatorics {

/// Bijection of {1, ..., N} stored as its one-line image.
class Permutation {
 public:
  Permutation() = default;
  /// InputError unless `image` is a rearrangement of 1..N.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  static Permutation reversed(int n);
  /// Uniform permutation by the Fisher–Yates shuffle.
  static Permutation random(int n, Rng& rng);

  std::size_t size() const noexcept { return image_.size(); }
  const std::vector<int>& image() const noexcept { return image_; }
  /// sigma(i) for 1-based i.
  int operator()(int i) const { return image_.at(static_cast<std::size_t>(i - 1)); }
  /// (this o other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;
  bool is_involution() const;
  std::size_t fixed_points() const;

 private:
  std::vector<int> image_;
};

/// Piles of patience sorting; each pile decreases from bottom to top and the
/// tops increase from left to right.
struct PileState {
  std::vector<std::vector<int>> piles;
  std::vector<int> tops;

  /// Leftmost pile whose top exceeds `card`, else a new pile on the right.
  void place(int card);
  std::size_t pile_count() const noexcept { return piles.size(); }
};

struct PatienceResult {
  int pile_count = 0;
  PileState final_state;
};

PatienceResult patience_sort(const Permutation& p);
/// Plays an arbitrary sequence of distinct cards; InputError on duplicates.
PatienceResult patience_sort(std::span<const int> cards);

/// Longest strictly increasing subsequence of distinct values, O(N log N).
int lis_length(std::span<const int> values);
int lis_length(const Permutation& p);

/// Shape of the RSK tableaux (row insertion), weakly decreasing.
std::vector<int> rsk_shape(const Permutation& p);

struct LisSimulation {
  stats::SummaryStats stats;
  stats::EmpiricalDistribution distribution{std::vector<double>{0.0}};
  std::vector<int> samples;      // l_N per trial, in trial order
  std::vector<double> scaled;    // (l_N - 2 sqrt(N)) / N^{1/6}
};

/// Trial i shuffles with stream_rng(seed, i); results do not depend on threads.
LisSimulation simulate_lis(int n, std::size_t trials, std::uint64_t seed, unsigned threads = 0);

/// det[I_{i-j}(2 sqrt t)]_{i,j<n}, the Toeplitz determinant of the symbol
/// exp(sqrt t (z + 1/z)). Requires 1 <= n <= 60 and 0 < t <= 400; RangeError if
/// the result overflows a double.
double gessel_toeplitz(int n, double t);
/// log of the same determinant.
double log_gessel_toeplitz(int n, double t);

/// Prob(l_N = k) for k = 1..N (index k - 1) by enumerating all N! permutations.
/// CapabilityError for N > 9.
std::vector<double> exact_lis_distribution(int n);

/// Number of permutations of size N with l_N = k (index k - 1), by enumeration.
std::vector<std::uint64_t> exact_lis_counts(int n);

/// Prob(l_N = k) from the hook-length formula summed over partitions of N with
/// first part k. CapabilityError for N > 60.
std::vector<double> plancherel_lis_distribution(int n);

/// Uniform random involution of {1..N}; uniform perfect matching when
/// fixed_point_free (DomainError for odd N).
Permutation sample_involution(int n, bool fixed_point_free, Rng& rng);

}  // namespace rmt::combinatorics
