#include "rmt/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "rmt/linalg.hpp"
#include "rmt/specialfun.hpp"

namespace rmt::combinatorics {

namespace {

void check_size(int n, const char* who) {
  if (n < 0) throw DomainError(std::string(who) + ": negative size");
}

using Wide = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<60>,
                                           boost::multiprecision::et_off>;

void partitions_with_hooks(int n, std::vector<int>& parts, int max_part, int remaining,
                           std::vector<long double>& out, long double log_nfact) {
  if (remaining == 0) {
    // Hook lengths from the conjugate partition.
    const int rows = static_cast<int>(parts.size());
    std::vector<int> conj(static_cast<std::size_t>(parts[0]), 0);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < parts[static_cast<std::size_t>(r)]; ++c) ++conj[static_cast<std::size_t>(c)];
    long double log_hooks = 0;
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < parts[static_cast<std::size_t>(r)]; ++c) {
        const int hook = (parts[static_cast<std::size_t>(r)] - c - 1) +
                         (conj[static_cast<std::size_t>(c)] - r - 1) + 1;
        log_hooks += std::log(static_cast<long double>(hook));
      }
    // f_lambda^2 / N! = N! / prod(h)^2
    out[static_cast<std::size_t>(parts[0] - 1)] += std::exp(log_nfact - 2 * log_hooks);
    return;
  }
  for (int p = std::min(max_part, remaining); p >= 1; --p) {
    parts.push_back(p);
    partitions_with_hooks(n, parts, p, remaining - p, out, log_nfact);
    parts.pop_back();
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const std::size_t n = image_.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : image_) {
    if (v < 1 || static_cast<std::size_t>(v) > n)
      throw InputError("Permutation: value " + std::to_string(v) + " outside 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(v)])
      throw InputError("Permutation: duplicate value " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  check_size(n, "Permutation::identity");
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  Permutation p;
  p.image_ = std::move(img);
  return p;
}

Permutation Permutation::reversed(int n) {
  Permutation p = identity(n);
  std::reverse(p.image_.begin(), p.image_.end());
  return p;
}

Permutation Permutation::random(int n, Rng& rng) {
  Permutation p = identity(n);
  for (std::size_t i = p.image_.size(); i > 1; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(p.image_[i - 1], p.image_[pick(rng)]);
  }
  return p;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw DomainError("Permutation::compose: size mismatch");
  Permutation p;
  p.image_.resize(size());
  for (std::size_t i = 0; i < size(); ++i)
    p.image_[i] = image_[static_cast<std::size_t>(other.image_[i] - 1)];
  return p;
}

bool Permutation::is_involution() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (image_[static_cast<std::size_t>(image_[i] - 1)] != static_cast<int>(i + 1)) return false;
  return true;
}

std::size_t Permutation::fixed_points() const {
  std::size_t k = 0;
  for (std::size_t i = 0; i < size(); ++i)
    if (image_[i] == static_cast<int>(i + 1)) ++k;
  return k;
}

void PileState::place(int card) {
  const auto it = std::upper_bound(tops.begin(), tops.end(), card);
  if (it == tops.end()) {
    tops.push_back(card);
    piles.push_back({card});
  } else {
    const auto idx = static_cast<std::size_t>(it - tops.begin());
    *it = card;
    piles[idx].push_back(card);
  }
#ifndef NDEBUG
  for (std::size_t i = 1; i < tops.size(); ++i)
    if (!(tops[i - 1] < tops[i])) throw NumericalError("PileState: tops lost strict order");
#endif
}

PatienceResult patience_sort(const Permutation& p) {
  PatienceResult r;
  for (int card : p.image()) r.final_state.place(card);
  r.pile_count = static_cast<int>(r.final_state.pile_count());
  return r;
}

PatienceResult patience_sort(std::span<const int> cards) {
  std::vector<int> sorted(cards.begin(), cards.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("patience_sort: duplicate card values");
  PatienceResult r;
  for (int card : cards) r.final_state.place(card);
  r.pile_count = static_cast<int>(r.final_state.pile_count());
  return r;
}

int lis_length(std::span<const int> values) {
  std::vector<int> tops;
  tops.reserve(64);
  for (int v : values) {
    const auto it = std::lower_bound(tops.begin(), tops.end(), v);
    if (it == tops.end()) {
      tops.push_back(v);
    } else {
      *it = v;
    }
  }
  return static_cast<int>(tops.size());
}

int lis_length(const Permutation& p) { return lis_length(std::span<const int>(p.image())); }

std::vector<int> rsk_shape(const Permutation& p) {
  std::vector<std::vector<int>> rows;
  for (int x : p.image()) {
    int carry = x;
    for (std::size_t r = 0;; ++r) {
      if (r == rows.size()) {
        rows.push_back({carry});
        break;
      }
      auto& row = rows[r];
      const auto it = std::upper_bound(row.begin(), row.end(), carry);
      if (it == row.end()) {
        row.push_back(carry);
        break;
      }
      std::swap(*it, carry);
    }
  }
  std::vector<int> shape;
  shape.reserve(rows.size());
  for (const auto& row : rows) shape.push_back(static_cast<int>(row.size()));
  return shape;
}

LisSimulation simulate_lis(int n, std::size_t trials, std::uint64_t seed, unsigned threads) {
  if (n < 1) throw DomainError("simulate_lis: N must be positive");
  if (trials < 1) throw DomainError("simulate_lis: trials must be positive");
  LisSimulation sim;
  sim.samples.resize(trials);
  parallel_for(trials, threads, [&](std::size_t i) {
    Rng rng = stream_rng(seed, i);
    sim.samples[i] = lis_length(Permutation::random(n, rng));
  });
  std::vector<double> values(sim.samples.begin(), sim.samples.end());
  sim.stats = stats::summarize(values);
  const double centre = 2.0 * std::sqrt(static_cast<double>(n));
  const double scale = std::pow(static_cast<double>(n), 1.0 / 6.0);
  sim.scaled.resize(trials);
  for (std::size_t i = 0; i < trials; ++i) sim.scaled[i] = (values[i] - centre) / scale;
  sim.distribution = stats::EmpiricalDistribution(std::move(values));
  return sim;
}

double log_gessel_toeplitz(int n, double t) {
  if (n < 1) throw DomainError("gessel_toeplitz: n must be positive");
  if (n > 60) throw CapabilityError("gessel_toeplitz: n above 60");
  if (!(t > 0.0)) throw DomainError("gessel_toeplitz: t must be positive");
  if (t > 400.0) throw CapabilityError("gessel_toeplitz: t above 400");
  const Wide z = 2 * sqrt(Wide(t));
  std::vector<Wide> coeff(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) coeff[static_cast<std::size_t>(k)] = specialfun::bessel_i_series<Wide>(k, z);
  const auto un = static_cast<std::size_t>(n);
  std::vector<Wide> a(un * un);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j) a[i * un + j] = coeff[i > j ? i - j : j - i];
  const linalg::LogDet ld = linalg::log_det_lu<Wide>(a, un);
  if (ld.sign <= 0) throw NumericalError("gessel_toeplitz: non-positive determinant");
  return ld.log_abs;
}

double gessel_toeplitz(int n, double t) {
  const double l = log_gessel_toeplitz(n, t);
  if (l > std::log(std::numeric_limits<double>::max()))
    throw RangeError("gessel_toeplitz: determinant overflows a double");
  return std::exp(l);
}

std::vector<std::uint64_t> exact_lis_counts(int n) {
  if (n < 1) throw DomainError("exact_lis_distribution: N must be positive");
  if (n > 9) throw CapabilityError("exact_lis_distribution: N above 9");
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
  do {
    ++counts[static_cast<std::size_t>(lis_length(p) - 1)];
  } while (std::next_permutation(p.begin(), p.end()));
  return counts;
}

std::vector<double> exact_lis_distribution(int n) {
  const auto counts = exact_lis_counts(n);
  const double total = std::accumulate(counts.begin(), counts.end(), 0.0,
                                       [](double s, std::uint64_t c) { return s + static_cast<double>(c); });
  std::vector<double> out(counts.size());
  for (std::size_t k = 0; k < counts.size(); ++k) out[k] = static_cast<double>(counts[k]) / total;
  return out;
}

std::vector<double> plancherel_lis_distribution(int n) {
  if (n < 1) throw DomainError("plancherel_lis_distribution: N must be positive");
  if (n > 60) throw CapabilityError("plancherel_lis_distribution: N above 60");
  std::vector<long double> acc(static_cast<std::size_t>(n), 0);
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(n));
  partitions_with_hooks(n, parts, n, n, acc, std::lgamma(static_cast<long double>(n) + 1));
  return {acc.begin(), acc.end()};
}

Permutation sample_involution(int n, bool fixed_point_free, Rng& rng) {
  if (n < 0) throw DomainError("sample_involution: negative size");
  if (fixed_point_free && n % 2 != 0)
    throw DomainError("sample_involution: a fixed-point-free involution needs even N");
  // ratio[m] = I(m) / I(m - 1), with I(m) = I(m - 1) + (m - 1) I(m - 2).
  std::vector<double> ratio(static_cast<std::size_t>(n) + 1, 1.0);
  for (int m = 2; m <= n; ++m)
    ratio[static_cast<std::size_t>(m)] = 1.0 + (m - 1) / ratio[static_cast<std::size_t>(m - 1)];
  std::vector<int> image(static_cast<std::size_t>(n), 0);
  std::vector<int> unpaired(static_cast<std::size_t>(n));
  std::iota(unpaired.begin(), unpaired.end(), 1);
  // unpaired is kept sorted; its front is the smallest unpaired element.
  while (!unpaired.empty()) {
    const int first = unpaired.front();
    const std::size_t m = unpaired.size();
    bool fixed = false;
    if (!fixed_point_free) {
      std::uniform_real_distribution<double> u(0.0, 1.0);
      fixed = m == 1 || u(rng) < 1.0 / ratio[m];
    }
    if (fixed) {
      image[static_cast<std::size_t>(first - 1)] = first;
      unpaired.erase(unpaired.begin());
      continue;
    }
    std::uniform_int_distribution<std::size_t> pick(1, m - 1);
    const std::size_t j = pick(rng);
    const int partner = unpaired[j];
    image[static_cast<std::size_t>(first - 1)] = partner;
    image[static_cast<std::size_t>(partner - 1)] = first;
    unpaired.erase(unpaired.begin() + static_cast<std::ptrdiff_t>(j));
    unpaired.erase(unpaired.begin());
  }
  return Permutation(std::move(image));
}

}  // namespace rmt::combinatorics
