#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "rmt/ensembles.hpp"
#include "rmt/painleve.hpp"
#include "rmt/stats.hpp"

namespace en = rmt::ensembles;
using cplx = std::complex<double>;

namespace {

en::EnsembleSpec make(int beta, int n, en::EntryLaw law = en::EntryLaw::gaussian) {
  en::EnsembleSpec s;
  s.beta = beta;
  s.n = n;
  s.entry_law = law;
  return s;
}

double semicircle_l1(const en::EnsembleSpec& spec, std::size_t draws) {
  const auto samples = en::sample_spectra(spec, rmt::kDefaultSeed, draws);
  const double radius = 2.0 * spec.sigma * std::sqrt(static_cast<double>(spec.n));
  std::vector<double> pooled;
  for (const auto& s : samples)
    for (double v : s.values) pooled.push_back(v / radius);
  constexpr std::size_t bins = 40;
  const auto h = rmt::stats::histogram(pooled, -1.0, 1.0, bins);
  double l1 = 0.0;
  for (const auto& b : h) l1 += std::abs(b.density - en::semicircle_density(0.5 * (b.lo + b.hi))) * (b.hi - b.lo);
  return l1;
}

}  // namespace

TEST(Eigen, SmallExamples) {
  EXPECT_EQ(en::eigenvalues_symmetric({3, 0, 0, 0, 1, 0, 0, 0, 2}, 3), (std::vector<double>{1, 2, 3}));
  const auto two = en::eigenvalues_symmetric({0, 1, 1, 0}, 2);
  EXPECT_NEAR(two[0], -1.0, 1e-15);
  EXPECT_NEAR(two[1], 1.0, 1e-15);
  const auto tri = en::eigenvalues_tridiagonal({2, 2, 2}, {1, 1});
  EXPECT_NEAR(tri[0], 2 - std::numbers::sqrt2, 1e-14);
  EXPECT_NEAR(tri[1], 2.0, 1e-14);
  EXPECT_NEAR(tri[2], 2 + std::numbers::sqrt2, 1e-14);
}

TEST(Eigen, TraceAndFrobeniusInvariance) {
  rmt::Rng rng(42);
  std::normal_distribution<double> g;
  const std::size_t n = 20;
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) a[i * n + j] = a[j * n + i] = g(rng);
  double trace = 0.0, frob = 0.0;
  for (std::size_t i = 0; i < n; ++i) trace += a[i * n + i];
  for (double v : a) frob += v * v;
  const auto ev = en::eigenvalues_symmetric(a, n);
  double sum = 0.0, sq = 0.0;
  for (double v : ev) {
    sum += v;
    sq += v * v;
  }
  EXPECT_NEAR(sum, trace, 1e-10 * std::max(1.0, std::abs(trace)));
  EXPECT_NEAR(sq, frob, 1e-10 * frob);
  for (std::size_t i = 1; i < n; ++i) EXPECT_LE(ev[i - 1], ev[i]);
}

TEST(Eigen, HermitianAgreesWithRealEmbedding) {
  // A = X + iY Hermitian has the spectrum of [[X, -Y], [Y, X]] with every value doubled.
  rmt::Rng rng(7);
  std::normal_distribution<double> g;
  const std::size_t n = 12;
  std::vector<cplx> h(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    h[i * n + i] = g(rng);
    for (std::size_t j = 0; j < i; ++j) {
      h[i * n + j] = {g(rng), g(rng)};
      h[j * n + i] = std::conj(h[i * n + j]);
    }
  }
  std::vector<double> real(4 * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const cplx v = h[i * n + j];
      real[i * 2 * n + j] = v.real();
      real[i * 2 * n + j + n] = -v.imag();
      real[(i + n) * 2 * n + j] = v.imag();
      real[(i + n) * 2 * n + j + n] = v.real();
    }
  }
  const auto ev = en::eigenvalues_hermitian(h, n);
  const auto doubled = en::eigenvalues_symmetric(real, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_NEAR(ev[i], doubled[2 * i], 1e-10);
    EXPECT_NEAR(ev[i], doubled[2 * i + 1], 1e-10);
  }
}

TEST(Eigen, UnitaryConjugationPreservesSpectrum) {
  const std::size_t n = 16;
  rmt::Rng rng = rmt::stream_rng(99, 0);
  std::normal_distribution<double> g;
  // Fixed unitary from Gram-Schmidt on a complex Gaussian matrix.
  std::vector<cplx> u(n * n);
  for (auto& v : u) v = {g(rng), g(rng)};
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t p = 0; p < c; ++p) {
      cplx dot = 0;
      for (std::size_t r = 0; r < n; ++r) dot += std::conj(u[r * n + p]) * u[r * n + c];
      for (std::size_t r = 0; r < n; ++r) u[r * n + c] -= dot * u[r * n + p];
    }
    double norm = 0;
    for (std::size_t r = 0; r < n; ++r) norm += std::norm(u[r * n + c]);
    for (std::size_t r = 0; r < n; ++r) u[r * n + c] /= std::sqrt(norm);
  }
  const auto spec = make(2, static_cast<int>(n));
  std::vector<double> max_a, max_b;
  for (std::uint64_t draw = 0; draw < 500; ++draw) {
    rmt::Rng r = rmt::stream_rng(rmt::kDefaultSeed, draw);
    const auto m = en::sample_matrix(spec, r);
    std::vector<cplx> tmp(n * n, 0.0), conj(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) tmp[i * n + j] += u[i * n + k] * m.complex[k * n + j];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) conj[i * n + j] += tmp[i * n + k] * std::conj(u[j * n + k]);
    const auto a = en::eigenvalues_hermitian(m.complex, n);
    const auto b = en::eigenvalues_hermitian(conj, n);
    for (std::size_t i = 0; i < n; ++i) ASSERT_NEAR(a[i], b[i], 1e-10);
    max_a.push_back(a.back());
    max_b.push_back(b.back());
  }
  const rmt::stats::EmpiricalDistribution ea(max_a);
  EXPECT_LT(rmt::stats::ks_statistic(ea, [&](double x) { return rmt::stats::EmpiricalDistribution(max_b).cdf(x); }),
            1.36 * std::sqrt(2.0 / 500));
}

TEST(Ensembles, GueTwoByTwoQuadraticFormula) {
  const auto spec = make(2, 2);
  for (std::uint64_t draw = 0; draw < 50; ++draw) {
    rmt::Rng r = rmt::stream_rng(11, draw);
    const auto m = en::sample_matrix(spec, r);
    const double a = m.complex[0].real(), d = m.complex[3].real();
    const double b2 = std::norm(m.complex[1]);
    const double mid = 0.5 * (a + d), rad = std::sqrt(0.25 * (a - d) * (a - d) + b2);
    const auto ev = en::eigenvalues_hermitian(m.complex, 2);
    EXPECT_NEAR(ev[0], mid - rad, 1e-13);
    EXPECT_NEAR(ev[1], mid + rad, 1e-13);
  }
}

TEST(Ensembles, EntryVariances) {
  // Off-diagonal variance sigma^2 and diagonal variance 2 sigma^2 / beta.
  for (int beta : {1, 2, 4}) {
    const auto spec = make(beta, 30);
    double off = 0, diag = 0;
    std::size_t n_off = 0, n_diag = 0;
    for (std::uint64_t draw = 0; draw < 200; ++draw) {
      rmt::Rng r = rmt::stream_rng(5, draw);
      const auto m = en::sample_matrix(spec, r);
      const std::size_t dim = m.dim;
      if (beta == 1) {
        for (std::size_t i = 0; i < dim; ++i)
          for (std::size_t j = 0; j <= i; ++j) (i == j ? diag : off) += m.real[i * dim + j] * m.real[i * dim + j];
        n_diag += dim;
        n_off += dim * (dim - 1) / 2;
      } else if (beta == 2) {
        for (std::size_t i = 0; i < dim; ++i)
          for (std::size_t j = 0; j <= i; ++j) (i == j ? diag : off) += std::norm(m.complex[i * dim + j]);
        n_diag += dim;
        n_off += dim * (dim - 1) / 2;
      } else {
        // Quaternion entry (i, j) is the 2x2 block; its squared norm is half the block's Frobenius norm.
        const std::size_t q = dim / 2;
        for (std::size_t i = 0; i < q; ++i) {
          for (std::size_t j = 0; j <= i; ++j) {
            double f = 0;
            for (std::size_t a = 0; a < 2; ++a)
              for (std::size_t b = 0; b < 2; ++b) f += std::norm(m.complex[(2 * i + a) * dim + 2 * j + b]);
            (i == j ? diag : off) += 0.5 * f;
          }
        }
        n_diag += q;
        n_off += q * (q - 1) / 2;
      }
    }
    EXPECT_NEAR(off / n_off, 0.5, 0.03) << beta;
    EXPECT_NEAR(diag / n_diag, 2 * 0.5 / beta, 0.06) << beta;
  }
}

TEST(Ensembles, SymplecticPairsAreDegenerate) {
  const auto spec = make(4, 25);
  rmt::Rng r = rmt::stream_rng(3, 0);
  const auto m = en::sample_matrix(spec, r);
  ASSERT_EQ(m.dim, 50u);
  const auto ev = en::eigenvalues_hermitian(m.complex, m.dim);
  for (std::size_t i = 0; i < 25; ++i) EXPECT_NEAR(ev[2 * i], ev[2 * i + 1], 1e-8);
  const auto sample = en::sample_spectrum(spec, 3, 0);
  ASSERT_EQ(sample.values.size(), 25u);
  for (std::size_t i = 0; i < 25; ++i) EXPECT_NEAR(sample.values[i], ev[2 * i], 1e-8);
}

TEST(Ensembles, DeterministicAcrossThreads) {
  const auto spec = make(1, 60, en::EntryLaw::rademacher);
  const auto a = en::sample_spectra(spec, 17, 12, 1);
  const auto b = en::sample_spectra(spec, 17, 12, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].values, b[i].values);
    EXPECT_EQ(a[i].index, i);
  }
  EXPECT_EQ(en::sample_spectrum(spec, 17, 5).values, a[5].values);
  EXPECT_NE(en::sample_spectrum(spec, 18, 5).values, a[5].values);
}

TEST(Ensembles, Validation) {
  EXPECT_THROW(make(3, 10).validate(), rmt::DomainError);
  EXPECT_THROW(make(2, 0).validate(), rmt::DomainError);
  EXPECT_THROW(make(2, 2001).validate(), rmt::CapabilityError);
  EXPECT_THROW(make(4, 10, en::EntryLaw::rademacher).validate(), rmt::CapabilityError);
  EXPECT_THROW(en::sample_spectrum(make(4, 10, en::EntryLaw::uniform), 1), rmt::CapabilityError);
  EXPECT_THROW(en::parse_entry_law("cauchy"), rmt::DomainError);
  EXPECT_EQ(en::parse_entry_law("rademacher"), en::EntryLaw::rademacher);
}

TEST(EdgeScale, PlugIn) {
  const auto spec = make(2, 64);
  EXPECT_NEAR(en::edge_scale(8.0 * std::numbers::sqrt2, spec), 0.0, 1e-14);
  for (double lh : {-3.0, -0.5, 2.0}) {
    const double lmax = 2 * spec.sigma * std::sqrt(64.0) + spec.sigma * lh / std::pow(64.0, 1.0 / 6.0);
    EXPECT_NEAR(en::edge_scale(lmax, spec), lh, 1e-13);
  }
}

TEST(EdgeScale, LimitCdfConventions) {
  EXPECT_EQ(en::edge_limit_cdf(2, 0.5), rmt::painleve::tw_cdf(2, 0.5));
  EXPECT_EQ(en::edge_limit_cdf(1, -1.0), rmt::painleve::tw_cdf(1, -1.0));
  EXPECT_EQ(en::edge_limit_cdf(4, -1.0), rmt::painleve::tw_cdf(4, -std::pow(2.0, 1.0 / 6.0)));
  EXPECT_EQ(en::edge_limit_cdf(2, -100.0), 0.0);
}

TEST(EdgeScale, LargestEigenvalueLocation) {
  const auto spec = make(2, 400);
  const auto samples = en::sample_spectra(spec, rmt::kDefaultSeed, 500);
  double mean = 0;
  for (const auto& s : samples) mean += s.max() / std::sqrt(400.0);
  mean /= 500;
  EXPECT_NEAR(mean / std::numbers::sqrt2, 1.0, 0.02);
}

TEST(Semicircle, GaussianAndRademacher) {
  EXPECT_LT(semicircle_l1(make(2, 200), 50), 0.05);
  EXPECT_LT(semicircle_l1(make(1, 200, en::EntryLaw::rademacher), 50), 0.05);
  EXPECT_NEAR(en::semicircle_density(0.0), 2.0 / std::numbers::pi, 1e-15);
  EXPECT_EQ(en::semicircle_density(1.5), 0.0);
}

TEST(BulkSpacings, PicketFence) {
  const auto spec = make(2, 100);
  en::SpectrumSample s;
  const double step = std::numbers::pi * spec.sigma / std::sqrt(100.0);
  for (int i = 0; i < 100; ++i) s.values.push_back((i - 50) * step);
  const auto gaps = en::bulk_spacings(s, spec, 0.2);
  ASSERT_GE(gaps.size(), 10u);
  for (double g : gaps) EXPECT_NEAR(g, 1.0, 1e-12);
}

TEST(BulkSpacings, InsufficientWindow) {
  const auto spec = make(2, 20);
  EXPECT_THROW(en::bulk_spacings(en::sample_spectrum(spec, 1), spec, 0.2), rmt::InsufficientDataError);
}

TEST(BulkSpacings, OrthogonalDataRejectsGaudin) {
  const auto spec = make(1, 400);
  const auto samples = en::sample_spectra(spec, rmt::kDefaultSeed, 50);
  std::vector<double> gaps;
  for (const auto& s : samples) {
    const auto g = en::bulk_spacings(s, spec, 0.2);
    gaps.insert(gaps.end(), g.begin(), g.end());
  }
  const auto& law = rmt::painleve::default_gaudin_law();
  EXPECT_GT(rmt::stats::ks_statistic(rmt::stats::EmpiricalDistribution(gaps), [&](double x) { return law.cdf(x); }),
            0.05);
}
