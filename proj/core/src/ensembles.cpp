#include "rmt/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rmt/painleve.hpp"

namespace rmt::ensembles {

namespace {

double standardized_draw(EntryLaw law, Rng& rng) {
  switch (law) {
    case EntryLaw::gaussian:
      return std::normal_distribution<double>(0.0, 1.0)(rng);
    case EntryLaw::rademacher:
      return (rng() >> 63) ? 1.0 : -1.0;
    case EntryLaw::uniform:
      return std::uniform_real_distribution<double>(-std::numbers::sqrt3, std::numbers::sqrt3)(rng);
  }
  return 0.0;
}

// Householder reduction of a real symmetric matrix (full row-major storage)
// to tridiagonal form; d gets the diagonal and e the off-diagonal.
void tridiagonalize_real(std::vector<double>& a, std::size_t n, std::vector<double>& d,
                         std::vector<double>& e) {
  d.assign(n, 0.0);
  e.assign(n > 0 ? n - 1 : 0, 0.0);
  std::vector<double> v(n), p(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t m = n - k - 1;
    double* row = &a[k * n + k + 1];
    double norm2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) norm2 += row[i] * row[i];
    d[k] = a[k * n + k];
    const double norm = std::sqrt(norm2);
    double tail = norm2 - row[0] * row[0];
    if (tail <= 0.0 || norm == 0.0) {
      e[k] = row[0];
      continue;
    }
    const double alpha = row[0] > 0 ? -norm : norm;
    for (std::size_t i = 0; i < m; ++i) v[i] = row[i];
    v[0] -= alpha;
    const double vnorm2 = v[0] * v[0] + tail;
    const double tau = 2.0 / vnorm2;
    double vp = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double* bi = &a[(k + 1 + i) * n + k + 1];
      double s = 0.0;
      for (std::size_t j = 0; j < m; ++j) s += bi[j] * v[j];
      p[i] = tau * s;
      vp += v[i] * p[i];
    }
    const double kk = 0.5 * tau * vp;
    for (std::size_t i = 0; i < m; ++i) p[i] -= kk * v[i];
    for (std::size_t i = 0; i < m; ++i) {
      double* bi = &a[(k + 1 + i) * n + k + 1];
      const double vi = v[i], wi = p[i];
      for (std::size_t j = 0; j < m; ++j) bi[j] -= vi * p[j] + wi * v[j];
    }
    e[k] = alpha;
  }
  if (n >= 2) {
    d[n - 2] = a[(n - 2) * n + n - 2];
    e[n - 2] = a[(n - 1) * n + n - 2];
  }
  if (n >= 1) d[n - 1] = a[(n - 1) * n + n - 1];
}

// Complex Hermitian reduction with split real/imaginary storage. The
// resulting off-diagonal is made real by a diagonal unitary similarity, so
// only its modulus is kept.
void tridiagonalize_complex(std::vector<double>& re, std::vector<double>& im, std::size_t n,
                            std::vector<double>& d, std::vector<double>& e) {
  d.assign(n, 0.0);
  e.assign(n > 0 ? n - 1 : 0, 0.0);
  std::vector<double> vr(n), vi(n), pr(n), pi(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t m = n - k - 1;
    // Column k below the diagonal is the conjugate of row k right of it.
    const double* rr = &re[k * n + k + 1];
    const double* ri = &im[k * n + k + 1];
    d[k] = re[k * n + k];
    double norm2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) norm2 += rr[i] * rr[i] + ri[i] * ri[i];
    const double x0r = rr[0], x0i = -ri[0];
    const double x0abs = std::hypot(x0r, x0i);
    const double tail = norm2 - x0abs * x0abs;
    const double norm = std::sqrt(norm2);
    if (tail <= 0.0 || norm == 0.0) {
      e[k] = x0abs;
      continue;
    }
    const double ur = x0abs > 0 ? x0r / x0abs : 1.0;
    const double ui = x0abs > 0 ? x0i / x0abs : 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      vr[i] = rr[i];
      vi[i] = -ri[i];
    }
    vr[0] += ur * norm;
    vi[0] += ui * norm;
    const double vnorm2 = (x0abs + norm) * (x0abs + norm) + tail;
    const double tau = 2.0 / vnorm2;
    double vp = 0.0;  // Re(v* p); the imaginary part vanishes
    for (std::size_t i = 0; i < m; ++i) {
      const double* br = &re[(k + 1 + i) * n + k + 1];
      const double* bi = &im[(k + 1 + i) * n + k + 1];
      double sr = 0.0, si = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        sr += br[j] * vr[j] - bi[j] * vi[j];
        si += br[j] * vi[j] + bi[j] * vr[j];
      }
      pr[i] = tau * sr;
      pi[i] = tau * si;
      vp += vr[i] * pr[i] + vi[i] * pi[i];
    }
    const double kk = 0.5 * tau * vp;
    for (std::size_t i = 0; i < m; ++i) {
      pr[i] -= kk * vr[i];
      pi[i] -= kk * vi[i];
    }
    // B -= v w* + w v*
    for (std::size_t i = 0; i < m; ++i) {
      double* br = &re[(k + 1 + i) * n + k + 1];
      double* bi = &im[(k + 1 + i) * n + k + 1];
      const double a1 = vr[i], a2 = vi[i], w1 = pr[i], w2 = pi[i];
      for (std::size_t j = 0; j < m; ++j) {
        br[j] -= a1 * pr[j] + a2 * pi[j] + w1 * vr[j] + w2 * vi[j];
        bi[j] -= a2 * pr[j] - a1 * pi[j] + w2 * vr[j] - w1 * vi[j];
      }
    }
    e[k] = norm;
  }
  if (n >= 2) {
    d[n - 2] = re[(n - 2) * n + n - 2];
    e[n - 2] = std::hypot(re[(n - 1) * n + n - 2], im[(n - 1) * n + n - 2]);
  }
  if (n >= 1) d[n - 1] = re[(n - 1) * n + n - 1];
}

void check_finite(double v) {
  if (!std::isfinite(v)) throw DomainError("eigenvalues: non-finite matrix entry");
}

}  // namespace

const char* to_string(EntryLaw law) {
  switch (law) {
    case EntryLaw::gaussian:
      return "gaussian";
    case EntryLaw::rademacher:
      return "rademacher";
    case EntryLaw::uniform:
      return "uniform";
  }
  return "?";
}

EntryLaw parse_entry_law(const std::string& name) {
  if (name == "gaussian") return EntryLaw::gaussian;
  if (name == "rademacher") return EntryLaw::rademacher;
  if (name == "uniform") return EntryLaw::uniform;
  throw DomainError("unknown entry law '" + name + "' (gaussian, rademacher, uniform)");
}

void EnsembleSpec::validate() const {
  if (beta != 1 && beta != 2 && beta != 4) throw DomainError("ensemble: beta must be 1, 2 or 4");
  if (n < 1) throw DomainError("ensemble: n must be positive");
  if (n > 2000) throw CapabilityError("ensemble: n above 2000");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw DomainError("ensemble: sigma must be positive");
  if (beta == 4 && entry_law != EntryLaw::gaussian)
    throw CapabilityError("ensemble: beta = 4 supports only gaussian entries");
}

std::string EnsembleSpec::tag() const {
  std::string name = entry_law == EntryLaw::gaussian
                         ? (beta == 1 ? "GOE" : beta == 2 ? "GUE" : "GSE")
                         : std::string("wigner-") + to_string(entry_law) + "-beta" +
                               std::to_string(beta);
  return name + " N=" + std::to_string(n);
}

SampledMatrix sample_matrix(const EnsembleSpec& spec, Rng& rng) {
  spec.validate();
  const std::size_t n = static_cast<std::size_t>(spec.n);
  const double s = spec.sigma;
  const double diag_sd = s * std::sqrt(2.0 / spec.beta);
  SampledMatrix m;
  if (spec.beta == 1) {
    m.dim = n;
    m.real.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      m.real[i * n + i] = diag_sd * standardized_draw(spec.entry_law, rng);
      for (std::size_t j = i + 1; j < n; ++j) {
        const double x = s * standardized_draw(spec.entry_law, rng);
        m.real[i * n + j] = x;
        m.real[j * n + i] = x;
      }
    }
    return m;
  }
  m.is_complex = true;
  if (spec.beta == 2) {
    m.dim = n;
    m.complex.assign(n * n, {0.0, 0.0});
    const double part = s / std::numbers::sqrt2;
    for (std::size_t i = 0; i < n; ++i) {
      m.complex[i * n + i] = {diag_sd * standardized_draw(spec.entry_law, rng), 0.0};
      for (std::size_t j = i + 1; j < n; ++j) {
        const double x = part * standardized_draw(spec.entry_law, rng);
        const double y = part * standardized_draw(spec.entry_law, rng);
        m.complex[i * n + j] = {x, y};
        m.complex[j * n + i] = {x, -y};
      }
    }
    return m;
  }
  // Quaternion a + b i + c j + d k as the block [[a + bi, c + di], [-c + di, a - bi]].
  const std::size_t dim = 2 * n;
  m.dim = dim;
  m.complex.assign(dim * dim, {0.0, 0.0});
  auto put = [&](std::size_t r, std::size_t c, std::complex<double> v) {
    m.complex[r * dim + c] = v;
  };
  const double part = s / 2.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = diag_sd * standardized_draw(spec.entry_law, rng);
    put(2 * i, 2 * i, {a, 0.0});
    put(2 * i + 1, 2 * i + 1, {a, 0.0});
    for (std::size_t j = i + 1; j < n; ++j) {
      const double qa = part * standardized_draw(spec.entry_law, rng);
      const double qb = part * standardized_draw(spec.entry_law, rng);
      const double qc = part * standardized_draw(spec.entry_law, rng);
      const double qd = part * standardized_draw(spec.entry_law, rng);
      const std::complex<double> b00{qa, qb}, b01{qc, qd}, b10{-qc, qd}, b11{qa, -qb};
      put(2 * i, 2 * j, b00);
      put(2 * i, 2 * j + 1, b01);
      put(2 * i + 1, 2 * j, b10);
      put(2 * i + 1, 2 * j + 1, b11);
      put(2 * j, 2 * i, std::conj(b00));
      put(2 * j + 1, 2 * i, std::conj(b01));
      put(2 * j, 2 * i + 1, std::conj(b10));
      put(2 * j + 1, 2 * i + 1, std::conj(b11));
    }
  }
  return m;
}

std::vector<double> eigenvalues_tridiagonal(std::vector<double> d, std::vector<double> e) {
  const std::size_t n = d.size();
  if (n == 0) return d;
  if (e.size() + 1 != n) throw DomainError("eigenvalues_tridiagonal: size mismatch");
  e.push_back(0.0);
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m == l) break;
      if (++iter > 30) throw NumericalError("eigenvalues: QL iteration did not converge");
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool deflated = false;
      for (std::size_t i = m; i-- > l;) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (deflated) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (true);
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<double> eigenvalues_symmetric(std::vector<double> a, std::size_t n) {
  if (a.size() != n * n) throw DomainError("eigenvalues_symmetric: size mismatch");
  if (n > 4000) throw CapabilityError("eigenvalues_symmetric: dimension above 4000");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      check_finite(a[i * n + j]);
      a[j * n + i] = a[i * n + j];
    }
  std::vector<double> d, e;
  tridiagonalize_real(a, n, d, e);
  return eigenvalues_tridiagonal(std::move(d), std::move(e));
}

std::vector<double> eigenvalues_hermitian(const std::vector<std::complex<double>>& a,
                                          std::size_t n) {
  if (a.size() != n * n) throw DomainError("eigenvalues_hermitian: size mismatch");
  if (n > 4000) throw CapabilityError("eigenvalues_hermitian: dimension above 4000");
  std::vector<double> re(n * n), im(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const auto v = a[i * n + j];
      check_finite(v.real());
      check_finite(v.imag());
      re[i * n + j] = v.real();
      im[i * n + j] = i == j ? 0.0 : v.imag();
      re[j * n + i] = v.real();
      im[j * n + i] = i == j ? 0.0 : -v.imag();
    }
  std::vector<double> d, e;
  tridiagonalize_complex(re, im, n, d, e);
  return eigenvalues_tridiagonal(std::move(d), std::move(e));
}

SpectrumSample sample_spectrum(const EnsembleSpec& spec, std::uint64_t seed, std::uint64_t index) {
  Rng rng = stream_rng(seed, index);
  SampledMatrix m = sample_matrix(spec, rng);
  SpectrumSample out;
  out.seed = seed;
  out.index = index;
  out.meta = spec.tag();
  if (!m.is_complex) {
    out.values = eigenvalues_symmetric(std::move(m.real), m.dim);
  } else {
    out.values = eigenvalues_hermitian(m.complex, m.dim);
  }
  if (spec.beta == 4) {
    std::vector<double> paired(out.values.size() / 2);
    for (std::size_t i = 0; i < paired.size(); ++i)
      paired[i] = 0.5 * (out.values[2 * i] + out.values[2 * i + 1]);
    out.values = std::move(paired);
  }
  return out;
}

std::vector<SpectrumSample> sample_spectra(const EnsembleSpec& spec, std::uint64_t seed,
                                           std::size_t count, unsigned threads) {
  spec.validate();
  std::vector<SpectrumSample> out(count);
  parallel_for(count, threads, [&](std::size_t i) { out[i] = sample_spectrum(spec, seed, i); });
  return out;
}

double edge_scale(double lambda_max, const EnsembleSpec& spec) {
  const double n = spec.n;
  return (lambda_max - 2.0 * spec.sigma * std::sqrt(n)) * std::pow(n, 1.0 / 6.0) / spec.sigma;
}

double edge_scale(const SpectrumSample& sample, const EnsembleSpec& spec) {
  if (sample.values.empty()) throw InsufficientDataError("edge_scale: empty sample");
  return edge_scale(sample.max(), spec);
}

double edge_limit_cdf(int beta, double s) {
  const double x = beta == 4 ? std::pow(2.0, 1.0 / 6.0) * s : s;
  const auto& sol = painleve::default_pii_solution();
  const double lowest = beta == 4 ? sol.x_end() / std::numbers::sqrt2 : sol.x_end();
  if (x < lowest) return 0.0;
  return painleve::tw_cdf(beta, x, sol);
}

std::vector<double> bulk_spacings(const SpectrumSample& sample, const EnsembleSpec& spec,
                                  double window) {
  if (!(window > 0.0 && window <= 0.5)) throw DomainError("bulk_spacings: window must lie in (0, 0.5]");
  const std::size_t n = sample.values.size();
  const auto lo = static_cast<std::size_t>(std::ceil(0.5 * (1.0 - window) * static_cast<double>(n)));
  const auto hi = static_cast<std::size_t>(std::floor(0.5 * (1.0 + window) * static_cast<double>(n)));
  if (hi <= lo || hi - lo < 10)
    throw InsufficientDataError("bulk_spacings: fewer than 10 eigenvalues in the window");
  const double density = std::sqrt(static_cast<double>(n)) / (std::numbers::pi * spec.sigma);
  std::vector<double> out;
  out.reserve(hi - lo - 1);
  for (std::size_t i = lo; i + 1 < hi; ++i)
    out.push_back((sample.values[i + 1] - sample.values[i]) * density);
  return out;
}

double semicircle_density(double x) {
  if (x <= -1.0 || x >= 1.0) return 0.0;
  return 2.0 / std::numbers::pi * std::sqrt(1.0 - x * x);
}

}  // namespace rmt::ensembles
