#include "rmt/painleve.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "rmt/linalg.hpp"
#include "rmt/specialfun.hpp"

namespace rmt::painleve {

namespace {

using Real = long double;
constexpr double kPi = std::numbers::pi;
constexpr int kOrder = 24;

void check_tol(double tol, const char* who) {
  if (!(tol >= 1e-12 && tol <= 1e-6))
    throw DomainError(std::string(who) + ": tol must lie in [1e-12, 1e-6]");
}

void check_beta(int beta) {
  if (beta != 1 && beta != 2 && beta != 4) throw DomainError("beta must be 1, 2 or 4");
}

// Quintic Hermite interpolation on [0, h] from value, first and second
// derivative at both ends.
double quintic(double t, double h, double f0, double d0, double s0, double f1, double d1,
               double s1) {
  const double t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
  const double h0 = 1 - 10 * t3 + 15 * t4 - 6 * t5;
  const double h1 = t - 6 * t3 + 8 * t4 - 3 * t5;
  const double h2 = 0.5 * (t2 - 3 * t3 + 3 * t4 - t5);
  const double h3 = 0.5 * (t3 - 2 * t4 + t5);
  const double h4 = -4 * t3 + 7 * t4 - 3 * t5;
  const double h5 = 10 * t3 - 15 * t4 + 6 * t5;
  return f0 * h0 + h * d0 * h1 + h * h * s0 * h2 + h * h * s1 * h3 + h * d1 * h4 + f1 * h5;
}

// ---------------------------------------------------------------------------
// Painleve II

struct PiiVec {
  Real q, dq, i, k, j;
};

// Taylor coefficients of (q, I, K, J) about x0 for q'' = x q + 2 q^3,
// I' = -q, K' = -q^2, J' = -K.
struct PiiTaylor {
  std::array<Real, kOrder + 1> a{}, sq{}, cube{}, i{}, k{}, j{};

  void expand(Real x0, const PiiVec& s) {
    a.fill(0);
    a[0] = s.q;
    a[1] = s.dq;
    i[0] = s.i;
    k[0] = s.k;
    j[0] = s.j;
    for (int n = 0; n <= kOrder; ++n) {
      Real s2 = 0, s3 = 0;
      for (int m = 0; m <= n; ++m) s2 += a[m] * a[n - m];
      sq[n] = s2;
      for (int m = 0; m <= n; ++m) s3 += sq[m] * a[n - m];
      cube[n] = s3;
      if (n + 2 <= kOrder)
        a[n + 2] = (x0 * a[n] + (n >= 1 ? a[n - 1] : 0) + 2 * cube[n]) / ((n + 1) * (n + 2));
      if (n + 1 <= kOrder) {
        i[n + 1] = -a[n] / (n + 1);
        k[n + 1] = -sq[n] / (n + 1);
        j[n + 1] = -k[n] / (n + 1);
      }
    }
  }

  static Real horner(const std::array<Real, kOrder + 1>& c, Real h) {
    Real v = 0;
    for (int n = kOrder; n >= 0; --n) v = v * h + c[n];
    return v;
  }

  PiiVec eval(Real h) const {
    Real dq = 0;
    for (int n = kOrder; n >= 1; --n) dq = dq * h + n * a[n];
    return {horner(a, h), dq, horner(i, h), horner(k, h), horner(j, h)};
  }

  Real error(Real h) const {
    const Real ah = std::abs(h);
    return std::abs(a[kOrder]) * std::pow(ah, kOrder) +
           std::abs(a[kOrder - 1]) * std::pow(ah, kOrder - 1);
  }
};

PiiVec march(Real x, PiiVec s, Real h, Real tol) {
  PiiTaylor t;
  Real done = 0;
  while (std::abs(done) < std::abs(h)) {
    Real step = h - done;
    t.expand(x + done, s);
    const Real scale = std::abs(s.q) + std::abs(step * s.dq) + 1e-300L;
    int halvings = 0;
    while (t.error(step) > tol * scale) {
      step /= 2;
      if (++halvings > 60)
        throw InstabilityError("solve_pii: step size underflow approaching a pole near x = " +
                                   std::to_string(static_cast<double>(x + done)),
                               static_cast<double>(x + done));
    }
    s = t.eval(step);
    done += step;
  }
  return s;
}

// Airy data used for the initial state and for abscissae above the table.
PiiVec airy_tail(double x, double scale) {
  const auto v = specialfun::airy(x);
  const double ai = scale * v.ai;
  const double aip = scale * v.ai_prime;
  const auto rule = specialfun::gauss_legendre(80, x, x + 16.0);
  const double iq = scale * rule.integrate([](double u) { return specialfun::airy(u).ai; });
  const double k = aip * aip - x * ai * ai;
  const double j = (2 * x * x * ai * ai - 2 * x * aip * aip - ai * aip) / 3.0;
  return {ai, aip, iq, k, j};
}

double hm_asymptotic(double x) {
  const double u = 1.0 / (x * x * x);
  const double series =
      1 + u * (1.0 / 8 + u * (-73.0 / 128 + u * (10657.0 / 1024 + u * (-13912277.0 / 32768))));
  return std::sqrt(-x / 2) * series;
}

// Chebyshev collocation for q on [xl, xr] with Dirichlet data at both ends.
struct ChebSolution {
  std::vector<double> x, q, dq, bary;

  double interp(const std::vector<double>& f, double t) const {
    double num = 0, den = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      const double d = t - x[j];
      if (d == 0.0) return f[j];
      const double w = bary[j] / d;
      num += w * f[j];
      den += w;
    }
    return num / den;
  }
};

ChebSolution solve_bvp(double xl, double xr, double ql, double qr, int n) {
  const std::size_t m = static_cast<std::size_t>(n) + 1;
  std::vector<double> t(m), x(m), c(m, 1.0);
  for (std::size_t j = 0; j < m; ++j) {
    t[j] = std::cos(kPi * static_cast<double>(j) / n);
    x[j] = 0.5 * (xr + xl) + 0.5 * (xr - xl) * t[j];
  }
  c[0] = c[m - 1] = 2.0;
  std::vector<double> d(m * m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    double row = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      const double sgn = ((i + j) % 2 == 0) ? 1.0 : -1.0;
      d[i * m + j] = c[i] / c[j] * sgn / (t[i] - t[j]) * 2.0 / (xr - xl);
      row += d[i * m + j];
    }
    d[i * m + i] = -row;
  }
  std::vector<double> d2(m * m, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      const double dik = d[i * m + k];
      for (std::size_t j = 0; j < m; ++j) d2[i * m + j] += dik * d[k * m + j];
    }

  std::vector<double> q(m);
  const double off_r = qr - std::sqrt(-xr / 2);
  const double off_l = ql - std::sqrt(-xl / 2);
  for (std::size_t j = 0; j < m; ++j) {
    const double w = 0.5 * (t[j] + 1.0);
    q[j] = std::sqrt(-x[j] / 2) + w * off_r + (1 - w) * off_l;
  }
  std::vector<double> jac(m * m), rhs(m);
  bool converged = false;
  for (int iter = 0; iter < 60 && !converged; ++iter) {
    for (std::size_t i = 0; i < m; ++i) {
      if (i == 0 || i == m - 1) {
        std::fill(jac.begin() + i * m, jac.begin() + (i + 1) * m, 0.0);
        jac[i * m + i] = 1.0;
        rhs[i] = -(q[i] - (i == 0 ? qr : ql));
        continue;
      }
      double r = 0;
      for (std::size_t j = 0; j < m; ++j) {
        jac[i * m + j] = d2[i * m + j];
        r += d2[i * m + j] * q[j];
      }
      r -= x[i] * q[i] + 2 * q[i] * q[i] * q[i];
      jac[i * m + i] -= x[i] + 6 * q[i] * q[i];
      rhs[i] = -r;
    }
    if (!linalg::lu_solve(jac, rhs, m)) throw SolverError("solve_pii: singular collocation system");
    double step = 0, size = 0;
    for (std::size_t j = 0; j < m; ++j) {
      q[j] += rhs[j];
      step = std::max(step, std::abs(rhs[j]));
      size = std::max(size, std::abs(q[j]));
    }
    converged = step <= 1e-14 * size;
  }
  if (!converged) throw SolverError("solve_pii: collocation Newton iteration did not converge");

  ChebSolution s;
  s.x = x;
  s.q = q;
  s.dq.assign(m, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) s.dq[i] += d[i * m + j] * q[j];
  s.bary.resize(m);
  for (std::size_t j = 0; j < m; ++j)
    s.bary[j] = ((j % 2 == 0) ? 1.0 : -1.0) * ((j == 0 || j == m - 1) ? 0.5 : 1.0);
  return s;
}

// ---------------------------------------------------------------------------
// sigma form of Painleve V
//
// Differentiating (x s'')^2 + 4 A (A + s'^2) = 0, A = x s' - s, and dividing
// by 2 s'' gives the regular third-order equation
//   x^2 s''' = -x s'' - 2 x s'^2 - 4 x A - 4 A s'.

struct SigmaVec {
  Real s, ds, dds, logdet;
};

struct SigmaTaylor {
  // s(x0 + h) = sum c[n] h^n; L(x0 + h) = sum l[n] h^n.
  std::array<Real, kOrder + 1> c{}, l{};

  void expand(Real x0, const SigmaVec& v) {
    c.fill(0);
    l.fill(0);
    c[0] = v.s;
    c[1] = v.ds;
    c[2] = v.dds / 2;
    // Coefficients of X = x0 + h, s', A = X s' - s, s'^2.
    std::array<Real, kOrder + 1> sp{}, a{}, sp2{}, spp{};
    // X^2 s''' = -X s'' - 2 X s'^2 - 4 X A - 4 A s'; solve for c[n+3].
    for (int n = 0; n + 3 <= kOrder; ++n) {
      for (int m = 0; m <= n + 1; ++m) sp[m] = (m + 1) * c[m + 1];
      for (int m = 0; m <= n; ++m) spp[m] = (m + 2) * (m + 1) * c[m + 2];
      for (int m = 0; m <= n; ++m) a[m] = x0 * sp[m] + (m >= 1 ? sp[m - 1] : 0) - c[m];
      for (int m = 0; m <= n; ++m) {
        Real acc = 0;
        for (int r = 0; r <= m; ++r) acc += sp[r] * sp[m - r];
        sp2[m] = acc;
      }
      auto times_x = [&](const std::array<Real, kOrder + 1>& f, int m) {
        return x0 * f[m] + (m >= 1 ? f[m - 1] : 0);
      };
      Real rhs = -times_x(spp, n) - 2 * times_x(sp2, n) - 4 * times_x(a, n);
      for (int r = 0; r <= n; ++r) rhs -= 4 * a[r] * sp[n - r];
      // X^2 s''' coefficient n: x0^2 t[n] + 2 x0 t[n-1] + t[n-2], t[m] = (m+1)(m+2)(m+3) c[m+3].
      Real known = 0;
      if (n >= 1) known += 2 * x0 * n * (n + 1) * (n + 2) * c[n + 2];
      if (n >= 2) known += (n - 1) * n * (n + 1) * c[n + 1];
      c[n + 3] = (rhs - known) / (x0 * x0 * (n + 1) * (n + 2) * (n + 3));
    }
    // L' = s / X: with g = s / X, X g = s gives x0 g[m] + g[m-1] = c[m].
    std::array<Real, kOrder + 1> g{};
    for (int m = 0; m <= kOrder; ++m) g[m] = (c[m] - (m >= 1 ? g[m - 1] : 0)) / x0;
    l[0] = v.logdet;
    for (int m = 1; m <= kOrder; ++m) l[m] = g[m - 1] / m;
  }

  SigmaVec eval(Real h) const {
    Real s = 0, ds = 0, dds = 0, ld = 0;
    for (int n = kOrder; n >= 0; --n) {
      s = s * h + c[n];
      ld = ld * h + l[n];
    }
    for (int n = kOrder; n >= 1; --n) ds = ds * h + n * c[n];
    for (int n = kOrder; n >= 2; --n) dds = dds * h + n * (n - 1) * c[n];
    return {s, ds, dds, ld};
  }

  Real error(Real h) const {
    return std::abs(c[kOrder]) * std::pow(h, kOrder) +
           std::abs(c[kOrder - 1]) * std::pow(h, kOrder - 1);
  }
};

constexpr double kSigmaStart = 1e-5;

SigmaVec sigma_series(double lambda, Real x) {
  const Real a = lambda / kPi;
  const Real c4 = a * a / 9 - a * a * a * a;
  const Real s = -a * x - a * a * x * x - a * a * a * x * x * x + c4 * x * x * x * x;
  const Real ds = -a - 2 * a * a * x - 3 * a * a * a * x * x + 4 * c4 * x * x * x;
  const Real dds = -2 * a * a - 6 * a * a * a * x + 12 * c4 * x * x;
  const Real ld = -a * x - a * a * x * x / 2 - a * a * a * x * x * x / 3 + c4 * x * x * x * x / 4;
  return {s, ds, dds, ld};
}

Real sigma_residual(Real x, const SigmaVec& v) {
  const Real a = x * v.ds - v.s;
  const Real r = (x * v.dds) * (x * v.dds) + 4 * a * (a + v.ds * v.ds);
  const Real norm = x * std::abs(v.dds) + x * std::abs(v.ds) + std::abs(v.s) + v.ds * v.ds;
  return norm == 0 ? 0 : std::abs(r) / (norm * norm);
}

}  // namespace

// ---------------------------------------------------------------------------

PiiState PainleveSolution::at(double x) const {
  if (std::isnan(x)) throw DomainError("PainleveSolution::at: NaN abscissa");
  if (x > x_start()) {
    const PiiVec v = airy_tail(x, 1.0);
    return {x,
            static_cast<double>(v.q),
            static_cast<double>(v.dq),
            static_cast<double>(v.i),
            static_cast<double>(v.k),
            static_cast<double>(v.j)};
  }
  if (x < x_end()) throw RangeError("PainleveSolution::at: abscissa below the tabulated range");
  const double h = grid_[0] - grid_[1];
  std::size_t i = std::min(static_cast<std::size_t>((grid_[0] - x) / h), grid_.size() - 2);
  while (i + 1 < grid_.size() - 1 && grid_[i + 1] > x) ++i;
  while (i > 0 && grid_[i] < x) --i;
  // Interpolate on the cell [grid_[i+1], grid_[i]] in the left-to-right variable.
  const double x0 = grid_[i + 1];
  const double x1 = grid_[i];
  const double hh = x1 - x0;
  const double t = (x - x0) / hh;
  const std::size_t l = i + 1, r = i;
  auto qpp = [&](std::size_t k) { return grid_[k] * q_[k] + 2 * q_[k] * q_[k] * q_[k]; };
  auto qppp = [&](std::size_t k) {
    return q_[k] + (grid_[k] + 6 * q_[k] * q_[k]) * q_prime_[k];
  };
  PiiState s;
  s.x = x;
  s.q = quintic(t, hh, q_[l], q_prime_[l], qpp(l), q_[r], q_prime_[r], qpp(r));
  s.q_prime = quintic(t, hh, q_prime_[l], qpp(l), qppp(l), q_prime_[r], qpp(r), qppp(r));
  s.int_q = quintic(t, hh, int_q_[l], -q_[l], -q_prime_[l], int_q_[r], -q_[r], -q_prime_[r]);
  s.int_q2 = quintic(t, hh, int_q2_[l], -q_[l] * q_[l], -2 * q_[l] * q_prime_[l], int_q2_[r],
                     -q_[r] * q_[r], -2 * q_[r] * q_prime_[r]);
  s.int_xq2 = quintic(t, hh, int_xq2_[l], -int_q2_[l], q_[l] * q_[l], int_xq2_[r], -int_q2_[r],
                      q_[r] * q_[r]);
  return s;
}

PainleveSolution solve_pii(double x_start, double x_end, double tol) {
  PiiOptions o;
  o.x_start = x_start;
  o.x_end = x_end;
  o.tol = tol;
  return solve_pii(o);
}

PainleveSolution solve_pii(const PiiOptions& o) {
  check_tol(o.tol, "solve_pii");
  if (!std::isfinite(o.x_start) || o.x_start < 6.0)
    throw DomainError("solve_pii: x_start must be >= 6");
  if (o.x_start > 40.0) throw CapabilityError("solve_pii: x_start above 40");
  if (!std::isfinite(o.x_end) || !(o.x_end < o.x_start))
    throw DomainError("solve_pii: need x_end < x_start");
  if (o.x_end < -20.0) throw CapabilityError("solve_pii: x_end below -20");
  if (!(o.spacing > 0.0) || o.spacing > 0.25) throw DomainError("solve_pii: bad spacing");
  if (o.bvp_nodes < 16 || o.bvp_nodes > 400) throw DomainError("solve_pii: bvp_nodes in [16, 400]");
  if (!(o.initial_scale > 0.0)) throw DomainError("solve_pii: initial_scale must be positive");

  const auto steps = static_cast<std::size_t>(std::ceil((o.x_start - o.x_end) / o.spacing - 1e-9));
  const double h = (o.x_start - o.x_end) / static_cast<double>(steps);
  PainleveSolution sol;
  sol.grid_.resize(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i)
    sol.grid_[i] = (i == steps) ? o.x_end : o.x_start - h * static_cast<double>(i);

  const bool use_bvp = o.bvp_continuation && o.x_end < o.match_point && o.match_point < o.x_start;
  std::size_t march_end = steps;
  if (use_bvp) {
    march_end = static_cast<std::size_t>(std::llround((o.x_start - o.match_point) / h));
    march_end = std::min(march_end, steps);
  }
  sol.bvp_begin_ = use_bvp ? march_end + 1 : steps + 1;

  auto store = [&](std::size_t i, const PiiVec& v) {
    sol.q_[i] = static_cast<double>(v.q);
    sol.q_prime_[i] = static_cast<double>(v.dq);
    sol.int_q_[i] = static_cast<double>(v.i);
    sol.int_q2_[i] = static_cast<double>(v.k);
    sol.int_xq2_[i] = static_cast<double>(v.j);
  };
  for (auto* v : {&sol.q_, &sol.q_prime_, &sol.int_q_, &sol.int_q2_, &sol.int_xq2_})
    v->assign(steps + 1, 0.0);

  PiiVec state = airy_tail(o.x_start, o.initial_scale);
  store(0, state);
  const Real local_tol = static_cast<Real>(o.tol) * 1e-3L;
  for (std::size_t i = 0; i < march_end; ++i) {
    const Real x = sol.grid_[i];
    const Real step = static_cast<Real>(sol.grid_[i + 1]) - x;
    state = march(x, state, step, local_tol);
    if (!(state.q > 0) || std::abs(state.q) > 1e6L)
      throw InstabilityError("solve_pii: trajectory left the Hastings-McLeod branch",
                             sol.grid_[i + 1]);
    store(i + 1, state);
  }
  if (!use_bvp) return sol;

  const double xm = sol.grid_[march_end];
  const double xl = o.x_end - 4.0;
  const ChebSolution cheb = solve_bvp(xl, xm, hm_asymptotic(xl), sol.q_[march_end], o.bvp_nodes);
  const auto rule = specialfun::gauss_legendre(10, -1.0, 1.0);
  for (std::size_t i = march_end; i < steps; ++i) {
    const double xr = sol.grid_[i];
    const double xn = sol.grid_[i + 1];
    const double qn = cheb.interp(cheb.q, xn);
    const double dqn = cheb.interp(cheb.dq, xn);
    double iq = 0, iq2 = 0, ixq2 = 0;
    const double half = 0.5 * (xr - xn);
    for (std::size_t k = 0; k < rule.size(); ++k) {
      const double u = 0.5 * (xr + xn) + half * rule.nodes[k];
      const double qu = cheb.interp(cheb.q, u);
      const double w = half * rule.weights[k];
      iq += w * qu;
      iq2 += w * qu * qu;
      ixq2 += w * (u - xn) * qu * qu;
    }
    const double k0 = sol.int_q2_[i];
    sol.q_[i + 1] = qn;
    sol.q_prime_[i + 1] = dqn;
    sol.int_q_[i + 1] = sol.int_q_[i] + iq;
    sol.int_q2_[i + 1] = k0 + iq2;
    sol.int_xq2_[i + 1] = sol.int_xq2_[i] + (xr - xn) * k0 + ixq2;
    if (!(qn > 0)) throw InstabilityError("solve_pii: continuation left the branch", xn);
  }
  return sol;
}

const PainleveSolution& default_pii_solution() {
  static const PainleveSolution sol = solve_pii(PiiOptions{});
  return sol;
}

double tw_cdf(int beta, double s, const PainleveSolution& sol) {
  check_beta(beta);
  if (std::isnan(s)) throw DomainError("tw_cdf: NaN argument");
  if (s == INFINITY) return 1.0;
  const double x = beta == 4 ? std::numbers::sqrt2 * s : s;
  if (x < sol.x_end()) throw RangeError("tw_cdf: argument below the tabulated range");
  const PiiState st = sol.at(x);
  switch (beta) {
    case 2:
      return std::exp(-st.int_xq2);
    case 1:
      return std::exp(-0.5 * (st.int_q + st.int_xq2));
    default:
      return std::cosh(0.5 * st.int_q) * std::exp(-0.5 * st.int_xq2);
  }
}

double tw_pdf(int beta, double s, const PainleveSolution& sol) {
  check_beta(beta);
  if (std::isnan(s)) throw DomainError("tw_pdf: NaN argument");
  if (s == INFINITY) return 0.0;
  const double x = beta == 4 ? std::numbers::sqrt2 * s : s;
  if (x < sol.x_end()) throw RangeError("tw_pdf: argument below the tabulated range");
  const PiiState st = sol.at(x);
  switch (beta) {
    case 2:
      return std::exp(-st.int_xq2) * st.int_q2;
    case 1:
      return 0.5 * std::exp(-0.5 * (st.int_q + st.int_xq2)) * (st.q + st.int_q2);
    default: {
      const double e = std::exp(-0.5 * st.int_xq2);
      return std::numbers::sqrt2 * e *
             (-0.5 * st.q * std::sinh(0.5 * st.int_q) + 0.5 * st.int_q2 * std::cosh(0.5 * st.int_q));
    }
  }
}

double TWDistribution::cdf_at(double s) const {
  if (s_grid.size() < 2) throw DomainError("TWDistribution: empty table");
  if (s <= s_grid.front()) return cdf.front();
  if (s >= s_grid.back()) return cdf.back();
  const auto it = std::upper_bound(s_grid.begin(), s_grid.end(), s);
  const std::size_t i = static_cast<std::size_t>(it - s_grid.begin()) - 1;
  const std::size_t n = s_grid.size();
  auto secant = [&](std::size_t k) {
    return (cdf[k + 1] - cdf[k]) / (s_grid[k + 1] - s_grid[k]);
  };
  auto slope = [&](std::size_t k) {
    if (k == 0) return secant(0);
    if (k == n - 1) return secant(n - 2);
    const double a = secant(k - 1), b = secant(k);
    if (a * b <= 0) return 0.0;
    return 2 * a * b / (a + b);
  };
  const double d = secant(i);
  double m0 = slope(i), m1 = slope(i + 1);
  if (d == 0) {
    m0 = m1 = 0;
  } else {
    const double al = m0 / d, be = m1 / d;
    const double r = al * al + be * be;
    if (r > 9) {
      const double tau = 3 / std::sqrt(r);
      m0 = tau * al * d;
      m1 = tau * be * d;
    }
  }
  const double hh = s_grid[i + 1] - s_grid[i];
  const double t = (s - s_grid[i]) / hh;
  const double t2 = t * t, t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * cdf[i] + (t3 - 2 * t2 + t) * hh * m0 +
         (-2 * t3 + 3 * t2) * cdf[i + 1] + (t3 - t2) * hh * m1;
}

double TWDistribution::pdf_at(double s) const {
  if (s_grid.size() < 2) throw DomainError("TWDistribution: empty table");
  if (s <= s_grid.front()) return pdf.front();
  if (s >= s_grid.back()) return pdf.back();
  const auto it = std::upper_bound(s_grid.begin(), s_grid.end(), s);
  const std::size_t i = static_cast<std::size_t>(it - s_grid.begin()) - 1;
  const std::size_t n = s_grid.size();
  auto deriv = [&](std::size_t k) {
    const std::size_t lo = k == 0 ? 0 : k - 1;
    const std::size_t hi = k == n - 1 ? n - 1 : k + 1;
    return (pdf[hi] - pdf[lo]) / (s_grid[hi] - s_grid[lo]);
  };
  const double hh = s_grid[i + 1] - s_grid[i];
  const double t = (s - s_grid[i]) / hh;
  const double t2 = t * t, t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * pdf[i] + (t3 - 2 * t2 + t) * hh * deriv(i) +
         (-2 * t3 + 3 * t2) * pdf[i + 1] + (t3 - t2) * hh * deriv(i + 1);
}

double TWDistribution::integrate_pdf() const {
  const std::size_t n = s_grid.size();
  if (n < 2) return 0.0;
  double total = 0;
  std::size_t i = 0;
  for (; i + 2 < n; i += 2) {
    const double hh = 0.5 * (s_grid[i + 2] - s_grid[i]);
    total += hh / 3 * (pdf[i] + 4 * pdf[i + 1] + pdf[i + 2]);
  }
  if (i + 1 < n) total += 0.5 * (s_grid[i + 1] - s_grid[i]) * (pdf[i] + pdf[i + 1]);
  return total;
}

TWDistribution tw_tabulate(int beta, double s_min, double s_max, int n_points,
                           const PainleveSolution& sol) {
  check_beta(beta);
  if (n_points < 2) throw DomainError("tw_tabulate: need at least 2 points");
  if (!(s_min < s_max)) throw DomainError("tw_tabulate: need s_min < s_max");
  TWDistribution d;
  d.beta = beta;
  d.s_grid.resize(static_cast<std::size_t>(n_points));
  d.cdf.resize(d.s_grid.size());
  d.pdf.resize(d.s_grid.size());
  for (int i = 0; i < n_points; ++i) {
    const double s = s_min + (s_max - s_min) * i / (n_points - 1);
    d.s_grid[i] = s;
    d.cdf[i] = tw_cdf(beta, s, sol);
    d.pdf[i] = tw_pdf(beta, s, sol);
  }
  return d;
}

// ---------------------------------------------------------------------------

SigmaPVState SigmaPVSolution::at(double x) const {
  if (!(x >= 0.0)) throw RangeError("SigmaPVSolution::at: negative abscissa");
  if (x > x_max()) throw RangeError("SigmaPVSolution::at: abscissa above x_max");
  if (x <= grid_.front()) {
    const SigmaVec v = sigma_series(lambda_, x);
    return {x, static_cast<double>(v.s), static_cast<double>(v.ds), static_cast<double>(v.dds),
            static_cast<double>(v.logdet)};
  }
  const auto it = std::upper_bound(grid_.begin(), grid_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - grid_.begin());
  i = std::min(i, grid_.size() - 1) - 1;
  const double x0 = grid_[i], x1 = grid_[i + 1];
  const double hh = x1 - x0;
  const double t = (x - x0) / hh;
  auto third = [&](std::size_t k) {
    const double xx = grid_[k];
    const double a = xx * sigma_prime_[k] - sigma_[k];
    return (-xx * sigma_second_[k] - 2 * xx * sigma_prime_[k] * sigma_prime_[k] - 4 * xx * a -
            4 * a * sigma_prime_[k]) /
           (xx * xx);
  };
  auto l1 = [&](std::size_t k) { return sigma_[k] / grid_[k]; };
  auto l2 = [&](std::size_t k) {
    return (grid_[k] * sigma_prime_[k] - sigma_[k]) / (grid_[k] * grid_[k]);
  };
  SigmaPVState s;
  s.x = x;
  s.sigma = quintic(t, hh, sigma_[i], sigma_prime_[i], sigma_second_[i], sigma_[i + 1],
                    sigma_prime_[i + 1], sigma_second_[i + 1]);
  s.sigma_prime = quintic(t, hh, sigma_prime_[i], sigma_second_[i], third(i), sigma_prime_[i + 1],
                          sigma_second_[i + 1], third(i + 1));
  const double t2 = t * t, t3 = t2 * t;
  s.sigma_second = (2 * t3 - 3 * t2 + 1) * sigma_second_[i] + (t3 - 2 * t2 + t) * hh * third(i) +
                   (-2 * t3 + 3 * t2) * sigma_second_[i + 1] + (t3 - t2) * hh * third(i + 1);
  s.log_det = quintic(t, hh, log_det_[i], l1(i), l2(i), log_det_[i + 1], l1(i + 1), l2(i + 1));
  return s;
}

SigmaPVSolution solve_sigma_pv(double lambda, double x_max, double tol) {
  check_tol(tol, "solve_sigma_pv");
  if (!(lambda > 0.0 && lambda <= 1.0)) throw DomainError("solve_sigma_pv: lambda must lie in (0, 1]");
  if (!(x_max > 0.0)) throw DomainError("solve_sigma_pv: x_max must be positive");
  if (x_max > 40.0) throw CapabilityError("solve_sigma_pv: x_max above 40");

  SigmaPVSolution sol;
  sol.lambda_ = lambda;
  const double spacing = 1.0 / 64.0;
  const double x0 = std::min(kSigmaStart, x_max / 2);
  sol.grid_.push_back(x0);
  const auto steps = static_cast<std::size_t>(std::ceil(x_max / spacing - 1e-9));
  for (std::size_t i = 1; i <= steps; ++i) {
    const double x = (i == steps) ? x_max : spacing * static_cast<double>(i);
    if (x > x0) sol.grid_.push_back(x);
  }
  auto store = [&](Real x, const SigmaVec& v) {
    sol.sigma_.push_back(static_cast<double>(v.s));
    sol.sigma_prime_.push_back(static_cast<double>(v.ds));
    sol.sigma_second_.push_back(static_cast<double>(v.dds));
    sol.log_det_.push_back(static_cast<double>(v.logdet));
    sol.max_residual_ = std::max(sol.max_residual_, static_cast<double>(sigma_residual(x, v)));
  };
  SigmaVec v = sigma_series(lambda, x0);
  store(x0, v);
  SigmaTaylor tay;
  const Real local_tol = static_cast<Real>(tol) * 1e-3L;
  for (std::size_t i = 0; i + 1 < sol.grid_.size(); ++i) {
    Real x = sol.grid_[i];
    const Real target = sol.grid_[i + 1];
    while (x < target) {
      Real step = std::min(target - x, x);
      tay.expand(x, v);
      const Real scale = std::abs(v.s) + std::abs(step * v.ds) + 1e-300L;
      int halvings = 0;
      while (tay.error(step) > local_tol * scale) {
        step /= 2;
        if (++halvings > 60) throw SolverError("solve_sigma_pv: step size underflow");
      }
      v = tay.eval(step);
      x = (step == target - x) ? target : x + step;
    }
    store(target, v);
  }
  if (sol.max_residual_ > tol)
    throw SolverError("solve_sigma_pv: quadratic relation residual " +
                      std::to_string(sol.max_residual_) + " exceeds tol");
  return sol;
}

GaudinLaw::GaudinLaw(double s_max, double tol)
    : s_max_(s_max), sol_(solve_sigma_pv(1.0, kPi * s_max, tol)) {
  if (!(s_max > 0.0)) throw DomainError("GaudinLaw: s_max must be positive");
}

double GaudinLaw::gap(double s) const {
  if (std::isnan(s)) throw DomainError("GaudinLaw: NaN argument");
  if (s <= 0.0) return 1.0;
  if (s >= s_max_) return 0.0;
  return std::exp(sol_.at(kPi * s).log_det);
}

double GaudinLaw::pdf(double s) const {
  if (std::isnan(s)) throw DomainError("GaudinLaw: NaN argument");
  if (s <= 0.0 || s >= s_max_) return 0.0;
  const SigmaPVState st = sol_.at(kPi * s);
  const double e = std::exp(st.log_det);
  const double a = st.x * st.sigma_prime - st.sigma;
  return e * (st.sigma * st.sigma + a) / (s * s);
}

double GaudinLaw::cdf(double s) const {
  if (std::isnan(s)) throw DomainError("GaudinLaw: NaN argument");
  if (s <= 0.0) return 0.0;
  if (s >= s_max_) return 1.0;
  const SigmaPVState st = sol_.at(kPi * s);
  return 1.0 + std::exp(st.log_det) * st.sigma / s;
}

const GaudinLaw& default_gaudin_law() {
  static const GaudinLaw law(6.0, 1e-12);
  return law;
}

std::vector<double> gaudin_density(std::span<const double> s_grid) {
  std::vector<double> out;
  out.reserve(s_grid.size());
  for (std::size_t i = 0; i < s_grid.size(); ++i) {
    const double s = s_grid[i];
    if (!(s > 0.0) || s > 5.0) throw DomainError("gaudin_density: grid must lie in (0, 5]");
    if (i > 0 && !(s > s_grid[i - 1])) throw DomainError("gaudin_density: grid must increase");
    out.push_back(default_gaudin_law().pdf(s));
  }
  return out;
}

}  // namespace rmt::painleve
