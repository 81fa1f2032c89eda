#include "rmt/specialfun.hpp"

#include <array>
#include <numbers>

namespace rmt::specialfun {

namespace {

constexpr double kPi = std::numbers::pi;

QuadratureRule reference_rule(int order) {
  // Nodes on (-1, 1), computed for the positive half and mirrored.
  QuadratureRule rule;
  rule.a = -1.0;
  rule.b = 1.0;
  rule.nodes.assign(static_cast<std::size_t>(order), 0.0);
  rule.weights.assign(static_cast<std::size_t>(order), 0.0);
  const int half = (order + 1) / 2;
  const double n = order;
  for (int i = 1; i <= half; ++i) {
    // Tricomi's estimate of the i-th largest zero.
    double x = (1.0 - 1.0 / (8.0 * n * n) + 1.0 / (8.0 * n * n * n)) *
               std::cos(kPi * (4.0 * i - 1.0) / (4.0 * n + 2.0));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (order == 1) {
        p1 = x;
        p0 = 1.0;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-15) break;
    }
    // Recompute the derivative at the converged node for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= order; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    if (order == 1) p0 = 1.0;
    dp = (order == 1) ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i - 1);
    const auto hi = static_cast<std::size_t>(order - i);
    rule.nodes[lo] = -x;
    rule.nodes[hi] = x;
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  if (order % 2 == 1) rule.nodes[static_cast<std::size_t>(half - 1)] = 0.0;
  return rule;
}

AiryValue airy_series(double x_in) {
  // Ai = sum a_n x^n with a_{n+3} = a_n / ((n+2)(n+3)), summed in extended precision
  // because the terms reach about 1e5 |Ai| near x = -7.
  using real = long double;
  const real x = x_in;
  const real ai0 = 0.355028053887817239260063186004183176L;
  const real aip0 = -0.258819403792806798405183560189203963L;
  const real x3 = x * x * x;
  real f = ai0;        // even-chain term a_{3k} x^{3k}
  real g = aip0 * x;   // odd-chain term a_{3k+1} x^{3k+1}
  real ai = f + g;
  // Derivative terms: n a_n x^{n-1}.
  real fp = 0.0L;
  real gp = aip0;
  real aip = gp;
  for (int k = 0; k < 200; ++k) {
    const real n0 = 3.0L * k;
    const real n1 = 3.0L * k + 1.0L;
    f *= x3 / ((n0 + 2.0L) * (n0 + 3.0L));
    g *= x3 / ((n1 + 2.0L) * (n1 + 3.0L));
    ai += f + g;
    fp = (x == 0.0L) ? 0.0L : (n0 + 3.0L) * f / x;
    gp = (x == 0.0L) ? 0.0L : (n1 + 3.0L) * g / x;
    aip += fp + gp;
    if (std::abs(f) + std::abs(g) <= 1e-21L * std::abs(ai) &&
        std::abs(fp) + std::abs(gp) <= 1e-21L * std::abs(aip))
      break;
    if (f == 0.0L && g == 0.0L) break;
  }
  return {static_cast<double>(ai), static_cast<double>(aip)};
}

struct LaplaceRule {
  std::vector<double> u;
  std::vector<double> w;  // includes the e^{-u^2} factor
};

const LaplaceRule& laplace_rule() {
  static const LaplaceRule rule = [] {
    LaplaceRule r;
    constexpr int panels = 8;
    constexpr double upper = 6.5;
    const QuadratureRule ref = reference_rule(24);
    for (int p = 0; p < panels; ++p) {
      const double lo = upper * p / panels;
      const double hi = upper * (p + 1) / panels;
      for (std::size_t i = 0; i < ref.size(); ++i) {
        const double u = 0.5 * (lo + hi) + 0.5 * (hi - lo) * ref.nodes[i];
        r.u.push_back(u);
        r.w.push_back(0.5 * (hi - lo) * ref.weights[i] * std::exp(-u * u));
      }
    }
    return r;
  }();
  return rule;
}

AiryValue airy_laplace(double x) {
  const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
  const double c = 1.0 / (3.0 * std::pow(x, 0.75));
  const LaplaceRule& rule = laplace_rule();
  double g0 = 0.0;
  double g2 = 0.0;
  for (std::size_t i = 0; i < rule.u.size(); ++i) {
    const double u = rule.u[i];
    const double cu = rule.w[i] * std::cos(c * u * u * u);
    g0 += cu;
    g2 += u * u * cu;
  }
  const double x14 = std::pow(x, 0.25);
  const double pref = std::exp(-zeta) / kPi;
  return {pref * g0 / x14, pref * (-x14 * g0 - g2 / (2.0 * x * x14))};
}

AiryValue airy_negative_asymptotic(double x) {
  const double z = -x;
  const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
  // u_k and v_k coefficients of the Airy asymptotic series.
  double p = 0.0, q = 0.0, r = 0.0, s = 0.0;
  double u = 1.0;
  double power = 1.0;  // zeta^{-k}
  double prev = INFINITY;
  for (int k = 0; k < 60; ++k) {
    if (k > 0) {
      u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k);
      power /= zeta;
    }
    const double v = (k == 0) ? 1.0 : -(6.0 * k + 1.0) / (6.0 * k - 1.0) * u;
    const double tu = u * power;
    const double tv = v * power;
    if (std::abs(tu) > prev) break;  // optimal truncation
    prev = std::abs(tu);
    const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) {
      p += sign * tu;
      r += sign * tv;
    } else {
      q += sign * tu;
      s += sign * tv;
    }
    if (std::abs(tu) < 1e-17) break;
  }
  const double theta = zeta - kPi / 4.0;
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  const double z14 = std::pow(z, 0.25);
  const double rsp = 1.0 / std::sqrt(kPi);
  return {rsp / z14 * (ct * p + st * q), rsp * z14 * (st * r - ct * s)};
}

}  // namespace

QuadratureRule gauss_legendre(int order, double a, double b) {
  if (order < 1) throw DomainError("gauss_legendre: order must be >= 1");
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
    throw DomainError("gauss_legendre: need finite a < b");
  QuadratureRule rule = reference_rule(order);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    rule.nodes[i] = mid + half * rule.nodes[i];
    rule.weights[i] *= half;
  }
  rule.a = a;
  rule.b = b;
  return rule;
}

AiryValue airy(double x) {
  if (!std::isfinite(x)) throw DomainError("airy: non-finite argument");
  if (x < -200.0) throw CapabilityError("airy: argument below -200 not supported");
  if (x > 200.0) return {0.0, 0.0};
  if (x < -7.0) return airy_negative_asymptotic(x);
  if (x <= 2.0) return airy_series(x);
  return airy_laplace(x);
}

HermitePair hermite_phi_pair(int n, double x) {
  if (n < 0) throw DomainError("hermite_phi: negative degree");
  if (n > 500) throw CapabilityError("hermite_phi: degree above 500 not certified");
  if (!std::isfinite(x)) throw DomainError("hermite_phi: non-finite argument");
  constexpr double kBig = 1e150;
  double log_scale = -0.5 * x * x;
  double prev = 0.0;
  double cur = 1.0 / std::sqrt(std::sqrt(kPi));
  for (int k = 0; k < n; ++k) {
    const double next = std::sqrt(2.0 / (k + 1.0)) * x * cur - std::sqrt(k / (k + 1.0)) * prev;
    prev = cur;
    cur = next;
    if (std::abs(cur) > kBig) {
      cur /= kBig;
      prev /= kBig;
      log_scale += std::log(kBig);
    }
  }
  const double scale = std::exp(log_scale);
  return {cur * scale, n == 0 ? 0.0 : prev * scale};
}

double hermite_phi(int n, double x) { return hermite_phi_pair(n, x).phi_n; }

double bessel_i(int k, double z) {
  if (k < -200 || k > 200) throw CapabilityError("bessel_i: |k| > 200");
  if (!(z >= 0.0) || z > 100.0) throw CapabilityError("bessel_i: z outside [0, 100]");
  return bessel_i_series<double>(k, z);
}

}  // namespace rmt::specialfun
