#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "rmt/error.hpp"

namespace rmt::specialfun {

/// Gauss–Legendre rule mapped to (a, b).
struct QuadratureRule {
  std::vector<double> nodes;    // strictly increasing, inside (a, b)
  std::vector<double> weights;  // positive, summing to b - a
  double a = 0.0;
  double b = 0.0;

  std::size_t size() const noexcept { return nodes.size(); }

  template <class F>
  double integrate(F&& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }
};

/// Newton iteration on P_order with asymptotic starting guesses.
/// Throws DomainError unless order >= 1 and a < b (both finite).
QuadratureRule gauss_legendre(int order, double a, double b);

struct AiryValue {
  double ai = 0.0;
  double ai_prime = 0.0;
};

/// Ai and Ai' for real x.
///
/// Three regimes: the Maclaurin series on [-7, 2], the Laplace-type integral
/// Ai(x) = e^{-z}/pi * int_0^inf exp(-sqrt(x) t^2) cos(t^3/3) dt (z = 2/3 x^{3/2})
/// for x > 2, and the modulus/phase asymptotic expansion for x < -7. The
/// crossover at -7 is where the series cancellation error (~eps e^{z}) meets the
/// optimally truncated asymptotic error (~e^{-2z}).
///
/// Non-finite x raises DomainError; x < -200 raises CapabilityError; x > 200
/// underflows to zero.
AiryValue airy(double x);

/// Orthonormal Hermite function pi^{-1/4} (2^n n!)^{-1/2} e^{-x^2/2} H_n(x),
/// by the weighted three-term recurrence. n > 500 raises CapabilityError.
double hermite_phi(int n, double x);

struct HermitePair {
  double phi_n = 0.0;
  double phi_n_minus_1 = 0.0;  // zero when n == 0
};

/// phi_n(x) and phi_{n-1}(x) from one recurrence pass.
HermitePair hermite_phi_pair(int n, double x);

/// Power series for I_k(z), k >= 0, z >= 0. The terms are all positive, so
/// relative accuracy holds in any arithmetic type supporting + - * /.
template <class T>
T bessel_i_series(int k, T z) {
  if (k < 0) k = -k;
  const T half = z / T(2);
  if (z == T(0)) return k == 0 ? T(1) : T(0);
  T term = T(1);
  for (int j = 1; j <= k; ++j) term = term * half / T(j);
  const T quarter_sq = half * half;
  T sum = term;
  for (int m = 0; m < 100000; ++m) {
    term = term * quarter_sq / (T(m + 1) * T(m + 1 + k));
    sum = sum + term;
    // Terms decrease once m exceeds z/2; stop when they no longer register.
    if (T(m) > half && sum + term == sum) break;
  }
  return sum;
}

/// Modified Bessel function of the first kind, integer order.
/// Requires |k| <= 200 and 0 <= z <= 100 (CapabilityError otherwise).
double bessel_i(int k, double z);

}  // namespace rmt::specialfun
