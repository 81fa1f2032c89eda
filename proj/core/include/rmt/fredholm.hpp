#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "rmt/error.hpp"

namespace rmt::fredholm {

/// Finite union of open intervals (a1, a2) u (a3, a4) u ... with strictly
/// increasing endpoints. The last right endpoint may be +infinity; such an
/// interval is integrated up to a truncation point.
class IntervalUnion {
 public:
  IntervalUnion() = default;

  static IntervalUnion empty() { return {}; }
  static IntervalUnion single(double a, double b);
  /// (a, +infinity).
  static IntervalUnion semi_infinite(double a);
  /// Endpoints a1 < a2 < ... < a_{2m}; a_{2m} may be +infinity.
  static IntervalUnion from_endpoints(std::vector<double> endpoints);

  bool is_empty() const noexcept { return endpoints_.empty(); }
  std::size_t size() const noexcept { return endpoints_.size() / 2; }
  std::pair<double, double> operator[](std::size_t i) const {
    return {endpoints_[2 * i], endpoints_[2 * i + 1]};
  }
  bool is_semi_infinite() const noexcept;
  const std::vector<double>& endpoints() const noexcept { return endpoints_; }

  /// Overrides the kernel-specific default truncation of a semi-infinite tail.
  IntervalUnion& set_truncation(double t);
  std::optional<double> truncation() const noexcept { return truncation_; }

 private:
  std::vector<double> endpoints_;
  std::optional<double> truncation_;
};

/// sin(pi(x-y)) / (pi(x-y)).
struct SineKernel {};
/// (Ai(x)Ai'(y) - Ai'(x)Ai(y)) / (x - y).
struct AiryKernel {};
/// Christoffel–Darboux kernel of the first N orthonormal Hermite functions,
/// sqrt(N/2) (phi_N(x) phi_{N-1}(y) - phi_{N-1}(x) phi_N(y)) / (x - y).
struct HermiteKernel {
  int n = 1;
};
/// prefactor * (phi(x) psi(y) - psi(x) phi(y)) / (x - y); the derivatives give
/// the diagonal limit prefactor * (phi'(x) psi(x) - psi'(x) phi(x)).
struct CustomKernel {
  std::function<double(double)> phi;
  std::function<double(double)> psi;
  std::function<double(double)> dphi;
  std::function<double(double)> dpsi;
  double prefactor = 1.0;
};

using KernelSpec = std::variant<SineKernel, AiryKernel, HermiteKernel, CustomKernel>;

double kernel_eval(const KernelSpec& spec, double x, double y);

/// Right end used in place of +infinity for a tail starting at `a`:
/// Airy max(a, 0) + 14; Hermite the first point past the oscillatory region where
/// the diagonal falls below 1e-18. Sine and custom kernels have no default.
double default_truncation(const KernelSpec& spec, double a);

struct FredholmResult {
  double value = 1.0;           // determinant at 2 * order nodes per interval
  double coarse_value = 1.0;    // determinant at order nodes per interval
  double error_estimate = 0.0;  // |value - coarse_value| / |value|, absolute when value is 0
  int order = 0;
  bool converged = true;        // error_estimate <= requested tolerance
};

/// det(I - lambda K) on L^2(J) by Nystrom discretization with Gauss–Legendre
/// nodes per interval and the symmetrized matrix I - lambda W^{1/2} K W^{1/2}.
FredholmResult fredholm_det(const KernelSpec& spec, const IntervalUnion& j, double lambda,
                            int order = 60, double tolerance = 1e-8);

/// One discretization at a fixed order, no error estimate.
double fredholm_det_fixed(const KernelSpec& spec, const IntervalUnion& j, double lambda,
                          int order);

/// E_N(0; J) for the Gaussian unitary ensemble with weight e^{-x^2}: the
/// probability that no eigenvalue lies in J. For J = (t, inf) this is the CDF of
/// the largest eigenvalue. Requires 1 <= N <= 200.
FredholmResult finite_n_gap(int n, const IntervalUnion& j, int order = 60,
                            double tolerance = 1e-8);

}  // namespace rmt::fredholm
