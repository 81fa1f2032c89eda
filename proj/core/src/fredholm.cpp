#include "rmt/fredholm.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "rmt/linalg.hpp"
#include "rmt/specialfun.hpp"

namespace rmt::fredholm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

double sinc_pi(double u) {
  const double a = kPi * u;
  if (std::abs(a) < 1e-4) return 1.0 - a * a / 6.0 + a * a * a * a / 120.0;
  return std::sin(a) / a;
}

void check_order(int order) {
  if (order < 10) throw DomainError("fredholm_det: order must be >= 10");
  if (order > 2000) throw CapabilityError("fredholm_det: order above 2000");
}

// Values of the (phi, psi) pair at the nodes plus the diagonal of K (prefactor
// already applied to the diagonal).
struct Basis {
  std::vector<double> phi;
  std::vector<double> psi;
  std::vector<double> diag;
  double prefactor = 1.0;
};

Basis integrable_basis(const KernelSpec& spec, const std::vector<double>& x) {
  Basis b;
  const std::size_t n = x.size();
  b.phi.resize(n);
  b.psi.resize(n);
  b.diag.resize(n);
  std::visit(Overloaded{
                 [&](const SineKernel&) {},
                 [&](const AiryKernel&) {
                   for (std::size_t i = 0; i < n; ++i) {
                     const auto v = specialfun::airy(x[i]);
                     b.phi[i] = v.ai;
                     b.psi[i] = v.ai_prime;
                     b.diag[i] = v.ai_prime * v.ai_prime - x[i] * v.ai * v.ai;
                   }
                 },
                 [&](const HermiteKernel& h) {
                   b.prefactor = std::sqrt(h.n / 2.0);
                   for (std::size_t i = 0; i < n; ++i) {
                     const auto top = specialfun::hermite_phi_pair(h.n, x[i]);
                     b.phi[i] = top.phi_n;
                     b.psi[i] = top.phi_n_minus_1;
                     const double below =
                         h.n >= 2 ? specialfun::hermite_phi(h.n - 2, x[i]) : 0.0;
                     // phi_k' = -x phi_k + sqrt(2k) phi_{k-1}
                     b.diag[i] = b.prefactor * (std::sqrt(2.0 * h.n) * top.phi_n_minus_1 *
                                                    top.phi_n_minus_1 -
                                                std::sqrt(2.0 * (h.n - 1)) * below * top.phi_n);
                   }
                 },
                 [&](const CustomKernel& c) {
                   b.prefactor = c.prefactor;
                   for (std::size_t i = 0; i < n; ++i) {
                     b.phi[i] = c.phi(x[i]);
                     b.psi[i] = c.psi(x[i]);
                     b.diag[i] = c.prefactor * (c.dphi(x[i]) * b.psi[i] - c.dpsi(x[i]) * b.phi[i]);
                   }
                 },
             },
             spec);
  return b;
}

struct Discretization {
  std::vector<double> x;
  std::vector<double> w;
};

Discretization discretize(const KernelSpec& spec, const IntervalUnion& j, int order) {
  Discretization d;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto [a, b] = j[i];
    if (std::isinf(b)) b = j.truncation().value_or(default_truncation(spec, a));
    if (!(b > a)) continue;
    const auto rule = specialfun::gauss_legendre(order, a, b);
    d.x.insert(d.x.end(), rule.nodes.begin(), rule.nodes.end());
    d.w.insert(d.w.end(), rule.weights.begin(), rule.weights.end());
  }
  return d;
}

}  // namespace

IntervalUnion IntervalUnion::single(double a, double b) { return from_endpoints({a, b}); }

IntervalUnion IntervalUnion::semi_infinite(double a) { return from_endpoints({a, kInf}); }

IntervalUnion IntervalUnion::from_endpoints(std::vector<double> endpoints) {
  if (endpoints.size() % 2 != 0)
    throw DomainError("IntervalUnion: odd number of endpoints");
  for (std::size_t i = 0; i < endpoints.size(); ++i) {
    const bool last = i + 1 == endpoints.size();
    if (std::isnan(endpoints[i]) || (std::isinf(endpoints[i]) && !(last && endpoints[i] > 0)))
      throw DomainError("IntervalUnion: only the last endpoint may be infinite");
    if (i > 0 && !(endpoints[i] > endpoints[i - 1]))
      throw DomainError("IntervalUnion: endpoints must be strictly increasing");
  }
  IntervalUnion u;
  u.endpoints_ = std::move(endpoints);
  return u;
}

bool IntervalUnion::is_semi_infinite() const noexcept {
  return !endpoints_.empty() && std::isinf(endpoints_.back());
}

IntervalUnion& IntervalUnion::set_truncation(double t) {
  if (!is_semi_infinite()) throw DomainError("IntervalUnion: no infinite tail to truncate");
  if (!(t > endpoints_[endpoints_.size() - 2]))
    throw DomainError("IntervalUnion: truncation point must exceed the tail start");
  truncation_ = t;
  return *this;
}

double kernel_eval(const KernelSpec& spec, double x, double y) {
  return std::visit(
      Overloaded{
          [&](const SineKernel&) { return sinc_pi(x - y); },
          [&](const AiryKernel&) {
            const auto ax = specialfun::airy(x);
            const double h = y - x;
            if (std::abs(h) < 1e-3) {
              // Taylor expansion about x; derivatives from Ai'' = x Ai, D_{k+2} = x D_k + k D_{k-1}.
              double d[9] = {ax.ai, ax.ai_prime, x * ax.ai};
              for (int k = 1; k + 2 < 9; ++k) d[k + 2] = x * d[k] + k * d[k - 1];
              double sum = 0.0, hk = 1.0, fact = 1.0;
              for (int k = 1; k <= 7; ++k) {
                fact *= k;
                sum -= hk / fact * (d[0] * d[k + 1] - d[1] * d[k]);
                hk *= h;
              }
              return sum;
            }
            const auto ay = specialfun::airy(y);
            return (ax.ai * ay.ai_prime - ax.ai_prime * ay.ai) / (x - y);
          },
          [&](const HermiteKernel& h) {
            const double pre = std::sqrt(h.n / 2.0);
            const auto px = specialfun::hermite_phi_pair(h.n, x);
            if (x == y) {
              const double below = h.n >= 2 ? specialfun::hermite_phi(h.n - 2, x) : 0.0;
              return pre * (std::sqrt(2.0 * h.n) * px.phi_n_minus_1 * px.phi_n_minus_1 -
                            std::sqrt(2.0 * (h.n - 1)) * below * px.phi_n);
            }
            const auto py = specialfun::hermite_phi_pair(h.n, y);
            return pre * (px.phi_n * py.phi_n_minus_1 - px.phi_n_minus_1 * py.phi_n) / (x - y);
          },
          [&](const CustomKernel& c) {
            if (x == y) return c.prefactor * (c.dphi(x) * c.psi(x) - c.dpsi(x) * c.phi(x));
            return c.prefactor * (c.phi(x) * c.psi(y) - c.psi(x) * c.phi(y)) / (x - y);
          },
      },
      spec);
}

double default_truncation(const KernelSpec& spec, double a) {
  return std::visit(
      Overloaded{
          [&](const AiryKernel&) { return std::max(a, 0.0) + 14.0; },
          [&](const HermiteKernel& h) {
            double x = std::max(a, std::sqrt(2.0 * h.n + 1.0));
            for (int i = 0; i < 400; ++i) {
              if (kernel_eval(spec, x, x) < 1e-18) return x;
              x += 0.25;
            }
            return x;
          },
          [&](const auto&) -> double {
            throw DomainError("fredholm: kernel needs an explicit truncation for (a, inf)");
          },
      },
      spec);
}

double fredholm_det_fixed(const KernelSpec& spec, const IntervalUnion& j, double lambda,
                          int order) {
  check_order(order);
  if (j.is_empty() || lambda == 0.0) return 1.0;
  if (j.is_semi_infinite() && std::holds_alternative<SineKernel>(spec))
    throw DomainError("fredholm_det: the sine kernel is not trace class on a half-line");
  const Discretization d = discretize(spec, j, order);
  const std::size_t n = d.x.size();
  if (n == 0) return 1.0;
  std::vector<double> sw(n);
  for (std::size_t i = 0; i < n; ++i) sw[i] = std::sqrt(d.w[i]);

  std::vector<double> m(n * n);
  if (std::holds_alternative<SineKernel>(spec)) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        m[i * n + k] = -lambda * sw[i] * sinc_pi(d.x[i] - d.x[k]) * sw[k];
  } else {
    const Basis b = integrable_basis(spec, d.x);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        double kv;
        if (i == k || d.x[i] == d.x[k]) {
          kv = b.diag[i];
        } else {
          kv = b.prefactor * (b.phi[i] * b.psi[k] - b.psi[i] * b.phi[k]) / (d.x[i] - d.x[k]);
        }
        m[i * n + k] = -lambda * sw[i] * kv * sw[k];
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] += 1.0;
  return linalg::log_det_lu<double>(m, n).value();
}

FredholmResult fredholm_det(const KernelSpec& spec, const IntervalUnion& j, double lambda,
                            int order, double tolerance) {
  check_order(order);
  FredholmResult r;
  r.order = order;
  if (j.is_empty() || lambda == 0.0) return r;
  r.coarse_value = fredholm_det_fixed(spec, j, lambda, order);
  r.value = fredholm_det_fixed(spec, j, lambda, 2 * order);
  const double diff = std::abs(r.value - r.coarse_value);
  r.error_estimate = r.value == 0.0 ? diff : diff / std::abs(r.value);
  r.converged = r.error_estimate <= tolerance;
  return r;
}

FredholmResult finite_n_gap(int n, const IntervalUnion& j, int order, double tolerance) {
  if (n < 1) throw DomainError("finite_n_gap: N must be positive");
  if (n > 200) throw CapabilityError("finite_n_gap: N above 200");
  return fredholm_det(HermiteKernel{n}, j, 1.0, order, tolerance);
}

}  // namespace rmt::fredholm
