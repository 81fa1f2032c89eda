#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "rmt/fredholm.hpp"
#include "rmt/specialfun.hpp"

namespace fr = rmt::fredholm;
using fr::IntervalUnion;

TEST(Kernel, SineKernelValues) {
  EXPECT_NEAR(fr::kernel_eval(fr::SineKernel{}, 0.3, 0.3), 1.0, 1e-15);
  EXPECT_NEAR(fr::kernel_eval(fr::SineKernel{}, 1.7, 0.7), 0.0, 1e-15);
  EXPECT_NEAR(fr::kernel_eval(fr::SineKernel{}, 0.5, 0.0), std::sin(std::numbers::pi / 2) / (std::numbers::pi / 2), 1e-15);
}

TEST(Kernel, AiryKernelSymmetricAndDiagonal) {
  EXPECT_DOUBLE_EQ(fr::kernel_eval(fr::AiryKernel{}, 0.3, -1.2), fr::kernel_eval(fr::AiryKernel{}, -1.2, 0.3));
  // K(x, x) = Ai'(x)^2 - x Ai(x)^2.
  for (double x : {-3.0, 0.0, 1.5}) {
    const auto a = rmt::specialfun::airy(x);
    EXPECT_NEAR(fr::kernel_eval(fr::AiryKernel{}, x, x), a.ai_prime * a.ai_prime - x * a.ai * a.ai, 1e-14);
    EXPECT_NEAR(fr::kernel_eval(fr::AiryKernel{}, x, x + 1e-9), fr::kernel_eval(fr::AiryKernel{}, x, x), 1e-8);
    // Both sides of the switch to the near-diagonal expansion agree.
    EXPECT_NEAR(fr::kernel_eval(fr::AiryKernel{}, x, x + 0.99e-3), fr::kernel_eval(fr::AiryKernel{}, x, x + 1.01e-3),
                1e-5);
    const double h = 5e-4;
    const auto b = rmt::specialfun::airy(x + h);
    EXPECT_NEAR(fr::kernel_eval(fr::AiryKernel{}, x, x + h), (a.ai * b.ai_prime - a.ai_prime * b.ai) / (-h), 1e-11);
  }
}

TEST(Kernel, HermiteDiagonalIntegratesToN) {
  const auto rule = rmt::specialfun::gauss_legendre(300, -25.0, 25.0);
  for (int n : {1, 2, 5, 20}) {
    const fr::HermiteKernel k{n};
    EXPECT_NEAR(rule.integrate([&](double x) { return fr::kernel_eval(k, x, x); }), n, 1e-8) << n;
  }
}

TEST(Kernel, CustomKernelReproducesSine) {
  fr::CustomKernel k;
  k.phi = [](double x) { return std::sin(std::numbers::pi * x); };
  k.psi = [](double x) { return std::cos(std::numbers::pi * x); };
  k.dphi = [](double x) { return std::numbers::pi * std::cos(std::numbers::pi * x); };
  k.dpsi = [](double x) { return -std::numbers::pi * std::sin(std::numbers::pi * x); };
  k.prefactor = 1.0 / std::numbers::pi;
  for (double x : {-0.4, 0.2, 1.1})
    for (double y : {-0.3, 0.2, 0.9})
      EXPECT_NEAR(fr::kernel_eval(k, x, y), fr::kernel_eval(fr::SineKernel{}, x, y), 1e-12) << x << " " << y;
  const double det_custom = fr::fredholm_det(k, IntervalUnion::single(0.0, 1.0), 1.0).value;
  const double det_sine = fr::fredholm_det(fr::SineKernel{}, IntervalUnion::single(0.0, 1.0), 1.0).value;
  EXPECT_NEAR(det_custom, det_sine, 1e-10);
}

TEST(Intervals, Construction) {
  EXPECT_TRUE(IntervalUnion::empty().is_empty());
  const auto u = IntervalUnion::from_endpoints({-1.0, 0.0, 2.0, 3.0});
  EXPECT_EQ(u.size(), 2u);
  EXPECT_EQ(u[1].first, 2.0);
  EXPECT_TRUE(IntervalUnion::semi_infinite(0.0).is_semi_infinite());
  EXPECT_THROW(IntervalUnion::from_endpoints({0.0, 1.0, 0.5, 2.0}), rmt::DomainError);
  EXPECT_THROW(IntervalUnion::from_endpoints({0.0}), rmt::DomainError);
  EXPECT_THROW(IntervalUnion::from_endpoints({-INFINITY, 0.0}), rmt::DomainError);
  EXPECT_THROW(IntervalUnion::single(0.0, 1.0).set_truncation(4.0), rmt::DomainError);
}

TEST(FredholmDet, TrivialCases) {
  EXPECT_EQ(fr::fredholm_det(fr::SineKernel{}, IntervalUnion::empty(), 1.0).value, 1.0);
  EXPECT_EQ(fr::fredholm_det(fr::SineKernel{}, IntervalUnion::single(0.0, 2.0), 0.0).value, 1.0);
  EXPECT_EQ(fr::finite_n_gap(7, IntervalUnion::empty()).value, 1.0);
}

TEST(FredholmDet, HermiteSingleEigenvalue) {
  for (double a : {0.25, 1.0, 2.0}) {
    const auto r = fr::finite_n_gap(1, IntervalUnion::single(-a, a));
    EXPECT_NEAR(r.value, 1.0 - std::erf(a), 1e-12) << a;
  }
}

TEST(FredholmDet, AirySelfConvergence) {
  const auto r = fr::fredholm_det(fr::AiryKernel{}, IntervalUnion::semi_infinite(0.0), 1.0, 60, 1e-8);
  EXPECT_GT(r.value, 0.0);
  EXPECT_LT(r.value, 1.0);
  EXPECT_TRUE(r.converged);
  EXPECT_LT(r.error_estimate, 1e-8);
  const double doubled = fr::fredholm_det_fixed(fr::AiryKernel{}, IntervalUnion::semi_infinite(0.0), 1.0, 240);
  EXPECT_NEAR(r.value, doubled, 1e-8);
}

TEST(FredholmDet, KnownSineGap) {
  // E_2(0; (0, 1)) = 0.1702174213791854 from an independent 120-node Nystrom run.
  EXPECT_NEAR(fr::fredholm_det(fr::SineKernel{}, IntervalUnion::single(0.0, 1.0), 1.0).value, 0.17021742137918525,
              1e-12);
}

TEST(FredholmDet, MonotoneInRightEndpoint) {
  double prev = 1.0;
  for (double b = 0.1; b <= 3.0; b += 0.1) {
    const double v = fr::fredholm_det(fr::SineKernel{}, IntervalUnion::single(0.0, b), 1.0).value;
    EXPECT_LE(v, prev);
    EXPECT_GE(v, 0.0);
    prev = v;
  }
  prev = 0.0;
  for (double s = -6.0; s <= 4.0; s += 0.5) {
    const double v = fr::fredholm_det(fr::AiryKernel{}, IntervalUnion::semi_infinite(s), 1.0).value;
    EXPECT_GE(v, prev);  // shrinking (s, inf) raises the gap probability
    EXPECT_LE(v, 1.0);
    prev = v;
  }
}

TEST(FredholmDet, BoundedForPartialLambda) {
  for (double lambda : {0.1, 0.5, 0.9, 1.0}) {
    for (double b : {0.5, 2.0}) {
      const double v = fr::fredholm_det(fr::SineKernel{}, IntervalUnion::single(-b, b), lambda).value;
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
  }
}

TEST(FredholmDet, FarSeparatedIntervalsFactorize) {
  // The sine kernel decays like 1/(pi d), so the union deviates from the product by
  // about L1 L2 / (pi d)^2: near 1e-4 at d = 10 and below 1e-6 once d is a few hundred.
  const auto det = [](std::vector<double> e) {
    return fr::fredholm_det(fr::SineKernel{}, IntervalUnion::from_endpoints(std::move(e)), 1.0).value;
  };
  const double a = det({0.0, 0.8});
  for (double d : {10.0, 400.0}) {
    const double b = det({d + 0.8, d + 1.3});
    const double joint = det({0.0, 0.8, d + 0.8, d + 1.3});
    EXPECT_LE(std::abs(joint - a * b), 0.8 * 0.5 / (std::numbers::pi * std::numbers::pi * d * d)) << d;
    // Emptiness events are decreasing in the counts, and counts of a determinantal
    // process on disjoint sets are negatively associated, so joint <= product.
    EXPECT_LE(joint, a * b + 1e-15) << d;
  }
  const double far_b = det({400.8, 401.3});
  EXPECT_NEAR(det({0.0, 0.8, 400.8, 401.3}), a * far_b, 1e-6);
}

TEST(FredholmDet, FiniteNBulkApproachesSine) {
  const int n = 50;
  const double rho0 = std::sqrt(2.0 * n) / std::numbers::pi;  // density at 0 for weight e^{-x^2}
  const double half = 0.5 / rho0;
  const double finite = fr::finite_n_gap(n, IntervalUnion::single(-half, half)).value;
  const double limit = fr::fredholm_det(fr::SineKernel{}, IntervalUnion::single(-0.5, 0.5), 1.0).value;
  EXPECT_NEAR(finite, limit, 1e-2);
}

TEST(FredholmDet, NonConvergenceIsReported) {
  const auto r = fr::fredholm_det(fr::SineKernel{}, IntervalUnion::single(0.0, 12.0), 1.0, 10, 1e-12);
  EXPECT_FALSE(r.converged);
  EXPECT_GT(r.error_estimate, 1e-12);
  EXPECT_EQ(r.order, 10);
}

TEST(FredholmDet, Validation) {
  EXPECT_THROW(fr::fredholm_det(fr::SineKernel{}, IntervalUnion::single(0, 1), 1.0, 9), rmt::DomainError);
  EXPECT_THROW(fr::fredholm_det(fr::SineKernel{}, IntervalUnion::semi_infinite(0), 1.0), rmt::DomainError);
  EXPECT_THROW(fr::finite_n_gap(0, IntervalUnion::single(0, 1)), rmt::DomainError);
}
