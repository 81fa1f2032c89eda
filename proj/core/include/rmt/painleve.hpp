#pragma once

#include <span>
#include <vector>

#include "rmt/error.hpp"

namespace rmt::painleve {

/// Hastings–McLeod quantities at one abscissa.
struct PiiState {
  double x = 0.0;
  double q = 0.0;
  double q_prime = 0.0;
  double int_q = 0.0;    // I(x) = int_x^inf q
  double int_q2 = 0.0;   // K(x) = int_x^inf q^2
  double int_xq2 = 0.0;  // J(x) = int_x^inf (t - x) q(t)^2 dt
};

struct PiiOptions {
  double x_start = 10.0;
  double x_end = -16.0;
  double tol = 1e-12;
  double spacing = 1.0 / 128.0;
  /// Below this abscissa the marching solution is replaced by a collocation
  /// boundary-value solve (only when x_end lies below it).
  double match_point = -6.0;
  int bvp_nodes = 128;
  bool bvp_continuation = true;
  /// q ~ k Ai(x) at x_start. Any k != 1 leaves the Hastings–McLeod branch.
  double initial_scale = 1.0;
};

/// Tabulated Hastings–McLeod solution of q'' = x q + 2 q^3, q ~ Ai(x) at +inf,
/// on a uniform grid running from x_start down to x_end.
class PainleveSolution {
 public:
  const std::vector<double>& grid() const noexcept { return grid_; }
  const std::vector<double>& q() const noexcept { return q_; }
  const std::vector<double>& q_prime() const noexcept { return q_prime_; }
  const std::vector<double>& int_q() const noexcept { return int_q_; }
  const std::vector<double>& int_q2() const noexcept { return int_q2_; }
  const std::vector<double>& int_xq2() const noexcept { return int_xq2_; }
  double x_start() const noexcept { return grid_.front(); }
  double x_end() const noexcept { return grid_.back(); }
  /// Index of the first grid node produced by the boundary-value continuation
  /// (grid().size() when the whole table was marched).
  std::size_t bvp_begin() const noexcept { return bvp_begin_; }

  /// Quintic Hermite interpolation between nodes (values and the first two
  /// derivatives are known exactly from the ODE). Above x_start the Airy tail
  /// is used. RangeError below x_end.
  PiiState at(double x) const;

 private:
  friend PainleveSolution solve_pii(const PiiOptions& options);
  std::vector<double> grid_, q_, q_prime_, int_q_, int_q2_, int_xq2_;
  std::size_t bvp_begin_ = 0;
};

/// Requires x_start >= 6, x_end >= -20, tol in [1e-12, 1e-6].
/// InstabilityError when the marched trajectory leaves the branch (|q| > 1e6
/// or q <= 0), reporting the abscissa of departure.
PainleveSolution solve_pii(double x_start, double x_end, double tol);
PainleveSolution solve_pii(const PiiOptions& options);

/// Shared solution with the default options, built on first use.
const PainleveSolution& default_pii_solution();

/// Tracy–Widom distribution function F_beta(s), beta in {1, 2, 4}.
double tw_cdf(int beta, double s, const PainleveSolution& sol = default_pii_solution());
/// Density f_beta(s) from the closed forms in q, I, K, J.
double tw_pdf(int beta, double s, const PainleveSolution& sol = default_pii_solution());

struct TWDistribution {
  int beta = 2;
  std::vector<double> s_grid;
  std::vector<double> cdf;
  std::vector<double> pdf;

  /// Monotone cubic (Fritsch–Carlson) interpolation; clamps outside the grid.
  double cdf_at(double s) const;
  /// Cubic Hermite interpolation using the tabulated density.
  double pdf_at(double s) const;
  /// Composite Simpson rule over the grid (trapezoid on a trailing odd panel).
  double integrate_pdf() const;
};

TWDistribution tw_tabulate(int beta, double s_min, double s_max, int n_points,
                           const PainleveSolution& sol = default_pii_solution());

/// Solution of the sigma form of Painleve V,
///   (x s'')^2 + 4 (x s' - s)(x s' - s + s'^2) = 0,  s(x) ~ -(lambda/pi) x at 0,
/// together with log det(I - lambda K_sine on (0, x/pi)) = int_0^x s(u)/u du.
struct SigmaPVState {
  double x = 0.0;
  double sigma = 0.0;
  double sigma_prime = 0.0;
  double sigma_second = 0.0;
  double log_det = 0.0;
};

class SigmaPVSolution {
 public:
  double lambda() const noexcept { return lambda_; }
  const std::vector<double>& grid() const noexcept { return grid_; }
  const std::vector<double>& sigma() const noexcept { return sigma_; }
  const std::vector<double>& sigma_prime() const noexcept { return sigma_prime_; }
  const std::vector<double>& sigma_second() const noexcept { return sigma_second_; }
  const std::vector<double>& log_det() const noexcept { return log_det_; }
  /// Largest relative residual of the quadratic relation over the grid.
  double max_residual() const noexcept { return max_residual_; }
  double x_max() const noexcept { return grid_.back(); }

  /// Interpolated state; below the first node the small-x series is used.
  /// RangeError above x_max or below 0.
  SigmaPVState at(double x) const;

 private:
  friend SigmaPVSolution solve_sigma_pv(double lambda, double x_max, double tol);
  double lambda_ = 1.0;
  double max_residual_ = 0.0;
  std::vector<double> grid_, sigma_, sigma_prime_, sigma_second_, log_det_;
};

/// Requires lambda in (0, 1], 0 < x_max <= 40, tol in [1e-12, 1e-6].
/// SolverError when the quadratic relation's residual exceeds tol.
SigmaPVSolution solve_sigma_pv(double lambda, double x_max, double tol);

/// Sine-kernel gap probability and nearest-neighbour spacing law (beta = 2),
/// all from one sigma(x; 1) table.
class GaudinLaw {
 public:
  explicit GaudinLaw(double s_max = 6.0, double tol = 1e-12);
  /// E_2(0; (0, s)).
  double gap(double s) const;
  /// p_2(s) = d^2/ds^2 E_2(0; (0, s)).
  double pdf(double s) const;
  /// int_0^s p_2 = 1 + dE_2/ds.
  double cdf(double s) const;
  double s_max() const noexcept { return s_max_; }
  const SigmaPVSolution& solution() const noexcept { return sol_; }

 private:
  double s_max_;
  SigmaPVSolution sol_;
};

const GaudinLaw& default_gaudin_law();

/// p_2 on an increasing grid inside (0, 5].
std::vector<double> gaudin_density(std::span<const double> s_grid);

}  // namespace rmt::painleve
