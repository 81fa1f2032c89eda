#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace rmt::linalg {

/// log|det A| and sign(det A) from an LU factorization with partial pivoting.
struct LogDet {
  double log_abs = 0.0;
  int sign = 1;  // 0 when the matrix is singular

  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
};

/// Factorizes the row-major n x n matrix in place. `T` may be double,
/// long double or __float128; each pivot is logged after conversion to double,
/// which only requires pivots inside double range.
template <class T>
LogDet log_det_lu(std::span<T> a, std::size_t n) {
  LogDet out;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    T best = a[k * n + k] < T(0) ? -a[k * n + k] : a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const T v = a[i * n + k] < T(0) ? -a[i * n + k] : a[i * n + k];
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == T(0)) {
      out.sign = 0;
      out.log_abs = -INFINITY;
      return out;
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      out.sign = -out.sign;
    }
    const T pivot = a[k * n + k];
    const double pd = static_cast<double>(pivot);
    out.log_abs += std::log(std::abs(pd));
    if (pd < 0) out.sign = -out.sign;
    for (std::size_t i = k + 1; i < n; ++i) {
      const T f = a[i * n + k] / pivot;
      if (f == T(0)) continue;
      T* row = &a[i * n];
      const T* prow = &a[k * n];
      for (std::size_t j = k + 1; j < n; ++j) row[j] -= f * prow[j];
    }
  }
  return out;
}

/// Solves A x = b (row-major, n x n) by Gaussian elimination with partial
/// pivoting. A and b are overwritten; returns false for a singular pivot.
inline bool lu_solve(std::span<double> a, std::span<double> b, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(a[k * n + k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a[i * n + k]) > best) {
        best = std::abs(a[i * n + k]);
        piv = i;
      }
    }
    if (best == 0.0) return false;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      std::swap(b[k], b[piv]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a[i * n + k] / a[k * n + k];
      if (f == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
      b[i] -= f * b[k];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    double s = b[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= a[k * n + j] * b[j];
    b[k] = s / a[k * n + k];
  }
  return true;
}

/// Minimizes ||A x - b||_2 for a row-major m x k matrix (m >= k) by Householder
/// QR. Returns false when A is numerically rank deficient.
inline bool least_squares(std::vector<double> a, std::vector<double> b, std::size_t m,
                          std::size_t k, std::vector<double>& x) {
  for (std::size_t j = 0; j < k; ++j) {
    double norm = 0.0;
    for (std::size_t i = j; i < m; ++i) norm += a[i * k + j] * a[i * k + j];
    norm = std::sqrt(norm);
    if (norm == 0.0) return false;
    const double alpha = a[j * k + j] > 0 ? -norm : norm;
    std::vector<double> v(m - j);
    for (std::size_t i = j; i < m; ++i) v[i - j] = a[i * k + j];
    v[0] -= alpha;
    double vv = 0.0;
    for (double t : v) vv += t * t;
    if (vv == 0.0) continue;
    for (std::size_t c = j; c < k; ++c) {
      double s = 0.0;
      for (std::size_t i = j; i < m; ++i) s += v[i - j] * a[i * k + c];
      s *= 2.0 / vv;
      for (std::size_t i = j; i < m; ++i) a[i * k + c] -= s * v[i - j];
    }
    double s = 0.0;
    for (std::size_t i = j; i < m; ++i) s += v[i - j] * b[i];
    s *= 2.0 / vv;
    for (std::size_t i = j; i < m; ++i) b[i] -= s * v[i - j];
  }
  double rmax = 0.0;
  for (std::size_t j = 0; j < k; ++j) rmax = std::max(rmax, std::abs(a[j * k + j]));
  x.assign(k, 0.0);
  for (std::size_t j = k; j-- > 0;) {
    if (std::abs(a[j * k + j]) <= 1e-13 * rmax) return false;
    double s = b[j];
    for (std::size_t c = j + 1; c < k; ++c) s -= a[j * k + c] * x[c];
    x[j] = s / a[j * k + j];
  }
  return true;
}

}  // namespace rmt::linalg
