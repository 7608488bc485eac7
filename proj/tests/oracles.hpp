// SPDX-FileCopyrightText: Copyright (c) 2026 lpball developers
// SPDX-License-Identifier: Apache-2.0

// Independent reference computations used by the tests. Nothing here calls
// into the code under test except for the random stream.

#pragma once

#include <Eigen/Dense>
#include <boost/math/distributions/beta.hpp>
#include <boost/math/distributions/gamma.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracle {

inline double beta_cdf(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return boost::math::cdf(boost::math::beta_distribution<>(a, b), x);
}

inline double gamma_cdf(double shape, double rate, double x) {
  if (x <= 0.0) return 0.0;
  return boost::math::cdf(boost::math::gamma_distribution<>(shape, 1.0 / rate), x);
}

/// CDF of a symmetric density on the line by adaptive quadrature of the
/// half-line tail.
inline double symmetric_cdf(const std::function<double(double)>& density, double x) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  const double ax = std::fabs(x);
  const double tail = integrator.integrate(density, ax, std::numeric_limits<double>::infinity());
  return x >= 0.0 ? 1.0 - tail : tail;
}

/// Central-difference Jacobian of f: R^n -> R^n.
inline Eigen::MatrixXd jacobian(const std::function<std::vector<double>(const std::vector<double>&)>& f,
                                const std::vector<double>& x, double h) {
  const std::size_t n = x.size();
  Eigen::MatrixXd jac(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> up = x, down = x;
    up[j] += h;
    down[j] -= h;
    const auto fu = f(up);
    const auto fd = f(down);
    for (std::size_t i = 0; i < n; ++i) jac(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
        (fu[i] - fd[i]) / (2.0 * h);
  }
  return jac;
}

/// Central-difference Jacobian determinant of f: R^n -> R^n, evaluated in
/// long double. The step is a power of two so c +- h is exact.
inline long double jacobian_det_ld(
    const std::function<std::vector<long double>(const std::vector<double>&)>& f, const std::vector<double>& x,
    double h) {
  const std::size_t n = x.size();
  h = std::exp2(std::floor(std::log2(h)));
  Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> jac(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> up = x, down = x;
    up[j] += h;
    down[j] -= h;
    const auto fu = f(up);
    const auto fd = f(down);
    for (std::size_t i = 0; i < n; ++i)
      jac(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = (fu[i] - fd[i]) / (2.0L * h);
  }
  return jac.fullPivLu().determinant();
}

/// Moments m_1..m_N from canonical moments through the Jacobi (continued
/// fraction) route: zeta_1 = c_1, zeta_k = (1 - c_{k-1}) c_k, recursion
/// coefficients a_k = zeta_{2k-1} + zeta_{2k}, b_k^2 = zeta_{2k} zeta_{2k+1},
/// and m_n = e_0^T J^n e_0 for the tridiagonal J. Long double throughout.
inline std::vector<long double> moments_from_canonical(const std::vector<double>& c) {
  const std::size_t n = c.size();
  std::vector<long double> zeta(n + 2, 0.0L);
  for (std::size_t k = 1; k <= n; ++k) {
    const long double ck = c[k - 1];
    zeta[k] = k == 1 ? ck : (1.0L - static_cast<long double>(c[k - 2])) * ck;
  }
  const std::size_t dim = n / 2 + 2;
  Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> j =
      Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>::Zero(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const std::size_t odd = 2 * k + 1, even = 2 * k;
    const long double z_odd = odd <= n ? zeta[odd] : 0.0L;
    const long double z_even = even >= 1 && even <= n ? zeta[even] : 0.0L;
    j(k, k) = z_even + z_odd;
    if (k + 1 < dim) {
      const std::size_t e2 = 2 * k + 2;
      const long double prod = (odd <= n ? zeta[odd] : 0.0L) * (e2 <= n ? zeta[e2] : 0.0L);
      j(k, k + 1) = j(k + 1, k) = std::sqrt(prod);
    }
  }
  std::vector<long double> m(n);
  Eigen::Matrix<long double, Eigen::Dynamic, 1> v = Eigen::Matrix<long double, Eigen::Dynamic, 1>::Zero(dim);
  v(0) = 1.0L;
  for (std::size_t k = 0; k < n; ++k) {
    v = j * v;
    m[k] = v(0);
  }
  return m;
}

/// Szego recursion: Phi_{n+1}(z) = z Phi_n(z) - conj(alpha_n) Phi_n^*(z) with
/// alpha_n = -c_{n+1}... expressed directly through c: Phi_{n+1}(0) = -conj(c_{n+1}).
/// Returns the monic polynomial coefficients (constant term first).
inline std::vector<std::complex<long double>> szego_polynomial(const std::vector<std::complex<double>>& c) {
  using C = std::complex<long double>;
  std::vector<C> phi{C(1.0L, 0.0L)};
  for (const auto& ck : c) {
    const C a0 = -std::conj(C(ck.real(), ck.imag()));  // Phi_{n+1}(0)
    const std::size_t n = phi.size() - 1;
    std::vector<C> next(n + 2, C(0.0L, 0.0L));
    for (std::size_t i = 0; i <= n; ++i) next[i + 1] += phi[i];  // z Phi_n
    // reversed polynomial Phi_n^*(z) = z^n conj(Phi_n(1/conj z))
    for (std::size_t i = 0; i <= n; ++i) next[i] += a0 * std::conj(phi[n - i]);
    phi = std::move(next);
  }
  return phi;
}

/// Toeplitz inner product <f, g> = sum_{i,j} f_i conj(g_j) t_{i-j}.
inline std::complex<long double> toeplitz_inner(const std::vector<std::complex<long double>>& f,
                                                const std::vector<std::complex<long double>>& g,
                                                const std::vector<std::complex<long double>>& t) {
  std::complex<long double> s(0.0L, 0.0L);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      const long k = static_cast<long>(i) - static_cast<long>(j);
      const auto tk = k >= 0 ? t[static_cast<std::size_t>(k)] : std::conj(t[static_cast<std::size_t>(-k)]);
      s += f[i] * std::conj(g[j]) * tk;
    }
  return s;
}

}  // namespace oracle
