// SPDX-FileCopyrightText: Copyright (c) 2026 lpball developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lpball/random.hpp"

namespace lpball {

/// Large-deviation rate values; +infinity outside the domain of the law.
struct RateValue {
  double value = 0.0;
  bool finite() const noexcept;
};

/// I(x) = -(1/p) ln(1 - ||x||_p^p); infinity when ||x||_p >= 1.
RateValue ldp_rate_ball(std::span<const double> x, double p);

/// J(c) = -(1/p) sum ln(1 - |c_i|^p); infinity when some |c_i| >= 1.
RateValue ldp_rate_canonical(std::span<const double> c, double p);

/// J(x) = -c log(1 - x) on [0,1); infinity for x >= 1.
RateValue ldp_rate_beta(double x, double c);

/// I_B(f) = -(1/2) ln(1 - ||f||_2) for f given by its coefficients in an
/// orthonormal basis. The norm enters unsquared, matching the published
/// statement of the functional principle.
RateValue ldp_rate_functional(std::span<const double> coeffs);

/// Density of eps Z^{1/p}, Z ~ gamma(a, 1/p), eps Rademacher:
/// p^{1-a} / (2 Gamma(a)) |x|^{pa-1} exp(-|x|^p / p).
double limit_density_pgd(double a, double p, double x);

/// CDF of the same law.
double limit_cdf_pgd(double a, double p, double x);

/// Values p^{-1/p} N^{1/p-1/2} sum_{k <= floor(N s)} eta_k at each grid point
/// s, where eta is one cone-sphere draw in dimension N.
std::vector<double> self_normalized_path(std::size_t n, double p, std::span<const double> grid,
                                         RandomStream& stream);

}  // namespace lpball
