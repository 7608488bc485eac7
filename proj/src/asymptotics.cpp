// SPDX-FileCopyrightText: Copyright (c) 2026 lpball developers
// SPDX-License-Identifier: Apache-2.0

#include "lpball/asymptotics.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>
#include <sstream>

#include "lpball/ball_geometry.hpp"
#include "lpball/ball_samplers.hpp"
#include "lpball/error.hpp"

namespace lpball {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_density_params(double a, double p) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    std::ostringstream os;
    os << "limit density shape a must be positive, got " << a;
    fail(ErrorKind::parameter_domain, os.str());
  }
  require_finite_p(p);
}

}  // namespace

bool RateValue::finite() const noexcept { return std::isfinite(value); }

RateValue ldp_rate_ball(std::span<const double> x, double p) {
  require_finite_p(p);
  if (x.empty()) return {0.0};
  const double s = p_norm_pow(x, p);
  if (!(s < 1.0)) return {kInf};
  return {-std::log1p(-s) / p};
}

RateValue ldp_rate_canonical(std::span<const double> c, double p) {
  require_finite_p(p);
  double total = 0.0;
  for (double v : c) {
    const double t = std::pow(std::fabs(v), p);
    if (!(t < 1.0)) return {kInf};
    total -= std::log1p(-t);
  }
  return {total / p};
}

RateValue ldp_rate_beta(double x, double c) {
  if (!(c > 0.0)) {
    std::ostringstream os;
    os << "Beta rate constant must be positive, got " << c;
    fail(ErrorKind::parameter_domain, os.str());
  }
  if (x < 0.0) fail(ErrorKind::domain, "Beta rate function is defined on [0,1)");
  if (!(x < 1.0)) return {kInf};
  return {-c * std::log1p(-x)};
}

RateValue ldp_rate_functional(std::span<const double> coeffs) {
  if (coeffs.empty()) return {0.0};
  const double norm = p_norm(coeffs, 2.0);
  if (!(norm < 1.0)) return {kInf};
  return {-0.5 * std::log1p(-norm)};
}

double limit_density_pgd(double a, double p, double x) {
  require_density_params(a, p);
  const double ax = std::fabs(x);
  if (ax == 0.0) {
    if (p * a > 1.0) return 0.0;
    if (p * a < 1.0) return kInf;
  }
  const double log_density = (1.0 - a) * std::log(p) - std::log(2.0) - std::lgamma(a) +
                             (p * a - 1.0) * std::log(ax) - std::pow(ax, p) / p;
  return std::exp(log_density);
}

double limit_cdf_pgd(double a, double p, double x) {
  require_density_params(a, p);
  if (x == 0.0) return 0.5;
  const double tail_mass = boost::math::gamma_p(a, std::pow(std::fabs(x), p) / p);
  return x > 0.0 ? 0.5 + 0.5 * tail_mass : 0.5 - 0.5 * tail_mass;
}

std::vector<double> self_normalized_path(std::size_t n, double p, std::span<const double> grid,
                                         RandomStream& stream) {
  if (n == 0) fail(ErrorKind::parameter_domain, "path dimension must be at least 1");
  require_finite_p(p);
  double previous = -kInf;
  for (double s : grid) {
    if (!(s >= 0.0 && s <= 1.0) || s < previous) {
      fail(ErrorKind::domain, "path grid must be nondecreasing values in [0,1]");
    }
    previous = s;
  }
  const SampleBatch eta = sample_cone_sphere(n, p, 1, stream);
  const double scale = std::pow(p, -1.0 / p) * std::pow(static_cast<double>(n), 1.0 / p - 0.5);
  std::vector<double> out;
  out.reserve(grid.size());
  double partial = 0.0;
  std::size_t summed = 0;
  for (double s : grid) {
    const auto upto = static_cast<std::size_t>(std::floor(static_cast<double>(n) * s));
    for (; summed < std::min(upto, n); ++summed) partial += eta.rows[summed];
    out.push_back(scale * partial);
  }
  return out;
}

}  // namespace lpball
