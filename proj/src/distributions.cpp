// SPDX-FileCopyrightText: Copyright (c) 2026 lpball developers
// SPDX-License-Identifier: Apache-2.0

#include "lpball/distributions.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "lpball/error.hpp"

namespace lpball {
namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    std::ostringstream os;
    os << name << " must be a positive finite real, got " << value;
    fail(ErrorKind::parameter_domain, os.str());
  }
}

// Marsaglia & Tsang (2000), shape >= 1, returns log of the variate.
double log_gamma_mt(double shape, RandomStream& stream) {
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = stream.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = stream.uniform_open();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return std::log(d * v);
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return std::log(d * v);
  }
}

// Cheng (1978) algorithm BB, min(a,b) > 1.
double beta_cheng_bb(double a, double b, RandomStream& stream) {
  const double a0 = std::min(a, b);
  const double b0 = std::max(a, b);
  const double alpha = a0 + b0;
  const double beta = std::sqrt((alpha - 2.0) / (2.0 * a0 * b0 - alpha));
  const double gamma = a0 + 1.0 / beta;
  const double log4 = std::log(4.0);
  double w;
  for (;;) {
    const double u1 = stream.uniform_open();
    const double u2 = stream.uniform_open();
    const double v = beta * std::log(u1 / (1.0 - u1));
    w = a0 * std::exp(v);
    const double z = u1 * u1 * u2;
    const double r = gamma * v - log4;
    const double s = a0 + r - w;
    if (s + 2.609438 >= 5.0 * z) break;
    const double t = std::log(z);
    if (s > t) break;
    if (r + alpha * std::log(alpha / (b0 + w)) >= t) break;
  }
  if (!std::isfinite(w)) return a == a0 ? 1.0 : 0.0;
  return a == a0 ? w / (b0 + w) : b0 / (b0 + w);
}

// Cheng (1978) algorithm BC, min(a,b) <= 1.
double beta_cheng_bc(double a, double b, RandomStream& stream) {
  const double a0 = std::max(a, b);
  const double b0 = std::min(a, b);
  const double alpha = a0 + b0;
  const double beta = 1.0 / b0;
  const double delta = 1.0 + a0 - b0;
  const double k1 = delta * (0.0138889 + 0.0416667 * b0) / (a0 * beta - 0.777778);
  const double k2 = 0.25 + (0.5 + 0.25 / delta) * b0;
  double w;
  for (;;) {
    const double u1 = stream.uniform_open();
    const double u2 = stream.uniform_open();
    double z;
    if (u1 < 0.5) {
      const double y = u1 * u2;
      z = u1 * y;
      if (0.25 * u2 + z - y >= k1) continue;
    } else {
      z = u1 * u1 * u2;
      if (z <= 0.25) {
        w = a0 * std::exp(beta * std::log(u1 / (1.0 - u1)));
        break;
      }
      if (z >= k2) continue;
    }
    const double v = beta * std::log(u1 / (1.0 - u1));
    w = a0 * std::exp(v);
    if (alpha * (std::log(alpha / (b0 + w)) + v) - 1.3862944 >= std::log(z)) break;
  }
  if (!std::isfinite(w)) return a == a0 ? 1.0 : 0.0;
  return a == a0 ? w / (b0 + w) : b0 / (b0 + w);
}

}  // namespace

double draw_log_gamma(double shape, RandomStream& stream) {
  require_positive(shape, "gamma shape");
  if (shape >= 1.0) return log_gamma_mt(shape, stream);
  const double boosted = log_gamma_mt(shape + 1.0, stream);
  return boosted + std::log(stream.uniform_open()) / shape;
}

double draw_gamma(double shape, double rate, RandomStream& stream) {
  require_positive(shape, "gamma shape");
  require_positive(rate, "gamma rate");
  for (;;) {
    const double x = std::exp(draw_log_gamma(shape, stream)) / rate;
    if (x > 0.0 && std::isfinite(x)) return x;
  }
}

double draw_beta(double a, double b, bool symmetric, RandomStream& stream) {
  require_positive(a, "beta parameter a");
  require_positive(b, "beta parameter b");
  double x;
  do {
    x = std::min(a, b) > 1.0 ? beta_cheng_bb(a, b, stream) : beta_cheng_bc(a, b, stream);
  } while (!(x > 0.0 && x < 1.0));
  return symmetric ? 2.0 * x - 1.0 : x;
}

double draw_gp(double p, RandomStream& stream) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    std::ostringstream os;
    os << "G_p requires finite p >= 1, got " << p;
    fail(ErrorKind::parameter_domain, os.str());
  }
  const double magnitude = std::exp(draw_log_gamma(1.0 / p, stream) / p);
  return draw_rademacher(stream) * magnitude;
}

double draw_rademacher(RandomStream& stream) {
  return (stream.next_u64() >> 63) != 0 ? 1.0 : -1.0;
}

double draw_exponential(RandomStream& stream) { return -std::log(stream.uniform_open()); }

}  // namespace lpball
