// SPDX-FileCopyrightText: Copyright (c) 2026 lpball developers
// SPDX-License-Identifier: Apache-2.0

#include "lpball/simplex.hpp"

#include <cmath>
#include <sstream>

#include "lpball/distributions.hpp"
#include "lpball/error.hpp"

namespace lpball {

void GDParams::validate() const {
  if (a.size() != b.size()) {
    std::ostringstream os;
    os << "GD parameter lengths differ: a has " << a.size() << ", b has " << b.size();
    fail(ErrorKind::parameter_domain, os.str());
  }
  if (a.empty()) fail(ErrorKind::parameter_domain, "GD parameters are empty");
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (!(a[j] > 0.0) || !(b[j] > 0.0) || !std::isfinite(a[j]) || !std::isfinite(b[j])) {
      std::ostringstream os;
      os << "GD parameters must be positive: a[" << j + 1 << "]=" << a[j] << ", b[" << j + 1
         << "]=" << b[j];
      fail(ErrorKind::parameter_domain, os.str());
    }
  }
}

SimplexPoint draw_dirichlet(std::span<const double> a, RandomStream& stream) {
  if (a.empty()) fail(ErrorKind::parameter_domain, "Dirichlet parameter vector is empty");
  SimplexPoint out{std::vector<double>(a.size()), SimplexKind::closed};
  // Gammas are summed in log-space relative to the largest one, so tiny shapes
  // do not underflow the normalization.
  std::vector<double> logs(a.size());
  double top = -INFINITY;
  for (std::size_t i = 0; i < a.size(); ++i) {
    logs[i] = draw_log_gamma(a[i], stream);
    top = std::max(top, logs[i]);
  }
  double total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.p[i] = std::exp(logs[i] - top);
    total += out.p[i];
  }
  for (double& v : out.p) v /= total;
  return out;
}

SimplexPoint stick_break(std::span<const double> z) {
  SimplexPoint out{std::vector<double>(z.size()), SimplexKind::open};
  double remaining = 1.0;
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (!(z[j] > 0.0 && z[j] < 1.0)) {
      std::ostringstream os;
      os << "stick-breaking fraction z[" << j + 1 << "]=" << z[j] << " is not in (0,1)";
      fail(ErrorKind::domain, os.str());
    }
    out.p[j] = z[j] * remaining;
    remaining *= 1.0 - z[j];
  }
  return out;
}

std::vector<double> stick_break_inverse(const SimplexPoint& point) {
  std::vector<double> z(point.p.size());
  long double used = 0.0L;  // extended sum keeps the remainder accurate near the boundary
  for (std::size_t j = 0; j < z.size(); ++j) {
    const double pj = point.p[j];
    const long double remaining = 1.0L - used;
    if (!(pj > 0.0) || !(pj < remaining)) {
      std::ostringstream os;
      os << "open simplex point violated at coordinate " << j + 1 << ": p=" << pj
         << ", remaining mass " << static_cast<double>(remaining);
      fail(ErrorKind::domain, os.str());
    }
    z[j] = static_cast<double>(pj / remaining);
    used += pj;
  }
  return z;
}

SimplexPoint draw_gd(const GDParams& params, RandomStream& stream) {
  params.validate();
  std::vector<double> z(params.size());
  for (std::size_t j = 0; j < z.size(); ++j) z[j] = draw_beta(params.a[j], params.b[j], false, stream);
  return stick_break(z);
}

GDParams gem_params(GemKind kind, double theta, double alpha, std::size_t n) {
  if (kind == GemKind::theta && alpha != 0.0)
    fail(ErrorKind::parameter_domain, "GEM(theta) takes no alpha; use GEM(alpha, theta)");
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    std::ostringstream os;
    os << "GEM alpha must lie in [0,1), got " << alpha;
    fail(ErrorKind::parameter_domain, os.str());
  }
  if (!(theta > -alpha) || !std::isfinite(theta)) {
    std::ostringstream os;
    os << "GEM theta must exceed -alpha, got theta=" << theta << ", alpha=" << alpha;
    fail(ErrorKind::parameter_domain, os.str());
  }
  if (n == 0) fail(ErrorKind::parameter_domain, "GEM truncation length must be positive");
  GDParams out;
  out.a.assign(n, 1.0 - alpha);
  out.b.resize(n);
  for (std::size_t j = 1; j <= n; ++j) out.b[j - 1] = theta + static_cast<double>(j) * alpha;
  return out;
}

}  // namespace lpball
