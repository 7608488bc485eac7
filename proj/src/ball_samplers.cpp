// SPDX-FileCopyrightText: Copyright (c) 2026 lpball developers
// SPDX-License-Identifier: Apache-2.0

#include "lpball/ball_samplers.hpp"

#include <cmath>
#include <sstream>

#include "lpball/ball_geometry.hpp"
#include "lpball/distributions.hpp"
#include "lpball/error.hpp"

namespace lpball {
namespace {

void require_dimension(std::size_t n) {
  if (n == 0) fail(ErrorKind::parameter_domain, "ball dimension must be at least 1");
}

// Fills g with iid G_p draws and returns sum |g_i|^p.
double draw_gp_vector(double p, RandomStream& stream, std::span<double> g) {
  double s = 0.0;
  for (double& v : g) {
    v = draw_gp(p, stream);
    s += std::pow(std::fabs(v), p);
  }
  return s;
}

}  // namespace

GDParams uniform_ball_params(std::size_t n, double p) {
  GDParams params;
  params.a.assign(n, 1.0 / p);
  params.b.resize(n);
  for (std::size_t j = 1; j <= n; ++j) params.b[j - 1] = 1.0 + static_cast<double>(n - j) / p;
  return params;
}

SampleBatch sample_pgd(std::size_t n, double p, const GDParams& params, std::size_t count,
                       RandomStream& stream, unsigned threads) {
  require_dimension(n);
  require_finite_p(p);
  params.validate();
  if (params.size() != n) {
    std::ostringstream os;
    os << "pgd parameters have length " << params.size() << " but the dimension is " << n;
    fail(ErrorKind::parameter_domain, os.str());
  }
  SampleBatch batch;
  batch.spec = {n, p, DistributionKind::pgd, UniformMethod::canonical, params, false};
  batch.columns = n;
  batch.seed = stream.seed();
  fill_rows(count, n, stream, threads, batch.rows, [&](RandomStream& rs, std::span<double> row) {
    double log_rem = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double z;
      do {
        z = draw_beta(params.a[j], params.b[j], false, rs);
      } while (!(1.0 - z > kBoundaryMargin));
      const double c = draw_rademacher(rs) * std::pow(z, 1.0 / p);
      row[j] = c * std::exp(log_rem / p);
      log_rem += std::log1p(-z);
    }
  });
  return batch;
}

SampleBatch sample_uniform_ball(std::size_t n, double p, UniformMethod method, std::size_t count,
                                RandomStream& stream, unsigned threads) {
  require_dimension(n);
  if (std::isinf(p) && p > 0) {
    SampleBatch batch;
    batch.spec = {n, p, DistributionKind::uniform, method, {}, false};
    batch.columns = n;
    batch.seed = stream.seed();
    fill_rows(count, n, stream, threads, batch.rows, [&](RandomStream& rs, std::span<double> row) {
      for (double& v : row) v = 2.0 * rs.uniform_open() - 1.0;
    });
    return batch;
  }
  require_finite_p(p);
  if (method == UniformMethod::canonical) {
    SampleBatch batch = sample_pgd(n, p, uniform_ball_params(n, p), count, stream, threads);
    batch.spec.kind = DistributionKind::uniform;
    batch.spec.method = method;
    batch.spec.params = {};
    return batch;
  }
  SampleBatch batch;
  batch.spec = {n, p, DistributionKind::uniform, method, {}, false};
  batch.columns = n;
  batch.seed = stream.seed();
  const double inv_n = 1.0 / static_cast<double>(n);
  fill_rows(count, n, stream, threads, batch.rows, [&](RandomStream& rs, std::span<double> row) {
    // Rows within kBoundaryMargin of the sphere are redrawn.
    for (;;) {
      const double s = draw_gp_vector(p, rs, row);
      double scale;
      double norm_pow;
      if (method == UniformMethod::scaled_cone) {
        const double u = rs.uniform_open();
        scale = std::pow(u, inv_n) / std::pow(s, 1.0 / p);
        norm_pow = std::pow(u, p * inv_n);
      } else {
        const double e = draw_exponential(rs);
        scale = 1.0 / std::pow(s + e, 1.0 / p);
        norm_pow = s / (s + e);
      }
      if (!(1.0 - norm_pow > kBoundaryMargin)) continue;
      for (double& v : row) v *= scale;
      return;
    }
  });
  return batch;
}

SampleBatch sample_cone_sphere(std::size_t n, double p, std::size_t count, RandomStream& stream,
                               unsigned threads) {
  require_dimension(n);
  require_finite_p(p);
  SampleBatch batch;
  batch.spec = {n, p, DistributionKind::cone_sphere, UniformMethod::canonical, {}, false};
  batch.columns = n;
  batch.seed = stream.seed();
  fill_rows(count, n, stream, threads, batch.rows, [&](RandomStream& rs, std::span<double> row) {
    draw_gp_vector(p, rs, row);
    const double norm = p_norm(std::span<const double>(row.data(), row.size()), p);
    for (double& v : row) v /= norm;
  });
  return batch;
}

SampleBatch sample(const BallDistributionSpec& spec, std::size_t count, RandomStream& stream,
                   unsigned threads) {
  switch (spec.kind) {
    case DistributionKind::pgd: return sample_pgd(spec.n, spec.p, spec.params, count, stream, threads);
    case DistributionKind::uniform:
      return sample_uniform_ball(spec.n, spec.p, spec.method, count, stream, threads);
    case DistributionKind::cone_sphere: return sample_cone_sphere(spec.n, spec.p, count, stream, threads);
    default: break;
  }
  fail(ErrorKind::usage, std::string("sample() cannot draw distribution kind ") + to_string(spec.kind));
}

double radial_cdf(std::size_t n, double p, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    std::ostringstream os;
    os << "radial_cdf argument must lie in [0,1], got " << t;
    fail(ErrorKind::domain, os.str());
  }
  return std::pow(t, static_cast<double>(n) / p);
}

}  // namespace lpball
