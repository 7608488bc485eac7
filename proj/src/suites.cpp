// SPDX-FileCopyrightText: Copyright (c) 2026 lpball developers
// SPDX-License-Identifier: Apache-2.0

#include "lpball/suites.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <map>
#include "json.hpp"
#include <sstream>

#include "lpball/asymptotics.hpp"
#include "lpball/ball_geometry.hpp"
#include "lpball/ball_samplers.hpp"
#include "lpball/distributions.hpp"
#include "lpball/error.hpp"
#include "lpball/moment_spaces.hpp"

namespace lpball {
namespace {

constexpr double kPi = 3.14159265358979323846;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

double beta_cdf(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return boost::math::ibeta(a, b, x);
}

// CDF of eps Z^{1/p}, Z ~ Beta(a, b).
double signed_beta_power_cdf(double a, double b, double p, double c) {
  const double half = 0.5 * beta_cdf(a, b, std::pow(std::fabs(c), p));
  return c >= 0.0 ? 0.5 + half : 0.5 - half;
}

double relative_error(double a, double b) {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

std::vector<double> radial_powers(const SampleBatch& batch, double p) {
  std::vector<double> out(batch.count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p_norm_pow(batch.row(i), p);
  return out;
}

SampleBatch canonical_batch(const SampleBatch& batch, double p) {
  SampleBatch out = batch;
  out.spec.kind = DistributionKind::data;
  for (std::size_t i = 0; i < batch.count(); ++i) {
    const auto row = batch.row(i);
    const auto c = to_canonical(BallPoint<double>{{row.begin(), row.end()}, p});
    std::copy(c.c.begin(), c.c.end(), out.row(i).begin());
  }
  return out;
}

// b_{j-1} = a_j + b_j, ending at b_n = tail.
GDParams dirichlet_consistent_params(const std::vector<double>& a, double tail) {
  GDParams params{a, std::vector<double>(a.size())};
  params.b.back() = tail;
  for (std::size_t j = a.size() - 1; j > 0; --j) params.b[j - 1] = a[j] + params.b[j];
  return params;
}

class SuiteRun {
 public:
  SuiteRun(const SuiteConfig& config, std::uint64_t seed) : config_(config), seed_(seed) {}

  const SuiteConfig& config() const { return config_; }
  std::size_t count(std::size_t fallback) const { return config_.count.value_or(fallback); }
  unsigned threads() const { return config_.threads; }

  RandomStream stream(const std::string& key) const { return RandomStream(seed_).split(fnv1a(key)); }

  void add_ks(const std::string& name, const KsResult& ks, double threshold, std::size_t n) {
    outcomes_.push_back({name, ks.statistic, ks.p_value, threshold, ks.p_value >= threshold, n,
                         stream(name).seed()});
  }

  // Deterministic identity check: statistic = worst error, threshold = tolerance.
  void add_check(const std::string& name, double error, double tolerance, std::size_t n) {
    const bool ok = error <= tolerance;
    outcomes_.push_back({name, error, ok ? 1.0 : 0.0, tolerance, ok, n, stream(name).seed()});
  }

  void add(TestOutcome outcome) { outcomes_.push_back(std::move(outcome)); }

  std::vector<TestOutcome> take() { return std::move(outcomes_); }

 private:
  const SuiteConfig& config_;
  std::uint64_t seed_;
  std::vector<TestOutcome> outcomes_;
};

std::vector<double> p_list(const SuiteConfig& config, std::vector<double> fallback) {
  if (config.p) return {*config.p};
  return fallback;
}

// ---------------------------------------------------------------------------

void suite_uniform_equivalence(SuiteRun& run) {
  const std::size_t n = run.config().n.value_or(5);
  const std::size_t count = run.count(100000);
  const UniformMethod methods[] = {UniformMethod::canonical, UniformMethod::scaled_cone,
                                   UniformMethod::gamma_exp};
  for (double p : p_list(run.config(), {1.0, 1.5, 2.0})) {
    const std::string prefix = "uniform-equivalence/n=" + std::to_string(n) + ",p=" + num(p);
    std::vector<SampleBatch> batches;
    for (UniformMethod m : methods) {
      RandomStream s = run.stream(prefix + "/" + to_string(m));
      batches.push_back(sample_uniform_ball(n, p, m, count, s, run.threads()));
    }
    const double threshold = run.config().alpha / static_cast<double>(3 * (n + 1));
    for (std::size_t x = 0; x < 3; ++x) {
      for (std::size_t y = x + 1; y < 3; ++y) {
        const std::string pair = prefix + "/" + to_string(methods[x]) + "~" + to_string(methods[y]);
        for (std::size_t j = 0; j < n; ++j) {
          run.add_ks(pair + "/x" + std::to_string(j + 1),
                     ks_two_sample(batches[x].column(j), batches[y].column(j)), threshold, count);
        }
        run.add_ks(pair + "/radial", ks_two_sample(radial_powers(batches[x], p), radial_powers(batches[y], p)),
                   threshold, count);
      }
    }
  }
}

void suite_pgd_canonical(SuiteRun& run) {
  const std::size_t n = run.config().n.value_or(5);
  const double p = run.config().p.value_or(1.5);
  const std::size_t count = run.count(100000);
  const double alpha = run.config().alpha;
  const std::string prefix = "pgd-canonical/n=" + std::to_string(n) + ",p=" + num(p);

  // Canonical coordinates of uniform draws (drawn by a non-canonical method).
  RandomStream s = run.stream(prefix + "/uniform-draws");
  const SampleBatch uniform = sample_uniform_ball(n, p, UniformMethod::gamma_exp, count, s, run.threads());
  SampleBatch cu = canonical_batch(uniform, p);
  const GDParams up = uniform_ball_params(n, p);
  for (std::size_t j = 0; j < n; ++j) {
    const double a = up.a[j];
    const double b = up.b[j];
    run.add_ks(prefix + "/uniform-c" + std::to_string(j + 1),
               ks_one_sample(cu.column(j), [&](double c) { return signed_beta_power_cdf(a, b, p, c); }),
               alpha / static_cast<double>(n), count);
  }
  if (n >= 2) run.add(independence_scan(cu, alpha, prefix + "/uniform-independence"));

  // General parameters: canonical coordinates follow the signed Beta-power law.
  GDParams general;
  for (std::size_t j = 1; j <= n; ++j) {
    general.a.push_back(0.5 + 0.25 * static_cast<double>(j));
    general.b.push_back(2.0 + 0.5 * static_cast<double>(j));
  }
  RandomStream sg = run.stream(prefix + "/general-draws");
  const SampleBatch gb = sample_pgd(n, p, general, count, sg, run.threads());
  SampleBatch cg = canonical_batch(gb, p);
  for (std::size_t j = 0; j < n; ++j) {
    const double a = general.a[j];
    const double b = general.b[j];
    run.add_ks(prefix + "/general-c" + std::to_string(j + 1),
               ks_one_sample(cg.column(j), [&](double c) { return signed_beta_power_cdf(a, b, p, c); }),
               alpha / static_cast<double>(n), count);
  }
  if (n >= 2) run.add(independence_scan(cg, alpha, prefix + "/general-independence"));

  // Dirichlet route: with b_{j-1} = a_j + b_j, (|X_j|^p) ~ Dir(a_1..a_n; b_n).
  std::vector<double> a;
  const double cycle[] = {0.5, 1.0, 1.5, 0.7, 2.0};
  for (std::size_t j = 0; j < n; ++j) a.push_back(cycle[j % 5]);
  const GDParams relab = dirichlet_consistent_params(a, 1.2);
  RandomStream sr = run.stream(prefix + "/relab-draws");
  const SampleBatch rb = sample_pgd(n, p, relab, count, sr, run.threads());
  std::vector<double> dir_params(a);
  dir_params.push_back(1.2);
  RandomStream sd = run.stream(prefix + "/dirichlet-draws");
  std::vector<double> dir_rows;
  fill_rows(count, n + 1, sd, run.threads(), dir_rows, [&](RandomStream& rs, std::span<double> row) {
    const SimplexPoint d = draw_dirichlet(dir_params, rs);
    std::copy(d.p.begin(), d.p.end(), row.begin());
  });
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> lhs(count), rhs(count);
    for (std::size_t i = 0; i < count; ++i) {
      lhs[i] = std::pow(std::fabs(rb.rows[i * n + j]), p);
      rhs[i] = dir_rows[i * (n + 1) + j];
    }
    run.add_ks(prefix + "/relab-dirichlet-x" + std::to_string(j + 1), ks_two_sample(lhs, rhs),
               alpha / static_cast<double>(n), count);
  }
}

void suite_radial_law(SuiteRun& run) {
  std::vector<std::pair<std::size_t, double>> cases = {{3, 1.0}, {5, 2.0}, {8, 3.0}};
  if (run.config().n || run.config().p) cases = {{run.config().n.value_or(5), run.config().p.value_or(1.5)}};
  const std::size_t count = run.count(100000);
  const double threshold = run.config().alpha / static_cast<double>(3 * cases.size());
  for (const auto& [n, p] : cases) {
    for (UniformMethod m : {UniformMethod::canonical, UniformMethod::scaled_cone, UniformMethod::gamma_exp}) {
      const std::string name = "radial-law/n=" + std::to_string(n) + ",p=" + num(p) + "/" + to_string(m);
      RandomStream s = run.stream(name);
      const SampleBatch batch = sample_uniform_ball(n, p, m, count, s, run.threads());
      const std::size_t dim = n;
      const double pp = p;
      run.add_ks(name, ks_one_sample(radial_powers(batch, p), [=](double t) {
                   return radial_cdf(dim, pp, std::clamp(t, 0.0, 1.0));
                 }),
                 threshold, count);
    }
  }
}

void suite_cone_dirichlet(SuiteRun& run) {
  const std::size_t n = run.config().n.value_or(5);
  const std::size_t count = run.count(100000);
  const double alpha = run.config().alpha;
  for (double p : p_list(run.config(), {1.0, 1.5, 2.0})) {
    const std::string prefix = "cone-dirichlet/n=" + std::to_string(n) + ",p=" + num(p);
    RandomStream s = run.stream(prefix + "/sphere");
    const SampleBatch sphere = sample_cone_sphere(n, p, count, s, run.threads());
    RandomStream sd = run.stream(prefix + "/dirichlet");
    const std::vector<double> params(n, 1.0 / p);
    std::vector<double> dir_rows;
    fill_rows(count, n, sd, run.threads(), dir_rows, [&](RandomStream& rs, std::span<double> row) {
      const SimplexPoint d = draw_dirichlet(params, rs);
      std::copy(d.p.begin(), d.p.end(), row.begin());
    });
    const double threshold = alpha / static_cast<double>(2 * n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<double> lhs(count), rhs(count);
      for (std::size_t i = 0; i < count; ++i) {
        lhs[i] = std::pow(std::fabs(sphere.rows[i * n + j]), p);
        rhs[i] = dir_rows[i * n + j];
      }
      run.add_ks(prefix + "/abs-pow-x" + std::to_string(j + 1), ks_two_sample(lhs, rhs), threshold, count);
    }
    for (std::size_t k = 1; k < n; ++k) {
      std::vector<double> prefix_norms(count);
      for (std::size_t i = 0; i < count; ++i)
        prefix_norms[i] = p_norm_pow(std::span<const double>(sphere.rows.data() + i * n, k), p);
      const double a = static_cast<double>(k) / p;
      const double b = static_cast<double>(n - k) / p;
      run.add_ks(prefix + "/prefix-norm-k" + std::to_string(k),
                 ks_one_sample(prefix_norms, [=](double t) { return beta_cdf(a, b, t); }), threshold, count);
    }
  }
  if (!run.config().n && !run.config().p) {
    const std::string name = "cone-dirichlet/n=2,p=2/angle";
    RandomStream s = run.stream(name);
    const SampleBatch circle = sample_cone_sphere(2, 2.0, count, s, run.threads());
    std::vector<double> angles(count);
    for (std::size_t i = 0; i < count; ++i) angles[i] = std::atan2(circle.rows[2 * i + 1], circle.rows[2 * i]);
    run.add_ks(name, ks_one_sample(angles, [](double t) { return std::clamp((t + kPi) / (2.0 * kPi), 0.0, 1.0); }),
               alpha, count);
  }
}

void suite_nuod(SuiteRun& run) {
  const std::size_t n = run.config().n.value_or(3);
  const std::size_t count = run.count(100000);
  const std::vector<std::vector<double>> grid = {{0.2, 0.4, 0.6}};
  constexpr std::size_t kRounds = 100;
  const auto tag = [&](const std::string& what, double p) {
    return "nuod/" + what + "/n=" + std::to_string(n) + ",p=" + num(p);
  };
  {
    const double p = run.config().p.value_or(2.0);
    const std::string name = tag("uniform-ball", p);
    RandomStream s = run.stream(name);
    const SampleBatch b = sample_uniform_ball(n, p, UniformMethod::scaled_cone, count, s, run.threads());
    RandomStream boot = run.stream(name + "/bootstrap");
    run.add(nuod_check(b, grid, boot, name, kRounds));
  }
  {
    const double p = run.config().p.value_or(1.0);
    const std::string name = tag("cone-sphere", p);
    RandomStream s = run.stream(name);
    const SampleBatch b = sample_cone_sphere(n, p, count, s, run.threads());
    RandomStream boot = run.stream(name + "/bootstrap");
    run.add(nuod_check(b, grid, boot, name, kRounds));
  }
  {
    const double p = run.config().p.value_or(1.5);
    const std::string name = tag("pgd-relab", p);
    std::vector<double> a;
    for (std::size_t j = 0; j < n; ++j) a.push_back(0.5 + 0.5 * static_cast<double>(j % 3));
    RandomStream s = run.stream(name);
    const SampleBatch b = sample_pgd(n, p, dirichlet_consistent_params(a, 1.0), count, s, run.threads());
    RandomStream boot = run.stream(name + "/bootstrap");
    run.add(nuod_check(b, grid, boot, name, kRounds));
  }
  {
    // Independent coordinates: the inequality holds with equality.
    const std::string name = "nuod/product-calibration/n=" + std::to_string(n);
    RandomStream s = run.stream(name);
    const SampleBatch b = sample_uniform_ball(n, kInfiniteP, UniformMethod::canonical, count, s, run.threads());
    RandomStream boot = run.stream(name + "/bootstrap");
    run.add(nuod_check(b, grid, boot, name, kRounds));
  }
}

void suite_poincare_borel(SuiteRun& run) {
  const std::size_t n = run.config().n.value_or(10000);
  const std::size_t count = run.count(2000);
  const std::size_t k = std::min<std::size_t>(3, n);
  const std::vector<double> ps = p_list(run.config(), {1.0, 2.0});
  const double threshold = run.config().alpha / static_cast<double>(2 * k * ps.size());
  for (double p : ps) {
    const std::string prefix = "poincare-borel/n=" + std::to_string(n) + ",p=" + num(p);
    const double scale = std::pow(static_cast<double>(n), 1.0 / p);
    const auto limit = [p](double x) { return limit_cdf_pgd(1.0 / p, p, x); };
    for (const std::string which : {"sphere", "ball"}) {
      RandomStream s = run.stream(prefix + "/" + which);
      const SampleBatch b = which == "sphere"
                                ? sample_cone_sphere(n, p, count, s, run.threads())
                                : sample_uniform_ball(n, p, UniformMethod::scaled_cone, count, s, run.threads());
      for (std::size_t j = 0; j < k; ++j) {
        std::vector<double> col = b.column(j);
        for (double& v : col) v *= scale;
        run.add_ks(prefix + "/" + which + "-x" + std::to_string(j + 1), ks_one_sample(col, limit), threshold,
                   count);
      }
    }

    // Self-normalized partial-sum path: Brownian limit with variance E g^2.
    const std::vector<double> grid = {0.25, 0.5, 0.75, 1.0};
    const std::string dprefix = "poincare-borel/donsker/n=" + std::to_string(n) + ",p=" + num(p);
    RandomStream ps_stream = run.stream(dprefix);
    std::vector<double> paths;
    fill_rows(count, grid.size(), ps_stream, run.threads(), paths, [&](RandomStream& rs, std::span<double> row) {
      const std::vector<double> v = self_normalized_path(n, p, grid, rs);
      std::copy(v.begin(), v.end(), row.begin());
    });
    const double variance = std::exp(std::lgamma(3.0 / p) - std::lgamma(1.0 / p));
    std::vector<double> endpoint(count), first(count), last(count);
    for (std::size_t i = 0; i < count; ++i) {
      endpoint[i] = paths[i * 4 + 3];
      first[i] = paths[i * 4 + 0];
      last[i] = paths[i * 4 + 3] - paths[i * 4 + 2];
    }
    run.add_ks(dprefix + "/endpoint", ks_one_sample(endpoint, [variance](double x) {
                 return 0.5 * std::erfc(-x / std::sqrt(2.0 * variance));
               }),
               run.config().alpha, count);
    double sxy = 0.0, sxx = 0.0, syy = 0.0, mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      mx += first[i];
      my += last[i];
    }
    mx /= static_cast<double>(count);
    my /= static_cast<double>(count);
    for (std::size_t i = 0; i < count; ++i) {
      sxy += (first[i] - mx) * (last[i] - my);
      sxx += (first[i] - mx) * (first[i] - mx);
      syy += (last[i] - my) * (last[i] - my);
    }
    const double r = sxy / std::sqrt(sxx * syy);
    const double band = 3.0 / std::sqrt(static_cast<double>(count));
    run.add({dprefix + "/increment-correlation", r, std::fabs(r) <= band ? 1.0 : 0.0, band, std::fabs(r) <= band,
             count, run.stream(dprefix + "/increment-correlation").seed()});
  }
}

void suite_tpoing_limit(SuiteRun& run) {
  const std::size_t n = run.config().n.value_or(10000);
  const std::size_t count = run.count(100000);
  const std::vector<double> a = {0.5, 1.0, 2.0};
  const std::vector<double> ps = p_list(run.config(), {1.0, 2.0});
  const double threshold = run.config().alpha / static_cast<double>(a.size() * ps.size());
  for (double p : ps) {
    const std::string prefix = "tpoing-limit/n=" + std::to_string(n) + ",p=" + num(p);
    // The first k coordinates of the n-dimensional law only involve (a_j, b_j), j <= k.
    GDParams params{a, std::vector<double>(a.size(), static_cast<double>(n) / p)};
    RandomStream s = run.stream(prefix);
    const SampleBatch b = sample_pgd(a.size(), p, params, count, s, run.threads());
    const double scale = std::pow(static_cast<double>(n), 1.0 / p);
    for (std::size_t j = 0; j < a.size(); ++j) {
      std::vector<double> col = b.column(j);
      for (double& v : col) v *= scale;
      const double aj = a[j];
      run.add_ks(prefix + "/x" + std::to_string(j + 1),
                 ks_one_sample(col, [=](double x) { return limit_cdf_pgd(aj, p, x); }), threshold, count);
    }
  }
}

void suite_rate_identities(SuiteRun& run) {
  const std::size_t total = run.count(10000);
  const double ps[] = {1.0, 1.5, 2.0, 3.0};
  const std::size_t dims[] = {1, 2, 5, 20};
  const std::size_t per_case = std::max<std::size_t>(1, total / 16);
  double worst_rate = 0.0;
  double worst_mass = 0.0;
  std::size_t points = 0;
  for (double p : ps) {
    for (std::size_t n : dims) {
      RandomStream s = run.stream("rate-identities/points/n=" + std::to_string(n) + ",p=" + num(p));
      std::size_t used = 0;
      while (used < per_case) {
        const SampleBatch b = sample_uniform_ball(n, p, UniformMethod::canonical, per_case, s);
        for (std::size_t i = 0; i < b.count() && used < per_case; ++i) {
          const auto row = b.row(i);
          const double mass = 1.0 - p_norm_pow(row, p);
          if (mass < 0.01) continue;  // keep the subtraction 1 - ||x||^p well conditioned
          const auto c = to_canonical(BallPoint<double>{{row.begin(), row.end()}, p});
          worst_rate = std::max(worst_rate, relative_error(ldp_rate_ball(row, p).value,
                                                           ldp_rate_canonical(c.c, p).value));
          worst_mass = std::max(worst_mass, relative_error(remaining_mass(c), mass));
          ++used;
        }
      }
      points += used;
    }
  }
  run.add_check("rate-identities/ball-rate-equals-canonical-rate", worst_rate, 1e-12, points);
  run.add_check("rate-identities/remaining-mass-product", worst_mass, 1e-12, points);

  // Contraction of I_0(x1) + J_0(x2) over x1/(x1+x2) = x, with the Cramér
  // rate J_0(y) = y - c - c log(y/c) of theta^{-1} gamma(c theta).
  double worst_contraction = 0.0;
  std::size_t evaluated = 0;
  for (double c : {0.5, 1.0, 2.0, 5.0}) {
    for (double x : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      const auto objective = [&](double log_x2) {
        const double x2 = std::exp(log_x2);
        const double x1 = x * x2 / (1.0 - x);
        return x1 + (x2 - c - c * std::log(x2 / c));
      };
      const auto [arg, value] = boost::math::tools::brent_find_minima(objective, -30.0, 10.0, 52);
      (void)arg;
      worst_contraction = std::max(worst_contraction, std::fabs(value - ldp_rate_beta(x, c).value));
      ++evaluated;
    }
  }
  run.add_check("rate-identities/beta-contraction", worst_contraction, 1e-6, evaluated);

  // Functional rate depends on the coefficients only through their norm.
  {
    RandomStream s = run.stream("rate-identities/functional-rotation");
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 2 + static_cast<std::size_t>(trial % 7);
      Eigen::MatrixXd g(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = s.normal();
      const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(g).householderQ();
      Eigen::VectorXd f(n);
      for (std::size_t i = 0; i < n; ++i) f(i) = s.normal();
      f *= 0.9 * s.uniform_open() / f.norm();
      const Eigen::VectorXd rf = q * f;
      worst = std::max(worst, relative_error(ldp_rate_functional({f.data(), n}).value,
                                             ldp_rate_functional({rf.data(), n}).value));
    }
    run.add_check("rate-identities/functional-rotation", worst, 1e-12, 100);
  }

  // Finite-N surrogate of the LDP: -(1/N) log P(|X_1| > r) follows the order of I(r)
  // and approaches it as N grows. P is the exact Beta(a, N/p) tail.
  {
    const double p = 2.0;
    const double a = 2.0;  // a = 1 makes the tail exactly exponential in N
    const double radii[] = {0.3, 0.5, 0.7};
    bool ordered = true;
    double gap_prev[3] = {INFINITY, INFINITY, INFINITY};
    double worst_gap = 0.0;
    for (double n : {50.0, 200.0, 800.0}) {
      double prev = -INFINITY;
      for (int r = 0; r < 3; ++r) {
        const double tail = boost::math::ibetac(a, n / p, std::pow(radii[r], p));
        const double empirical = -std::log(tail) / n;
        const double rate = ldp_rate_ball(std::span<const double>(&radii[r], 1), p).value;
        ordered = ordered && empirical > prev;
        const double gap = std::fabs(empirical - rate);
        ordered = ordered && gap < gap_prev[r];
        gap_prev[r] = gap;
        prev = empirical;
        if (n == 800.0) worst_gap = std::max(worst_gap, gap);
      }
    }
    run.add({"rate-identities/ldp-trend-surrogate", worst_gap, ordered ? 1.0 : 0.0, 0.0, ordered, 9,
             run.stream("rate-identities/ldp-trend-surrogate").seed()});
  }
}

double fd_jacobian_logdet_moments(const RealCanonicalMoments& c) {
  const std::size_t n = c.c.size();
  // m_n is affine in c_n, so a wide step costs nothing on the diagonal.
  Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> jac(n, n);
  const double h = 1e-3;
  for (std::size_t j = 0; j < n; ++j) {
    RealCanonicalMoments plus = c, minus = c;
    plus.c[j] += h;
    minus.c[j] -= h;
    const auto mp = real_canonical_to_moments(plus).m;
    const auto mm = real_canonical_to_moments(minus).m;
    for (std::size_t i = 0; i < n; ++i) jac(i, j) = (mp[i] - mm[i]) / (2.0L * h);
  }
  return static_cast<double>(std::log(std::fabs(jac.determinant())));
}

void suite_moment_roundtrips(SuiteRun& run) {
  const std::size_t max_n = run.config().n.value_or(12);
  const std::size_t per_n = run.count(100);
  double worst_c = 0.0, worst_m = 0.0, worst_skibinsky = 0.0;
  std::size_t points = 0;
  for (std::size_t n = 1; n <= max_n; ++n) {
    RandomStream s = run.stream("moment-roundtrips/random/n=" + std::to_string(n));
    for (std::size_t t = 0; t < per_n; ++t) {
      // Random interior point: uniform on the moment space.
      RealCanonicalMoments c{std::vector<double>(n)};
      for (std::size_t j = 0; j < n; ++j) c.c[j] = draw_beta(double(n - j), double(n - j), false, s);
      const RealMomentVector m = real_canonical_to_moments(c);
      const RealCanonicalMoments back = real_moments_to_canonical(m);
      const RealMomentVector again = real_canonical_to_moments(back);
      double range_product = 1.0;
      for (std::size_t j = 0; j < n; ++j) {
        worst_c = std::max(worst_c, std::fabs(back.c[j] - c.c[j]));
        worst_m = std::max(worst_m, static_cast<double>(std::fabs(again.m[j] - m.m[j])));
        const MomentBounds b = hankel_bounds(std::span<const MomentReal>(m.m.data(), j));
        worst_skibinsky =
            std::max(worst_skibinsky, relative_error(static_cast<double>(b.width), range_product));
        range_product *= back.c[j] * (1.0 - back.c[j]);
      }
      ++points;
    }
  }
  run.add_check("moment-roundtrips/canonical-moments-canonical", worst_c, 1e-10, points);
  run.add_check("moment-roundtrips/moments-canonical-moments", worst_m, 1e-10, points);
  run.add_check("moment-roundtrips/skibinsky-range", worst_skibinsky, 1e-10, points);

  // Arcsine moments C(2k,k)/4^k have every canonical moment equal to 1/2.
  {
    RealMomentVector m{std::vector<MomentReal>(max_n)};
    MomentReal v = 1.0L;
    for (std::size_t k = 1; k <= max_n; ++k) {
      v *= (2.0L * static_cast<MomentReal>(k) - 1.0L) / (2.0L * static_cast<MomentReal>(k));
      m.m[k - 1] = v;
    }
    const auto c = real_moments_to_canonical(m);
    double worst = 0.0;
    for (double x : c.c) worst = std::max(worst, std::fabs(x - 0.5));
    run.add_check("moment-roundtrips/arcsine", worst, 1e-10, 1);
  }
  // Lebesgue moments 1/(k+1): c_{2k-1} = 1/2, c_{2k} = k/(2k+1).
  {
    RealMomentVector m{std::vector<MomentReal>(max_n)};
    for (std::size_t k = 1; k <= max_n; ++k) m.m[k - 1] = 1.0L / static_cast<MomentReal>(k + 1);
    const auto c = real_moments_to_canonical(m);
    double worst = 0.0;
    for (std::size_t j = 1; j <= max_n; ++j) {
      const double expected = j % 2 == 1 ? 0.5 : static_cast<double>(j / 2) / static_cast<double>(j + 1);
      worst = std::max(worst, std::fabs(c.c[j - 1] - expected));
    }
    run.add_check("moment-roundtrips/lebesgue", worst, 1e-10, 1);
  }
  // Closed-form Jacobian against central differences.
  {
    RandomStream s = run.stream("moment-roundtrips/jacobian");
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
      const std::size_t n = 1 + static_cast<std::size_t>(t % 8);
      RealCanonicalMoments c{std::vector<double>(n)};
      for (double& v : c.c) v = 0.1 + 0.8 * s.uniform_open();
      worst = std::max(worst, std::fabs(std::expm1(fd_jacobian_logdet_moments(c) - real_canonical_jacobian_logdet(c))));
    }
    run.add_check("moment-roundtrips/jacobian-finite-difference", worst, 1e-6, 50);
  }
}

void suite_sigma_pushforward(SuiteRun& run) {
  const std::size_t n = run.config().n.value_or(4);
  const std::size_t count = run.count(100000);
  const double alpha = run.config().alpha;
  const std::string prefix = "sigma-pushforward/n=" + std::to_string(n);
  RandomStream sm = run.stream(prefix + "/moment-draws");
  const SampleBatch moments = sample_uniform_moment_space(n, count, sm, run.threads());
  SampleBatch mapped = moments;
  std::vector<double> first_canonical(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto row = moments.row(i);
    const RealMomentVector m{{row.begin(), row.end()}};
    const auto x = sigma_map(m);
    std::copy(x.coords.begin(), x.coords.end(), mapped.row(i).begin());
    first_canonical[i] = row[0];  // c_1 = m_1
  }
  GDParams params{std::vector<double>(n, 0.5), std::vector<double>(n)};
  for (std::size_t j = 1; j <= n; ++j) params.b[j - 1] = static_cast<double>(n - j + 1);
  RandomStream sp = run.stream(prefix + "/pgd-draws");
  const SampleBatch pgd = sample_pgd(n, 2.0, params, count, sp, run.threads());
  const double threshold = alpha / static_cast<double>(n + 1);
  for (std::size_t j = 0; j < n; ++j)
    run.add_ks(prefix + "/x" + std::to_string(j + 1), ks_two_sample(mapped.column(j), pgd.column(j)), threshold,
               count);
  run.add_ks(prefix + "/radial", ks_two_sample(radial_powers(mapped, 2.0), radial_powers(pgd, 2.0)), threshold,
             count);
  const double shape = static_cast<double>(n);
  run.add_ks(prefix + "/first-canonical-moment",
             ks_one_sample(first_canonical, [=](double t) { return beta_cdf(shape, shape, t); }), alpha, count);
}

void suite_verblunsky_roundtrips(SuiteRun& run) {
  const std::size_t max_n = run.config().n.value_or(12);
  const std::size_t per_n = run.count(100);
  double worst_c = 0.0, worst_t = 0.0, worst_norm = 0.0, worst_pi = 0.0, worst_tele = 0.0;
  std::size_t points = 0;
  for (std::size_t n = 1; n <= max_n; ++n) {
    RandomStream s = run.stream("verblunsky-roundtrips/random/n=" + std::to_string(n));
    for (std::size_t t = 0; t < per_n; ++t) {
      VerblunskyCoeffs c;
      for (std::size_t j = 0; j < n; ++j)
        c.c.push_back(std::polar(0.9 * std::sqrt(s.uniform_open()), 2.0 * kPi * s.uniform_open()));
      const TrigMomentVector tm = trig_moments_from_verblunsky(c);
      const VerblunskyTrace trace = verblunsky_trace(tm);
      const TrigMomentVector again = trig_moments_from_verblunsky(trace.coeffs);
      for (std::size_t j = 0; j < n; ++j) {
        worst_c = std::max(worst_c, std::abs(trace.coeffs.c[j] - c.c[j]));
        worst_t = std::max(worst_t, static_cast<double>(std::abs(again.t[j] - tm.t[j])));
        const double predicted = (1.0 - std::norm(trace.coeffs.c[j])) * trace.norms_sq[j];
        worst_norm = std::max(worst_norm, relative_error(trace.norms_sq[j + 1], predicted));
      }
      const auto pi = pi_values(c);
      double sum = 0.0;
      for (const Complex& v : pi) sum += std::norm(v);
      worst_pi = std::max(worst_pi, std::fabs(sum - 1.0));
      // 1 - ||z||^2 cancels catastrophically near the sphere; use a shrunken
      // copy so the comparison measures the identity, not the subtraction.
      VerblunskyCoeffs inner = c;
      for (Complex& v : inner.c) v *= 5.0 / 9.0;
      const auto z = reversed_pi_coordinates(inner);
      double product = 1.0;
      for (const Complex& v : inner.c) product *= 1.0 - std::norm(v);
      worst_tele = std::max(worst_tele, relative_error(1.0 - p_norm_pow<Complex>(z.coords, 2.0), product));
      ++points;
    }
  }
  run.add_check("verblunsky-roundtrips/coefficients-moments-coefficients", worst_c, 1e-10, points);
  run.add_check("verblunsky-roundtrips/moments-coefficients-moments", worst_t, 1e-10, points);
  run.add_check("verblunsky-roundtrips/norm-recursion", worst_norm, 1e-10, points);
  run.add_check("verblunsky-roundtrips/pi-unit-sum", worst_pi, 1e-12, points);
  run.add_check("verblunsky-roundtrips/pi-telescoping", worst_tele, 1e-12, points);
  {
    TrigMomentVector poisson;
    for (int k = 1; k <= 4; ++k) poisson.t.emplace_back(std::pow(0.5, k), 0.0);
    const auto c = verblunsky_from_trig_moments(poisson);
    const Complex expected[] = {0.5, 0.0, 0.0, 0.0};
    double worst = 0.0;
    for (int j = 0; j < 4; ++j) worst = std::max(worst, std::abs(c.c[j] - expected[j]));
    run.add_check("verblunsky-roundtrips/poisson-kernel", worst, 1e-12, 1);
  }
}

using SuiteFn = void (*)(SuiteRun&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> table = {
      {"uniform-equivalence", suite_uniform_equivalence},
      {"pgd-canonical", suite_pgd_canonical},
      {"radial-law", suite_radial_law},
      {"cone-dirichlet", suite_cone_dirichlet},
      {"nuod", suite_nuod},
      {"poincare-borel", suite_poincare_borel},
      {"tpoing-limit", suite_tpoing_limit},
      {"rate-identities", suite_rate_identities},
      {"moment-roundtrips", suite_moment_roundtrips},
      {"sigma-pushforward", suite_sigma_pushforward},
      {"verblunsky-roundtrips", suite_verblunsky_roundtrips},
  };
  return table;
}

std::string config_digest(const std::string& suite, const SuiteConfig& c, std::uint64_t seed) {
  std::ostringstream os;
  os << "suite=" << suite << ";seed=" << seed << ";n=" << (c.n ? std::to_string(*c.n) : "default")
     << ";p=" << (c.p ? num(*c.p) : "default") << ";count=" << (c.count ? std::to_string(*c.count) : "default")
     << ";alpha=" << num(c.alpha);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(os.str())));
  return buf;
}

}  // namespace

bool TestReport::passed() const noexcept {
  return std::all_of(outcomes.begin(), outcomes.end(), [](const TestOutcome& o) { return o.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "uniform-equivalence", "pgd-canonical",   "radial-law",        "cone-dirichlet",
      "nuod",                "poincare-borel",  "tpoing-limit",      "rate-identities",
      "moment-roundtrips",   "sigma-pushforward", "verblunsky-roundtrips"};
  return names;
}

TestReport run_suite(const std::string& suite, const SuiteConfig& config, std::uint64_t seed) {
  const auto it = registry().find(suite);
  if (it == registry().end()) {
    std::string known;
    for (const auto& name : suite_names()) known += (known.empty() ? "" : ", ") + name;
    fail(ErrorKind::usage, "unknown suite '" + suite + "'; known suites: " + known);
  }
  if (!(config.alpha > 0.0 && config.alpha < 1.0)) fail(ErrorKind::usage, "alpha must lie in (0,1)");
  SuiteRun run(config, seed);
  it->second(run);
  TestReport report;
  report.suite = suite;
  report.seed = seed;
  report.config = config;
  report.config_digest = config_digest(suite, config, seed);
  report.outcomes = run.take();
  std::sort(report.outcomes.begin(), report.outcomes.end(),
            [](const TestOutcome& a, const TestOutcome& b) { return a.name < b.name; });
  return report;
}

std::string report_to_json(const TestReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["seed"] = report.seed;
  nlohmann::ordered_json cfg;
  cfg["n"] = report.config.n ? nlohmann::ordered_json(*report.config.n) : nlohmann::ordered_json(nullptr);
  cfg["p"] = report.config.p ? nlohmann::ordered_json(*report.config.p) : nlohmann::ordered_json(nullptr);
  cfg["count"] = report.config.count ? nlohmann::ordered_json(*report.config.count) : nlohmann::ordered_json(nullptr);
  cfg["alpha"] = report.config.alpha;
  j["config"] = cfg;
  j["config_digest"] = report.config_digest;
  j["passed"] = report.passed();
  j["outcomes"] = nlohmann::ordered_json::array();
  for (const TestOutcome& o : report.outcomes) {
    nlohmann::ordered_json e;
    e["name"] = o.name;
    e["statistic"] = o.statistic;
    e["p_value"] = o.p_value;
    e["threshold"] = o.threshold;
    e["passed"] = o.passed;
    e["sample_size"] = o.sample_size;
    e["seed"] = o.seed;
    j["outcomes"].push_back(e);
  }
  return j.dump(2) + "\n";
}

std::string report_to_text(const TestReport& report) {
  std::ostringstream os;
  os << "suite " << report.suite << "  seed " << report.seed << "  digest " << report.config_digest << "\n";
  std::size_t width = 4;
  for (const auto& o : report.outcomes) width = std::max(width, o.name.size());
  os << std::left << std::setw(static_cast<int>(width)) << "test" << "  " << std::setw(12) << "statistic"
     << "  " << std::setw(12) << "p_value" << "  " << std::setw(12) << "threshold" << "  result\n";
  for (const auto& o : report.outcomes) {
    os << std::left << std::setw(static_cast<int>(width)) << o.name << "  " << std::setw(12) << std::setprecision(5)
       << o.statistic << "  " << std::setw(12) << o.p_value << "  " << std::setw(12) << o.threshold << "  "
       << (o.passed ? "PASS" : "FAIL") << "\n";
  }
  os << (report.passed() ? "PASSED" : "FAILED") << " (" << report.outcomes.size() << " checks)\n";
  return os.str();
}

}  // namespace lpball
