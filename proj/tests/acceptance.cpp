// SPDX-FileCopyrightText: Copyright (c) 2026 lpball developers
// SPDX-License-Identifier: Apache-2.0

// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "lpball/ball_geometry.hpp"
#include "lpball/ball_samplers.hpp"
#include "lpball/distributions.hpp"
#include "lpball/moment_spaces.hpp"
#include "lpball/suites.hpp"
#include "oracles.hpp"

using namespace lpball;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kSeed = 42;
int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s  [%2d] %s: %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  std::fflush(stdout);
  failures += !ok;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

std::map<std::string, std::string> first_runs;

// Runs a suite with one worker and keeps its JSON for the determinism rerun.
TestReport suite(const std::string& name) {
  SuiteConfig cfg;
  cfg.threads = 1;
  auto r = run_suite(name, cfg, kSeed);
  first_runs[name] = report_to_json(r);
  return r;
}

std::string summary(const TestReport& r, double secs) {
  std::size_t ok = 0;
  const TestOutcome* worst = nullptr;
  for (const auto& o : r.outcomes) {
    ok += o.passed;
    if (!o.passed && !worst) worst = &o;
  }
  std::string s = std::to_string(ok) + "/" + std::to_string(r.outcomes.size()) + " checks in " +
                  fmt("%.1f s", secs);
  if (worst) s += ", first failure " + worst->name;
  return s;
}

void suite_criterion(int id, const std::string& what, std::initializer_list<const char*> names,
                     double time_limit = 0.0) {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  for (const char* name : names) {
    const auto s0 = Clock::now();
    const auto r = suite(name);
    ok &= r.passed();
    if (!detail.empty()) detail += "; ";
    detail += std::string(name) + " " + summary(r, seconds_since(s0));
  }
  const double secs = seconds_since(t0);
  if (time_limit > 0.0) {
    ok &= secs < time_limit;
    detail += fmt(" (limit %.0f s)", time_limit);
  }
  report(id, ok, what, detail);
}

void transform_exactness() {
  const auto t0 = Clock::now();
  double worst_c = 0.0, worst_x = 0.0;
  for (double p : {1.0, 1.5, 2.0, 3.0})
    for (std::size_t n : {1, 2, 5, 20}) {
      RandomStream s(kSeed);
      // uniform interior points, drawn without the canonical map
      const auto b = sample_uniform_ball(n, p, UniformMethod::gamma_exp, 10000, s);
      for (std::size_t i = 0; i < b.count(); ++i) {
        BallPoint<double> x{{b.row(i).begin(), b.row(i).end()}, p};
        const auto c = to_canonical(x);
        const auto x2 = from_canonical(c);
        const auto c2 = to_canonical(x2);
        for (std::size_t k = 0; k < n; ++k) {
          worst_x = std::max(worst_x, std::fabs(x2.coords[k] - x.coords[k]));
          worst_c = std::max(worst_c, std::fabs(c2.c[k] - c.c[k]));
        }
      }
    }
  const double secs = seconds_since(t0);
  report(1, worst_c <= 1e-12 && worst_x <= 1e-12 && secs < 10.0, "transform exactness",
         fmt("max |x - x'| = %.2e, max |c - c'| = %.2e over 16 x 10^4 points in %.2f s", worst_x, worst_c, secs));
}

void jacobians() {
  RandomStream s(kSeed);
  double worst_ball = 0.0, worst_moment = 0.0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + i % 6;
    const double p = 1.0 + 3.0 * s.uniform_open();
    std::vector<double> c(n);
    for (auto& v : c) v = 0.9 * (2.0 * s.uniform_open() - 1.0);
    const auto jac = oracle::jacobian(
        [p](const std::vector<double>& v) { return from_canonical(CanonicalCoords<double>{v, p}).coords; }, c, 1e-5);
    const double closed = std::exp(jacobian_logdet(CanonicalCoords<double>{c, p}));
    worst_ball = std::max(worst_ball, std::fabs(jac.determinant() - closed) / closed);
  }
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + i % 8;
    std::vector<double> c(n);
    for (std::size_t j = 0; j < n; ++j) c[j] = draw_beta(double(n - j), double(n - j), false, s);
    const double lo = *std::min_element(c.begin(), c.end()), hi = *std::max_element(c.begin(), c.end());
    const double h = std::min({1e-3, lo / 2, (1.0 - hi) / 2});
    const long double det = oracle::jacobian_det_ld(
        [](const std::vector<double>& v) { return real_canonical_to_moments(RealCanonicalMoments{v}).m; }, c, h);
    const double closed = std::exp(real_canonical_jacobian_logdet(RealCanonicalMoments{c}));
    worst_moment = std::max(worst_moment, double(std::fabs(det - closed) / closed));
  }
  report(2, worst_ball <= 1e-6 && worst_moment <= 1e-6, "jacobian correctness",
         fmt("worst relative gap vs finite differences: ball %.2e, moment %.2e (100 points each)", worst_ball,
             worst_moment));
}

void determinism() {
  const auto t0 = Clock::now();
  std::size_t same = 0;
  std::string differing;
  for (const auto& [name, json] : first_runs) {
    SuiteConfig cfg;
    cfg.threads = 4;  // the rerun also changes the worker count
    const auto again = report_to_json(run_suite(name, cfg, kSeed));
    if (again == json) ++same;
    else differing += " " + name;
  }
  report(13, same == first_runs.size() && first_runs.size() == suite_names().size(), "determinism",
         std::to_string(same) + "/" + std::to_string(first_runs.size()) +
             " suites byte-identical on rerun with 4 workers" + fmt(" in %.1f s", seconds_since(t0)) +
             (differing.empty() ? "" : ", differing:" + differing));
}

}  // namespace

int main() {
  std::printf("acceptance run, seed %llu\n", static_cast<unsigned long long>(kSeed));
  transform_exactness();
  jacobians();
  suite_criterion(3, "uniform-sampler equivalence", {"uniform-equivalence"}, 60.0);
  suite_criterion(4, "radial law", {"radial-law"});
  suite_criterion(5, "canonical-coordinate law", {"pgd-canonical"});
  suite_criterion(6, "cone-Dirichlet", {"cone-dirichlet"});
  suite_criterion(7, "NUOD", {"nuod"});
  suite_criterion(8, "Poincare-Borel", {"poincare-borel", "tpoing-limit"});
  suite_criterion(9, "rate identities", {"rate-identities"});
  suite_criterion(10, "moment round-trips", {"moment-roundtrips"});
  suite_criterion(11, "Verblunsky round-trips", {"verblunsky-roundtrips"});
  suite_criterion(12, "sigma pushforward", {"sigma-pushforward"});
  determinism();
  std::printf("%d of 13 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
