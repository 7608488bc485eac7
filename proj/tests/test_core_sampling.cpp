// SPDX-FileCopyrightText: Copyright (c) 2026 lpball developers
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "lpball/batch.hpp"
#include "lpball/distributions.hpp"
#include "lpball/error.hpp"
#include "lpball/simplex.hpp"
#include "lpball/stats.hpp"
#include "oracles.hpp"

using namespace lpball;

namespace {

constexpr std::size_t kDraws = 100000;
constexpr double kAlpha = 0.01;

template <class F>
std::vector<double> draws(std::uint64_t seed, std::size_t count, F&& f) {
  RandomStream s(seed);
  std::vector<double> out(count);
  for (auto& v : out) v = f(s);
  return out;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::usage;
}

}  // namespace

TEST_CASE("stream determinism and splitting") {
  RandomStream a(42), b(42);
  for (int i = 0; i < 1000; ++i) REQUIRE(a.next_u64() == b.next_u64());

  RandomStream at(7, 12345), bt(7, 12345);
  CHECK(draw_gamma(0.3, 1.0, at) == draw_gamma(0.3, 1.0, bt));

  // split does not advance the parent and children differ
  RandomStream parent(9);
  const auto pos = parent.position();
  auto c1 = parent.split(1), c2 = parent.split(2);
  CHECK(parent.position() == pos);
  CHECK(c1.next_u64() != c2.next_u64());

  for (int i = 0; i < 10000; ++i) {
    const double u = a.uniform_open();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
  }
}

TEST_CASE("split streams look independent") {
  auto u1 = draws(1, kDraws, [](RandomStream& s) { return s.uniform_open(); });
  RandomStream base(1);
  auto child = base.split(0);
  std::vector<double> u2(kDraws);
  for (auto& v : u2) v = child.uniform_open();
  double corr = 0.0;
  for (std::size_t i = 0; i < kDraws; ++i) corr += (u1[i] - 0.5) * (u2[i] - 0.5);
  corr /= kDraws * (1.0 / 12.0);
  CHECK(std::fabs(corr) < 4.0 / std::sqrt(double(kDraws)));
  CHECK(ks_one_sample(u2, [](double x) { return std::clamp(x, 0.0, 1.0); }).p_value > kAlpha);
}

TEST_CASE("fill_rows output does not depend on the thread count") {
  auto draw = [](RandomStream& s, std::span<double> row) {
    for (auto& v : row) v = draw_gamma(0.7, 1.0, s);
  };
  std::vector<double> one, four, many;
  RandomStream s1(5), s4(5), s16(5);
  fill_rows(1001, 3, s1, 1, one, draw);
  fill_rows(1001, 3, s4, 4, four, draw);
  fill_rows(1001, 3, s16, 16, many, draw);
  CHECK(one == four);
  CHECK(one == many);
  CHECK(s1.position() == s4.position());
}

TEST_CASE("gamma") {
  auto e = draws(11, kDraws, [](RandomStream& s) { return draw_gamma(1.0, 1.0, s); });
  const double mean = std::accumulate(e.begin(), e.end(), 0.0) / kDraws;
  CHECK(mean == doctest::Approx(1.0).epsilon(0.02));

  // additivity: gamma(0.5) + gamma(0.5) against gamma(1)
  auto sum = draws(12, kDraws, [](RandomStream& s) { return draw_gamma(0.5, 1.0, s) + draw_gamma(0.5, 1.0, s); });
  auto one = draws(13, kDraws, [](RandomStream& s) { return draw_gamma(1.0, 1.0, s); });
  CHECK(ks_two_sample(sum, one).p_value > kAlpha);

  // small shape with rate, against the exact CDF
  auto small = draws(14, kDraws, [](RandomStream& s) { return draw_gamma(0.1, 2.5, s); });
  CHECK(ks_one_sample(small, [](double x) { return oracle::gamma_cdf(0.1, 2.5, x); }).p_value > kAlpha);

  CHECK(kind_of([] { RandomStream s(1); draw_gamma(0.0, 1.0, s); }) == ErrorKind::parameter_domain);
  CHECK(kind_of([] { RandomStream s(1); draw_gamma(1.0, -1.0, s); }) == ErrorKind::parameter_domain);
}

TEST_CASE("beta") {
  auto u = draws(21, kDraws, [](RandomStream& s) { return draw_beta(1.0, 1.0, false, s); });
  CHECK(ks_one_sample(u, [](double x) { return std::clamp(x, 0.0, 1.0); }).p_value > kAlpha);

  auto b = draws(22, kDraws, [](RandomStream& s) { return draw_beta(2.0, 3.0, false, s); });
  CHECK(std::accumulate(b.begin(), b.end(), 0.0) / kDraws == doctest::Approx(0.4).epsilon(0.025));

  // gamma-ratio construction as an independent oracle
  auto ratio = draws(23, kDraws, [](RandomStream& s) {
    const double g = draw_gamma(0.7, 1.0, s), h = draw_gamma(1.9, 1.0, s);
    return g / (g + h);
  });
  auto direct = draws(24, kDraws, [](RandomStream& s) { return draw_beta(0.7, 1.9, false, s); });
  CHECK(ks_two_sample(ratio, direct).p_value > kAlpha);

  auto sym = draws(25, kDraws, [](RandomStream& s) { return draw_beta(2.0, 2.0, true, s); });
  CHECK(ks_one_sample(sym, [](double x) { return oracle::beta_cdf(2.0, 2.0, (x + 1.0) / 2.0); }).p_value > kAlpha);

  CHECK(kind_of([] { RandomStream s(1); draw_beta(1.0, 0.0, false, s); }) == ErrorKind::parameter_domain);
}

TEST_CASE("G_p") {
  // density e^{-x^2} / sqrt(pi), CDF by quadrature
  auto g2 = draws(31, kDraws, [](RandomStream& s) { return draw_gp(2.0, s); });
  std::vector<double> sorted = g2;
  std::sort(sorted.begin(), sorted.end());
  const auto density = [](double x) { return std::exp(-x * x) / std::sqrt(M_PI); };
  CHECK(ks_one_sample(sorted, [&](double x) { return oracle::symmetric_cdf(density, x); }).p_value > kAlpha);

  auto g1 = draws(32, kDraws, [](RandomStream& s) { return std::fabs(draw_gp(1.0, s)); });
  CHECK(ks_one_sample(g1, [](double x) { return x <= 0.0 ? 0.0 : 1.0 - std::exp(-x); }).p_value > kAlpha);

  auto g3 = draws(33, kDraws, [](RandomStream& s) { return draw_gp(3.0, s); });
  const double positive = std::count_if(g3.begin(), g3.end(), [](double x) { return x > 0.0; }) / double(kDraws);
  CHECK(std::fabs(positive - 0.5) < 0.005);

  CHECK(kind_of([] { RandomStream s(1); draw_gp(0.5, s); }) == ErrorKind::parameter_domain);
  CHECK(kind_of([] { RandomStream s(1); draw_gp(kInfiniteP, s); }) == ErrorKind::parameter_domain);
}

TEST_CASE("dirichlet") {
  std::vector<double> x1, grouped, x2, direct;
  RandomStream s(41);
  const std::vector<double> a11{1.0, 1.0}, a111{1.0, 1.0, 1.0}, a21{2.0, 1.0};
  for (std::size_t i = 0; i < kDraws; ++i) {
    auto d = draw_dirichlet(a11, s);
    CHECK(d.kind == SimplexKind::closed);
    x1.push_back(d.p[0]);
    auto g = draw_dirichlet(a111, s);
    grouped.push_back(g.p[0] + g.p[1]);
    direct.push_back(draw_dirichlet(a21, s).p[0]);
  }
  CHECK(ks_one_sample(x1, [](double x) { return std::clamp(x, 0.0, 1.0); }).p_value > kAlpha);
  CHECK(ks_two_sample(grouped, direct).p_value > kAlpha);

  const std::vector<double> a5(4, 5.0);
  std::vector<double> means(4, 0.0);
  for (std::size_t i = 0; i < kDraws; ++i) {
    auto d = draw_dirichlet(a5, s);
    REQUIRE(std::fabs(std::accumulate(d.p.begin(), d.p.end(), 0.0) - 1.0) < 1e-12);
    for (int j = 0; j < 4; ++j) means[j] += d.p[j] / kDraws;
  }
  for (double m : means) CHECK(std::fabs(m - 0.25) < 0.005);

  CHECK(kind_of([&] { draw_dirichlet(std::vector<double>{}, s); }) == ErrorKind::parameter_domain);
  CHECK(kind_of([&] { draw_dirichlet(std::vector<double>{1.0, 0.0}, s); }) == ErrorKind::parameter_domain);
}

TEST_CASE("stick breaking") {
  auto p = stick_break(std::vector<double>{0.5, 0.5, 0.5});
  CHECK(p.kind == SimplexKind::open);
  REQUIRE(p.p.size() == 3);
  CHECK(p.p[0] == doctest::Approx(0.5));
  CHECK(p.p[1] == doctest::Approx(0.25));
  CHECK(p.p[2] == doctest::Approx(0.125));

  auto q = stick_break(std::vector<double>{0.9, 0.9});
  CHECK(q.p[0] == doctest::Approx(0.9));
  CHECK(q.p[1] == doctest::Approx(0.09));
  CHECK(1.0 - q.p[0] - q.p[1] == doctest::Approx(0.01));

  RandomStream s(51);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    // keep the leftover mass above 1e-3: the inverse divides by it
    std::vector<double> z(1 + i % 7);
    double left = 1.0;
    do {
      left = 1.0;
      for (auto& v : z) {
        v = s.uniform_open();
        left *= 1.0 - v;
      }
    } while (left < 1e-3);
    const auto back = stick_break_inverse(stick_break(z));
    for (std::size_t j = 0; j < z.size(); ++j) worst = std::max(worst, std::fabs(back[j] - z[j]));
  }
  CHECK(worst <= 1e-12);

  CHECK(kind_of([] { stick_break(std::vector<double>{0.5, 1.0}); }) == ErrorKind::domain);
  CHECK(kind_of([] { stick_break(std::vector<double>{0.0}); }) == ErrorKind::domain);
  CHECK(kind_of([] { stick_break_inverse(SimplexPoint{{0.6, 0.5}, SimplexKind::open}); }) == ErrorKind::domain);
}

TEST_CASE("generalized dirichlet") {
  // b_{j-1} = a_j + b_j gives Dir(a_1..a_n; b_n)
  const std::vector<double> a{0.5, 1.5, 0.8};
  const double tail = 1.2;
  GDParams gd{a, std::vector<double>(3)};
  gd.b[2] = tail;
  for (int j = 1; j >= 0; --j) gd.b[j] = gd.a[j + 1] + gd.b[j + 1];
  const std::vector<double> dir{0.5, 1.5, 0.8, tail};

  RandomStream s(61);
  std::vector<std::vector<double>> g(3), d(3);
  for (std::size_t i = 0; i < kDraws; ++i) {
    auto x = draw_gd(gd, s);
    auto y = draw_dirichlet(dir, s);
    for (int j = 0; j < 3; ++j) {
      g[j].push_back(x.p[j]);
      d[j].push_back(y.p[j]);
    }
  }
  for (int j = 0; j < 3; ++j) CHECK(ks_two_sample(g[j], d[j]).p_value > kAlpha / 3);

  // n = 1, Beta(1,1)
  auto u = draws(62, kDraws, [](RandomStream& st) { return draw_gd(GDParams{{1.0}, {1.0}}, st).p[0]; });
  CHECK(ks_one_sample(u, [](double x) { return std::clamp(x, 0.0, 1.0); }).p_value > kAlpha);

  // prefix property
  GDParams trunc{{gd.a[0], gd.a[1]}, {gd.b[0], gd.b[1]}};
  std::vector<double> full2, short2;
  RandomStream t(63);
  for (std::size_t i = 0; i < kDraws; ++i) {
    full2.push_back(draw_gd(gd, t).p[1]);
    short2.push_back(draw_gd(trunc, t).p[1]);
  }
  CHECK(ks_two_sample(full2, short2).p_value > kAlpha);

  CHECK(kind_of([&] { draw_gd(GDParams{{1.0, 1.0}, {1.0}}, s); }) == ErrorKind::parameter_domain);
}

TEST_CASE("GEM parameters") {
  auto g = gem_params(GemKind::theta, 2.0, 0.0, 3);
  CHECK(g.a == std::vector<double>{1.0, 1.0, 1.0});
  CHECK(g.b == std::vector<double>{2.0, 2.0, 2.0});

  auto h = gem_params(GemKind::alpha_theta, 1.0, 0.5, 2);
  CHECK(h.a == std::vector<double>{0.5, 0.5});
  CHECK(h.b == std::vector<double>{1.5, 2.0});

  auto k = gem_params(GemKind::alpha_theta, 2.0, 0.0, 3);
  CHECK(k.a == g.a);
  CHECK(k.b == g.b);

  CHECK(kind_of([] { gem_params(GemKind::theta, 2.0, 0.3, 3); }) == ErrorKind::parameter_domain);
  CHECK(kind_of([] { gem_params(GemKind::alpha_theta, -0.6, 0.5, 3); }) == ErrorKind::parameter_domain);
  CHECK(kind_of([] { gem_params(GemKind::alpha_theta, 1.0, 1.0, 3); }) == ErrorKind::parameter_domain);
  CHECK(kind_of([] { gem_params(GemKind::theta, 0.0, 0.0, 3); }) == ErrorKind::parameter_domain);
}
