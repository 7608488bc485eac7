// SPDX-FileCopyrightText: Copyright (c) 2026 lpball developers
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "lpball/ball_geometry.hpp"
#include "lpball/error.hpp"
#include "lpball/random.hpp"
#include "oracles.hpp"

#include <boost/math/special_functions/gamma.hpp>

using namespace lpball;

namespace {

double norm(const std::vector<double>& x, double p) { return p_norm<double>(x, p); }

std::vector<double> random_canonical(RandomStream& s, std::size_t n, double bound = 0.95) {
  std::vector<double> c(n);
  for (auto& v : c) v = bound * (2.0 * s.uniform_open() - 1.0);
  return c;
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

TEST_CASE("p-norm") {
  CHECK(norm({0.3, 0.4}, 1.0) == doctest::Approx(0.7));
  CHECK(norm({0.3, 0.4}, 2.0) == doctest::Approx(0.5));
  for (double p : {1.0, 1.5, 2.0, 3.0, 7.0}) CHECK(norm({-0.37, 0.0, 0.0}, p) == doctest::Approx(0.37));
  // no overflow for large entries at large p
  CHECK(norm({1e200, 1e200}, 4.0) == doctest::Approx(1e200 * std::pow(2.0, 0.25)));
  const std::vector<Complex> z{{0.3, 0.4}};
  CHECK(p_norm<Complex>(z, 1.0) == doctest::Approx(0.5));
}

TEST_CASE("canonical coordinates, worked values") {
  auto c = to_canonical(BallPoint<double>{{0.5, 0.25}, 1.0});
  CHECK(c.c[0] == doctest::Approx(0.5));
  CHECK(c.c[1] == doctest::Approx(0.5));

  auto d = to_canonical(BallPoint<double>{{0.6, 0.48}, 2.0});
  CHECK(d.c[0] == doctest::Approx(0.6));
  CHECK(d.c[1] == doctest::Approx(0.6));

  for (double p : {1.0, 2.5}) CHECK(to_canonical(BallPoint<double>{{-0.7}, p}).c[0] == -0.7);

  auto x = from_canonical(CanonicalCoords<double>{{0.5, 0.5}, 1.0});
  CHECK(x.coords[0] == doctest::Approx(0.5));
  CHECK(x.coords[1] == doctest::Approx(0.25));

  auto zero = from_canonical(CanonicalCoords<double>{{0.0, 0.0, 0.0}, 3.0});
  CHECK(zero.coords == std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("canonical coordinates, roundtrips") {
  // Interior points are drawn uniformly in the ball by the gamma-exponential
  // method, which does not touch the canonical map. The inverse map divides by
  // 1 - ||x||_p^p, so the error grows like eps / (1 - ||x||_p^p).
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    double worst_c = 0.0, worst_x = 0.0;
    for (std::size_t n : {1, 2, 5, 20}) {
      RandomStream s(101 + n);
      for (int i = 0; i < 250; ++i) {
        std::vector<double> g(n);
        for (auto& v : g) v = p == 2.0 ? s.normal() / std::sqrt(2.0) : 0.0;
        if (p != 2.0) {
          // G_p by inversion of the gamma law
          for (auto& v : g) {
            const double z = boost::math::gamma_p_inv(1.0 / p, s.uniform_open());
            v = (s.uniform_open() < 0.5 ? -1.0 : 1.0) * std::pow(z, 1.0 / p);
          }
        }
        double sum = -std::log(s.uniform_open());
        for (double v : g) sum += std::pow(std::fabs(v), p);
        BallPoint<double> x{g, p};
        for (auto& v : x.coords) v /= std::pow(sum, 1.0 / p);
        REQUIRE(norm(x.coords, p) < 1.0);

        const auto c = to_canonical(x);
        const auto x2 = from_canonical(c);
        for (std::size_t k = 0; k < n; ++k) worst_x = std::max(worst_x, std::fabs(x2.coords[k] - x.coords[k]));
        const auto c2 = to_canonical(x2);
        for (std::size_t k = 0; k < n; ++k) worst_c = std::max(worst_c, std::fabs(c2.c[k] - c.c[k]));
      }
    }
    CHECK(worst_c <= 1e-12);
    CHECK(worst_x <= 1e-12);
  }

  // canonical side: random cube points with at least 1% of mass left
  RandomStream s(100);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double p = 1.0 + 2.0 * s.uniform_open();
    CanonicalCoords<double> c{random_canonical(s, 1 + i % 20), p};
    if (remaining_mass(c) < 1e-2) continue;
    const auto back = to_canonical(from_canonical(c));
    for (std::size_t k = 0; k < c.c.size(); ++k) worst = std::max(worst, std::fabs(back.c[k] - c.c[k]));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("triangularity") {
  RandomStream s(102);
  for (int i = 0; i < 100; ++i) {
    const double p = 1.0 + 2.0 * s.uniform_open();
    CanonicalCoords<double> c{random_canonical(s, 6), p};
    auto c2 = c;
    c2.c[4] *= 0.5;
    c2.c[5] = -c2.c[5];
    const auto x = from_canonical(c), x2 = from_canonical(c2);
    for (int k = 0; k < 4; ++k) REQUIRE(x.coords[k] == x2.coords[k]);

    auto y = x;
    y.coords[5] *= 0.3;
    const auto cy = to_canonical(y), cx = to_canonical(x);
    for (int k = 0; k < 5; ++k) REQUIRE(cy.c[k] == cx.c[k]);
  }
}

TEST_CASE("jacobian") {
  CHECK(jacobian_logdet(CanonicalCoords<double>{{0.5, 0.3}, 1.0}) == doctest::Approx(std::log(0.5)));
  CHECK(jacobian_logdet(CanonicalCoords<double>{{0.6, -0.9}, 2.0}) == doctest::Approx(std::log(0.8)));

  // closed form against the product formula and a finite-difference determinant
  RandomStream s(103);
  double worst_fd = 0.0, worst_prod = 0.0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + i % 6;
    const double p = 1.0 + 3.0 * s.uniform_open();
    std::vector<double> c0 = random_canonical(s, n, 0.9);
    CanonicalCoords<double> c{c0, p};
    const double closed = std::exp(jacobian_logdet(c));
    double prod = 1.0;
    for (std::size_t k = 0; k < n; ++k) prod *= std::pow(1.0 - std::pow(std::fabs(c0[k]), p), double(n - k - 1) / p);
    worst_prod = std::max(worst_prod, std::fabs(closed - prod) / prod);
    const auto jac = oracle::jacobian(
        [p](const std::vector<double>& v) { return from_canonical(CanonicalCoords<double>{v, p}).coords; }, c0, 1e-5);
    worst_fd = std::max(worst_fd, std::fabs(jac.determinant() - closed) / closed);
  }
  CHECK(worst_prod <= 1e-12);
  CHECK(worst_fd <= 1e-6);
}

TEST_CASE("remaining mass equals one minus the p-th power of the norm") {
  RandomStream s(104);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double p = 1.0 + 2.0 * s.uniform_open();
    CanonicalCoords<double> c{random_canonical(s, 1 + i % 10), p};
    const auto x = from_canonical(c);
    const double rest = remaining_mass(c);
    if (rest < 1e-2) continue;  // 1 - ||x||_p^p cancels below that
    worst = std::max(worst, std::fabs(rest - (1.0 - p_norm_pow<double>(x.coords, p))) / rest);
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("polar decomposition") {
  auto pp = polar(std::vector<double>{0.3, 0.4}, 1.0);
  CHECK(pp.radius == doctest::Approx(0.7));
  CHECK(pp.direction[0] == doctest::Approx(3.0 / 7.0));
  CHECK(pp.direction[1] == doctest::Approx(4.0 / 7.0));

  RandomStream s(105);
  double worst_unit = 0.0, worst_back = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double p = 1.0 + 3.0 * s.uniform_open();
    std::vector<double> x = random_canonical(s, 1 + i % 5, 1.0);
    const auto q = polar(x, p);
    worst_unit = std::max(worst_unit, std::fabs(norm(q.direction, p) - 1.0));
    const auto xr = recompose(q);
    const auto back = recompose(polar(xr, p));
    for (std::size_t k = 0; k < xr.size(); ++k)
      worst_back = std::max(worst_back, std::fabs(back[k] - xr[k]) / std::max(q.radius, 1e-300));
  }
  CHECK(worst_unit <= 1e-12);
  CHECK(worst_back <= 4e-16);  // one division and one product

  CHECK(kind_of([] { polar(std::vector<double>{0.0, 0.0}, 2.0); }) == ErrorKind::domain);
}

TEST_CASE("complex ball") {
  const std::vector<Complex> z{{1.0, 2.0}};
  CHECK(complex_embed(z) == std::vector<double>{1.0, 2.0});

  RandomStream s(106);
  for (int i = 0; i < 100; ++i) {
    std::vector<Complex> w(4);
    for (auto& v : w) v = {s.normal(), s.normal()};
    const auto e = complex_embed(w);
    CHECK(norm(e, 2.0) == doctest::Approx(p_norm<Complex>(w, 2.0)).epsilon(1e-15));
  }

  // at p = 1 the embedding leaves the ball
  const std::vector<Complex> diag{Complex(0.9, 0.9) / std::sqrt(2.0)};
  CHECK(p_norm<Complex>(diag, 1.0) < 1.0);
  CHECK(norm(complex_embed(diag), 1.0) >= 1.0);

  // complex canonical coordinates: phases pass through, roundtrip exact
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const double p = 1.0 + 2.0 * s.uniform_open();
    std::vector<Complex> c(5);
    for (auto& v : c) v = std::polar(0.95 * s.uniform_open(), 2.0 * M_PI * s.uniform_open());
    const auto x = from_canonical(CanonicalCoords<Complex>{c, p});
    REQUIRE(p_norm<Complex>(x.coords, p) < 1.0);
    for (std::size_t k = 0; k < 5; ++k)
      if (std::abs(c[k]) > 1e-3) CHECK(std::arg(x.coords[k]) == doctest::Approx(std::arg(c[k])));
    const auto back = to_canonical(x);
    for (std::size_t k = 0; k < 5; ++k) worst = std::max(worst, std::abs(back.c[k] - c[k]));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("domain errors") {
  CHECK(kind_of([] { to_canonical(BallPoint<double>{{0.6, 0.8}, 2.0}); }) == ErrorKind::domain);
  CHECK(kind_of([] { to_canonical(BallPoint<double>{{1.0}, 1.0}); }) == ErrorKind::domain);
  CHECK(kind_of([] { from_canonical(CanonicalCoords<double>{{0.5, 1.0}, 2.0}); }) == ErrorKind::domain);
  CHECK(kind_of([] { from_canonical(CanonicalCoords<double>{{0.5}, 0.5}); }) == ErrorKind::domain);
  CHECK(kind_of([] { jacobian_logdet(CanonicalCoords<double>{{-1.0}, 2.0}); }) == ErrorKind::domain);
  CHECK(kind_of([] { require_finite_p(std::numeric_limits<double>::infinity()); }) == ErrorKind::domain);
  // the message names the prefix norm
  try {
    to_canonical(BallPoint<double>{{0.5, 0.5, 0.9}, 2.0});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("prefix") != std::string::npos);
  }
}
