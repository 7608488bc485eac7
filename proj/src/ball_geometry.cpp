// SPDX-FileCopyrightText: Copyright (c) 2026 lpball developers
// SPDX-License-Identifier: Apache-2.0

#include "lpball/ball_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lpball/error.hpp"

namespace lpball {
namespace {

inline double magnitude(double v) { return std::fabs(v); }
inline double magnitude(const Complex& v) { return std::abs(v); }

// |v|^p with the p = 1, 2 cases kept exact.
inline double abs_pow(double m, double p) {
  if (p == 1.0) return m;
  if (p == 2.0) return m * m;
  return std::pow(m, p);
}

// Returns log(1 - |c|^p) after checking the boundary margin.
template <class T>
double log_complement(const T& ck, double p, std::size_t k, const char* what) {
  const double t = abs_pow(magnitude(ck), p);
  if (!(1.0 - t > kBoundaryMargin)) {
    std::ostringstream os;
    os << what << ": canonical coordinate " << k + 1 << " has |c|^p = " << t
       << ", at or beyond the unit boundary";
    fail(ErrorKind::domain, os.str());
  }
  return std::log1p(-t);
}

}  // namespace

void require_finite_p(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    std::ostringstream os;
    os << "p must be finite and >= 1, got " << p;
    fail(ErrorKind::domain, os.str());
  }
}

template <class T>
double p_norm_pow(std::span<const T> x, double p) {
  double s = 0.0;
  for (const T& v : x) s += abs_pow(magnitude(v), p);
  return s;
}

template <class T>
double p_norm(std::span<const T> x, double p) {
  require_finite_p(p);
  if (x.empty()) fail(ErrorKind::domain, "p_norm of an empty vector");
  double top = 0.0;
  for (const T& v : x) top = std::max(top, magnitude(v));
  if (top == 0.0 || !std::isfinite(top)) return top;
  double s = 0.0;
  for (const T& v : x) s += abs_pow(magnitude(v) / top, p);
  if (p == 1.0) return top * s;
  if (p == 2.0) return top * std::sqrt(s);
  return top * std::pow(s, 1.0 / p);
}

template <class T>
CanonicalCoords<T> to_canonical(const BallPoint<T>& x) {
  require_finite_p(x.p);
  CanonicalCoords<T> out{std::vector<T>(x.coords.size()), x.p};
  double log_rem = 0.0;  // log(1 - ||x^{(k-1)}||_p^p)
  for (std::size_t k = 0; k < x.coords.size(); ++k) {
    const double scale = std::exp(-log_rem / x.p);
    out.c[k] = x.coords[k] * scale;
    if (!std::isfinite(magnitude(out.c[k]))) {
      std::ostringstream os;
      os << "to_canonical: prefix norm before coordinate " << k + 1 << " reached the boundary";
      fail(ErrorKind::domain, os.str());
    }
    try {
      log_rem += log_complement(out.c[k], x.p, k, "to_canonical");
    } catch (const Error&) {
      std::ostringstream os;
      os << "to_canonical: point is not strictly inside the unit l_" << x.p
         << " ball; prefix norm ||x^(" << k + 1 << ")||_p^p = "
         << p_norm_pow(std::span<const T>(x.coords.data(), k + 1), x.p);
      fail(ErrorKind::domain, os.str());
    }
  }
  return out;
}

template <class T>
BallPoint<T> from_canonical(const CanonicalCoords<T>& c) {
  require_finite_p(c.p);
  BallPoint<T> out{std::vector<T>(c.c.size()), c.p};
  double log_rem = 0.0;
  for (std::size_t k = 0; k < c.c.size(); ++k) {
    const double lc = log_complement(c.c[k], c.p, k, "from_canonical");
    out.coords[k] = c.c[k] * std::exp(log_rem / c.p);
    log_rem += lc;
  }
  return out;
}

double jacobian_logdet(const CanonicalCoords<double>& c) {
  require_finite_p(c.p);
  const auto n = c.c.size();
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double lc = log_complement(c.c[k], c.p, k, "jacobian_logdet");
    total += static_cast<double>(n - k - 1) / c.p * lc;
  }
  return total;
}

template <class T>
double remaining_mass(const CanonicalCoords<T>& c) {
  double log_rem = 0.0;
  for (std::size_t k = 0; k < c.c.size(); ++k) log_rem += log_complement(c.c[k], c.p, k, "remaining_mass");
  return std::exp(log_rem);
}

PolarPair polar(std::span<const double> x, double p) {
  const double r = p_norm(x, p);
  if (r == 0.0) fail(ErrorKind::domain, "polar decomposition of the zero vector");
  PolarPair out{r, std::vector<double>(x.begin(), x.end())};
  for (double& v : out.direction) v /= r;
  return out;
}

std::vector<double> recompose(const PolarPair& pair) {
  std::vector<double> out(pair.direction);
  for (double& v : out) v *= pair.radius;
  return out;
}

std::vector<double> complex_embed(std::span<const Complex> z) {
  std::vector<double> out;
  out.reserve(2 * z.size());
  for (const Complex& v : z) {
    out.push_back(v.real());
    out.push_back(v.imag());
  }
  return out;
}

template double p_norm<double>(std::span<const double>, double);
template double p_norm<Complex>(std::span<const Complex>, double);
template double p_norm_pow<double>(std::span<const double>, double);
template double p_norm_pow<Complex>(std::span<const Complex>, double);
template CanonicalCoords<double> to_canonical(const BallPoint<double>&);
template CanonicalCoords<Complex> to_canonical(const BallPoint<Complex>&);
template BallPoint<double> from_canonical(const CanonicalCoords<double>&);
template BallPoint<Complex> from_canonical(const CanonicalCoords<Complex>&);
template double remaining_mass(const CanonicalCoords<double>&);
template double remaining_mass(const CanonicalCoords<Complex>&);

}  // namespace lpball
