// SPDX-FileCopyrightText: Copyright (c) 2026 lpball developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <span>
#include <vector>

namespace lpball {

using Complex = std::complex<double>;

/// Points closer than this (in 1 - |c_k|^p) to the boundary are rejected.
inline constexpr double kBoundaryMargin = 1e-14;

/// A point of the open unit l_p ball, real (T = double) or complex (T = Complex).
template <class T>
struct BallPoint {
  std::vector<T> coords;
  double p = 2.0;
};

/// Triangular coordinates of a ball point: each entry in the open unit
/// interval (real) or open unit disk (complex).
template <class T>
struct CanonicalCoords {
  std::vector<T> c;
  double p = 2.0;
};

struct PolarPair {
  double radius = 0.0;
  std::vector<double> direction;
};

/// (sum |x_i|^p)^{1/p}, rescaled by max |x_i| to avoid overflow/underflow.
template <class T>
double p_norm(std::span<const T> x, double p);

/// sum |x_i|^p
template <class T>
double p_norm_pow(std::span<const T> x, double p);

/// c_1 = x_1, c_k = x_k (1 - ||x^{(k-1)}||_p^p)^{-1/p}. The prefix mass is
/// carried as prod (1 - |c_j|^p) rather than by subtraction.
template <class T>
CanonicalCoords<T> to_canonical(const BallPoint<T>& x);

/// x_k = c_k prod_{j<k} (1 - |c_j|^p)^{1/p}, product accumulated in log-space.
template <class T>
BallPoint<T> from_canonical(const CanonicalCoords<T>& c);

/// log det of d(from_canonical)/dc for the real ball:
/// sum_k ((N-k)/p) log(1 - |c_k|^p), N = c.size().
double jacobian_logdet(const CanonicalCoords<double>& c);

/// prod_k (1 - |c_k|^p); equals 1 - ||from_canonical(c)||_p^p.
template <class T>
double remaining_mass(const CanonicalCoords<T>& c);

PolarPair polar(std::span<const double> x, double p);
std::vector<double> recompose(const PolarPair& pair);

/// Interleaved (re, im) pairs.
std::vector<double> complex_embed(std::span<const Complex> z);

/// Throws domain unless p is finite and >= 1.
void require_finite_p(double p);

}  // namespace lpball
