// SPDX-FileCopyrightText: Copyright (c) 2026 lpball developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "lpball/ball_geometry.hpp"
#include "lpball/batch.hpp"
#include "lpball/random.hpp"

namespace lpball {

/// Moment vectors are held in extended precision: the maps below lose about
/// log10(1 / prod c_j(1 - c_j)) digits, which exceeds double precision well
/// before N = 12.
using MomentReal = long double;
using MomentComplex = std::complex<long double>;

/// Moments m_1..m_N of a probability measure on [0,1] (m_0 = 1 implied).
struct RealMomentVector {
  std::vector<MomentReal> m;
};

/// Canonical moments, each in (0,1).
struct RealCanonicalMoments {
  std::vector<double> c;
};

/// Trigonometric moments t_1..t_N of a measure on the unit circle (t_0 = 1).
struct TrigMomentVector {
  std::vector<MomentComplex> t;
};

/// Verblunsky coefficients c_j = -conj(Phi_j(0)), each in the open unit disk.
struct VerblunskyCoeffs {
  std::vector<Complex> c;
};

/// Admissible open range of the next moment.
struct MomentBounds {
  MomentReal lower = 0.0L;
  MomentReal upper = 1.0L;
  MomentReal width = 1.0L;  // upper - lower, formed before rounding
};

/// Moment maps are exponentially ill-conditioned in N. Beyond 20 moments the
/// Hankel/Toeplitz systems lose most of their digits even in extended
/// precision, so longer vectors are refused unless `max_n` is raised.
struct MomentOptions {
  std::size_t max_n = 20;
};

/// Extreme values of m_n given m_1..m_{n-1} (n = prefix.size() + 1). Each
/// bound is the root of a Hankel determinant that is affine in m_n, computed
/// as a Schur complement. Throws moment_boundary naming the first index whose
/// moment is not strictly inside its range.
MomentBounds hankel_bounds(std::span<const MomentReal> prefix, const MomentOptions& options = {});

RealCanonicalMoments real_moments_to_canonical(const RealMomentVector& m,
                                               const MomentOptions& options = {});
RealMomentVector real_canonical_to_moments(const RealCanonicalMoments& c,
                                           const MomentOptions& options = {});

/// sum_{j=1}^{N-1} (N-j) log(c_j (1 - c_j)), N = c.size().
double real_canonical_jacobian_logdet(const RealCanonicalMoments& c);

/// Uniform law on the real moment space M_N: C_j ~ Beta(N-j+1, N-j+1)
/// independently, mapped by real_canonical_to_moments.
SampleBatch sample_uniform_moment_space(std::size_t n, std::size_t count, RandomStream& stream,
                                        unsigned threads = 1);

/// Result of the Gram-Schmidt construction of the monic orthogonal
/// polynomials Phi_0..Phi_N for the Toeplitz form <f,g> = int f conj(g) dmu.
struct VerblunskyTrace {
  VerblunskyCoeffs coeffs;
  std::vector<double> norms_sq;  // ||Phi_0||^2 .. ||Phi_N||^2
};

VerblunskyTrace verblunsky_trace(const TrigMomentVector& t, const MomentOptions& options = {});
VerblunskyCoeffs verblunsky_from_trig_moments(const TrigMomentVector& t,
                                              const MomentOptions& options = {});
/// Inverse: at step n the orthogonality <Phi_n, 1> = 0 is a single linear
/// equation in t_n once Phi_n(0) = -conj(c_n) is imposed.
TrigMomentVector trig_moments_from_verblunsky(const VerblunskyCoeffs& c,
                                              const MomentOptions& options = {});

/// z = (pi_N, ..., pi_1) with pi_k = -conj(c_k) prod_{r=k+1}^N sqrt(1 - |c_r|^2).
/// Point of the complex Euclidean ball, p = 2.
BallPoint<Complex> reversed_pi_coordinates(const VerblunskyCoeffs& c);

/// pi_0 .. pi_N; sum |pi_k|^2 = 1.
std::vector<Complex> pi_values(const VerblunskyCoeffs& c);

/// Moment space -> canonical moments -> t -> 2t-1 -> from_canonical at p = 2.
BallPoint<double> sigma_map(const RealMomentVector& m, const MomentOptions& options = {});

}  // namespace lpball
