// SPDX-FileCopyrightText: Copyright (c) 2026 lpball developers
// SPDX-License-Identifier: Apache-2.0

#include "lpball/moment_spaces.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <cmath>
#include <limits>
#include <sstream>

#include "lpball/distributions.hpp"
#include "lpball/error.hpp"

namespace lpball {
namespace {

// Hankel solves run in 113-bit precision: their condition number grows like
// 1 / prod c_j(1 - c_j)^2 and swamps extended precision near N = 12.
using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float_quad::backend_type,
                                           boost::multiprecision::et_off>;
using CReal = std::complex<long double>;
using RealMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
using CMatrix = Eigen::Matrix<CReal, Eigen::Dynamic, Eigen::Dynamic>;
using CVector = Eigen::Matrix<CReal, Eigen::Dynamic, 1>;

// Reciprocal condition numbers below this are treated as singular.
constexpr long double kMinRcond = 1e-17L;
// The Hankel blocks are solved in 113-bit arithmetic.
const Real kMinHankelRcond(1e-30);

// 1 / (||A||_1 ||A^{-1}||_1); the blocks are at most 10 x 10.
Real reciprocal_condition(const Eigen::FullPivLU<RealMatrix>& lu, const RealMatrix& a) {
  const RealMatrix inv = lu.inverse();
  const auto norm1 = [](const RealMatrix& m) {
    Real best(0);
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      Real col(0);
      for (Eigen::Index i = 0; i < m.rows(); ++i) col += abs(m(i, j));
      if (col > best) best = col;
    }
    return best;
  };
  return Real(1) / (norm1(a) * norm1(inv));
}

void check_length(std::size_t n, const MomentOptions& options, const char* what) {
  if (n > options.max_n) {
    std::ostringstream os;
    os << what << ": " << n << " moments exceed the supported maximum of " << options.max_n
       << " (moment maps are exponentially ill-conditioned)";
    fail(ErrorKind::conditioning, os.str());
  }
}

// v^T B^{-1} v for the symmetric Hankel block B.
Real schur_term(const RealMatrix& block, const RealVector& v, std::size_t index) {
  if (block.rows() == 0) return Real(0);
  Eigen::FullPivLU<RealMatrix> lu(block);
  const Real rcond = lu.isInvertible() ? reciprocal_condition(lu, block) : Real(0);
  if (rcond < kMinHankelRcond) {
    std::ostringstream os;
    os << "Hankel system for moment " << index << " is singular or ill-conditioned (rcond "
       << static_cast<double>(rcond) << ")";
    fail(ErrorKind::conditioning, os.str());
  }
  return v.dot(lu.solve(v));
}

struct ExtendedBounds {
  Real lower;
  Real upper;
};

// Bounds on m_n given the full sequence mm[0] = 1, mm[1..n-1].
ExtendedBounds bounds_from(const std::vector<Real>& mm, std::size_t n) {
  const std::size_t k = n / 2;
  Real lower;
  Real upper;
  if (n % 2 == 1) {
    // (m_{i+j+1})_{0..k} > 0 and (m_{i+j} - m_{i+j+1})_{0..k} > 0
    RealMatrix lo(k, k), up(k, k);
    RealVector vlo(k), vup(k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        lo(i, j) = mm[i + j + 1];
        up(i, j) = mm[i + j] - mm[i + j + 1];
      }
      vlo(i) = mm[i + k + 1];
      vup(i) = mm[i + k] - mm[i + k + 1];
    }
    lower = schur_term(lo, vlo, n);
    upper = mm[2 * k] - schur_term(up, vup, n);
  } else {
    // (m_{i+j})_{0..k} > 0 and (m_{i+j+1} - m_{i+j+2})_{0..k-1} > 0
    RealMatrix lo(k, k), up(k - 1, k - 1);
    RealVector vlo(k), vup(k - 1);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) lo(i, j) = mm[i + j];
      vlo(i) = mm[i + k];
    }
    for (std::size_t i = 0; i + 1 < k; ++i) {
      for (std::size_t j = 0; j + 1 < k; ++j) up(i, j) = mm[i + j + 1] - mm[i + j + 2];
      vup(i) = mm[i + k] - mm[i + k + 1];
    }
    lower = schur_term(lo, vlo, n);
    upper = mm[2 * k - 1] - schur_term(up, vup, n);
  }
  if (!(upper > lower)) {
    std::ostringstream os;
    os << "moment range for index " << n << " is empty (lower " << static_cast<double>(lower)
       << ", upper " << static_cast<double>(upper) << ")";
    fail(ErrorKind::conditioning, os.str());
  }
  return {lower, upper};
}

void require_open_unit(double v, std::size_t index, const char* what) {
  if (!(v > 0.0 && v < 1.0)) {
    std::ostringstream os;
    os << what << ": canonical moment " << index << " = " << v << " is not in (0,1)";
    fail(ErrorKind::domain, os.str());
  }
}

CReal at(const std::vector<CReal>& t, long k) {
  return k >= 0 ? t[static_cast<std::size_t>(k)] : std::conj(t[static_cast<std::size_t>(-k)]);
}

CVector solve_toeplitz(const CMatrix& m, const CVector& rhs, std::size_t index) {
  Eigen::FullPivLU<CMatrix> lu(m);
  if (!lu.isInvertible() || lu.rcond() < kMinRcond) {
    std::ostringstream os;
    os << "Toeplitz system at order " << index << " is singular or ill-conditioned (rcond "
       << static_cast<double>(lu.rcond()) << ")";
    fail(ErrorKind::conditioning, os.str());
  }
  return lu.solve(rhs);
}

}  // namespace

MomentBounds hankel_bounds(std::span<const MomentReal> prefix, const MomentOptions& options) {
  check_length(prefix.size() + 1, options, "hankel_bounds");
  std::vector<Real> mm{Real(1)};
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    const std::size_t index = i + 1;
    const ExtendedBounds b = bounds_from(mm, index);
    if (!(prefix[i] > b.lower && prefix[i] < b.upper)) {
      std::ostringstream os;
      os << "moment vector leaves the interior of the moment space at index " << index << ": m_"
         << index << " = " << static_cast<double>(prefix[i]) << " not in (" << static_cast<double>(b.lower) << ", "
         << static_cast<double>(b.upper) << ")";
      fail(ErrorKind::moment_boundary, os.str());
    }
    mm.push_back(prefix[i]);
  }
  const ExtendedBounds b = bounds_from(mm, prefix.size() + 1);
  return {static_cast<MomentReal>(b.lower), static_cast<MomentReal>(b.upper),
          static_cast<MomentReal>(b.upper - b.lower)};
}

RealCanonicalMoments real_moments_to_canonical(const RealMomentVector& m,
                                               const MomentOptions& options) {
  check_length(m.m.size(), options, "real_moments_to_canonical");
  RealCanonicalMoments out{std::vector<double>(m.m.size())};
  std::vector<Real> mm{Real(1)};
  for (std::size_t i = 0; i < m.m.size(); ++i) {
    const std::size_t index = i + 1;
    const auto [lower, upper] = bounds_from(mm, index);
    const Real value = m.m[i];
    if (!(value > lower && value < upper)) {
      std::ostringstream os;
      os << "moment vector leaves the interior of the moment space at index " << index << ": m_"
         << index << " = " << static_cast<double>(m.m[i]) << " not in (" << static_cast<double>(lower) << ", "
         << static_cast<double>(upper) << ")";
      fail(ErrorKind::moment_boundary, os.str());
    }
    out.c[i] = static_cast<double>((value - lower) / (upper - lower));
    mm.push_back(value);
  }
  return out;
}

RealMomentVector real_canonical_to_moments(const RealCanonicalMoments& c,
                                           const MomentOptions& options) {
  check_length(c.c.size(), options, "real_canonical_to_moments");
  RealMomentVector out{std::vector<MomentReal>(c.c.size())};
  std::vector<Real> mm{Real(1)};
  for (std::size_t i = 0; i < c.c.size(); ++i) {
    require_open_unit(c.c[i], i + 1, "real_canonical_to_moments");
    const auto [lower, upper] = bounds_from(mm, i + 1);
    const Real value = lower + static_cast<Real>(c.c[i]) * (upper - lower);
    out.m[i] = static_cast<MomentReal>(value);
    mm.push_back(Real(out.m[i]));
  }
  return out;
}

double real_canonical_jacobian_logdet(const RealCanonicalMoments& c) {
  const std::size_t n = c.c.size();
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    require_open_unit(c.c[j], j + 1, "real_canonical_jacobian_logdet");
    total += static_cast<double>(n - j - 1) * std::log(c.c[j] * (1.0 - c.c[j]));
  }
  return total;
}

SampleBatch sample_uniform_moment_space(std::size_t n, std::size_t count, RandomStream& stream,
                                        unsigned threads) {
  if (n == 0) fail(ErrorKind::parameter_domain, "moment space dimension must be at least 1");
  check_length(n, {}, "sample_uniform_moment_space");
  SampleBatch batch;
  batch.spec.n = n;
  batch.spec.kind = DistributionKind::moment_uniform;
  batch.columns = n;
  batch.seed = stream.seed();
  fill_rows(count, n, stream, threads, batch.rows, [&](RandomStream& rs, std::span<double> row) {
    RealCanonicalMoments c{std::vector<double>(n)};
    for (std::size_t j = 1; j <= n; ++j) {
      const double shape = static_cast<double>(n - j + 1);
      c.c[j - 1] = draw_beta(shape, shape, false, rs);
    }
    const RealMomentVector m = real_canonical_to_moments(c);
    for (std::size_t j = 0; j < n; ++j) row[j] = static_cast<double>(m.m[j]);
  });
  return batch;
}

VerblunskyTrace verblunsky_trace(const TrigMomentVector& tv, const MomentOptions& options) {
  const std::size_t n_max = tv.t.size();
  check_length(n_max, options, "verblunsky_from_trig_moments");
  std::vector<CReal> t{CReal(1.0L, 0.0L)};
  t.insert(t.end(), tv.t.begin(), tv.t.end());

  VerblunskyTrace out;
  out.coeffs.c.resize(n_max);
  out.norms_sq.assign(n_max + 1, 1.0);
  for (std::size_t n = 1; n <= n_max; ++n) {
    // Phi_n = z^n + sum_{i<n} a_i z^i with <Phi_n, z^j> = 0 for j < n.
    CMatrix gram(n, n);
    CVector rhs(n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) gram(j, i) = at(t, static_cast<long>(i) - static_cast<long>(j));
      rhs(j) = -at(t, static_cast<long>(n) - static_cast<long>(j));
    }
    const CVector a = solve_toeplitz(gram, rhs, n);
    CReal norm_sq = t[0];
    for (std::size_t i = 0; i < n; ++i) norm_sq += a(i) * at(t, static_cast<long>(i) - static_cast<long>(n));
    if (!(norm_sq.real() > 0.0L) || !std::isfinite(static_cast<double>(norm_sq.real()))) {
      std::ostringstream os;
      os << "Toeplitz matrix of the trigonometric moments is not positive definite: leading "
            "principal minor of order "
         << n + 1 << " is not positive";
      fail(ErrorKind::moment_validity, os.str());
    }
    const CReal cn = -std::conj(a(0));
    out.coeffs.c[n - 1] = Complex(static_cast<double>(cn.real()), static_cast<double>(cn.imag()));
    out.norms_sq[n] = static_cast<double>(norm_sq.real());
  }
  return out;
}

VerblunskyCoeffs verblunsky_from_trig_moments(const TrigMomentVector& t, const MomentOptions& options) {
  return verblunsky_trace(t, options).coeffs;
}

TrigMomentVector trig_moments_from_verblunsky(const VerblunskyCoeffs& cv, const MomentOptions& options) {
  const std::size_t n_max = cv.c.size();
  check_length(n_max, options, "trig_moments_from_verblunsky");
  for (std::size_t j = 0; j < n_max; ++j) {
    if (!(std::abs(cv.c[j]) < 1.0)) {
      std::ostringstream os;
      os << "Verblunsky coefficient " << j + 1 << " has modulus " << std::abs(cv.c[j])
         << ", not inside the unit disk";
      fail(ErrorKind::domain, os.str());
    }
  }
  std::vector<CReal> t{CReal(1.0L, 0.0L)};
  for (std::size_t n = 1; n <= n_max; ++n) {
    const CReal a0 = -std::conj(CReal(cv.c[n - 1].real(), cv.c[n - 1].imag()));
    // Unknowns a_1..a_{n-1} from <Phi_n, z^j> = 0, j = 1..n-1.
    CVector a(n);
    a(0) = a0;
    if (n > 1) {
      CMatrix gram(n - 1, n - 1);
      CVector rhs(n - 1);
      for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 1; i < n; ++i)
          gram(j - 1, i - 1) = at(t, static_cast<long>(i) - static_cast<long>(j));
        rhs(j - 1) = -at(t, static_cast<long>(n) - static_cast<long>(j)) - a0 * at(t, -static_cast<long>(j));
      }
      a.tail(n - 1) = solve_toeplitz(gram, rhs, n);
    }
    // <Phi_n, 1> = 0 is linear in t_n.
    CReal tn(0.0L, 0.0L);
    for (std::size_t i = 0; i < n; ++i) tn -= a(i) * t[i];
    t.push_back(tn);
  }
  return TrigMomentVector{{t.begin() + 1, t.end()}};
}

BallPoint<Complex> reversed_pi_coordinates(const VerblunskyCoeffs& c) {
  const std::size_t n = c.c.size();
  CanonicalCoords<Complex> kappa{std::vector<Complex>(n), 2.0};
  for (std::size_t r = 1; r <= n; ++r) kappa.c[r - 1] = -std::conj(c.c[n - r]);
  return from_canonical(kappa);
}

std::vector<Complex> pi_values(const VerblunskyCoeffs& c) {
  const std::size_t n = c.c.size();
  std::vector<Complex> pi(n + 1);
  // tail[k] = prod_{r=k+1}^{n} sqrt(1 - |c_r|^2)
  double tail = 1.0;
  for (std::size_t k = n; k >= 1; --k) {
    const double mod = std::abs(c.c[k - 1]);
    if (!(mod < 1.0)) {
      std::ostringstream os;
      os << "Verblunsky coefficient " << k << " has modulus " << mod << ", not inside the unit disk";
      fail(ErrorKind::domain, os.str());
    }
    pi[k] = -std::conj(c.c[k - 1]) * tail;
    tail *= std::sqrt((1.0 - mod) * (1.0 + mod));
  }
  pi[0] = tail;
  return pi;
}

BallPoint<double> sigma_map(const RealMomentVector& m, const MomentOptions& options) {
  const RealCanonicalMoments c = real_moments_to_canonical(m, options);
  CanonicalCoords<double> centered{std::vector<double>(c.c.size()), 2.0};
  for (std::size_t j = 0; j < c.c.size(); ++j) centered.c[j] = 2.0 * c.c[j] - 1.0;
  return from_canonical(centered);
}

}  // namespace lpball
