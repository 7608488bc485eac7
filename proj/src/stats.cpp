// SPDX-FileCopyrightText: Copyright (c) 2026 lpball developers
// SPDX-License-Identifier: Apache-2.0

#include "lpball/stats.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numeric>
#include <sstream>

#include "lpball/error.hpp"

namespace lpball {
namespace {

constexpr double kPi = 3.14159265358979323846;

double normal_upper_tail(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

std::vector<double> sorted_copy(std::span<const double> s) {
  std::vector<double> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

// Uniform index in [0, n).
std::size_t draw_index(RandomStream& stream, std::size_t n) {
  const unsigned __int128 wide = static_cast<unsigned __int128>(stream.next_u64()) * n;
  return static_cast<std::size_t>(wide >> 64);
}

std::vector<std::size_t> ranks_of(const std::vector<double>& column) {
  std::vector<std::size_t> order(column.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return column[a] < column[b]; });
  std::vector<std::size_t> rank(column.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
  return rank;
}

}  // namespace

double kolmogorov_q(double lambda) {
  if (!(lambda > 0.0)) return 1.0;
  constexpr double kTail = 1e-10;
  if (lambda < 1.18) {
    // Theta-function form, accurate near the origin.
    const double scale = std::sqrt(2.0 * kPi) / lambda;
    double sum = 0.0;
    for (int k = 1; k < 100; ++k) {
      const double odd = 2.0 * k - 1.0;
      const double term = std::exp(-odd * odd * kPi * kPi / (8.0 * lambda * lambda));
      sum += term;
      if (term < kTail) break;
    }
    return std::clamp(1.0 - scale * sum, 0.0, 1.0);
  }
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1; k < 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += sign * term;
    sign = -sign;
    if (term < kTail) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_one_sample(std::span<const double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) fail(ErrorKind::usage, "ks_one_sample needs at least one sample");
  const std::vector<double> s = sorted_copy(samples);
  const double n = static_cast<double>(s.size());
  double d = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double f = cdf(s[i]);
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
  }
  return {d, kolmogorov_q(std::sqrt(n) * d)};
}

KsResult ks_two_sample(std::span<const double> s1, std::span<const double> s2) {
  if (s1.empty() || s2.empty()) fail(ErrorKind::usage, "ks_two_sample needs two nonempty samples");
  const std::vector<double> a = sorted_copy(s1);
  const std::vector<double> b = sorted_copy(s2);
  const double n1 = static_cast<double>(a.size());
  const double n2 = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / n1 - static_cast<double>(j) / n2));
  }
  const double effective = n1 * n2 / (n1 + n2);
  return {d, kolmogorov_q(std::sqrt(effective) * d)};
}

TestOutcome nuod_check(const SampleBatch& batch, const std::vector<std::vector<double>>& grid,
                       RandomStream& stream, const std::string& name, std::size_t bootstrap_rounds) {
  const std::size_t dims = batch.columns;
  if (grid.empty()) fail(ErrorKind::usage, "nuod_check: empty threshold grid");
  if (grid.size() != 1 && grid.size() != dims) {
    std::ostringstream os;
    os << "nuod_check: grid has " << grid.size() << " coordinate lists for " << dims << " columns";
    fail(ErrorKind::usage, os.str());
  }
  const auto levels_of = [&](std::size_t i) -> const std::vector<double>& {
    return grid.size() == 1 ? grid[0] : grid[i];
  };
  for (std::size_t i = 0; i < dims; ++i)
    if (levels_of(i).empty()) fail(ErrorKind::usage, "nuod_check: empty threshold list");
  const std::size_t n = batch.count();
  if (n == 0) fail(ErrorKind::insufficient_sample, "nuod_check: empty batch");

  // Marginal indicator slots, then one slot per grid point.
  std::vector<std::size_t> offset(dims + 1, 0);
  std::size_t grid_points = 1;
  for (std::size_t i = 0; i < dims; ++i) {
    offset[i + 1] = offset[i] + levels_of(i).size();
    grid_points *= levels_of(i).size();
  }
  const std::size_t marginal_slots = offset[dims];
  const std::size_t slots = marginal_slots + grid_points;
  std::vector<std::uint8_t> hit(n * slots, 0);
  std::vector<std::size_t> digit(dims);
  for (std::size_t r = 0; r < n; ++r) {
    const auto row = batch.row(r);
    std::uint8_t* h = hit.data() + r * slots;
    for (std::size_t i = 0; i < dims; ++i) {
      const auto& lv = levels_of(i);
      for (std::size_t l = 0; l < lv.size(); ++l) h[offset[i] + l] = std::fabs(row[i]) > lv[l];
    }
    for (std::size_t g = 0; g < grid_points; ++g) {
      std::size_t rest = g;
      bool all = true;
      for (std::size_t i = 0; i < dims && all; ++i) {
        const std::size_t l = rest % levels_of(i).size();
        rest /= levels_of(i).size();
        all = h[offset[i] + l] != 0;
      }
      h[marginal_slots + g] = all;
    }
  }

  const auto differences = [&](const std::vector<double>& counts) {
    std::vector<double> d(grid_points);
    for (std::size_t g = 0; g < grid_points; ++g) {
      std::size_t rest = g;
      double product = 1.0;
      for (std::size_t i = 0; i < dims; ++i) {
        const std::size_t l = rest % levels_of(i).size();
        rest /= levels_of(i).size();
        product *= counts[offset[i] + l] / static_cast<double>(n);
      }
      d[g] = counts[marginal_slots + g] / static_cast<double>(n) - product;
    }
    return d;
  };

  std::vector<double> counts(slots, 0.0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < slots; ++s) counts[s] += hit[r * slots + s];
  const std::vector<double> observed = differences(counts);

  std::vector<double> sum(grid_points, 0.0), sum_sq(grid_points, 0.0);
  std::vector<std::uint32_t> boot(slots);
  for (std::size_t round = 0; round < bootstrap_rounds; ++round) {
    std::fill(boot.begin(), boot.end(), 0u);
    for (std::size_t r = 0; r < n; ++r) {
      const std::uint8_t* h = hit.data() + draw_index(stream, n) * slots;
      for (std::size_t s = 0; s < slots; ++s) boot[s] += h[s];
    }
    const std::vector<double> d = differences(std::vector<double>(boot.begin(), boot.end()));
    for (std::size_t g = 0; g < grid_points; ++g) {
      sum[g] += d[g];
      sum_sq[g] += d[g] * d[g];
    }
  }

  TestOutcome out;
  out.name = name;
  out.sample_size = n;
  out.seed = stream.seed();
  out.passed = true;
  double worst_margin = -INFINITY;
  double worst_z = -INFINITY;
  out.statistic = -INFINITY;
  const double rounds = static_cast<double>(std::max<std::size_t>(bootstrap_rounds, 2));
  for (std::size_t g = 0; g < grid_points; ++g) {
    const double mean = sum[g] / rounds;
    const double var = std::max(0.0, (sum_sq[g] - rounds * mean * mean) / (rounds - 1.0));
    const double band = 3.0 * std::sqrt(var);
    out.statistic = std::max(out.statistic, observed[g]);
    if (observed[g] - band > worst_margin) {
      worst_margin = observed[g] - band;
      out.threshold = band;
    }
    if (var > 0.0) worst_z = std::max(worst_z, observed[g] / std::sqrt(var));
    if (observed[g] > band) out.passed = false;
  }
  out.p_value = std::isfinite(worst_z) ? normal_upper_tail(worst_z) : 1.0;
  return out;
}

TestOutcome independence_scan(const SampleBatch& batch, double alpha, const std::string& name) {
  const std::size_t n = batch.count();
  const std::size_t dims = batch.columns;
  if (n < 100) {
    std::ostringstream os;
    os << "independence_scan needs at least 100 rows, got " << n;
    fail(ErrorKind::insufficient_sample, os.str());
  }
  if (dims < 2) fail(ErrorKind::usage, "independence_scan needs at least two columns");
  std::vector<std::vector<std::size_t>> ranks(dims);
  for (std::size_t j = 0; j < dims; ++j) ranks[j] = ranks_of(batch.column(j));

  const std::size_t pairs = dims * (dims - 1) / 2;
  const double threshold = alpha / static_cast<double>(2 * pairs);
  const double nd = static_cast<double>(n);
  const double mean_rank = (nd - 1.0) / 2.0;
  const double rank_var = (nd * nd - 1.0) / 12.0;

  TestOutcome out;
  out.name = name;
  out.sample_size = n;
  out.seed = batch.seed;
  out.threshold = threshold;
  out.statistic = 0.0;
  out.p_value = 1.0;
  for (std::size_t a = 0; a < dims; ++a) {
    for (std::size_t b = a + 1; b < dims; ++b) {
      double cov = 0.0;
      double table[4][4] = {};
      double row_total[4] = {};
      double col_total[4] = {};
      for (std::size_t r = 0; r < n; ++r) {
        const double ra = static_cast<double>(ranks[a][r]);
        const double rb = static_cast<double>(ranks[b][r]);
        cov += (ra - mean_rank) * (rb - mean_rank);
        const auto qa = static_cast<std::size_t>(4 * ranks[a][r] / n);
        const auto qb = static_cast<std::size_t>(4 * ranks[b][r] / n);
        table[qa][qb] += 1.0;
        row_total[qa] += 1.0;
        col_total[qb] += 1.0;
      }
      const double rho = cov / (nd * rank_var);
      const double p_rho = 2.0 * normal_upper_tail(std::fabs(rho) * std::sqrt(nd - 1.0));
      double chi2 = 0.0;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          const double expected = row_total[i] * col_total[j] / nd;
          chi2 += (table[i][j] - expected) * (table[i][j] - expected) / expected;
        }
      const double p_chi2 = boost::math::gamma_q(4.5, chi2 / 2.0);
      out.statistic = std::max(out.statistic, std::fabs(rho));
      out.p_value = std::min({out.p_value, p_rho, p_chi2});
    }
  }
  out.passed = out.p_value >= threshold;
  return out;
}

}  // namespace lpball
