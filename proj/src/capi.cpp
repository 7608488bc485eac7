// SPDX-FileCopyrightText: Copyright (c) 2026 lpball developers
// SPDX-License-Identifier: Apache-2.0

#include "lpball/lpball.h"

#include <cmath>
#include <cstring>
#include <new>
#include <string>

#include "lpball/asymptotics.hpp"
#include "lpball/ball_geometry.hpp"
#include "lpball/ball_samplers.hpp"
#include "lpball/batch_io.hpp"
#include "lpball/error.hpp"
#include "lpball/moment_spaces.hpp"
#include "lpball/suites.hpp"

struct lpball_stream {
  lpball::RandomStream stream;
};

struct lpball_batch {
  lpball::SampleBatch batch;
};

struct lpball_report {
  lpball::TestReport report;
  std::string json;
  std::string text;
};

namespace {

using namespace lpball;

thread_local std::string last_error;

lpball_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parameter_domain: return LPBALL_ERR_PARAMETER_DOMAIN;
    case ErrorKind::domain: return LPBALL_ERR_DOMAIN;
    case ErrorKind::usage: return LPBALL_ERR_USAGE;
    case ErrorKind::parse: return LPBALL_ERR_PARSE;
    case ErrorKind::io: return LPBALL_ERR_IO;
    case ErrorKind::moment_boundary: return LPBALL_ERR_MOMENT_BOUNDARY;
    case ErrorKind::conditioning: return LPBALL_ERR_CONDITIONING;
    case ErrorKind::moment_validity: return LPBALL_ERR_MOMENT_VALIDITY;
    case ErrorKind::insufficient_sample: return LPBALL_ERR_INSUFFICIENT_SAMPLE;
  }
  return LPBALL_ERR_INTERNAL;
}

template <class F>
lpball_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    return LPBALL_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return LPBALL_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return LPBALL_ERR_INTERNAL;
  }
}

void require(const void* ptr, const char* what) {
  if (ptr == nullptr) fail(ErrorKind::usage, std::string(what) + " must not be null");
}

unsigned workers(unsigned threads) { return threads == 0 ? default_thread_count() : threads; }

void emit(SampleBatch&& batch, lpball_batch** out) {
  require(out, "output handle");
  *out = new lpball_batch{std::move(batch)};
}

std::vector<Complex> complex_row(std::span<const double> row) {
  std::vector<Complex> z(row.size() / 2);
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = Complex(row[2 * i], row[2 * i + 1]);
  return z;
}

template <class T>
void store(std::span<double> dst, const std::vector<T>& src) {
  for (std::size_t i = 0; i < src.size(); ++i) {
    if constexpr (std::is_same_v<T, double>) {
      dst[i] = src[i];
    } else {
      dst[2 * i] = static_cast<double>(src[i].real());
      dst[2 * i + 1] = static_cast<double>(src[i].imag());
    }
  }
}

SampleBatch derived(const SampleBatch& in, bool complex) {
  SampleBatch out;
  out.spec.n = in.spec.n;
  out.spec.p = in.spec.p;
  out.spec.kind = DistributionKind::data;
  out.spec.complex = complex;
  out.columns = complex ? 2 * in.spec.n : in.spec.n;
  out.rows.assign(out.columns * in.count(), 0.0);
  out.seed = in.seed;
  return out;
}

}  // namespace

extern "C" {

const char* lpball_last_error(void) { return last_error.c_str(); }

const char* lpball_status_name(lpball_status status) {
  switch (status) {
    case LPBALL_OK: return "ok";
    case LPBALL_ERR_PARAMETER_DOMAIN: return to_string(ErrorKind::parameter_domain);
    case LPBALL_ERR_DOMAIN: return to_string(ErrorKind::domain);
    case LPBALL_ERR_USAGE: return to_string(ErrorKind::usage);
    case LPBALL_ERR_PARSE: return to_string(ErrorKind::parse);
    case LPBALL_ERR_IO: return to_string(ErrorKind::io);
    case LPBALL_ERR_MOMENT_BOUNDARY: return to_string(ErrorKind::moment_boundary);
    case LPBALL_ERR_CONDITIONING: return to_string(ErrorKind::conditioning);
    case LPBALL_ERR_MOMENT_VALIDITY: return to_string(ErrorKind::moment_validity);
    case LPBALL_ERR_INSUFFICIENT_SAMPLE: return to_string(ErrorKind::insufficient_sample);
    case LPBALL_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* lpball_version(void) { return "0.1.0"; }

lpball_status lpball_stream_create(uint64_t seed, lpball_stream** out) {
  return guard([&] {
    require(out, "output handle");
    *out = new lpball_stream{RandomStream(seed)};
  });
}

void lpball_stream_destroy(lpball_stream* stream) { delete stream; }

lpball_status lpball_uniform_params(size_t n, double p, double* a, double* b) {
  return guard([&] {
    require(a, "a");
    require(b, "b");
    const GDParams params = uniform_ball_params(n, p);
    std::copy(params.a.begin(), params.a.end(), a);
    std::copy(params.b.begin(), params.b.end(), b);
  });
}

lpball_status lpball_gem_params(int alpha_theta, double theta, double alpha, size_t n, double* a, double* b) {
  return guard([&] {
    require(a, "a");
    require(b, "b");
    const GDParams params = gem_params(alpha_theta ? GemKind::alpha_theta : GemKind::theta, theta, alpha, n);
    std::copy(params.a.begin(), params.a.end(), a);
    std::copy(params.b.begin(), params.b.end(), b);
  });
}

lpball_status lpball_sample_uniform(size_t n, double p, const char* method, size_t count, lpball_stream* stream,
                                    unsigned threads, lpball_batch** out) {
  return guard([&] {
    require(stream, "stream");
    require(method, "method");
    emit(sample_uniform_ball(n, p, parse_uniform_method(method), count, stream->stream, workers(threads)), out);
  });
}

lpball_status lpball_sample_pgd(size_t n, double p, const double* a, const double* b, size_t count,
                                lpball_stream* stream, unsigned threads, lpball_batch** out) {
  return guard([&] {
    require(stream, "stream");
    require(a, "a");
    require(b, "b");
    const GDParams params{{a, a + n}, {b, b + n}};
    emit(sample_pgd(n, p, params, count, stream->stream, workers(threads)), out);
  });
}

lpball_status lpball_sample_cone_sphere(size_t n, double p, size_t count, lpball_stream* stream, unsigned threads,
                                        lpball_batch** out) {
  return guard([&] {
    require(stream, "stream");
    emit(sample_cone_sphere(n, p, count, stream->stream, workers(threads)), out);
  });
}

lpball_status lpball_sample_moment_space(size_t n, size_t count, lpball_stream* stream, unsigned threads,
                                         lpball_batch** out) {
  return guard([&] {
    require(stream, "stream");
    emit(sample_uniform_moment_space(n, count, stream->stream, workers(threads)), out);
  });
}

lpball_status lpball_batch_from_rows(size_t n, int is_complex, size_t count, const double* rows,
                                     lpball_batch** out) {
  return guard([&] {
    if (count > 0) require(rows, "rows");
    SampleBatch batch;
    batch.spec.n = n;
    batch.spec.kind = DistributionKind::data;
    batch.spec.complex = is_complex != 0;
    batch.columns = is_complex ? 2 * n : n;
    batch.rows.assign(rows, rows + count * batch.columns);
    emit(std::move(batch), out);
  });
}

void lpball_batch_destroy(lpball_batch* batch) { delete batch; }
size_t lpball_batch_count(const lpball_batch* batch) { return batch ? batch->batch.count() : 0; }
size_t lpball_batch_columns(const lpball_batch* batch) { return batch ? batch->batch.columns : 0; }
size_t lpball_batch_dimension(const lpball_batch* batch) { return batch ? batch->batch.spec.n : 0; }
int lpball_batch_is_complex(const lpball_batch* batch) { return batch && batch->batch.spec.complex ? 1 : 0; }
uint64_t lpball_batch_seed(const lpball_batch* batch) { return batch ? batch->batch.seed : 0; }
const double* lpball_batch_data(const lpball_batch* batch) {
  return batch ? batch->batch.rows.data() : nullptr;
}

lpball_status lpball_batch_write(const lpball_batch* batch, const char* path, const char* format) {
  return guard([&] {
    require(batch, "batch");
    require(path, "path");
    write_batch(batch->batch, path, parse_batch_format(format ? format : "csv"));
  });
}

lpball_status lpball_batch_read(const char* path, size_t expected_n, lpball_batch** out) {
  return guard([&] {
    require(path, "path");
    std::optional<std::size_t> expected;
    if (expected_n > 0) expected = expected_n;
    emit(read_batch(path, expected), out);
  });
}

lpball_status lpball_batch_transform(const lpball_batch* in, const char* direction, double p,
                                     lpball_batch** out) {
  return guard([&] {
    require(in, "batch");
    require(direction, "direction");
    const std::string dir = direction;
    if (dir != "to-canonical" && dir != "from-canonical")
      fail(ErrorKind::usage, "unknown direction '" + dir + "' (expected to-canonical or from-canonical)");
    require_finite_p(p);
    const SampleBatch& src = in->batch;
    const bool complex = src.spec.complex;
    SampleBatch dst = derived(src, complex);
    dst.spec.p = p;
    for (std::size_t r = 0; r < src.count(); ++r) {
      const auto row = src.row(r);
      try {
        if (complex) {
          std::vector<Complex> z = complex_row(row);
          if (dir == "to-canonical")
            store(dst.row(r), to_canonical(BallPoint<Complex>{z, p}).c);
          else
            store(dst.row(r), from_canonical(CanonicalCoords<Complex>{z, p}).coords);
        } else {
          std::vector<double> x(row.begin(), row.end());
          if (dir == "to-canonical")
            store(dst.row(r), to_canonical(BallPoint<double>{x, p}).c);
          else
            store(dst.row(r), from_canonical(CanonicalCoords<double>{x, p}).coords);
        }
      } catch (const Error& e) {
        fail(e.kind(), "row " + std::to_string(r + 1) + ": " + e.what());
      }
    }
    emit(std::move(dst), out);
  });
}

lpball_status lpball_batch_moments(const lpball_batch* in, const char* direction, lpball_batch** out) {
  return guard([&] {
    require(in, "batch");
    require(direction, "direction");
    const std::string dir = direction;
    const SampleBatch& src = in->batch;
    const bool trig_in = dir == "trig-to-verblunsky" || dir == "verblunsky-to-trig" || dir == "verblunsky-to-ball";
    const bool known = trig_in || dir == "moments-to-canonical" || dir == "canonical-to-moments" || dir == "sigma";
    if (!known) fail(ErrorKind::usage, "unknown moments direction '" + dir + "'");
    if (trig_in != src.spec.complex)
      fail(ErrorKind::usage, "direction '" + dir + "' needs " + (trig_in ? "complex" : "real") + " input rows");
    SampleBatch dst = derived(src, trig_in);
    if (dir == "sigma") dst.spec.p = 2.0;
    for (std::size_t r = 0; r < src.count(); ++r) {
      const auto row = src.row(r);
      try {
        if (dir == "moments-to-canonical") {
          store(dst.row(r), real_moments_to_canonical(RealMomentVector{{row.begin(), row.end()}}).c);
        } else if (dir == "canonical-to-moments") {
          const auto m = real_canonical_to_moments(RealCanonicalMoments{{row.begin(), row.end()}}).m;
          for (std::size_t i = 0; i < m.size(); ++i) dst.row(r)[i] = static_cast<double>(m[i]);
        } else if (dir == "sigma") {
          store(dst.row(r), sigma_map(RealMomentVector{{row.begin(), row.end()}}).coords);
        } else if (dir == "trig-to-verblunsky") {
          const auto z = complex_row(row);
          store(dst.row(r), verblunsky_from_trig_moments(TrigMomentVector{{z.begin(), z.end()}}).c);
        } else if (dir == "verblunsky-to-trig") {
          store(dst.row(r), trig_moments_from_verblunsky(VerblunskyCoeffs{complex_row(row)}).t);
        } else {
          store(dst.row(r), reversed_pi_coordinates(VerblunskyCoeffs{complex_row(row)}).coords);
          dst.spec.p = 2.0;
        }
      } catch (const Error& e) {
        fail(e.kind(), "row " + std::to_string(r + 1) + ": " + e.what());
      }
    }
    emit(std::move(dst), out);
  });
}

lpball_status lpball_to_canonical(const double* x, size_t n, double p, double* c) {
  return guard([&] {
    require(x, "x");
    require(c, "c");
    store({c, n}, to_canonical(BallPoint<double>{{x, x + n}, p}).c);
  });
}

lpball_status lpball_from_canonical(const double* c, size_t n, double p, double* x) {
  return guard([&] {
    require(c, "c");
    require(x, "x");
    store({x, n}, from_canonical(CanonicalCoords<double>{{c, c + n}, p}).coords);
  });
}

lpball_status lpball_jacobian_logdet(const double* c, size_t n, double p, double* out) {
  return guard([&] {
    require(c, "c");
    require(out, "out");
    *out = jacobian_logdet(CanonicalCoords<double>{{c, c + n}, p});
  });
}

lpball_status lpball_radial_cdf(size_t n, double p, double t, double* out) {
  return guard([&] {
    require(out, "out");
    *out = radial_cdf(n, p, t);
  });
}

lpball_status lpball_hankel_bounds(const double* prefix, size_t len, double* lower, double* upper) {
  return guard([&] {
    if (len > 0) require(prefix, "prefix");
    require(lower, "lower");
    require(upper, "upper");
    const std::vector<MomentReal> m(prefix, prefix + len);
    const MomentBounds b = hankel_bounds(m);
    *lower = static_cast<double>(b.lower);
    *upper = static_cast<double>(b.upper);
  });
}

lpball_status lpball_real_moments_to_canonical(const double* m, size_t n, double* c) {
  return guard([&] {
    require(m, "m");
    require(c, "c");
    store({c, n}, real_moments_to_canonical(RealMomentVector{{m, m + n}}).c);
  });
}

lpball_status lpball_real_canonical_to_moments(const double* c, size_t n, double* m) {
  return guard([&] {
    require(c, "c");
    require(m, "m");
    const auto v = real_canonical_to_moments(RealCanonicalMoments{{c, c + n}}).m;
    for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<double>(v[i]);
  });
}

lpball_status lpball_real_canonical_jacobian_logdet(const double* c, size_t n, double* out) {
  return guard([&] {
    require(c, "c");
    require(out, "out");
    *out = real_canonical_jacobian_logdet(RealCanonicalMoments{{c, c + n}});
  });
}

lpball_status lpball_verblunsky_from_trig(const double* t, size_t n, double* c) {
  return guard([&] {
    require(t, "t");
    require(c, "c");
    const auto z = complex_row({t, 2 * n});
    store({c, 2 * n}, verblunsky_from_trig_moments(TrigMomentVector{{z.begin(), z.end()}}).c);
  });
}

lpball_status lpball_trig_from_verblunsky(const double* c, size_t n, double* t) {
  return guard([&] {
    require(c, "c");
    require(t, "t");
    store({t, 2 * n}, trig_moments_from_verblunsky(VerblunskyCoeffs{complex_row({c, 2 * n})}).t);
  });
}

lpball_status lpball_rate(const char* kind, const double* x, size_t n, double param, double* out) {
  return guard([&] {
    require(kind, "kind");
    require(out, "out");
    if (n > 0) require(x, "x");
    const std::string k = kind;
    const std::span<const double> v(x, n);
    if (k == "ball") {
      *out = ldp_rate_ball(v, param).value;
    } else if (k == "canonical") {
      *out = ldp_rate_canonical(v, param).value;
    } else if (k == "beta") {
      if (n != 1) fail(ErrorKind::usage, "beta rate takes a single value");
      *out = ldp_rate_beta(x[0], param).value;
    } else if (k == "functional") {
      *out = ldp_rate_functional(v).value;
    } else {
      fail(ErrorKind::usage, "unknown rate '" + k + "' (expected ball, canonical, beta or functional)");
    }
  });
}

lpball_status lpball_limit_cdf(double a, double p, double x, double* out) {
  return guard([&] {
    require(out, "out");
    *out = limit_cdf_pgd(a, p, x);
  });
}

lpball_suite_config lpball_suite_config_default(void) { return {0, 0.0, 0, 0.01, 1}; }

size_t lpball_suite_count(void) { return suite_names().size(); }

const char* lpball_suite_name(size_t index) {
  return index < suite_names().size() ? suite_names()[index].c_str() : nullptr;
}

lpball_status lpball_run_suite(const char* suite, const lpball_suite_config* config, uint64_t seed,
                               lpball_report** out) {
  return guard([&] {
    require(suite, "suite");
    require(out, "output handle");
    const lpball_suite_config c = config ? *config : lpball_suite_config_default();
    SuiteConfig sc;
    if (c.n) sc.n = c.n;
    if (c.p != 0.0) sc.p = c.p;
    if (c.count) sc.count = c.count;
    sc.alpha = c.alpha;
    sc.threads = workers(c.threads);
    auto* report = new lpball_report{run_suite(suite, sc, seed), {}, {}};
    report->json = report_to_json(report->report);
    report->text = report_to_text(report->report);
    *out = report;
  });
}

void lpball_report_destroy(lpball_report* report) { delete report; }

int lpball_report_passed(const lpball_report* report) { return report && report->report.passed() ? 1 : 0; }

size_t lpball_report_outcome_count(const lpball_report* report) {
  return report ? report->report.outcomes.size() : 0;
}

lpball_status lpball_report_outcome(const lpball_report* report, size_t index, lpball_outcome* out) {
  return guard([&] {
    require(report, "report");
    require(out, "out");
    if (index >= report->report.outcomes.size()) fail(ErrorKind::usage, "outcome index out of range");
    const TestOutcome& o = report->report.outcomes[index];
    *out = {o.name.c_str(), o.statistic, o.p_value, o.threshold, o.passed ? 1 : 0, o.sample_size, o.seed};
  });
}

const char* lpball_report_json(const lpball_report* report) { return report ? report->json.c_str() : ""; }
const char* lpball_report_text(const lpball_report* report) { return report ? report->text.c_str() : ""; }

}  // extern "C"
