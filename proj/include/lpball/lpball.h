/* SPDX-FileCopyrightText: Copyright (c) 2026 lpball developers
 * SPDX-License-Identifier: Apache-2.0 */

#ifndef LPBALL_LPBALL_H
#define LPBALL_LPBALL_H

#include <stddef.h>
#include <stdint.h>

#if defined(LPBALL_BUILDING)
#define LPBALL_API __attribute__((visibility("default")))
#else
#define LPBALL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lpball_status {
  LPBALL_OK = 0,
  LPBALL_ERR_PARAMETER_DOMAIN = 1,
  LPBALL_ERR_DOMAIN = 2,
  LPBALL_ERR_USAGE = 3,
  LPBALL_ERR_PARSE = 4,
  LPBALL_ERR_IO = 5,
  LPBALL_ERR_MOMENT_BOUNDARY = 6,
  LPBALL_ERR_CONDITIONING = 7,
  LPBALL_ERR_MOMENT_VALIDITY = 8,
  LPBALL_ERR_INSUFFICIENT_SAMPLE = 9,
  LPBALL_ERR_INTERNAL = 10
} lpball_status;

typedef struct lpball_stream lpball_stream;
typedef struct lpball_batch lpball_batch;
typedef struct lpball_report lpball_report;

/* Message of the last failing call on this thread ("" if none). */
LPBALL_API const char* lpball_last_error(void);
LPBALL_API const char* lpball_status_name(lpball_status status);
LPBALL_API const char* lpball_version(void);

/* ---- random streams ---- */
LPBALL_API lpball_status lpball_stream_create(uint64_t seed, lpball_stream** out);
LPBALL_API void lpball_stream_destroy(lpball_stream* stream);

/* ---- parameters ----
 * a and b must each hold n doubles. */
LPBALL_API lpball_status lpball_uniform_params(size_t n, double p, double* a, double* b);
/* alpha_theta = 0: GEM(theta), alpha must be 0. alpha_theta = 1: GEM(alpha, theta). */
LPBALL_API lpball_status lpball_gem_params(int alpha_theta, double theta, double alpha, size_t n, double* a,
                                           double* b);

/* ---- samplers ----
 * threads = 0 picks the default worker count (LPBALL_THREADS caps it).
 * Output does not depend on the worker count. */
LPBALL_API lpball_status lpball_sample_uniform(size_t n, double p, const char* method, size_t count,
                                               lpball_stream* stream, unsigned threads, lpball_batch** out);
LPBALL_API lpball_status lpball_sample_pgd(size_t n, double p, const double* a, const double* b, size_t count,
                                           lpball_stream* stream, unsigned threads, lpball_batch** out);
LPBALL_API lpball_status lpball_sample_cone_sphere(size_t n, double p, size_t count, lpball_stream* stream,
                                                   unsigned threads, lpball_batch** out);
LPBALL_API lpball_status lpball_sample_moment_space(size_t n, size_t count, lpball_stream* stream,
                                                    unsigned threads, lpball_batch** out);

/* ---- batches ----
 * Rows are row-major; complex batches store (re, im) pairs, so columns = 2 n. */
LPBALL_API lpball_status lpball_batch_from_rows(size_t n, int is_complex, size_t count, const double* rows,
                                                lpball_batch** out);
LPBALL_API void lpball_batch_destroy(lpball_batch* batch);
LPBALL_API size_t lpball_batch_count(const lpball_batch* batch);
LPBALL_API size_t lpball_batch_columns(const lpball_batch* batch);
LPBALL_API size_t lpball_batch_dimension(const lpball_batch* batch);
LPBALL_API int lpball_batch_is_complex(const lpball_batch* batch);
LPBALL_API uint64_t lpball_batch_seed(const lpball_batch* batch);
LPBALL_API const double* lpball_batch_data(const lpball_batch* batch);

/* format: "csv" or "json". path "-" means stdout / stdin. */
LPBALL_API lpball_status lpball_batch_write(const lpball_batch* batch, const char* path, const char* format);
/* expected_n = 0 accepts any dimension. */
LPBALL_API lpball_status lpball_batch_read(const char* path, size_t expected_n, lpball_batch** out);

/* direction: "to-canonical" or "from-canonical". Works row-wise on real or
 * complex batches. */
LPBALL_API lpball_status lpball_batch_transform(const lpball_batch* in, const char* direction, double p,
                                                lpball_batch** out);
/* direction: "moments-to-canonical", "canonical-to-moments", "sigma",
 * "trig-to-verblunsky", "verblunsky-to-trig", "verblunsky-to-ball". */
LPBALL_API lpball_status lpball_batch_moments(const lpball_batch* in, const char* direction,
                                              lpball_batch** out);

/* ---- single-vector transforms ---- */
LPBALL_API lpball_status lpball_to_canonical(const double* x, size_t n, double p, double* c);
LPBALL_API lpball_status lpball_from_canonical(const double* c, size_t n, double p, double* x);
LPBALL_API lpball_status lpball_jacobian_logdet(const double* c, size_t n, double p, double* out);
LPBALL_API lpball_status lpball_radial_cdf(size_t n, double p, double t, double* out);
LPBALL_API lpball_status lpball_hankel_bounds(const double* prefix, size_t len, double* lower, double* upper);
LPBALL_API lpball_status lpball_real_moments_to_canonical(const double* m, size_t n, double* c);
LPBALL_API lpball_status lpball_real_canonical_to_moments(const double* c, size_t n, double* m);
LPBALL_API lpball_status lpball_real_canonical_jacobian_logdet(const double* c, size_t n, double* out);
/* Complex vectors as interleaved (re, im); n counts complex entries. */
LPBALL_API lpball_status lpball_verblunsky_from_trig(const double* t, size_t n, double* c);
LPBALL_API lpball_status lpball_trig_from_verblunsky(const double* c, size_t n, double* t);

/* ---- rate functions ----
 * kind "ball": x has n entries, param = p. "canonical": same on canonical
 * coordinates. "beta": x[0] with param = c (n = 1). "functional": basis
 * coefficients, param ignored. Values outside the domain are +inf. */
LPBALL_API lpball_status lpball_rate(const char* kind, const double* x, size_t n, double param, double* out);
LPBALL_API lpball_status lpball_limit_cdf(double a, double p, double x, double* out);

/* ---- verification suites ---- */
typedef struct lpball_suite_config {
  size_t n;        /* 0: suite default */
  double p;        /* 0: suite default */
  size_t count;    /* 0: suite default */
  double alpha;    /* significance level, default 0.01 */
  unsigned threads;
} lpball_suite_config;

typedef struct lpball_outcome {
  const char* name; /* owned by the report */
  double statistic;
  double p_value;
  double threshold;
  int passed;
  size_t sample_size;
  uint64_t seed;
} lpball_outcome;

LPBALL_API lpball_suite_config lpball_suite_config_default(void);
LPBALL_API size_t lpball_suite_count(void);
LPBALL_API const char* lpball_suite_name(size_t index);
LPBALL_API lpball_status lpball_run_suite(const char* suite, const lpball_suite_config* config, uint64_t seed,
                                          lpball_report** out);
LPBALL_API void lpball_report_destroy(lpball_report* report);
LPBALL_API int lpball_report_passed(const lpball_report* report);
LPBALL_API size_t lpball_report_outcome_count(const lpball_report* report);
LPBALL_API lpball_status lpball_report_outcome(const lpball_report* report, size_t index, lpball_outcome* out);
/* Strings owned by the report. */
LPBALL_API const char* lpball_report_json(const lpball_report* report);
LPBALL_API const char* lpball_report_text(const lpball_report* report);

#ifdef __cplusplus
}
#endif

#endif /* LPBALL_LPBALL_H */
