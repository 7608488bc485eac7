// SPDX-FileCopyrightText: Copyright (c) 2026 lpball developers
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Talks to the library only through lpball.h.

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lpball/lpball.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LibraryError : std::runtime_error {
  lpball_status status;
  LibraryError(lpball_status s, const std::string& msg) : std::runtime_error(msg), status(s) {}
};

void check(lpball_status status) {
  if (status != LPBALL_OK)
    throw LibraryError(status, std::string(lpball_status_name(status)) + " error: " + lpball_last_error());
}

struct BatchDeleter {
  void operator()(lpball_batch* b) const { lpball_batch_destroy(b); }
};
struct StreamDeleter {
  void operator()(lpball_stream* s) const { lpball_stream_destroy(s); }
};
struct ReportDeleter {
  void operator()(lpball_report* r) const { lpball_report_destroy(r); }
};
using BatchPtr = std::unique_ptr<lpball_batch, BatchDeleter>;
using StreamPtr = std::unique_ptr<lpball_stream, StreamDeleter>;
using ReportPtr = std::unique_ptr<lpball_report, ReportDeleter>;

double parse_real(const std::string& text, const std::string& what) {
  if (text == "inf" || text == "infinity") return std::numeric_limits<double>::infinity();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE)
    throw UsageError(what + ": not a number: '" + text + "'");
  return v;
}

std::vector<double> parse_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(parse_real(cell, what));
  if (out.empty()) throw UsageError(what + ": empty list");
  return out;
}

// Resolves --a/--b: explicit lists or one of the presets.
struct ParamSpec {
  std::string a;
  std::string b;
  double theta = std::numeric_limits<double>::quiet_NaN();
  double alpha = 0.0;
};

void resolve_params(const ParamSpec& spec, std::size_t n, double p, std::vector<double>& a,
                    std::vector<double>& b) {
  if (spec.a.empty()) throw UsageError("--dist pgd needs --a (a list or a preset: uniform, gem-theta, gem-alpha-theta)");
  a.assign(n, 0.0);
  b.assign(n, 0.0);
  if (spec.a == "uniform") {
    check(lpball_uniform_params(n, p, a.data(), b.data()));
  } else if (spec.a == "gem-theta" || spec.a == "gem-alpha-theta") {
    if (std::isnan(spec.theta)) throw UsageError("--a " + spec.a + " needs --theta");
    check(lpball_gem_params(spec.a == "gem-alpha-theta", spec.theta, spec.alpha, n, a.data(), b.data()));
  } else {
    a = parse_list(spec.a, "--a");
    if (spec.b.empty()) throw UsageError("--a given as a list needs --b");
    b = parse_list(spec.b, "--b");
    if (a.size() != n || b.size() != n) {
      std::ostringstream os;
      os << "--a and --b need " << n << " entries each (got " << a.size() << " and " << b.size() << ")";
      throw UsageError(os.str());
    }
    return;
  }
  if (!spec.b.empty()) throw UsageError("--b is implied by the --a preset '" + spec.a + "'");
}

void write_histogram(const lpball_batch* batch, const std::string& path, std::size_t bins) {
  const std::size_t count = lpball_batch_count(batch);
  const std::size_t columns = lpball_batch_columns(batch);
  const double* data = lpball_batch_data(batch);
  std::ofstream out(path);
  if (!out) throw LibraryError(LPBALL_ERR_IO, "cannot open '" + path + "' for writing");
  out << "column,bin_lo,bin_hi,count\n";
  char buf[64];
  for (std::size_t j = 0; j < columns && count > 0; ++j) {
    double lo = data[j], hi = data[j];
    for (std::size_t i = 0; i < count; ++i) {
      lo = std::min(lo, data[i * columns + j]);
      hi = std::max(hi, data[i * columns + j]);
    }
    if (hi == lo) hi = lo + 1.0;
    std::vector<std::size_t> hist(bins, 0);
    for (std::size_t i = 0; i < count; ++i) {
      const double u = (data[i * columns + j] - lo) / (hi - lo);
      ++hist[std::min(bins - 1, static_cast<std::size_t>(u * static_cast<double>(bins)))];
    }
    for (std::size_t k = 0; k < bins; ++k) {
      const double a = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(bins);
      const double b = lo + (hi - lo) * static_cast<double>(k + 1) / static_cast<double>(bins);
      std::snprintf(buf, sizeof buf, "%.17g,%.17g", a, b);
      out << j + 1 << ',' << buf << ',' << hist[k] << '\n';
    }
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Sampling, coordinate transforms, moment maps and verification on l_p balls"};
  app.require_subcommand(1);
  app.set_version_flag("--version", lpball_version());

  // sample
  auto* sample = app.add_subcommand("sample", "Draw a batch from a distribution on the ball");
  std::string dist = "uniform", method = "canonical", p_text = "2", format = "csv", out_path = "-", plot_path;
  std::size_t n = 0, count = 0, bins = 50;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  ParamSpec params;
  sample->add_option("--dist", dist, "uniform | pgd | cone-sphere | moment-uniform")
      ->check(CLI::IsMember({"uniform", "pgd", "cone-sphere", "moment-uniform"}));
  sample->add_option("--method", method, "canonical | scaled-cone | gamma-exp (uniform only)")
      ->check(CLI::IsMember({"canonical", "scaled-cone", "gamma-exp"}));
  sample->add_option("--n", n, "dimension")->required()->check(CLI::PositiveNumber);
  sample->add_option("--p", p_text, "exponent p >= 1 (inf allowed for uniform)");
  sample->add_option("--a", params.a, "comma list, or preset uniform | gem-theta | gem-alpha-theta");
  sample->add_option("--b", params.b, "comma list (with a list --a)");
  sample->add_option("--theta", params.theta, "GEM theta");
  sample->add_option("--alpha", params.alpha, "GEM alpha");
  sample->add_option("--count", count, "number of draws")->required();
  sample->add_option("--seed", seed, "64-bit seed")->required();
  sample->add_option("--out", out_path, "output path, - for stdout");
  sample->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  sample->add_option("--threads", threads, "worker threads (0: automatic)");
  sample->add_option("--plot", plot_path, "also write per-column histogram CSV here");
  sample->add_option("--bins", bins, "histogram bins")->check(CLI::PositiveNumber);

  // transform
  auto* transform = app.add_subcommand("transform", "Canonical coordinates of ball points, either way");
  std::string direction, in_path = "-";
  std::size_t expect_n = 0;
  transform->add_option("--direction", direction)->required()->check(
      CLI::IsMember({"to-canonical", "from-canonical"}));
  transform->add_option("--p", p_text, "exponent p >= 1");
  transform->add_option("--in", in_path, "input batch, - for stdin");
  transform->add_option("--out", out_path, "output path, - for stdout");
  transform->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  transform->add_option("--n", expect_n, "required input dimension");

  // moments
  auto* moments = app.add_subcommand("moments", "Moment-space maps on batches of vectors");
  moments->add_option("--direction", direction)->required()->check(
      CLI::IsMember({"moments-to-canonical", "canonical-to-moments", "sigma", "trig-to-verblunsky",
                     "verblunsky-to-trig", "verblunsky-to-ball"}));
  moments->add_option("--in", in_path, "input batch, - for stdin");
  moments->add_option("--out", out_path, "output path, - for stdout");
  moments->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  moments->add_option("--n", expect_n, "required input dimension");

  // rate
  auto* rate = app.add_subcommand("rate", "Large-deviation rate functions");
  std::string kind = "ball", x_text;
  double c_param = std::numeric_limits<double>::quiet_NaN();
  rate->add_option("--kind", kind)->check(CLI::IsMember({"ball", "canonical", "beta", "functional"}));
  rate->add_option("--x", x_text, "comma list of coordinates");
  rate->add_option("--in", in_path, "batch file: one rate per row");
  rate->add_option("--p", p_text, "exponent p (ball, canonical)");
  rate->add_option("--c", c_param, "Beta shape ratio c (beta)");

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite, report_path;
  double alpha = 0.01;
  verify->add_option("--suite", suite)->required();
  verify->add_option("--n", n, "dimension override");
  verify->add_option("--p", p_text, "exponent override");
  verify->add_option("--count", count, "sample size override");
  verify->add_option("--alpha", alpha, "significance level")->check(CLI::Range(0.0, 1.0));
  verify->add_option("--seed", seed, "64-bit seed")->required();
  verify->add_option("--threads", threads, "worker threads (0: automatic)");
  verify->add_option("--report", report_path, "write the JSON report here (stdout gets the table)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*sample) {
    const double p = parse_real(p_text, "--p");
    StreamPtr stream;
    {
      lpball_stream* s = nullptr;
      check(lpball_stream_create(seed, &s));
      stream.reset(s);
    }
    lpball_batch* raw = nullptr;
    if (dist == "uniform") {
      check(lpball_sample_uniform(n, p, method.c_str(), count, stream.get(), threads, &raw));
    } else if (dist == "pgd") {
      std::vector<double> a, b;
      resolve_params(params, n, p, a, b);
      check(lpball_sample_pgd(n, p, a.data(), b.data(), count, stream.get(), threads, &raw));
    } else if (dist == "cone-sphere") {
      check(lpball_sample_cone_sphere(n, p, count, stream.get(), threads, &raw));
    } else {
      check(lpball_sample_moment_space(n, count, stream.get(), threads, &raw));
    }
    BatchPtr batch(raw);
    check(lpball_batch_write(batch.get(), out_path.c_str(), format.c_str()));
    if (!plot_path.empty()) write_histogram(batch.get(), plot_path, bins);
    return kExitOk;
  }

  if (*transform) {
    const double p = parse_real(p_text, "--p");
    lpball_batch* raw = nullptr;
    check(lpball_batch_read(in_path.c_str(), expect_n, &raw));
    BatchPtr input(raw);
    check(lpball_batch_transform(input.get(), direction.c_str(), p, &raw));
    BatchPtr output(raw);
    check(lpball_batch_write(output.get(), out_path.c_str(), format.c_str()));
    return kExitOk;
  }

  if (*moments) {
    lpball_batch* raw = nullptr;
    check(lpball_batch_read(in_path.c_str(), expect_n, &raw));
    BatchPtr input(raw);
    check(lpball_batch_moments(input.get(), direction.c_str(), &raw));
    BatchPtr output(raw);
    check(lpball_batch_write(output.get(), out_path.c_str(), format.c_str()));
    return kExitOk;
  }

  if (*rate) {
    double param = 0.0;
    if (kind == "beta") {
      if (std::isnan(c_param)) throw UsageError("--kind beta needs --c");
      param = c_param;
    } else if (kind != "functional") {
      param = parse_real(p_text, "--p");
    }
    char buf[32];
    if (!x_text.empty()) {
      const std::vector<double> x = parse_list(x_text, "--x");
      double value = 0.0;
      check(lpball_rate(kind.c_str(), x.data(), x.size(), param, &value));
      std::snprintf(buf, sizeof buf, "%.17g", value);
      std::cout << buf << '\n';
      return kExitOk;
    }
    lpball_batch* raw = nullptr;
    check(lpball_batch_read(in_path.c_str(), 0, &raw));
    BatchPtr input(raw);
    if (lpball_batch_is_complex(input.get())) throw UsageError("rate functions take real rows");
    const std::size_t cols = lpball_batch_columns(input.get());
    const double* data = lpball_batch_data(input.get());
    std::cout << "rate\n";
    for (std::size_t i = 0; i < lpball_batch_count(input.get()); ++i) {
      double value = 0.0;
      check(lpball_rate(kind.c_str(), data + i * cols, cols, param, &value));
      std::snprintf(buf, sizeof buf, "%.17g", value);
      std::cout << buf << '\n';
    }
    return kExitOk;
  }

  // verify
  lpball_suite_config config = lpball_suite_config_default();
  config.n = n;
  config.count = count;
  config.alpha = alpha;
  config.threads = threads;
  if (verify->count("--p") > 0) config.p = parse_real(p_text, "--p");
  lpball_report* raw = nullptr;
  check(lpball_run_suite(suite.c_str(), &config, seed, &raw));
  ReportPtr report(raw);
  if (report_path.empty()) {
    std::cout << lpball_report_json(report.get());
  } else {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) throw LibraryError(LPBALL_ERR_IO, "cannot open '" + report_path + "' for writing");
    out << lpball_report_json(report.get());
    std::cout << lpball_report_text(report.get());
  }
  return lpball_report_passed(report.get()) ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LibraryError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }
}
