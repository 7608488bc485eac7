// SPDX-FileCopyrightText: Copyright (c) 2026 lpball developers
// SPDX-License-Identifier: Apache-2.0

#include "lpball/batch.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <thread>

#include "lpball/error.hpp"

namespace lpball {

std::vector<double> SampleBatch::column(std::size_t j) const {
  std::vector<double> out(count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = rows[i * columns + j];
  return out;
}

const char* to_string(UniformMethod method) noexcept {
  switch (method) {
    case UniformMethod::canonical: return "canonical";
    case UniformMethod::scaled_cone: return "scaled-cone";
    case UniformMethod::gamma_exp: return "gamma-exp";
  }
  return "unknown";
}

const char* to_string(DistributionKind kind) noexcept {
  switch (kind) {
    case DistributionKind::pgd: return "pgd";
    case DistributionKind::uniform: return "uniform";
    case DistributionKind::cone_sphere: return "cone-sphere";
    case DistributionKind::moment_uniform: return "moment-uniform";
    case DistributionKind::data: return "data";
  }
  return "unknown";
}

UniformMethod parse_uniform_method(const std::string& name) {
  if (name == "canonical") return UniformMethod::canonical;
  if (name == "scaled-cone") return UniformMethod::scaled_cone;
  if (name == "gamma-exp") return UniformMethod::gamma_exp;
  fail(ErrorKind::usage, "unknown uniform method '" + name +
                             "' (expected canonical, scaled-cone or gamma-exp)");
}

unsigned default_thread_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("LPBALL_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

void fill_rows(std::size_t count, std::size_t columns, RandomStream& stream, unsigned threads,
               std::vector<double>& out,
               const std::function<void(RandomStream&, std::span<double>)>& draw_row) {
  out.assign(count * columns, 0.0);
  const RandomStream base(stream.next_u64());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      RandomStream row_stream = base.split(i);
      draw_row(row_stream, std::span<double>(out.data() + i * columns, columns));
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, count / 256))));
  if (threads == 1) {
    work(0, count);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  const std::size_t chunk = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = std::min(count, t * chunk);
    const std::size_t end = std::min(count, begin + chunk);
    pool.emplace_back([&, t, begin, end] {
      try {
        work(begin, end);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace lpball
