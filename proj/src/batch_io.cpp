// SPDX-FileCopyrightText: Copyright (c) 2026 lpball developers
// SPDX-License-Identifier: Apache-2.0

#include "lpball/batch_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "lpball/error.hpp"

namespace lpball {
namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  std::ostringstream os;
  os << "line " << line << ": " << msg;
  fail(ErrorKind::parse, os.str());
}

std::string format_cell(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) out.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

DistributionKind parse_kind(const std::string& s) {
  for (DistributionKind k : {DistributionKind::pgd, DistributionKind::uniform, DistributionKind::cone_sphere,
                             DistributionKind::moment_uniform, DistributionKind::data})
    if (s == to_string(k)) return k;
  fail(ErrorKind::parse, "unknown distribution kind '" + s + "'");
}

json spec_to_json(const BallDistributionSpec& spec) {
  json j;
  j["n"] = spec.n;
  j["p"] = std::isinf(spec.p) ? json("inf") : json(spec.p);
  j["kind"] = to_string(spec.kind);
  if (spec.kind == DistributionKind::uniform) j["method"] = to_string(spec.method);
  if (spec.kind == DistributionKind::pgd) j["params"] = {{"a", spec.params.a}, {"b", spec.params.b}};
  j["complex"] = spec.complex;
  return j;
}

BallDistributionSpec spec_from_json(const json& j) {
  BallDistributionSpec spec;
  spec.n = j.at("n").get<std::size_t>();
  const json& p = j.at("p");
  spec.p = p.is_string() && p.get<std::string>() == "inf" ? kInfiniteP : p.get<double>();
  spec.kind = parse_kind(j.at("kind").get<std::string>());
  if (j.contains("method")) spec.method = parse_uniform_method(j.at("method").get<std::string>());
  if (j.contains("params")) {
    spec.params.a = j.at("params").at("a").get<std::vector<double>>();
    spec.params.b = j.at("params").at("b").get<std::vector<double>>();
  }
  spec.complex = j.value("complex", false);
  return spec;
}

void check_dimension(std::size_t declared, std::optional<std::size_t> expected, std::size_t line) {
  if (expected && declared != *expected) {
    std::ostringstream os;
    os << "header declares dimension " << declared << ", expected " << *expected;
    parse_fail(line, os.str());
  }
}

SampleBatch read_csv(std::istream& in, std::optional<std::size_t> expected_n) {
  SampleBatch batch;
  batch.spec.kind = DistributionKind::data;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split_commas(line);
    if (!have_header) {
      const bool complex = !cells.empty() && cells[0] == "re1";
      const std::size_t width = cells.size();
      if (complex && width % 2 != 0) parse_fail(line_no, "complex header needs re/im pairs");
      for (std::size_t i = 0; i < width; ++i) {
        const std::string want =
            complex ? (i % 2 == 0 ? "re" : "im") + std::to_string(i / 2 + 1) : "x" + std::to_string(i + 1);
        if (cells[i] != want) parse_fail(line_no, "bad header cell '" + cells[i] + "', expected '" + want + "'");
      }
      batch.spec.complex = complex;
      batch.spec.n = complex ? width / 2 : width;
      batch.columns = width;
      check_dimension(batch.spec.n, expected_n, line_no);
      have_header = true;
      continue;
    }
    if (cells.size() != batch.columns) {
      std::ostringstream os;
      os << "expected " << batch.columns << " values, found " << cells.size();
      parse_fail(line_no, os.str());
    }
    for (const std::string& cell : cells) {
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc() || ptr != cell.data() + cell.size() || cell.empty())
        parse_fail(line_no, "not a number: '" + cell + "'");
      batch.rows.push_back(v);
    }
  }
  if (!have_header) parse_fail(line_no + 1, "missing header row");
  return batch;
}

SampleBatch read_json(std::istream& in, std::optional<std::size_t> expected_n) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::parse, e.what());
  }
  SampleBatch batch;
  try {
    batch.spec = spec_from_json(j.at("spec"));
    batch.seed = j.value("seed", std::uint64_t{0});
    batch.columns = batch.spec.complex ? 2 * batch.spec.n : batch.spec.n;
    check_dimension(batch.spec.n, expected_n, 1);
    std::size_t r = 0;
    for (const json& row : j.at("rows")) {
      ++r;
      if (!row.is_array() || row.size() != batch.columns) {
        std::ostringstream os;
        os << "row " << r << " does not have " << batch.columns << " values";
        fail(ErrorKind::parse, os.str());
      }
      for (const json& v : row) batch.rows.push_back(v.get<double>());
    }
  } catch (const json::exception& e) {
    fail(ErrorKind::parse, std::string("malformed batch JSON: ") + e.what());
  }
  return batch;
}

}  // namespace

BatchFormat parse_batch_format(const std::string& name) {
  if (name == "csv") return BatchFormat::csv;
  if (name == "json") return BatchFormat::json;
  fail(ErrorKind::usage, "unknown format '" + name + "' (expected csv or json)");
}

void write_batch(const SampleBatch& batch, std::ostream& out, BatchFormat format) {
  if (format == BatchFormat::csv) {
    const std::size_t width = batch.columns ? batch.columns : (batch.spec.complex ? 2 : 1) * batch.spec.n;
    for (std::size_t i = 0; i < width; ++i) {
      if (i) out << ',';
      if (batch.spec.complex)
        out << (i % 2 == 0 ? "re" : "im") << i / 2 + 1;
      else
        out << 'x' << i + 1;
    }
    out << '\n';
    for (std::size_t r = 0; r < batch.count(); ++r) {
      const auto row = batch.row(r);
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_cell(row[i]);
      out << '\n';
    }
  } else {
    // Hand-assembled so cells use the same 17-digit text as CSV.
    out << "{\n  \"spec\": " << spec_to_json(batch.spec).dump() << ",\n  \"seed\": " << batch.seed
        << ",\n  \"columns\": " << batch.columns << ",\n  \"rows\": [";
    for (std::size_t r = 0; r < batch.count(); ++r) {
      out << (r ? ",\n    [" : "\n    [");
      const auto row = batch.row(r);
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? ", " : "") << format_cell(row[i]);
      out << ']';
    }
    out << (batch.count() ? "\n  ]\n}\n" : "]\n}\n");
  }
  if (!out) fail(ErrorKind::io, "write failed");
}

void write_batch(const SampleBatch& batch, const std::string& path, BatchFormat format) {
  if (path == "-") {
    write_batch(batch, std::cout, format);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::io, "cannot open '" + path + "' for writing");
  write_batch(batch, out, format);
}

SampleBatch read_batch(std::istream& in, std::optional<std::size_t> expected_n) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  std::istringstream is(text);
  return first != std::string::npos && text[first] == '{' ? read_json(is, expected_n) : read_csv(is, expected_n);
}

SampleBatch read_batch(const std::string& path, std::optional<std::size_t> expected_n) {
  if (path == "-") return read_batch(std::cin, expected_n);
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::io, "cannot open '" + path + "' for reading");
  return read_batch(in, expected_n);
}

}  // namespace lpball
