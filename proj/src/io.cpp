// Copyright 2026 The QuadSweep Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "quadsweep/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

namespace quadsweep {

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double ParseField(std::string_view field, std::size_t line_no) {
  field = Trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), v);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
    throw CsvError("line " + std::to_string(line_no) + ": cannot parse '" +
                   std::string(field) + "' as a number");
  }
  return v;
}

}  // namespace

Dataset ReadPointsCsv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::vector<double> xs, ys;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = Trim(line);
    if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
    if (view.empty()) continue;
    if (!header_seen) {
      header_seen = true;
      std::string compact;
      for (char c : view) {
        if (c != ' ' && c != '\t') compact += c;
      }
      if (compact != "x,y") {
        throw CsvError("line " + std::to_string(line_no) +
                       ": expected header 'x,y'");
      }
      continue;
    }
    const std::size_t comma = view.find(',');
    if (comma == std::string_view::npos ||
        view.find(',', comma + 1) != std::string_view::npos) {
      throw CsvError("line " + std::to_string(line_no) +
                     ": expected exactly two comma-separated fields");
    }
    xs.push_back(ParseField(view.substr(0, comma), line_no));
    ys.push_back(ParseField(view.substr(comma + 1), line_no));
  }
  if (!header_seen) throw CsvError("empty input: expected header 'x,y'");
  if (xs.empty()) throw CsvError("no data rows");
  try {
    return Dataset(std::move(xs), std::move(ys));
  } catch (const std::invalid_argument& e) {
    throw CsvError(e.what());
  }
}

Dataset ReadPointsCsvFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CsvError("cannot open '" + path + "'");
  return ReadPointsCsv(in);
}

std::string FormatDecimal(double v) {
  char buf[512];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed);
  if (ec != std::errc()) {
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
  }
  return std::string(buf, ptr);
}

void WritePointsCsv(std::ostream& out, const Dataset& data) {
  out << "x,y\n";
  for (std::size_t i = 0; i < data.size(); ++i) {
    out << FormatDecimal(data.x(i)) << ',' << FormatDecimal(data.y(i)) << '\n';
  }
}

void WritePointsCsvFile(const std::string& path, const Dataset& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CsvError("cannot write '" + path + "'");
  WritePointsCsv(out, data);
  if (!out) throw CsvError("write failed for '" + path + "'");
}

}  // namespace quadsweep
