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

#ifndef QUADSWEEP_IO_HPP_
#define QUADSWEEP_IO_HPP_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "quadsweep/stats.hpp"

namespace quadsweep {

class CsvError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Points CSV: header "x,y", one point per line. Blank lines are ignored and
// CRLF endings accepted on input. Throws CsvError with the offending line
// number.
Dataset ReadPointsCsv(std::istream& in);
Dataset ReadPointsCsvFile(const std::string& path);

// Writes the header and one "x,y" line per point, LF endings, shortest
// round-trip decimal notation.
void WritePointsCsv(std::ostream& out, const Dataset& data);
void WritePointsCsvFile(const std::string& path, const Dataset& data);

// Shortest fixed-notation text that parses back to exactly `v`.
std::string FormatDecimal(double v);

}  // namespace quadsweep

#endif  // QUADSWEEP_IO_HPP_
