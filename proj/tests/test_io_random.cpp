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

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "quadsweep/io.hpp"
#include "quadsweep/random.hpp"

using namespace quadsweep;

TEST_CASE("seed parsing") {
  CHECK(Seed128::Parse("123") == Seed128::FromU64(123));
  CHECK(Seed128::Parse("0x7b") == Seed128::FromU64(123));
  CHECK(Seed128::Parse("0X7B") == Seed128::FromU64(123));
  const Seed128 big = Seed128::Parse("0x0123456789abcdef0011223344556677");
  CHECK(big.hi == 0x0123456789abcdefull);
  CHECK(big.lo == 0x0011223344556677ull);
  CHECK(big.ToHex() == "0x0123456789abcdef0011223344556677");
  CHECK(Seed128::Parse(big.ToHex()) == big);
  // 2^64 in decimal
  CHECK(Seed128::Parse("18446744073709551616") == Seed128{1, 0});
  CHECK_THROWS_AS(Seed128::Parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Seed128::Parse("12a"), std::invalid_argument);
  CHECK_THROWS_AS(Seed128::Parse("0x0123456789abcdef00112233445566778"),
                  std::invalid_argument);
  CHECK_THROWS_AS(Seed128::Parse("340282366920938463463374607431768211456"),
                  std::invalid_argument);
}

TEST_CASE("rng streams") {
  Rng a(Seed128::FromU64(5)), b(Seed128::FromU64(5)), c(Seed128::FromU64(6));
  for (int i = 0; i < 10; ++i) {
    const auto va = a.NextU64();
    CHECK(va == b.NextU64());
    CHECK(va != c.NextU64());
  }
  Rng r(Seed128::FromU64(1));
  for (int i = 0; i < 1000; ++i) {
    const double u = r.Uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(r.UniformIndex(7) < 7);
  }
  CHECK_THROWS_AS(r.UniformIndex(0), std::invalid_argument);

  const Seed128 p = Seed128::FromU64(123);
  CHECK_FALSE(DeriveSeed(p, 1) == DeriveSeed(p, 2));
  CHECK(DeriveSeed(p, 1) == DeriveSeed(p, 1));
}

TEST_CASE("trial seeds do not depend on the trial count") {
  const auto few = TrialSeeds(Seed128::FromU64(123), 3);
  const auto many = TrialSeeds(Seed128::FromU64(123), 50);
  REQUIRE(few.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(few[i] == many[i]);
  CHECK_FALSE(many[0] == many[1]);
}

TEST_CASE("generated datasets") {
  const Seed128 s = Seed128::FromU64(42);
  const Dataset a = GenerateDataset(s, 30), b = GenerateDataset(s, 30);
  CHECK(a.xs() == b.xs());
  CHECK(a.ys() == b.ys());
  const Dataset c = GenerateDataset(Seed128::FromU64(43), 30);
  CHECK(a.xs() != c.xs());

  const Dataset big = GenerateDataset(Seed128::Parse("0xdeadbeef"), 10000);
  double mean = 0;
  for (double x : big.xs()) {
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
    mean += x;
  }
  mean /= 10000;
  CHECK(mean >= 0.48);
  CHECK(mean <= 0.52);
  CHECK_THROWS_AS(GenerateDataset(s, 0), std::invalid_argument);
}

TEST_CASE("csv round trip is exact") {
  const Dataset d = GenerateDataset(Seed128::FromU64(7), 25);
  std::stringstream buf;
  WritePointsCsv(buf, d);
  const std::string text = buf.str();
  CHECK(text.rfind("x,y\n", 0) == 0);
  CHECK(text.find('\r') == std::string::npos);
  std::istringstream in(text);
  const Dataset back = ReadPointsCsv(in);
  CHECK(back.xs() == d.xs());
  CHECK(back.ys() == d.ys());
}

TEST_CASE("csv reader accepts BOM, CRLF and blank lines") {
  std::istringstream in("\xEF\xBB\xBFx,y\r\n1.5,2\r\n\r\n-3e-2,4\r\n");
  const Dataset d = ReadPointsCsv(in);
  REQUIRE(d.size() == 2);
  CHECK(d.x(0) == 1.5);
  CHECK(d.x(1) == -0.03);
  CHECK(d.y(1) == 4.0);
}

TEST_CASE("csv reader rejects malformed input") {
  const char* bad[] = {
      "",                     // no header
      "a,b\n1,2\n",           // wrong header
      "x,y\n",                // no rows
      "x,y\n1,2,3\n",         // three fields
      "x,y\n1\n",             // one field
      "x,y\n1,abc\n",         // not a number
      "x,y\n1,nan\n",         // non-finite
      "x,y\n1x,2\n",          // trailing garbage
  };
  for (const char* text : bad) {
    std::istringstream in(text);
    CHECK_THROWS_AS(ReadPointsCsv(in), CsvError);
  }
  CHECK_THROWS_AS(ReadPointsCsvFile("/nonexistent/points.csv"), CsvError);
}

TEST_CASE("decimal formatting round-trips") {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 123456789.125, -2.5, 0.0}) {
    const std::string s = FormatDecimal(v);
    CHECK(s.find('e') == std::string::npos);
    CHECK(std::stod(s) == v);
  }
  CHECK(FormatDecimal(0.5) == "0.5");
}
