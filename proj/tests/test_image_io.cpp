// Copyright 2026 The snakelp Authors
//
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

#include <cstring>
#include <string>

#include "doctest.h"
#include "snakelp/errors.hpp"
#include "snakelp/image.hpp"
#include "snakelp/image_io.hpp"
#include "test_util.hpp"

using namespace snakelp;

TEST_SUITE("image_io") {

TEST_CASE("image construction validates dimensions and buffer length") {
  CHECK_THROWS_AS(GrayImage(0, 5), DimensionMismatch);
  CHECK_THROWS_AS(GrayImage(5, -1), DimensionMismatch);
  CHECK_THROWS_AS(GrayImage(2, 2, std::vector<std::uint8_t>{1, 2, 3}), DimensionMismatch);
  CHECK_THROWS_AS(FloatField(0, 1), DimensionMismatch);
  CHECK_THROWS_AS(FloatField(2, 2, std::vector<double>{1.0}), DimensionMismatch);

  GrayImage img(3, 2, 7);
  CHECK(img.pixel_count() == 6);
  CHECK(img.at(1, 2) == 7);
}

TEST_CASE("pgm encoding produces the exact documented byte layout") {
  GrayImage img(2, 1, std::vector<std::uint8_t>{7, 200});
  const std::string bytes = encode_pgm(img);
  REQUIRE(bytes.size() == 12);
  CHECK(bytes.substr(0, 10) == "P5\n2 1\n255\n");
  CHECK(static_cast<unsigned char>(bytes[10]) == 7);
  CHECK(static_cast<unsigned char>(bytes[11]) == 200);
}

TEST_CASE("pgm survives encode/decode and file round trips byte for byte") {
  GrayImage img(5, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 5; ++c) img.at(r, c) = static_cast<std::uint8_t>(37 * r + 11 * c);

  CHECK(decode_pgm(encode_pgm(img)) == img);

  testutil::TempDir dir("pgm");
  const auto p1 = dir / "a.pgm";
  const auto p2 = dir / "b.pgm";
  save_pgm(img, p1.string());
  GrayImage loaded = load_pgm(p1.string());
  CHECK(loaded == img);
  save_pgm(loaded, p2.string());
  CHECK(testutil::read_file(p1) == testutil::read_file(p2));
}

TEST_CASE("pgm decoding rejects malformed input") {
  CHECK_THROWS_AS(decode_pgm("P6\n1 1\n255\nx"), BadMagic);
  CHECK_THROWS_AS(decode_pgm("P5\n1 1\n65535\nx"), BadHeader);
  CHECK_THROWS_AS(decode_pgm("P5\n2 2\n255\nab"), Truncated);
  CHECK_THROWS_AS(decode_pgm(""), Error);
  CHECK_THROWS_AS(load_pgm("/nonexistent/path/file.pgm"), IoFailure);
}

TEST_CASE("pfm stores little-endian float rows bottom to top") {
  FloatField field(2, 2, std::vector<double>{0.25, 1.5, -3.0, 8.0});
  const std::string bytes = encode_pfm(field);
  const std::string header = "Pf\n2 2\n-1.0\n";
  REQUIRE(bytes.size() == header.size() + 16);
  CHECK(bytes.substr(0, header.size()) == header);

  // The first stored scanline is the bottom image row (row index 1).
  float v = 0.0f;
  std::memcpy(&v, bytes.data() + header.size(), sizeof(float));
  CHECK(v == doctest::Approx(-3.0));
  std::memcpy(&v, bytes.data() + header.size() + 8, sizeof(float));
  CHECK(v == doctest::Approx(0.25));
}

TEST_CASE("pfm survives encode/decode and file round trips") {
  FloatField field(3, 2, std::vector<double>{0.0, 0.5, 1.0, 0.125, 0.75, 0.0625});
  CHECK(decode_pfm(encode_pfm(field)) == field);

  testutil::TempDir dir("pfm");
  const auto p = dir / "f.pfm";
  save_pfm(field, p.string());
  CHECK(load_pfm(p.string()) == field);
}

TEST_CASE("pfm decoding rejects malformed input") {
  CHECK_THROWS_AS(decode_pfm("PF\n1 1\n-1.0\nxxxx"), BadMagic);
  CHECK_THROWS_AS(decode_pfm("Pf\n2 2\n-1.0\nxxxx"), Truncated);
  CHECK_THROWS_AS(load_pfm("/nonexistent/path/file.pfm"), IoFailure);
}

}  // TEST_SUITE
