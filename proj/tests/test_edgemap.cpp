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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "snakelp/edgemap.hpp"
#include "snakelp/errors.hpp"
#include "snakelp/shapes.hpp"

using namespace snakelp;

namespace {

/// Left half 0, right half 255, step between columns step-1 and step.
GrayImage step_image(int width, int height, int step) {
  GrayImage img(width, height, 0);
  for (int r = 0; r < height; ++r)
    for (int c = step; c < width; ++c) img.at(r, c) = 255;
  return img;
}

}  // namespace

TEST_SUITE("edgemap") {

TEST_CASE("a vertical step lights the two adjacent columns at equal maximal strength") {
  GrayImage img = step_image(8, 8, 4);
  FloatField grad = gradient_magnitude(img);
  const double peak = *std::max_element(grad.data.begin(), grad.data.end());
  REQUIRE(peak > 0.0);
  for (int r = 0; r < 8; ++r) {
    CHECK(grad.at(r, 3) == doctest::Approx(peak));
    CHECK(grad.at(r, 4) == doctest::Approx(peak));
    CHECK(grad.at(r, 1) == doctest::Approx(0.0));
    CHECK(grad.at(r, 6) == doctest::Approx(0.0));
  }
  // Replicate padding: the top and bottom rows behave like interior rows.
  CHECK(grad.at(0, 3) == doctest::Approx(grad.at(4, 3)));
  CHECK(grad.at(7, 4) == doctest::Approx(grad.at(4, 4)));
}

TEST_CASE("gradient rejects images smaller than the kernel") {
  CHECK_THROWS_AS(gradient_magnitude(GrayImage(2, 8)), TooSmall);
  CHECK_THROWS_AS(gradient_magnitude(GrayImage(8, 2)), TooSmall);
}

TEST_CASE("normalize scales the maximum to exactly one and rejects zero fields") {
  FloatField f(3, 1, std::vector<double>{0.5, 2.0, 1.0});
  FloatField n = normalize(f);
  CHECK(*std::max_element(n.data.begin(), n.data.end()) == 1.0);
  CHECK(n.at(0, 0) == doctest::Approx(0.25));
  CHECK_THROWS_AS(normalize(FloatField(4, 4, 0.0)), AllZero);
}

TEST_CASE("binary threshold keeps exactly the pixels at or above theta") {
  FloatField f(4, 1, std::vector<double>{0.1, 0.2, 0.5, 0.19});
  GrayImage bin = binary_edges(f, 0.2);
  CHECK(bin.at(0, 0) == 0);
  CHECK(bin.at(0, 1) == 255);
  CHECK(bin.at(0, 2) == 255);
  CHECK(bin.at(0, 3) == 0);
  CHECK_THROWS_AS(binary_edges(FloatField(4, 1, 0.05), 0.2), NoEdges);
}

TEST_CASE("edge pack wires gradient, normalization, and threshold together") {
  GrayImage img = step_image(16, 16, 8);
  EdgePack pack = build_edge_pack(img, 0.2);
  int on = 0;
  for (std::uint8_t v : pack.binary.data) on += (v == 255);
  CHECK(pack.edge_count == on);
  CHECK(pack.edge_count == 2 * 16);  // two columns of the step band
  CHECK(*std::max_element(pack.continuous.data.begin(), pack.continuous.data.end()) ==
        doctest::Approx(1.0));
  CHECK_THROWS_AS(build_edge_pack(GrayImage(16, 16, 77), 0.2), AllZero);
}

TEST_CASE("sampling keeps every edge pixel and fills to the budget deterministically") {
  GrayImage img = generate_shape(ShapeKind::rectangle, 64, 64);
  EdgePack pack = build_edge_pack(img, 0.2);
  REQUIRE(pack.edge_count > 0);

  PointSample sample = sample_points(pack, pack.edge_count + 50, std::nullopt, 5);
  sample.validate();
  CHECK(sample.t_count() == pack.edge_count + 50);
  CHECK(sample.m_count() == pack.edge_count);

  // Every binary-edge pixel appears among the edge-indexed points.
  std::set<std::pair<int, int>> edge_coords;
  for (int idx : sample.edge_idx) {
    const SamplePoint& pt = sample.points[static_cast<std::size_t>(idx)];
    CHECK(pack.binary.at(pt.row, pt.col) == 255);
    CHECK(pt.value == doctest::Approx(pack.continuous.at(pt.row, pt.col)));
    edge_coords.insert({pt.row, pt.col});
  }
  CHECK(static_cast<int>(edge_coords.size()) == pack.edge_count);

  PointSample again = sample_points(pack, pack.edge_count + 50, std::nullopt, 5);
  CHECK(again.points.size() == sample.points.size());
  for (std::size_t i = 0; i < sample.points.size(); ++i) {
    CHECK(again.points[i].row == sample.points[i].row);
    CHECK(again.points[i].col == sample.points[i].col);
  }

  PointSample other_seed = sample_points(pack, pack.edge_count + 50, std::nullopt, 6);
  bool identical = true;
  for (std::size_t i = 0; i < sample.points.size(); ++i)
    identical = identical && other_seed.points[i].row == sample.points[i].row &&
                other_seed.points[i].col == sample.points[i].col;
  CHECK_FALSE(identical);
}

TEST_CASE("sampling honors the roi and its failure preconditions") {
  GrayImage img = generate_shape(ShapeKind::rectangle, 64, 64);
  EdgePack pack = build_edge_pack(img, 0.2);

  Rect roi{10, 10, 20, 20};
  PointSample sample = sample_points(pack, 380, roi, 1);
  for (const SamplePoint& pt : sample.points) CHECK(roi.contains(pt.row, pt.col));

  CHECK_THROWS_AS(sample_points(pack, pack.edge_count, std::nullopt, 1), BudgetTooSmall);
  Rect empty_roi{0, 0, 0, 0};
  CHECK_THROWS_AS(sample_points(pack, 100, empty_roi, 1), EmptyRoi);
  Rect center{30, 30, 3, 3};  // interior of the rectangle: no edge pixels
  CHECK_THROWS_AS(sample_points(pack, 100, center, 1), NoEdges);
}

TEST_CASE("a budget larger than the roi saturates at the pixel count") {
  GrayImage img = generate_shape(ShapeKind::rectangle, 64, 64);
  EdgePack pack = build_edge_pack(img, 0.2);
  Rect roi{14, 14, 8, 8};  // 64 pixels crossing the top-left corner
  int edges = 0;
  for (int r = 14; r < 22; ++r)
    for (int c = 14; c < 22; ++c) edges += (pack.binary.at(r, c) == 255);
  if (edges > 0 && edges < 64) {
    PointSample sample = sample_points(pack, 10000, roi, 2);
    CHECK(sample.t_count() == 64);
    CHECK(sample.m_count() == edges);
  }
}

}  // TEST_SUITE
