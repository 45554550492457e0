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

#include <cmath>
#include <cstdlib>

#include "doctest.h"
#include "snakelp/noise.hpp"

using namespace snakelp;

TEST_SUITE("noise") {

TEST_CASE("sigma zero returns the input unchanged") {
  GrayImage img(16, 16, 90);
  CHECK(add_gaussian_noise(img, 0.0, 42) == img);
}

TEST_CASE("fixed seed reproduces the same image; different seeds differ") {
  GrayImage img(32, 32, 128);
  GrayImage a = add_gaussian_noise(img, 25.0, 7);
  GrayImage b = add_gaussian_noise(img, 25.0, 7);
  GrayImage c = add_gaussian_noise(img, 25.0, 8);
  CHECK(a == b);
  CHECK(a != c);
}

TEST_CASE("noise magnitude tracks sigma on a mid-gray image") {
  GrayImage img(64, 64, 128);
  GrayImage noisy = add_gaussian_noise(img, 25.0, 3);
  double total_abs = 0.0;
  for (std::size_t i = 0; i < img.pixel_count(); ++i)
    total_abs += std::abs(static_cast<double>(noisy.data[i]) - 128.0);
  const double mean_abs = total_abs / static_cast<double>(img.pixel_count());
  // |N(0, sigma)| has mean sigma*sqrt(2/pi) ~ 19.9; allow generous slack.
  CHECK(mean_abs > 14.0);
  CHECK(mean_abs < 26.0);
}

TEST_CASE("negative excursions clamp at zero on a black image") {
  GrayImage img(64, 64, 0);
  GrayImage noisy = add_gaussian_noise(img, 40.0, 11);
  int zeros = 0, positives = 0;
  for (std::uint8_t v : noisy.data) (v == 0 ? zeros : positives)++;
  // About half the draws are negative and clamp; the rest stay positive.
  CHECK(zeros > 1000);
  CHECK(positives > 1000);
}

TEST_CASE("bright excursions clamp at 255 on a white image") {
  GrayImage img(64, 64, 255);
  GrayImage noisy = add_gaussian_noise(img, 40.0, 11);
  int saturated = 0;
  for (std::uint8_t v : noisy.data) saturated += (v == 255);
  CHECK(saturated > 1000);
}

}  // TEST_SUITE
