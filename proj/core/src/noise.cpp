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

#include "snakelp/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "snakelp/rng.hpp"

namespace snakelp {

GrayImage add_gaussian_noise(const GrayImage& img, double sigma, std::uint64_t seed) {
  if (sigma < 0.0 || !std::isfinite(sigma)) {
    throw std::invalid_argument("noise sigma must be finite and non-negative");
  }
  GrayImage out(img.width, img.height);
  Rng rng(seed);
  for (std::size_t i = 0; i < img.data.size(); ++i) {
    const double sum = static_cast<double>(img.data[i]) + sigma * rng.normal();
    long v = std::lround(sum);
    if (v < 0) {
      v = 0;
    } else if (v > 255) {
      v = 255;
    }
    out.data[i] = static_cast<std::uint8_t>(v);
  }
  return out;
}

}  // namespace snakelp
