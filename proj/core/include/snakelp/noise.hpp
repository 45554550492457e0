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

#pragma once

#include <cstdint>

#include "snakelp/image.hpp"

namespace snakelp {

// Adds zero-mean Gaussian noise of the given standard deviation to every
// pixel: out = clamp(round(p + n), 0, 255) with round half away from zero
// applied before clamping.  Noise comes from the pinned generator in
// rng.hpp (mt19937_64 + Box-Muller, pixels consumed in row-major order), so
// a fixed seed reproduces the same image on every platform.
GrayImage add_gaussian_noise(const GrayImage& img, double sigma, std::uint64_t seed);

}  // namespace snakelp
