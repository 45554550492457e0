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

#include <string>

#include "snakelp/image.hpp"

namespace snakelp {

// Binary PGM (magic "P5", maxval 255).  Writer emits exactly
// "P5\n<w> <h>\n255\n" followed by the raw row-major payload, so
// save -> load -> save reproduces a saved file byte for byte.
GrayImage load_pgm(const std::string& path);
void save_pgm(const GrayImage& img, const std::string& path);

// Grayscale PFM (magic "Pf").  Writer emits "Pf\n<w> <h>\n-1.0\n" and the
// payload as little-endian float32 rows in bottom-to-top order per the PFM
// convention.  The reader accepts positive (big-endian) scales as well; the
// scale magnitude is not applied to the values.
FloatField load_pfm(const std::string& path);
void save_pfm(const FloatField& field, const std::string& path);

// In-memory variants; the file operations are thin wrappers over these.
GrayImage decode_pgm(const std::string& bytes);
std::string encode_pgm(const GrayImage& img);
FloatField decode_pfm(const std::string& bytes);
std::string encode_pfm(const FloatField& field);

}  // namespace snakelp
