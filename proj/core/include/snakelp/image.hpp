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
#include <vector>

#include "snakelp/errors.hpp"

namespace snakelp {

/// 8-bit grayscale raster, row-major.  Also used for binary masks (0/255).
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  GrayImage() = default;

  GrayImage(int w, int h, std::uint8_t fill = 0)
      : width(w), height(h), data(check_dims(w, h), fill) {}

  GrayImage(int w, int h, std::vector<std::uint8_t> pixels)
      : width(w), height(h), data(std::move(pixels)) {
    if (data.size() != check_dims(w, h)) {
      throw DimensionMismatch("pixel buffer length does not match width*height");
    }
  }

  std::uint8_t& at(int row, int col) { return data[static_cast<std::size_t>(row) * width + col]; }
  std::uint8_t at(int row, int col) const {
    return data[static_cast<std::size_t>(row) * width + col];
  }

  std::size_t pixel_count() const { return data.size(); }

  bool same_dims(const GrayImage& other) const {
    return width == other.width && height == other.height;
  }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  static std::size_t check_dims(int w, int h) {
    if (w <= 0 || h <= 0) {
      throw DimensionMismatch("image dimensions must be positive");
    }
    return static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
  }
};

/// Per-pixel real values, row-major.  Normalized fields live in [0, 1].
struct FloatField {
  int width = 0;
  int height = 0;
  std::vector<double> data;

  FloatField() = default;

  FloatField(int w, int h, double fill = 0.0)
      : width(w), height(h), data(check_dims(w, h), fill) {}

  FloatField(int w, int h, std::vector<double> values)
      : width(w), height(h), data(std::move(values)) {
    if (data.size() != check_dims(w, h)) {
      throw DimensionMismatch("value buffer length does not match width*height");
    }
  }

  double& at(int row, int col) { return data[static_cast<std::size_t>(row) * width + col]; }
  double at(int row, int col) const {
    return data[static_cast<std::size_t>(row) * width + col];
  }

  std::size_t pixel_count() const { return data.size(); }

  friend bool operator==(const FloatField&, const FloatField&) = default;

 private:
  static std::size_t check_dims(int w, int h) {
    if (w <= 0 || h <= 0) {
      throw DimensionMismatch("field dimensions must be positive");
    }
    return static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
  }
};

/// Integer pixel coordinate (row, col).
struct PixelCoord {
  int row = 0;
  int col = 0;

  friend bool operator==(const PixelCoord&, const PixelCoord&) = default;
  friend auto operator<=>(const PixelCoord&, const PixelCoord&) = default;
};

/// Axis-aligned pixel rectangle: rows [row, row+height), cols [col, col+width).
struct Rect {
  int row = 0;
  int col = 0;
  int height = 0;
  int width = 0;

  bool contains(int r, int c) const {
    return r >= row && r < row + height && c >= col && c < col + width;
  }

  long long pixel_count() const {
    return static_cast<long long>(height) * static_cast<long long>(width);
  }

  bool inside(int image_width, int image_height) const {
    return row >= 0 && col >= 0 && height > 0 && width > 0 &&
           row + height <= image_height && col + width <= image_width;
  }

  static Rect full(const GrayImage& img) { return Rect{0, 0, img.height, img.width}; }

  friend bool operator==(const Rect&, const Rect&) = default;
};

}  // namespace snakelp
