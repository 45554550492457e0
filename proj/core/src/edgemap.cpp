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

#include "snakelp/edgemap.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "snakelp/rng.hpp"

namespace snakelp {

std::vector<double> PointSample::values() const {
  std::vector<double> out;
  out.reserve(points.size());
  for (const SamplePoint& p : points) {
    out.push_back(p.value);
  }
  return out;
}

std::vector<double> PointSample::edge_values() const {
  std::vector<double> out;
  out.reserve(edge_idx.size());
  for (int idx : edge_idx) {
    out.push_back(points[static_cast<std::size_t>(idx)].value);
  }
  return out;
}

void PointSample::validate() const {
  const int t = t_count();
  const int m = m_count();
  if (m < 1 || m >= t) {
    throw BudgetTooSmall("point sample must satisfy 1 <= M < T");
  }
  std::set<int> seen_idx;
  for (int idx : edge_idx) {
    if (idx < 0 || idx >= t || !seen_idx.insert(idx).second) {
      throw DimensionMismatch("edge index set must be distinct and in range");
    }
  }
  std::set<std::pair<int, int>> coords;
  for (const SamplePoint& p : points) {
    if (!coords.insert({p.row, p.col}).second) {
      throw DimensionMismatch("sample coordinates must be distinct");
    }
  }
}

FloatField gradient_magnitude(const GrayImage& img) {
  if (img.width < 3 || img.height < 3) {
    throw TooSmall("gradient needs at least a 3x3 image");
  }
  const int w = img.width;
  const int h = img.height;
  FloatField out(w, h);
  auto pixel = [&](int r, int c) {
    r = std::clamp(r, 0, h - 1);  // replicate padding
    c = std::clamp(c, 0, w - 1);
    return static_cast<double>(img.at(r, c)) / 255.0;
  };
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      const double nw = pixel(r - 1, c - 1), nn = pixel(r - 1, c), ne = pixel(r - 1, c + 1);
      const double ww = pixel(r, c - 1), ee = pixel(r, c + 1);
      const double sw = pixel(r + 1, c - 1), ss = pixel(r + 1, c), se = pixel(r + 1, c + 1);
      const double gx = (ne + 2.0 * ee + se) - (nw + 2.0 * ww + sw);
      const double gy = (sw + 2.0 * ss + se) - (nw + 2.0 * nn + ne);
      out.at(r, c) = std::sqrt(gx * gx + gy * gy);
    }
  }
  return out;
}

FloatField normalize(const FloatField& field) {
  double max = 0.0;
  for (double v : field.data) {
    max = std::max(max, v);
  }
  if (max <= 0.0) {
    throw AllZero("cannot normalize a field with no positive values");
  }
  FloatField out(field.width, field.height);
  for (std::size_t i = 0; i < field.data.size(); ++i) {
    out.data[i] = field.data[i] / max;
  }
  return out;
}

GrayImage binary_edges(const FloatField& field, double theta) {
  GrayImage mask(field.width, field.height, 0);
  int count = 0;
  for (std::size_t i = 0; i < field.data.size(); ++i) {
    if (field.data[i] >= theta) {
      mask.data[i] = 255;
      ++count;
    }
  }
  if (count == 0) {
    throw NoEdges("no pixel reaches the edge threshold");
  }
  return mask;
}

EdgePack build_edge_pack(const GrayImage& img, double theta) {
  FloatField continuous = normalize(gradient_magnitude(img));
  GrayImage binary = binary_edges(continuous, theta);
  int count = 0;
  for (std::uint8_t v : binary.data) {
    count += v != 0;
  }
  return EdgePack{std::move(continuous), std::move(binary), count};
}

PointSample sample_points(const EdgePack& pack, int budget, std::optional<Rect> roi,
                          std::uint64_t seed) {
  const Rect region = roi.value_or(Rect::full(pack.binary));
  if (!region.inside(pack.binary.width, pack.binary.height)) {
    throw EmptyRoi("roi is empty or extends outside the image");
  }

  PointSample sample;
  std::vector<PixelCoord> background;
  for (int r = region.row; r < region.row + region.height; ++r) {
    for (int c = region.col; c < region.col + region.width; ++c) {
      if (pack.binary.at(r, c) != 0) {
        sample.edge_idx.push_back(static_cast<int>(sample.points.size()));
        sample.points.push_back({r, c, pack.continuous.at(r, c)});
      } else {
        background.push_back({r, c});
      }
    }
  }
  const int m = sample.m_count();
  if (m == 0) {
    throw NoEdges("roi contains no binary-edge pixels");
  }
  const long long roi_pixels = region.pixel_count();
  const long long target = std::min<long long>(budget, roi_pixels);
  if (target <= m) {
    throw BudgetTooSmall("sample budget must exceed the roi edge-pixel count");
  }

  // Partial Fisher-Yates over the row-major background list.
  Rng rng(seed);
  const std::size_t need = static_cast<std::size_t>(target) - static_cast<std::size_t>(m);
  for (std::size_t i = 0; i < need; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.bounded(background.size() - i));
    std::swap(background[i], background[j]);
    sample.points.push_back(
        {background[i].row, background[i].col, pack.continuous.at(background[i].row, background[i].col)});
  }
  sample.validate();
  return sample;
}

}  // namespace snakelp
