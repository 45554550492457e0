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
#include <optional>
#include <vector>

#include "snakelp/image.hpp"

namespace snakelp {

/// Continuous edge map (normalized gradient magnitude), its thresholded
/// binary mask, and the number of mask-on pixels.
struct EdgePack {
  FloatField continuous;
  GrayImage binary;
  int edge_count = 0;
};

/// One sampled pixel: coordinates plus its continuous edge-map value.
struct SamplePoint {
  int row = 0;
  int col = 0;
  double value = 0.0;
};

/// The point set the model operates on: T points total, of which the
/// M indices in edge_idx are pre-identified edge points (M < T).
struct PointSample {
  std::vector<SamplePoint> points;
  std::vector<int> edge_idx;

  int t_count() const { return static_cast<int>(points.size()); }
  int m_count() const { return static_cast<int>(edge_idx.size()); }

  std::vector<double> values() const;
  std::vector<double> edge_values() const;

  /// Checks 1 <= M < T, index validity/distinctness, coordinate distinctness.
  void validate() const;
};

// Sobel gradient magnitude on intensities scaled to [0,1], 3x3 kernels,
// edge-replicated padding.  Throws TooSmall below 3x3.
FloatField gradient_magnitude(const GrayImage& img);

// Divides by the global maximum; result has max exactly 1.
// Throws AllZero on a constant-zero field.
FloatField normalize(const FloatField& field);

// pixel = 255 iff field value >= theta.  Throws NoEdges when nothing passes.
GrayImage binary_edges(const FloatField& field, double theta);

// gradient -> normalize -> threshold in one step.
EdgePack build_edge_pack(const GrayImage& img, double theta);

// Takes every binary-edge pixel inside the roi (they become edge_idx) and
// fills with a seed-deterministic uniform sample of non-edge pixels until
// T = budget, or until the roi is exhausted.  Values come from the
// continuous map.  Throws BudgetTooSmall when the effective budget cannot
// exceed the edge count (M < T must hold), EmptyRoi for an invalid roi,
// NoEdges when the roi has no edge pixels.
PointSample sample_points(const EdgePack& pack, int budget, std::optional<Rect> roi,
                          std::uint64_t seed);

}  // namespace snakelp
