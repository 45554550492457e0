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
#include <span>
#include <string>
#include <vector>

#include "snakelp/edgemap.hpp"
#include "snakelp/image.hpp"
#include "snakelp/solver.hpp"

namespace snakelp {

// End-to-end pipeline: image -> edge maps -> point sample -> LP -> solve ->
// contour coordinates -> filled mask.  The LP's variables are pixel VALUES,
// so the solved snake is localized spatially by snapping each final snake
// value onto a distinct edge pixel; optional square tiling runs the whole
// pipeline per tile for spatial locality and merges the contours.

struct SegmentConfig {
  /// Snake point count; 0 selects min(100, edge count) per region.
  int snake_count = 0;
  /// Point-sample size cap per region (edge points plus background fill).
  int sample_budget = 1000;
  /// Binary edge threshold on the normalized gradient magnitude.
  double theta = 0.2;
  /// Square tile size; 0 runs untiled, otherwise must be >= 16.
  int tile = 0;
  std::uint64_t seed = 0;
  /// Largest |sample value - snake value| accepted when snapping snake
  /// points onto edge pixels; negative selects 0.1 * R per region.
  double tau_match = -1.0;
  /// 3x3 morphological closing passes applied before hole filling.
  int close_iters = 2;
  SolveOptions solver;

  /// Throws std::invalid_argument on out-of-range fields.
  void validate() const;
};

/// One tile's outcome: either a solver status with its objective, or
/// "skipped" (no edge pixels) / "failed" (error text in message).
struct TileSummary {
  int index = 0;
  Rect roi;
  int edge_count = 0;
  int snake_count = 0;
  int sample_count = 0;
  std::string status;
  std::string message;
  double objective = 0.0;
  int iterations = 0;
};

/// Wall-clock stage costs in milliseconds (diagnostic only; every other
/// field of a result is deterministic for fixed image, config, and seed).
struct StageTimings {
  double edge_ms = 0.0;
  double solve_ms = 0.0;
  double extract_ms = 0.0;
  double mask_ms = 0.0;
  double total_ms = 0.0;
};

struct SegmentationResult {
  std::vector<double> snake_values;
  std::vector<PixelCoord> contour;
  GrayImage mask;
  std::vector<double> objective_trace;
  std::vector<TileSummary> tiles;
  StageTimings timings;
};

/// Values of K distinct sample points chosen uniformly without replacement
/// (seed-deterministic); zero values are nudged to 1e-6 * R so the warm
/// start stays strictly positive.  Throws KTooLarge when K exceeds the
/// sample size.
std::vector<double> init_snake(const PointSample& sample, int K, std::uint64_t seed);

/// Snaps snake values onto distinct edge pixels: for each k in order, the
/// unassigned edge point with the closest value wins, ties broken by
/// lexicographic (row, col); matches farther than tau_match are dropped.
std::vector<PixelCoord> extract_contour(const PointSample& sample,
                                        std::span<const double> snake_values, double tau_match);

/// Plots the contour, applies 3x3 dilation then erosion close_iters times
/// each, and fills every pixel unreachable from the image border.  An empty
/// contour yields an all-zero mask.
GrayImage contour_to_mask(std::span<const PixelCoord> contour, int width, int height,
                          int close_iters);

/// One region's pipeline: sample -> LP -> warm start -> solve -> contour.
/// The result has no mask or tile list; run() assembles those.  Throws
/// NoEdges when the region has no edge pixel, and propagates solver errors.
SegmentationResult segment_roi(const EdgePack& pack, const Rect& roi, const SegmentConfig& cfg);

/// Full pipeline over the image.  With tiling enabled, an explicit
/// snake_count is spread across tiles in proportion to their edge share
/// (minimum 4 each), while the automatic setting sizes every tile from its
/// own edge count; failures are recorded per tile without stopping the
/// others, and contours merge in tile order.  Throws NoEdges when the whole
/// image has no edge pixel.
SegmentationResult run(const GrayImage& image, const SegmentConfig& cfg);

/// Result serialized as {config, contour[], objective_trace[], tiles[],
/// timings}; set include_timings false for byte-reproducible output.
std::string segmentation_to_json_string(const SegmentationResult& result,
                                        const SegmentConfig& cfg, bool include_timings = true);

/// Contour pixels at full brightness over the input dimmed to one quarter.
GrayImage overlay_contour(const GrayImage& image, std::span<const PixelCoord> contour);

}  // namespace snakelp
