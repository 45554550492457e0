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

#include "snakelp/segment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include "json.hpp"
#include <stdexcept>
#include <utility>

#include "snakelp/errors.hpp"
#include "snakelp/log.hpp"
#include "snakelp/lp_model.hpp"
#include "snakelp/rng.hpp"

namespace snakelp {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// Stage- and tile-distinct stream from the user seed (splitmix64 step).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + salt * 0x9e3779b97f4a7c15ULL + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kSampleSalt = 1;
constexpr std::uint64_t kSnakeSalt = 2;

int count_edges(const EdgePack& pack, const Rect& roi) {
  int count = 0;
  for (int r = roi.row; r < roi.row + roi.height; ++r) {
    for (int c = roi.col; c < roi.col + roi.width; ++c) {
      if (pack.binary.at(r, c) != 0) ++count;
    }
  }
  return count;
}

struct RoiOutcome {
  SegmentationResult partial;
  SolveStatus status = SolveStatus::running;
  double objective = 0.0;
  int snake_count = 0;
  int sample_count = 0;
};

RoiOutcome roi_pipeline(const EdgePack& pack, const Rect& roi, const SegmentConfig& cfg) {
  RoiOutcome out;
  const Clock::time_point solve_start = Clock::now();

  PointSample sample =
      sample_points(pack, cfg.sample_budget, roi, mix_seed(cfg.seed, kSampleSalt));
  out.sample_count = sample.t_count();

  int K = cfg.snake_count;
  if (K == 0) K = std::min(100, sample.m_count());
  K = std::min(K, sample.t_count());
  out.snake_count = K;

  const double R = compute_R(sample);
  const std::vector<double> snake0 = init_snake(sample, K, mix_seed(cfg.seed, kSnakeSalt));
  const LPStandardForm lp = build_lp(sample, K);
  const std::vector<double> x0 = initial_point(lp, sample, snake0, R);
  const SolveOutcome solved = solve(lp, x0, cfg.solver);
  out.partial.timings.solve_ms = ms_since(solve_start);

  out.status = solved.status;
  out.objective = solved.objective;

  const VarColumns& cols = *lp.columns;
  out.partial.snake_values.resize(static_cast<size_t>(K));
  for (int k = 0; k < K; ++k) {
    out.partial.snake_values[static_cast<size_t>(k)] =
        solved.x_final[static_cast<size_t>(cols.col_p(k))];
  }
  out.partial.objective_trace.reserve(solved.trace.size());
  for (const IterationRecord& rec : solved.trace) {
    out.partial.objective_trace.push_back(rec.objective);
  }

  const Clock::time_point extract_start = Clock::now();
  const double tau = cfg.tau_match < 0.0 ? 0.1 * R : cfg.tau_match;
  out.partial.contour = extract_contour(sample, out.partial.snake_values, tau);
  out.partial.timings.extract_ms = ms_since(extract_start);
  return out;
}

void dilate3x3(const GrayImage& src, GrayImage& dst) {
  for (int r = 0; r < src.height; ++r) {
    for (int c = 0; c < src.width; ++c) {
      std::uint8_t v = 0;
      for (int dr = -1; dr <= 1 && v == 0; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
          const int rr = r + dr;
          const int cc = c + dc;
          if (rr >= 0 && rr < src.height && cc >= 0 && cc < src.width && src.at(rr, cc) != 0) {
            v = 255;
            break;
          }
        }
      }
      dst.at(r, c) = v;
    }
  }
}

void erode3x3(const GrayImage& src, GrayImage& dst) {
  for (int r = 0; r < src.height; ++r) {
    for (int c = 0; c < src.width; ++c) {
      std::uint8_t v = 255;
      for (int dr = -1; dr <= 1 && v != 0; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
          const int rr = r + dr;
          const int cc = c + dc;
          if (rr < 0 || rr >= src.height || cc < 0 || cc >= src.width || src.at(rr, cc) == 0) {
            v = 0;
            break;
          }
        }
      }
      dst.at(r, c) = v;
    }
  }
}

}  // namespace

void SegmentConfig::validate() const {
  if (snake_count < 0) throw std::invalid_argument("snake count must be >= 0 (0 = automatic)");
  if (sample_budget < 2) throw std::invalid_argument("sample budget must be >= 2");
  if (snake_count != 0 && sample_budget <= snake_count) {
    throw std::invalid_argument("sample budget must exceed the snake count");
  }
  if (!(theta > 0.0) || !(theta <= 1.0)) {
    throw std::invalid_argument("theta must lie in (0, 1]");
  }
  if (tile != 0 && tile < 16) throw std::invalid_argument("tile size must be 0 (off) or >= 16");
  if (close_iters < 0) throw std::invalid_argument("close_iters must be >= 0");
  if (tau_match >= 0.0 && !std::isfinite(tau_match)) {
    throw std::invalid_argument("tau_match must be finite");
  }
  solver.validate();
}

std::vector<double> init_snake(const PointSample& sample, int K, std::uint64_t seed) {
  sample.validate();
  const int T = sample.t_count();
  if (K < 1 || K > T) {
    throw KTooLarge("snake count " + std::to_string(K) + " must lie in [1, " + std::to_string(T) +
                    "]");
  }
  const double R = compute_R(sample);

  std::vector<int> order(static_cast<size_t>(T));
  for (int i = 0; i < T; ++i) order[static_cast<size_t>(i)] = i;
  Rng rng(seed);
  for (int i = 0; i < K; ++i) {
    const int j = i + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(T - i)));
    std::swap(order[static_cast<size_t>(i)], order[static_cast<size_t>(j)]);
  }

  std::vector<double> values(static_cast<size_t>(K));
  for (int i = 0; i < K; ++i) {
    double v = sample.points[static_cast<size_t>(order[static_cast<size_t>(i)])].value;
    if (v <= 0.0) v = 1e-6 * R;
    values[static_cast<size_t>(i)] = v;
  }
  return values;
}

std::vector<PixelCoord> extract_contour(const PointSample& sample,
                                        std::span<const double> snake_values, double tau_match) {
  sample.validate();
  if (!(tau_match >= 0.0)) throw std::invalid_argument("tau_match must be >= 0");

  std::vector<char> taken(sample.edge_idx.size(), 0);
  std::vector<PixelCoord> contour;
  contour.reserve(snake_values.size());
  for (double pk : snake_values) {
    int best = -1;
    double best_dist = 0.0;
    PixelCoord best_coord{};
    for (size_t e = 0; e < sample.edge_idx.size(); ++e) {
      if (taken[e]) continue;
      const SamplePoint& pt = sample.points[static_cast<size_t>(sample.edge_idx[e])];
      const double dist = std::abs(pt.value - pk);
      const PixelCoord coord{pt.row, pt.col};
      if (best < 0 || dist < best_dist || (dist == best_dist && coord < best_coord)) {
        best = static_cast<int>(e);
        best_dist = dist;
        best_coord = coord;
      }
    }
    if (best < 0) break;
    if (best_dist > tau_match) continue;
    taken[static_cast<size_t>(best)] = 1;
    contour.push_back(best_coord);
  }
  return contour;
}

GrayImage contour_to_mask(std::span<const PixelCoord> contour, int width, int height,
                          int close_iters) {
  GrayImage mask(width, height, 0);
  if (contour.empty()) return mask;
  for (const PixelCoord& p : contour) {
    if (p.row < 0 || p.row >= height || p.col < 0 || p.col >= width) {
      throw DimensionMismatch("contour pixel (" + std::to_string(p.row) + ", " +
                              std::to_string(p.col) + ") outside " + std::to_string(width) + "x" +
                              std::to_string(height));
    }
    mask.at(p.row, p.col) = 255;
  }

  GrayImage scratch(width, height, 0);
  for (int i = 0; i < close_iters; ++i) {
    dilate3x3(mask, scratch);
    std::swap(mask, scratch);
  }
  for (int i = 0; i < close_iters; ++i) {
    erode3x3(mask, scratch);
    std::swap(mask, scratch);
  }

  // 4-connected background fill from the border; everything it cannot reach
  // (the closed ring and its interior) is the segmented region.
  std::vector<char> outside(mask.pixel_count(), 0);
  std::vector<PixelCoord> stack;
  auto push = [&](int r, int c) {
    const size_t idx = static_cast<size_t>(r) * static_cast<size_t>(width) + static_cast<size_t>(c);
    if (!outside[idx] && mask.at(r, c) == 0) {
      outside[idx] = 1;
      stack.push_back({r, c});
    }
  };
  for (int c = 0; c < width; ++c) {
    push(0, c);
    push(height - 1, c);
  }
  for (int r = 0; r < height; ++r) {
    push(r, 0);
    push(r, width - 1);
  }
  while (!stack.empty()) {
    const PixelCoord p = stack.back();
    stack.pop_back();
    if (p.row > 0) push(p.row - 1, p.col);
    if (p.row + 1 < height) push(p.row + 1, p.col);
    if (p.col > 0) push(p.row, p.col - 1);
    if (p.col + 1 < width) push(p.row, p.col + 1);
  }
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      mask.at(r, c) =
          outside[static_cast<size_t>(r) * static_cast<size_t>(width) + static_cast<size_t>(c)]
              ? 0
              : 255;
    }
  }
  return mask;
}

SegmentationResult segment_roi(const EdgePack& pack, const Rect& roi, const SegmentConfig& cfg) {
  cfg.validate();
  RoiOutcome out = roi_pipeline(pack, roi, cfg);
  if (out.status != SolveStatus::converged) {
    log_warn("region solve ended with status " + std::string(status_name(out.status)));
  }
  return std::move(out.partial);
}

SegmentationResult run(const GrayImage& image, const SegmentConfig& cfg) {
  cfg.validate();
  const Clock::time_point total_start = Clock::now();

  SegmentationResult result;
  const Clock::time_point edge_start = Clock::now();
  const EdgePack pack = build_edge_pack(image, cfg.theta);
  result.timings.edge_ms = ms_since(edge_start);

  if (cfg.tile == 0) {
    RoiOutcome out = roi_pipeline(pack, Rect::full(image), cfg);
    if (out.status != SolveStatus::converged) {
      log_warn("solve ended with status " + std::string(status_name(out.status)));
    }
    result.snake_values = std::move(out.partial.snake_values);
    result.contour = std::move(out.partial.contour);
    result.objective_trace = std::move(out.partial.objective_trace);
    result.timings.solve_ms = out.partial.timings.solve_ms;
    result.timings.extract_ms = out.partial.timings.extract_ms;
  } else {
    const int total_edges = pack.edge_count;
    const int tiles_down = (image.height + cfg.tile - 1) / cfg.tile;
    const int tiles_across = (image.width + cfg.tile - 1) / cfg.tile;
    int index = 0;
    for (int tr = 0; tr < tiles_down; ++tr) {
      for (int tc = 0; tc < tiles_across; ++tc, ++index) {
        Rect roi{tr * cfg.tile, tc * cfg.tile, std::min(cfg.tile, image.height - tr * cfg.tile),
                 std::min(cfg.tile, image.width - tc * cfg.tile)};
        TileSummary summary;
        summary.index = index;
        summary.roi = roi;
        summary.edge_count = count_edges(pack, roi);
        if (summary.edge_count == 0) {
          summary.status = "skipped";
          result.tiles.push_back(std::move(summary));
          continue;
        }

        SegmentConfig tile_cfg = cfg;
        tile_cfg.seed = mix_seed(cfg.seed, 0x1000 + static_cast<std::uint64_t>(index));
        if (cfg.snake_count != 0) {
          // An explicit total is spread across tiles in proportion to their
          // edge mass; automatic sizing stays per tile, where each ROI picks
          // min(100, its own edge count) just like an untiled run would.
          const long long share =
              std::llround(static_cast<double>(cfg.snake_count) * summary.edge_count /
                           static_cast<double>(total_edges));
          tile_cfg.snake_count = static_cast<int>(std::max(4LL, share));
        }

        try {
          RoiOutcome out = roi_pipeline(pack, roi, tile_cfg);
          summary.snake_count = out.snake_count;
          summary.sample_count = out.sample_count;
          summary.status = std::string(status_name(out.status));
          summary.objective = out.objective;
          summary.iterations = static_cast<int>(out.partial.objective_trace.size());
          result.timings.solve_ms += out.partial.timings.solve_ms;
          result.timings.extract_ms += out.partial.timings.extract_ms;
          result.snake_values.insert(result.snake_values.end(), out.partial.snake_values.begin(),
                                     out.partial.snake_values.end());
          result.contour.insert(result.contour.end(), out.partial.contour.begin(),
                                out.partial.contour.end());
          result.objective_trace.insert(result.objective_trace.end(),
                                        out.partial.objective_trace.begin(),
                                        out.partial.objective_trace.end());
        } catch (const Error& e) {
          summary.status = "failed";
          summary.message = e.what();
          log_warn("tile " + std::to_string(index) + " failed: " + e.what());
        }
        result.tiles.push_back(std::move(summary));
      }
    }
  }

  const Clock::time_point mask_start = Clock::now();
  result.mask = contour_to_mask(result.contour, image.width, image.height, cfg.close_iters);
  result.timings.mask_ms = ms_since(mask_start);
  result.timings.total_ms = ms_since(total_start);
  return result;
}

std::string segmentation_to_json_string(const SegmentationResult& result,
                                        const SegmentConfig& cfg, bool include_timings) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json config;
  config["snake_count"] = cfg.snake_count;
  config["sample_budget"] = cfg.sample_budget;
  config["theta"] = cfg.theta;
  config["tile"] = cfg.tile;
  config["seed"] = cfg.seed;
  config["tau_match"] = cfg.tau_match;
  config["close_iters"] = cfg.close_iters;
  nlohmann::ordered_json solver;
  solver["alpha"] = cfg.solver.alpha;
  solver["obj_tol"] = cfg.solver.obj_tol;
  solver["feas_tol"] = cfg.solver.feas_tol;
  solver["max_iter"] = cfg.solver.max_iter;
  solver["stall_window"] = cfg.solver.stall_window;
  config["solver"] = std::move(solver);
  doc["config"] = std::move(config);

  nlohmann::ordered_json contour = nlohmann::ordered_json::array();
  for (const PixelCoord& p : result.contour) contour.push_back({p.row, p.col});
  doc["contour"] = std::move(contour);
  doc["objective_trace"] = result.objective_trace;

  nlohmann::ordered_json tiles = nlohmann::ordered_json::array();
  for (const TileSummary& t : result.tiles) {
    nlohmann::ordered_json tile;
    tile["index"] = t.index;
    tile["roi"] = {t.roi.row, t.roi.col, t.roi.height, t.roi.width};
    tile["edge_count"] = t.edge_count;
    tile["snake_count"] = t.snake_count;
    tile["sample_count"] = t.sample_count;
    tile["status"] = t.status;
    tile["message"] = t.message;
    tile["objective"] = t.objective;
    tile["iterations"] = t.iterations;
    tiles.push_back(std::move(tile));
  }
  doc["tiles"] = std::move(tiles);

  if (include_timings) {
    nlohmann::ordered_json timings;
    timings["edge_ms"] = result.timings.edge_ms;
    timings["solve_ms"] = result.timings.solve_ms;
    timings["extract_ms"] = result.timings.extract_ms;
    timings["mask_ms"] = result.timings.mask_ms;
    timings["total_ms"] = result.timings.total_ms;
    doc["timings"] = std::move(timings);
  }
  return doc.dump(2) + "\n";
}

GrayImage overlay_contour(const GrayImage& image, std::span<const PixelCoord> contour) {
  GrayImage out = image;
  for (std::uint8_t& v : out.data) v = static_cast<std::uint8_t>(v / 4);
  for (const PixelCoord& p : contour) {
    if (p.row < 0 || p.row >= out.height || p.col < 0 || p.col >= out.width) {
      throw DimensionMismatch("contour pixel outside the image");
    }
    out.at(p.row, p.col) = 255;
  }
  return out;
}

}  // namespace snakelp
