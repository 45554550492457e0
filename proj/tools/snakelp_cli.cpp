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

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "snakelp/edgemap.hpp"
#include "snakelp/errors.hpp"
#include "snakelp/evaluate.hpp"
#include "snakelp/image_io.hpp"
#include "snakelp/log.hpp"
#include "snakelp/lp_json.hpp"
#include "snakelp/noise.hpp"
#include "snakelp/segment.hpp"
#include "snakelp/shapes.hpp"
#include "snakelp/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !out.write(text.data(), static_cast<std::streamsize>(text.size()))) {
    throw snakelp::IoFailure("cannot write " + path.string());
  }
}

struct SynthArgs {
  std::string shape = "arrow";
  int width = 400;
  int height = 320;
  double noise_sigma = 0.0;
  std::uint64_t seed = 0;
  std::string out;
  std::string truth;
};

int run_synth(const SynthArgs& args) {
  const snakelp::ShapeKind kind = *snakelp::parse_shape_kind(args.shape);
  const snakelp::GrayImage clean = snakelp::generate_shape(kind, args.width, args.height);
  if (!args.truth.empty()) snakelp::save_pgm(clean, args.truth);
  snakelp::GrayImage image = clean;
  if (args.noise_sigma > 0.0) {
    image = snakelp::add_gaussian_noise(clean, args.noise_sigma, args.seed);
  }
  snakelp::save_pgm(image, args.out);
  return kExitOk;
}

struct EdgemapArgs {
  std::string in;
  double theta = 0.2;
  std::string cont_out;
  std::string bin_out;
};

int run_edgemap(const EdgemapArgs& args) {
  const snakelp::GrayImage image = snakelp::load_pgm(args.in);
  const snakelp::EdgePack pack = snakelp::build_edge_pack(image, args.theta);
  if (!args.cont_out.empty()) snakelp::save_pfm(pack.continuous, args.cont_out);
  if (!args.bin_out.empty()) snakelp::save_pgm(pack.binary, args.bin_out);
  return kExitOk;
}

struct SegmentArgs {
  std::string in;
  std::vector<int> roi;
  int k = 0;
  int t_budget = 1000;
  int tile = 0;
  std::uint64_t seed = 0;
  std::string out_json;
  std::string mask_out;
  std::string overlay_out;
};

int run_segment(const SegmentArgs& args) {
  snakelp::SegmentConfig cfg;
  cfg.snake_count = args.k;
  cfg.sample_budget = args.t_budget;
  cfg.tile = args.tile;
  cfg.seed = args.seed;
  cfg.validate();

  const snakelp::GrayImage image = snakelp::load_pgm(args.in);
  snakelp::SegmentationResult result;
  if (args.roi.empty()) {
    result = snakelp::run(image, cfg);
  } else {
    const snakelp::Rect roi{args.roi[0], args.roi[1], args.roi[2], args.roi[3]};
    const snakelp::EdgePack pack = snakelp::build_edge_pack(image, cfg.theta);
    result = snakelp::segment_roi(pack, roi, cfg);
    result.mask =
        snakelp::contour_to_mask(result.contour, image.width, image.height, cfg.close_iters);
  }

  if (!args.out_json.empty()) {
    write_text(args.out_json, snakelp::segmentation_to_json_string(result, cfg, false));
  }
  if (!args.mask_out.empty()) snakelp::save_pgm(result.mask, args.mask_out);
  if (!args.overlay_out.empty()) {
    snakelp::save_pgm(snakelp::overlay_contour(image, result.contour), args.overlay_out);
  }
  snakelp::log_info("segmented " + args.in + ": " + std::to_string(result.contour.size()) +
                    " contour points, total " + std::to_string(result.timings.total_ms) + " ms");
  return kExitOk;
}

struct EvaluateArgs {
  std::string pred;
  std::string truth;
  std::string out;
};

int run_evaluate(const EvaluateArgs& args) {
  snakelp::DiceCase dice_case;
  dice_case.name = std::filesystem::path(args.pred).stem().string();
  dice_case.pred = snakelp::load_pgm(args.pred);
  dice_case.truth = snakelp::load_pgm(args.truth);
  const snakelp::DiceReport rep = snakelp::report({dice_case});
  if (!args.out.empty()) {
    const bool csv = std::filesystem::path(args.out).extension() == ".csv";
    write_text(args.out,
               csv ? snakelp::report_to_csv_string(rep) : snakelp::report_to_json_string(rep));
  }
  std::printf("%.6f\n", rep.entries.front().dsi);
  return kExitOk;
}

struct SolveLpArgs {
  std::string in;
  std::string out;
};

int run_solve_lp(const SolveLpArgs& args) {
  std::vector<double> x0;
  const snakelp::LPStandardForm lp = snakelp::load_lp_json(args.in, &x0);
  if (x0.empty()) {
    throw snakelp::InfeasibleStart("LP file carries no starting point (x0)");
  }
  const snakelp::SolveOutcome outcome = snakelp::solve(lp, x0, snakelp::SolveOptions{});
  const std::string text = snakelp::outcome_to_json_string(outcome);
  if (!args.out.empty()) {
    write_text(args.out, text);
  } else {
    std::fwrite(text.data(), 1, text.size(), stdout);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"snakelp: LP-based snake segmentation"};
  app.require_subcommand(1);

  SynthArgs synth;
  CLI::App* synth_cmd = app.add_subcommand("synth", "generate a synthetic shape image");
  synth_cmd->add_option("--shape", synth.shape, "arrow, heart, rectangle, star, or multi")
      ->check(CLI::IsMember({"arrow", "heart", "rectangle", "star", "multi"}));
  synth_cmd->add_option("--width", synth.width, "image width")->check(CLI::Range(32, 1 << 16));
  synth_cmd->add_option("--height", synth.height, "image height")->check(CLI::Range(32, 1 << 16));
  synth_cmd->add_option("--noise-sigma", synth.noise_sigma, "additive Gaussian noise level")
      ->check(CLI::NonNegativeNumber);
  synth_cmd->add_option("--seed", synth.seed, "noise seed");
  synth_cmd->add_option("-o,--out", synth.out, "output image (PGM)")->required();
  synth_cmd->add_option("--truth", synth.truth, "ground-truth mask output (PGM)");

  EdgemapArgs edgemap;
  CLI::App* edgemap_cmd = app.add_subcommand("edgemap", "compute edge maps from an image");
  edgemap_cmd->add_option("in", edgemap.in, "input image (PGM)")->required();
  edgemap_cmd->add_option("--theta", edgemap.theta, "binary edge threshold")
      ->check(CLI::Range(1e-9, 1.0));
  edgemap_cmd->add_option("--cont-out", edgemap.cont_out, "continuous edge map output (PFM)");
  edgemap_cmd->add_option("--bin-out", edgemap.bin_out, "binary edge map output (PGM)");

  SegmentArgs segment;
  CLI::App* segment_cmd = app.add_subcommand("segment", "segment an image");
  segment_cmd->add_option("in", segment.in, "input image (PGM)")->required();
  segment_cmd->add_option("--roi", segment.roi, "region of interest: row col height width")
      ->expected(4);
  segment_cmd->add_option("--k", segment.k, "snake point count (default: min(100, edge count))")
      ->check(CLI::PositiveNumber);
  segment_cmd->add_option("--t-budget", segment.t_budget, "point sample budget")
      ->check(CLI::Range(2, 1 << 30));
  segment_cmd->add_option("--tile", segment.tile, "tile size (0 = untiled; 64 typical)");
  segment_cmd->add_option("--seed", segment.seed, "sampling seed");
  segment_cmd->add_option("--out-json", segment.out_json, "result JSON output");
  segment_cmd->add_option("--mask-out", segment.mask_out, "mask output (PGM)");
  segment_cmd->add_option("--overlay-out", segment.overlay_out, "contour overlay output (PGM)");

  EvaluateArgs evaluate;
  CLI::App* evaluate_cmd = app.add_subcommand("evaluate", "score a mask against ground truth");
  evaluate_cmd->add_option("--pred", evaluate.pred, "predicted mask (PGM)")->required();
  evaluate_cmd->add_option("--truth", evaluate.truth, "ground-truth mask (PGM)")->required();
  evaluate_cmd->add_option("-o,--out", evaluate.out, "report output (.json or .csv)");

  SolveLpArgs solve_lp;
  CLI::App* solve_lp_cmd = app.add_subcommand("solve-lp", "solve an LP dump (debug)");
  solve_lp_cmd->add_option("in", solve_lp.in, "LP JSON file")->required();
  solve_lp_cmd->add_option("-o,--out", solve_lp.out, "outcome JSON output (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*synth_cmd) return run_synth(synth);
    if (*edgemap_cmd) return run_edgemap(edgemap);
    if (*segment_cmd) return run_segment(segment);
    if (*evaluate_cmd) return run_evaluate(evaluate);
    if (*solve_lp_cmd) return run_solve_lp(solve_lp);
  } catch (const snakelp::ParseFailure& e) {
    snakelp::log_error(e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    snakelp::log_error(e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    snakelp::log_error(e.what());
    return kExitRuntime;
  }
  return kExitOk;
}
