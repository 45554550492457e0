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

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "snakelp/lp_model.hpp"
#include "snakelp/solver.hpp"

namespace snakelp {

// JSON exchange format for standard-form LPs:
//   {"m": .., "n": .., "triplets": [[row, col, value], ...],
//    "b": [..], "c": [..],
//    "constants": {"R": .., "K": .., "T": .., "ct": [..]},   (model LPs)
//    "x0": [..]}                                             (optional start)
// and for solve outcomes:
//   {"status": "converged", "objective": .., "iterations": ..,
//    "trace": [{"objective": .., "step": .., "direction_norm": ..}, ...]}

/// Serializes the LP; a non-empty x0 is embedded as a starting point.
std::string lp_to_json_string(const LPStandardForm& lp, std::span<const double> x0 = {});

/// Parses an LP dump.  Throws ParseFailure on malformed JSON or any schema
/// violation; when x0_out is non-null an embedded starting point is stored
/// there (cleared when absent).
LPStandardForm lp_from_json_string(std::string_view text, std::vector<double>* x0_out = nullptr);

void save_lp_json(const std::filesystem::path& path, const LPStandardForm& lp,
                  std::span<const double> x0 = {});
LPStandardForm load_lp_json(const std::filesystem::path& path,
                            std::vector<double>* x0_out = nullptr);

std::string outcome_to_json_string(const SolveOutcome& outcome);
/// Restores status, objective, and trace; x_final is not part of the schema.
SolveOutcome outcome_from_json_string(std::string_view text);

}  // namespace snakelp
