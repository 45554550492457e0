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
#include <vector>

#include "snakelp/image.hpp"

namespace snakelp {

/// Region overlap between two masks (any nonzero pixel is foreground):
/// 2|pred AND truth| / (|pred| + |truth|), and 1.0 when both are empty.
/// Throws DimensionMismatch on unequal dimensions.
double dice(const GrayImage& pred, const GrayImage& truth);

struct DiceEntry {
  std::string name;
  double dsi = 0.0;
  long long pred_area = 0;
  long long truth_area = 0;
  long long overlap = 0;
  friend bool operator==(const DiceEntry&, const DiceEntry&) = default;
};

struct DiceReport {
  std::vector<DiceEntry> entries;
};

struct DiceCase {
  std::string name;
  GrayImage pred;
  GrayImage truth;
};

DiceReport report(const std::vector<DiceCase>& cases);

std::string report_to_json_string(const DiceReport& rep);
/// Header "name,dsi,pred_area,truth_area,overlap", one row per entry.
std::string report_to_csv_string(const DiceReport& rep);

}  // namespace snakelp
