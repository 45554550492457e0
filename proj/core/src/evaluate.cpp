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

#include "snakelp/evaluate.hpp"

#include "json.hpp"
#include <sstream>

#include "snakelp/errors.hpp"

namespace snakelp {

namespace {

struct OverlapCounts {
  long long pred = 0;
  long long truth = 0;
  long long both = 0;
};

OverlapCounts count_overlap(const GrayImage& pred, const GrayImage& truth) {
  if (!pred.same_dims(truth)) {
    throw DimensionMismatch("mask dimensions disagree: " + std::to_string(pred.width) + "x" +
                            std::to_string(pred.height) + " vs " + std::to_string(truth.width) +
                            "x" + std::to_string(truth.height));
  }
  OverlapCounts counts;
  for (std::size_t i = 0; i < pred.data.size(); ++i) {
    const bool p = pred.data[i] != 0;
    const bool t = truth.data[i] != 0;
    counts.pred += p;
    counts.truth += t;
    counts.both += p && t;
  }
  return counts;
}

}  // namespace

double dice(const GrayImage& pred, const GrayImage& truth) {
  const OverlapCounts counts = count_overlap(pred, truth);
  if (counts.pred + counts.truth == 0) return 1.0;
  return 2.0 * static_cast<double>(counts.both) /
         static_cast<double>(counts.pred + counts.truth);
}

DiceReport report(const std::vector<DiceCase>& cases) {
  DiceReport rep;
  rep.entries.reserve(cases.size());
  for (const DiceCase& c : cases) {
    const OverlapCounts counts = count_overlap(c.pred, c.truth);
    DiceEntry entry;
    entry.name = c.name;
    entry.dsi = counts.pred + counts.truth == 0
                    ? 1.0
                    : 2.0 * static_cast<double>(counts.both) /
                          static_cast<double>(counts.pred + counts.truth);
    entry.pred_area = counts.pred;
    entry.truth_area = counts.truth;
    entry.overlap = counts.both;
    rep.entries.push_back(std::move(entry));
  }
  return rep;
}

std::string report_to_json_string(const DiceReport& rep) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const DiceEntry& e : rep.entries) {
    nlohmann::ordered_json row;
    row["name"] = e.name;
    row["dsi"] = e.dsi;
    row["pred_area"] = e.pred_area;
    row["truth_area"] = e.truth_area;
    row["overlap"] = e.overlap;
    entries.push_back(std::move(row));
  }
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

std::string report_to_csv_string(const DiceReport& rep) {
  std::ostringstream out;
  out << "name,dsi,pred_area,truth_area,overlap\n";
  out.precision(17);
  for (const DiceEntry& e : rep.entries) {
    out << e.name << ',' << e.dsi << ',' << e.pred_area << ',' << e.truth_area << ','
        << e.overlap << '\n';
  }
  return out.str();
}

}  // namespace snakelp
