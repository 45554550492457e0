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

#include "snakelp/lp_json.hpp"

#include <fstream>
#include "json.hpp"
#include <sstream>

#include "snakelp/errors.hpp"

namespace snakelp {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<double> number_array(const ordered_json& node, const char* field) {
  if (!node.is_array()) throw ParseFailure(std::string(field) + " must be an array");
  std::vector<double> out;
  out.reserve(node.size());
  for (const auto& v : node) {
    if (!v.is_number()) throw ParseFailure(std::string(field) + " must contain only numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

const ordered_json& require(const ordered_json& node, const char* field) {
  const auto it = node.find(field);
  if (it == node.end()) throw ParseFailure(std::string("missing field \"") + field + "\"");
  return *it;
}

int require_int(const ordered_json& node, const char* field) {
  const ordered_json& v = require(node, field);
  if (!v.is_number_integer()) throw ParseFailure(std::string(field) + " must be an integer");
  return v.get<int>();
}

}  // namespace

std::string lp_to_json_string(const LPStandardForm& lp, std::span<const double> x0) {
  lp.validate();
  ordered_json doc;
  doc["m"] = lp.m;
  doc["n"] = lp.n;
  ordered_json trs = ordered_json::array();
  for (const Triplet& tr : lp.triplets) trs.push_back({tr.row, tr.col, tr.value});
  doc["triplets"] = std::move(trs);
  doc["b"] = lp.b;
  doc["c"] = lp.c;
  if (lp.constants) {
    ordered_json cs;
    cs["R"] = lp.constants->R;
    cs["K"] = lp.constants->K;
    cs["T"] = static_cast<int>(lp.constants->c.size());
    cs["ct"] = lp.constants->c;
    doc["constants"] = std::move(cs);
  }
  if (!x0.empty()) {
    if (static_cast<int>(x0.size()) != lp.n) {
      throw DimensionMismatch("x0 has " + std::to_string(x0.size()) + " entries, expected " +
                              std::to_string(lp.n));
    }
    doc["x0"] = std::vector<double>(x0.begin(), x0.end());
  }
  return doc.dump(2) + "\n";
}

LPStandardForm lp_from_json_string(std::string_view text, std::vector<double>* x0_out) {
  if (x0_out != nullptr) x0_out->clear();
  const ordered_json doc = ordered_json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseFailure("malformed JSON");
  if (!doc.is_object()) throw ParseFailure("top-level JSON value must be an object");

  LPStandardForm lp;
  lp.m = require_int(doc, "m");
  lp.n = require_int(doc, "n");
  const ordered_json& trs = require(doc, "triplets");
  if (!trs.is_array()) throw ParseFailure("triplets must be an array");
  lp.triplets.reserve(trs.size());
  for (const auto& t : trs) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() ||
        !t[1].is_number_integer() || !t[2].is_number()) {
      throw ParseFailure("each triplet must be [row, col, value]");
    }
    lp.triplets.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<double>()});
  }
  lp.b = number_array(require(doc, "b"), "b");
  lp.c = number_array(require(doc, "c"), "c");

  if (const auto it = doc.find("constants"); it != doc.end()) {
    const ordered_json& cs = *it;
    if (!cs.is_object()) throw ParseFailure("constants must be an object");
    ModelConstants mc;
    const ordered_json& r = require(cs, "R");
    if (!r.is_number()) throw ParseFailure("constants.R must be a number");
    mc.R = r.get<double>();
    mc.K = require_int(cs, "K");
    const int T = require_int(cs, "T");
    mc.c = number_array(require(cs, "ct"), "constants.ct");
    if (static_cast<int>(mc.c.size()) != T) {
      throw ParseFailure("constants.ct length disagrees with constants.T");
    }
    try {
      VarColumns cols(T, mc.K);
      if (cols.num_rows() != lp.m || cols.num_cols() != lp.n) {
        throw ParseFailure("constants disagree with the LP dimensions");
      }
      lp.columns = cols;
    } catch (const ParseFailure&) {
      throw;
    } catch (const Error& e) {
      throw ParseFailure(std::string("invalid constants: ") + e.what());
    }
    lp.constants = std::move(mc);
  }

  if (const auto it = doc.find("x0"); it != doc.end()) {
    std::vector<double> x0 = number_array(*it, "x0");
    if (static_cast<int>(x0.size()) != lp.n) {
      throw ParseFailure("x0 length disagrees with n");
    }
    if (x0_out != nullptr) *x0_out = std::move(x0);
  }

  try {
    lp.validate();
  } catch (const Error& e) {
    throw ParseFailure(std::string("invalid LP: ") + e.what());
  }
  return lp;
}

void save_lp_json(const std::filesystem::path& path, const LPStandardForm& lp,
                  std::span<const double> x0) {
  const std::string text = lp_to_json_string(lp, x0);
  std::ofstream out(path, std::ios::binary);
  if (!out || !out.write(text.data(), static_cast<std::streamsize>(text.size()))) {
    throw IoFailure("cannot write " + path.string());
  }
}

LPStandardForm load_lp_json(const std::filesystem::path& path, std::vector<double>* x0_out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (!in.good() && !in.eof()) throw IoFailure("cannot read " + path.string());
  return lp_from_json_string(buffer.str(), x0_out);
}

std::string outcome_to_json_string(const SolveOutcome& outcome) {
  ordered_json doc;
  doc["status"] = std::string(status_name(outcome.status));
  doc["objective"] = outcome.objective;
  doc["iterations"] = static_cast<int>(outcome.trace.size());
  ordered_json trace = ordered_json::array();
  for (const IterationRecord& rec : outcome.trace) {
    ordered_json row;
    row["objective"] = rec.objective;
    row["step"] = rec.step;
    row["direction_norm"] = rec.direction_norm;
    trace.push_back(std::move(row));
  }
  doc["trace"] = std::move(trace);
  return doc.dump(2) + "\n";
}

SolveOutcome outcome_from_json_string(std::string_view text) {
  const ordered_json doc = ordered_json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseFailure("malformed JSON");
  if (!doc.is_object()) throw ParseFailure("top-level JSON value must be an object");
  SolveOutcome outcome;
  const ordered_json& status = require(doc, "status");
  if (!status.is_string()) throw ParseFailure("status must be a string");
  const auto parsed = parse_status(status.get<std::string>());
  if (!parsed) throw ParseFailure("unknown status \"" + status.get<std::string>() + "\"");
  outcome.status = *parsed;
  const ordered_json& obj = require(doc, "objective");
  if (!obj.is_number()) throw ParseFailure("objective must be a number");
  outcome.objective = obj.get<double>();
  const ordered_json& trace = require(doc, "trace");
  if (!trace.is_array()) throw ParseFailure("trace must be an array");
  for (const auto& row : trace) {
    if (!row.is_object()) {
      throw ParseFailure("trace rows must be {objective, step, direction_norm}");
    }
    const auto o = row.find("objective");
    const auto s = row.find("step");
    const auto d = row.find("direction_norm");
    if (o == row.end() || s == row.end() || d == row.end() || !o->is_number() ||
        !s->is_number() || !d->is_number()) {
      throw ParseFailure("trace rows must be {objective, step, direction_norm}");
    }
    outcome.trace.push_back({o->get<double>(), s->get<double>(), d->get<double>()});
  }
  return outcome;
}

}  // namespace snakelp
