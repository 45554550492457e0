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

#include "snakelp/lp_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_set>

#include "snakelp/errors.hpp"

namespace snakelp {

VarColumns::VarColumns(int t_total, int k_total) : t_(t_total), k_(k_total) {
  if (t_ < 1 || k_ < 1) {
    throw DimensionMismatch("VarColumns needs T >= 1 and K >= 1, got T=" + std::to_string(t_) +
                            " K=" + std::to_string(k_));
  }
}

VarColumns::VarId VarColumns::decode(int col) const {
  if (col < 0 || col >= num_cols()) {
    throw DimensionMismatch("column " + std::to_string(col) + " out of range [0, " +
                            std::to_string(num_cols()) + ")");
  }
  const int kt = k_ * t_;
  if (col < kt) return {VarKind::a, col / k_, col % k_};
  if (col < 2 * kt) {
    const int off = col - kt;
    return {VarKind::b, off / k_, off % k_};
  }
  if (col < 2 * kt + t_) return {VarKind::e, col - 2 * kt, -1};
  return {VarKind::p, -1, col - 2 * kt - t_};
}

void LPStandardForm::validate() const {
  if (m < 1 || n < 1) {
    throw DimensionMismatch("LP needs m >= 1 and n >= 1, got m=" + std::to_string(m) +
                            " n=" + std::to_string(n));
  }
  if (static_cast<int>(b.size()) != m) {
    throw DimensionMismatch("b has " + std::to_string(b.size()) + " entries, expected " +
                            std::to_string(m));
  }
  if (static_cast<int>(c.size()) != n) {
    throw DimensionMismatch("c has " + std::to_string(c.size()) + " entries, expected " +
                            std::to_string(n));
  }
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(triplets.size());
  for (const Triplet& tr : triplets) {
    if (tr.row < 0 || tr.row >= m || tr.col < 0 || tr.col >= n) {
      throw DimensionMismatch("triplet (" + std::to_string(tr.row) + ", " + std::to_string(tr.col) +
                              ") outside " + std::to_string(m) + "x" + std::to_string(n));
    }
    if (!std::isfinite(tr.value)) {
      throw DimensionMismatch("non-finite triplet value at (" + std::to_string(tr.row) + ", " +
                              std::to_string(tr.col) + ")");
    }
    const std::uint64_t key =
        (static_cast<std::uint64_t>(tr.row) << 32) | static_cast<std::uint32_t>(tr.col);
    if (!seen.insert(key).second) {
      throw DimensionMismatch("duplicate triplet at (" + std::to_string(tr.row) + ", " +
                              std::to_string(tr.col) + ")");
    }
  }
  if (columns) {
    if (columns->num_rows() != m || columns->num_cols() != n) {
      throw DimensionMismatch("column layout disagrees with m/n");
    }
  }
  if (constants) {
    if (constants->K < 1) throw DimensionMismatch("constants.K must be >= 1");
    if (columns && static_cast<int>(constants->c.size()) != columns->t_total()) {
      throw DimensionMismatch("constants.c length disagrees with T");
    }
  }
}

double compute_R(const PointSample& sample) {
  sample.validate();
  double lo = sample.points.front().value;
  double hi = lo;
  for (const SamplePoint& p : sample.points) {
    lo = std::min(lo, p.value);
    hi = std::max(hi, p.value);
  }
  const double R = hi - lo;
  if (R <= 0.0) {
    throw DegenerateEdgeMap("all sample values equal (" + std::to_string(lo) +
                            "); value range is zero");
  }
  return R;
}

namespace {

/// (1/M) * sum_m |v - P_m| over the edge subset.
double mean_edge_distance(const PointSample& sample, double v) {
  double acc = 0.0;
  for (int idx : sample.edge_idx) acc += std::abs(v - sample.points[idx].value);
  return acc / static_cast<double>(sample.edge_idx.size());
}

}  // namespace

std::vector<double> compute_ct(const PointSample& sample, double R, int K) {
  sample.validate();
  if (K < 1) throw KTooLarge("K must be >= 1, got " + std::to_string(K));
  std::vector<double> ct(sample.points.size());
  for (size_t t = 0; t < sample.points.size(); ++t) {
    ct[t] = (R - mean_edge_distance(sample, sample.points[t].value)) / static_cast<double>(K);
  }
  return ct;
}

EdgeAffinity edge_affinity(const PointSample& sample, std::span<const double> snake_values) {
  sample.validate();
  if (snake_values.empty()) throw DimensionMismatch("snake value set is empty");
  const double R = compute_R(sample);
  EdgeAffinity out;
  out.VE.resize(sample.points.size());
  out.VS.resize(sample.points.size());
  for (size_t t = 0; t < sample.points.size(); ++t) {
    const double pt = sample.points[t].value;
    out.VE[t] = R - mean_edge_distance(sample, pt);
    double acc = 0.0;
    for (double pk : snake_values) acc += std::abs(pt - pk);
    out.VS[t] = R - acc / static_cast<double>(snake_values.size());
  }
  return out;
}

LPStandardForm build_lp(const PointSample& sample, int K) {
  sample.validate();
  if (K < 1) throw KTooLarge("K must be >= 1, got " + std::to_string(K));
  const int T = sample.t_count();
  const double R = compute_R(sample);
  std::vector<double> ct = compute_ct(sample, R, K);

  VarColumns cols(T, K);
  LPStandardForm lp;
  lp.m = cols.num_rows();
  lp.n = cols.num_cols();
  lp.b.resize(lp.m);
  lp.c.assign(lp.n, 0.0);
  lp.triplets.reserve(static_cast<size_t>(5) * K * T + T);

  const double Kd = static_cast<double>(K);
  for (int t = 0; t < T; ++t) {
    const int row = cols.row_balance(t);
    for (int k = 0; k < K; ++k) {
      lp.triplets.push_back({row, cols.col_a(t, k), 1.0});
      lp.triplets.push_back({row, cols.col_b(t, k), 1.0});
    }
    lp.triplets.push_back({row, cols.col_e(t), -1.0});
    lp.b[row] = Kd * R - Kd * Kd * ct[t];
    lp.c[cols.col_e(t)] = 0.0;
    for (int k = 0; k < K; ++k) {
      lp.c[cols.col_a(t, k)] = ct[t];
      lp.c[cols.col_b(t, k)] = ct[t];
    }
  }
  for (int t = 0; t < T; ++t) {
    for (int k = 0; k < K; ++k) {
      const int row = cols.row_match(t, k);
      lp.triplets.push_back({row, cols.col_a(t, k), 1.0});
      lp.triplets.push_back({row, cols.col_b(t, k), -1.0});
      lp.triplets.push_back({row, cols.col_p(k), 1.0});
      lp.b[row] = sample.points[t].value;
    }
  }

  lp.columns = cols;
  lp.constants = ModelConstants{R, K, std::move(ct)};
  lp.validate();
  return lp;
}

std::vector<double> initial_point(const LPStandardForm& lp, std::span<const double> sample_values,
                                  std::span<const double> snake_values, double epsilon) {
  lp.validate();
  if (!lp.columns || !lp.constants) {
    throw DimensionMismatch("initial_point needs a model-built LP with column layout");
  }
  const VarColumns& cols = *lp.columns;
  const int T = cols.t_total();
  const int K = cols.k_total();
  if (static_cast<int>(sample_values.size()) != T) {
    throw DimensionMismatch("expected " + std::to_string(T) + " sample values, got " +
                            std::to_string(sample_values.size()));
  }
  if (static_cast<int>(snake_values.size()) != K) {
    throw DimensionMismatch("expected " + std::to_string(K) + " snake values, got " +
                            std::to_string(snake_values.size()));
  }
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw NonPositiveComponent("epsilon must be positive and finite");
  }
  for (double pk : snake_values) {
    if (!(pk > 0.0)) {
      throw ZeroSnakeValue("snake value " + std::to_string(pk) +
                           " is not strictly positive; nudge zero values before starting");
    }
  }

  double maxdiff = 0.0;
  for (double pk : snake_values) {
    for (double pt : sample_values) maxdiff = std::max(maxdiff, std::abs(pk - pt));
  }

  std::vector<double> x(lp.n, 0.0);
  for (int k = 0; k < K; ++k) x[cols.col_p(k)] = snake_values[k];
  for (int t = 0; t < T; ++t) {
    double row_sum = 0.0;
    for (int k = 0; k < K; ++k) {
      const double b_tk = maxdiff + epsilon;
      const double a_tk = maxdiff + epsilon - (snake_values[k] - sample_values[t]);
      if (!(a_tk > 0.0) || !(b_tk > 0.0)) {
        throw NonPositiveComponent("slack pair at t=" + std::to_string(t) +
                                   " k=" + std::to_string(k) + " is not strictly positive");
      }
      x[cols.col_a(t, k)] = a_tk;
      x[cols.col_b(t, k)] = b_tk;
      row_sum += a_tk + b_tk;
    }
    const double e_t = row_sum - lp.b[cols.row_balance(t)];
    if (!(e_t > 0.0)) {
      throw NonPositiveComponent("excess at t=" + std::to_string(t) + " is " +
                                 std::to_string(e_t) + "; increase epsilon");
    }
    x[cols.col_e(t)] = e_t;
  }
  return x;
}

std::vector<double> initial_point(const LPStandardForm& lp, const PointSample& sample,
                                  std::span<const double> snake_values, double epsilon) {
  const std::vector<double> vals = sample.values();
  return initial_point(lp, vals, snake_values, epsilon);
}

std::vector<double> apply_matrix(const LPStandardForm& lp, std::span<const double> x) {
  if (static_cast<int>(x.size()) != lp.n) {
    throw DimensionMismatch("x has " + std::to_string(x.size()) + " entries, expected " +
                            std::to_string(lp.n));
  }
  std::vector<double> out(lp.m, 0.0);
  for (const Triplet& tr : lp.triplets) out[tr.row] += tr.value * x[tr.col];
  return out;
}

double objective_value(const LPStandardForm& lp, std::span<const double> x) {
  if (static_cast<int>(x.size()) != lp.n) {
    throw DimensionMismatch("x has " + std::to_string(x.size()) + " entries, expected " +
                            std::to_string(lp.n));
  }
  double acc = 0.0;
  for (int j = 0; j < lp.n; ++j) acc += lp.c[j] * x[j];
  return acc;
}

double feasibility_residual(const LPStandardForm& lp, std::span<const double> x) {
  const std::vector<double> ax = apply_matrix(lp, x);
  double worst = 0.0;
  for (int i = 0; i < lp.m; ++i) worst = std::max(worst, std::abs(ax[i] - lp.b[i]));
  return worst;
}

}  // namespace snakelp
