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

#include <optional>
#include <span>
#include <vector>

#include "snakelp/edgemap.hpp"

namespace snakelp {

// The snake-fitting model in standard form.  For T sample points with pixel
// values P_t (M of them pre-identified edge points) and K snake points with
// values P_k, the program is
//
//   minimize    sum_t c_t * sum_k (a_tk + b_tk)
//   subject to  sum_k (a_tk + b_tk) - e_t = K*R - K^2*c_t      (one per t)
//               a_tk - b_tk + P_k = P_t                        (one per t,k)
//               a_tk, b_tk, e_t, P_k >= 0
//
// with R the range of sample values and
// c_t = (1/K) * (R - (1/M) * sum_m |P_t - P_m|), fixed once computed.
// The split pair (a_tk, b_tk) carries P_t - P_k = a_tk - b_tk, so at an
// optimal solution a_tk + b_tk = |P_t - P_k|.

/// Fixed model constants: value range R, snake count K, and the weight
/// vector c (length T).
struct ModelConstants {
  double R = 0.0;
  int K = 0;
  std::vector<double> c;
};

/// Column layout of the standard form: the a-block, then the b-block (both
/// t-major), then e_0..e_{T-1}, then P_0..P_{K-1}.  Rows are the T balance
/// rows first, then the K*T value-match rows, t-major.
class VarColumns {
 public:
  enum class VarKind { a, b, e, p };
  struct VarId {
    VarKind kind;
    int t = -1;
    int k = -1;
    friend bool operator==(const VarId&, const VarId&) = default;
  };

  VarColumns(int t_total, int k_total);

  int t_total() const { return t_; }
  int k_total() const { return k_; }

  int num_cols() const { return 2 * k_ * t_ + k_ + t_; }
  int num_rows() const { return k_ * t_ + t_; }

  int col_a(int t, int k) const { return t * k_ + k; }
  int col_b(int t, int k) const { return k_ * t_ + t * k_ + k; }
  int col_e(int t) const { return 2 * k_ * t_ + t; }
  int col_p(int k) const { return 2 * k_ * t_ + t_ + k; }

  VarId decode(int col) const;

  int row_balance(int t) const { return t; }
  int row_match(int t, int k) const { return t_ + t * k_ + k; }

  friend bool operator==(const VarColumns&, const VarColumns&) = default;

 private:
  int t_;
  int k_;
};

struct Triplet {
  int row = 0;
  int col = 0;
  double value = 0.0;
  friend bool operator==(const Triplet&, const Triplet&) = default;
};

/// Sparse standard-form LP: minimize c.x subject to A x = b, x >= 0.
/// columns/constants are present for model-built LPs and absent for generic
/// programs loaded from JSON.
struct LPStandardForm {
  int m = 0;
  int n = 0;
  std::vector<Triplet> triplets;
  std::vector<double> b;
  std::vector<double> c;
  std::optional<VarColumns> columns;
  std::optional<ModelConstants> constants;

  /// Structural checks: vector lengths, triplet ranges, no duplicate
  /// (row, col) pairs.  Duplicates are rejected rather than summed.
  void validate() const;
};

/// The affinity vectors between every sample point and the edge-point set
/// (VE) and the snake-point set (VS); both length T, components <= R.
struct EdgeAffinity {
  std::vector<double> VE;
  std::vector<double> VS;
};

/// Range of sample values, max_t P_t - min_t P_t (equal to the largest
/// pairwise absolute difference).  Throws DegenerateEdgeMap when zero.
double compute_R(const PointSample& sample);

/// c_t = (1/K) * (R - (1/M) * sum_m |P_t - P_m|) for every sample point.
/// Each component lies in [0, R/K].
std::vector<double> compute_ct(const PointSample& sample, double R, int K);

/// VE and VS for diagnostics and the dot-product identity
/// VE.VS + sum_t c_t sum_k |P_t - P_k| = sum_t (R^2 - (R/M) sum_m |P_t - P_m|).
EdgeAffinity edge_affinity(const PointSample& sample, std::span<const double> snake_values);

/// Assembles the standard form for the sample and K snake points.
/// Throws DegenerateEdgeMap when the sample values have zero range.
LPStandardForm build_lp(const PointSample& sample, int K);

// Strictly positive feasible start from an arbitrary snake selection; with
// maxdiff = max_{k,t} |snake_k - sample_t|:
//   b_tk = maxdiff + epsilon
//   a_tk = maxdiff + epsilon - (snake_k - sample_t)
//   e_t  = sum_k (a_tk + b_tk) - (K*R - K^2*c_t)
// epsilon = R always yields a strictly positive point.  Throws
// ZeroSnakeValue for non-positive snake values and NonPositiveComponent
// when epsilon is too small to keep every e_t positive.
std::vector<double> initial_point(const LPStandardForm& lp, std::span<const double> sample_values,
                                  std::span<const double> snake_values, double epsilon);
std::vector<double> initial_point(const LPStandardForm& lp, const PointSample& sample,
                                  std::span<const double> snake_values, double epsilon);

// Small helpers shared by the solver and the test suites.
std::vector<double> apply_matrix(const LPStandardForm& lp, std::span<const double> x);
double objective_value(const LPStandardForm& lp, std::span<const double> x);
/// max_i |(A x - b)_i|
double feasibility_residual(const LPStandardForm& lp, std::span<const double> x);

}  // namespace snakelp
