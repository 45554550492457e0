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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "snakelp/errors.hpp"
#include "snakelp/solver.hpp"

namespace snakelp {

namespace {

constexpr int kMaxCols = 14;
constexpr int kMaxRows = 8;
constexpr double kFeasTol = 1e-9;
constexpr double kRayTol = 1e-9;

/// Advances idx to the next m-combination of {0..n-1} in lexicographic
/// order; returns false after the last one.
bool next_combination(std::vector<int>& idx, int n) {
  const int m = static_cast<int>(idx.size());
  int i = m - 1;
  while (i >= 0 && idx[static_cast<size_t>(i)] == n - m + i) --i;
  if (i < 0) return false;
  ++idx[static_cast<size_t>(i)];
  for (int j = i + 1; j < m; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  return true;
}

}  // namespace

SolveOutcome oracle_solve(const LPStandardForm& lp) {
  lp.validate();
  if (lp.n > kMaxCols || lp.m > kMaxRows) {
    throw TooLarge("exhaustive enumeration is limited to n <= " + std::to_string(kMaxCols) +
                   ", m <= " + std::to_string(kMaxRows) + "; got n=" + std::to_string(lp.n) +
                   " m=" + std::to_string(lp.m));
  }
  if (lp.n < lp.m) {
    throw InfeasibleProblem("no basis exists with n < m");
  }

  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(lp.m, lp.n);
  for (const Triplet& tr : lp.triplets) A(tr.row, tr.col) += tr.value;
  Eigen::VectorXd b(lp.m);
  for (int i = 0; i < lp.m; ++i) b[i] = lp.b[static_cast<size_t>(i)];

  std::vector<int> idx(static_cast<size_t>(lp.m));
  for (int i = 0; i < lp.m; ++i) idx[static_cast<size_t>(i)] = i;

  bool found = false;
  double best_cost = std::numeric_limits<double>::infinity();
  std::vector<double> best_x;

  do {
    Eigen::MatrixXd basis(lp.m, lp.m);
    for (int j = 0; j < lp.m; ++j) basis.col(j) = A.col(idx[static_cast<size_t>(j)]);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(basis);
    if (!lu.isInvertible()) continue;
    Eigen::VectorXd xb = lu.solve(b);
    bool feasible = true;
    for (int j = 0; j < lp.m; ++j) {
      if (xb[j] < -kFeasTol) {
        feasible = false;
        break;
      }
    }
    if (!feasible) continue;
    found = true;

    double cost = 0.0;
    for (int j = 0; j < lp.m; ++j) cost += lp.c[static_cast<size_t>(idx[static_cast<size_t>(j)])] * xb[j];

    // A feasible basis with an improving ray certifies unboundedness:
    // entering column j with negative reduced cost whose basic update
    // direction never decreases any basic variable.
    std::vector<char> in_basis(static_cast<size_t>(lp.n), 0);
    for (int j = 0; j < lp.m; ++j) in_basis[static_cast<size_t>(idx[static_cast<size_t>(j)])] = 1;
    for (int j = 0; j < lp.n; ++j) {
      if (in_basis[static_cast<size_t>(j)]) continue;
      Eigen::VectorXd d = lu.solve(A.col(j));
      double reduced = lp.c[static_cast<size_t>(j)];
      for (int i = 0; i < lp.m; ++i) reduced -= lp.c[static_cast<size_t>(idx[static_cast<size_t>(i)])] * d[i];
      if (reduced >= -1e-8 * (1.0 + std::abs(cost))) continue;
      bool ray = true;
      for (int i = 0; i < lp.m; ++i) {
        if (d[i] > kRayTol) {
          ray = false;
          break;
        }
      }
      if (ray) {
        throw UnboundedDetected("feasible basis admits an improving recession direction");
      }
    }

    if (cost < best_cost) {
      best_cost = cost;
      best_x.assign(static_cast<size_t>(lp.n), 0.0);
      for (int j = 0; j < lp.m; ++j) {
        best_x[static_cast<size_t>(idx[static_cast<size_t>(j)])] = std::max(0.0, xb[j]);
      }
    }
  } while (next_combination(idx, lp.n));

  if (!found) {
    throw InfeasibleProblem("no feasible basic solution among all bases");
  }

  SolveOutcome outcome;
  outcome.x_final = std::move(best_x);
  outcome.objective = objective_value(lp, outcome.x_final);
  outcome.status = SolveStatus::converged;
  return outcome;
}

}  // namespace snakelp
