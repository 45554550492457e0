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
#include <string_view>
#include <vector>

#include "snakelp/lp_model.hpp"

namespace snakelp {

// Affine-scaling interior-point solver for minimize c.x s.t. A x = b, x >= 0.
// From a strictly positive feasible x, each iteration rescales by
// D = diag(x), projects the scaled cost onto the null space of A D, and
// walks a safety-factored fraction of the distance to the boundary:
//
//   solve (A D^2 A^T) y = A D^2 c,  delta = -D^2 (c - A^T y),
//   lambda = alpha * min over {i : delta_i < 0} of x_i / -delta_i,
//   x <- x + lambda * delta.
//
// The normal equations use a structure-aware elimination when the LP carries
// the snake-model column layout, and a generic sparse Cholesky-type
// factorization otherwise; both regularize the diagonal on breakdown.

enum class SolveStatus { running, converged, unbounded, max_iterations, numerical_failure };

std::string_view status_name(SolveStatus status);
std::optional<SolveStatus> parse_status(std::string_view name);

struct SolveOptions {
  double alpha = 0.95;
  double obj_tol = 1e-9;
  double feas_tol = 1e-8;
  int max_iter = 500;
  int stall_window = 3;

  /// Throws std::invalid_argument unless 0 < alpha < 1, tolerances > 0,
  /// max_iter >= 1, and stall_window >= 1.
  void validate() const;
};

struct IterationRecord {
  double objective = 0.0;
  double step = 0.0;
  double direction_norm = 0.0;
  friend bool operator==(const IterationRecord&, const IterationRecord&) = default;
};

/// Solver iterate: strictly positive x while running, feasible within
/// feas_tol * (1 + max|b|), objective non-increasing across accepted steps.
struct IPState {
  std::vector<double> x;
  int iter = 0;
  double objective = 0.0;
  double last_step = 0.0;
  SolveStatus status = SolveStatus::running;
};

struct SolveOutcome {
  std::vector<double> x_final;
  double objective = 0.0;
  SolveStatus status = SolveStatus::running;
  std::vector<IterationRecord> trace;
};

/// Descent direction at strictly positive x; satisfies A.delta = 0 and
/// c.delta <= 0 up to round-off.  Throws FactorizationFailure when the
/// normal equations stay singular through diagonal regularization.
std::vector<double> direction(const LPStandardForm& lp, std::span<const double> x);

enum class StepKind {
  step,        ///< finite boundary distance; lambda is valid
  stationary,  ///< direction vanishes, no further improvement
  unbounded    ///< recession direction with improving cost
};

struct StepResult {
  StepKind kind = StepKind::stationary;
  double lambda = 0.0;
};

/// Ratio test: lambda = alpha * min over {i : delta_i < 0} of x_i / -delta_i.
/// With no negative component, classifies the direction as stationary or an
/// unbounded ray by its cost decrease.
StepResult step_size(std::span<const double> x, std::span<const double> delta, double alpha,
                     std::span<const double> c);

/// One accepted step (or a terminal status transition) from a running state.
/// The iterate is only replaced after positivity and feasibility checks
/// pass; on breakdown the state keeps the last good x with status
/// numerical_failure.
void iterate(const LPStandardForm& lp, IPState& state, const SolveOptions& opts);

/// Full solve from a strictly positive feasible start.  Stops after
/// stall_window consecutive relative objective changes below obj_tol, a
/// stationary direction, an unbounded ray, max_iter, or numerical failure.
/// Throws InfeasibleStart when x0 has a non-positive component or violates
/// A x = b beyond feas_tol * (1 + max|b|).
SolveOutcome solve(const LPStandardForm& lp, std::span<const double> x0,
                   const SolveOptions& opts);

/// Exhaustive vertex enumeration for tiny programs (n <= 14, m <= 8): tries
/// every basis, keeps feasible vertices, returns the cheapest.  Throws
/// TooLarge beyond the size guard, InfeasibleProblem when no feasible vertex
/// exists, UnboundedDetected when a feasible basis admits an improving ray.
SolveOutcome oracle_solve(const LPStandardForm& lp);

}  // namespace snakelp
