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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "snakelp/errors.hpp"
#include "snakelp/lp_json.hpp"
#include "snakelp/lp_model.hpp"
#include "snakelp/solver.hpp"
#include "test_util.hpp"

using namespace snakelp;

namespace {

/// min -x0 subject to x0 - x1 = 0: the feasible set is the ray x0 = x1 >= 0
/// and the objective is unbounded below along it.
LPStandardForm ray_lp() {
  LPStandardForm lp;
  lp.m = 1;
  lp.n = 2;
  lp.triplets = {{0, 0, 1.0}, {0, 1, -1.0}};
  lp.b = {0.0};
  lp.c = {-1.0, 0.0};
  return lp;
}

}  // namespace

TEST_SUITE("solver") {

TEST_CASE("option validation rejects out-of-range settings") {
  SolveOptions opts;
  CHECK_NOTHROW(opts.validate());
  opts.alpha = 1.0;
  CHECK_THROWS_AS(opts.validate(), std::invalid_argument);
  opts = SolveOptions{};
  opts.obj_tol = 0.0;
  CHECK_THROWS_AS(opts.validate(), std::invalid_argument);
  opts = SolveOptions{};
  opts.max_iter = 0;
  CHECK_THROWS_AS(opts.validate(), std::invalid_argument);
  opts = SolveOptions{};
  opts.stall_window = 0;
  CHECK_THROWS_AS(opts.validate(), std::invalid_argument);
}

TEST_CASE("status names round-trip") {
  for (SolveStatus st : {SolveStatus::running, SolveStatus::converged, SolveStatus::unbounded,
                         SolveStatus::max_iterations, SolveStatus::numerical_failure}) {
    auto parsed = parse_status(status_name(st));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == st);
  }
  CHECK_FALSE(parse_status("bogus").has_value());
}

TEST_CASE("random feasible bounded programs match the enumeration oracle") {
  int solved = 0;
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    testutil::RandomLP rand = testutil::make_feasible_bounded_lp(seed);
    SolveOutcome oracle = oracle_solve(rand.lp);
    REQUIRE(oracle.status == SolveStatus::converged);
    SolveOutcome mine = solve(rand.lp, rand.x_feasible, SolveOptions{});
    CAPTURE(seed);
    CHECK(mine.status == SolveStatus::converged);
    CHECK(std::abs(mine.objective - oracle.objective) <=
          1e-5 * (1.0 + std::abs(oracle.objective)));
    ++solved;
  }
  CHECK(solved == 20);
}

TEST_CASE("the trace records non-increasing objectives and matches the outcome") {
  testutil::RandomLP rand = testutil::make_feasible_bounded_lp(7);
  SolveOutcome out = solve(rand.lp, rand.x_feasible, SolveOptions{});
  REQUIRE_FALSE(out.trace.empty());
  for (std::size_t i = 1; i < out.trace.size(); ++i)
    CHECK(out.trace[i].objective <= out.trace[i - 1].objective + 1e-12);
  CHECK(out.objective == doctest::Approx(out.trace.back().objective));
  CHECK(static_cast<int>(out.x_final.size()) == rand.lp.n);
}

TEST_CASE("solving is deterministic") {
  testutil::RandomLP rand = testutil::make_feasible_bounded_lp(31);
  SolveOutcome a = solve(rand.lp, rand.x_feasible, SolveOptions{});
  SolveOutcome b = solve(rand.lp, rand.x_feasible, SolveOptions{});
  CHECK(a.status == b.status);
  CHECK(a.objective == b.objective);
  CHECK(a.x_final == b.x_final);
  CHECK(a.trace == b.trace);
}

TEST_CASE("an improving ray is classified as unbounded by solver and oracle") {
  LPStandardForm lp = ray_lp();
  std::vector<double> x0{1.0, 1.0};
  SolveOutcome out = solve(lp, x0, SolveOptions{});
  CHECK(out.status == SolveStatus::unbounded);
  CHECK_THROWS_AS(oracle_solve(lp), UnboundedDetected);
}

TEST_CASE("a cost in the row space makes every feasible point optimal") {
  // c = A^T y means c.x = y.b on the feasible set; the direction vanishes.
  LPStandardForm lp;
  lp.m = 1;
  lp.n = 3;
  lp.triplets = {{0, 0, 1.0}, {0, 1, 2.0}, {0, 2, 1.0}};
  lp.b = {4.0};
  lp.c = {3.0, 6.0, 3.0};  // = A^T * 3
  std::vector<double> x0{1.0, 1.0, 1.0};
  SolveOutcome out = solve(lp, x0, SolveOptions{});
  CHECK(out.status == SolveStatus::converged);
  CHECK(out.objective == doctest::Approx(12.0));

  std::vector<double> delta = direction(lp, x0);
  double norm = 0.0;
  for (double v : delta) norm = std::max(norm, std::abs(v));
  CHECK(norm <= 1e-10);
}

TEST_CASE("bad starting points are rejected") {
  testutil::RandomLP rand = testutil::make_feasible_bounded_lp(55);
  std::vector<double> with_zero = rand.x_feasible;
  with_zero[0] = 0.0;
  CHECK_THROWS_AS(solve(rand.lp, with_zero, SolveOptions{}), InfeasibleStart);

  std::vector<double> off_manifold = rand.x_feasible;
  off_manifold[0] += 10.0;
  CHECK_THROWS_AS(solve(rand.lp, off_manifold, SolveOptions{}), InfeasibleStart);
}

TEST_CASE("directions stay in the constraint null space and do not increase cost") {
  for (std::uint64_t seed = 200; seed < 205; ++seed) {
    testutil::RandomLP rand = testutil::make_feasible_bounded_lp(seed);
    std::vector<double> delta = direction(rand.lp, rand.x_feasible);
    REQUIRE(static_cast<int>(delta.size()) == rand.lp.n);

    std::vector<double> adelta = apply_matrix(rand.lp, delta);
    double dmax = 0.0;
    for (double v : delta) dmax = std::max(dmax, std::abs(v));
    for (double v : adelta) CHECK(std::abs(v) <= 1e-9 * (1.0 + dmax));

    double cd = 0.0;
    for (int j = 0; j < rand.lp.n; ++j)
      cd += rand.lp.c[static_cast<std::size_t>(j)] * delta[static_cast<std::size_t>(j)];
    CHECK(cd <= 1e-9 * (1.0 + std::abs(objective_value(rand.lp, rand.x_feasible))));
  }
}

TEST_CASE("the ratio test matches hand-computed cases") {
  std::vector<double> x{1.0, 2.0, 4.0};
  std::vector<double> c{1.0, 1.0, 1.0};

  // Negative components: lambda = alpha * min(x_i / -delta_i) over them.
  std::vector<double> delta{-0.5, -4.0, 1.0};
  StepResult step = step_size(x, delta, 0.95, c);
  CHECK(step.kind == StepKind::step);
  CHECK(step.lambda == doctest::Approx(0.95 * 0.5));

  // No negative component, strictly decreasing cost: unbounded ray.
  std::vector<double> ray{1.0, 0.0, 0.0};
  std::vector<double> cost_down{-1.0, 0.0, 0.0};
  StepResult unb = step_size(x, ray, 0.95, cost_down);
  CHECK(unb.kind == StepKind::unbounded);

  // Vanishing direction: stationary.
  std::vector<double> zero{0.0, 0.0, 0.0};
  StepResult stat = step_size(x, zero, 0.95, c);
  CHECK(stat.kind == StepKind::stationary);
}

TEST_CASE("single iterations preserve positivity and decrease the objective") {
  testutil::RandomLP rand = testutil::make_feasible_bounded_lp(77);
  IPState state;
  state.x = rand.x_feasible;
  state.objective = objective_value(rand.lp, state.x);
  SolveOptions opts;
  double prev = state.objective;
  for (int i = 0; i < 10 && state.status == SolveStatus::running; ++i) {
    iterate(rand.lp, state, opts);
    for (double v : state.x) CHECK(v > 0.0);
    CHECK(state.objective <= prev + 1e-12);
    prev = state.objective;
  }
}

TEST_CASE("the model-structured path agrees with the generic factorization") {
  PointSample sample = testutil::make_sample(30, 8, 42);
  const int K = 5;
  LPStandardForm lp = build_lp(sample, K);
  Rng rng(9);
  std::vector<double> snake(static_cast<std::size_t>(K));
  for (double& v : snake) v = 0.3 + 0.6 * rng.uniform();
  std::vector<double> x0 = initial_point(lp, sample, snake, compute_R(sample));

  SolveOutcome structured = solve(lp, x0, SolveOptions{});

  // Dropping the column layout leaves the program intact but hides the
  // structure the specialized elimination requires, forcing the generic path.
  LPStandardForm generic_form = lp;
  generic_form.columns.reset();
  SolveOutcome generic = solve(generic_form, x0, SolveOptions{});

  CHECK(structured.status == SolveStatus::converged);
  CHECK(generic.status == SolveStatus::converged);
  CHECK(std::abs(structured.objective - generic.objective) <=
        1e-7 * (1.0 + std::abs(generic.objective)));
}

TEST_CASE("the oracle guards its size limit and classifies infeasibility") {
  testutil::RandomLP big = testutil::make_feasible_bounded_lp(5, 20, 4);
  if (big.lp.n > 14) {
    CHECK_THROWS_AS(oracle_solve(big.lp), TooLarge);
  }

  LPStandardForm infeasible;
  infeasible.m = 1;
  infeasible.n = 2;
  infeasible.triplets = {{0, 0, 1.0}, {0, 1, 1.0}};
  infeasible.b = {-1.0};
  infeasible.c = {1.0, 1.0};
  CHECK_THROWS_AS(oracle_solve(infeasible), InfeasibleProblem);
}

TEST_CASE("outcome JSON round-trips status, objective, and trace") {
  testutil::RandomLP rand = testutil::make_feasible_bounded_lp(13);
  SolveOutcome out = solve(rand.lp, rand.x_feasible, SolveOptions{});
  SolveOutcome back = outcome_from_json_string(outcome_to_json_string(out));
  CHECK(back.status == out.status);
  CHECK(back.objective == doctest::Approx(out.objective));
  REQUIRE(back.trace.size() == out.trace.size());
  for (std::size_t i = 0; i < out.trace.size(); ++i) {
    CHECK(back.trace[i].objective == doctest::Approx(out.trace[i].objective));
    CHECK(back.trace[i].step == doctest::Approx(out.trace[i].step));
  }
}

}  // TEST_SUITE
