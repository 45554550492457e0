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

#include "snakelp/solver.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>

#include "snakelp/errors.hpp"
#include "snakelp/log.hpp"

namespace snakelp {

std::string_view status_name(SolveStatus status) {
  switch (status) {
    case SolveStatus::running:
      return "running";
    case SolveStatus::converged:
      return "converged";
    case SolveStatus::unbounded:
      return "unbounded";
    case SolveStatus::max_iterations:
      return "max_iterations";
    case SolveStatus::numerical_failure:
      return "numerical_failure";
  }
  return "running";
}

std::optional<SolveStatus> parse_status(std::string_view name) {
  if (name == "running") return SolveStatus::running;
  if (name == "converged") return SolveStatus::converged;
  if (name == "unbounded") return SolveStatus::unbounded;
  if (name == "max_iterations") return SolveStatus::max_iterations;
  if (name == "numerical_failure") return SolveStatus::numerical_failure;
  return std::nullopt;
}

void SolveOptions::validate() const {
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1), got " + std::to_string(alpha));
  }
  if (!(obj_tol > 0.0) || !(feas_tol > 0.0)) {
    throw std::invalid_argument("tolerances must be positive");
  }
  if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
  if (stall_window < 1) throw std::invalid_argument("stall_window must be >= 1");
}

namespace {

constexpr int kRegularizationAttempts = 4;
constexpr double kStationaryTol = 1e-13;
constexpr double kUnboundedTol = 1e-10;

/// Solves (A diag(w) A^T) y = rhs for strictly positive weights w, retrying
/// with escalating diagonal regularization before giving up.  After a
/// successful solve_weighted the factorization is retained, and resolve()
/// reuses it for further right-hand sides at the same weights.
class NormalSolver {
 public:
  virtual ~NormalSolver() = default;
  virtual void solve_weighted(const std::vector<double>& w, const std::vector<double>& rhs,
                              std::vector<double>& y) = 0;
  virtual bool resolve(const std::vector<double>& rhs, std::vector<double>& y) = 0;
};

/// Generic path: form the weighted Gram matrix explicitly and factor it with
/// a sparse LDLT using a fill-reducing ordering.  Structurally empty rows
/// are pruned up front (their y components are reported as zero).
class GenericNormal final : public NormalSolver {
 public:
  explicit GenericNormal(const LPStandardForm& lp) : rows_(lp.m) {
    std::vector<char> nonempty(static_cast<size_t>(lp.m), 0);
    for (const Triplet& tr : lp.triplets) nonempty[static_cast<size_t>(tr.row)] = 1;
    row_map_.assign(static_cast<size_t>(lp.m), -1);
    for (int i = 0; i < lp.m; ++i) {
      if (nonempty[static_cast<size_t>(i)]) row_map_[static_cast<size_t>(i)] = kept_++;
    }
    if (kept_ < lp.m) {
      log_warn("pruned " + std::to_string(lp.m - kept_) +
               " structurally empty constraint rows before factorization");
    }
    std::vector<Eigen::Triplet<double>> ts;
    ts.reserve(lp.triplets.size());
    for (const Triplet& tr : lp.triplets) {
      ts.emplace_back(row_map_[static_cast<size_t>(tr.row)], tr.col, tr.value);
    }
    A_.resize(kept_, lp.n);
    A_.setFromTriplets(ts.begin(), ts.end());
    At_ = A_.transpose();
  }

  void solve_weighted(const std::vector<double>& w, const std::vector<double>& rhs,
                      std::vector<double>& y) override {
    Eigen::SparseMatrix<double> scaled = A_;
    for (int j = 0; j < scaled.outerSize(); ++j) {
      for (Eigen::SparseMatrix<double>::InnerIterator it(scaled, j); it; ++it) {
        it.valueRef() *= w[static_cast<size_t>(j)];
      }
    }
    Eigen::SparseMatrix<double> gram = scaled * At_;

    double trace = 0.0;
    for (int i = 0; i < kept_; ++i) trace += gram.coeff(i, i);
    double base = 1e-10 * trace / static_cast<double>(std::max(1, kept_));
    if (!(base > 0.0) || !std::isfinite(base)) base = 1e-12;

    Eigen::SparseMatrix<double> identity(kept_, kept_);
    identity.setIdentity();

    double delta = 0.0;
    for (int attempt = 0; attempt < kRegularizationAttempts; ++attempt) {
      reg_ = gram;
      if (delta > 0.0) reg_ = gram + delta * identity;
      ldlt_.compute(reg_);
      if (ldlt_.info() == Eigen::Success) {
        factored_ = true;
        if (resolve(rhs, y)) return;
      }
      factored_ = false;
      delta = (delta == 0.0) ? base : delta * 10.0;
      log_debug("normal-equation factorization retry with regularization " + std::to_string(delta));
    }
    throw FactorizationFailure("normal equations stayed singular through diagonal regularization");
  }

  bool resolve(const std::vector<double>& rhs, std::vector<double>& y) override {
    if (!factored_) return false;
    Eigen::VectorXd r(kept_);
    for (int i = 0; i < rows_; ++i) {
      if (row_map_[static_cast<size_t>(i)] >= 0) r[row_map_[static_cast<size_t>(i)]] = rhs[static_cast<size_t>(i)];
    }
    Eigen::VectorXd sol = ldlt_.solve(r);
    // Two rounds of iterative refinement against the regularized matrix:
    // the weight spread squeezes most of the accuracy out of a single
    // factored solve late in an interior-point run.
    for (int round = 0; round < 2 && sol.allFinite(); ++round) {
      Eigen::VectorXd res = r - reg_.selfadjointView<Eigen::Upper>() * sol;
      sol += ldlt_.solve(res);
    }
    if (!sol.allFinite()) return false;
    y.assign(static_cast<size_t>(rows_), 0.0);
    for (int i = 0; i < rows_; ++i) {
      if (row_map_[static_cast<size_t>(i)] >= 0) y[static_cast<size_t>(i)] = sol[row_map_[static_cast<size_t>(i)]];
    }
    return true;
  }

 private:
  int rows_ = 0;
  int kept_ = 0;
  bool factored_ = false;
  std::vector<int> row_map_;
  Eigen::SparseMatrix<double> A_;
  Eigen::SparseMatrix<double> At_;
  Eigen::SparseMatrix<double> reg_;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt_;
};

/// Returns true when the LP carries the exact snake-model constraint
/// pattern its column layout describes, i.e. it was produced by build_lp
/// (or a faithful round-trip of one).
bool matches_model_pattern(const LPStandardForm& lp) {
  if (!lp.columns) return false;
  const VarColumns& cols = *lp.columns;
  const int T = cols.t_total();
  const int K = cols.k_total();
  if (lp.m != cols.num_rows() || lp.n != cols.num_cols()) return false;
  if (lp.triplets.size() != static_cast<size_t>(5) * K * T + static_cast<size_t>(T)) return false;
  for (const Triplet& tr : lp.triplets) {
    const VarColumns::VarId id = cols.decode(tr.col);
    if (tr.row < T) {
      const int t = tr.row;
      switch (id.kind) {
        case VarColumns::VarKind::a:
        case VarColumns::VarKind::b:
          if (id.t != t || tr.value != 1.0) return false;
          break;
        case VarColumns::VarKind::e:
          if (id.t != t || tr.value != -1.0) return false;
          break;
        case VarColumns::VarKind::p:
          return false;
      }
    } else {
      const int off = tr.row - T;
      const int t = off / K;
      const int k = off % K;
      switch (id.kind) {
        case VarColumns::VarKind::a:
          if (id.t != t || id.k != k || tr.value != 1.0) return false;
          break;
        case VarColumns::VarKind::b:
          if (id.t != t || id.k != k || tr.value != -1.0) return false;
          break;
        case VarColumns::VarKind::p:
          if (id.k != k || tr.value != 1.0) return false;
          break;
        case VarColumns::VarKind::e:
          return false;
      }
    }
  }
  return true;
}

/// Structure-aware path for model LPs.  With D = diag(w) the Gram matrix
/// splits as S + U C U^T: S couples each balance row only to its own T
/// value-match rows (an arrow block per sample point, solvable in O(K)),
/// and the snake columns contribute a rank-one block per snake point,
/// folded back in through a K x K capacitance system.  The generic
/// factorization is quadratic-to-cubic in the dense blocks those snake
/// columns create, which is why model LPs take this path.
class StructuredNormal final : public NormalSolver {
 public:
  explicit StructuredNormal(const LPStandardForm& lp)
      : lp_(&lp), cols_(*lp.columns), T_(cols_.t_total()), K_(cols_.k_total()) {
    smm_.resize(static_cast<size_t>(T_) * K_);
    sbm_.resize(static_cast<size_t>(T_) * K_);
    sbb_.resize(static_cast<size_t>(T_));
    schur_.resize(static_cast<size_t>(T_));
    z_.resize(static_cast<size_t>(T_) * K_ + T_);
    r2_.resize(static_cast<size_t>(T_) * K_ + T_);
  }

  void solve_weighted(const std::vector<double>& w, const std::vector<double>& rhs,
                      std::vector<double>& y) override {
    w_ = w;
    double trace = 0.0;
    for (int t = 0; t < T_; ++t) {
      double acc = 0.0;
      for (int k = 0; k < K_; ++k) {
        const double wa = w[static_cast<size_t>(cols_.col_a(t, k))];
        const double wb = w[static_cast<size_t>(cols_.col_b(t, k))];
        const size_t tk = static_cast<size_t>(t) * K_ + k;
        smm_[tk] = wa + wb;
        sbm_[tk] = wa - wb;
        acc += wa + wb;
      }
      sbb_[static_cast<size_t>(t)] = acc + w[static_cast<size_t>(cols_.col_e(t))];
      trace += sbb_[static_cast<size_t>(t)] + acc;
    }
    for (int k = 0; k < K_; ++k) {
      trace += static_cast<double>(T_) * w[static_cast<size_t>(cols_.col_p(k))];
    }
    double base = 1e-10 * trace / static_cast<double>(T_ * (K_ + 1));
    if (!(base > 0.0) || !std::isfinite(base)) base = 1e-12;

    double delta = 0.0;
    for (int attempt = 0; attempt < kRegularizationAttempts; ++attempt) {
      factored_ = try_factor(delta, w);
      if (factored_) {
        delta_ = delta;
        if (resolve(rhs, y)) return;
        factored_ = false;
      }
      delta = (delta == 0.0) ? base : delta * 10.0;
      log_debug("structured normal solve retry with regularization " + std::to_string(delta));
    }
    throw FactorizationFailure("structured normal equations stayed singular through regularization");
  }

  bool resolve(const std::vector<double>& rhs, std::vector<double>& y) override {
    if (!factored_) return false;
    if (!back_substitute(delta_, rhs, y)) return false;

    // Two rounds of iterative refinement against the regularized matrix,
    // reusing the factored blocks; the residual product runs over the raw
    // triplets, so it is exact for whatever matrix the LP actually holds.
    std::vector<double> res(rhs.size());
    std::vector<double> dy;
    for (int round = 0; round < 2; ++round) {
      std::vector<double> tmp(static_cast<size_t>(lp_->n), 0.0);
      for (const Triplet& tr : lp_->triplets) {
        tmp[static_cast<size_t>(tr.col)] += tr.value * y[static_cast<size_t>(tr.row)];
      }
      for (size_t j = 0; j < tmp.size(); ++j) tmp[j] *= w_[j];
      for (size_t i = 0; i < res.size(); ++i) res[i] = rhs[i] - delta_ * y[i];
      for (const Triplet& tr : lp_->triplets) {
        res[static_cast<size_t>(tr.row)] -= tr.value * tmp[static_cast<size_t>(tr.col)];
      }
      if (!back_substitute(delta_, res, dy)) return false;
      for (size_t i = 0; i < y.size(); ++i) y[i] += dy[i];
    }
    for (double v : y) {
      if (!std::isfinite(v)) return false;
    }
    return true;
  }

 private:
  /// z = S^{-1} r by per-block arrow elimination; expects schur_ filled for
  /// the current delta.
  void arrow_solve(double delta, const std::vector<double>& r, std::vector<double>& z) const {
    for (int t = 0; t < T_; ++t) {
      const size_t row_b = static_cast<size_t>(t);
      double acc = r[row_b];
      for (int k = 0; k < K_; ++k) {
        const size_t tk = static_cast<size_t>(t) * K_ + k;
        acc -= sbm_[tk] / (smm_[tk] + delta) * r[static_cast<size_t>(T_) + tk];
      }
      const double zb = acc / schur_[static_cast<size_t>(t)];
      z[row_b] = zb;
      for (int k = 0; k < K_; ++k) {
        const size_t tk = static_cast<size_t>(t) * K_ + k;
        z[static_cast<size_t>(T_) + tk] = (r[static_cast<size_t>(T_) + tk] - sbm_[tk] * zb) / (smm_[tk] + delta);
      }
    }
  }

  /// Back-substitutes one right-hand side through the factored arrow and
  /// capacitance blocks; expects schur_ and llt_ prepared for this delta.
  bool back_substitute(double delta, const std::vector<double>& r, std::vector<double>& out) {
    arrow_solve(delta, r, z_);
    Eigen::VectorXd q(K_);
    for (int k = 0; k < K_; ++k) {
      double acc = 0.0;
      for (int t = 0; t < T_; ++t) acc += z_[static_cast<size_t>(T_) + static_cast<size_t>(t) * K_ + k];
      q[k] = acc;
    }
    Eigen::VectorXd p = llt_.solve(q);
    if (!p.allFinite()) return false;

    for (int t = 0; t < T_; ++t) r2_[static_cast<size_t>(t)] = r[static_cast<size_t>(t)];
    for (int t = 0; t < T_; ++t) {
      for (int k = 0; k < K_; ++k) {
        const size_t row = static_cast<size_t>(T_) + static_cast<size_t>(t) * K_ + k;
        r2_[row] = r[row] - p[k];
      }
    }
    out.resize(r2_.size());
    arrow_solve(delta, r2_, out);
    for (double v : out) {
      if (!std::isfinite(v)) return false;
    }
    return true;
  }

  bool try_factor(double delta, const std::vector<double>& w) {
    for (int t = 0; t < T_; ++t) {
      double acc = sbb_[static_cast<size_t>(t)] + delta;
      for (int k = 0; k < K_; ++k) {
        const size_t tk = static_cast<size_t>(t) * K_ + k;
        const double diag = smm_[tk] + delta;
        if (!(diag > 0.0)) return false;
        acc -= sbm_[tk] * sbm_[tk] / diag;
      }
      if (!(acc > 0.0) || !std::isfinite(acc)) return false;
      schur_[static_cast<size_t>(t)] = acc;
    }

    // Capacitance H = C^{-1} + U^T S^{-1} U, with U^T S^{-1} U built from
    // the closed-form arrow inverse: a diagonal of summed match-row
    // reciprocals plus a rank-one contribution per sample point.
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(K_, K_);
    Eigen::VectorXd g(K_);
    for (int t = 0; t < T_; ++t) {
      for (int k = 0; k < K_; ++k) {
        const size_t tk = static_cast<size_t>(t) * K_ + k;
        g[k] = sbm_[tk] / (smm_[tk] + delta);
        H(k, k) += 1.0 / (smm_[tk] + delta);
      }
      H.selfadjointView<Eigen::Lower>().rankUpdate(g, 1.0 / schur_[static_cast<size_t>(t)]);
    }
    for (int k = 0; k < K_; ++k) {
      const double cap = w[static_cast<size_t>(cols_.col_p(k))];
      if (!(cap > 0.0)) return false;
      H(k, k) += 1.0 / cap;
    }

    llt_.compute(H.selfadjointView<Eigen::Lower>());
    return llt_.info() == Eigen::Success;
  }

  const LPStandardForm* lp_;
  VarColumns cols_;
  int T_ = 0;
  int K_ = 0;
  bool factored_ = false;
  double delta_ = 0.0;
  std::vector<double> w_;
  std::vector<double> smm_;
  std::vector<double> sbm_;
  std::vector<double> sbb_;
  std::vector<double> schur_;
  std::vector<double> z_;
  std::vector<double> r2_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
};

double max_abs(std::span<const double> v) {
  double worst = 0.0;
  for (double x : v) worst = std::max(worst, std::abs(x));
  return worst;
}

/// Per-solve workspace: the chosen normal-equation backend plus cached
/// vectors reused across iterations.
class SolverContext {
 public:
  explicit SolverContext(const LPStandardForm& lp) : lp_(&lp) {
    if (matches_model_pattern(lp)) {
      normal_ = std::make_unique<StructuredNormal>(lp);
    } else {
      normal_ = std::make_unique<GenericNormal>(lp);
    }
    b_inf_ = max_abs(lp.b);
    ones_.assign(static_cast<size_t>(lp.n), 1.0);
  }

  const LPStandardForm& lp() const { return *lp_; }
  double b_inf() const { return b_inf_; }

  std::vector<double> direction(std::span<const double> x) {
    const LPStandardForm& lp = *lp_;
    if (static_cast<int>(x.size()) != lp.n) {
      throw DimensionMismatch("x has " + std::to_string(x.size()) + " entries, expected " +
                              std::to_string(lp.n));
    }
    for (double v : x) {
      if (!(v > 0.0)) throw std::invalid_argument("direction requires strictly positive x");
    }
    std::vector<double> w(static_cast<size_t>(lp.n));
    for (int j = 0; j < lp.n; ++j) w[static_cast<size_t>(j)] = x[static_cast<size_t>(j)] * x[static_cast<size_t>(j)];

    std::vector<double> rhs(static_cast<size_t>(lp.m), 0.0);
    for (const Triplet& tr : lp.triplets) {
      rhs[static_cast<size_t>(tr.row)] += tr.value * w[static_cast<size_t>(tr.col)] * lp.c[static_cast<size_t>(tr.col)];
    }
    std::vector<double> y;
    normal_->solve_weighted(w, rhs, y);

    std::vector<double> s = lp.c;
    for (const Triplet& tr : lp.triplets) s[static_cast<size_t>(tr.col)] -= tr.value * y[static_cast<size_t>(tr.row)];
    std::vector<double> delta(static_cast<size_t>(lp.n));
    for (int j = 0; j < lp.n; ++j) delta[static_cast<size_t>(j)] = -w[static_cast<size_t>(j)] * s[static_cast<size_t>(j)];

    // The weighted solve degrades as the iterate squeezes against the
    // boundary (the weights span many orders of magnitude), leaving an
    // absolute error in A * delta that later gets magnified by the step
    // multiplier.  A final orthogonal projection through the unweighted
    // Gram matrix -- constant and well-conditioned, factored once -- pins
    // A * delta back to round-off regardless of how skewed the weights are.
    std::vector<double> ad(static_cast<size_t>(lp.m), 0.0);
    for (const Triplet& tr : lp.triplets) {
      ad[static_cast<size_t>(tr.row)] += tr.value * delta[static_cast<size_t>(tr.col)];
    }
    std::vector<double> d;
    if (unit_solve(ad, d)) {
      for (const Triplet& tr : lp.triplets) {
        delta[static_cast<size_t>(tr.col)] -= tr.value * d[static_cast<size_t>(tr.row)];
      }
    }
    return delta;
  }

  /// Best-effort pull of x back onto the equality manifold through the
  /// unweighted Gram solve.  Components the correction would push out of
  /// the interior keep their previous values: they are smaller than the
  /// correction itself, so retaining them perturbs feasibility below the
  /// round-off floor while positivity is preserved.  On any failure x is
  /// left untouched.
  void reproject(std::vector<double>& x) {
    const LPStandardForm& lp = *lp_;
    std::vector<double> r(static_cast<size_t>(lp.m), 0.0);
    for (const Triplet& tr : lp.triplets) r[static_cast<size_t>(tr.row)] += tr.value * x[static_cast<size_t>(tr.col)];
    for (int i = 0; i < lp.m; ++i) r[static_cast<size_t>(i)] -= lp.b[static_cast<size_t>(i)];
    double r_inf = max_abs(r);
    if (r_inf <= 1e-13 * (1.0 + b_inf_)) return;
    std::vector<double> d;
    if (!unit_solve(r, d)) return;
    std::vector<double> candidate = x;
    for (const Triplet& tr : lp.triplets) {
      candidate[static_cast<size_t>(tr.col)] -= tr.value * d[static_cast<size_t>(tr.row)];
    }
    for (size_t j = 0; j < candidate.size(); ++j) {
      if (!std::isfinite(candidate[j])) return;
      if (!(candidate[j] > 0.0)) candidate[j] = x[j];
    }
    if (feasibility_residual(lp, candidate) >= r_inf) return;
    x = std::move(candidate);
  }

  /// One least-squares pull back onto A x = b; false when the unweighted
  /// normal solve itself breaks down.
  bool correct_feasibility(std::vector<double>& x) {
    const LPStandardForm& lp = *lp_;
    std::vector<double> r(static_cast<size_t>(lp.m), 0.0);
    for (const Triplet& tr : lp.triplets) r[static_cast<size_t>(tr.row)] += tr.value * x[static_cast<size_t>(tr.col)];
    for (int i = 0; i < lp.m; ++i) r[static_cast<size_t>(i)] -= lp.b[static_cast<size_t>(i)];
    std::vector<double> y;
    if (!unit_solve(r, y)) return false;
    for (const Triplet& tr : lp.triplets) x[static_cast<size_t>(tr.col)] -= tr.value * y[static_cast<size_t>(tr.row)];
    return true;
  }

 private:
  /// Solves (A A^T) d = r, factoring the unweighted Gram matrix on first
  /// use and reusing that factorization afterwards.
  bool unit_solve(const std::vector<double>& r, std::vector<double>& d) {
    if (!unit_normal_) {
      std::unique_ptr<NormalSolver> fresh;
      if (matches_model_pattern(*lp_)) {
        fresh = std::make_unique<StructuredNormal>(*lp_);
      } else {
        fresh = std::make_unique<GenericNormal>(*lp_);
      }
      try {
        fresh->solve_weighted(ones_, r, d);
      } catch (const FactorizationFailure&) {
        return false;
      }
      unit_normal_ = std::move(fresh);
      return true;
    }
    return unit_normal_->resolve(r, d);
  }

  const LPStandardForm* lp_;
  std::unique_ptr<NormalSolver> normal_;
  std::unique_ptr<NormalSolver> unit_normal_;
  std::vector<double> ones_;
  double b_inf_ = 0.0;
};

/// Advances a running state by one step; returns the trace record when a
/// step was accepted, nullopt when the status transitioned instead.
std::optional<IterationRecord> iterate_with(SolverContext& ctx, IPState& state,
                                            const SolveOptions& opts) {
  if (state.status != SolveStatus::running) {
    throw std::logic_error("iterate requires a running state");
  }
  const LPStandardForm& lp = ctx.lp();

  std::vector<double> delta;
  try {
    delta = ctx.direction(state.x);
  } catch (const FactorizationFailure& e) {
    log_warn(std::string("direction solve failed: ") + e.what());
    state.status = SolveStatus::numerical_failure;
    return std::nullopt;
  }

  const StepResult sr = step_size(state.x, delta, opts.alpha, lp.c);
  if (sr.kind == StepKind::stationary) {
    state.status = SolveStatus::converged;
    return std::nullopt;
  }
  if (sr.kind == StepKind::unbounded) {
    state.status = SolveStatus::unbounded;
    return std::nullopt;
  }

  std::vector<double> next = state.x;
  for (size_t j = 0; j < next.size(); ++j) next[j] += sr.lambda * delta[j];
  for (double v : next) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      log_warn("step left the interior; reporting numerical failure");
      state.status = SolveStatus::numerical_failure;
      return std::nullopt;
    }
  }

  // Large step multipliers magnify whatever equality error the direction
  // solve left behind, so pull the iterate back onto the manifold while the
  // weighted factorization is still current.  The checked correction below
  // then only fires if this cheap pass could not contain the drift.
  ctx.reproject(next);

  const double feas_bound = opts.feas_tol * (1.0 + ctx.b_inf());
  if (feasibility_residual(lp, next) > feas_bound) {
    if (!ctx.correct_feasibility(next) || feasibility_residual(lp, next) > feas_bound) {
      log_warn("feasibility drift persisted after correction; reporting numerical failure");
      state.status = SolveStatus::numerical_failure;
      return std::nullopt;
    }
    for (double v : next) {
      if (!(v > 0.0) || !std::isfinite(v)) {
        log_warn("feasibility correction left the interior; reporting numerical failure");
        state.status = SolveStatus::numerical_failure;
        return std::nullopt;
      }
    }
  }

  double dnorm = 0.0;
  for (double v : delta) dnorm += v * v;
  dnorm = std::sqrt(dnorm);

  state.x = std::move(next);
  state.iter += 1;
  state.last_step = sr.lambda;
  state.objective = objective_value(lp, state.x);
  return IterationRecord{state.objective, sr.lambda, dnorm};
}

}  // namespace

std::vector<double> direction(const LPStandardForm& lp, std::span<const double> x) {
  lp.validate();
  SolverContext ctx(lp);
  return ctx.direction(x);
}

StepResult step_size(std::span<const double> x, std::span<const double> delta, double alpha,
                     std::span<const double> c) {
  if (x.size() != delta.size() || x.size() != c.size()) {
    throw DimensionMismatch("step_size requires x, delta, c of equal length");
  }
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1)");
  }

  double x_inf = 0.0;
  double d_inf = 0.0;
  double ratio = std::numeric_limits<double>::infinity();
  bool has_negative = false;
  for (size_t i = 0; i < x.size(); ++i) {
    x_inf = std::max(x_inf, std::abs(x[i]));
    d_inf = std::max(d_inf, std::abs(delta[i]));
    if (delta[i] < 0.0) {
      has_negative = true;
      ratio = std::min(ratio, x[i] / -delta[i]);
    }
  }
  if (d_inf <= kStationaryTol * (1.0 + x_inf)) return {StepKind::stationary, 0.0};
  if (has_negative) return {StepKind::step, alpha * ratio};

  double c_dot_delta = 0.0;
  double c_dot_x = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    c_dot_delta += c[i] * delta[i];
    c_dot_x += c[i] * x[i];
  }
  if (c_dot_delta < -kUnboundedTol * (1.0 + std::abs(c_dot_x))) {
    return {StepKind::unbounded, 0.0};
  }
  return {StepKind::stationary, 0.0};
}

void iterate(const LPStandardForm& lp, IPState& state, const SolveOptions& opts) {
  lp.validate();
  opts.validate();
  SolverContext ctx(lp);
  iterate_with(ctx, state, opts);
}

SolveOutcome solve(const LPStandardForm& lp, std::span<const double> x0,
                   const SolveOptions& opts) {
  lp.validate();
  opts.validate();
  if (static_cast<int>(x0.size()) != lp.n) {
    throw DimensionMismatch("x0 has " + std::to_string(x0.size()) + " entries, expected " +
                            std::to_string(lp.n));
  }
  for (double v : x0) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw InfeasibleStart("starting point must be strictly positive");
    }
  }

  SolverContext ctx(lp);
  const double feas_bound = opts.feas_tol * (1.0 + ctx.b_inf());
  if (feasibility_residual(lp, x0) > feas_bound) {
    throw InfeasibleStart("starting point violates the equality constraints beyond tolerance");
  }

  IPState state;
  state.x.assign(x0.begin(), x0.end());
  state.objective = objective_value(lp, state.x);
  state.status = SolveStatus::running;

  SolveOutcome outcome;
  double prev_objective = state.objective;
  int stall_count = 0;
  while (state.status == SolveStatus::running && state.iter < opts.max_iter) {
    const std::optional<IterationRecord> rec = iterate_with(ctx, state, opts);
    if (!rec) break;
    outcome.trace.push_back(*rec);
    const double change = std::abs(prev_objective - rec->objective);
    if (change <= opts.obj_tol * (1.0 + std::abs(prev_objective))) {
      if (++stall_count >= opts.stall_window) state.status = SolveStatus::converged;
    } else {
      stall_count = 0;
    }
    prev_objective = rec->objective;
  }
  if (state.status == SolveStatus::running) state.status = SolveStatus::max_iterations;

  outcome.x_final = std::move(state.x);
  outcome.objective = state.objective;
  outcome.status = state.status;
  log_info("solve finished: status " + std::string(status_name(outcome.status)) + ", objective " +
           std::to_string(outcome.objective) + ", " + std::to_string(outcome.trace.size()) +
           " iterations");
  return outcome;
}

}  // namespace snakelp
