// Copyright 2026 The LSFF Diet Cost Authors
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

#ifndef LSFF_LP_HPP
#define LSFF_LP_HPP

// Dense two-phase primal revised simplex for
//
//   min c'x  s.t.  a_i'x {<=,=,>=} b_i,  x >= 0.
//
// Rows are normalized to a non-negative right-hand side, slack/surplus
// columns are appended for inequalities, and artificial columns are added
// only where no slack can start in the basis. The basis inverse is kept
// explicitly and refreshed from an LU factorization at a fixed interval and
// once more at the end, so the returned primal/dual pair is recomputed from
// the final basis rather than accumulated through the pivots.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace lsff::lp {

enum class Sense { kLessEqual, kEqual, kGreaterEqual };

inline const char* to_string(Sense s) {
  switch (s) {
    case Sense::kLessEqual: return "<=";
    case Sense::kEqual: return "=";
    case Sense::kGreaterEqual: return ">=";
  }
  return "?";
}

struct Row {
  std::vector<double> coefficients;
  Sense sense = Sense::kGreaterEqual;
  double rhs = 0.0;
  std::string name;
};

struct LpModel {
  std::vector<double> objective;
  std::vector<Row> rows;
  std::vector<std::string> column_names;
  // Diagnostics attached by model builders, e.g. structurally infeasible
  // group rows. The solver ignores them.
  std::vector<std::string> warnings;

  std::size_t num_variables() const { return objective.size(); }
  std::size_t num_rows() const { return rows.size(); }

  void add_row(std::vector<double> coefficients, Sense sense, double rhs,
               std::string name = {}) {
    rows.push_back(Row{std::move(coefficients), sense, rhs, std::move(name)});
  }

  // Throws std::invalid_argument when the model is malformed.
  void validate() const {
    if (objective.empty()) throw std::invalid_argument("LP model has no variables");
    if (rows.empty()) throw std::invalid_argument("LP model has no rows");
    for (double c : objective) {
      if (!std::isfinite(c)) throw std::invalid_argument("non-finite objective coefficient");
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Row& r = rows[i];
      if (r.coefficients.size() != objective.size()) {
        throw std::invalid_argument("row " + std::to_string(i) + " has " +
                                    std::to_string(r.coefficients.size()) +
                                    " coefficients, expected " +
                                    std::to_string(objective.size()));
      }
      if (!std::isfinite(r.rhs)) {
        throw std::invalid_argument("non-finite right-hand side in row " + std::to_string(i));
      }
      for (double a : r.coefficients) {
        if (!std::isfinite(a)) {
          throw std::invalid_argument("non-finite coefficient in row " + std::to_string(i));
        }
      }
    }
  }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

inline const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal: return "Optimal";
    case LpStatus::kInfeasible: return "Infeasible";
    case LpStatus::kUnbounded: return "Unbounded";
  }
  return "?";
}

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  // Populated only when status is kOptimal.
  std::vector<double> x;
  std::optional<double> objective;
  std::vector<double> duals;          // one per row, original row orientation
  std::vector<double> reduced_costs;  // one per structural variable
  // Improving direction over the structural variables when kUnbounded.
  std::vector<double> ray;
  // Phase-1 optimum (sum of artificials) when kInfeasible.
  double infeasibility = 0.0;
  int iterations = 0;
  bool bland_engaged = false;

  bool optimal() const { return status == LpStatus::kOptimal; }
};

struct SolverOptions {
  double tol_feas = 1e-9;
  double tol_opt = 1e-9;
  int max_iterations = 20000;
  // Smallest |alpha| accepted as a pivot element in the ratio test.
  double pivot_tol = 1e-9;
  // Divide each row by its largest |coefficient| before solving.
  bool equilibrate = false;
  int refactor_interval = 50;
  // Degenerate pivots tolerated before switching permanently to Bland's
  // rule; a negative value means 3 * (n + m).
  int bland_after_degenerate = -1;
};

class IterationLimitError : public std::runtime_error {
 public:
  explicit IterationLimitError(int iterations)
      : std::runtime_error("iteration-limit: simplex exceeded " +
                           std::to_string(iterations) + " iterations"),
        iterations_(iterations) {}
  int iterations() const { return iterations_; }

 private:
  int iterations_;
};

namespace detail {

enum class ColumnKind { kStructural, kSlack, kArtificial };

class RevisedSimplex {
 public:
  RevisedSimplex(const LpModel& model, const SolverOptions& opts)
      : model_(model), opts_(opts) {
    n_ = model.num_variables();
    m_ = model.num_rows();
    build_standard_form();
  }

  LpSolution run() {
    LpSolution out;
    if (num_artificial_ > 0) {
      set_phase_costs(/*phase_one=*/true);
      const auto st = iterate(/*phase_one=*/true);
      (void)st;
      refactor();
      double infeasibility = 0.0;
      for (std::size_t i = 0; i < m_; ++i) {
        if (kind_[basis_[i]] == ColumnKind::kArtificial) infeasibility += std::max(0.0, xb_(i));
      }
      if (infeasibility > opts_.tol_feas) {
        out.status = LpStatus::kInfeasible;
        out.infeasibility = infeasibility;
        out.iterations = iterations_;
        out.bland_engaged = bland_;
        return out;
      }
      drive_out_artificials();
    }
    set_phase_costs(/*phase_one=*/false);
    if (iterate(/*phase_one=*/false) == PhaseResult::kUnbounded) {
      out.status = LpStatus::kUnbounded;
      out.ray = unbounded_ray_;
      out.iterations = iterations_;
      out.bland_engaged = bland_;
      return out;
    }
    finalize(out);
    return out;
  }

 private:
  enum class PhaseResult { kOptimal, kUnbounded };

  void build_standard_form() {
    row_factor_.assign(m_, 1.0);
    std::vector<Sense> sense(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      const Row& r = model_.rows[i];
      double scale = 1.0;
      if (opts_.equilibrate) {
        double mx = 0.0;
        for (double a : r.coefficients) mx = std::max(mx, std::abs(a));
        if (mx > 0.0) scale = 1.0 / mx;
      }
      double sign = r.rhs < 0.0 ? -1.0 : 1.0;
      row_factor_[i] = sign * scale;
      sense[i] = r.sense;
      if (sign < 0.0) {
        if (r.sense == Sense::kLessEqual) sense[i] = Sense::kGreaterEqual;
        else if (r.sense == Sense::kGreaterEqual) sense[i] = Sense::kLessEqual;
      }
    }

    std::size_t num_slack = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (sense[i] != Sense::kEqual) ++num_slack;
    }
    num_artificial_ = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (sense[i] != Sense::kLessEqual) ++num_artificial_;
    }
    cols_ = n_ + num_slack + num_artificial_;
    a_ = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m_), static_cast<Eigen::Index>(cols_));
    b_ = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m_));
    kind_.assign(cols_, ColumnKind::kStructural);
    basis_.assign(m_, 0);

    std::size_t next_slack = n_;
    std::size_t next_art = n_ + num_slack;
    for (std::size_t i = 0; i < m_; ++i) {
      const Row& r = model_.rows[i];
      const auto ii = static_cast<Eigen::Index>(i);
      for (std::size_t j = 0; j < n_; ++j) {
        a_(ii, static_cast<Eigen::Index>(j)) = row_factor_[i] * r.coefficients[j];
      }
      b_(ii) = row_factor_[i] * r.rhs;
      if (sense[i] != Sense::kEqual) {
        const double s = sense[i] == Sense::kLessEqual ? 1.0 : -1.0;
        a_(ii, static_cast<Eigen::Index>(next_slack)) = s;
        kind_[next_slack] = ColumnKind::kSlack;
        if (sense[i] == Sense::kLessEqual) basis_[i] = next_slack;
        ++next_slack;
      }
      if (sense[i] != Sense::kLessEqual) {
        a_(ii, static_cast<Eigen::Index>(next_art)) = 1.0;
        kind_[next_art] = ColumnKind::kArtificial;
        basis_[i] = next_art;
        ++next_art;
      }
    }
    in_basis_.assign(cols_, -1);
    for (std::size_t i = 0; i < m_; ++i) in_basis_[basis_[i]] = static_cast<long>(i);
    // The starting basis is a signed identity with all +1 entries.
    binv_ = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(m_), static_cast<Eigen::Index>(m_));
    xb_ = b_;
    cost_ = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(cols_));
  }

  void set_phase_costs(bool phase_one) {
    cost_.setZero();
    for (std::size_t j = 0; j < cols_; ++j) {
      if (phase_one) {
        if (kind_[j] == ColumnKind::kArtificial) cost_(static_cast<Eigen::Index>(j)) = 1.0;
      } else if (kind_[j] == ColumnKind::kStructural) {
        cost_(static_cast<Eigen::Index>(j)) = model_.objective[j];
      }
    }
  }

  Eigen::MatrixXd basis_matrix() const {
    Eigen::MatrixXd bm(static_cast<Eigen::Index>(m_), static_cast<Eigen::Index>(m_));
    for (std::size_t i = 0; i < m_; ++i) {
      bm.col(static_cast<Eigen::Index>(i)) = a_.col(static_cast<Eigen::Index>(basis_[i]));
    }
    return bm;
  }

  void refactor() {
    const Eigen::MatrixXd bm = basis_matrix();
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(bm);
    binv_ = lu.inverse();
    xb_ = lu.solve(b_);
    // One step of iterative refinement.
    const Eigen::VectorXd r = b_ - bm * xb_;
    xb_ += lu.solve(r);
  }

  Eigen::VectorXd duals_std() const {
    Eigen::VectorXd cb(static_cast<Eigen::Index>(m_));
    for (std::size_t i = 0; i < m_; ++i) cb(static_cast<Eigen::Index>(i)) = cost_(static_cast<Eigen::Index>(basis_[i]));
    return binv_.transpose() * cb;
  }

  bool eligible(std::size_t j, bool phase_one) const {
    if (in_basis_[j] >= 0) return false;
    // Artificials never re-enter once they have left, and are barred in phase 2.
    if (kind_[j] == ColumnKind::kArtificial) return false;
    (void)phase_one;
    return true;
  }

  PhaseResult iterate(bool phase_one) {
    const int degenerate_limit = opts_.bland_after_degenerate >= 0
                                     ? opts_.bland_after_degenerate
                                     : 3 * static_cast<int>(n_ + m_);
    if (degenerate_limit == 0) bland_ = true;
    int since_refactor = 0;
    while (true) {
      const Eigen::VectorXd y = duals_std();
      // Pricing.
      long entering = -1;
      double best = -opts_.tol_opt;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!eligible(j, phase_one)) continue;
        const auto jj = static_cast<Eigen::Index>(j);
        const double d = cost_(jj) - y.dot(a_.col(jj));
        if (d < best) {
          entering = static_cast<long>(j);
          if (bland_) break;
          best = d;
        }
      }
      if (entering < 0) return PhaseResult::kOptimal;

      const Eigen::VectorXd alpha = binv_ * a_.col(entering);

      // Ratio test.
      long leaving = -1;
      double theta = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m_; ++i) {
        const double ai = alpha(static_cast<Eigen::Index>(i));
        if (ai <= opts_.pivot_tol) continue;
        const double ratio = std::max(0.0, xb_(static_cast<Eigen::Index>(i))) / ai;
        if (ratio < theta) theta = ratio;
      }
      if (std::isinf(theta)) {
        if (!phase_one) {
          unbounded_ray_.assign(n_, 0.0);
          if (static_cast<std::size_t>(entering) < n_) unbounded_ray_[entering] = 1.0;
          for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) unbounded_ray_[basis_[i]] = -alpha(static_cast<Eigen::Index>(i));
          }
        }
        return PhaseResult::kUnbounded;
      }
      const double tie = 1e-12 * (1.0 + theta);
      for (std::size_t i = 0; i < m_; ++i) {
        const double ai = alpha(static_cast<Eigen::Index>(i));
        if (ai <= opts_.pivot_tol) continue;
        const double ratio = std::max(0.0, xb_(static_cast<Eigen::Index>(i))) / ai;
        if (ratio > theta + tie) continue;
        if (leaving < 0) {
          leaving = static_cast<long>(i);
        } else if (bland_ && basis_[i] < basis_[leaving]) {
          // Bland: smallest variable index among tied rows.
          leaving = static_cast<long>(i);
        }
      }

      if (++iterations_ > opts_.max_iterations) throw IterationLimitError(opts_.max_iterations);
      if (theta <= opts_.tol_feas) {
        if (++degenerate_pivots_ >= degenerate_limit) bland_ = true;
      }
      pivot(static_cast<std::size_t>(leaving), static_cast<std::size_t>(entering), alpha, theta);
      if (++since_refactor >= opts_.refactor_interval) {
        refactor();
        since_refactor = 0;
      }
    }
  }

  void pivot(std::size_t r, std::size_t q, const Eigen::VectorXd& alpha, double theta) {
    const auto rr = static_cast<Eigen::Index>(r);
    xb_ -= theta * alpha;
    xb_(rr) = theta;
    const double piv = alpha(rr);
    binv_.row(rr) /= piv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r) continue;
      const auto ii = static_cast<Eigen::Index>(i);
      const double f = alpha(ii);
      if (f != 0.0) binv_.row(ii) -= f * binv_.row(rr);
    }
    in_basis_[basis_[r]] = -1;
    basis_[r] = q;
    in_basis_[q] = static_cast<long>(r);
  }

  void drive_out_artificials() {
    for (std::size_t r = 0; r < m_; ++r) {
      if (kind_[basis_[r]] != ColumnKind::kArtificial) continue;
      const Eigen::RowVectorXd brow = binv_.row(static_cast<Eigen::Index>(r));
      long best_j = -1;
      double best_mag = 1e-7;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (in_basis_[j] >= 0 || kind_[j] == ColumnKind::kArtificial) continue;
        const double v = std::abs(brow.dot(a_.col(static_cast<Eigen::Index>(j))));
        if (v > best_mag) {
          best_mag = v;
          best_j = static_cast<long>(j);
        }
      }
      // No candidate means the row is redundant; the artificial stays basic at zero.
      if (best_j < 0) continue;
      const Eigen::VectorXd alpha = binv_ * a_.col(best_j);
      pivot(r, static_cast<std::size_t>(best_j), alpha, 0.0);
    }
    refactor();
  }

  void finalize(LpSolution& out) {
    refactor();
    out.status = LpStatus::kOptimal;
    out.iterations = iterations_;
    out.bland_engaged = bland_;
    out.x.assign(n_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) out.x[basis_[i]] = std::max(0.0, xb_(static_cast<Eigen::Index>(i)));
    }
    const Eigen::VectorXd y = duals_std();
    out.duals.assign(m_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) out.duals[i] = row_factor_[i] * y(static_cast<Eigen::Index>(i));
    out.reduced_costs.assign(n_, 0.0);
    double obj = 0.0;
    for (std::size_t j = 0; j < n_; ++j) {
      double d = model_.objective[j];
      for (std::size_t i = 0; i < m_; ++i) d -= model_.rows[i].coefficients[j] * out.duals[i];
      out.reduced_costs[j] = d;
      obj += model_.objective[j] * out.x[j];
    }
    out.objective = obj;
  }

  const LpModel& model_;
  SolverOptions opts_;
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t cols_ = 0;
  std::size_t num_artificial_ = 0;
  Eigen::MatrixXd a_;
  Eigen::VectorXd b_;
  Eigen::VectorXd cost_;
  Eigen::MatrixXd binv_;
  Eigen::VectorXd xb_;
  std::vector<ColumnKind> kind_;
  std::vector<std::size_t> basis_;
  std::vector<long> in_basis_;
  std::vector<double> row_factor_;
  std::vector<double> unbounded_ray_;
  int iterations_ = 0;
  int degenerate_pivots_ = 0;
  bool bland_ = false;
};

}  // namespace detail

// Solves the model. Returns Optimal/Infeasible/Unbounded; throws
// IterationLimitError when max_iterations is exceeded and
// std::invalid_argument on malformed input or non-positive tolerances.
inline LpSolution solve_lp(const LpModel& model, const SolverOptions& opts = {}) {
  model.validate();
  if (!(opts.tol_feas > 0.0) || !(opts.tol_opt > 0.0)) {
    throw std::invalid_argument("solver tolerances must be positive");
  }
  if (opts.max_iterations <= 0) throw std::invalid_argument("max_iterations must be positive");
  detail::RevisedSimplex simplex(model, opts);
  return simplex.run();
}

// |c'x - b'y| for an optimal solution.
inline double duality_gap(const LpModel& model, const LpSolution& sol) {
  if (!sol.optimal()) throw std::invalid_argument("duality gap requires an optimal solution");
  double primal = 0.0;
  for (std::size_t j = 0; j < model.num_variables(); ++j) primal += model.objective[j] * sol.x[j];
  double dual = 0.0;
  for (std::size_t i = 0; i < model.num_rows(); ++i) dual += model.rows[i].rhs * sol.duals[i];
  return std::abs(primal - dual);
}

// Largest row violation of x, measured in the row's own units.
inline double primal_residual(const LpModel& model, const std::vector<double>& x) {
  double worst = 0.0;
  for (double v : x) worst = std::max(worst, -v);
  for (const Row& r : model.rows) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += r.coefficients[j] * x[j];
    double viol = 0.0;
    switch (r.sense) {
      case Sense::kLessEqual: viol = lhs - r.rhs; break;
      case Sense::kGreaterEqual: viol = r.rhs - lhs; break;
      case Sense::kEqual: viol = std::abs(lhs - r.rhs); break;
    }
    worst = std::max(worst, viol);
  }
  return worst;
}

// Largest violation of dual feasibility: reduced costs must be >= 0, duals of
// <= rows <= 0 and duals of >= rows >= 0 (minimization convention).
inline double dual_residual(const LpModel& model, const LpSolution& sol) {
  double worst = 0.0;
  for (double d : sol.reduced_costs) worst = std::max(worst, -d);
  for (std::size_t i = 0; i < model.num_rows(); ++i) {
    if (model.rows[i].sense == Sense::kLessEqual) worst = std::max(worst, sol.duals[i]);
    if (model.rows[i].sense == Sense::kGreaterEqual) worst = std::max(worst, -sol.duals[i]);
  }
  return worst;
}

}  // namespace lsff::lp

#endif  // LSFF_LP_HPP
