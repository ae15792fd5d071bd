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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "lsff/lp.hpp"
#include "lsff/mps.hpp"
#include "support/random_lp.hpp"
#include "support/vertex_oracle.hpp"

namespace lsff::lp {
namespace {

LpModel two_variable_example() {
  // min 2x + 3y  s.t.  x + y >= 4,  x <= 3
  LpModel m;
  m.objective = {2.0, 3.0};
  m.add_row({1.0, 1.0}, Sense::kGreaterEqual, 4.0);
  m.add_row({1.0, 0.0}, Sense::kLessEqual, 3.0);
  return m;
}

TEST(SolveLp, SingleVariableBound) {
  LpModel m;
  m.objective = {2.0};
  m.add_row({1.0}, Sense::kGreaterEqual, 3.0);
  const LpSolution s = solve_lp(m);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.x[0], 3.0, 1e-12);
  EXPECT_NEAR(*s.objective, 6.0, 1e-12);
}

TEST(SolveLp, TwoVariableMatchesVertexOracle) {
  const LpModel m = two_variable_example();
  const auto oracle = testing::enumerate_vertices(m);
  ASSERT_TRUE(oracle.has_value());
  // Oracle-derived expectation, frozen: x = 3, y = 1, objective 9.
  EXPECT_NEAR(oracle->objective, 9.0, 1e-12);
  const LpSolution s = solve_lp(m);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.x[0], 3.0, 1e-12);
  EXPECT_NEAR(s.x[1], 1.0, 1e-12);
  EXPECT_NEAR(*s.objective, 9.0, 1e-12);
}

TEST(SolveLp, EmptyFeasibleSetIsInfeasible) {
  LpModel m;
  m.objective = {1.0};
  m.add_row({1.0}, Sense::kLessEqual, -1.0);
  const LpSolution s = solve_lp(m);
  EXPECT_EQ(s.status, LpStatus::kInfeasible);
  EXPECT_TRUE(s.x.empty());
  EXPECT_FALSE(s.objective.has_value());
  EXPECT_GT(s.infeasibility, 1e-9);
}

TEST(SolveLp, ImprovingRayIsUnbounded) {
  LpModel m;
  m.objective = {-1.0};
  m.add_row({0.0}, Sense::kLessEqual, 1.0);
  const LpSolution s = solve_lp(m);
  EXPECT_EQ(s.status, LpStatus::kUnbounded);
  EXPECT_FALSE(s.objective.has_value());
  ASSERT_EQ(s.ray.size(), 1u);
  EXPECT_GT(s.ray[0], 0.0);
}

TEST(SolveLp, UnboundedRayIsARecessionDirection) {
  // min -x - y  s.t.  x - y <= 1
  LpModel m;
  m.objective = {-1.0, -1.0};
  m.add_row({1.0, -1.0}, Sense::kLessEqual, 1.0);
  const LpSolution s = solve_lp(m);
  ASSERT_EQ(s.status, LpStatus::kUnbounded);
  const double cr = -s.ray[0] - s.ray[1];
  EXPECT_LT(cr, 0.0);
  EXPECT_LE(s.ray[0] - s.ray[1], 1e-12);
  EXPECT_GE(s.ray[0], -1e-12);
  EXPECT_GE(s.ray[1], -1e-12);
}

TEST(SolveLp, IterationLimitIsAnError) {
  SolverOptions opts;
  opts.max_iterations = 1;
  LpModel m;
  m.objective = {1.0, 1.0, 1.0};
  m.add_row({1.0, 2.0, 3.0}, Sense::kGreaterEqual, 6.0);
  m.add_row({3.0, 2.0, 1.0}, Sense::kGreaterEqual, 6.0);
  m.add_row({1.0, 1.0, 0.0}, Sense::kEqual, 2.0);
  EXPECT_THROW(solve_lp(m, opts), IterationLimitError);
}

TEST(SolveLp, RejectsNonFiniteInput) {
  LpModel m = two_variable_example();
  m.rows[0].coefficients[1] = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(solve_lp(m), std::invalid_argument);
  LpModel m2 = two_variable_example();
  m2.objective[0] = std::numeric_limits<double>::infinity();
  EXPECT_THROW(solve_lp(m2), std::invalid_argument);
  LpModel m3 = two_variable_example();
  m3.rows[1].coefficients.pop_back();
  EXPECT_THROW(solve_lp(m3), std::invalid_argument);
  SolverOptions bad;
  bad.tol_feas = 0.0;
  EXPECT_THROW(solve_lp(two_variable_example(), bad), std::invalid_argument);
}

TEST(DualityGap, HandComputedDuals) {
  // Active set {x + y >= 4, x <= 3}: y1 = 3 from column y, y2 = 2 - 3 = -1.
  const LpModel m = two_variable_example();
  const LpSolution s = solve_lp(m);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.duals[0], 3.0, 1e-12);
  EXPECT_NEAR(s.duals[1], -1.0, 1e-12);
  EXPECT_LE(duality_gap(m, s), 1e-9);
  EXPECT_NEAR(s.reduced_costs[0], 0.0, 1e-12);
  EXPECT_NEAR(s.reduced_costs[1], 0.0, 1e-12);
}

TEST(DualityGap, NonOptimalIsRejected) {
  LpModel m;
  m.objective = {1.0};
  m.add_row({1.0}, Sense::kLessEqual, -1.0);
  const LpSolution s = solve_lp(m);
  EXPECT_THROW(duality_gap(m, s), std::invalid_argument);
}

TEST(DualityGap, ScalesWithData) {
  LpModel m = two_variable_example();
  LpModel scaled = m;
  for (auto& c : scaled.objective) c *= 10.0;
  for (auto& r : scaled.rows) r.rhs *= 10.0;
  const LpSolution s = solve_lp(m);
  const LpSolution s10 = solve_lp(scaled);
  ASSERT_TRUE(s10.optimal());
  SolverOptions opts;
  EXPECT_LE(duality_gap(scaled, s10), 10.0 * opts.tol_opt);
  EXPECT_NEAR(*s10.objective, 100.0 * *s.objective, 1e-9);
}

TEST(SolveLp, EqualityRowsAndRedundancy) {
  // Duplicate equality rows leave an artificial basic at zero in phase 1.
  LpModel m;
  m.objective = {1.0, 2.0, 0.5};
  m.add_row({1.0, 1.0, 1.0}, Sense::kEqual, 10.0);
  m.add_row({2.0, 2.0, 2.0}, Sense::kEqual, 20.0);
  m.add_row({0.0, 1.0, 0.0}, Sense::kGreaterEqual, 2.0);
  const LpSolution s = solve_lp(m);
  ASSERT_TRUE(s.optimal());
  EXPECT_NEAR(*s.objective, 2.0 * 2.0 + 0.5 * 8.0, 1e-9);
  EXPECT_LE(primal_residual(m, s.x), 1e-9);
  EXPECT_LE(duality_gap(m, s), 1e-9);
}

TEST(SolveLp, EquilibrationGivesSameOptimum) {
  std::mt19937_64 rng(7);
  SolverOptions eq;
  eq.equilibrate = true;
  for (int t = 0; t < 200; ++t) {
    const LpModel m = testing::random_bounded_lp(rng);
    const LpSolution a = solve_lp(m);
    const LpSolution b = solve_lp(m, eq);
    ASSERT_EQ(a.status, b.status);
    if (a.optimal()) {
      EXPECT_NEAR(*a.objective, *b.objective, 1e-7);
      EXPECT_LE(duality_gap(m, b), 1e-9);
    }
  }
}

// Property: simplex agrees with exhaustive vertex enumeration on small LPs,
// and every optimum carries a valid primal/dual certificate.
TEST(SolveLpProperty, MatchesVertexEnumeration) {
  std::mt19937_64 rng(20260101);
  int optimal = 0;
  for (int t = 0; t < 600; ++t) {
    const LpModel m = testing::random_bounded_lp(rng);
    const auto oracle = testing::enumerate_vertices(m);
    const LpSolution s = solve_lp(m);
    if (!oracle) {
      EXPECT_EQ(s.status, LpStatus::kInfeasible) << "instance " << t;
      continue;
    }
    ASSERT_EQ(s.status, LpStatus::kOptimal) << "instance " << t;
    ++optimal;
    EXPECT_NEAR(*s.objective, oracle->objective, 1e-7) << "instance " << t;
    EXPECT_LE(primal_residual(m, s.x), 1e-9);
    EXPECT_LE(dual_residual(m, s), 1e-9);
    EXPECT_LE(duality_gap(m, s), 1e-9);
  }
  EXPECT_GT(optimal, 200);
}

TEST(SolveLpProperty, BlandRuleMatchesVertexEnumeration) {
  std::mt19937_64 rng(99);
  SolverOptions bland;
  bland.bland_after_degenerate = 0;
  for (int t = 0; t < 300; ++t) {
    const LpModel m = testing::random_bounded_lp(rng);
    const auto oracle = testing::enumerate_vertices(m);
    const LpSolution s = solve_lp(m, bland);
    if (!oracle) {
      EXPECT_EQ(s.status, LpStatus::kInfeasible);
      continue;
    }
    ASSERT_TRUE(s.optimal());
    EXPECT_TRUE(s.bland_engaged);
    EXPECT_NEAR(*s.objective, oracle->objective, 1e-7);
  }
}

TEST(SolveLpProperty, ObjectiveScaleEquivariance) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const LpModel m = testing::random_bounded_lp(rng);
    const LpSolution s = solve_lp(m);
    if (!s.optimal()) continue;
    const double lambda = 0.25 + 0.5 * (t % 7);
    LpModel scaled = m;
    for (auto& c : scaled.objective) c *= lambda;
    const LpSolution t2 = solve_lp(scaled);
    ASSERT_TRUE(t2.optimal());
    EXPECT_NEAR(*t2.objective, lambda * *s.objective, 1e-7 * (1.0 + lambda));
    // The original minimizer stays optimal for the scaled objective.
    double at_old = 0.0;
    for (std::size_t j = 0; j < s.x.size(); ++j) at_old += scaled.objective[j] * s.x[j];
    EXPECT_NEAR(at_old, *t2.objective, 1e-7 * (1.0 + lambda));
  }
}

TEST(SolveLpProperty, PermutationInvariance) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    const LpModel m = testing::random_bounded_lp(rng);
    const LpSolution s = solve_lp(m);
    std::vector<std::size_t> perm(m.num_variables());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    LpModel p = m;
    for (std::size_t j = 0; j < perm.size(); ++j) {
      p.objective[j] = m.objective[perm[j]];
      for (std::size_t i = 0; i < m.num_rows(); ++i) p.rows[i].coefficients[j] = m.rows[i].coefficients[perm[j]];
    }
    const LpSolution sp = solve_lp(p);
    ASSERT_EQ(s.status, sp.status);
    if (!s.optimal()) continue;
    EXPECT_NEAR(*s.objective, *sp.objective, 1e-7);
    // Permuted solution, mapped back, is optimal for the original model.
    std::vector<double> back(m.num_variables());
    for (std::size_t j = 0; j < perm.size(); ++j) back[perm[j]] = sp.x[j];
    EXPECT_LE(primal_residual(m, back), 1e-8);
    double obj = 0.0;
    for (std::size_t j = 0; j < back.size(); ++j) obj += m.objective[j] * back[j];
    EXPECT_NEAR(obj, *s.objective, 1e-7);
  }
}

// Klee-Minty style and heavily degenerate instances up to 50x50 must finish.
TEST(SolveLpProperty, TerminatesOnDegenerateInstances) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> small(0, 2);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 10 + static_cast<std::size_t>(t);
    LpModel m;
    m.objective.resize(n);
    for (auto& c : m.objective) c = -static_cast<double>(small(rng));
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> a(n);
      for (auto& v : a) v = static_cast<double>(small(rng));
      // Zero right-hand sides make every vertex at the origin degenerate.
      m.add_row(std::move(a), Sense::kLessEqual, i % 3 == 0 ? 1.0 : 0.0);
    }
    m.add_row(std::vector<double>(n, 1.0), Sense::kLessEqual, 5.0);
    SolverOptions opts;
    opts.max_iterations = 5000;
    const LpSolution s = solve_lp(m, opts);
    ASSERT_TRUE(s.optimal());
    EXPECT_LE(duality_gap(m, s), 1e-9);
  }
}

TEST(SolveLpProperty, KleeMintyCube) {
  for (int d = 2; d <= 10; ++d) {
    // max sum 2^(d-j) x_j  s.t.  2 sum_{k<j} 2^(j-k) x_k + x_j <= 5^j
    LpModel m;
    m.objective.resize(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) m.objective[static_cast<std::size_t>(j)] = -std::pow(2.0, d - 1 - j);
    for (int j = 0; j < d; ++j) {
      std::vector<double> a(static_cast<std::size_t>(d), 0.0);
      for (int k = 0; k < j; ++k) a[static_cast<std::size_t>(k)] = std::pow(2.0, j - k + 1);
      a[static_cast<std::size_t>(j)] = 1.0;
      m.add_row(std::move(a), Sense::kLessEqual, std::pow(5.0, j + 1));
    }
    const LpSolution s = solve_lp(m);
    ASSERT_TRUE(s.optimal());
    EXPECT_NEAR(*s.objective, -std::pow(5.0, d), 1e-6 * std::pow(5.0, d));
  }
}

TEST(WriteMps, FixedColumnLayout) {
  const LpModel m = two_variable_example();
  std::ostringstream os;
  write_mps(os, m, "TOY");
  const std::string expected =
      "NAME          TOY\n"
      "ROWS\n"
      " N  COST\n"
      " G  R0000001\n"
      " L  R0000002\n"
      "COLUMNS\n"
      "    C0000001  COST      2\n"
      "    C0000001  R0000001  1\n"
      "    C0000001  R0000002  1\n"
      "    C0000002  COST      3\n"
      "    C0000002  R0000001  1\n"
      "RHS\n"
      "    RHS       R0000001  4\n"
      "    RHS       R0000002  3\n"
      "ENDATA\n";
  EXPECT_EQ(os.str(), expected);
  // Field 3 starts at column 15, field 4 at column 25 (1-based).
  std::istringstream lines(os.str());
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind("    C", 0) == 0) {
      EXPECT_EQ(line.substr(14, 8).size(), 8u);
      EXPECT_NE(line[24], ' ');
      EXPECT_LE(line.size(), 36u);
    }
  }
}

TEST(WriteMps, NumbersFitTwelveCharacters) {
  LpModel m;
  m.objective = {1.0 / 3.0};
  m.add_row({-123456.789012345}, Sense::kEqual, 2.0e-17);
  std::ostringstream os;
  write_mps(os, m);
  std::istringstream lines(os.str());
  std::string line;
  while (std::getline(lines, line)) EXPECT_LE(line.size(), 36u) << line;
}

}  // namespace
}  // namespace lsff::lp
