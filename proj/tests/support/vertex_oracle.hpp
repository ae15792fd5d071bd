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

#ifndef LSFF_TESTS_VERTEX_ORACLE_HPP
#define LSFF_TESTS_VERTEX_ORACLE_HPP

// Brute-force LP oracle: enumerates every intersection of n hyperplanes drawn
// from the constraint rows and the bounds x_j = 0, keeps the feasible ones and
// returns the cheapest. Shares nothing with the simplex code path.

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "lsff/lp.hpp"

namespace lsff::testing {

struct VertexResult {
  double objective = std::numeric_limits<double>::infinity();
  std::vector<double> x;
  long vertices_checked = 0;
};

inline bool vertex_feasible(const lp::LpModel& m, const Eigen::VectorXd& x, double tol) {
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    if (x(j) < -tol) return false;
  }
  for (const auto& r : m.rows) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < r.coefficients.size(); ++j) lhs += r.coefficients[j] * x(static_cast<Eigen::Index>(j));
    const double scale = tol * (1.0 + std::abs(r.rhs));
    if (r.sense == lp::Sense::kLessEqual && lhs > r.rhs + scale) return false;
    if (r.sense == lp::Sense::kGreaterEqual && lhs < r.rhs - scale) return false;
    if (r.sense == lp::Sense::kEqual && std::abs(lhs - r.rhs) > scale) return false;
  }
  return true;
}

// Returns nullopt when no feasible vertex exists.
inline std::optional<VertexResult> enumerate_vertices(const lp::LpModel& m, double tol = 1e-9) {
  const std::size_t n = m.num_variables();
  const std::size_t rows = m.num_rows();
  const std::size_t total = rows + n;  // rows first, then x_j = 0 planes
  std::vector<std::size_t> mandatory;
  std::vector<std::size_t> optional_planes;
  for (std::size_t i = 0; i < rows; ++i) {
    if (m.rows[i].sense == lp::Sense::kEqual) mandatory.push_back(i);
    else optional_planes.push_back(i);
  }
  for (std::size_t j = 0; j < n; ++j) optional_planes.push_back(rows + j);
  if (mandatory.size() > n) return std::nullopt;
  const std::size_t pick = n - mandatory.size();
  (void)total;

  VertexResult best;
  bool found = false;
  std::vector<std::size_t> idx(pick);
  for (std::size_t k = 0; k < pick; ++k) idx[k] = k;
  Eigen::MatrixXd a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  Eigen::VectorXd b(static_cast<Eigen::Index>(n));
  auto plane = [&](std::size_t p, Eigen::Index row) {
    if (p < rows) {
      for (std::size_t j = 0; j < n; ++j) a(row, static_cast<Eigen::Index>(j)) = m.rows[p].coefficients[j];
      b(row) = m.rows[p].rhs;
    } else {
      a.row(row).setZero();
      a(row, static_cast<Eigen::Index>(p - rows)) = 1.0;
      b(row) = 0.0;
    }
  };
  if (pick > optional_planes.size()) return std::nullopt;
  while (true) {
    Eigen::Index r = 0;
    for (std::size_t p : mandatory) plane(p, r++);
    for (std::size_t k = 0; k < pick; ++k) plane(optional_planes[idx[k]], r++);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    if (lu.isInvertible()) {
      const Eigen::VectorXd x = lu.solve(b);
      ++best.vertices_checked;
      if (vertex_feasible(m, x, tol)) {
        double obj = 0.0;
        for (std::size_t j = 0; j < n; ++j) obj += m.objective[j] * x(static_cast<Eigen::Index>(j));
        if (!found || obj < best.objective) {
          best.objective = obj;
          best.x.assign(x.data(), x.data() + x.size());
          found = true;
        }
      }
    }
    // Next combination.
    std::size_t k = pick;
    while (k > 0 && idx[k - 1] == optional_planes.size() - pick + (k - 1)) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t t = k; t < pick; ++t) idx[t] = idx[t - 1] + 1;
  }
  if (!found) return std::nullopt;
  return best;
}

}  // namespace lsff::testing

#endif  // LSFF_TESTS_VERTEX_ORACLE_HPP
