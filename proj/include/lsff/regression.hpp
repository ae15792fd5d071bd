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

#ifndef LSFF_REGRESSION_HPP
#define LSFF_REGRESSION_HPP

// Quadratic OLS with region and model fixed effects:
//
//   y = b0 + b1 x + b2 x^2 + sum_r d_r [region = r] + sum_m g_m [model = m] + e
//
// Dummies are treatment coded against a reference level (lexicographically
// first unless overridden). The fit goes through a Householder QR of the
// design matrix; the coefficient covariance is s^2 (R'R)^-1 built from R.

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/distributions/students_t.hpp>

namespace lsff {

class RankDeficientError : public std::invalid_argument {
 public:
  explicit RankDeficientError(const std::string& column)
      : std::invalid_argument("rank-deficient design: column '" + column +
                              "' is collinear with the preceding columns"),
        column_(column) {}
  const std::string& column() const { return column_; }

 private:
  std::string column_;
};

struct RegressionOptions {
  bool quadratic = true;
  bool log10_x = false;
  std::optional<std::string> reference_region;
  std::optional<std::string> reference_model;
};

struct RegressionFit {
  std::vector<std::string> columns;
  Eigen::VectorXd coefficients;
  Eigen::MatrixXd covariance;
  Eigen::VectorXd fitted;
  Eigen::VectorXd residuals;
  double residual_variance = 0.0;
  std::size_t n = 0;
  RegressionOptions options;
  std::vector<std::string> regions;  // all levels, sorted; reference first in use
  std::vector<std::string> models;
  std::string reference_region;
  std::string reference_model;
  double x_min = 0.0;  // observed range of the raw predictor
  double x_max = 0.0;

  std::size_t parameters() const { return columns.size(); }
  double standard_error(std::size_t j) const { return std::sqrt(covariance(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j))); }
  double t_statistic(std::size_t j) const { return coefficients(static_cast<Eigen::Index>(j)) / standard_error(j); }
  double coefficient(const std::string& column) const {
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j] == column) return coefficients(static_cast<Eigen::Index>(j));
    }
    throw std::invalid_argument("no column " + column);
  }
};

namespace detail {

inline double transform_x(double x, const RegressionOptions& o) {
  if (!o.log10_x) return x;
  if (!(x > 0.0)) throw std::invalid_argument("log10 predictor needs x > 0");
  return std::log10(x);
}

inline Eigen::RowVectorXd design_row(double x, const std::string& region, const std::string& model,
                                     const RegressionFit& fit) {
  Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(static_cast<Eigen::Index>(fit.columns.size()));
  const double tx = transform_x(x, fit.options);
  Eigen::Index j = 0;
  row(j++) = 1.0;
  row(j++) = tx;
  if (fit.options.quadratic) row(j++) = tx * tx;
  for (const auto& r : fit.regions) {
    if (r == fit.reference_region) continue;
    row(j++) = region == r ? 1.0 : 0.0;
  }
  for (const auto& m : fit.models) {
    if (m == fit.reference_model) continue;
    row(j++) = model == m ? 1.0 : 0.0;
  }
  return row;
}

}  // namespace detail

inline RegressionFit fit_quadratic_fe(std::span<const double> y, std::span<const double> x,
                                      std::span<const std::string> regions, std::span<const std::string> models,
                                      const RegressionOptions& options = {}) {
  const std::size_t n = y.size();
  if (x.size() != n || regions.size() != n || models.size() != n) {
    throw std::invalid_argument("regression inputs differ in length");
  }
  if (n == 0) throw std::invalid_argument("regression needs observations");
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(y[i]) || !std::isfinite(x[i])) throw std::invalid_argument("non-finite regression input");
  }

  RegressionFit fit;
  fit.options = options;
  fit.n = n;
  {
    std::set<std::string> r(regions.begin(), regions.end());
    std::set<std::string> m(models.begin(), models.end());
    fit.regions.assign(r.begin(), r.end());
    fit.models.assign(m.begin(), m.end());
  }
  fit.reference_region = options.reference_region.value_or(fit.regions.front());
  fit.reference_model = options.reference_model.value_or(fit.models.front());
  if (std::find(fit.regions.begin(), fit.regions.end(), fit.reference_region) == fit.regions.end()) {
    throw std::invalid_argument("reference region " + fit.reference_region + " not present");
  }
  if (std::find(fit.models.begin(), fit.models.end(), fit.reference_model) == fit.models.end()) {
    throw std::invalid_argument("reference model " + fit.reference_model + " not present");
  }
  fit.columns = {"intercept", "x"};
  if (options.quadratic) fit.columns.push_back("x^2");
  for (const auto& r : fit.regions) {
    if (r != fit.reference_region) fit.columns.push_back("region[" + r + "]");
  }
  for (const auto& m : fit.models) {
    if (m != fit.reference_model) fit.columns.push_back("model[" + m + "]");
  }
  const std::size_t p = fit.columns.size();
  if (n <= p) {
    throw std::invalid_argument("regression needs more observations (" + std::to_string(n) + ") than parameters (" +
                                std::to_string(p) + ")");
  }

  const auto nn = static_cast<Eigen::Index>(n);
  const auto pp = static_cast<Eigen::Index>(p);
  Eigen::MatrixXd design(nn, pp);
  Eigen::VectorXd yv(nn);
  fit.x_min = x[0];
  fit.x_max = x[0];
  for (std::size_t i = 0; i < n; ++i) {
    design.row(static_cast<Eigen::Index>(i)) = detail::design_row(x[i], regions[i], models[i], fit);
    yv(static_cast<Eigen::Index>(i)) = y[i];
    fit.x_min = std::min(fit.x_min, x[i]);
    fit.x_max = std::max(fit.x_max, x[i]);
  }

  // Name the first column that adds no rank to the columns before it.
  for (Eigen::Index j = 1; j < pp; ++j) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design.leftCols(j + 1));
    qr.setThreshold(1e-10);
    if (qr.rank() < j + 1) throw RankDeficientError(fit.columns[static_cast<std::size_t>(j)]);
  }

  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(design);
  fit.coefficients = qr.solve(yv);
  fit.fitted = design * fit.coefficients;
  fit.residuals = yv - fit.fitted;
  fit.residual_variance = fit.residuals.squaredNorm() / static_cast<double>(n - p);
  const Eigen::MatrixXd r = qr.matrixQR().topRows(pp).triangularView<Eigen::Upper>();
  const Eigen::MatrixXd rinv =
      r.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(pp, pp));
  fit.covariance = fit.residual_variance * (rinv * rinv.transpose());
  return fit;
}

struct BandPoint {
  double x = 0.0;
  double fit = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double standard_error = 0.0;
  bool extrapolated = false;
};

// Pointwise mean prediction with a two-sided t confidence band.
inline std::vector<BandPoint> predict_with_band(const RegressionFit& fit, std::span<const double> grid,
                                                const std::string& region, const std::string& model,
                                                double level = 0.95) {
  if (!(level > 0.0 && level < 1.0)) throw std::invalid_argument("confidence level must be in (0, 1)");
  if (std::find(fit.regions.begin(), fit.regions.end(), region) == fit.regions.end()) {
    throw std::invalid_argument("unknown region " + region);
  }
  if (std::find(fit.models.begin(), fit.models.end(), model) == fit.models.end()) {
    throw std::invalid_argument("unknown model " + model);
  }
  const double dof = static_cast<double>(fit.n - fit.parameters());
  const boost::math::students_t dist(dof);
  const double t = boost::math::quantile(boost::math::complement(dist, (1.0 - level) / 2.0));
  std::vector<BandPoint> out;
  out.reserve(grid.size());
  for (double x : grid) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite grid point");
    const Eigen::RowVectorXd g = detail::design_row(x, region, model, fit);
    BandPoint b;
    b.x = x;
    b.fit = g.dot(fit.coefficients);
    b.standard_error = std::sqrt(std::max(0.0, (g * fit.covariance * g.transpose())(0, 0)));
    b.lower = b.fit - t * b.standard_error;
    b.upper = b.fit + t * b.standard_error;
    b.extrapolated = x < fit.x_min || x > fit.x_max;
    out.push_back(b);
  }
  return out;
}

}  // namespace lsff

#endif  // LSFF_REGRESSION_HPP
