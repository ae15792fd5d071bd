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

#ifndef LSFF_TABLES_HPP
#define LSFF_TABLES_HPP

// Result tables. Every numeric column name ends in a unit suffix from
// kUnitSuffixes; text columns carry none.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "lsff/analysis.hpp"
#include "lsff/csv.hpp"
#include "lsff/regression.hpp"

namespace lsff {

inline constexpr std::array<std::string_view, 11> kUnitSuffixes{
    "_ppp_day", "_pct_per_unit", "_pct", "_kcal_day", "_g_day", "_count", "_frac", "_mg_kg", "_ratio", "_flag", "_year"};

inline bool has_unit_suffix(std::string_view column) {
  for (auto s : kUnitSuffixes) {
    if (column.size() > s.size() && column.substr(column.size() - s.size()) == s) return true;
  }
  return false;
}

// Columns whose cells are all numbers but whose name has no unit suffix.
inline std::vector<std::string> unitless_numeric_columns(const Table& t) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < t.header.size(); ++j) {
    bool numeric = false;
    bool all = true;
    for (const auto& r : t.rows) {
      if (r[j].empty()) continue;
      if (parse_number(r[j])) numeric = true;
      else all = false;
    }
    if (numeric && all && !has_unit_suffix(t.header[j])) out.push_back(t.header[j]);
  }
  return out;
}

namespace detail {

inline std::string str(std::string_view s) { return std::string(s); }
inline std::string num(double v) { return format_number(v); }
inline std::string num(std::optional<double> v) { return format_number(v); }
inline std::string count(std::size_t n) { return std::to_string(n); }

inline std::vector<std::string> delta_header() {
  return {"country",           "region",           "subgroup",          "sex",
          "scenario",          "base_status",      "fort_status",       "cost_base_ppp_day",
          "cost_fort_ppp_day", "abs_change_ppp_day", "pct_change_pct", "error"};
}

inline std::vector<std::string> delta_cells(const DeltaRecord& r) {
  return {r.country,       r.region,          r.subgroup_id,      str(to_string(r.sex)),
          str(to_string(r.scenario)), lp::to_string(r.base_status), lp::to_string(r.fort_status),
          num(r.cost_base), num(r.cost_fort), num(r.abs_change), num(r.pct_change), r.error};
}

}  // namespace detail

inline Table delta_table(std::span<const DeltaRecord> records) {
  Table t{detail::delta_header(), {}};
  for (const auto& r : records) t.add(detail::delta_cells(r));
  return t;
}

// All decomposition runs stacked, keyed by the filter value.
inline Table decomposition_records_table(const Decomposition& d, const std::string& factor_column) {
  Table t;
  t.header = {factor_column};
  for (auto& h : detail::delta_header()) t.header.push_back(h);
  for (const auto& [factor, run] : d.runs) {
    for (const auto& r : run.records) {
      std::vector<std::string> row = {factor};
      for (auto& c : detail::delta_cells(r)) row.push_back(std::move(c));
      t.add(std::move(row));
    }
  }
  return t;
}

inline Table decomposition_median_table(const Decomposition& d, const std::string& factor_column) {
  Table t{{factor_column, "subgroup", "scenario", "median_change_pct", "n_countries_count"}, {}};
  for (const auto& m : d.medians) {
    t.add({m.factor, m.subgroup, detail::str(to_string(m.scenario)), detail::num(m.median_pct),
           detail::count(m.n_countries)});
  }
  return t;
}

inline Table summary_table(const SummaryResult& s) {
  Table t;
  t.header = s.fields;
  for (const char* h : {"n_count", "n_nonzero_count", "median_pct", "q25_pct", "q75_pct", "mean_pct",
                        "median_nonzero_pct", "q25_nonzero_pct", "q75_nonzero_pct", "share_reduced_frac",
                        "share_zero_frac", "share_increased_frac"}) {
    t.header.emplace_back(h);
  }
  for (const auto& st : s.stats) {
    std::vector<std::string> row = st.key;
    for (auto v : {detail::count(st.n), detail::count(st.n_nonzero), detail::num(st.median), detail::num(st.q25),
                   detail::num(st.q75), detail::num(st.mean), detail::num(st.median_nonzero),
                   detail::num(st.q25_nonzero), detail::num(st.q75_nonzero), detail::num(st.share_reduced),
                   detail::num(st.share_zero), detail::num(st.share_increased)}) {
      row.push_back(v);
    }
    t.add(std::move(row));
  }
  return t;
}

inline Table item_energy_table(std::span<const ItemEnergyChange> rows) {
  Table t{{"scenario", "subgroup", "item", "group", "mean_change_pct", "median_change_pct", "n_countries_count"}, {}};
  for (const auto& r : rows) {
    t.add({detail::str(to_string(r.scenario)), r.subgroup, r.item, detail::str(to_string(r.group)),
           detail::num(r.mean_change_pct), detail::num(r.median_change_pct), detail::count(r.n_countries)});
  }
  return t;
}

// `run` labels the solution set, e.g. "base" or "fort". Overall rows have
// subgroup "all".
inline Table group_ratio_table(const GroupEnergyRatioTable& g, const std::string& run, Table t = {}) {
  if (t.header.empty()) t.header = {"run", "scenario", "subgroup", "group", "energy_ratio", "n_count"};
  for (const auto* set : {&g.cells, &g.overall}) {
    for (const auto& r : *set) {
      t.add({run, detail::str(to_string(r.scenario)), r.subgroup.empty() ? "all" : r.subgroup,
             detail::str(to_string(r.group)), detail::num(r.ratio), detail::count(r.n)});
    }
  }
  return t;
}

inline Table country_table(std::span<const CountryScenarioRow> rows) {
  Table t{{"country", "region", "scenario", "median_change_pct", "median_cost_base_ppp_day", "intensity_mg_kg",
           "n_policies_count", "n_subgroups_count"},
          {}};
  for (const auto& r : rows) {
    t.add({r.country, r.region, detail::str(to_string(r.scenario)), detail::num(r.median_pct_change),
           detail::num(r.median_cost_base), detail::num(r.intensity_mg_per_kg), detail::count(r.n_policies),
           detail::count(r.n_subgroups)});
  }
  return t;
}

inline Table region_table(std::span<const RegionCostRow> rows) {
  Table t{{"region", "scenario", "median_base_ppp_day", "min_base_ppp_day", "max_base_ppp_day", "median_fort_ppp_day",
           "min_fort_ppp_day", "max_fort_ppp_day", "n_count"},
          {}};
  for (const auto& r : rows) {
    t.add({r.region, detail::str(to_string(r.scenario)), detail::num(r.median_base), detail::num(r.min_base),
           detail::num(r.max_base), detail::num(r.median_fort), detail::num(r.min_fort), detail::num(r.max_fort),
           detail::count(r.n)});
  }
  return t;
}

inline std::vector<std::string> basket_header() {
  return {"country",         "subgroup",        "scenario",          "item_id",          "item", "group",
          "grams_base_g_day", "grams_fort_g_day", "cost_base_ppp_day", "cost_fort_ppp_day"};
}

// Appends one cell's breakdown plus a "total" row.
inline void add_basket_rows(Table& t, const DietSolution& base, const BasketBreakdown& b) {
  const std::string scenario(to_string(base.scenario));
  for (const auto& l : b.lines) {
    t.add({base.country, base.subgroup_id, scenario, l.food_id, l.name, detail::str(to_string(l.group)),
           detail::num(l.grams_base), detail::num(l.grams_fort), detail::num(l.cost_base), detail::num(l.cost_fort)});
  }
  t.add({base.country, base.subgroup_id, scenario, "total", "", "", "", "", detail::num(b.total_base),
         detail::num(b.total_fort)});
}

// Predictor metadata for regression output.
enum class Predictor { kIntensity, kBaseline };

inline std::string_view to_string(Predictor p) { return p == Predictor::kIntensity ? "intensity" : "baseline"; }

inline std::optional<Predictor> parse_predictor(std::string_view s) {
  if (s == "intensity") return Predictor::kIntensity;
  if (s == "baseline") return Predictor::kBaseline;
  return std::nullopt;
}

inline std::string predictor_column(Predictor p) {
  return p == Predictor::kIntensity ? "intensity_mg_kg" : "baseline_cost_ppp_day";
}

inline Table regression_input_table(Predictor p, std::span<const CountryScenarioRow> rows) {
  Table t{{"country", "region", "model", predictor_column(p), "median_change_pct"}, {}};
  for (const auto& r : rows) {
    const double x = p == Predictor::kIntensity ? r.intensity_mg_per_kg : r.median_cost_base;
    t.add({r.country, r.region, detail::str(to_string(r.scenario)), detail::num(x), detail::num(r.median_pct_change)});
  }
  return t;
}

inline Table coefficient_table(Predictor p, const RegressionFit& fit, Table t = {}) {
  if (t.header.empty()) {
    t.header = {"predictor", "log10_x_flag", "term", "estimate_pct_per_unit", "std_error_pct_per_unit", "t_stat_ratio",
                "n_count", "residual_se_pct"};
  }
  for (std::size_t j = 0; j < fit.parameters(); ++j) {
    t.add({detail::str(to_string(p)), fit.options.log10_x ? "1" : "0", fit.columns[j],
           detail::num(fit.coefficients(static_cast<Eigen::Index>(j))), detail::num(fit.standard_error(j)),
           detail::num(fit.t_statistic(j)), detail::count(fit.n), detail::num(std::sqrt(fit.residual_variance))});
  }
  return t;
}

inline Table curve_table(Predictor p, const std::string& region, const std::string& model,
                         std::span<const BandPoint> band, Table t = {}) {
  if (t.header.empty()) {
    t.header = {"predictor", "region", "model", predictor_column(p), "fit_pct", "lower_pct", "upper_pct",
                "std_error_pct", "extrapolated_flag"};
  }
  for (const auto& b : band) {
    t.add({detail::str(to_string(p)), region, model, detail::num(b.x), detail::num(b.fit), detail::num(b.lower),
           detail::num(b.upper), detail::num(b.standard_error), b.extrapolated ? "1" : "0"});
  }
  return t;
}

}  // namespace lsff

#endif  // LSFF_TABLES_HPP
