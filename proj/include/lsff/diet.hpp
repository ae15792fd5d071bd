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

#ifndef LSFF_DIET_HPP
#define LSFF_DIET_HPP

// Least-cost diet model. One LP variable per food, measured in 100 g/day so
// that the objective coefficient is the price per 100 g and the constraint
// coefficients are the per-100 g composition.

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsff/lp.hpp"
#include "lsff/types.hpp"

namespace lsff {

struct DietItem {
  std::string food_id;
  std::string name;
  FoodGroup group = FoodGroup::kOther;
  double grams_per_day = 0.0;
  double cost_ppp_per_day = 0.0;
  double kcal_per_day = 0.0;
};

struct DietSolution {
  std::string country;
  std::string subgroup_id;
  ScenarioKind scenario = ScenarioKind::kCoNA;
  lp::LpStatus status = lp::LpStatus::kInfeasible;
  std::vector<DietItem> items;  // foods with positive quantity, input order
  double cost_ppp_per_day = 0.0;
  Composition nutrient_totals{};
  std::map<FoodGroup, double> group_energy;  // fine groups, kcal/day
  double lp_objective = 0.0;
  int iterations = 0;
  std::vector<std::string> warnings;
  std::string error;  // run error such as the iteration limit; empty when none

  bool optimal() const { return error.empty() && status == lp::LpStatus::kOptimal; }

  double grams(const std::string& food_id) const {
    for (const auto& it : items) {
      if (it.food_id == food_id) return it.grams_per_day;
    }
    return 0.0;
  }
};

namespace detail {

inline void require_single_country(std::span<const FoodItem> foods) {
  if (foods.empty()) throw std::invalid_argument("diet model needs at least one food");
  for (const auto& f : foods) {
    if (f.country != foods.front().country) {
      throw std::invalid_argument("foods span several countries: " + foods.front().country + ", " + f.country);
    }
  }
}

inline void add_group_row(lp::LpModel& model, std::span<const FoodItem> foods, FoodGroup group,
                          lp::Sense sense, double kcal) {
  std::vector<double> a(foods.size(), 0.0);
  bool any = false;
  for (std::size_t j = 0; j < foods.size(); ++j) {
    if (group_contains(group, foods[j].group)) {
      a[j] = foods[j].energy();
      any = true;
    }
  }
  if (!any && sense != lp::Sense::kLessEqual && kcal > 0.0) {
    model.warnings.push_back("structurally infeasible: no foods in group " + std::string(to_string(group)) +
                             " for a positive lower bound");
  }
  model.add_row(std::move(a), sense, kcal,
                "group:" + std::string(to_string(group)) + (sense == lp::Sense::kLessEqual ? "<=" : ">="));
}

}  // namespace detail

// Translates foods, requirements and a scenario into an LP.
inline lp::LpModel build_diet_lp(std::span<const FoodItem> foods, const RequirementSet& rs,
                                 const ScenarioSpec& scenario) {
  detail::require_single_country(foods);
  if (auto v = validate_requirement_set(rs); !v.empty()) {
    throw std::invalid_argument("invalid requirement set for " + rs.group.id + ": " + v.front().describe());
  }
  if (auto v = validate_scenario(scenario); !v.empty()) {
    throw std::invalid_argument("invalid scenario: " + v.front());
  }

  lp::LpModel model;
  model.objective.reserve(foods.size());
  for (const auto& f : foods) {
    model.objective.push_back(f.price_ppp_per_100g);
    model.column_names.push_back(f.id);
  }
  auto column = [&](NutrientId n) {
    std::vector<double> a(foods.size());
    for (std::size_t j = 0; j < foods.size(); ++j) a[j] = foods[j].amount(n);
    return a;
  };

  model.add_row(column(NutrientId::kEnergy), lp::Sense::kEqual, rs.energy_target(), "energy=");
  for (const auto& c : rs.constraints) {
    if (c.nutrient == NutrientId::kEnergy) continue;
    const std::string key(info(c.nutrient).key);
    if (auto lo = c.min_quantity()) model.add_row(column(c.nutrient), lp::Sense::kGreaterEqual, *lo, key + ">=");
    if (auto hi = c.max_quantity()) model.add_row(column(c.nutrient), lp::Sense::kLessEqual, *hi, key + "<=");
  }

  const double energy = rs.group.energy_kcal_per_day;
  switch (scenario.kind) {
    case ScenarioKind::kCoNA:
      break;
    case ScenarioKind::kCoNA_SSFV: {
      const auto scaled = scale_group_targets(scenario.hdb_targets, scenario.reference_energy_kcal, energy);
      for (FoodGroup g : {FoodGroup::kStarchyStaples, FoodGroup::kFruitsVegetables}) {
        detail::add_group_row(model, foods, g, lp::Sense::kGreaterEqual, scaled.at(g));
      }
      break;
    }
    case ScenarioKind::kCoNA_SUA: {
      const double factor =
          scenario.rescale_bounds_by_energy ? energy / scenario.reference_energy_kcal : 1.0;
      for (const auto& [g, b] : scenario.group_bounds) {
        detail::add_group_row(model, foods, g, lp::Sense::kGreaterEqual, b.lower * factor);
        detail::add_group_row(model, foods, g, lp::Sense::kLessEqual, b.upper * factor);
      }
      break;
    }
  }
  return model;
}

// Per fine group kcal/day of a solution. Unknown food ids are an error.
inline std::map<FoodGroup, double> compute_group_energy(const DietSolution& sol, std::span<const FoodItem> foods) {
  std::map<FoodGroup, double> out;
  for (FoodGroup g : kFineGroups) out[g] = 0.0;
  for (const auto& it : sol.items) {
    const FoodItem* food = nullptr;
    for (const auto& f : foods) {
      if (f.id == it.food_id) {
        food = &f;
        break;
      }
    }
    if (food == nullptr) throw std::invalid_argument("unknown food id " + it.food_id);
    out[food->group] += it.grams_per_day / 100.0 * food->energy();
  }
  return out;
}

// Energy of a (possibly combined) group from a fine-group map.
inline double group_total(const std::map<FoodGroup, double>& energy, FoodGroup group) {
  double s = 0.0;
  for (const auto& [g, kcal] : energy) {
    if (group_contains(group, g)) s += kcal;
  }
  return s;
}

// Builds and solves the diet LP. Infeasible/Unbounded propagate as status
// with no items; lp::IterationLimitError propagates to the caller.
inline DietSolution solve_diet(std::span<const FoodItem> foods, const RequirementSet& rs,
                               const ScenarioSpec& scenario, const lp::SolverOptions& opts = {}) {
  const lp::LpModel model = build_diet_lp(foods, rs, scenario);
  const lp::LpSolution lps = lp::solve_lp(model, opts);

  DietSolution sol;
  sol.country = foods.front().country;
  sol.subgroup_id = rs.group.id;
  sol.scenario = scenario.kind;
  sol.status = lps.status;
  sol.iterations = lps.iterations;
  sol.warnings = model.warnings;
  for (FoodGroup g : kFineGroups) sol.group_energy[g] = 0.0;
  if (!lps.optimal()) return sol;

  sol.lp_objective = *lps.objective;
  for (std::size_t j = 0; j < foods.size(); ++j) {
    const double units = lps.x[j];
    if (!(units > 0.0)) continue;
    const FoodItem& f = foods[j];
    DietItem it{f.id, f.name, f.group, units * 100.0, units * f.price_ppp_per_100g, units * f.energy()};
    sol.cost_ppp_per_day += it.cost_ppp_per_day;
    for (std::size_t k = 0; k < kNutrientCount; ++k) sol.nutrient_totals[k] += units * f.composition[k];
    sol.group_energy[f.group] += it.kcal_per_day;
    sol.items.push_back(std::move(it));
  }
  return sol;
}

}  // namespace lsff

#endif  // LSFF_DIET_HPP
