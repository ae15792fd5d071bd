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

#ifndef LSFF_DATASET_HPP
#define LSFF_DATASET_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsff/fortify.hpp"
#include "lsff/stats.hpp"
#include "lsff/types.hpp"

namespace lsff {

inline constexpr int kSuaFirstYear = 2010;
inline constexpr int kSuaLastYear = 2022;

struct SuaSeries {
  std::string country;
  FoodGroup group = FoodGroup::kStarchyStaples;
  std::map<int, double> kcal_by_year;  // kcal/capita/day
};

// Interquartile range of the yearly supply values.
inline KcalBounds compute_sua_bounds(const SuaSeries& series) {
  if (series.kcal_by_year.empty()) {
    throw std::invalid_argument("empty SUA series for " + series.country + "/" + std::string(to_string(series.group)));
  }
  std::vector<double> v;
  v.reserve(series.kcal_by_year.size());
  for (const auto& [year, kcal] : series.kcal_by_year) v.push_back(kcal);
  return {percentile(v, 0.25), percentile(v, 0.75)};
}

// Reference intakes of the healthy diet basket at a reference energy level.
struct HdbConfig {
  double reference_energy_kcal = 0.0;
  std::map<FoodGroup, double> targets_kcal;  // keyed by report group

  double target(FoodGroup g) const {
    auto it = targets_kcal.find(g);
    return it == targets_kcal.end() ? 0.0 : it->second;
  }
  // Reference intake of `g` scaled to `energy` kcal/day.
  double scaled(FoodGroup g, double energy) const { return target(g) * energy / reference_energy_kcal; }
};

struct Dataset {
  std::map<std::string, std::vector<FoodItem>> foods;  // by country, file order
  std::vector<RequirementSet> requirements;            // roster order
  std::vector<FortificationStandard> standards;
  std::vector<PremixCost> premix;
  std::vector<SuaSeries> sua;
  std::map<std::string, std::string> regions;  // country -> region
  HdbConfig hdb;
  bool sua_rescale_by_energy = false;

  std::vector<std::string> countries() const {
    std::vector<std::string> out;
    for (const auto& [c, f] : foods) out.push_back(c);
    return out;
  }

  const std::vector<FoodItem>& foods_of(const std::string& country) const {
    auto it = foods.find(country);
    if (it == foods.end()) throw std::invalid_argument("unknown country " + country);
    return it->second;
  }

  const RequirementSet& requirement(const std::string& subgroup) const {
    for (const auto& r : requirements) {
      if (r.group.id == subgroup) return r;
    }
    throw std::invalid_argument("unknown subgroup " + subgroup);
  }

  std::string region_of(const std::string& country) const {
    auto it = regions.find(country);
    return it == regions.end() ? std::string("Unknown") : it->second;
  }

  // SUA series for a reporting group; fruits_vegetables sums the fruit and
  // vegetable series over the years both report.
  std::optional<SuaSeries> sua_series(const std::string& country, FoodGroup group) const {
    auto fine = [&](FoodGroup g) -> const SuaSeries* {
      for (const auto& s : sua) {
        if (s.country == country && s.group == g) return &s;
      }
      return nullptr;
    };
    if (group != FoodGroup::kFruitsVegetables) {
      if (const auto* s = fine(group)) return *s;
      return std::nullopt;
    }
    if (const auto* s = fine(FoodGroup::kFruitsVegetables)) return *s;
    const auto* f = fine(FoodGroup::kFruits);
    const auto* v = fine(FoodGroup::kVegetables);
    if (f == nullptr || v == nullptr) return std::nullopt;
    SuaSeries out{country, FoodGroup::kFruitsVegetables, {}};
    for (const auto& [year, kcal] : f->kcal_by_year) {
      auto it = v->kcal_by_year.find(year);
      if (it != v->kcal_by_year.end()) out.kcal_by_year[year] = kcal + it->second;
    }
    return out;
  }

  ScenarioSpec scenario_for(const std::string& country, ScenarioKind kind) const {
    switch (kind) {
      case ScenarioKind::kCoNA:
        return ScenarioSpec::CoNA();
      case ScenarioKind::kCoNA_SSFV:
        return ScenarioSpec::SSFV({{FoodGroup::kStarchyStaples, hdb.target(FoodGroup::kStarchyStaples)},
                                   {FoodGroup::kFruitsVegetables, hdb.target(FoodGroup::kFruitsVegetables)}},
                                  hdb.reference_energy_kcal);
      case ScenarioKind::kCoNA_SUA: {
        std::map<FoodGroup, KcalBounds> bounds;
        for (FoodGroup g : kSuaGroups) {
          auto series = sua_series(country, g);
          if (!series) throw std::invalid_argument("no SUA series for " + country + "/" + std::string(to_string(g)));
          bounds[g] = compute_sua_bounds(*series);
        }
        ScenarioSpec s = ScenarioSpec::SUA(std::move(bounds));
        s.rescale_bounds_by_energy = sua_rescale_by_energy;
        s.reference_energy_kcal = hdb.reference_energy_kcal;
        return s;
      }
    }
    throw std::invalid_argument("unknown scenario");
  }

  SelectedStandards selected_standards(const std::string& country, bool include_voluntary = true) const {
    return select_standards(standards, country, include_voluntary);
  }
};

}  // namespace lsff

#endif  // LSFF_DATASET_HPP
