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

#ifndef LSFF_TESTS_SUPPORT_MINI_DATASET_HPP
#define LSFF_TESTS_SUPPORT_MINI_DATASET_HPP

// Small in-memory datasets for unit tests. Compositions are loosely
// realistic per 100 g; energy is 4 protein + 9 fat + 4 carbohydrate.

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "lsff/dataset.hpp"

namespace lsff::testing {

struct FoodSpec {
  std::string id;
  FoodGroup group;
  double price;
  double protein, fat, carb;
  std::vector<std::pair<NutrientId, double>> micros;
  std::optional<Vehicle> vehicle = std::nullopt;
  bool bread = false;
};

inline FoodItem make_food(const std::string& country, const FoodSpec& s) {
  FoodItem f;
  f.id = s.id;
  f.country = country;
  f.name = s.id;
  f.price_ppp_per_100g = s.price;
  f.group = s.group;
  f.vehicle = s.vehicle;
  f.bread = s.bread;
  f.composition[index(NutrientId::kProtein)] = s.protein;
  f.composition[index(NutrientId::kLipids)] = s.fat;
  f.composition[index(NutrientId::kCarbohydrate)] = s.carb;
  f.composition[index(NutrientId::kEnergy)] = 4.0 * s.protein + 9.0 * s.fat + 4.0 * s.carb;
  for (const auto& [n, v] : s.micros) f.composition[index(n)] = v;
  return f;
}

// A basket where iron and calcium are the expensive nutrients, so adding
// them to the staples lowers the least-cost diet.
inline std::vector<FoodSpec> basic_basket() {
  using N = NutrientId;
  return {
      {"wheat_flour", FoodGroup::kStarchyStaples, 0.10, 10.0, 1.5, 72.0, {{N::kIron, 1.2}, {N::kCalcium, 15}, {N::kZinc, 0.9}}, Vehicle::kWheatFlour},
      {"maize_flour", FoodGroup::kStarchyStaples, 0.08, 8.0, 3.5, 74.0, {{N::kIron, 1.0}, {N::kCalcium, 7}, {N::kZinc, 1.0}}, Vehicle::kMaizeFlour},
      {"rice", FoodGroup::kStarchyStaples, 0.12, 7.0, 0.6, 79.0, {{N::kIron, 0.8}, {N::kCalcium, 10}, {N::kZinc, 1.1}}, Vehicle::kRice},
      {"bread", FoodGroup::kStarchyStaples, 0.25, 9.0, 3.0, 49.0, {{N::kIron, 1.0}, {N::kCalcium, 30}, {N::kZinc, 0.7}}, std::nullopt, true},
      {"oil", FoodGroup::kOilsFats, 0.15, 0.0, 100.0, 0.0, {{N::kVitaminA, 0.0}}, Vehicle::kOil},
      {"beans", FoodGroup::kLegumesNutsSeeds, 0.30, 21.0, 1.2, 60.0, {{N::kIron, 5.0}, {N::kCalcium, 110}, {N::kZinc, 2.5}}},
      {"spinach", FoodGroup::kVegetables, 0.40, 2.9, 0.4, 3.6, {{N::kIron, 2.7}, {N::kCalcium, 99}, {N::kZinc, 0.5}}},
      {"mango", FoodGroup::kFruits, 0.35, 0.8, 0.4, 15.0, {{N::kIron, 0.2}, {N::kCalcium, 11}, {N::kZinc, 0.1}}},
      {"milk", FoodGroup::kAnimalSourceFoods, 0.20, 3.3, 3.3, 4.8, {{N::kIron, 0.05}, {N::kCalcium, 120}, {N::kZinc, 0.4}}},
      {"eggs", FoodGroup::kAnimalSourceFoods, 0.60, 12.6, 9.5, 0.7, {{N::kIron, 1.8}, {N::kCalcium, 56}, {N::kZinc, 1.3}}},
      {"sardines", FoodGroup::kAnimalSourceFoods, 0.90, 25.0, 11.0, 0.0, {{N::kIron, 2.9}, {N::kCalcium, 380}, {N::kZinc, 1.4}}},
      {"cabbage", FoodGroup::kVegetables, 0.15, 1.3, 0.1, 5.8, {{N::kIron, 0.5}, {N::kCalcium, 40}, {N::kZinc, 0.2}}},
  };
}

inline std::vector<FoodItem> basket_for(const std::string& country, double price_scale = 1.0) {
  std::vector<FoodItem> out;
  for (auto s : basic_basket()) {
    s.price *= price_scale;
    out.push_back(make_food(country, s));
  }
  return out;
}

inline SexAgeGroup make_group(const std::string& id, double energy, Sex sex = Sex::kFemale,
                              PhysiologicalStatus status = PhysiologicalStatus::kNone) {
  return {id, sex, 18.0, 29.0, status, energy};
}

// Requirements scaled with energy: protein 10-35 % of energy, fat 15-35 %,
// iron and calcium lower bounds, zinc upper bound.
inline RequirementSet make_requirements(const SexAgeGroup& g, double iron = 12.0, double calcium = 800.0,
                                        double zinc_ul = 40.0) {
  using N = NutrientId;
  RequirementSet rs;
  rs.group = g;
  const double e = g.energy_kcal_per_day;
  rs.constraints = {
      NutrientConstraint::Target(N::kEnergy, e),
      NutrientConstraint::Range(N::kProtein, 0.10 * e / 4.0, 0.35 * e / 4.0),
      NutrientConstraint::Range(N::kLipids, 0.15 * e / 9.0, 0.35 * e / 9.0),
      NutrientConstraint::Lower(N::kIron, iron),
      NutrientConstraint::Lower(N::kCalcium, calcium),
      NutrientConstraint::Upper(N::kZinc, zinc_ul),
  };
  return rs;
}

// Synthetic roster of 22 subgroups: two sexes over nine age bands plus
// pregnancy and lactation at two ages.
inline std::vector<RequirementSet> make_roster() {
  const std::vector<std::pair<double, double>> bands = {{4, 6}, {7, 9}, {10, 12}, {13, 15}, {16, 17},
                                                        {18, 29}, {30, 49}, {50, 69}, {70, 99}};
  const std::vector<double> male_energy = {1400, 1750, 2150, 2650, 2900, 2700, 2600, 2400, 2150};
  const std::vector<double> female_energy = {1300, 1600, 1950, 2250, 2300, 2150, 2100, 1950, 1750};
  std::vector<RequirementSet> out;
  for (int s = 0; s < 2; ++s) {
    for (std::size_t b = 0; b < bands.size(); ++b) {
      SexAgeGroup g;
      g.sex = s == 0 ? Sex::kMale : Sex::kFemale;
      g.age_min = bands[b].first;
      g.age_max = bands[b].second;
      g.energy_kcal_per_day = s == 0 ? male_energy[b] : female_energy[b];
      g.id = std::string(s == 0 ? "m" : "f") + std::to_string(static_cast<int>(g.age_min)) + "_" +
             std::to_string(static_cast<int>(g.age_max));
      const double iron = g.sex == Sex::kFemale && g.age_min >= 13 && g.age_min < 50 ? 15.0 : 9.0;
      out.push_back(make_requirements(g, iron, g.age_min < 18 && g.age_min >= 10 ? 1000.0 : 750.0));
    }
  }
  for (auto [status, tag] : {std::pair{PhysiologicalStatus::kPregnant, "preg"},
                             std::pair{PhysiologicalStatus::kLactating, "lact"}}) {
    for (auto [lo, hi] : {std::pair{14.0, 17.0}, std::pair{18.0, 49.0}}) {
      SexAgeGroup g{std::string(tag) + "_" + std::to_string(static_cast<int>(lo)), Sex::kFemale, lo, hi, status,
                    status == PhysiologicalStatus::kPregnant ? 2450.0 : 2650.0};
      out.push_back(make_requirements(g, status == PhysiologicalStatus::kPregnant ? 22.0 : 10.0, 1000.0));
    }
  }
  return out;
}

inline SuaSeries flat_series(const std::string& country, FoodGroup g, double lo, double hi) {
  SuaSeries s{country, g, {}};
  for (int y = kSuaFirstYear; y <= kSuaLastYear; ++y) {
    s.kcal_by_year[y] = lo + (hi - lo) * static_cast<double>(y - kSuaFirstYear) / (kSuaLastYear - kSuaFirstYear);
  }
  return s;
}

// Two countries, full roster, HDB and SUA data. `standards` selects which
// countries fortify: Aland fortifies wheat flour and maize flour with iron
// and calcium, Borduria has no standards.
inline Dataset mini_dataset(bool with_standards = true) {
  Dataset d;
  d.foods["Aland"] = basket_for("Aland");
  d.foods["Borduria"] = basket_for("Borduria", 1.3);
  d.requirements = make_roster();
  d.regions = {{"Aland", "North"}, {"Borduria", "South"}};
  d.hdb.reference_energy_kcal = 2330.0;
  d.hdb.targets_kcal = {{FoodGroup::kStarchyStaples, 1160.0},
                        {FoodGroup::kFruitsVegetables, 270.0},
                        {FoodGroup::kLegumesNutsSeeds, 300.0},
                        {FoodGroup::kAnimalSourceFoods, 300.0},
                        {FoodGroup::kOilsFats, 300.0}};
  for (const auto& c : {std::string("Aland"), std::string("Borduria")}) {
    d.sua.push_back(flat_series(c, FoodGroup::kStarchyStaples, 700, 1500));
    d.sua.push_back(flat_series(c, FoodGroup::kFruits, 20, 200));
    d.sua.push_back(flat_series(c, FoodGroup::kVegetables, 20, 200));
    d.sua.push_back(flat_series(c, FoodGroup::kLegumesNutsSeeds, 50, 400));
    d.sua.push_back(flat_series(c, FoodGroup::kAnimalSourceFoods, 100, 600));
  }
  if (with_standards) {
    d.standards = {
        {"Aland", Vehicle::kWheatFlour, NutrientId::kIron, 30.0, true},
        {"Aland", Vehicle::kWheatFlour, NutrientId::kCalcium, 1000.0, true},
        {"Aland", Vehicle::kMaizeFlour, NutrientId::kIron, 20.0, false},
    };
    d.premix = {{"Aland", Vehicle::kWheatFlour, 0.2}, {"Aland", Vehicle::kMaizeFlour, 0.1}};
  }
  return d;
}

}  // namespace lsff::testing

#endif  // LSFF_TESTS_SUPPORT_MINI_DATASET_HPP
