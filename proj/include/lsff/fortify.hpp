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

#ifndef LSFF_FORTIFY_HPP
#define LSFF_FORTIFY_HPP

// Fortification scenario transform over one country's food list.
//
// Vehicle-tagged foods gain rate * level (mg/kg) / 10 per 100 g of every
// selected nutrient; bread gains bread_flour_share times the wheat-flour
// amounts. Premix cost (PPP/kg) is passed through to the price per 100 g,
// scaled by bread_flour_share for bread. Foods without a tag are untouched.

#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lsff/types.hpp"

namespace lsff {

struct FortifySpec {
  double implementation_rate = 0.9;
  std::optional<std::set<Vehicle>> vehicle_filter;
  std::optional<std::set<NutrientId>> nutrient_filter;
  double bread_flour_share = 0.75;
  bool include_voluntary = true;
  // Keep the unfortified item and add a fortified copy instead of replacing it.
  bool coexist = false;

  bool passes(Vehicle v) const { return !vehicle_filter || vehicle_filter->count(v) > 0; }
  bool passes(NutrientId n) const { return !nutrient_filter || nutrient_filter->count(n) > 0; }
};

inline std::vector<std::string> validate_fortify_spec(const FortifySpec& s) {
  std::vector<std::string> out;
  if (!(s.implementation_rate >= 0.0 && s.implementation_rate <= 1.0)) out.push_back("implementation rate must be in [0, 1]");
  if (!(s.bread_flour_share >= 0.0 && s.bread_flour_share <= 1.0)) out.push_back("bread flour share must be in [0, 1]");
  return out;
}

using StandardKey = std::pair<Vehicle, NutrientId>;
using SelectedStandards = std::map<StandardKey, double>;  // level in mg/kg

// One level per (vehicle, nutrient) for `country`: the lowest reported one.
inline SelectedStandards select_standards(std::span<const FortificationStandard> standards,
                                          const std::string& country, bool include_voluntary = true) {
  SelectedStandards out;
  for (const auto& s : standards) {
    if (s.country != country) continue;
    if (!s.mandatory && !include_voluntary) continue;
    const StandardKey key{s.vehicle, s.nutrient};
    auto it = out.find(key);
    if (it == out.end()) out.emplace(key, s.level_mg_per_kg);
    else if (s.level_mg_per_kg < it->second) it->second = s.level_mg_per_kg;
  }
  return out;
}

// Sum of all selected levels, mg/kg.
inline double policy_intensity(const SelectedStandards& selected) {
  double total = 0.0;
  for (const auto& [key, level] : selected) total += level;
  return total;
}

inline std::set<NutrientId> fortified_nutrients(const SelectedStandards& selected) {
  std::set<NutrientId> out;
  for (const auto& [key, level] : selected) out.insert(key.second);
  return out;
}

inline std::set<Vehicle> fortified_vehicles(const SelectedStandards& selected) {
  std::set<Vehicle> out;
  for (const auto& [key, level] : selected) out.insert(key.first);
  return out;
}

// Premix cost per vehicle for one country; duplicates or negative costs are an error.
inline std::map<Vehicle, double> premix_for_country(std::span<const PremixCost> premix, const std::string& country) {
  std::map<Vehicle, double> out;
  for (const auto& p : premix) {
    if (p.country != country) continue;
    if (!std::isfinite(p.cost_ppp_per_kg) || p.cost_ppp_per_kg < 0.0) {
      throw std::invalid_argument("premix cost for " + country + "/" + std::string(to_string(p.vehicle)) +
                                  " must be finite and >= 0");
    }
    if (!out.emplace(p.vehicle, p.cost_ppp_per_kg).second) {
      throw std::invalid_argument("duplicate premix cost for " + country + "/" + std::string(to_string(p.vehicle)));
    }
  }
  return out;
}

inline std::vector<FoodItem> apply_fortification(std::span<const FoodItem> foods, const SelectedStandards& selected,
                                                 const std::map<Vehicle, double>& premix, const FortifySpec& spec) {
  if (auto v = validate_fortify_spec(spec); !v.empty()) throw std::invalid_argument(v.front());
  for (const auto& [key, level] : selected) {
    if (!std::isfinite(level) || level < 0.0) throw std::invalid_argument("fortification level must be >= 0");
  }
  for (const auto& [v, cost] : premix) {
    if (!std::isfinite(cost) || cost < 0.0) throw std::invalid_argument("premix cost must be >= 0");
  }

  const double rate = spec.implementation_rate;
  std::vector<FoodItem> out(foods.begin(), foods.end());
  std::vector<FoodItem> copies;
  if (rate == 0.0) return out;

  auto premix_of = [&](Vehicle v) {
    auto it = premix.find(v);
    return it == premix.end() ? 0.0 : it->second;
  };

  for (std::size_t i = 0; i < out.size(); ++i) {
    FoodItem& food = spec.coexist ? copies.emplace_back(out[i]) : out[i];
    bool changed = false;
    if (food.vehicle && spec.passes(*food.vehicle)) {
      for (const auto& [key, level] : selected) {
        if (key.first != *food.vehicle || !spec.passes(key.second)) continue;
        food.composition[index(key.second)] += mg_per_kg_to_canonical_per_100g(key.second, rate * level);
        changed = true;
      }
      if (changed) food.price_ppp_per_100g += premix_of(*food.vehicle) / 10.0;
    } else if (food.bread && spec.passes(Vehicle::kWheatFlour)) {
      const double share = spec.bread_flour_share;
      for (const auto& [key, level] : selected) {
        if (key.first != Vehicle::kWheatFlour || !spec.passes(key.second)) continue;
        food.composition[index(key.second)] +=
            mg_per_kg_to_canonical_per_100g(key.second, share * rate * level);
        changed = true;
      }
      if (changed) food.price_ppp_per_100g += share * (premix_of(Vehicle::kWheatFlour) / 10.0);
    }
    if (spec.coexist) {
      if (changed) {
        food.id += "+fortified";
        food.name += " (fortified)";
      } else {
        copies.pop_back();
      }
    }
  }
  if (spec.coexist) out.insert(out.end(), copies.begin(), copies.end());
  return out;
}

}  // namespace lsff

#endif  // LSFF_FORTIFY_HPP
