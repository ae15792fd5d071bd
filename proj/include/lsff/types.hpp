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

#ifndef LSFF_TYPES_HPP
#define LSFF_TYPES_HPP

// Domain vocabulary: food groups, vehicles, nutrient constraints, sex-age
// subgroups, foods, fortification inputs and diet scenarios, together with
// the validation rules each of them must satisfy.

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lsff/nutrients.hpp"

namespace lsff {

// ---------------------------------------------------------------------------
// Food groups

enum class FoodGroup {
  kStarchyStaples,
  kFruits,
  kVegetables,
  kLegumesNutsSeeds,
  kAnimalSourceFoods,
  kOilsFats,
  kOther,
  // Derived: Fruits and Vegetables combined. Never assigned to a food.
  kFruitsVegetables,
};

inline constexpr std::array<FoodGroup, 7> kFineGroups{
    FoodGroup::kStarchyStaples, FoodGroup::kFruits,           FoodGroup::kVegetables,
    FoodGroup::kLegumesNutsSeeds, FoodGroup::kAnimalSourceFoods, FoodGroup::kOilsFats,
    FoodGroup::kOther};

// Groups constrained by the SUA scenario.
inline constexpr std::array<FoodGroup, 4> kSuaGroups{
    FoodGroup::kStarchyStaples, FoodGroup::kFruitsVegetables, FoodGroup::kLegumesNutsSeeds,
    FoodGroup::kAnimalSourceFoods};

// Groups with a reference intake in the healthy diet basket report tables.
inline constexpr std::array<FoodGroup, 5> kReportGroups{
    FoodGroup::kStarchyStaples, FoodGroup::kFruitsVegetables, FoodGroup::kLegumesNutsSeeds,
    FoodGroup::kAnimalSourceFoods, FoodGroup::kOilsFats};

inline std::string_view to_string(FoodGroup g) {
  switch (g) {
    case FoodGroup::kStarchyStaples: return "starchy_staples";
    case FoodGroup::kFruits: return "fruits";
    case FoodGroup::kVegetables: return "vegetables";
    case FoodGroup::kLegumesNutsSeeds: return "legumes_nuts_seeds";
    case FoodGroup::kAnimalSourceFoods: return "animal_source_foods";
    case FoodGroup::kOilsFats: return "oils_fats";
    case FoodGroup::kOther: return "other";
    case FoodGroup::kFruitsVegetables: return "fruits_vegetables";
  }
  return "?";
}

inline std::optional<FoodGroup> parse_food_group(std::string_view s) {
  for (FoodGroup g : {FoodGroup::kStarchyStaples, FoodGroup::kFruits, FoodGroup::kVegetables,
                      FoodGroup::kLegumesNutsSeeds, FoodGroup::kAnimalSourceFoods,
                      FoodGroup::kOilsFats, FoodGroup::kOther, FoodGroup::kFruitsVegetables}) {
    if (to_string(g) == s) return g;
  }
  return std::nullopt;
}

// True when fine group `fine` belongs to `group` (itself, or FV membership).
constexpr bool group_contains(FoodGroup group, FoodGroup fine) {
  if (group == fine) return true;
  return group == FoodGroup::kFruitsVegetables &&
         (fine == FoodGroup::kFruits || fine == FoodGroup::kVegetables);
}

// Group used when reporting a fine group against reference intakes.
constexpr FoodGroup report_group(FoodGroup fine) {
  if (fine == FoodGroup::kFruits || fine == FoodGroup::kVegetables) return FoodGroup::kFruitsVegetables;
  return fine;
}

// ---------------------------------------------------------------------------
// Fortification vehicles

enum class Vehicle { kWheatFlour, kMaizeFlour, kRice, kOil };

inline constexpr std::array<Vehicle, 4> kVehicles{Vehicle::kWheatFlour, Vehicle::kMaizeFlour,
                                                  Vehicle::kRice, Vehicle::kOil};

inline std::string_view to_string(Vehicle v) {
  switch (v) {
    case Vehicle::kWheatFlour: return "wheat_flour";
    case Vehicle::kMaizeFlour: return "maize_flour";
    case Vehicle::kRice: return "rice";
    case Vehicle::kOil: return "oil";
  }
  return "?";
}

inline std::optional<Vehicle> parse_vehicle(std::string_view s) {
  for (Vehicle v : kVehicles) {
    if (to_string(v) == s) return v;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Nutrient constraints

enum class ConstraintKind { kTarget, kRange, kLowerBound, kUpperBound };

inline std::string_view to_string(ConstraintKind k) {
  switch (k) {
    case ConstraintKind::kTarget: return "target";
    case ConstraintKind::kRange: return "range";
    case ConstraintKind::kLowerBound: return "lower";
    case ConstraintKind::kUpperBound: return "upper";
  }
  return "?";
}

inline std::optional<ConstraintKind> parse_constraint_kind(std::string_view s) {
  for (ConstraintKind k : {ConstraintKind::kTarget, ConstraintKind::kRange,
                           ConstraintKind::kLowerBound, ConstraintKind::kUpperBound}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

// Daily quantities are in the nutrient's canonical unit.
struct NutrientConstraint {
  NutrientId nutrient = NutrientId::kEnergy;
  ConstraintKind kind = ConstraintKind::kLowerBound;
  std::optional<double> lower;
  std::optional<double> upper;
  std::optional<double> target;

  static NutrientConstraint Target(NutrientId n, double t) { return {n, ConstraintKind::kTarget, {}, {}, t}; }
  static NutrientConstraint Range(NutrientId n, double lo, double hi) {
    return {n, ConstraintKind::kRange, lo, hi, {}};
  }
  static NutrientConstraint Lower(NutrientId n, double lo) { return {n, ConstraintKind::kLowerBound, lo, {}, {}}; }
  static NutrientConstraint Upper(NutrientId n, double hi) { return {n, ConstraintKind::kUpperBound, {}, hi, {}}; }

  // Effective lower/upper limits implied by the constraint.
  std::optional<double> min_quantity() const { return kind == ConstraintKind::kTarget ? target : lower; }
  std::optional<double> max_quantity() const { return kind == ConstraintKind::kTarget ? target : upper; }
};

struct Violation {
  std::optional<NutrientId> nutrient;
  std::string rule;

  std::string describe() const {
    return nutrient ? std::string(info(*nutrient).key) + ": " + rule : rule;
  }
};

inline std::vector<Violation> validate_constraint(const NutrientConstraint& c) {
  std::vector<Violation> out;
  auto bad = [&](std::string r) { out.push_back({c.nutrient, std::move(r)}); };
  switch (c.kind) {
    case ConstraintKind::kTarget:
      if (!c.target) bad("target absent");
      if (c.lower || c.upper) bad("target constraint must not carry bounds");
      break;
    case ConstraintKind::kRange:
      if (!c.lower || !c.upper) bad("range needs lower and upper");
      else if (*c.lower > *c.upper) bad("lower > upper");
      if (c.target) bad("range must not carry a target");
      break;
    case ConstraintKind::kLowerBound:
      if (!c.lower) bad("lower bound absent");
      if (c.upper || c.target) bad("lower-bound constraint carries extra values");
      break;
    case ConstraintKind::kUpperBound:
      if (!c.upper) bad("upper bound absent");
      if (c.lower || c.target) bad("upper-bound constraint carries extra values");
      break;
  }
  for (const auto& v : {c.lower, c.upper, c.target}) {
    if (v && (!std::isfinite(*v) || *v < 0.0)) {
      bad("quantities must be finite and >= 0");
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sex-age subgroups and requirements

enum class Sex { kMale, kFemale };
enum class PhysiologicalStatus { kNone, kPregnant, kLactating };

inline std::string_view to_string(Sex s) { return s == Sex::kMale ? "male" : "female"; }
inline std::optional<Sex> parse_sex(std::string_view s) {
  if (s == "male") return Sex::kMale;
  if (s == "female") return Sex::kFemale;
  return std::nullopt;
}
inline std::string_view to_string(PhysiologicalStatus s) {
  switch (s) {
    case PhysiologicalStatus::kNone: return "none";
    case PhysiologicalStatus::kPregnant: return "pregnant";
    case PhysiologicalStatus::kLactating: return "lactating";
  }
  return "?";
}
inline std::optional<PhysiologicalStatus> parse_status(std::string_view s) {
  if (s == "none") return PhysiologicalStatus::kNone;
  if (s == "pregnant") return PhysiologicalStatus::kPregnant;
  if (s == "lactating") return PhysiologicalStatus::kLactating;
  return std::nullopt;
}

inline constexpr std::size_t kRosterSize = 22;
inline constexpr double kMinimumAgeYears = 4.0;

struct SexAgeGroup {
  std::string id;
  Sex sex = Sex::kFemale;
  double age_min = 0.0;  // years, inclusive
  double age_max = 0.0;  // years, inclusive
  PhysiologicalStatus status = PhysiologicalStatus::kNone;
  double energy_kcal_per_day = 0.0;
};

struct RequirementSet {
  SexAgeGroup group;
  std::vector<NutrientConstraint> constraints;

  const NutrientConstraint* find(NutrientId n) const {
    for (const auto& c : constraints) {
      if (c.nutrient == n) return &c;
    }
    return nullptr;
  }

  // Daily energy from the energy target constraint, falling back to the
  // subgroup's energy requirement.
  double energy_target() const {
    const auto* e = find(NutrientId::kEnergy);
    if (e && e->kind == ConstraintKind::kTarget && e->target) return *e->target;
    return group.energy_kcal_per_day;
  }
};

// Empty report iff the set is well formed.
inline std::vector<Violation> validate_requirement_set(const RequirementSet& rs) {
  std::vector<Violation> out;
  std::set<NutrientId> seen;
  int targets = 0;
  for (const auto& c : rs.constraints) {
    if (!seen.insert(c.nutrient).second) out.push_back({c.nutrient, "duplicate nutrient"});
    if (c.kind == ConstraintKind::kTarget) {
      ++targets;
      if (c.nutrient != NutrientId::kEnergy) out.push_back({c.nutrient, "only energy may be a target"});
    }
    for (auto& v : validate_constraint(c)) out.push_back(std::move(v));
  }
  const auto* energy = rs.find(NutrientId::kEnergy);
  if (energy == nullptr || energy->kind != ConstraintKind::kTarget) {
    out.push_back({NutrientId::kEnergy, "energy target absent"});
  }
  if (targets > 1) out.push_back({std::nullopt, "more than one target constraint"});
  if (!(rs.group.energy_kcal_per_day > 0.0)) out.push_back({NutrientId::kEnergy, "subgroup energy must be > 0"});
  return out;
}

inline std::vector<std::string> validate_roster(const std::vector<SexAgeGroup>& groups) {
  std::vector<std::string> out;
  if (groups.size() != kRosterSize) {
    out.push_back("roster has " + std::to_string(groups.size()) + " subgroups, expected " +
                  std::to_string(kRosterSize));
  }
  std::set<std::string> ids;
  for (const auto& g : groups) {
    if (!ids.insert(g.id).second) out.push_back("duplicate subgroup " + g.id);
    if (g.age_min < kMinimumAgeYears) out.push_back("subgroup " + g.id + " is younger than 4 years");
    if (g.age_max < g.age_min) out.push_back("subgroup " + g.id + " has age_max < age_min");
    if (!(g.energy_kcal_per_day > 0.0)) out.push_back("subgroup " + g.id + " has non-positive energy");
    if (g.status != PhysiologicalStatus::kNone && g.sex != Sex::kFemale) {
      out.push_back("subgroup " + g.id + " is pregnant/lactating but not female");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Foods and fortification inputs

struct FoodItem {
  std::string id;
  std::string country;
  std::string name;
  double price_ppp_per_100g = 0.0;
  FoodGroup group = FoodGroup::kOther;
  std::optional<Vehicle> vehicle;
  bool bread = false;
  Composition composition{};  // per 100 g edible portion

  double energy() const { return composition[index(NutrientId::kEnergy)]; }
  double amount(NutrientId n) const { return composition[index(n)]; }

  friend bool operator==(const FoodItem&, const FoodItem&) = default;
};

inline std::vector<std::string> validate_food(const FoodItem& f) {
  std::vector<std::string> out;
  const std::string who = "food " + f.id + ": ";
  if (!std::isfinite(f.price_ppp_per_100g) || f.price_ppp_per_100g < 0.0) out.push_back(who + "price must be finite and >= 0");
  if (!(f.energy() > 0.0)) out.push_back(who + "energy must be > 0");
  for (std::size_t i = 0; i < kNutrientCount; ++i) {
    if (!std::isfinite(f.composition[i]) || f.composition[i] < 0.0) {
      out.push_back(who + std::string(kNutrients[i].key) + " must be finite and >= 0");
    }
  }
  if (f.group == FoodGroup::kFruitsVegetables) out.push_back(who + "must use a fine food group");
  if (f.bread && f.group != FoodGroup::kStarchyStaples) out.push_back(who + "bread must be a starchy staple");
  if (f.bread && f.vehicle) out.push_back(who + "bread marker and vehicle tag are exclusive");
  return out;
}

struct FortificationStandard {
  std::string country;
  Vehicle vehicle = Vehicle::kWheatFlour;
  NutrientId nutrient = NutrientId::kIron;
  double level_mg_per_kg = 0.0;
  bool mandatory = true;
};

inline std::vector<std::string> validate_standard(const FortificationStandard& s) {
  std::vector<std::string> out;
  if (!std::isfinite(s.level_mg_per_kg) || !(s.level_mg_per_kg > 0.0)) {
    out.push_back("standard " + s.country + "/" + std::string(to_string(s.vehicle)) + "/" +
                  std::string(info(s.nutrient).key) + ": level must be finite and > 0");
  }
  if (s.nutrient == NutrientId::kEnergy) out.push_back("standard " + s.country + ": energy cannot be fortified");
  return out;
}

struct PremixCost {
  std::string country;
  Vehicle vehicle = Vehicle::kWheatFlour;
  double cost_ppp_per_kg = 0.0;
};

// ---------------------------------------------------------------------------
// Scenarios

enum class ScenarioKind { kCoNA, kCoNA_SSFV, kCoNA_SUA };

inline constexpr std::array<ScenarioKind, 3> kScenarios{ScenarioKind::kCoNA, ScenarioKind::kCoNA_SSFV,
                                                        ScenarioKind::kCoNA_SUA};

inline std::string_view to_string(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::kCoNA: return "CoNA";
    case ScenarioKind::kCoNA_SSFV: return "CoNA-SS&FV";
    case ScenarioKind::kCoNA_SUA: return "CoNA-SUA";
  }
  return "?";
}

// Accepts display names and short CLI tokens (cona, ssfv, sua).
inline std::optional<ScenarioKind> parse_scenario(std::string_view s) {
  if (s == "CoNA" || s == "cona") return ScenarioKind::kCoNA;
  if (s == "CoNA-SS&FV" || s == "ssfv") return ScenarioKind::kCoNA_SSFV;
  if (s == "CoNA-SUA" || s == "sua") return ScenarioKind::kCoNA_SUA;
  return std::nullopt;
}

struct KcalBounds {
  double lower = 0.0;
  double upper = 0.0;
};

struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::kCoNA;
  // CoNA-SS&FV: reference intakes at reference_energy_kcal.
  std::map<FoodGroup, double> hdb_targets;
  double reference_energy_kcal = 0.0;
  // CoNA-SUA: absolute daily kcal bounds per group.
  std::map<FoodGroup, KcalBounds> group_bounds;
  // CoNA-SUA: rescale bounds by subgroup energy / reference energy.
  bool rescale_bounds_by_energy = false;

  static ScenarioSpec CoNA() { return {}; }
  static ScenarioSpec SSFV(std::map<FoodGroup, double> targets, double reference_energy) {
    ScenarioSpec s;
    s.kind = ScenarioKind::kCoNA_SSFV;
    s.hdb_targets = std::move(targets);
    s.reference_energy_kcal = reference_energy;
    return s;
  }
  static ScenarioSpec SUA(std::map<FoodGroup, KcalBounds> bounds) {
    ScenarioSpec s;
    s.kind = ScenarioKind::kCoNA_SUA;
    s.group_bounds = std::move(bounds);
    return s;
  }
};

inline std::vector<std::string> validate_scenario(const ScenarioSpec& s) {
  std::vector<std::string> out;
  if (s.kind == ScenarioKind::kCoNA_SSFV) {
    std::set<FoodGroup> keys;
    for (const auto& [g, v] : s.hdb_targets) {
      keys.insert(g);
      if (!std::isfinite(v) || v < 0.0) out.push_back("SS&FV target for " + std::string(to_string(g)) + " must be >= 0");
    }
    if (keys != std::set<FoodGroup>{FoodGroup::kStarchyStaples, FoodGroup::kFruitsVegetables}) {
      out.push_back("SS&FV targets must cover exactly starchy_staples and fruits_vegetables");
    }
    if (!(s.reference_energy_kcal > 0.0)) out.push_back("SS&FV reference energy must be > 0");
  }
  if (s.kind == ScenarioKind::kCoNA_SUA || s.rescale_bounds_by_energy) {
    for (const auto& [g, b] : s.group_bounds) {
      if (!(b.lower <= b.upper)) out.push_back("SUA bounds for " + std::string(to_string(g)) + " have lower > upper");
      if (b.lower < 0.0) out.push_back("SUA bounds for " + std::string(to_string(g)) + " are negative");
    }
    if (s.rescale_bounds_by_energy && !(s.reference_energy_kcal > 0.0)) {
      out.push_back("SUA rescaling needs a positive reference energy");
    }
  }
  return out;
}

// Scales reference intakes to a subgroup's energy requirement.
inline std::map<FoodGroup, double> scale_group_targets(const std::map<FoodGroup, double>& targets,
                                                       double reference_energy, double subgroup_energy) {
  if (!(reference_energy > 0.0) || !(subgroup_energy > 0.0)) {
    throw std::invalid_argument("energy values for target scaling must be positive");
  }
  std::map<FoodGroup, double> out;
  for (const auto& [g, kcal] : targets) out[g] = kcal * subgroup_energy / reference_energy;
  return out;
}

}  // namespace lsff

#endif  // LSFF_TYPES_HPP
