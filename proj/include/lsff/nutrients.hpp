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

#ifndef LSFF_NUTRIENTS_HPP
#define LSFF_NUTRIENTS_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lsff {

enum class NutrientId : std::size_t {
  kEnergy,
  kProtein,
  kLipids,
  kCarbohydrate,
  kCalcium,
  kCholine,
  kCopper,
  kFolate,
  kIron,
  kMagnesium,
  kManganese,
  kNiacin,
  kPhosphorus,
  kRetinol,
  kRiboflavin,
  kSelenium,
  kSodium,
  kThiamin,
  kVitaminA,
  kVitaminB5,
  kVitaminB6,
  kVitaminB12,
  kVitaminC,
  kVitaminE,
  kZinc,
};

inline constexpr std::size_t kNutrientCount = 25;

enum class Unit { kKcal, kGram, kMilligram, kMicrogram };

struct NutrientInfo {
  NutrientId id;
  std::string_view key;    // snake_case token used in files
  std::string_view label;  // display name
  Unit unit;
};

inline constexpr std::array<NutrientInfo, kNutrientCount> kNutrients{{
    {NutrientId::kEnergy, "energy", "Energy", Unit::kKcal},
    {NutrientId::kProtein, "protein", "Protein", Unit::kGram},
    {NutrientId::kLipids, "lipids", "Lipids", Unit::kGram},
    {NutrientId::kCarbohydrate, "carbohydrate", "Carbohydrate", Unit::kGram},
    {NutrientId::kCalcium, "calcium", "Calcium", Unit::kMilligram},
    {NutrientId::kCholine, "choline", "Choline", Unit::kMilligram},
    {NutrientId::kCopper, "copper", "Copper", Unit::kMilligram},
    {NutrientId::kFolate, "folate", "Folate", Unit::kMicrogram},
    {NutrientId::kIron, "iron", "Iron", Unit::kMilligram},
    {NutrientId::kMagnesium, "magnesium", "Magnesium", Unit::kMilligram},
    {NutrientId::kManganese, "manganese", "Manganese", Unit::kMilligram},
    {NutrientId::kNiacin, "niacin", "Niacin", Unit::kMilligram},
    {NutrientId::kPhosphorus, "phosphorus", "Phosphorus", Unit::kMilligram},
    {NutrientId::kRetinol, "retinol", "Retinol", Unit::kMicrogram},
    {NutrientId::kRiboflavin, "riboflavin", "Riboflavin", Unit::kMilligram},
    {NutrientId::kSelenium, "selenium", "Selenium", Unit::kMicrogram},
    {NutrientId::kSodium, "sodium", "Sodium", Unit::kMilligram},
    {NutrientId::kThiamin, "thiamin", "Thiamin", Unit::kMilligram},
    {NutrientId::kVitaminA, "vitamin_a", "Vitamin A", Unit::kMicrogram},
    {NutrientId::kVitaminB5, "vitamin_b5", "Vitamin B5", Unit::kMilligram},
    {NutrientId::kVitaminB6, "vitamin_b6", "Vitamin B6", Unit::kMilligram},
    {NutrientId::kVitaminB12, "vitamin_b12", "Vitamin B12", Unit::kMicrogram},
    {NutrientId::kVitaminC, "vitamin_c", "Vitamin C", Unit::kMilligram},
    {NutrientId::kVitaminE, "vitamin_e", "Vitamin E", Unit::kMilligram},
    {NutrientId::kZinc, "zinc", "Zinc", Unit::kMilligram},
}};

constexpr std::size_t index(NutrientId n) { return static_cast<std::size_t>(n); }
constexpr const NutrientInfo& info(NutrientId n) { return kNutrients[index(n)]; }
constexpr Unit canonical_unit(NutrientId n) { return info(n).unit; }

inline std::string_view unit_token(Unit u) {
  switch (u) {
    case Unit::kKcal: return "kcal";
    case Unit::kGram: return "g";
    case Unit::kMilligram: return "mg";
    case Unit::kMicrogram: return "ug";
  }
  return "?";
}

inline std::optional<Unit> parse_unit(std::string_view s) {
  if (s == "kcal") return Unit::kKcal;
  if (s == "g") return Unit::kGram;
  if (s == "mg") return Unit::kMilligram;
  if (s == "ug" || s == "mcg" || s == "\xC2\xB5g") return Unit::kMicrogram;
  return std::nullopt;
}

inline std::optional<NutrientId> parse_nutrient(std::string_view key) {
  for (const auto& n : kNutrients) {
    if (n.key == key) return n.id;
  }
  return std::nullopt;
}

// Milligrams in one unit of mass; energy has no mass equivalent.
inline double milligrams_per(Unit u) {
  switch (u) {
    case Unit::kGram: return 1000.0;
    case Unit::kMilligram: return 1.0;
    case Unit::kMicrogram: return 1e-3;
    case Unit::kKcal: break;
  }
  throw std::invalid_argument("kcal is not a mass unit");
}

// Per-100 g composition indexed by NutrientId, in canonical units.
using Composition = std::array<double, kNutrientCount>;

// Fortification level expressed per kg of food vehicle.
struct Level {
  double value = 0.0;
  Unit unit = Unit::kMilligram;  // mass unit per kg
};

// Converts a per-kg level to mg/kg. Applying it to its own output is a no-op.
inline Level to_mg_per_kg(Level l) {
  return Level{l.value * milligrams_per(l.unit), Unit::kMilligram};
}

// Amount (in the nutrient's canonical unit) added to 100 g of food when
// `mg_per_kg` is added to each kg: mg/kg / 10 = mg per 100 g.
inline double mg_per_kg_to_canonical_per_100g(NutrientId n, double mg_per_kg) {
  return mg_per_kg / 10.0 / milligrams_per(canonical_unit(n));
}

}  // namespace lsff

#endif  // LSFF_NUTRIENTS_HPP
