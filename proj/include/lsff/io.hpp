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

#ifndef LSFF_IO_HPP
#define LSFF_IO_HPP

// Dataset directory layout:
//
//   foods.csv         country,item_id,name,group,vehicle,bread,price_ppp_100g,
//                     then one <nutrient>_<unit> column per nutrient
//   requirements.csv  subgroup,nutrient,kind,lower,upper,target,unit
//   subgroups.csv     subgroup,sex,age_min_years,age_max_years,status,energy_kcal_day
//   standards.csv     country,vehicle,nutrient,level,unit[,status]
//   premix.csv        country,vehicle,cost_ppp_kg
//   sua.csv           country,group,year,kcal_capita_day
//   regions.csv       country,region
//   config.json       healthy diet basket reference intakes, SUA options
//
// save_dataset writes the canonical form: fixed column order, levels in
// mg/kg, rows sorted where the loader does not keep file order.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lsff/csv.hpp"
#include "lsff/dataset.hpp"

namespace lsff {

inline constexpr const char* kFoodsFile = "foods.csv";
inline constexpr const char* kRequirementsFile = "requirements.csv";
inline constexpr const char* kSubgroupsFile = "subgroups.csv";
inline constexpr const char* kStandardsFile = "standards.csv";
inline constexpr const char* kPremixFile = "premix.csv";
inline constexpr const char* kSuaFile = "sua.csv";
inline constexpr const char* kRegionsFile = "regions.csv";
inline constexpr const char* kConfigFile = "config.json";
inline constexpr const char* kDataDirEnv = "LSFF_DATA_DIR";

enum class Severity { kWarning, kError };

struct Issue {
  Severity severity = Severity::kError;
  std::string file;
  std::size_t line = 0;  // 0 when not tied to a line
  std::string column;
  std::string message;

  std::string describe() const {
    std::string s = severity == Severity::kError ? "error: " : "warning: ";
    s += file;
    if (line > 0) s += ":" + std::to_string(line);
    if (!column.empty()) s += ": " + column;
    return s + ": " + message;
  }
};

struct ValidationReport {
  std::vector<Issue> issues;

  std::size_t count(Severity s) const {
    std::size_t n = 0;
    for (const auto& i : issues) n += i.severity == s;
    return n;
  }
  std::size_t errors() const { return count(Severity::kError); }
  std::size_t warnings() const { return count(Severity::kWarning); }
  bool ok() const { return errors() == 0; }

  void error(std::string file, std::size_t line, std::string column, std::string message) {
    issues.push_back({Severity::kError, std::move(file), line, std::move(column), std::move(message)});
  }
  void warn(std::string file, std::size_t line, std::string column, std::string message) {
    issues.push_back({Severity::kWarning, std::move(file), line, std::move(column), std::move(message)});
  }
};

struct LoadOptions {
  bool strict = false;  // warnings become errors
};

struct LoadResult {
  Dataset dataset;
  ValidationReport report;
  std::map<std::string, std::size_t> rows;  // data rows read per file
};

// Converts local-currency prices to international dollars.
inline std::vector<double> apply_ppp(std::span<const double> prices_local, double ppp_factor) {
  if (!std::isfinite(ppp_factor) || !(ppp_factor > 0.0)) throw std::invalid_argument("PPP factor must be > 0");
  std::vector<double> out;
  out.reserve(prices_local.size());
  for (double p : prices_local) out.push_back(p / ppp_factor);
  return out;
}

// Explicit directory, else $LSFF_DATA_DIR, else nullopt.
inline std::optional<std::filesystem::path> resolve_data_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return std::filesystem::path(*flag);
  if (const char* env = std::getenv(kDataDirEnv); env != nullptr && *env != '\0') return std::filesystem::path(env);
  return std::nullopt;
}

inline std::string unit_column(NutrientId n) {
  return std::string(info(n).key) + "_" + std::string(unit_token(canonical_unit(n)));
}

namespace detail {

inline std::optional<std::string> read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Typed access to one CSV file with located error reporting.
class CsvFile {
 public:
  CsvFile(std::string name, ValidationReport& report) : name_(std::move(name)), report_(report) {}

  bool load(const std::filesystem::path& dir, const std::vector<std::string>& required,
            const std::vector<std::string>& optional_columns = {}) {
    const auto text = read_file(dir / name_);
    if (!text) {
      report_.error(name_, 0, "", "file not found");
      return false;
    }
    try {
      data_ = parse_csv(*text);
    } catch (const CsvError& e) {
      report_.error(name_, e.line(), "", e.what());
      return false;
    }
    bool ok = true;
    for (const auto& c : required) {
      if (!data_.column(c)) {
        report_.error(name_, 1, c, "missing column");
        ok = false;
      }
    }
    for (const auto& h : data_.header) {
      const bool known = std::find(required.begin(), required.end(), h) != required.end() ||
                         std::find(optional_columns.begin(), optional_columns.end(), h) != optional_columns.end();
      if (!known && !accept_extra_) {
        report_.error(name_, 1, h, "unknown column");
        ok = false;
      }
    }
    if (!ok) return false;
    for (const auto& r : data_.rows) {
      if (r.fields.size() != data_.header.size()) {
        report_.error(name_, r.line, "", "expected " + std::to_string(data_.header.size()) + " fields, found " +
                                             std::to_string(r.fields.size()));
        ok = false;
      }
    }
    return ok;
  }

  void accept_extra_columns() { accept_extra_ = true; }
  const CsvData& data() const { return data_; }
  const std::string& name() const { return name_; }

  bool has(std::string_view col) const { return data_.column(col).has_value(); }

  const std::string& text(const CsvRow& r, std::string_view col) const { return r.fields[*data_.column(col)]; }

  std::optional<double> number(const CsvRow& r, std::string_view col, bool required = true) {
    const std::string& s = text(r, col);
    if (s.empty() && !required) return std::nullopt;
    auto v = parse_number(s);
    if (!v) report_.error(name_, r.line, std::string(col), "not a finite number: '" + s + "'");
    return v;
  }

  void error(const CsvRow& r, std::string_view col, std::string msg) {
    report_.error(name_, r.line, std::string(col), std::move(msg));
  }
  void warn(const CsvRow& r, std::string_view col, std::string msg) {
    report_.warn(name_, r.line, std::string(col), std::move(msg));
  }

 private:
  std::string name_;
  ValidationReport& report_;
  CsvData data_;
  bool accept_extra_ = false;
};

// "<nutrient>_<unit>" split at the last underscore.
inline std::optional<std::pair<std::string, std::string>> split_unit_column(const std::string& h) {
  const auto pos = h.rfind('_');
  if (pos == std::string::npos) return std::nullopt;
  return std::pair{h.substr(0, pos), h.substr(pos + 1)};
}

inline const std::vector<std::string>& food_base_columns() {
  static const std::vector<std::string> cols = {"country", "item_id", "name",          "group",
                                                "vehicle", "bread",   "price_ppp_100g"};
  return cols;
}

inline void load_foods(const std::filesystem::path& dir, LoadResult& out) {
  CsvFile f(kFoodsFile, out.report);
  f.accept_extra_columns();
  if (!f.load(dir, food_base_columns())) return;
  const auto& header = f.data().header;
  std::map<NutrientId, std::size_t> columns;
  bool ok = true;
  for (std::size_t i = 0; i < header.size(); ++i) {
    const auto& h = header[i];
    if (std::find(food_base_columns().begin(), food_base_columns().end(), h) != food_base_columns().end()) continue;
    const auto parts = split_unit_column(h);
    std::optional<NutrientId> n;
    if (parts) n = parse_nutrient(parts->first);
    if (!n) {
      out.report.error(kFoodsFile, 1, h, "unknown column");
      ok = false;
      continue;
    }
    const auto unit = parse_unit(parts->second);
    if (!unit || *unit != canonical_unit(*n)) {
      out.report.error(kFoodsFile, 1, h,
                       "unit mismatch for nutrient " + parts->first + ": expected " +
                           std::string(unit_token(canonical_unit(*n))) + ", found " + parts->second);
      ok = false;
      continue;
    }
    if (!columns.emplace(*n, i).second) {
      out.report.error(kFoodsFile, 1, h, "duplicate column for nutrient " + parts->first);
      ok = false;
    }
  }
  for (const auto& n : kNutrients) {
    if (columns.count(n.id) == 0) {
      out.report.error(kFoodsFile, 1, unit_column(n.id), "missing column for nutrient " + std::string(n.key));
      ok = false;
    }
  }
  if (!ok) return;

  std::set<std::pair<std::string, std::string>> ids;
  for (const auto& r : f.data().rows) {
    const std::size_t errors_before = out.report.errors();
    FoodItem food;
    food.country = f.text(r, "country");
    food.id = f.text(r, "item_id");
    food.name = f.text(r, "name");
    if (food.country.empty()) f.error(r, "country", "empty country");
    if (food.id.empty()) f.error(r, "item_id", "empty item id");
    if (auto g = parse_food_group(f.text(r, "group"))) food.group = *g;
    else f.error(r, "group", "unknown food group '" + f.text(r, "group") + "'");
    if (const auto& v = f.text(r, "vehicle"); !v.empty()) {
      if (auto pv = parse_vehicle(v)) food.vehicle = *pv;
      else f.error(r, "vehicle", "unknown vehicle '" + v + "'");
    }
    const auto& bread = f.text(r, "bread");
    if (bread == "1" || bread == "true") food.bread = true;
    else if (!(bread == "0" || bread == "false" || bread.empty())) f.error(r, "bread", "expected 0 or 1");
    if (auto p = f.number(r, "price_ppp_100g")) {
      food.price_ppp_per_100g = *p;
      if (*p < 0.0) f.error(r, "price_ppp_100g", "negative price");
    }
    for (const auto& [n, col] : columns) {
      if (auto v = f.number(r, header[col])) {
        food.composition[index(n)] = *v;
        if (*v < 0.0) f.error(r, header[col], "negative amount");
      }
    }
    if (out.report.errors() != errors_before) continue;
    if (food.energy() == 0.0) {
      f.warn(r, "energy_kcal", "food " + food.id + " has 0 kcal; dropped");
      continue;
    }
    bool bad = false;
    for (const auto& msg : validate_food(food)) {
      f.error(r, "", msg);
      bad = true;
    }
    if (!ids.insert({food.country, food.id}).second) {
      f.error(r, "item_id", "duplicate item id " + food.id + " for " + food.country);
      bad = true;
    }
    if (!bad) out.dataset.foods[food.country].push_back(std::move(food));
  }
  out.rows[kFoodsFile] = f.data().rows.size();
}

inline void load_subgroups(const std::filesystem::path& dir, LoadResult& out, std::vector<SexAgeGroup>& groups,
                           std::map<std::string, std::size_t>& lines) {
  CsvFile f(kSubgroupsFile, out.report);
  if (!f.load(dir, {"subgroup", "sex", "age_min_years", "age_max_years", "status", "energy_kcal_day"})) return;
  for (const auto& r : f.data().rows) {
    SexAgeGroup g;
    g.id = f.text(r, "subgroup");
    bool ok = !g.id.empty();
    if (!ok) f.error(r, "subgroup", "empty subgroup id");
    if (auto s = parse_sex(f.text(r, "sex"))) g.sex = *s;
    else ok = false, f.error(r, "sex", "expected male or female");
    if (auto s = parse_status(f.text(r, "status"))) g.status = *s;
    else ok = false, f.error(r, "status", "expected none, pregnant or lactating");
    auto lo = f.number(r, "age_min_years");
    auto hi = f.number(r, "age_max_years");
    auto e = f.number(r, "energy_kcal_day");
    if (!lo || !hi || !e) continue;
    g.age_min = *lo;
    g.age_max = *hi;
    g.energy_kcal_per_day = *e;
    if (!ok) continue;
    lines[g.id] = r.line;
    groups.push_back(std::move(g));
  }
  out.rows[kSubgroupsFile] = f.data().rows.size();
  if (groups.size() != kRosterSize) {
    out.report.warn(kSubgroupsFile, 0, "",
                    "roster has " + std::to_string(groups.size()) + " subgroups, expected " + std::to_string(kRosterSize));
  }
  for (const auto& msg : validate_roster(groups)) {
    if (msg.rfind("roster has ", 0) == 0) continue;
    out.report.error(kSubgroupsFile, 0, "", msg);
  }
}

inline void load_requirements(const std::filesystem::path& dir, LoadResult& out, const std::vector<SexAgeGroup>& groups,
                              const std::map<std::string, std::size_t>& group_lines) {
  CsvFile f(kRequirementsFile, out.report);
  if (!f.load(dir, {"subgroup", "nutrient", "kind", "lower", "upper", "target", "unit"})) return;
  std::map<std::string, RequirementSet> sets;
  std::map<std::string, std::size_t> first_line;
  for (const auto& g : groups) sets[g.id].group = g;
  for (const auto& r : f.data().rows) {
    const std::string& id = f.text(r, "subgroup");
    auto it = sets.find(id);
    if (it == sets.end()) {
      f.error(r, "subgroup", "unknown subgroup " + id);
      continue;
    }
    first_line.emplace(id, r.line);
    const auto n = parse_nutrient(f.text(r, "nutrient"));
    if (!n) {
      f.error(r, "nutrient", "unknown nutrient '" + f.text(r, "nutrient") + "'");
      continue;
    }
    const auto kind = parse_constraint_kind(f.text(r, "kind"));
    if (!kind) {
      f.error(r, "kind", "expected target, range, lower or upper");
      continue;
    }
    const auto unit = parse_unit(f.text(r, "unit"));
    if (!unit || *unit != canonical_unit(*n)) {
      f.error(r, "unit", "unit mismatch for nutrient " + std::string(info(*n).key) + ": expected " +
                             std::string(unit_token(canonical_unit(*n))) + ", found " + f.text(r, "unit"));
      continue;
    }
    NutrientConstraint c;
    c.nutrient = *n;
    c.kind = *kind;
    c.lower = f.number(r, "lower", false);
    c.upper = f.number(r, "upper", false);
    c.target = f.number(r, "target", false);
    it->second.constraints.push_back(c);
  }
  out.rows[kRequirementsFile] = f.data().rows.size();
  for (const auto& g : groups) {
    const RequirementSet& rs = sets[g.id];
    if (rs.constraints.empty()) {
      out.report.error(kRequirementsFile, 0, "", "no requirements for subgroup " + g.id);
      continue;
    }
    const auto v = validate_requirement_set(rs);
    for (const auto& viol : v) {
      out.report.error(kRequirementsFile, first_line[g.id], "", "subgroup " + g.id + ": " + viol.describe());
    }
    if (v.empty()) out.dataset.requirements.push_back(rs);
  }
  (void)group_lines;
}

inline std::optional<Unit> parse_level_unit(const std::string& s) {
  if (s == "ppm") return Unit::kMilligram;
  const auto slash = s.find("/kg");
  if (slash == std::string::npos || slash + 3 != s.size()) return std::nullopt;
  auto u = parse_unit(s.substr(0, slash));
  if (u == Unit::kKcal) return std::nullopt;
  return u;
}

inline void load_standards(const std::filesystem::path& dir, LoadResult& out) {
  CsvFile f(kStandardsFile, out.report);
  if (!f.load(dir, {"country", "vehicle", "nutrient", "level", "unit"}, {"status"})) return;
  for (const auto& r : f.data().rows) {
    FortificationStandard s;
    s.country = f.text(r, "country");
    bool ok = true;
    if (auto v = parse_vehicle(f.text(r, "vehicle"))) s.vehicle = *v;
    else ok = false, f.error(r, "vehicle", "unknown vehicle '" + f.text(r, "vehicle") + "'");
    if (auto n = parse_nutrient(f.text(r, "nutrient"))) s.nutrient = *n;
    else ok = false, f.error(r, "nutrient", "unknown nutrient '" + f.text(r, "nutrient") + "'");
    const auto unit = parse_level_unit(f.text(r, "unit"));
    if (!unit) ok = false, f.error(r, "unit", "expected mg/kg, ug/kg, mcg/kg, g/kg or ppm");
    const auto level = f.number(r, "level");
    if (f.has("status")) {
      const auto& st = f.text(r, "status");
      if (st == "voluntary") s.mandatory = false;
      else if (!(st == "mandatory" || st.empty())) ok = false, f.error(r, "status", "expected mandatory or voluntary");
    }
    if (!ok || !level) continue;
    s.level_mg_per_kg = to_mg_per_kg(Level{*level, *unit}).value;
    bool bad = false;
    for (const auto& msg : validate_standard(s)) {
      f.error(r, "level", msg);
      bad = true;
    }
    if (bad) continue;
    const auto foods = out.dataset.foods.find(s.country);
    bool carried = false;
    if (foods != out.dataset.foods.end()) {
      for (const auto& food : foods->second) carried = carried || food.vehicle == s.vehicle;
    }
    if (!carried) {
      f.warn(r, "vehicle", "no food in " + s.country + " is tagged " + std::string(to_string(s.vehicle)));
    }
    out.dataset.standards.push_back(s);
  }
  out.rows[kStandardsFile] = f.data().rows.size();
}

inline void load_premix(const std::filesystem::path& dir, LoadResult& out) {
  CsvFile f(kPremixFile, out.report);
  if (!f.load(dir, {"country", "vehicle", "cost_ppp_kg"})) return;
  std::set<std::pair<std::string, Vehicle>> seen;
  for (const auto& r : f.data().rows) {
    PremixCost p;
    p.country = f.text(r, "country");
    const auto v = parse_vehicle(f.text(r, "vehicle"));
    if (!v) f.error(r, "vehicle", "unknown vehicle '" + f.text(r, "vehicle") + "'");
    const auto cost = f.number(r, "cost_ppp_kg");
    if (!v || !cost) continue;
    p.vehicle = *v;
    p.cost_ppp_per_kg = *cost;
    if (*cost < 0.0) {
      f.error(r, "cost_ppp_kg", "negative premix cost");
      continue;
    }
    if (!seen.insert({p.country, p.vehicle}).second) {
      f.error(r, "vehicle", "duplicate premix cost for " + p.country + "/" + std::string(to_string(p.vehicle)));
      continue;
    }
    if (out.dataset.foods.count(p.country) == 0) f.warn(r, "country", "no foods for country " + p.country);
    out.dataset.premix.push_back(p);
  }
  out.rows[kPremixFile] = f.data().rows.size();
}

inline void load_sua(const std::filesystem::path& dir, LoadResult& out) {
  CsvFile f(kSuaFile, out.report);
  if (!f.load(dir, {"country", "group", "year", "kcal_capita_day"})) return;
  std::map<std::pair<std::string, FoodGroup>, std::size_t> where;
  for (const auto& r : f.data().rows) {
    const std::string& country = f.text(r, "country");
    const auto g = parse_food_group(f.text(r, "group"));
    if (!g) f.error(r, "group", "unknown food group '" + f.text(r, "group") + "'");
    const auto year = parse_integer(f.text(r, "year"));
    if (!year) f.error(r, "year", "expected an integer year");
    const auto kcal = f.number(r, "kcal_capita_day");
    if (!g || !year || !kcal) continue;
    if (*kcal < 0.0) {
      f.error(r, "kcal_capita_day", "negative supply");
      continue;
    }
    if (*year < kSuaFirstYear || *year > kSuaLastYear) {
      f.warn(r, "year", "year " + std::to_string(*year) + " outside " + std::to_string(kSuaFirstYear) + "-" +
                            std::to_string(kSuaLastYear) + "; dropped");
      continue;
    }
    auto [it, fresh] = where.emplace(std::pair{country, *g}, out.dataset.sua.size());
    if (fresh) out.dataset.sua.push_back({country, *g, {}});
    auto& series = out.dataset.sua[it->second].kcal_by_year;
    if (!series.emplace(static_cast<int>(*year), *kcal).second) {
      f.error(r, "year", "duplicate year " + std::to_string(*year) + " for " + country + "/" + f.text(r, "group"));
    }
  }
  out.rows[kSuaFile] = f.data().rows.size();
}

inline void load_regions(const std::filesystem::path& dir, LoadResult& out) {
  CsvFile f(kRegionsFile, out.report);
  if (!f.load(dir, {"country", "region"})) return;
  for (const auto& r : f.data().rows) {
    const auto& c = f.text(r, "country");
    const auto& region = f.text(r, "region");
    if (region.empty()) {
      f.error(r, "region", "empty region");
      continue;
    }
    if (!out.dataset.regions.emplace(c, region).second) f.error(r, "country", "duplicate country " + c);
  }
  out.rows[kRegionsFile] = f.data().rows.size();
}

inline void load_config(const std::filesystem::path& dir, LoadResult& out) {
  const auto text = read_file(dir / kConfigFile);
  if (!text) {
    out.report.error(kConfigFile, 0, "", "file not found");
    return;
  }
  try {
    const auto j = nlohmann::json::parse(*text);
    const auto& hdb = j.at("hdb");
    out.dataset.hdb.reference_energy_kcal = hdb.at("reference_energy_kcal").get<double>();
    if (!(out.dataset.hdb.reference_energy_kcal > 0.0)) {
      out.report.error(kConfigFile, 0, "hdb.reference_energy_kcal", "must be > 0");
    }
    for (const auto& [key, value] : hdb.at("targets_kcal").items()) {
      const auto g = parse_food_group(key);
      if (!g || std::find(kReportGroups.begin(), kReportGroups.end(), *g) == kReportGroups.end()) {
        out.report.error(kConfigFile, 0, "hdb.targets_kcal." + key, "not a reporting food group");
        continue;
      }
      const double v = value.get<double>();
      if (!std::isfinite(v) || v < 0.0) out.report.error(kConfigFile, 0, "hdb.targets_kcal." + key, "must be >= 0");
      out.dataset.hdb.targets_kcal[*g] = v;
    }
    for (FoodGroup g : {FoodGroup::kStarchyStaples, FoodGroup::kFruitsVegetables}) {
      if (out.dataset.hdb.targets_kcal.count(g) == 0) {
        out.report.error(kConfigFile, 0, "hdb.targets_kcal." + std::string(to_string(g)), "missing");
      }
    }
    if (j.contains("sua_rescale_by_energy")) out.dataset.sua_rescale_by_energy = j.at("sua_rescale_by_energy").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    out.report.error(kConfigFile, 0, "", e.what());
  }
}

// Checks that need several files.
inline void cross_validate(LoadResult& out) {
  const Dataset& d = out.dataset;
  for (const auto& [country, foods] : d.foods) {
    if (d.regions.count(country) == 0) out.report.error(kRegionsFile, 0, "", "no region for country " + country);
    for (FoodGroup g : kSuaGroups) {
      if (!d.sua_series(country, g)) {
        out.report.warn(kSuaFile, 0, "",
                        "no SUA series for " + country + "/" + std::string(to_string(g)) + "; its CoNA-SUA cells fail");
      }
    }
  }
  for (const auto& s : d.standards) {
    if (d.foods.count(s.country) == 0) out.report.warn(kStandardsFile, 0, "", "no foods for country " + s.country);
  }
}

}  // namespace detail

inline LoadResult load_dataset(const std::filesystem::path& dir, const LoadOptions& options = {}) {
  LoadResult out;
  if (!std::filesystem::is_directory(dir)) {
    out.report.error(dir.string(), 0, "", "data directory not found");
    return out;
  }
  std::vector<SexAgeGroup> groups;
  std::map<std::string, std::size_t> group_lines;
  detail::load_foods(dir, out);
  detail::load_subgroups(dir, out, groups, group_lines);
  detail::load_requirements(dir, out, groups, group_lines);
  detail::load_standards(dir, out);
  detail::load_premix(dir, out);
  detail::load_sua(dir, out);
  detail::load_regions(dir, out);
  detail::load_config(dir, out);
  detail::cross_validate(out);
  if (options.strict) {
    for (auto& i : out.report.issues) i.severity = Severity::kError;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical serialization

inline void write_foods(std::ostream& os, const Dataset& d) {
  std::vector<std::string> header = detail::food_base_columns();
  for (const auto& n : kNutrients) header.push_back(unit_column(n.id));
  write_csv_row(os, header);
  for (const auto& [country, foods] : d.foods) {
    for (const auto& f : foods) {
      std::vector<std::string> row = {f.country,
                                      f.id,
                                      f.name,
                                      std::string(to_string(f.group)),
                                      f.vehicle ? std::string(to_string(*f.vehicle)) : std::string(),
                                      f.bread ? "1" : "0",
                                      format_number(f.price_ppp_per_100g)};
      for (double v : f.composition) row.push_back(format_number(v));
      write_csv_row(os, row);
    }
  }
}

inline void write_subgroups(std::ostream& os, const Dataset& d) {
  write_csv_row(os, {"subgroup", "sex", "age_min_years", "age_max_years", "status", "energy_kcal_day"});
  for (const auto& rs : d.requirements) {
    const auto& g = rs.group;
    write_csv_row(os, {g.id, std::string(to_string(g.sex)), format_number(g.age_min), format_number(g.age_max),
                       std::string(to_string(g.status)), format_number(g.energy_kcal_per_day)});
  }
}

inline void write_requirements(std::ostream& os, const Dataset& d) {
  write_csv_row(os, {"subgroup", "nutrient", "kind", "lower", "upper", "target", "unit"});
  for (const auto& rs : d.requirements) {
    for (const auto& c : rs.constraints) {
      write_csv_row(os, {rs.group.id, std::string(info(c.nutrient).key), std::string(to_string(c.kind)),
                         format_number(c.lower), format_number(c.upper), format_number(c.target),
                         std::string(unit_token(canonical_unit(c.nutrient)))});
    }
  }
}

inline void write_standards(std::ostream& os, const Dataset& d) {
  write_csv_row(os, {"country", "vehicle", "nutrient", "level", "unit", "status"});
  for (const auto& s : d.standards) {
    write_csv_row(os, {s.country, std::string(to_string(s.vehicle)), std::string(info(s.nutrient).key),
                       format_number(s.level_mg_per_kg), "mg/kg", s.mandatory ? "mandatory" : "voluntary"});
  }
}

inline void write_premix(std::ostream& os, const Dataset& d) {
  write_csv_row(os, {"country", "vehicle", "cost_ppp_kg"});
  for (const auto& p : d.premix) {
    write_csv_row(os, {p.country, std::string(to_string(p.vehicle)), format_number(p.cost_ppp_per_kg)});
  }
}

inline void write_sua(std::ostream& os, const Dataset& d) {
  write_csv_row(os, {"country", "group", "year", "kcal_capita_day"});
  std::vector<const SuaSeries*> order;
  for (const auto& s : d.sua) order.push_back(&s);
  std::stable_sort(order.begin(), order.end(), [](const SuaSeries* a, const SuaSeries* b) {
    return std::tie(a->country, a->group) < std::tie(b->country, b->group);
  });
  for (const SuaSeries* s : order) {
    for (const auto& [year, kcal] : s->kcal_by_year) {
      write_csv_row(os, {s->country, std::string(to_string(s->group)), std::to_string(year), format_number(kcal)});
    }
  }
}

inline void write_regions(std::ostream& os, const Dataset& d) {
  write_csv_row(os, {"country", "region"});
  for (const auto& [c, r] : d.regions) write_csv_row(os, {c, r});
}

inline void write_config(std::ostream& os, const Dataset& d) {
  nlohmann::json targets = nlohmann::json::object();
  for (const auto& [g, v] : d.hdb.targets_kcal) targets[std::string(to_string(g))] = v;
  nlohmann::json j = {
      {"hdb", {{"reference_energy_kcal", d.hdb.reference_energy_kcal}, {"targets_kcal", targets}}},
      {"sua_rescale_by_energy", d.sua_rescale_by_energy},
  };
  os << j.dump(2) << '\n';
}

inline void save_dataset(const std::filesystem::path& dir, const Dataset& d) {
  std::filesystem::create_directories(dir);
  auto emit = [&](const char* name, void (*fn)(std::ostream&, const Dataset&)) {
    std::ofstream os(dir / name, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + (dir / name).string());
    fn(os, d);
  };
  emit(kFoodsFile, write_foods);
  emit(kSubgroupsFile, write_subgroups);
  emit(kRequirementsFile, write_requirements);
  emit(kStandardsFile, write_standards);
  emit(kPremixFile, write_premix);
  emit(kSuaFile, write_sua);
  emit(kRegionsFile, write_regions);
  emit(kConfigFile, write_config);
}

}  // namespace lsff

#endif  // LSFF_IO_HPP
