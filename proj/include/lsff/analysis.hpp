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

#ifndef LSFF_ANALYSIS_HPP
#define LSFF_ANALYSIS_HPP

// Batch orchestration over countries x subgroups x scenarios, baseline vs
// fortified, plus the aggregations behind the result tables.
//
// Cells are ordered (country, subgroup, scenario) with countries sorted by
// name, subgroups in roster order and scenarios in the order requested. Cells
// are solved independently, possibly on several threads, and written back by
// index, so output never depends on scheduling.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "lsff/dataset.hpp"
#include "lsff/diet.hpp"
#include "lsff/fortify.hpp"
#include "lsff/stats.hpp"

namespace lsff {

struct DeltaRecord {
  std::string country;
  std::string region;
  std::string subgroup_id;
  Sex sex = Sex::kFemale;
  ScenarioKind scenario = ScenarioKind::kCoNA;
  lp::LpStatus base_status = lp::LpStatus::kInfeasible;
  lp::LpStatus fort_status = lp::LpStatus::kInfeasible;
  std::optional<double> cost_base;  // PPP/day, when the baseline is optimal
  std::optional<double> cost_fort;
  std::optional<double> abs_change;  // PPP/day
  std::optional<double> pct_change;  // percent
  std::string error;                 // solver error text, empty when none

  bool both_optimal() const {
    return error.empty() && base_status == lp::LpStatus::kOptimal && fort_status == lp::LpStatus::kOptimal;
  }
};

struct BatchOptions {
  FortifySpec fortify;
  lp::SolverOptions solver;
  unsigned threads = 1;
};

struct CellKey {
  std::string country;
  std::string subgroup;
  ScenarioKind scenario;
};

struct BatchResult {
  std::vector<DeltaRecord> records;
  std::vector<DietSolution> base;  // aligned with records
  std::vector<DietSolution> fort;
  std::vector<std::string> log;    // infeasible/error cells, one line each
};

// Runs fn(i) for i in [0, count) on up to `threads` workers.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

inline std::vector<CellKey> batch_cells(const Dataset& data, std::span<const ScenarioKind> scenarios) {
  std::vector<CellKey> cells;
  for (const auto& country : data.countries()) {
    for (const auto& rs : data.requirements) {
      for (ScenarioKind s : scenarios) cells.push_back({country, rs.group.id, s});
    }
  }
  return cells;
}

namespace detail {

struct CountryContext {
  std::vector<FoodItem> fortified;
  bool unchanged = true;
  std::map<ScenarioKind, ScenarioSpec> specs;
  std::string spec_error;
};

inline DietSolution solve_cell(const std::vector<FoodItem>& foods, const RequirementSet& rs,
                               const ScenarioSpec& spec, const lp::SolverOptions& opts, std::string& error) {
  try {
    return solve_diet(foods, rs, spec, opts);
  } catch (const std::exception& e) {
    error = e.what();
    DietSolution s;
    s.country = foods.empty() ? std::string() : foods.front().country;
    s.subgroup_id = rs.group.id;
    s.scenario = spec.kind;
    s.error = error;
    return s;
  }
}

inline std::map<std::string, CountryContext> country_contexts(const Dataset& data,
                                                              std::span<const ScenarioKind> scenarios,
                                                              const FortifySpec& fspec, bool fortify) {
  std::map<std::string, CountryContext> ctx;
  for (const auto& country : data.countries()) {
    CountryContext& c = ctx[country];
    try {
      for (ScenarioKind s : scenarios) c.specs.emplace(s, data.scenario_for(country, s));
    } catch (const std::exception& e) {
      c.spec_error = e.what();
    }
    if (fortify) {
      const auto& foods = data.foods_of(country);
      c.fortified = apply_fortification(foods, data.selected_standards(country, fspec.include_voluntary),
                                        premix_for_country(data.premix, country), fspec);
      c.unchanged = c.fortified == foods;
    }
  }
  return ctx;
}

}  // namespace detail

// Baseline (unfortified) solutions for every cell.
inline std::vector<DietSolution> solve_baselines(const Dataset& data, std::span<const ScenarioKind> scenarios,
                                                 const BatchOptions& opts) {
  const auto cells = batch_cells(data, scenarios);
  const auto ctx = detail::country_contexts(data, scenarios, opts.fortify, /*fortify=*/false);
  std::vector<DietSolution> out(cells.size());
  std::vector<std::string> errors(cells.size());
  parallel_for(cells.size(), opts.threads, [&](std::size_t i) {
    const auto& cell = cells[i];
    const auto& c = ctx.at(cell.country);
    if (!c.spec_error.empty()) {
      out[i].country = cell.country;
      out[i].subgroup_id = cell.subgroup;
      out[i].scenario = cell.scenario;
      out[i].error = c.spec_error;
      return;
    }
    out[i] = detail::solve_cell(data.foods_of(cell.country), data.requirement(cell.subgroup),
                                c.specs.at(cell.scenario), opts.solver, errors[i]);
  });
  return out;
}

// One DeltaRecord per (country, subgroup, scenario). Pass `baselines` from
// solve_baselines to avoid re-solving them; they must cover the same cells.
inline BatchResult run_batch(const Dataset& data, std::span<const ScenarioKind> scenarios, const BatchOptions& opts,
                             const std::vector<DietSolution>* baselines = nullptr) {
  const auto cells = batch_cells(data, scenarios);
  std::vector<DietSolution> own;
  if (baselines == nullptr) {
    own = solve_baselines(data, scenarios, opts);
    baselines = &own;
  }
  if (baselines->size() != cells.size()) throw std::invalid_argument("baseline solutions do not match batch cells");

  const auto ctx = detail::country_contexts(data, scenarios, opts.fortify, /*fortify=*/true);
  BatchResult out;
  out.records.resize(cells.size());
  out.base = *baselines;
  out.fort.resize(cells.size());
  std::vector<std::string> errors(cells.size());

  parallel_for(cells.size(), opts.threads, [&](std::size_t i) {
    const auto& cell = cells[i];
    const auto& c = ctx.at(cell.country);
    const DietSolution& base = (*baselines)[i];
    const std::string& base_error = base.error;
    if (!c.spec_error.empty()) {
      errors[i] = c.spec_error;
    } else if (c.unchanged) {
      // Identical inputs give the identical deterministic solution.
      out.fort[i] = base;
      errors[i] = base_error;
    } else {
      out.fort[i] = detail::solve_cell(c.fortified, data.requirement(cell.subgroup), c.specs.at(cell.scenario),
                                       opts.solver, errors[i]);
      if (errors[i].empty()) errors[i] = base_error;
    }
    DeltaRecord& r = out.records[i];
    r.country = cell.country;
    r.region = data.region_of(cell.country);
    r.subgroup_id = cell.subgroup;
    r.sex = data.requirement(cell.subgroup).group.sex;
    r.scenario = cell.scenario;
    r.base_status = base.status;
    r.fort_status = out.fort[i].status;
    r.error = errors[i];
    if (r.error.empty() && base.optimal()) r.cost_base = base.cost_ppp_per_day;
    if (r.error.empty() && out.fort[i].optimal()) r.cost_fort = out.fort[i].cost_ppp_per_day;
    if (r.cost_base && r.cost_fort) {
      r.abs_change = *r.cost_fort - *r.cost_base;
      if (*r.cost_base > 0.0) r.pct_change = 100.0 * (*r.cost_fort - *r.cost_base) / *r.cost_base;
    }
  });

  for (const auto& r : out.records) {
    if (r.both_optimal()) continue;
    out.log.push_back(r.country + "/" + r.subgroup_id + "/" + std::string(to_string(r.scenario)) + ": " +
                      (r.error.empty() ? std::string("base ") + lp::to_string(r.base_status) + ", fortified " +
                                             lp::to_string(r.fort_status)
                                       : r.error));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Summaries

struct Grouping {
  bool scenario = false;
  bool subgroup = false;
  bool country = false;
  bool region = false;
  bool sex = false;

  std::vector<std::string> fields() const {
    std::vector<std::string> f;
    if (scenario) f.push_back("scenario");
    if (subgroup) f.push_back("subgroup");
    if (country) f.push_back("country");
    if (region) f.push_back("region");
    if (sex) f.push_back("sex");
    return f;
  }

  std::vector<std::string> key(const DeltaRecord& r) const {
    std::vector<std::string> k;
    if (scenario) k.emplace_back(to_string(r.scenario));
    if (subgroup) k.push_back(r.subgroup_id);
    if (country) k.push_back(r.country);
    if (region) k.push_back(r.region);
    if (sex) k.emplace_back(to_string(r.sex));
    return k;
  }
};

// How the "non-zero change" subset is formed.
enum class NonzeroSubset {
  kPerRecord,           // records whose own change is non-zero
  kPerCountryScenario,  // all records of a (country, scenario) with any non-zero change
};

struct SummaryStat {
  std::vector<std::string> key;
  std::size_t n = 0;
  std::size_t n_nonzero = 0;
  double median = 0.0;  // over all records in the group
  double q25 = 0.0;
  double q75 = 0.0;
  double mean = 0.0;  // diagnostics only
  std::optional<double> median_nonzero;
  std::optional<double> q25_nonzero;
  std::optional<double> q75_nonzero;
  double share_reduced = 0.0;
  double share_zero = 0.0;
  double share_increased = 0.0;
};

struct SummaryResult {
  std::vector<std::string> fields;
  std::vector<SummaryStat> stats;  // sorted by key
  std::vector<std::string> warnings;
};

inline SummaryResult summarize(std::span<const DeltaRecord> records, const Grouping& grouping,
                               double zero_epsilon = 1e-9, NonzeroSubset subset = NonzeroSubset::kPerRecord) {
  SummaryResult out;
  out.fields = grouping.fields();
  std::set<std::pair<std::string, ScenarioKind>> active_pairs;
  std::size_t undefined = 0;
  for (const auto& r : records) {
    if (!r.pct_change) continue;
    if (std::abs(*r.pct_change) > zero_epsilon) active_pairs.insert({r.country, r.scenario});
  }
  std::map<std::vector<std::string>, std::vector<const DeltaRecord*>> groups;
  std::set<std::vector<std::string>> seen_keys;
  for (const auto& r : records) {
    seen_keys.insert(grouping.key(r));
    if (!r.pct_change) {
      ++undefined;
      continue;
    }
    groups[grouping.key(r)].push_back(&r);
  }
  if (undefined > 0) {
    out.warnings.push_back(std::to_string(undefined) + " record(s) without a defined percentage change excluded");
  }
  for (const auto& k : seen_keys) {
    if (groups.find(k) == groups.end()) {
      std::string name;
      for (const auto& part : k) name += (name.empty() ? "" : "/") + part;
      out.warnings.push_back("group " + (name.empty() ? std::string("(all)") : name) + " has no records; omitted");
    }
  }
  for (const auto& [key, members] : groups) {
    SummaryStat s;
    s.key = key;
    std::vector<double> all;
    std::vector<double> nonzero;
    std::size_t reduced = 0;
    std::size_t zero = 0;
    for (const DeltaRecord* r : members) {
      const double v = *r->pct_change;
      all.push_back(v);
      const bool is_zero = std::abs(v) <= zero_epsilon;
      if (v < -zero_epsilon) ++reduced;
      else if (is_zero) ++zero;
      const bool in_subset = subset == NonzeroSubset::kPerRecord ? !is_zero
                                                                 : active_pairs.count({r->country, r->scenario}) > 0;
      if (in_subset) nonzero.push_back(v);
    }
    s.n = all.size();
    s.n_nonzero = nonzero.size();
    const Quartiles q = quartiles(all);
    s.q25 = q.q25;
    s.median = q.median;
    s.q75 = q.q75;
    s.mean = mean(all);
    if (!nonzero.empty()) {
      const Quartiles qn = quartiles(nonzero);
      s.q25_nonzero = qn.q25;
      s.median_nonzero = qn.median;
      s.q75_nonzero = qn.q75;
    }
    const double n = static_cast<double>(s.n);
    s.share_reduced = static_cast<double>(reduced) / n;
    s.share_zero = static_cast<double>(zero) / n;
    s.share_increased = 1.0 - (s.share_reduced + s.share_zero);
    out.stats.push_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Decompositions

struct DecompositionMedian {
  std::string factor;  // vehicle or nutrient key
  std::string subgroup;
  ScenarioKind scenario = ScenarioKind::kCoNA;
  double median_pct = 0.0;
  std::size_t n_countries = 0;
};

struct Decomposition {
  std::map<std::string, BatchResult> runs;  // factor -> batch
  std::vector<DecompositionMedian> medians;
};

namespace detail {

// Medians per (subgroup, scenario) over the countries in `countries`.
inline void decomposition_medians(const Dataset& data, const std::string& factor, const BatchResult& run,
                                  const std::set<std::string>& countries, std::span<const ScenarioKind> scenarios,
                                  std::vector<DecompositionMedian>& out) {
  if (countries.empty()) return;
  for (const auto& rs : data.requirements) {
    for (ScenarioKind s : scenarios) {
      std::vector<double> v;
      std::set<std::string> seen;
      for (const auto& r : run.records) {
        if (r.subgroup_id != rs.group.id || r.scenario != s || !r.pct_change) continue;
        if (countries.count(r.country) == 0) continue;
        v.push_back(*r.pct_change);
        seen.insert(r.country);
      }
      if (v.empty()) continue;
      out.push_back({factor, rs.group.id, s, median(v), seen.size()});
    }
  }
}

}  // namespace detail

inline Decomposition decompose_by_vehicle(const Dataset& data, std::span<const ScenarioKind> scenarios,
                                          const BatchOptions& opts,
                                          const std::vector<DietSolution>* baselines = nullptr) {
  std::vector<DietSolution> own;
  if (baselines == nullptr) {
    own = solve_baselines(data, scenarios, opts);
    baselines = &own;
  }
  Decomposition out;
  for (Vehicle v : kVehicles) {
    BatchOptions o = opts;
    o.fortify.vehicle_filter = std::set<Vehicle>{v};
    BatchResult run = run_batch(data, scenarios, o, baselines);
    std::set<std::string> countries;
    for (const auto& c : data.countries()) {
      if (fortified_vehicles(data.selected_standards(c, opts.fortify.include_voluntary)).count(v) > 0) {
        countries.insert(c);
      }
    }
    const std::string key(to_string(v));
    detail::decomposition_medians(data, key, run, countries, scenarios, out.medians);
    out.runs.emplace(key, std::move(run));
  }
  return out;
}

// Nutrients fortified in at least one country, sorted by NutrientId.
inline std::set<NutrientId> all_fortified_nutrients(const Dataset& data, bool include_voluntary = true) {
  std::set<NutrientId> out;
  for (const auto& c : data.countries()) {
    for (NutrientId n : fortified_nutrients(data.selected_standards(c, include_voluntary))) out.insert(n);
  }
  return out;
}

// Premix is charged in full for every vehicle carrying the nutrient.
inline Decomposition decompose_by_nutrient(const Dataset& data, std::span<const ScenarioKind> scenarios,
                                           const BatchOptions& opts,
                                           const std::vector<DietSolution>* baselines = nullptr) {
  std::vector<DietSolution> own;
  if (baselines == nullptr) {
    own = solve_baselines(data, scenarios, opts);
    baselines = &own;
  }
  Decomposition out;
  for (NutrientId n : all_fortified_nutrients(data, opts.fortify.include_voluntary)) {
    BatchOptions o = opts;
    o.fortify.nutrient_filter = std::set<NutrientId>{n};
    BatchResult run = run_batch(data, scenarios, o, baselines);
    std::set<std::string> countries;
    for (const auto& c : data.countries()) {
      if (fortified_nutrients(data.selected_standards(c, opts.fortify.include_voluntary)).count(n) > 0) {
        countries.insert(c);
      }
    }
    const std::string key(info(n).key);
    detail::decomposition_medians(data, key, run, countries, scenarios, out.medians);
    out.runs.emplace(key, std::move(run));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Diet composition tables

struct ItemEnergyChange {
  ScenarioKind scenario = ScenarioKind::kCoNA;
  std::string subgroup;
  std::string item;  // display name
  FoodGroup group = FoodGroup::kOther;
  double mean_change_pct = 0.0;    // of the scaled reference intake
  double median_change_pct = 0.0;
  std::size_t n_countries = 0;
};

struct ItemEnergyTable {
  std::vector<ItemEnergyChange> full;
  std::vector<ItemEnergyChange> display;  // rows with |mean| above the threshold
  std::vector<std::string> warnings;
};

// Changes in item energy as a percentage of the subgroup's reference intake
// for the item's food group, averaged over countries. Solutions are paired
// by position. A threshold of 0 disables the display filter.
inline ItemEnergyTable item_energy_changes(std::span<const DietSolution> base, std::span<const DietSolution> fort,
                                           const HdbConfig& hdb, std::span<const RequirementSet> roster,
                                           double threshold_pct = 3.0) {
  ItemEnergyTable out;
  if (base.size() != fort.size()) throw std::invalid_argument("unpaired solution lists");
  std::map<std::string, double> energy;
  for (const auto& rs : roster) energy[rs.group.id] = rs.group.energy_kcal_per_day;

  using CellId = std::pair<ScenarioKind, std::string>;
  std::map<CellId, std::set<std::string>> cell_countries;
  std::map<std::tuple<ScenarioKind, std::string, std::string, FoodGroup>, std::map<std::string, double>> deltas;
  std::set<FoodGroup> missing_ref;
  for (std::size_t i = 0; i < base.size(); ++i) {
    const DietSolution& b = base[i];
    const DietSolution& f = fort[i];
    if (!b.optimal() && !f.optimal()) continue;
    if (!b.optimal() || !f.optimal() || b.country != f.country || b.subgroup_id != f.subgroup_id ||
        b.scenario != f.scenario) {
      out.warnings.push_back("missing pair for " + b.country + "/" + b.subgroup_id + "/" +
                             std::string(to_string(b.scenario)) + "; skipped");
      continue;
    }
    auto e = energy.find(b.subgroup_id);
    if (e == energy.end()) {
      out.warnings.push_back("unknown subgroup " + b.subgroup_id + "; skipped");
      continue;
    }
    cell_countries[{b.scenario, b.subgroup_id}].insert(b.country);
    std::map<std::pair<std::string, FoodGroup>, double> change;
    for (const auto& it : f.items) change[{it.name, it.group}] += it.kcal_per_day;
    for (const auto& it : b.items) change[{it.name, it.group}] -= it.kcal_per_day;
    for (const auto& [item, dk] : change) {
      const double ref = hdb.scaled(report_group(item.second), e->second);
      if (!(ref > 0.0)) {
        missing_ref.insert(report_group(item.second));
        continue;
      }
      deltas[{b.scenario, b.subgroup_id, item.first, item.second}][b.country] = dk / ref * 100.0;
    }
  }
  for (const auto& [key, by_country] : deltas) {
    const auto& countries = cell_countries[{std::get<0>(key), std::get<1>(key)}];
    std::vector<double> v;
    for (const auto& c : countries) {
      auto it = by_country.find(c);
      v.push_back(it == by_country.end() ? 0.0 : it->second);
    }
    ItemEnergyChange row{std::get<0>(key), std::get<1>(key), std::get<2>(key), std::get<3>(key),
                         mean(v), median(v), countries.size()};
    out.full.push_back(row);
    if (threshold_pct <= 0.0 || std::abs(row.mean_change_pct) > threshold_pct) out.display.push_back(row);
  }
  for (FoodGroup g : missing_ref) {
    out.warnings.push_back("no reference intake for " + std::string(to_string(g)) + "; its items are omitted");
  }
  return out;
}

struct GroupEnergyRatio {
  ScenarioKind scenario = ScenarioKind::kCoNA;
  std::string subgroup;  // empty for the overall average
  FoodGroup group = FoodGroup::kStarchyStaples;
  double ratio = 0.0;  // group kcal / scaled reference kcal
  std::size_t n = 0;   // countries (cells) or subgroups (overall)
};

struct GroupEnergyRatioTable {
  std::vector<GroupEnergyRatio> cells;    // per (scenario, subgroup, group)
  std::vector<GroupEnergyRatio> overall;  // per (scenario, group), mean of cells
  std::vector<std::string> warnings;
};

inline GroupEnergyRatioTable group_energy_ratios(std::span<const DietSolution> solutions, const HdbConfig& hdb,
                                                 std::span<const RequirementSet> roster) {
  GroupEnergyRatioTable out;
  std::vector<FoodGroup> groups;
  for (FoodGroup g : kReportGroups) {
    if (hdb.target(g) > 0.0) groups.push_back(g);
    else out.warnings.push_back("zero reference intake for " + std::string(to_string(g)) + "; omitted");
  }
  std::map<std::string, double> energy;
  for (const auto& rs : roster) energy[rs.group.id] = rs.group.energy_kcal_per_day;

  std::map<std::tuple<ScenarioKind, std::size_t, FoodGroup>, std::vector<double>> acc;
  std::map<std::string, std::size_t> order;
  for (std::size_t i = 0; i < roster.size(); ++i) order[roster[i].group.id] = i;
  for (const auto& s : solutions) {
    if (!s.optimal()) continue;
    auto e = energy.find(s.subgroup_id);
    if (e == energy.end()) continue;
    for (FoodGroup g : groups) {
      acc[{s.scenario, order[s.subgroup_id], g}].push_back(group_total(s.group_energy, g) / hdb.scaled(g, e->second));
    }
  }
  std::map<std::pair<ScenarioKind, FoodGroup>, std::vector<double>> overall;
  for (const auto& [key, v] : acc) {
    const auto& [scenario, idx, g] = key;
    const double r = mean(v);
    out.cells.push_back({scenario, roster[idx].group.id, g, r, v.size()});
    overall[{scenario, g}].push_back(r);
  }
  for (const auto& [key, v] : overall) out.overall.push_back({key.first, "", key.second, mean(v), v.size()});
  return out;
}

struct BasketLine {
  std::string food_id;
  std::string name;
  FoodGroup group = FoodGroup::kOther;
  double grams_base = 0.0;
  double grams_fort = 0.0;
  double cost_base = 0.0;  // PPP/day
  double cost_fort = 0.0;
};

struct BasketBreakdown {
  std::vector<BasketLine> lines;
  double total_base = 0.0;
  double total_fort = 0.0;
};

// Per-item daily cost under both runs for one (country, subgroup, scenario).
inline BasketBreakdown basket_cost_breakdown(const DietSolution& base, const DietSolution& fort) {
  BasketBreakdown out;
  auto line_for = [&](const DietItem& it) -> BasketLine& {
    for (auto& l : out.lines) {
      if (l.food_id == it.food_id) return l;
    }
    out.lines.push_back({it.food_id, it.name, it.group});
    return out.lines.back();
  };
  for (const auto& it : base.items) {
    BasketLine& l = line_for(it);
    l.grams_base = it.grams_per_day;
    l.cost_base = it.cost_ppp_per_day;
    out.total_base += it.cost_ppp_per_day;
  }
  for (const auto& it : fort.items) {
    BasketLine& l = line_for(it);
    l.grams_fort = it.grams_per_day;
    l.cost_fort = it.cost_ppp_per_day;
    out.total_fort += it.cost_ppp_per_day;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Country-level aggregates

struct CountryScenarioRow {
  std::string country;
  std::string region;
  ScenarioKind scenario = ScenarioKind::kCoNA;
  double median_pct_change = 0.0;
  double median_cost_base = 0.0;
  double intensity_mg_per_kg = 0.0;
  std::size_t n_policies = 0;  // selected (vehicle, nutrient) standards
  std::size_t n_subgroups = 0;
};

// Medians across subgroups per (country, scenario), records with a defined
// change only.
inline std::vector<CountryScenarioRow> country_level_medians(const Dataset& data, std::span<const DeltaRecord> records,
                                                             bool include_voluntary = true) {
  std::map<std::pair<std::string, ScenarioKind>, std::pair<std::vector<double>, std::vector<double>>> acc;
  for (const auto& r : records) {
    if (!r.pct_change) continue;
    auto& [pct, cost] = acc[{r.country, r.scenario}];
    pct.push_back(*r.pct_change);
    cost.push_back(*r.cost_base);
  }
  std::vector<CountryScenarioRow> out;
  for (const auto& [key, v] : acc) {
    const auto sel = data.selected_standards(key.first, include_voluntary);
    out.push_back({key.first, data.region_of(key.first), key.second, median(v.first), median(v.second),
                   policy_intensity(sel), sel.size(), v.first.size()});
  }
  return out;
}

struct RegionCostRow {
  std::string region;  // "World" for the pooled row
  ScenarioKind scenario = ScenarioKind::kCoNA;
  double median_base = 0.0, min_base = 0.0, max_base = 0.0;
  double median_fort = 0.0, min_fort = 0.0, max_fort = 0.0;
  std::size_t n = 0;
};

// Median/min/max diet cost per region and scenario, with and without
// fortification, over cells where both runs are optimal.
inline std::vector<RegionCostRow> region_cost_table(std::span<const DeltaRecord> records) {
  std::map<std::pair<std::string, ScenarioKind>, std::pair<std::vector<double>, std::vector<double>>> acc;
  for (const auto& r : records) {
    if (!r.cost_base || !r.cost_fort) continue;
    for (const std::string& region : {r.region, std::string("World")}) {
      auto& [b, f] = acc[{region, r.scenario}];
      b.push_back(*r.cost_base);
      f.push_back(*r.cost_fort);
    }
  }
  std::vector<RegionCostRow> out;
  auto push = [&](const std::pair<std::string, ScenarioKind>& key,
                  const std::pair<std::vector<double>, std::vector<double>>& v) {
    const auto [bmin, bmax] = std::minmax_element(v.first.begin(), v.first.end());
    const auto [fmin, fmax] = std::minmax_element(v.second.begin(), v.second.end());
    out.push_back({key.first, key.second, median(v.first), *bmin, *bmax, median(v.second), *fmin, *fmax,
                   v.first.size()});
  };
  for (const auto& [key, v] : acc) {
    if (key.first != "World") push(key, v);
  }
  for (const auto& [key, v] : acc) {
    if (key.first == "World") push(key, v);
  }
  return out;
}

}  // namespace lsff

#endif  // LSFF_ANALYSIS_HPP
