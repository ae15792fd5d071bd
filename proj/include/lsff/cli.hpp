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

#ifndef LSFF_CLI_HPP
#define LSFF_CLI_HPP

// Command-line driver. Exit codes: 0 success, 1 input validation failure,
// 2 usage or runtime error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lsff/analysis.hpp"
#include "lsff/io.hpp"
#include "lsff/regression.hpp"
#include "lsff/svg.hpp"
#include "lsff/tables.hpp"

namespace lsff::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitError = 2;

// Errors reported with exit code 2.
class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::optional<std::string> data_dir;
  std::string out_dir = "out";
  bool strict = false;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::optional<long> seed;
};

struct PipelineOptions {
  double rate = 0.9;
  double bread_share = 0.75;
  bool exclude_voluntary = false;
  std::string scenarios = "all";
};

inline std::vector<ScenarioKind> parse_scenarios(const std::string& s) {
  if (s == "all") return {kScenarios.begin(), kScenarios.end()};
  std::vector<ScenarioKind> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto k = parse_scenario(part);
    if (!k) throw CliError("unknown scenario '" + part + "'");
    if (std::find(out.begin(), out.end(), *k) == out.end()) out.push_back(*k);
  }
  if (out.empty()) throw CliError("no scenarios selected");
  std::sort(out.begin(), out.end());
  return out;
}

inline BatchOptions batch_options(const GlobalOptions& g, const PipelineOptions& p) {
  BatchOptions o;
  o.threads = g.threads;
  o.fortify.implementation_rate = p.rate;
  o.fortify.bread_flour_share = p.bread_share;
  o.fortify.include_voluntary = !p.exclude_voluntary;
  if (auto v = validate_fortify_spec(o.fortify); !v.empty()) throw CliError(v.front());
  return o;
}

// Writes output files and remembers their names.
class OutputDir {
 public:
  explicit OutputDir(std::filesystem::path dir) : dir_(std::move(dir)) {}

  void write(const std::string& name, const std::string& content) {
    std::filesystem::create_directories(dir_);
    std::ofstream os(dir_ / name, std::ios::binary);
    if (!os) throw CliError("cannot write " + (dir_ / name).string());
    os << content;
    written_.push_back(name);
  }

  void write(const std::string& name, const Table& t) {
    std::ostringstream os;
    write_table(os, t);
    write(name, os.str());
  }

  const std::vector<std::string>& written() const { return written_; }
  const std::filesystem::path& path() const { return dir_; }

 private:
  std::filesystem::path dir_;
  std::vector<std::string> written_;
};

inline std::string join_lines(const std::vector<std::string>& lines) {
  std::string s;
  for (const auto& l : lines) s += l + "\n";
  return s;
}

// Loads and validates; prints issues to `err`. Returns nullopt on errors.
inline std::optional<Dataset> load_checked(const GlobalOptions& g, std::ostream& err, LoadResult* keep = nullptr) {
  const auto dir = resolve_data_dir(g.data_dir);
  if (!dir) throw CliError("no data directory: pass --data or set " + std::string(kDataDirEnv));
  LoadResult r = load_dataset(*dir, LoadOptions{g.strict});
  for (const auto& i : r.report.issues) err << i.describe() << '\n';
  if (keep != nullptr) *keep = r;
  if (!r.report.ok()) return std::nullopt;
  return std::move(r.dataset);
}

// ---------------------------------------------------------------------------
// solve

inline nlohmann::json solution_json(const DietSolution& s, bool fortified) {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& it : s.items) {
    items.push_back({{"item_id", it.food_id},
                     {"name", it.name},
                     {"group", std::string(to_string(it.group))},
                     {"grams_g_day", it.grams_per_day},
                     {"cost_ppp_day", it.cost_ppp_per_day},
                     {"energy_kcal_day", it.kcal_per_day}});
  }
  nlohmann::json nutrients = nlohmann::json::object();
  nlohmann::json groups = nlohmann::json::object();
  if (s.optimal()) {
    for (const auto& n : kNutrients) nutrients[unit_column(n.id) + "_day"] = s.nutrient_totals[index(n.id)];
    for (const auto& [g, kcal] : s.group_energy) groups[std::string(to_string(g))] = kcal;
  }
  nlohmann::json j = {{"country", s.country},
                      {"subgroup", s.subgroup_id},
                      {"scenario", std::string(to_string(s.scenario))},
                      {"fortified", fortified},
                      {"status", lp::to_string(s.status)},
                      {"iterations_count", s.iterations},
                      {"items", items},
                      {"nutrient_totals", nutrients},
                      {"group_energy_kcal_day", groups},
                      {"warnings", s.warnings}};
  if (s.optimal()) j["cost_ppp_day"] = s.cost_ppp_per_day;
  else j["cost_ppp_day"] = nullptr;
  if (!s.error.empty()) j["error"] = s.error;
  return j;
}

inline int cmd_solve(const GlobalOptions& g, const PipelineOptions& p, const std::string& country,
                     const std::string& subgroup, const std::string& scenario, bool fortified, std::ostream& out,
                     std::ostream& err) {
  const auto data = load_checked(g, err);
  if (!data) return kExitInvalid;
  if (data->foods.count(country) == 0) throw CliError("unknown country '" + country + "'");
  const auto kind = parse_scenario(scenario);
  if (!kind) throw CliError("unknown scenario '" + scenario + "'");
  const RequirementSet* rs = nullptr;
  for (const auto& r : data->requirements) {
    if (r.group.id == subgroup) rs = &r;
  }
  if (rs == nullptr) throw CliError("unknown subgroup '" + subgroup + "'");
  const auto opts = batch_options(g, p);
  std::vector<FoodItem> foods = data->foods_of(country);
  if (fortified) {
    foods = apply_fortification(foods, data->selected_standards(country, opts.fortify.include_voluntary),
                                premix_for_country(data->premix, country), opts.fortify);
  }
  const DietSolution s = solve_diet(foods, *rs, data->scenario_for(country, *kind), opts.solver);
  out << solution_json(s, fortified).dump(2) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// regression over country-level medians

struct RegressionOutput {
  Table input, coefficients, curve;
  std::string svg;
};

inline std::vector<double> band_grid(const RegressionFit& fit, std::size_t n = 41) {
  std::vector<double> grid;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n - 1);
    if (fit.options.log10_x) {
      const double a = std::log10(fit.x_min), b = std::log10(fit.x_max);
      grid.push_back(std::pow(10.0, a + t * (b - a)));
    } else {
      grid.push_back(fit.x_min + t * (fit.x_max - fit.x_min));
    }
  }
  return grid;
}

// Intensity models use only countries with at least one selected standard.
inline RegressionOutput run_regression(const Dataset& data, std::span<const DeltaRecord> records, Predictor p,
                                       const RegressionOptions& ropts, bool include_voluntary) {
  std::vector<CountryScenarioRow> rows;
  for (const auto& r : country_level_medians(data, records, include_voluntary)) {
    if (p == Predictor::kIntensity && r.n_policies == 0) continue;
    rows.push_back(r);
  }
  RegressionOutput out;
  out.input = regression_input_table(p, rows);
  std::vector<double> y, x;
  std::vector<std::string> region, model;
  for (const auto& r : rows) {
    y.push_back(r.median_pct_change);
    x.push_back(p == Predictor::kIntensity ? r.intensity_mg_per_kg : r.median_cost_base);
    region.push_back(r.region);
    model.emplace_back(to_string(r.scenario));
  }
  const RegressionFit fit = fit_quadratic_fe(y, x, region, model, ropts);
  out.coefficients = coefficient_table(p, fit);
  const auto band = predict_with_band(fit, band_grid(fit), fit.reference_region, fit.reference_model);
  out.curve = curve_table(p, fit.reference_region, fit.reference_model, band);

  std::vector<svg::Point> points;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const auto it = std::find(fit.models.begin(), fit.models.end(), model[i]);
    points.push_back({x[i], y[i], static_cast<std::size_t>(it - fit.models.begin())});
  }
  std::vector<svg::CurvePoint> curve;
  for (const auto& b : band) curve.push_back({b.x, b.fit, b.lower, b.upper});
  const std::string x_label =
      p == Predictor::kIntensity ? "policy intensity (mg/kg)" : "baseline diet cost (PPP/day)";
  out.svg = svg::band_chart("Country median cost change vs " + std::string(to_string(p)) + " (" +
                                fit.reference_region + ", " + fit.reference_model + ")",
                            points, fit.models, curve, x_label, "median change (%)", ropts.log10_x);
  return out;
}

inline void write_regression(OutputDir& dir, const std::string& prefix, const RegressionOutput& r) {
  dir.write(prefix + "_input.csv", r.input);
  dir.write(prefix + "_coefficients.csv", r.coefficients);
  dir.write(prefix + "_curve.csv", r.curve);
  dir.write(prefix + ".svg", r.svg);
}

// ---------------------------------------------------------------------------
// report

namespace detail {

inline std::vector<std::string> scenario_names(std::span<const ScenarioKind> scenarios) {
  std::vector<std::string> out;
  for (auto s : scenarios) out.emplace_back(to_string(s));
  return out;
}

// Median of per-subgroup medians for each (factor, scenario).
inline std::string decomposition_svg(const std::string& title, const Decomposition& d,
                                     std::span<const ScenarioKind> scenarios) {
  std::vector<std::string> factors;
  for (const auto& m : d.medians) {
    if (std::find(factors.begin(), factors.end(), m.factor) == factors.end()) factors.push_back(m.factor);
  }
  std::vector<std::vector<double>> values(scenarios.size(),
                                          std::vector<double>(factors.size(), std::numeric_limits<double>::quiet_NaN()));
  for (std::size_t s = 0; s < scenarios.size(); ++s) {
    for (std::size_t f = 0; f < factors.size(); ++f) {
      std::vector<double> v;
      for (const auto& m : d.medians) {
        if (m.factor == factors[f] && m.scenario == scenarios[s]) v.push_back(m.median_pct);
      }
      if (!v.empty()) values[s][f] = median(v);
    }
  }
  return svg::bar_chart(title, factors, scenario_names(scenarios), values, "median change (%)");
}

// Youngest non-pregnant, non-lactating female subgroup.
inline const RequirementSet* youngest_female(const Dataset& data) {
  const RequirementSet* best = nullptr;
  for (const auto& rs : data.requirements) {
    if (rs.group.sex != Sex::kFemale || rs.group.status != PhysiologicalStatus::kNone) continue;
    if (best == nullptr || rs.group.age_min < best->group.age_min) best = &rs;
  }
  return best;
}

}  // namespace detail

struct ReportOptions {
  NonzeroSubset subset = NonzeroSubset::kPerRecord;
  double zero_epsilon = 1e-9;
  double item_threshold_pct = 3.0;
};

// Batch, both decompositions, both regressions and every figure table.
inline void run_report(const Dataset& data, const BatchOptions& opts, std::span<const ScenarioKind> scenarios,
                       const ReportOptions& ropts, OutputDir& dir) {
  std::vector<std::string> log;
  const auto baselines = solve_baselines(data, scenarios, opts);
  const BatchResult batch = run_batch(data, scenarios, opts, &baselines);
  for (const auto& l : batch.log) log.push_back("batch: " + l);
  dir.write("deltas.csv", delta_table(batch.records));

  // Classification shares and medians.
  Grouping by_scenario{.scenario = true};
  Grouping by_subgroup{.scenario = true, .subgroup = true};
  Grouping by_region{.scenario = true, .region = true};
  const auto s1 = summarize(batch.records, by_scenario, ropts.zero_epsilon, ropts.subset);
  const auto s2 = summarize(batch.records, by_subgroup, ropts.zero_epsilon, ropts.subset);
  const auto s3 = summarize(batch.records, by_region, ropts.zero_epsilon, ropts.subset);
  for (const auto* s : {&s1, &s2, &s3}) {
    for (const auto& w : s->warnings) log.push_back("summary: " + w);
  }
  dir.write("summary_by_scenario.csv", summary_table(s1));
  dir.write("summary_by_subgroup.csv", summary_table(s2));
  dir.write("summary_by_region.csv", summary_table(s3));
  {
    std::vector<std::string> cats;
    std::vector<std::vector<double>> shares(3);
    for (const auto& st : s1.stats) {
      cats.push_back(st.key[0]);
      shares[0].push_back(100.0 * st.share_reduced);
      shares[1].push_back(100.0 * st.share_zero);
      shares[2].push_back(100.0 * st.share_increased);
    }
    dir.write("change_shares.svg", svg::bar_chart("Share of diets by direction of cost change", cats,
                                                {"reduced", "no change", "increased"}, shares, "share of diets (%)"));
    std::vector<std::string> groups;
    for (const auto& rs : data.requirements) groups.push_back(rs.group.id);
    std::vector<std::vector<double>> med(scenarios.size(),
                                         std::vector<double>(groups.size(), std::numeric_limits<double>::quiet_NaN()));
    for (const auto& st : s2.stats) {
      const auto si = std::find(scenarios.begin(), scenarios.end(), *parse_scenario(st.key[0])) - scenarios.begin();
      const auto gi = std::find(groups.begin(), groups.end(), st.key[1]) - groups.begin();
      if (st.median_nonzero) med[static_cast<std::size_t>(si)][static_cast<std::size_t>(gi)] = *st.median_nonzero;
    }
    dir.write("change_medians.svg", svg::bar_chart("Median non-zero cost change by subgroup", groups,
                                                 detail::scenario_names(scenarios), med, "median change (%)"));
  }

  // Item energy changes.
  const auto items = item_energy_changes(batch.base, batch.fort, data.hdb, data.requirements, ropts.item_threshold_pct);
  for (const auto& w : items.warnings) log.push_back("item energy: " + w);
  dir.write("item_energy_display.csv", item_energy_table(items.display));
  dir.write("item_energy_full.csv", item_energy_table(items.full));
  {
    std::vector<std::string> names;
    for (const auto& r : items.display) {
      if (std::find(names.begin(), names.end(), r.item) == names.end()) names.push_back(r.item);
    }
    std::sort(names.begin(), names.end());
    std::vector<std::vector<double>> v(scenarios.size(),
                                       std::vector<double>(names.size(), std::numeric_limits<double>::quiet_NaN()));
    for (std::size_t s = 0; s < scenarios.size(); ++s) {
      for (std::size_t i = 0; i < names.size(); ++i) {
        std::vector<double> m;
        for (const auto& r : items.display) {
          if (r.scenario == scenarios[s] && r.item == names[i]) m.push_back(r.mean_change_pct);
        }
        if (!m.empty()) v[s][i] = mean(m);
      }
    }
    dir.write("item_energy.svg", svg::bar_chart("Change in item energy (share of reference intake)", names,
                                                     detail::scenario_names(scenarios), v, "change (%)"));
  }

  // Decompositions sharing the baseline solves.
  const auto by_vehicle = decompose_by_vehicle(data, scenarios, opts, &baselines);
  dir.write("vehicle_medians.csv", decomposition_median_table(by_vehicle, "vehicle"));
  dir.write("vehicle_medians.svg", detail::decomposition_svg("Cost change by fortified vehicle", by_vehicle, scenarios));
  const auto by_nutrient = decompose_by_nutrient(data, scenarios, opts, &baselines);
  dir.write("nutrient_medians.csv", decomposition_median_table(by_nutrient, "nutrient"));
  dir.write("nutrient_medians.svg",
            detail::decomposition_svg("Cost change by fortified nutrient", by_nutrient, scenarios));

  // Regressions on country-level medians.
  for (Predictor p : {Predictor::kIntensity, Predictor::kBaseline}) {
    try {
      write_regression(dir, "regression_" + std::string(to_string(p)),
                       run_regression(data, batch.records, p, RegressionOptions{}, opts.fortify.include_voluntary));
    } catch (const std::exception& e) {
      log.push_back("regression " + std::string(to_string(p)) + ": " + e.what());
    }
  }

  // Group energy ratios for both runs.
  {
    const auto base = group_energy_ratios(batch.base, data.hdb, data.requirements);
    const auto fort = group_energy_ratios(batch.fort, data.hdb, data.requirements);
    for (const auto& w : base.warnings) log.push_back("group ratios: " + w);
    dir.write("group_energy_ratios.csv", group_ratio_table(fort, "fort", group_ratio_table(base, "base")));
    std::vector<std::string> cats;
    std::vector<FoodGroup> groups;
    for (FoodGroup g : kReportGroups) {
      if (data.hdb.target(g) > 0.0) groups.push_back(g), cats.emplace_back(to_string(g));
    }
    std::vector<std::vector<double>> v(scenarios.size(),
                                       std::vector<double>(groups.size(), std::numeric_limits<double>::quiet_NaN()));
    for (const auto& r : base.overall) {
      const auto si = std::find(scenarios.begin(), scenarios.end(), r.scenario) - scenarios.begin();
      const auto gi = std::find(groups.begin(), groups.end(), r.group) - groups.begin();
      v[static_cast<std::size_t>(si)][static_cast<std::size_t>(gi)] = r.ratio;
    }
    dir.write("group_energy_ratios.svg", svg::bar_chart("Food group energy relative to reference intake", cats,
                                                       detail::scenario_names(scenarios), v, "ratio"));
  }

  // Country medians.
  {
    const auto rows = country_level_medians(data, batch.records, opts.fortify.include_voluntary);
    dir.write("country_medians.csv", country_table(rows));
    std::vector<svg::Box> boxes;
    for (auto s : scenarios) {
      std::vector<double> v;
      for (const auto& r : rows) {
        if (r.scenario == s) v.push_back(r.median_pct_change);
      }
      if (v.empty()) continue;
      const auto q = quartiles(v);
      boxes.push_back({std::string(to_string(s)), q.q25, q.median, q.q75});
    }
    dir.write("country_medians.svg",
              svg::box_chart("Country median cost change", boxes, "median change (%)"));
  }

  // Item costs for the youngest female subgroup under CoNA-SUA.
  {
    Table t{basket_header(), {}};
    std::vector<std::string> countries;
    std::vector<std::vector<double>> totals(2);
    const RequirementSet* rs = detail::youngest_female(data);
    const bool have_sua = std::find(scenarios.begin(), scenarios.end(), ScenarioKind::kCoNA_SUA) != scenarios.end();
    if (rs != nullptr && have_sua) {
      for (std::size_t i = 0; i < batch.records.size(); ++i) {
        const auto& r = batch.records[i];
        if (r.subgroup_id != rs->group.id || r.scenario != ScenarioKind::kCoNA_SUA) continue;
        if (!batch.base[i].optimal() || !batch.fort[i].optimal()) {
          log.push_back("basket: " + r.country + " skipped, not optimal");
          continue;
        }
        const auto b = basket_cost_breakdown(batch.base[i], batch.fort[i]);
        add_basket_rows(t, batch.base[i], b);
        countries.push_back(r.country);
        totals[0].push_back(b.total_base);
        totals[1].push_back(b.total_fort);
      }
    } else {
      log.push_back("basket: no eligible subgroup or CoNA-SUA not run");
    }
    dir.write("basket_breakdown.csv", t);
    dir.write("basket_breakdown.svg", svg::bar_chart("Daily diet cost, CoNA-SUA, " + (rs ? rs->group.id : std::string()),
                                                 countries, {"baseline", "fortified"}, totals, "cost (PPP/day)"));
  }

  dir.write("region_costs.csv", region_table(region_cost_table(batch.records)));
  dir.write("report_log.txt", join_lines(log));
}

// ---------------------------------------------------------------------------
// entry point

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Least-cost diets under large-scale food fortification", "lsff"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  long seed_value = 0;
  app.add_option("--data", g.data_dir, "Dataset directory (default: $" + std::string(kDataDirEnv) + ")");
  app.add_option("--out", g.out_dir, "Output directory")->capture_default_str();
  app.add_flag("--strict", g.strict, "Treat validation warnings as errors");
  app.add_option("--threads", g.threads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  auto* seed = app.add_option("--seed", seed_value, "Reserved; the pipeline is deterministic");

  PipelineOptions p;
  auto add_pipeline = [&](CLI::App* c) {
    c->add_option("--rate", p.rate, "Implementation rate in [0, 1]")->capture_default_str();
    c->add_option("--bread-share", p.bread_share, "Flour share of bread in [0, 1]")->capture_default_str();
    c->add_flag("--exclude-voluntary", p.exclude_voluntary, "Ignore voluntary standards");
  };

  auto* validate = app.add_subcommand("validate", "Load the dataset and report issues");

  auto* solve = app.add_subcommand("solve", "Solve one least-cost diet and print it as JSON");
  std::string country, subgroup, scenario;
  bool fortified = false;
  solve->add_option("--country", country)->required();
  solve->add_option("--subgroup", subgroup)->required();
  solve->add_option("--scenario", scenario)->required();
  solve->add_flag("--fortified", fortified, "Apply fortification before solving");
  add_pipeline(solve);

  auto* batch = app.add_subcommand("batch", "Baseline and fortified costs for every cell");
  batch->add_option("--scenarios", p.scenarios, "'all' or a comma-separated list")->capture_default_str();
  add_pipeline(batch);

  auto* decompose = app.add_subcommand("decompose", "One batch per vehicle or per nutrient");
  std::string by;
  decompose->add_option("--by", by)->required()->check(CLI::IsMember({"vehicle", "nutrient"}));
  decompose->add_option("--scenarios", p.scenarios, "'all' or a comma-separated list")->capture_default_str();
  add_pipeline(decompose);

  auto* regress = app.add_subcommand("regress", "Quadratic fixed-effects model of country median changes");
  std::string x_name;
  bool log_x = false, no_quadratic = false;
  regress->add_option("--x", x_name)->required()->check(CLI::IsMember({"intensity", "baseline"}));
  regress->add_flag("--log-x", log_x, "Use log10 of the predictor");
  regress->add_flag("--no-quadratic", no_quadratic, "Drop the squared term");
  add_pipeline(regress);

  auto* report = app.add_subcommand("report", "All result tables and plots");
  std::string subset = "record";
  report->add_option("--nonzero-subset", subset, "Non-zero subset: record or country-scenario")
      ->capture_default_str()
      ->check(CLI::IsMember({"record", "country-scenario"}));
  add_pipeline(report);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitError;
  }

  try {
    if (seed->count() > 0) throw CliError("--seed is reserved: the pipeline is deterministic and takes no seed");
    if (validate->parsed()) {
      LoadResult r;
      load_checked(g, err, &r);
      for (const auto& [file, n] : r.rows) out << file << ": " << n << " rows\n";
      out << r.report.errors() << " error(s), " << r.report.warnings() << " warning(s)\n";
      return r.report.ok() ? kExitOk : kExitInvalid;
    }
    if (solve->parsed()) return cmd_solve(g, p, country, subgroup, scenario, fortified, out, err);

    const auto data = load_checked(g, err);
    if (!data) return kExitInvalid;
    const auto opts = batch_options(g, p);
    OutputDir dir(g.out_dir);
    const auto scenarios = parse_scenarios(p.scenarios);
    if (batch->parsed()) {
      const auto r = run_batch(*data, scenarios, opts);
      dir.write("deltas.csv", delta_table(r.records));
      dir.write("batch_log.txt", join_lines(r.log));
      out << r.records.size() << " records, " << r.log.size() << " infeasible or failed cell(s)\n";
    } else if (decompose->parsed()) {
      const auto d = by == "vehicle" ? decompose_by_vehicle(*data, scenarios, opts)
                                     : decompose_by_nutrient(*data, scenarios, opts);
      dir.write("decompose_" + by + "_records.csv", decomposition_records_table(d, by));
      dir.write("decompose_" + by + "_medians.csv", decomposition_median_table(d, by));
      out << d.runs.size() << " " << by << " run(s), " << d.medians.size() << " median row(s)\n";
    } else if (regress->parsed()) {
      const Predictor pred = *parse_predictor(x_name);
      RegressionOptions ro;
      ro.quadratic = !no_quadratic;
      ro.log10_x = log_x;
      const auto r = run_batch(*data, scenarios, opts);
      write_regression(dir, "regress_" + x_name, run_regression(*data, r.records, pred, ro, !p.exclude_voluntary));
    } else if (report->parsed()) {
      ReportOptions ro;
      ro.subset = subset == "record" ? NonzeroSubset::kPerRecord : NonzeroSubset::kPerCountryScenario;
      run_report(*data, opts, scenarios, ro, dir);
    }
    for (const auto& f : dir.written()) out << "wrote " << (dir.path() / f).string() << '\n';
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace lsff::cli

#endif  // LSFF_CLI_HPP
